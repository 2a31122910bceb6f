#include <iostream>

#include "cliquemin/cli.hpp"

int main(int argc, char** argv) { return cliquemin::cli_main(argc, argv, std::cout, std::cerr); }
