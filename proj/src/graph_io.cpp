#include "cliquemin/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cliquemin/errors.hpp"

namespace cliquemin {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 record truncated", pos);
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
  return c - kBias;
}

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  // Trailing line terminators are not part of the record.
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
  std::string_view rec = text.substr(0, end);

  std::uint64_t n = 0;
  if (pos >= rec.size()) throw ParseError("empty graph6 record", pos);
  if (rec[pos] != '~') {
    n = static_cast<std::uint64_t>(sextet(rec, pos));
    pos += 1;
  } else if (pos + 1 < rec.size() && rec[pos + 1] != '~') {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(rec, pos + static_cast<std::size_t>(k)));
    if (n <= 62) throw ParseError("non-canonical graph6 size field", pos);
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(rec, pos + static_cast<std::size_t>(k)));
    if (n <= 258047) throw ParseError("non-canonical graph6 size field", pos);
    pos += 8;
  }
  if (n == 0) throw ParseError("graph6 order must be at least 1", pos - 1);
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6 order too large for this reader", pos - 1);

  const std::uint64_t bit_count = n * (n - 1) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (rec.size() - pos < byte_count) throw ParseError("graph6 record truncated", rec.size());
  if (rec.size() - pos > byte_count) throw ParseError("trailing bytes after graph6 record", pos + byte_count);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(rec, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(k / 6);
    const int byte = sextet(rec, last);
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", last);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

LoadedGraph parse_edge_list(std::string_view text) {
  struct Line {
    std::size_t offset;
    std::vector<std::string_view> tokens;
  };
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) lines.push_back({start, std::move(tokens)});
    start = stop + 1;
  }
  if (lines.empty()) throw ParseError("edge list is empty", 0);

  long n = 0;
  long m = 0;
  const auto& header = lines.front();
  if (header.tokens.size() != 2 || !parse_int(header.tokens[0], n) || !parse_int(header.tokens[1], m)) {
    throw ParseError("edge list header must be \"n m\"", header.offset);
  }
  if (n < 1 || m < 0) throw ParseError("edge list header has invalid counts", header.offset);
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string(lines.size() - 1),
                     lines.size() > 1 ? lines.back().offset : header.offset);
  }

  bool dense = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) throw ParseError("edge line must hold exactly two vertices", lines[i].offset);
    for (auto tok : lines[i].tokens) {
      long v = 0;
      if (!parse_int(tok, v) || v < 0 || v >= n) dense = false;
    }
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  if (dense) {
    for (long v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  auto resolve = [&](std::string_view tok, std::size_t offset) -> Vertex {
    if (dense) {
      long v = 0;
      parse_int(tok, v);
      return static_cast<Vertex>(v);
    }
    auto [it, inserted] = index.emplace(std::string(tok), static_cast<Vertex>(labels.size()));
    if (inserted) {
      if (static_cast<long>(labels.size()) >= n) {
        throw ParseError("more distinct vertex identifiers than the declared order " + std::to_string(n), offset);
      }
      labels.emplace_back(tok);
    }
    return it->second;
  };

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Vertex u = resolve(lines[i].tokens[0], lines[i].offset);
    Vertex v = resolve(lines[i].tokens[1], lines[i].offset);
    if (u == v) throw ParseError("self-loop in edge list", lines[i].offset);
    edges.emplace_back(u, v);
  }
  for (long v = static_cast<long>(labels.size()); v < n; ++v) labels.push_back("#" + std::to_string(v));
  return {Graph::from_edges(static_cast<int>(n), edges), std::move(labels)};
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

LoadedGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t eol = text.find('\n', first);
  auto tokens = split_ws(std::string_view(text).substr(first, eol == std::string::npos ? std::string::npos : eol - first));
  long a = 0;
  long b = 0;
  if (tokens.size() == 2 && parse_int(tokens[0], a) && parse_int(tokens[1], b)) return parse_edge_list(text);

  std::string_view record(text);
  record = record.substr(first, eol == std::string::npos ? std::string::npos : eol - first);
  Graph g = parse_graph6(record);
  std::vector<std::string> labels;
  for (int v = 0; v < g.order(); ++v) labels.push_back(std::to_string(v));
  return {std::move(g), std::move(labels)};
}

}  // namespace cliquemin
