#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquemin/rational.hpp"

namespace cliquemin {

/// Outcome of one check, with both sides evaluated exactly.
///
/// Orientation is normalised so that slack = lhs - rhs >= 0 means the
/// inequality holds. A check that ranges over many cliques keeps the worst
/// instance's sides in lhs/rhs and counts the rest in instances/violations.
/// conditions holds named side conditions; each must be true for ok().
struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool holds = true;
  bool equality = false;
  std::map<std::string, bool> conditions;
  std::vector<std::string> witnesses;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::uint64_t equalities = 0;
  std::vector<std::string> notes;
  std::vector<VerificationReport> parts;

  static constexpr std::size_t kWitnessCap = 20;

  /// Sets lhs, rhs, slack, holds and equality from one evaluation.
  void set_sides(Rational l, Rational r);

  /// Folds one instance of a per-clique check into the report: counts it,
  /// keeps the sides of the smallest slack seen, records a witness on
  /// violation (up to kWitnessCap).
  void add_instance(const Rational& l, const Rational& r, const std::string& witness);

  void add_witness(std::string witness);
  /// For a report made of parts: holds when every part holds, sides taken
  /// from the part with the smallest slack.
  void summarize_parts();
  void require(const std::string& name, bool value) { conditions[name] = value; }
  void param(const std::string& key, std::string value) { params[key] = std::move(value); }
  void param(const std::string& key, long value) { params[key] = std::to_string(value); }

  /// holds, every condition true, and every part ok.
  bool ok() const;
};

/// Rationals are written as "p/q" strings (integers without "/1").
nlohmann::json to_json(const VerificationReport& report);

/// One line per report and part: "PASS|FAIL check_id slack=... [conditions]".
std::string to_text(const VerificationReport& report, int indent = 0);

std::string clique_label(const std::vector<int>& vertices);

}  // namespace cliquemin
