#include "cliquemin/report.hpp"

#include <sstream>

namespace cliquemin {

void VerificationReport::set_sides(Rational l, Rational r) {
  lhs = std::move(l);
  rhs = std::move(r);
  slack = lhs - rhs;
  holds = slack >= 0;
  equality = slack == 0;
}

void VerificationReport::add_instance(const Rational& l, const Rational& r, const std::string& witness) {
  Rational s = l - r;
  if (instances == 0 || s < slack) {
    lhs = l;
    rhs = r;
    slack = s;
  }
  ++instances;
  if (s < 0) {
    ++violations;
    add_witness(witness);
  } else if (s == 0) {
    ++equalities;
  }
  holds = violations == 0;
  equality = instances > 0 && equalities == instances;
}

void VerificationReport::add_witness(std::string witness) {
  if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(witness));
}

void VerificationReport::summarize_parts() {
  holds = true;
  equality = !parts.empty();
  const VerificationReport* worst = nullptr;
  for (const auto& part : parts) {
    holds = holds && part.holds;
    equality = equality && part.equality;
    if (!worst || part.slack < worst->slack) worst = &part;
  }
  if (worst) {
    lhs = worst->lhs;
    rhs = worst->rhs;
    slack = worst->slack;
  }
}

bool VerificationReport::ok() const {
  if (!holds) return false;
  for (const auto& [name, value] : conditions)
    if (!value) return false;
  for (const auto& part : parts)
    if (!part.ok()) return false;
  return true;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["slack"] = to_string(r.slack);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["ok"] = r.ok();
  j["witnesses"] = r.witnesses;
  j["conditions"] = r.conditions;
  if (r.instances > 0) {
    j["instances"] = r.instances;
    j["violations"] = r.violations;
    j["equalities"] = r.equalities;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& part : r.parts) j["parts"].push_back(to_json(part));
  }
  return j;
}

std::string to_text(const VerificationReport& r, int indent) {
  std::ostringstream out;
  out << std::string(static_cast<std::size_t>(indent), ' ') << (r.ok() ? "PASS " : "FAIL ") << r.check_id;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << " lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs) << " slack=" << to_string(r.slack);
  if (r.equality) out << " equality";
  if (r.instances > 0) out << " instances=" << r.instances << " violations=" << r.violations;
  for (const auto& [name, value] : r.conditions)
    if (!value) out << " [failed: " << name << ']';
  for (const auto& w : r.witnesses) out << " witness={" << w << '}';
  out << '\n';
  for (const auto& part : r.parts) out << to_text(part, indent + 2);
  return out.str();
}

std::string clique_label(const std::vector<int>& vertices) {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vertices[i]);
  }
  return s;
}

}  // namespace cliquemin
