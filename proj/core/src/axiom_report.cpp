#include "ambig/axiom_report.hpp"

#include <algorithm>

namespace ambig {

void AxiomReport::append(const AxiomReport& other) {
  verdicts_.insert(verdicts_.end(), other.verdicts_.begin(), other.verdicts_.end());
}

bool AxiomReport::all_pass() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(),
                     [](const AxiomVerdict& v) { return v.pass; });
}

const AxiomVerdict* AxiomReport::find(std::string_view axiom) const {
  for (const auto& v : verdicts_) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

bool AxiomReport::passes(std::string_view axiom) const {
  const AxiomVerdict* v = find(axiom);
  return v != nullptr && v->pass;
}

const AxiomVerdict* AxiomReport::first_failure() const {
  for (const auto& v : verdicts_) {
    if (!v.pass) return &v;
  }
  return nullptr;
}

std::vector<std::string> AxiomReport::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts_) {
    if (!v.pass) out.push_back(v.axiom);
  }
  return out;
}

std::string AxiomReport::render() const {
  std::string out;
  for (const auto& v : verdicts_) {
    out += v.axiom;
    if (v.pass) {
      out += " ✓";
    } else {
      out += " ✗";
      if (v.witness) out += " witness: " + v.witness->detail;
    }
    if (!v.exhaustive) out += " (sampled)";
    out += '\n';
  }
  return out;
}

}  // namespace ambig
