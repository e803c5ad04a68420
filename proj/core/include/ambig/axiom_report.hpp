#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambig/frames.hpp"

namespace ambig {

// The subsets at which an axiom failed and a rendered account of the
// offending values.
struct Witness {
  std::vector<PropSet> subsets;
  std::string detail;

  bool operator==(const Witness&) const = default;
};

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  // Implied by the other axioms of the same report; checked as a consistency
  // assertion.
  bool derived = false;
  // False when the pairwise sweep sampled instead of enumerating.
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
};

class AxiomReport {
 public:
  AxiomReport() = default;
  explicit AxiomReport(std::vector<AxiomVerdict> verdicts)
      : verdicts_(std::move(verdicts)) {}

  void add(AxiomVerdict v) { verdicts_.push_back(std::move(v)); }
  void append(const AxiomReport& other);

  const std::vector<AxiomVerdict>& verdicts() const { return verdicts_; }
  bool all_pass() const;
  const AxiomVerdict* find(std::string_view axiom) const;
  bool passes(std::string_view axiom) const;
  // First failing verdict in report order, or nullptr.
  const AxiomVerdict* first_failure() const;
  std::vector<std::string> failed_axioms() const;

  // One line per axiom: "name ✓" or "name ✗ witness: ...".
  std::string render() const;

 private:
  std::vector<AxiomVerdict> verdicts_;
};

}  // namespace ambig
