#pragma once

// Verdict builders shared by the axiom checkers.

#include <string>
#include <utility>

#include "ambig/axiom_report.hpp"
#include "ambig/set_valued_map.hpp"
#include "ambig/sweep.hpp"

namespace ambig::detail {

inline std::string at_subset(const Frame& f, PropSet a) {
  return "A=" + format_subset(f, a);
}

inline std::string at_pair(const Frame& f, PropSet a, PropSet b) {
  return "A=" + format_subset(f, a) + ", B=" + format_subset(f, b);
}

inline std::string sits(const SetValuedMap& m, SitSet s) {
  return format_subset(m.space(), s);
}

template <class Pred, class Describe>
AxiomVerdict pair_verdict(std::string name, const Frame& frame, const SweepOptions& opts,
                          Pred&& holds, Describe&& describe, bool derived = false) {
  PairSweep sweep = sweep_pairs(frame, opts, std::forward<Pred>(holds));
  AxiomVerdict v;
  v.axiom = std::move(name);
  v.derived = derived;
  v.exhaustive = sweep.exhaustive;
  v.cases = sweep.cases;
  if (sweep.failure) {
    auto [a, b] = *sweep.failure;
    v.pass = false;
    v.witness = Witness{{a, b}, at_pair(frame, a, b) + ": " + describe(a, b)};
  }
  return v;
}

template <class Pred, class Describe>
AxiomVerdict subset_verdict(std::string name, const Frame& frame, Pred&& holds,
                            Describe&& describe, bool derived = false) {
  SubsetSweep sweep = sweep_subsets(frame, std::forward<Pred>(holds));
  AxiomVerdict v;
  v.axiom = std::move(name);
  v.derived = derived;
  v.cases = sweep.cases;
  if (sweep.failure) {
    v.pass = false;
    v.witness = Witness{{*sweep.failure},
                        at_subset(frame, *sweep.failure) + ": " + describe(*sweep.failure)};
  }
  return v;
}

// Verdict for an axiom about a single fixed proposition.
inline AxiomVerdict point_verdict(std::string name, const Frame& frame, PropSet at,
                                  bool pass, const std::string& detail,
                                  bool derived = false) {
  AxiomVerdict v;
  v.axiom = std::move(name);
  v.derived = derived;
  v.cases = 1;
  v.pass = pass;
  if (!pass) v.witness = Witness{{at}, at_subset(frame, at) + ": " + detail};
  return v;
}

}  // namespace ambig::detail
