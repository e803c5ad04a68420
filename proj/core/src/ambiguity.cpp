#include "ambig/ambiguity.hpp"

#include "ambig/error.hpp"
#include "checks.hpp"

namespace ambig {

using detail::pair_verdict;
using detail::point_verdict;
using detail::sits;
using detail::subset_verdict;

AxiomReport check_ambiguity_axioms(const SetValuedMap& a, const SweepOptions& opts) {
  const Frame& frame = a.frame();
  const PropSet full = frame.full();
  AxiomReport r;
  r.add(point_verdict("a1", frame, PropSet{}, a[PropSet{}].empty(),
                      "a(∅)=" + sits(a, a[PropSet{}])));
  r.add(subset_verdict(
      "a2", frame, [&](PropSet p) { return a[p] == a[frame.complement(p)]; },
      [&](PropSet p) {
        return "a(A)=" + sits(a, a[p]) + " ≠ a(¬A)=" + sits(a, a[frame.complement(p)]);
      }));
  r.add(pair_verdict(
      "a3.1", frame, opts,
      [&](PropSet p, PropSet q) { return (a[p & q] | a[p | q]).subset_of(a[p] | a[q]); },
      [&](PropSet p, PropSet q) {
        return "a(A∩B)∪a(A∪B)=" + sits(a, a[p & q] | a[p | q]) + " ⊄ a(A)∪a(B)=" +
               sits(a, a[p] | a[q]);
      }));
  r.add(pair_verdict(
      "a3.2", frame, opts,
      [&](PropSet p, PropSet q) { return (a[p & q] & a[p | q]).subset_of(a[p] & a[q]); },
      [&](PropSet p, PropSet q) {
        return "a(A∩B)∩a(A∪B)=" + sits(a, a[p & q] & a[p | q]) + " ⊄ a(A)∩a(B)=" +
               sits(a, a[p] & a[q]);
      }));
  r.add(point_verdict("a4", frame, full, a[full].empty(), "a(Θ)=" + sits(a, a[full]),
                      /*derived=*/true));
  return r;
}

AmbiguityMap::AmbiguityMap(SetValuedMap a, const SweepOptions& opts) : a_(std::move(a)) {
  AxiomReport r = check_ambiguity_axioms(a_, opts);
  if (const AxiomVerdict* v = r.first_failure()) {
    std::string msg = v->axiom + " fails";
    if (v->witness) msg += " at " + v->witness->detail;
    throw AmbiguityAxiomViolation(msg);
  }
}

AmbiguityMap ambiguity_from_interval(const IntervalStructure& s) {
  const SetValuedMap& lower = s.lower();
  const SetValuedMap& upper = s.upper();
  std::vector<SitSet> table(upper.subset_count());
  for (std::uint32_t p = 0; p < table.size(); ++p) {
    table[p] = upper[PropSet(p)] - lower[PropSet(p)];
  }
  SetValuedMap a(s.frame(), s.space(), std::move(table));
  try {
    return AmbiguityMap(std::move(a));
  } catch (const AmbiguityAxiomViolation& e) {
    throw InternalInvariantFailure(std::string("ambiguity of a valid structure: ") + e.what());
  }
}

}  // namespace ambig
