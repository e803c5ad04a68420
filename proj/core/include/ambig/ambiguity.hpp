#pragma once

#include "ambig/axiom_report.hpp"
#include "ambig/interval.hpp"
#include "ambig/set_valued_map.hpp"
#include "ambig/sweep.hpp"

namespace ambig {

// a1 a(∅)=∅; a2 a(A)=a(¬A); a3.1 a(A∩B)∪a(A∪B) ⊆ a(A)∪a(B);
// a3.2 a(A∩B)∩a(A∪B) ⊆ a(A)∩a(B); a4 a(Θ)=∅ is derived.
// Accepts any map: the ambiguity axioms stand on their own.
AxiomReport check_ambiguity_axioms(const SetValuedMap& map, const SweepOptions& opts = {});

class AmbiguityMap {
 public:
  // Throws AmbiguityAxiomViolation.
  explicit AmbiguityMap(SetValuedMap a, const SweepOptions& opts = {});

  const SetValuedMap& map() const { return a_; }
  const Frame& frame() const { return a_.frame(); }
  const SituationSpace& space() const { return a_.space(); }
  SitSet operator[](PropSet p) const { return a_[p]; }

  bool operator==(const AmbiguityMap&) const = default;

 private:
  SetValuedMap a_;
};

// a(A) = upper(A) ∩ ¬lower(A): the situations where A is possibly but not
// definitely true.
AmbiguityMap ambiguity_from_interval(const IntervalStructure& s);

}  // namespace ambig
