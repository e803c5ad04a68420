#pragma once

#include <vector>

#include "ambig/axiom_report.hpp"
#include "ambig/set_valued_map.hpp"
#include "ambig/sweep.hpp"

namespace ambig {

// result(A) = ¬map(¬A). An involution; turns an upper mapping into its lower
// mapping and back.
SetValuedMap dual_map(const SetValuedMap& map);

// fbar1 upper(∅)=∅, fbar2 upper(Θ)=Ω, fbar3 union preservation; fbar4
// (upper(A∩B) ⊆ upper(A)∩upper(B)) is derived.
AxiomReport check_upper_axioms(const SetValuedMap& map, const SweepOptions& opts = {});

// f1 lower(∅)=∅, f2 lower(Θ)=Ω, f3 intersection preservation; f4
// (lower(A)∪lower(B) ⊆ lower(A∪B)) is derived.
AxiomReport check_lower_axioms(const SetValuedMap& map, const SweepOptions& opts = {});

// "duality": lower(A) = ¬upper(¬A) for every A.
AxiomReport check_duality(const SetValuedMap& lower, const SetValuedMap& upper);

// Everything an interval structure must satisfy: the upper and lower axioms,
// duality and lower ⊆ upper ("sandwich"). Throws FrameMismatch.
AxiomReport check_interval_pair(const SetValuedMap& lower, const SetValuedMap& upper,
                                const SweepOptions& opts = {});

// A validated (lower, upper) pair.
class IntervalStructure {
 public:
  const SetValuedMap& lower() const { return lower_; }
  const SetValuedMap& upper() const { return upper_; }
  const Frame& frame() const { return upper_.frame(); }
  const SituationSpace& space() const { return upper_.space(); }

  bool operator==(const IntervalStructure&) const = default;

 private:
  friend IntervalStructure make_interval_structure(SetValuedMap, SetValuedMap,
                                                   const SweepOptions&);
  IntervalStructure(SetValuedMap lower, SetValuedMap upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {}

  SetValuedMap lower_;
  SetValuedMap upper_;
};

// Throws FrameMismatch, UpperAxiomViolation (checked first) or
// DualityViolation.
IntervalStructure make_interval_structure(SetValuedMap lower, SetValuedMap upper,
                                          const SweepOptions& opts = {});

// Structure whose lower mapping is the dual of `upper`.
IntervalStructure interval_from_upper(SetValuedMap upper, const SweepOptions& opts = {});

// j1 j(∅)=∅, j2 the images cover Ω, j3 distinct propositions have disjoint
// images. j3 is decided exactly for every frame size.
AxiomReport check_assignment(const SetValuedMap& j);

// A set-valued map satisfying j1–j3: the qualitative counterpart of a mass
// function.
class BasicAssignment {
 public:
  // Throws AssignmentAxiomViolation naming the first failed axiom.
  explicit BasicAssignment(SetValuedMap j);

  const SetValuedMap& map() const { return j_; }
  const Frame& frame() const { return j_.frame(); }
  const SituationSpace& space() const { return j_.space(); }
  SitSet operator[](PropSet b) const { return j_[b]; }

  // Propositions with a non-empty image, in ascending bitmask order.
  std::vector<PropSet> focal_elements() const;

  bool operator==(const BasicAssignment&) const = default;

 private:
  SetValuedMap j_;
};

// f(A) = ⋃_{B⊆A} j(B). Computed over submasks without assuming j is valid.
SetValuedMap lower_from_assignment(const SetValuedMap& j);
// f̄(A) = ⋃_{B∩A≠∅} j(B), accumulated focal element by focal element.
SetValuedMap upper_from_assignment(const SetValuedMap& j);

// j(A) = f(A) − ⋃_{B⊂A} f(B).
BasicAssignment extract_assignment(const IntervalStructure& s);

// The structure generated by j. Both upper formulas are evaluated and must
// agree.
IntervalStructure structure_from_assignment(const BasicAssignment& j);
// Validates first; throws AssignmentAxiomViolation.
IntervalStructure structure_from_assignment(const SetValuedMap& j);

}  // namespace ambig
