#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ambig/ambiguity.hpp"
#include "ambig/axiom_report.hpp"
#include "ambig/interval.hpp"
#include "ambig/set_valued_map.hpp"
#include "ambig/sweep.hpp"

namespace ambig {

// Total function from situation index to atom index.
class PointMap {
 public:
  PointMap() = default;
  explicit PointMap(std::vector<std::size_t> atom_of) : atom_of_(std::move(atom_of)) {}

  std::size_t size() const { return atom_of_.size(); }
  std::size_t operator[](std::size_t situation) const { return atom_of_[situation]; }
  const std::vector<std::size_t>& atoms() const { return atom_of_; }

  bool operator==(const PointMap&) const = default;

 private:
  std::vector<std::size_t> atom_of_;
};

// i1 i(∅)=∅, i2 i(Θ)=Ω, i3 union preservation, i4 ¬i(A)=i(¬A); i3'
// (intersection preservation) is derived.
AxiomReport check_incidence_axioms(const SetValuedMap& map, const SweepOptions& opts = {});

// An incidence mapping together with the point map it is the preimage map of.
class IncidenceMap {
 public:
  const SetValuedMap& map() const { return i_; }
  const PointMap& origin() const { return origin_; }
  const Frame& frame() const { return i_.frame(); }
  const SituationSpace& space() const { return i_.space(); }
  SitSet operator[](PropSet a) const { return i_[a]; }

  bool operator==(const IncidenceMap&) const = default;

 private:
  friend IncidenceMap incidence_from_pointmap(const PointMap&, const Frame&,
                                              const SituationSpace&);
  IncidenceMap(SetValuedMap i, PointMap origin)
      : i_(std::move(i)), origin_(std::move(origin)) {}

  SetValuedMap i_;
  PointMap origin_;
};

// i(A) = {ω | g(ω) ∈ A}. Throws MaskOutOfRange if g does not fit the frame
// and space.
IncidenceMap incidence_from_pointmap(const PointMap& g, const Frame& frame,
                                     const SituationSpace& space);

// Admits a raw map as an incidence mapping: it must pass the incidence axioms,
// and its singleton images then partition Ω and determine the point map.
// Throws IncidenceAxiomViolation.
IncidenceMap admit_incidence(const SetValuedMap& map, const SweepOptions& opts = {});

// Picks the representative atom of each focal element when an assignment is
// collapsed to an incidence mapping.
class Selector {
 public:
  enum class Mode { MinIndex, Seeded, Explicit };

  // Smallest atom index in the focal element.
  static Selector min_index() { return Selector(Mode::MinIndex, 0, {}); }
  // Uniform atom of the focal element, drawn from a stream keyed by
  // (seed, focal bitmask).
  static Selector seeded(std::uint64_t seed) { return Selector(Mode::Seeded, seed, {}); }
  // Throws SelectorDomainError if some entry chooses an atom outside its key.
  static Selector explicit_table(std::map<PropSet, std::size_t> table);

  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const std::map<PropSet, std::size_t>& table() const { return table_; }

  // Atom representing `focal`. Throws SelectorDomainError when an explicit
  // table has no entry for it.
  std::size_t choose(PropSet focal) const;

 private:
  Selector(Mode mode, std::uint64_t seed, std::map<PropSet, std::size_t> table)
      : mode_(mode), seed_(seed), table_(std::move(table)) {}

  Mode mode_;
  std::uint64_t seed_;
  std::map<PropSet, std::size_t> table_;
};

// Maps every ω ∈ j(B) to the selector's atom of B; the resulting incidence
// mapping lies between the lower and upper maps generated by j.
IncidenceMap select_incidence(const BasicAssignment& j, const Selector& sel);

// "sandwich-lower" lower(A) ⊆ i(A) and "sandwich-upper" i(A) ⊆ upper(A).
// Throws FrameMismatch.
AxiomReport check_sandwich(const IntervalStructure& s, const SetValuedMap& i);
AxiomReport check_sandwich(const IntervalStructure& s, const IncidenceMap& i);

// "compatibility": a(A) ∪ a(B) ⊆ i(A∪B) ∪ a(A∪B) for all A, B.
// Throws FrameMismatch.
AxiomReport check_compatibility(const SetValuedMap& i, const SetValuedMap& a,
                                const SweepOptions& opts = {});
AxiomReport check_compatibility(const IncidenceMap& i, const AmbiguityMap& a,
                                const SweepOptions& opts = {});

// "c1" upper(A) = i(A) ∪ a(A) and "c2" lower(A) = i(A) ∩ ¬a(A).
AxiomReport check_reconstruction(const IntervalStructure& s, const SetValuedMap& i,
                                 const SetValuedMap& a);

struct Decomposition {
  IncidenceMap incidence;
  AmbiguityMap ambiguity;
};

// Splits a structure into a compatible (incidence, ambiguity) pair. The
// ambiguity part does not depend on the selector.
Decomposition decompose_interval(const IntervalStructure& s,
                                 const Selector& sel = Selector::min_index());

// upper = i ∪ a, lower = i ∩ ¬a. Throws IncompatiblePair (with the smallest
// failing pair) or FrameMismatch.
IntervalStructure compose_interval(const IncidenceMap& i, const AmbiguityMap& a,
                                   const SweepOptions& opts = {});

}  // namespace ambig
