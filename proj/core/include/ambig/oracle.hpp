#pragma once

// Brute-force re-evaluation of every axiom straight from the defining
// formulas. Shares no set algebra with the checkers it validates: sets are
// std::bitset values, complements are element loops, strict-subset unions
// enumerate all of 2^Θ, and every pairwise axiom visits all 4^m pairs.
// Verdict names and witness subsets match the main checkers so the two can be
// compared directly.

#include <optional>
#include <string>

#include "ambig/ambiguity.hpp"
#include "ambig/axiom_report.hpp"
#include "ambig/incidence.hpp"
#include "ambig/interval.hpp"
#include "ambig/set_valued_map.hpp"

namespace ambig::oracle {

AxiomReport verify_upper(const SetValuedMap& upper);
AxiomReport verify_lower(const SetValuedMap& lower);
AxiomReport verify_duality(const SetValuedMap& lower, const SetValuedMap& upper);
// Upper, lower, duality and sandwich; the counterpart of check_interval_pair.
AxiomReport verify_interval(const SetValuedMap& lower, const SetValuedMap& upper);
AxiomReport verify_assignment(const SetValuedMap& j);
AxiomReport verify_ambiguity(const SetValuedMap& a);
AxiomReport verify_incidence(const SetValuedMap& i);
AxiomReport verify_sandwich(const SetValuedMap& lower, const SetValuedMap& upper,
                            const SetValuedMap& i);
AxiomReport verify_compatibility(const SetValuedMap& i, const SetValuedMap& a);

// j(A) = f(A) − ⋃_{B⊂A} f(B), each strict subset found by scanning all of 2^Θ.
SetValuedMap naive_extract(const SetValuedMap& lower);
SetValuedMap naive_lower(const SetValuedMap& j);
SetValuedMap naive_upper(const SetValuedMap& j);

// Full verification of typed objects. For a structure this covers the
// interval axioms plus the extracted assignment.
AxiomReport oracle_verify(const IntervalStructure& s);
AxiomReport oracle_verify(const BasicAssignment& j);
AxiomReport oracle_verify(const AmbiguityMap& a);
AxiomReport oracle_verify(const IncidenceMap& i);

// Describes the first difference between two reports (axiom names, verdicts,
// witness subsets), or nullopt when they agree.
std::optional<std::string> disagreement(const AxiomReport& main, const AxiomReport& oracle);

}  // namespace ambig::oracle
