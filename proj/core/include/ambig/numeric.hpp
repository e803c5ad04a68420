#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ambig/axiom_report.hpp"
#include "ambig/interval.hpp"
#include "ambig/sweep.hpp"

namespace ambig {

// Arbitrary-precision rational, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or an integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Probability on the situations; P(S) is the induced sum over S.
class ProbabilityAssignment {
 public:
  // Throws ValidationError unless every weight is non-negative and the
  // weights sum to exactly 1.
  ProbabilityAssignment(SituationSpace space, std::vector<Rational> weights);

  static ProbabilityAssignment uniform(SituationSpace space);

  const SituationSpace& space() const { return space_; }
  const Rational& operator[](std::size_t situation) const { return p_[situation]; }
  const std::vector<Rational>& weights() const { return p_; }
  Rational measure(SitSet s) const;

  bool operator==(const ProbabilityAssignment&) const = default;

 private:
  SituationSpace space_;
  std::vector<Rational> p_;
};

// Basic probability assignment on 2^Θ; only focal elements (positive mass)
// are stored.
class MassFunction {
 public:
  // Zero entries are dropped. Throws EmptyMass when nothing positive remains,
  // ValidationError for negative masses, mass on ∅, or a total other than 1.
  MassFunction(Frame frame, const std::map<PropSet, Rational>& masses);

  const Frame& frame() const { return frame_; }
  const std::map<PropSet, Rational>& masses() const { return masses_; }
  Rational operator()(PropSet b) const;
  std::vector<PropSet> focal_elements() const;

  bool operator==(const MassFunction&) const = default;

 private:
  Frame frame_;
  std::map<PropSet, Rational> masses_;
};

// Bel, Pl and α = Pl − Bel over every proposition.
class BeliefReport {
 public:
  BeliefReport(Frame frame, std::vector<Rational> bel, std::vector<Rational> pl);

  const Frame& frame() const { return frame_; }
  const Rational& bel(PropSet a) const { return bel_[a.bits]; }
  const Rational& pl(PropSet a) const { return pl_[a.bits]; }
  const Rational& alpha(PropSet a) const { return alpha_[a.bits]; }

  // Both keep α = Pl − Bel.
  void set_bel(PropSet a, Rational value);
  void set_pl(PropSet a, Rational value);

  bool operator==(const BeliefReport&) const = default;

 private:
  Frame frame_;
  std::vector<Rational> bel_;
  std::vector<Rational> pl_;
  std::vector<Rational> alpha_;
};

// Bel(A) = P(lower(A)), Pl(A) = P(upper(A)), α(A) = P(a(A)).
// Throws SpaceMismatch.
BeliefReport belief_from_structure(const IntervalStructure& s, const ProbabilityAssignment& p);

// m(B) = P(j(B)) for the structure's basic assignment. Throws SpaceMismatch.
MassFunction mass_from_structure(const IntervalStructure& s, const ProbabilityAssignment& p);

// "bel-mass" Bel(A) = Σ_{B⊆A} m(B), "pl-dual" Pl(A) = 1 − Bel(¬A), exactly.
// Throws FrameMismatch.
AxiomReport check_belief_identity(const BeliefReport& report, const MassFunction& m);

// One situation per focal element, carrying its mass.
struct MassRealization {
  SituationSpace space;
  ProbabilityAssignment probability;
  BasicAssignment assignment;
  IntervalStructure structure;
};

// Situation for focal element B is named "w_" + subset key of B, ordered by
// ascending bitmask of B.
MassRealization structure_from_mass(const MassFunction& m);

// alpha1 α(∅)=0 and α ≥ 0, alpha2 α(¬A)=α(A), alpha3 submodularity;
// alpha-theta α(Θ)=0 is derived.
AxiomReport fishburn_report(const BeliefReport& report, const SweepOptions& opts = {});

}  // namespace ambig
