#include "ambig/numeric.hpp"

#include <cctype>
#include <stdexcept>

#include "ambig/ambiguity.hpp"
#include "ambig/error.hpp"
#include "checks.hpp"

namespace ambig {

using detail::pair_verdict;
using detail::point_verdict;
using detail::subset_verdict;

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, bool allow_sign) {
  std::size_t k = 0;
  bool negative = false;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    k = 1;
  }
  if (k == text.size()) throw std::invalid_argument("missing digits");
  boost::multiprecision::cpp_int v = 0;
  for (; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("invalid digit in '" + std::string(text) + "'");
    }
    v = v * 10 + (text[k] - '0');
  }
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  auto num = parse_integer(text.substr(0, slash), true);
  auto den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

ProbabilityAssignment::ProbabilityAssignment(SituationSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), p_(std::move(weights)) {
  if (p_.size() != space_.size()) {
    throw ValidationError("probability has " + std::to_string(p_.size()) +
                          " weights for " + std::to_string(space_.size()) + " situations");
  }
  Rational total = 0;
  for (std::size_t w = 0; w < p_.size(); ++w) {
    if (p_[w] < 0) {
      throw ValidationError("negative probability for '" + space_.name(w) + "'");
    }
    total += p_[w];
  }
  if (total != 1) {
    throw ValidationError("probabilities sum to " + to_string(total) + ", not 1");
  }
}

ProbabilityAssignment ProbabilityAssignment::uniform(SituationSpace space) {
  std::vector<Rational> w(space.size(), Rational(1, static_cast<long long>(space.size())));
  return ProbabilityAssignment(std::move(space), std::move(w));
}

Rational ProbabilityAssignment::measure(SitSet s) const {
  Rational total = 0;
  for (std::size_t w = 0; w < p_.size(); ++w) {
    if (s.contains(w)) total += p_[w];
  }
  return total;
}

MassFunction::MassFunction(Frame frame, const std::map<PropSet, Rational>& masses)
    : frame_(std::move(frame)) {
  Rational total = 0;
  for (const auto& [b, v] : masses) {
    if (!frame_.valid(b)) throw MaskOutOfRange("focal element outside the frame");
    if (v < 0) throw ValidationError("negative mass on " + format_subset(frame_, b));
    if (v == 0) continue;
    if (b.empty()) throw ValidationError("mass on the empty set must be 0");
    masses_.emplace(b, v);
    total += v;
  }
  if (masses_.empty()) throw EmptyMass("mass function has no focal element");
  if (total != 1) throw ValidationError("masses sum to " + to_string(total) + ", not 1");
}

Rational MassFunction::operator()(PropSet b) const {
  auto it = masses_.find(b);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<PropSet> MassFunction::focal_elements() const {
  std::vector<PropSet> out;
  for (const auto& entry : masses_) out.push_back(entry.first);
  return out;
}

BeliefReport::BeliefReport(Frame frame, std::vector<Rational> bel, std::vector<Rational> pl)
    : frame_(std::move(frame)), bel_(std::move(bel)), pl_(std::move(pl)) {
  if (bel_.size() != frame_.subset_count() || pl_.size() != frame_.subset_count()) {
    throw MaskOutOfRange("belief report must cover every proposition");
  }
  alpha_.resize(bel_.size());
  for (std::size_t a = 0; a < bel_.size(); ++a) alpha_[a] = pl_[a] - bel_[a];
}

void BeliefReport::set_bel(PropSet a, Rational value) {
  bel_.at(a.bits) = std::move(value);
  alpha_[a.bits] = pl_[a.bits] - bel_[a.bits];
}

void BeliefReport::set_pl(PropSet a, Rational value) {
  pl_.at(a.bits) = std::move(value);
  alpha_[a.bits] = pl_[a.bits] - bel_[a.bits];
}

namespace {

void require_space(const IntervalStructure& s, const ProbabilityAssignment& p) {
  if (!(s.space() == p.space())) {
    throw SpaceMismatch("probability is over a different situation space");
  }
}

}  // namespace

BeliefReport belief_from_structure(const IntervalStructure& s, const ProbabilityAssignment& p) {
  require_space(s, p);
  const std::size_t count = s.frame().subset_count();
  std::vector<Rational> bel(count), pl(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    bel[a] = p.measure(s.lower()[PropSet(a)]);
    pl[a] = p.measure(s.upper()[PropSet(a)]);
  }
  BeliefReport report(s.frame(), std::move(bel), std::move(pl));
  AmbiguityMap amb = ambiguity_from_interval(s);
  for (std::uint32_t a = 0; a < count; ++a) {
    if (report.alpha(PropSet(a)) != p.measure(amb[PropSet(a)])) {
      throw InternalInvariantFailure("Pl − Bel differs from P(a(A)) at " +
                                     format_subset(s.frame(), PropSet(a)));
    }
  }
  return report;
}

MassFunction mass_from_structure(const IntervalStructure& s, const ProbabilityAssignment& p) {
  require_space(s, p);
  BasicAssignment j = extract_assignment(s);
  std::map<PropSet, Rational> masses;
  for (PropSet b : j.focal_elements()) masses.emplace(b, p.measure(j[b]));
  return MassFunction(s.frame(), masses);
}

AxiomReport check_belief_identity(const BeliefReport& report, const MassFunction& m) {
  if (!(report.frame() == m.frame())) {
    throw FrameMismatch("belief report and mass function use different frames");
  }
  const Frame& frame = report.frame();
  auto mass_below = [&](PropSet a) {
    Rational total = 0;
    for (const auto& [b, v] : m.masses()) {
      if (b.subset_of(a)) total += v;
    }
    return total;
  };
  AxiomReport r;
  r.add(subset_verdict(
      "bel-mass", frame, [&](PropSet a) { return report.bel(a) == mass_below(a); },
      [&](PropSet a) {
        return "Bel(A)=" + to_string(report.bel(a)) + " ≠ Σ_{B⊆A} m(B)=" +
               to_string(mass_below(a));
      }));
  r.add(subset_verdict(
      "pl-dual", frame,
      [&](PropSet a) { return report.pl(a) == 1 - report.bel(frame.complement(a)); },
      [&](PropSet a) {
        return "Pl(A)=" + to_string(report.pl(a)) + " ≠ 1 − Bel(¬A)=" +
               to_string(Rational(1 - report.bel(frame.complement(a))));
      }));
  return r;
}

MassRealization structure_from_mass(const MassFunction& m) {
  const Frame& frame = m.frame();
  std::vector<PropSet> focal = m.focal_elements();
  if (focal.empty()) throw EmptyMass("mass function has no focal element");
  std::vector<std::string> names;
  std::vector<Rational> weights;
  for (PropSet b : focal) {
    names.push_back("w_" + subset_key(frame, b));
    weights.push_back(m(b));
  }
  SituationSpace space(std::move(names));
  SetValuedMap j(frame, space);
  for (std::size_t k = 0; k < focal.size(); ++k) j.set(focal[k], SitSet::singleton(k));
  BasicAssignment assignment(std::move(j));
  IntervalStructure structure = structure_from_assignment(assignment);
  ProbabilityAssignment probability(space, std::move(weights));
  return MassRealization{std::move(space), std::move(probability), std::move(assignment),
                         std::move(structure)};
}

AxiomReport fishburn_report(const BeliefReport& report, const SweepOptions& opts) {
  const Frame& frame = report.frame();
  auto alpha = [&](PropSet a) -> const Rational& { return report.alpha(a); };
  AxiomReport r;
  {
    AxiomVerdict v = subset_verdict(
        "alpha1", frame, [&](PropSet a) { return a.empty() ? alpha(a) == 0 : alpha(a) >= 0; },
        [&](PropSet a) { return "α(A)=" + to_string(alpha(a)); });
    r.add(std::move(v));
  }
  r.add(subset_verdict(
      "alpha2", frame, [&](PropSet a) { return alpha(frame.complement(a)) == alpha(a); },
      [&](PropSet a) {
        return "α(¬A)=" + to_string(alpha(frame.complement(a))) + " ≠ α(A)=" +
               to_string(alpha(a));
      }));
  r.add(pair_verdict(
      "alpha3", frame, opts,
      [&](PropSet a, PropSet b) { return alpha(a & b) + alpha(a | b) <= alpha(a) + alpha(b); },
      [&](PropSet a, PropSet b) {
        return "α(A∩B)+α(A∪B)=" + to_string(Rational(alpha(a & b) + alpha(a | b))) +
               " > α(A)+α(B)=" + to_string(Rational(alpha(a) + alpha(b)));
      }));
  r.add(point_verdict("alpha-theta", frame, frame.full(), alpha(frame.full()) == 0,
                      "α(Θ)=" + to_string(alpha(frame.full())), /*derived=*/true));
  return r;
}

}  // namespace ambig
