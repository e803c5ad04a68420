#include "ambig/interval.hpp"

#include "ambig/error.hpp"
#include "checks.hpp"

namespace ambig {

using detail::pair_verdict;
using detail::point_verdict;
using detail::sits;
using detail::subset_verdict;

SetValuedMap dual_map(const SetValuedMap& map) {
  const Frame& frame = map.frame();
  const SituationSpace& space = map.space();
  std::vector<SitSet> table(map.subset_count());
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    table[a] = space.complement(map[frame.complement(PropSet(a))]);
  }
  return SetValuedMap(frame, space, std::move(table));
}

AxiomReport check_upper_axioms(const SetValuedMap& u, const SweepOptions& opts) {
  const Frame& frame = u.frame();
  const PropSet full = frame.full();
  AxiomReport r;
  r.add(point_verdict("fbar1", frame, PropSet{}, u[PropSet{}].empty(),
                      "upper(∅)=" + sits(u, u[PropSet{}])));
  r.add(point_verdict("fbar2", frame, full, u[full] == u.space().full(),
                      "upper(Θ)=" + sits(u, u[full]) + " ≠ Ω"));
  r.add(pair_verdict(
      "fbar3", frame, opts,
      [&](PropSet a, PropSet b) { return u[a | b] == (u[a] | u[b]); },
      [&](PropSet a, PropSet b) {
        return "upper(A∪B)=" + sits(u, u[a | b]) + " ≠ upper(A)∪upper(B)=" +
               sits(u, u[a] | u[b]);
      }));
  r.add(pair_verdict(
      "fbar4", frame, opts,
      [&](PropSet a, PropSet b) { return u[a & b].subset_of(u[a] & u[b]); },
      [&](PropSet a, PropSet b) {
        return "upper(A∩B)=" + sits(u, u[a & b]) + " ⊄ upper(A)∩upper(B)=" +
               sits(u, u[a] & u[b]);
      },
      /*derived=*/true));
  return r;
}

AxiomReport check_lower_axioms(const SetValuedMap& l, const SweepOptions& opts) {
  const Frame& frame = l.frame();
  const PropSet full = frame.full();
  AxiomReport r;
  r.add(point_verdict("f1", frame, PropSet{}, l[PropSet{}].empty(),
                      "lower(∅)=" + sits(l, l[PropSet{}])));
  r.add(point_verdict("f2", frame, full, l[full] == l.space().full(),
                      "lower(Θ)=" + sits(l, l[full]) + " ≠ Ω"));
  r.add(pair_verdict(
      "f3", frame, opts,
      [&](PropSet a, PropSet b) { return l[a & b] == (l[a] & l[b]); },
      [&](PropSet a, PropSet b) {
        return "lower(A∩B)=" + sits(l, l[a & b]) + " ≠ lower(A)∩lower(B)=" +
               sits(l, l[a] & l[b]);
      }));
  r.add(pair_verdict(
      "f4", frame, opts,
      [&](PropSet a, PropSet b) { return (l[a] | l[b]).subset_of(l[a | b]); },
      [&](PropSet a, PropSet b) {
        return "lower(A)∪lower(B)=" + sits(l, l[a] | l[b]) + " ⊄ lower(A∪B)=" +
               sits(l, l[a | b]);
      },
      /*derived=*/true));
  return r;
}

AxiomReport check_duality(const SetValuedMap& lower, const SetValuedMap& upper) {
  require_same_universe(lower, upper);
  const Frame& frame = upper.frame();
  const SituationSpace& space = upper.space();
  AxiomReport r;
  r.add(subset_verdict(
      "duality", frame,
      [&](PropSet a) { return lower[a] == space.complement(upper[frame.complement(a)]); },
      [&](PropSet a) {
        return "lower(A)=" + sits(lower, lower[a]) + " ≠ ¬upper(¬A)=" +
               sits(upper, space.complement(upper[frame.complement(a)]));
      }));
  return r;
}

AxiomReport check_interval_pair(const SetValuedMap& lower, const SetValuedMap& upper,
                                const SweepOptions& opts) {
  require_same_universe(lower, upper);
  AxiomReport r = check_upper_axioms(upper, opts);
  r.append(check_lower_axioms(lower, opts));
  r.append(check_duality(lower, upper));
  r.add(subset_verdict(
      "sandwich", upper.frame(), [&](PropSet a) { return lower[a].subset_of(upper[a]); },
      [&](PropSet a) {
        return "lower(A)=" + sits(lower, lower[a]) + " ⊄ upper(A)=" + sits(upper, upper[a]);
      },
      /*derived=*/true));
  return r;
}

namespace {

std::string describe_failure(const AxiomVerdict& v) {
  std::string out = v.axiom + " fails";
  if (v.witness) out += " at " + v.witness->detail;
  return out;
}

}  // namespace

IntervalStructure make_interval_structure(SetValuedMap lower, SetValuedMap upper,
                                          const SweepOptions& opts) {
  require_same_universe(lower, upper);
  AxiomReport up = check_upper_axioms(upper, opts);
  for (const char* axiom : {"fbar1", "fbar2", "fbar3"}) {
    if (!up.passes(axiom)) throw UpperAxiomViolation(describe_failure(*up.find(axiom)));
  }
  AxiomReport dual = check_duality(lower, upper);
  if (!dual.all_pass()) throw DualityViolation(describe_failure(*dual.first_failure()));

  AxiomReport all = check_interval_pair(lower, upper, opts);
  if (const AxiomVerdict* v = all.first_failure()) {
    throw InternalInvariantFailure("derived interval axiom " + describe_failure(*v));
  }
  return IntervalStructure(std::move(lower), std::move(upper));
}

IntervalStructure interval_from_upper(SetValuedMap upper, const SweepOptions& opts) {
  SetValuedMap lower = dual_map(upper);
  return make_interval_structure(std::move(lower), std::move(upper), opts);
}

AxiomReport check_assignment(const SetValuedMap& j) {
  const Frame& frame = j.frame();
  const SituationSpace& space = j.space();
  AxiomReport r;
  r.add(point_verdict("j1", frame, PropSet{}, j[PropSet{}].empty(),
                      "j(∅)=" + sits(j, j[PropSet{}])));

  SitSet covered;
  for (SitSet s : j.table()) covered |= s;
  {
    AxiomVerdict v;
    v.axiom = "j2";
    v.cases = j.subset_count();
    if (covered != space.full()) {
      v.pass = false;
      v.witness = Witness{{}, "situations " + sits(j, space.complement(covered)) +
                                  " lie in no image"};
    }
    r.add(std::move(v));
  }

  // j3: the smallest overlapping pair (A, B), A ≠ B, in lexicographic order.
  // Each situation remembers the first two propositions whose image holds it.
  const std::size_t n = space.size();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> first(n, kNone);
  std::vector<std::uint32_t> second(n, kNone);
  for (std::uint32_t a = 0; a < j.subset_count(); ++a) {
    for (std::size_t w = 0; w < n; ++w) {
      if (!j[PropSet(a)].contains(w)) continue;
      if (first[w] == kNone) {
        first[w] = a;
      } else if (second[w] == kNone) {
        second[w] = a;
      }
    }
  }
  AxiomVerdict v;
  v.axiom = "j3";
  v.cases = std::uint64_t{j.subset_count()} * j.subset_count();
  std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
  for (std::size_t w = 0; w < n; ++w) {
    if (second[w] == kNone) continue;
    std::pair<std::uint32_t, std::uint32_t> cand{first[w], second[w]};
    if (!best || cand < *best) best = cand;
  }
  if (best) {
    PropSet a(best->first), b(best->second);
    v.pass = false;
    v.witness = Witness{{a, b}, detail::at_pair(frame, a, b) + ": j(A)∩j(B)=" +
                                    sits(j, j[a] & j[b]) + " ≠ ∅"};
  }
  r.add(std::move(v));
  return r;
}

BasicAssignment::BasicAssignment(SetValuedMap j) : j_(std::move(j)) {
  AxiomReport r = check_assignment(j_);
  if (const AxiomVerdict* v = r.first_failure()) {
    throw AssignmentAxiomViolation(describe_failure(*v));
  }
}

std::vector<PropSet> BasicAssignment::focal_elements() const {
  std::vector<PropSet> out;
  for (std::uint32_t b = 0; b < j_.subset_count(); ++b) {
    if (!j_[PropSet(b)].empty()) out.push_back(PropSet(b));
  }
  return out;
}

SetValuedMap lower_from_assignment(const SetValuedMap& j) {
  std::vector<SitSet> table(j.table().begin(), j.table().end());
  const std::size_t m = j.frame().size();
  for (std::size_t k = 0; k < m; ++k) {
    const std::uint32_t bit = std::uint32_t{1} << k;
    for (std::uint32_t a = 0; a < table.size(); ++a) {
      if (a & bit) table[a] |= table[a ^ bit];
    }
  }
  return SetValuedMap(j.frame(), j.space(), std::move(table));
}

SetValuedMap upper_from_assignment(const SetValuedMap& j) {
  std::vector<SitSet> table(j.subset_count());
  for (std::uint32_t b = 1; b < j.subset_count(); ++b) {
    const SitSet image = j[PropSet(b)];
    if (image.empty()) continue;
    for (std::uint32_t a = 1; a < table.size(); ++a) {
      if (a & b) table[a] |= image;
    }
  }
  return SetValuedMap(j.frame(), j.space(), std::move(table));
}

BasicAssignment extract_assignment(const IntervalStructure& s) {
  const SetValuedMap& f = s.lower();
  const std::size_t m = s.frame().size();
  // below[A] accumulates ⋃_{B⊆A} f(B); every strict subset of A lies under
  // some A∖{θ}, and those indices are smaller than A.
  std::vector<SitSet> below(f.subset_count());
  std::vector<SitSet> j(f.subset_count());
  below[0] = f[PropSet{}];
  j[0] = f[PropSet{}];
  for (std::uint32_t a = 1; a < f.subset_count(); ++a) {
    SitSet strict;
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint32_t bit = std::uint32_t{1} << k;
      if (a & bit) strict |= below[a ^ bit];
    }
    j[a] = f[PropSet(a)] - strict;
    below[a] = f[PropSet(a)] | strict;
  }
  SetValuedMap jm(s.frame(), s.space(), std::move(j));
  AxiomReport r = check_assignment(jm);
  if (const AxiomVerdict* v = r.first_failure()) {
    throw InternalInvariantFailure("extracted assignment: " + describe_failure(*v));
  }
  if (!(lower_from_assignment(jm) == f)) {
    throw InternalInvariantFailure("extracted assignment does not reconstruct the lower map");
  }
  return BasicAssignment(std::move(jm));
}

IntervalStructure structure_from_assignment(const BasicAssignment& j) {
  SetValuedMap lower = lower_from_assignment(j.map());
  SetValuedMap upper = dual_map(lower);
  if (!(upper == upper_from_assignment(j.map()))) {
    throw InternalInvariantFailure("¬f(¬A) and the union over intersecting focal "
                                   "elements disagree");
  }
  // Valid by construction; above the exhaustive threshold only the structured
  // pairs are re-checked.
  SweepOptions opts;
  opts.samples = 0;
  try {
    return make_interval_structure(std::move(lower), std::move(upper), opts);
  } catch (const ValidationError& e) {
    throw InternalInvariantFailure(std::string("structure built from a valid assignment: ") +
                                   e.what());
  }
}

IntervalStructure structure_from_assignment(const SetValuedMap& j) {
  return structure_from_assignment(BasicAssignment(j));
}

}  // namespace ambig
