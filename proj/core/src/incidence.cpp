#include "ambig/incidence.hpp"

#include "ambig/error.hpp"
#include "ambig/random.hpp"
#include "checks.hpp"

namespace ambig {

using detail::pair_verdict;
using detail::point_verdict;
using detail::sits;
using detail::subset_verdict;

namespace {

std::string describe_failure(const AxiomVerdict& v) {
  std::string out = v.axiom + " fails";
  if (v.witness) out += " at " + v.witness->detail;
  return out;
}

// k-th set bit of mask, counting from the least significant.
std::size_t nth_atom(PropSet mask, std::uint64_t k) {
  std::uint32_t bits = mask.bits;
  for (; k > 0; --k) bits &= bits - 1;
  return static_cast<std::size_t>(std::countr_zero(bits));
}

}  // namespace

AxiomReport check_incidence_axioms(const SetValuedMap& i, const SweepOptions& opts) {
  const Frame& frame = i.frame();
  const SituationSpace& space = i.space();
  const PropSet full = frame.full();
  AxiomReport r;
  r.add(point_verdict("i1", frame, PropSet{}, i[PropSet{}].empty(),
                      "i(∅)=" + sits(i, i[PropSet{}])));
  r.add(point_verdict("i2", frame, full, i[full] == space.full(),
                      "i(Θ)=" + sits(i, i[full]) + " ≠ Ω"));
  r.add(pair_verdict(
      "i3", frame, opts, [&](PropSet a, PropSet b) { return i[a | b] == (i[a] | i[b]); },
      [&](PropSet a, PropSet b) {
        return "i(A∪B)=" + sits(i, i[a | b]) + " ≠ i(A)∪i(B)=" + sits(i, i[a] | i[b]);
      }));
  r.add(subset_verdict(
      "i4", frame,
      [&](PropSet a) { return space.complement(i[a]) == i[frame.complement(a)]; },
      [&](PropSet a) {
        return "¬i(A)=" + sits(i, space.complement(i[a])) + " ≠ i(¬A)=" +
               sits(i, i[frame.complement(a)]);
      }));
  r.add(pair_verdict(
      "i3'", frame, opts, [&](PropSet a, PropSet b) { return i[a & b] == (i[a] & i[b]); },
      [&](PropSet a, PropSet b) {
        return "i(A∩B)=" + sits(i, i[a & b]) + " ≠ i(A)∩i(B)=" + sits(i, i[a] & i[b]);
      },
      /*derived=*/true));
  return r;
}

IncidenceMap incidence_from_pointmap(const PointMap& g, const Frame& frame,
                                     const SituationSpace& space) {
  if (g.size() != space.size()) {
    throw MaskOutOfRange("point map covers " + std::to_string(g.size()) +
                         " situations, space has " + std::to_string(space.size()));
  }
  std::vector<SitSet> cells(frame.size());
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (g[w] >= frame.size()) {
      throw MaskOutOfRange("situation '" + space.name(w) + "' mapped to atom index " +
                           std::to_string(g[w]) + " outside the frame");
    }
    cells[g[w]] |= SitSet::singleton(w);
  }
  // i(A) = i(A without its lowest atom) ∪ cell(lowest atom).
  std::vector<SitSet> table(frame.subset_count());
  for (std::uint32_t a = 1; a < table.size(); ++a) {
    const std::uint32_t low = a & (~a + 1);
    table[a] = table[a ^ low] | cells[std::countr_zero(low)];
  }
  return IncidenceMap(SetValuedMap(frame, space, std::move(table)), g);
}

IncidenceMap admit_incidence(const SetValuedMap& map, const SweepOptions& opts) {
  AxiomReport r = check_incidence_axioms(map, opts);
  if (const AxiomVerdict* v = r.first_failure()) {
    throw IncidenceAxiomViolation(describe_failure(*v));
  }
  const Frame& frame = map.frame();
  const SituationSpace& space = map.space();
  std::vector<std::size_t> atom_of(space.size(), frame.size());
  for (std::size_t t = 0; t < frame.size(); ++t) {
    SitSet cell = map[PropSet::singleton(t)];
    for (std::size_t w = 0; w < space.size(); ++w) {
      if (!cell.contains(w)) continue;
      if (atom_of[w] != frame.size()) {
        throw IncidenceAxiomViolation("situation '" + space.name(w) +
                                      "' lies in two singleton images");
      }
      atom_of[w] = t;
    }
  }
  for (std::size_t w = 0; w < space.size(); ++w) {
    if (atom_of[w] == frame.size()) {
      throw IncidenceAxiomViolation("situation '" + space.name(w) +
                                    "' lies in no singleton image");
    }
  }
  IncidenceMap out = incidence_from_pointmap(PointMap(std::move(atom_of)), frame, space);
  if (!(out.map() == map)) {
    throw IncidenceAxiomViolation("map is not the preimage map of its singleton cells");
  }
  return out;
}

Selector Selector::explicit_table(std::map<PropSet, std::size_t> table) {
  for (const auto& [focal, atom] : table) {
    if (atom >= 32 || !focal.contains(atom)) {
      throw SelectorDomainError("selector chooses atom " + std::to_string(atom) +
                                " outside its focal element");
    }
  }
  return Selector(Mode::Explicit, 0, std::move(table));
}

std::size_t Selector::choose(PropSet focal) const {
  switch (mode_) {
    case Mode::MinIndex:
      return static_cast<std::size_t>(std::countr_zero(focal.bits));
    case Mode::Seeded: {
      Stream s = Stream(seed_).split(focal.bits);
      return nth_atom(focal, s.below(static_cast<std::uint64_t>(focal.count())));
    }
    case Mode::Explicit: {
      auto it = table_.find(focal);
      if (it == table_.end()) {
        throw SelectorDomainError("explicit selector has no entry for focal element " +
                                  std::to_string(focal.bits));
      }
      return it->second;
    }
  }
  throw InternalInvariantFailure("unknown selector mode");
}

IncidenceMap select_incidence(const BasicAssignment& j, const Selector& sel) {
  const Frame& frame = j.frame();
  const SituationSpace& space = j.space();
  std::vector<std::size_t> atom_of(space.size(), 0);
  for (PropSet focal : j.focal_elements()) {
    std::size_t atom;
    try {
      atom = sel.choose(focal);
    } catch (const SelectorDomainError&) {
      throw SelectorDomainError("explicit selector has no entry for focal element " +
                                format_subset(frame, focal));
    }
    if (!focal.contains(atom)) {
      throw SelectorDomainError("selector chose an atom outside " +
                                format_subset(frame, focal));
    }
    for (std::size_t w = 0; w < space.size(); ++w) {
      if (j[focal].contains(w)) atom_of[w] = atom;
    }
  }
  IncidenceMap i = incidence_from_pointmap(PointMap(std::move(atom_of)), frame, space);
  AxiomReport sandwich = check_sandwich(structure_from_assignment(j), i);
  if (const AxiomVerdict* v = sandwich.first_failure()) {
    throw InternalInvariantFailure("selected incidence: " + describe_failure(*v));
  }
  return i;
}

AxiomReport check_sandwich(const IntervalStructure& s, const SetValuedMap& i) {
  require_same_universe(s.upper(), i);
  const SetValuedMap& lower = s.lower();
  const SetValuedMap& upper = s.upper();
  AxiomReport r;
  r.add(subset_verdict(
      "sandwich-lower", s.frame(), [&](PropSet a) { return lower[a].subset_of(i[a]); },
      [&](PropSet a) {
        return "lower(A)=" + sits(i, lower[a]) + " ⊄ i(A)=" + sits(i, i[a]);
      }));
  r.add(subset_verdict(
      "sandwich-upper", s.frame(), [&](PropSet a) { return i[a].subset_of(upper[a]); },
      [&](PropSet a) {
        return "i(A)=" + sits(i, i[a]) + " ⊄ upper(A)=" + sits(i, upper[a]);
      }));
  return r;
}

AxiomReport check_sandwich(const IntervalStructure& s, const IncidenceMap& i) {
  return check_sandwich(s, i.map());
}

AxiomReport check_compatibility(const SetValuedMap& i, const SetValuedMap& a,
                                const SweepOptions& opts) {
  require_same_universe(i, a);
  AxiomReport r;
  r.add(pair_verdict(
      "compatibility", i.frame(), opts,
      [&](PropSet p, PropSet q) { return (a[p] | a[q]).subset_of(i[p | q] | a[p | q]); },
      [&](PropSet p, PropSet q) {
        return "a(A)∪a(B)=" + sits(a, a[p] | a[q]) + " ⊄ i(A∪B)∪a(A∪B)=" +
               sits(a, i[p | q] | a[p | q]);
      }));
  return r;
}

AxiomReport check_compatibility(const IncidenceMap& i, const AmbiguityMap& a,
                                const SweepOptions& opts) {
  return check_compatibility(i.map(), a.map(), opts);
}

AxiomReport check_reconstruction(const IntervalStructure& s, const SetValuedMap& i,
                                 const SetValuedMap& a) {
  require_same_universe(s.upper(), i);
  require_same_universe(i, a);
  const SetValuedMap& lower = s.lower();
  const SetValuedMap& upper = s.upper();
  AxiomReport r;
  r.add(subset_verdict(
      "c1", s.frame(), [&](PropSet p) { return upper[p] == (i[p] | a[p]); },
      [&](PropSet p) {
        return "upper(A)=" + sits(i, upper[p]) + " ≠ i(A)∪a(A)=" + sits(i, i[p] | a[p]);
      }));
  r.add(subset_verdict(
      "c2", s.frame(), [&](PropSet p) { return lower[p] == (i[p] - a[p]); },
      [&](PropSet p) {
        return "lower(A)=" + sits(i, lower[p]) + " ≠ i(A)∩¬a(A)=" + sits(i, i[p] - a[p]);
      }));
  return r;
}

Decomposition decompose_interval(const IntervalStructure& s, const Selector& sel) {
  IncidenceMap i = select_incidence(extract_assignment(s), sel);
  AmbiguityMap a = ambiguity_from_interval(s);
  AxiomReport checks = check_compatibility(i, a);
  checks.append(check_reconstruction(s, i.map(), a.map()));
  if (const AxiomVerdict* v = checks.first_failure()) {
    throw InternalInvariantFailure("decomposition: " + describe_failure(*v));
  }
  return Decomposition{std::move(i), std::move(a)};
}

IntervalStructure compose_interval(const IncidenceMap& i, const AmbiguityMap& a,
                                   const SweepOptions& opts) {
  AxiomReport compat = check_compatibility(i, a, opts);
  if (const AxiomVerdict* v = compat.first_failure()) {
    throw IncompatiblePair(describe_failure(*v));
  }
  std::vector<SitSet> upper(i.map().subset_count());
  std::vector<SitSet> lower(i.map().subset_count());
  for (std::uint32_t p = 0; p < upper.size(); ++p) {
    upper[p] = i[PropSet(p)] | a[PropSet(p)];
    lower[p] = i[PropSet(p)] - a[PropSet(p)];
  }
  try {
    return make_interval_structure(SetValuedMap(i.frame(), i.space(), std::move(lower)),
                                   SetValuedMap(i.frame(), i.space(), std::move(upper)),
                                   opts);
  } catch (const ValidationError& e) {
    throw InternalInvariantFailure(std::string("composed structure: ") + e.what());
  }
}

}  // namespace ambig
