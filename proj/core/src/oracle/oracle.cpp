#include "ambig/oracle.hpp"

#include <bitset>
#include <cstddef>
#include <vector>

namespace ambig::oracle {

namespace {

using Sits = std::bitset<64>;
using Props = std::bitset<16>;

// Dense view of a map: one situation bitset per proposition index.
struct Table {
  std::size_t atoms = 0;
  std::size_t situations = 0;
  std::vector<Sits> cells;

  std::size_t props() const { return cells.size(); }
  const Sits& operator()(const Props& a) const { return cells[a.to_ulong()]; }
};

Table load(const SetValuedMap& map) {
  Table t;
  t.atoms = map.frame().size();
  t.situations = map.space().size();
  for (SitSet s : map.table()) t.cells.emplace_back(s.bits);
  return t;
}

SetValuedMap store(const SetValuedMap& like, const std::vector<Sits>& cells) {
  std::vector<SitSet> table;
  table.reserve(cells.size());
  for (const Sits& s : cells) table.emplace_back(s.to_ullong());
  return SetValuedMap(like.frame(), like.space(), std::move(table));
}

Props prop(std::size_t index) { return Props(index); }

Props prop_complement(const Props& a, std::size_t atoms) {
  Props out;
  for (std::size_t k = 0; k < atoms; ++k) out[k] = !a[k];
  return out;
}

Sits sit_complement(const Sits& s, std::size_t situations) {
  Sits out;
  for (std::size_t k = 0; k < situations; ++k) out[k] = !s[k];
  return out;
}

bool prop_within(const Props& a, const Props& b, std::size_t atoms) {
  for (std::size_t k = 0; k < atoms; ++k) {
    if (a[k] && !b[k]) return false;
  }
  return true;
}

bool sit_within(const Sits& a, const Sits& b, std::size_t situations) {
  for (std::size_t k = 0; k < situations; ++k) {
    if (a[k] && !b[k]) return false;
  }
  return true;
}

Sits full_sits(std::size_t situations) { return sit_complement(Sits(), situations); }

PropSet as_propset(const Props& a) {
  return PropSet(static_cast<std::uint32_t>(a.to_ulong()));
}

std::string names_of(const Universe& u, const std::vector<bool>& member) {
  std::string out;
  for (std::size_t k = 0; k < member.size(); ++k) {
    if (!member[k]) continue;
    if (!out.empty()) out += ',';
    out += u.name(k);
  }
  return "{" + out + "}";
}

std::string show(const Frame& f, const Props& a) {
  std::vector<bool> member(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) member[k] = a[k];
  return names_of(f, member);
}

AxiomVerdict verdict(std::string name, bool derived) {
  AxiomVerdict v;
  v.axiom = std::move(name);
  v.derived = derived;
  return v;
}

// Checks `holds` on every proposition; witness is the smallest failure.
template <class Pred>
AxiomVerdict every_subset(const Frame& frame, std::size_t count, std::string name,
                          Pred holds, bool derived = false) {
  AxiomVerdict v = verdict(std::move(name), derived);
  for (std::size_t a = 0; a < count; ++a) {
    ++v.cases;
    if (!holds(prop(a))) {
      v.pass = false;
      v.witness = Witness{{as_propset(prop(a))}, "A=" + show(frame, prop(a))};
      break;
    }
  }
  return v;
}

// Checks `holds` on every ordered pair; witness is the smallest failure.
template <class Pred>
AxiomVerdict every_pair(const Frame& frame, std::size_t count, std::string name,
                        Pred holds, bool derived = false) {
  AxiomVerdict v = verdict(std::move(name), derived);
  for (std::size_t a = 0; a < count && v.pass; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      ++v.cases;
      if (!holds(prop(a), prop(b))) {
        v.pass = false;
        v.witness = Witness{{as_propset(prop(a)), as_propset(prop(b))},
                            "A=" + show(frame, prop(a)) + ", B=" + show(frame, prop(b))};
        break;
      }
    }
  }
  return v;
}

AxiomVerdict at_point(const Frame& frame, std::string name, const Props& a, bool pass,
                      bool derived = false) {
  AxiomVerdict v = verdict(std::move(name), derived);
  v.cases = 1;
  v.pass = pass;
  if (!pass) v.witness = Witness{{as_propset(a)}, "A=" + show(frame, a)};
  return v;
}

Props all_atoms(std::size_t atoms) { return prop_complement(Props(), atoms); }

}  // namespace

AxiomReport verify_upper(const SetValuedMap& map) {
  const Table u = load(map);
  const Frame& frame = map.frame();
  const Props full = all_atoms(u.atoms);
  AxiomReport r;
  r.add(at_point(frame, "fbar1", Props(), u(Props()).none()));
  r.add(at_point(frame, "fbar2", full, u(full) == full_sits(u.situations)));
  r.add(every_pair(frame, u.props(), "fbar3", [&](const Props& a, const Props& b) {
    return u(a | b) == (u(a) | u(b));
  }));
  r.add(every_pair(
      frame, u.props(), "fbar4",
      [&](const Props& a, const Props& b) {
        return sit_within(u(a & b), u(a) & u(b), u.situations);
      },
      true));
  return r;
}

AxiomReport verify_lower(const SetValuedMap& map) {
  const Table l = load(map);
  const Frame& frame = map.frame();
  const Props full = all_atoms(l.atoms);
  AxiomReport r;
  r.add(at_point(frame, "f1", Props(), l(Props()).none()));
  r.add(at_point(frame, "f2", full, l(full) == full_sits(l.situations)));
  r.add(every_pair(frame, l.props(), "f3", [&](const Props& a, const Props& b) {
    return l(a & b) == (l(a) & l(b));
  }));
  r.add(every_pair(
      frame, l.props(), "f4",
      [&](const Props& a, const Props& b) {
        return sit_within(l(a) | l(b), l(a | b), l.situations);
      },
      true));
  return r;
}

AxiomReport verify_duality(const SetValuedMap& lower, const SetValuedMap& upper) {
  const Table l = load(lower);
  const Table u = load(upper);
  AxiomReport r;
  r.add(every_subset(upper.frame(), u.props(), "duality", [&](const Props& a) {
    return l(a) == sit_complement(u(prop_complement(a, u.atoms)), u.situations);
  }));
  return r;
}

AxiomReport verify_interval(const SetValuedMap& lower, const SetValuedMap& upper) {
  AxiomReport r = verify_upper(upper);
  r.append(verify_lower(lower));
  r.append(verify_duality(lower, upper));
  const Table l = load(lower);
  const Table u = load(upper);
  r.add(every_subset(
      upper.frame(), u.props(), "sandwich",
      [&](const Props& a) { return sit_within(l(a), u(a), u.situations); }, true));
  return r;
}

AxiomReport verify_assignment(const SetValuedMap& map) {
  const Table j = load(map);
  const Frame& frame = map.frame();
  AxiomReport r;
  r.add(at_point(frame, "j1", Props(), j(Props()).none()));
  {
    AxiomVerdict v = verdict("j2", false);
    Sits covered;
    for (std::size_t b = 0; b < j.props(); ++b) covered |= j(prop(b));
    v.cases = j.props();
    if (covered != full_sits(j.situations)) {
      v.pass = false;
      v.witness = Witness{{}, "uncovered situations"};
    }
    r.add(std::move(v));
  }
  r.add(every_pair(frame, j.props(), "j3", [&](const Props& a, const Props& b) {
    return a == b || (j(a) & j(b)).none();
  }));
  return r;
}

AxiomReport verify_ambiguity(const SetValuedMap& map) {
  const Table a = load(map);
  const Frame& frame = map.frame();
  const std::size_t n = a.situations;
  AxiomReport r;
  r.add(at_point(frame, "a1", Props(), a(Props()).none()));
  r.add(every_subset(frame, a.props(), "a2", [&](const Props& p) {
    return a(p) == a(prop_complement(p, a.atoms));
  }));
  r.add(every_pair(frame, a.props(), "a3.1", [&](const Props& p, const Props& q) {
    return sit_within(a(p & q) | a(p | q), a(p) | a(q), n);
  }));
  r.add(every_pair(frame, a.props(), "a3.2", [&](const Props& p, const Props& q) {
    return sit_within(a(p & q) & a(p | q), a(p) & a(q), n);
  }));
  const Props full = all_atoms(a.atoms);
  r.add(at_point(frame, "a4", full, a(full).none(), true));
  return r;
}

AxiomReport verify_incidence(const SetValuedMap& map) {
  const Table i = load(map);
  const Frame& frame = map.frame();
  const Props full = all_atoms(i.atoms);
  AxiomReport r;
  r.add(at_point(frame, "i1", Props(), i(Props()).none()));
  r.add(at_point(frame, "i2", full, i(full) == full_sits(i.situations)));
  r.add(every_pair(frame, i.props(), "i3", [&](const Props& a, const Props& b) {
    return i(a | b) == (i(a) | i(b));
  }));
  r.add(every_subset(frame, i.props(), "i4", [&](const Props& a) {
    return sit_complement(i(a), i.situations) == i(prop_complement(a, i.atoms));
  }));
  r.add(every_pair(
      frame, i.props(), "i3'",
      [&](const Props& a, const Props& b) { return i(a & b) == (i(a) & i(b)); }, true));
  return r;
}

AxiomReport verify_sandwich(const SetValuedMap& lower, const SetValuedMap& upper,
                            const SetValuedMap& inc) {
  const Table l = load(lower);
  const Table u = load(upper);
  const Table i = load(inc);
  AxiomReport r;
  r.add(every_subset(upper.frame(), u.props(), "sandwich-lower", [&](const Props& a) {
    return sit_within(l(a), i(a), u.situations);
  }));
  r.add(every_subset(upper.frame(), u.props(), "sandwich-upper", [&](const Props& a) {
    return sit_within(i(a), u(a), u.situations);
  }));
  return r;
}

AxiomReport verify_compatibility(const SetValuedMap& inc, const SetValuedMap& amb) {
  const Table i = load(inc);
  const Table a = load(amb);
  AxiomReport r;
  r.add(every_pair(inc.frame(), i.props(), "compatibility",
                   [&](const Props& p, const Props& q) {
                     return sit_within(a(p) | a(q), i(p | q) | a(p | q), i.situations);
                   }));
  return r;
}

SetValuedMap naive_extract(const SetValuedMap& lower) {
  const Table f = load(lower);
  std::vector<Sits> j(f.props());
  for (std::size_t a = 0; a < f.props(); ++a) {
    Sits strict;
    for (std::size_t b = 0; b < f.props(); ++b) {
      if (b != a && prop_within(prop(b), prop(a), f.atoms)) strict |= f(prop(b));
    }
    j[a] = f(prop(a)) & sit_complement(strict, f.situations);
  }
  return store(lower, j);
}

SetValuedMap naive_lower(const SetValuedMap& assignment) {
  const Table j = load(assignment);
  std::vector<Sits> f(j.props());
  for (std::size_t a = 0; a < j.props(); ++a) {
    for (std::size_t b = 0; b < j.props(); ++b) {
      if (prop_within(prop(b), prop(a), j.atoms)) f[a] |= j(prop(b));
    }
  }
  return store(assignment, f);
}

SetValuedMap naive_upper(const SetValuedMap& assignment) {
  const Table j = load(assignment);
  std::vector<Sits> u(j.props());
  for (std::size_t a = 0; a < j.props(); ++a) {
    for (std::size_t b = 0; b < j.props(); ++b) {
      if ((prop(a) & prop(b)).any()) u[a] |= j(prop(b));
    }
  }
  return store(assignment, u);
}

AxiomReport oracle_verify(const IntervalStructure& s) {
  AxiomReport r = verify_interval(s.lower(), s.upper());
  SetValuedMap j = naive_extract(s.lower());
  r.append(verify_assignment(j));
  AxiomVerdict v = verdict("reconstruction", true);
  v.cases = s.frame().subset_count();
  if (!(naive_lower(j) == s.lower())) {
    v.pass = false;
    v.witness = Witness{{}, "⋃_{B⊆A} j(B) differs from lower(A)"};
  }
  r.add(std::move(v));
  return r;
}

AxiomReport oracle_verify(const BasicAssignment& j) { return verify_assignment(j.map()); }
AxiomReport oracle_verify(const AmbiguityMap& a) { return verify_ambiguity(a.map()); }
AxiomReport oracle_verify(const IncidenceMap& i) { return verify_incidence(i.map()); }

std::optional<std::string> disagreement(const AxiomReport& main, const AxiomReport& oracle) {
  const auto& mv = main.verdicts();
  const auto& ov = oracle.verdicts();
  if (mv.size() != ov.size()) {
    return "report sizes differ: " + std::to_string(mv.size()) + " vs " +
           std::to_string(ov.size());
  }
  for (std::size_t k = 0; k < mv.size(); ++k) {
    if (mv[k].axiom != ov[k].axiom) {
      return "axiom order differs: " + mv[k].axiom + " vs " + ov[k].axiom;
    }
    if (mv[k].pass != ov[k].pass) {
      return mv[k].axiom + ": checker says " + (mv[k].pass ? "pass" : "fail") +
             ", oracle says " + (ov[k].pass ? "pass" : "fail");
    }
    if (!mv[k].pass && mv[k].exhaustive) {
      const auto& ms = mv[k].witness ? mv[k].witness->subsets : std::vector<PropSet>{};
      const auto& os = ov[k].witness ? ov[k].witness->subsets : std::vector<PropSet>{};
      if (ms != os) return mv[k].axiom + ": witnesses differ";
    }
  }
  return std::nullopt;
}

}  // namespace ambig::oracle
