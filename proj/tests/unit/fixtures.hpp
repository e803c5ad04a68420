#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ambig/ambiguity.hpp"
#include "ambig/error.hpp"
#include "ambig/incidence.hpp"
#include "ambig/interval.hpp"
#include "ambig/numeric.hpp"

namespace fixtures {

using namespace ambig;

using Cell = std::pair<std::vector<std::string>, std::vector<std::string>>;

inline PropSet P(const Frame& f, std::vector<std::string> names) { return f.encode(names); }
inline SitSet S(const SituationSpace& s, std::vector<std::string> names) { return s.encode(names); }

inline SetValuedMap table(const Frame& f, const SituationSpace& s, std::initializer_list<Cell> cells) {
  SetValuedMap m(f, s);
  for (const auto& [a, w] : cells) m.set(P(f, a), S(s, w));
  return m;
}

inline Frame xy() { return Frame({"x", "y"}); }
inline Frame xyz() { return Frame({"x", "y", "z"}); }
inline SituationSpace w3() { return SituationSpace({"w1", "w2", "w3"}); }
inline SituationSpace w2() { return SituationSpace({"w1", "w2"}); }

inline SetValuedMap fix1_j() {
  return table(xy(), w3(), {{{"x"}, {"w1"}}, {{"y"}, {"w2"}}, {{"x", "y"}, {"w3"}}});
}
inline SetValuedMap fix1_lower() {
  return table(xy(), w3(), {{{"x"}, {"w1"}}, {{"y"}, {"w2"}}, {{"x", "y"}, {"w1", "w2", "w3"}}});
}
inline SetValuedMap fix1_upper() {
  return table(xy(), w3(),
               {{{"x"}, {"w1", "w3"}}, {{"y"}, {"w2", "w3"}}, {{"x", "y"}, {"w1", "w2", "w3"}}});
}
inline IntervalStructure fix1() { return make_interval_structure(fix1_lower(), fix1_upper()); }

inline SetValuedMap fix3_j() { return table(xy(), w3(), {{{"x", "y"}, {"w1", "w2", "w3"}}}); }
inline IntervalStructure fix3() { return structure_from_assignment(fix3_j()); }

inline SetValuedMap fix2_a() {
  return table(xyz(), w2(),
               {{{"x"}, {"w2"}}, {{"y"}, {"w2"}}, {{"x", "z"}, {"w2"}}, {{"y", "z"}, {"w2"}}});
}
inline PointMap fix2_g() { return PointMap({0, 2}); }
inline IncidenceMap fix2_i() { return incidence_from_pointmap(fix2_g(), xyz(), w2()); }

inline Rational R(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace fixtures
