#include "ambig/set_valued_map.hpp"

#include <string>

#include "ambig/error.hpp"

namespace ambig {

SetValuedMap::SetValuedMap(Frame frame, SituationSpace space)
    : frame_(std::move(frame)), space_(std::move(space)) {
  table_.assign(frame_.subset_count(), SitSet{});
}

SetValuedMap::SetValuedMap(Frame frame, SituationSpace space, std::vector<SitSet> table)
    : frame_(std::move(frame)), space_(std::move(space)), table_(std::move(table)) {
  if (table_.size() != frame_.subset_count()) {
    throw MaskOutOfRange("table has " + std::to_string(table_.size()) +
                         " entries, frame needs " +
                         std::to_string(frame_.subset_count()));
  }
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (!space_.valid(table_[a])) {
      throw MaskOutOfRange("table entry " + std::to_string(a) +
                           " names situations outside the space");
    }
  }
}

SetValuedMap SetValuedMap::constant(Frame frame, SituationSpace space, SitSet value) {
  SetValuedMap m(std::move(frame), std::move(space));
  if (!m.space_.valid(value)) throw MaskOutOfRange("constant value outside the space");
  m.table_.assign(m.table_.size(), value);
  return m;
}

SitSet SetValuedMap::at(PropSet a) const {
  if (!frame_.valid(a)) throw MaskOutOfRange("proposition outside the frame");
  return table_[a.bits];
}

void SetValuedMap::set(PropSet a, SitSet value) {
  if (!frame_.valid(a)) throw MaskOutOfRange("proposition outside the frame");
  if (!space_.valid(value)) throw MaskOutOfRange("value outside the situation space");
  table_[a.bits] = value;
}

void require_same_universe(const SetValuedMap& a, const SetValuedMap& b) {
  if (!(a.frame() == b.frame())) throw FrameMismatch("maps are over different frames");
  if (!(a.space() == b.space())) {
    throw FrameMismatch("maps are over different situation spaces");
  }
}

}  // namespace ambig
