#pragma once

#include <span>
#include <vector>

#include "ambig/frames.hpp"

namespace ambig {

// A total mapping 2^Θ → 2^Ω held as a dense table indexed by PropSet bits.
// Every proposition-indexed map in the library (lower, upper, ambiguity,
// incidence, basic assignment) is one of these.
class SetValuedMap {
 public:
  // The constant-∅ map.
  SetValuedMap(Frame frame, SituationSpace space);
  SetValuedMap(Frame frame, SituationSpace space, std::vector<SitSet> table);

  static SetValuedMap constant(Frame frame, SituationSpace space, SitSet value);

  const Frame& frame() const { return frame_; }
  const SituationSpace& space() const { return space_; }
  std::size_t subset_count() const { return table_.size(); }

  SitSet operator[](PropSet a) const { return table_[a.bits]; }
  SitSet at(PropSet a) const;
  void set(PropSet a, SitSet value);

  std::span<const SitSet> table() const { return table_; }

  bool same_universe(const SetValuedMap& other) const {
    return frame_ == other.frame_ && space_ == other.space_;
  }

  bool operator==(const SetValuedMap&) const = default;

 private:
  Frame frame_;
  SituationSpace space_;
  std::vector<SitSet> table_;
};

// Throws FrameMismatch unless both maps share frame and situation space.
void require_same_universe(const SetValuedMap& a, const SetValuedMap& b);

}  // namespace ambig
