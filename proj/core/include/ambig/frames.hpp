#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ambig {

// A subset of a finite universe stored as a bitmask. Bit k stands for the
// k-th element in declaration order. The Tag keeps propositions (subsets of
// the frame) and situation sets (subsets of the situation space) apart.
template <class Tag, class Word>
struct MaskSet {
  using word_type = Word;

  Word bits = 0;

  constexpr MaskSet() = default;
  constexpr explicit MaskSet(Word b) : bits(b) {}

  static constexpr MaskSet singleton(std::size_t index) {
    return MaskSet(static_cast<Word>(Word{1} << index));
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool contains(std::size_t index) const {
    return ((bits >> index) & Word{1}) != 0;
  }
  constexpr bool subset_of(MaskSet other) const {
    return (bits & ~other.bits) == 0;
  }
  constexpr bool intersects(MaskSet other) const {
    return (bits & other.bits) != 0;
  }

  constexpr MaskSet operator|(MaskSet o) const { return MaskSet(bits | o.bits); }
  constexpr MaskSet operator&(MaskSet o) const { return MaskSet(bits & o.bits); }
  // Set difference.
  constexpr MaskSet operator-(MaskSet o) const { return MaskSet(bits & ~o.bits); }
  constexpr MaskSet& operator|=(MaskSet o) { bits |= o.bits; return *this; }
  constexpr MaskSet& operator&=(MaskSet o) { bits &= o.bits; return *this; }

  constexpr auto operator<=>(const MaskSet&) const = default;
};

struct PropTag {};
struct SitTag {};

using PropSet = MaskSet<PropTag, std::uint32_t>;
using SitSet = MaskSet<SitTag, std::uint64_t>;

// Ordered list of distinct named elements. Bit positions follow the order
// given at construction.
class Universe {
 public:
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  // Index of `name`, or size() when absent.
  std::size_t find(std::string_view name) const;

  bool operator==(const Universe&) const = default;

 protected:
  Universe(std::vector<std::string> names, std::size_t cap, std::string_view what);

  std::uint64_t full_bits() const {
    return names_.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << names_.size()) - 1;
  }
  std::uint64_t encode_bits(std::span<const std::string> names) const;
  std::vector<std::string> decode_bits(std::uint64_t bits) const;

 private:
  std::vector<std::string> names_;
};

// The frame of states. At most kMaxAtoms atoms because every map over the
// frame materialises a dense table of 2^m entries.
class Frame : public Universe {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  explicit Frame(std::vector<std::string> atoms);

  std::size_t subset_count() const { return std::size_t{1} << size(); }
  PropSet full() const { return PropSet(static_cast<std::uint32_t>(full_bits())); }
  PropSet complement(PropSet a) const { return PropSet(~a.bits & full().bits); }
  bool valid(PropSet a) const { return a.subset_of(full()); }

  PropSet encode(std::span<const std::string> names) const;
  std::vector<std::string> decode(PropSet a) const;

  bool operator==(const Frame&) const = default;
};

// The finite set of situations. SitSet is a 64-bit mask, which bounds the cap.
class SituationSpace : public Universe {
 public:
  static constexpr std::size_t kMaxSituations = 64;

  explicit SituationSpace(std::vector<std::string> situations,
                          std::size_t cap = kMaxSituations);

  SitSet full() const { return SitSet(full_bits()); }
  SitSet complement(SitSet s) const { return SitSet(~s.bits & full().bits); }
  bool valid(SitSet s) const { return s.subset_of(full()); }

  SitSet encode(std::span<const std::string> names) const;
  std::vector<std::string> decode(SitSet s) const;

  bool operator==(const SituationSpace&) const = default;
};

// "a,b" style key: element names in universe order joined by commas.
std::string subset_key(const Frame& frame, PropSet a);
// "{a,b}" / "∅" for reports.
std::string format_subset(const Frame& frame, PropSet a);
std::string format_subset(const SituationSpace& space, SitSet s);

}  // namespace ambig
