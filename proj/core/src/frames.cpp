#include "ambig/frames.hpp"

#include <algorithm>

#include "ambig/error.hpp"

namespace ambig {

Universe::Universe(std::vector<std::string> names, std::size_t cap,
                   std::string_view what)
    : names_(std::move(names)) {
  if (names_.empty() || names_.size() > cap) {
    throw InvalidUniverse(std::string(what) + " must have between 1 and " +
                          std::to_string(cap) + " elements, got " +
                          std::to_string(names_.size()));
  }
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k].empty()) {
      throw InvalidUniverse(std::string(what) + " element " + std::to_string(k) +
                            " has an empty name");
    }
    if (std::find(names_.begin(), names_.begin() + k, names_[k]) !=
        names_.begin() + k) {
      throw DuplicateElement(std::string(what) + " element '" + names_[k] +
                             "' declared twice");
    }
  }
}

std::size_t Universe::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t Universe::encode_bits(std::span<const std::string> names) const {
  std::uint64_t bits = 0;
  for (const auto& n : names) {
    std::size_t k = find(n);
    if (k == size()) throw UnknownElement("unknown element '" + n + "'");
    std::uint64_t bit = std::uint64_t{1} << k;
    if (bits & bit) throw DuplicateElement("element '" + n + "' listed twice");
    bits |= bit;
  }
  return bits;
}

std::vector<std::string> Universe::decode_bits(std::uint64_t bits) const {
  if (bits & ~full_bits()) {
    throw MaskOutOfRange("mask " + std::to_string(bits) + " exceeds a universe of " +
                         std::to_string(size()) + " elements");
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < size(); ++k) {
    if ((bits >> k) & 1u) out.push_back(names_[k]);
  }
  return out;
}

Frame::Frame(std::vector<std::string> atoms)
    : Universe(std::move(atoms), kMaxAtoms, "frame") {}

PropSet Frame::encode(std::span<const std::string> names) const {
  return PropSet(static_cast<std::uint32_t>(encode_bits(names)));
}

std::vector<std::string> Frame::decode(PropSet a) const { return decode_bits(a.bits); }

SituationSpace::SituationSpace(std::vector<std::string> situations, std::size_t cap)
    : Universe(std::move(situations), std::min(cap, kMaxSituations),
               "situation space") {}

SitSet SituationSpace::encode(std::span<const std::string> names) const {
  return SitSet(encode_bits(names));
}

std::vector<std::string> SituationSpace::decode(SitSet s) const {
  return decode_bits(s.bits);
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += parts[k];
  }
  return out;
}

std::string braced(const std::vector<std::string>& parts) {
  if (parts.empty()) return "∅";
  return "{" + join(parts) + "}";
}

}  // namespace

std::string subset_key(const Frame& frame, PropSet a) { return join(frame.decode(a)); }

std::string format_subset(const Frame& frame, PropSet a) {
  return braced(frame.decode(a));
}

std::string format_subset(const SituationSpace& space, SitSet s) {
  return braced(space.decode(s));
}

}  // namespace ambig
