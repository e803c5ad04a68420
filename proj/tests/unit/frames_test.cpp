#include <gtest/gtest.h>

#include "ambig/error.hpp"
#include "ambig/frames.hpp"
#include "ambig/set_valued_map.hpp"

namespace {

using namespace ambig;

std::vector<std::string> atoms(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < m; ++k) out.push_back("a" + std::to_string(k));
  return out;
}

TEST(Frame, EncodeEmptyAndFull) {
  Frame f({"x", "y"});
  EXPECT_EQ(f.encode(std::vector<std::string>{}).bits, 0b00u);
  EXPECT_EQ(f.encode(std::vector<std::string>{"y", "x"}).bits, 0b11u);
}

TEST(Frame, EncodeUnknownAtom) {
  Frame f({"x", "y"});
  EXPECT_THROW(f.encode(std::vector<std::string>{"x", "q"}), UnknownElement);
}

TEST(Frame, Decode) {
  Frame f({"x", "y"});
  EXPECT_EQ(f.decode(PropSet(0b01)), std::vector<std::string>{"x"});
  EXPECT_TRUE(f.decode(PropSet(0b00)).empty());
  EXPECT_THROW(f.decode(PropSet(0b100)), MaskOutOfRange);
}

TEST(Frame, SizeLimits) {
  EXPECT_THROW(Frame(std::vector<std::string>{}), InvalidUniverse);
  EXPECT_NO_THROW(Frame(atoms(16)));
  EXPECT_THROW(Frame(atoms(17)), InvalidUniverse);
  EXPECT_THROW(Frame({"x", "x"}), DuplicateElement);
  EXPECT_THROW(Frame({"x", ""}), InvalidUniverse);
}

TEST(SituationSpace, SizeLimits) {
  EXPECT_NO_THROW(SituationSpace(atoms(64)));
  EXPECT_THROW(SituationSpace(atoms(65)), InvalidUniverse);
  EXPECT_THROW(SituationSpace(atoms(5), 4), InvalidUniverse);
  SituationSpace full(atoms(64));
  EXPECT_EQ(full.full().bits, ~std::uint64_t{0});
  EXPECT_EQ(full.complement(full.full()).bits, 0u);
}

TEST(SituationSpace, DuplicateInList) {
  SituationSpace s({"w1", "w2"});
  EXPECT_THROW(s.encode(std::vector<std::string>{"w1", "w1"}), DuplicateElement);
}

TEST(Frame, BooleanLawsExhaustive) {
  for (std::size_t m = 1; m <= 4; ++m) {
    Frame f(atoms(m));
    for (std::uint32_t a = 0; a < f.subset_count(); ++a) {
      PropSet A(a);
      EXPECT_EQ(f.complement(f.complement(A)), A);
      EXPECT_TRUE((A & f.complement(A)).empty());
      EXPECT_EQ(A | f.complement(A), f.full());
      for (std::uint32_t b = 0; b < f.subset_count(); ++b) {
        PropSet B(b);
        EXPECT_EQ(f.complement(A | B), f.complement(A) & f.complement(B));
        EXPECT_EQ(f.complement(A & B), f.complement(A) | f.complement(B));
      }
    }
  }
}

TEST(Frame, RoundTripExhaustive) {
  for (std::size_t m = 1; m <= 4; ++m) {
    Frame f(atoms(m));
    for (std::uint32_t a = 0; a < f.subset_count(); ++a) {
      auto names = f.decode(PropSet(a));
      EXPECT_EQ(f.encode(names).bits, a);
      std::vector<std::string> reversed(names.rbegin(), names.rend());
      EXPECT_EQ(f.encode(reversed).bits, a);
    }
  }
}

TEST(Frame, SubsetKeyAndFormat) {
  Frame f({"x", "y"});
  EXPECT_EQ(subset_key(f, PropSet(0b11)), "x,y");
  EXPECT_EQ(subset_key(f, PropSet(0)), "");
  EXPECT_EQ(format_subset(f, PropSet(0b10)), "{y}");
  EXPECT_EQ(format_subset(f, PropSet(0)), "∅");
}

TEST(SetValuedMap, Validation) {
  Frame f({"x", "y"});
  SituationSpace s({"w1", "w2"});
  EXPECT_THROW(SetValuedMap(f, s, std::vector<SitSet>(3)), MaskOutOfRange);
  EXPECT_THROW(SetValuedMap(f, s, {SitSet(0), SitSet(4), SitSet(0), SitSet(0)}), MaskOutOfRange);
  SetValuedMap m(f, s);
  EXPECT_THROW(m.set(PropSet(4), SitSet(1)), MaskOutOfRange);
  EXPECT_THROW(m.at(PropSet(4)), MaskOutOfRange);
  SetValuedMap other(Frame({"x", "z"}), s);
  EXPECT_THROW(require_same_universe(m, other), FrameMismatch);
}

}  // namespace
