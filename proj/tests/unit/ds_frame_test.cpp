#include <gtest/gtest.h>

#include "evidentia/ds/focal_set.hpp"
#include "evidentia/ds/frame.hpp"
#include "evidentia/error.hpp"
#include "support/worked_example.hpp"

using evidentia::Errc;
using evidentia::Error;
using evidentia::ds::FocalSet;
using evidentia::ds::Frame;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an evidentia::Error";
  return Errc::IoError;
}

}  // namespace

TEST(Frame, KeepsInputOrder) {
  const auto frame = Frame::make(evidentia::testing::disease_labels());
  ASSERT_EQ(frame.size(), 7u);
  EXPECT_EQ(frame.label(0), "AI");
  EXPECT_EQ(frame.label(6), "OTHER");
  EXPECT_EQ(frame.index_of("SHS"), 5u);
  EXPECT_FALSE(frame.index_of("XYZ").has_value());
  EXPECT_EQ(frame.full_mask(), 0b1111111u);
}

TEST(Frame, SingleElement) {
  const auto frame = Frame::make({"A"});
  EXPECT_EQ(frame.size(), 1u);
  EXPECT_EQ(frame.full_mask(), 1u);
}

TEST(Frame, RejectsBadLabelLists) {
  EXPECT_EQ(error_of([] { Frame::make({"A", "A"}); }), Errc::DuplicateLabel);
  EXPECT_EQ(error_of([] { Frame::make({}); }), Errc::EmptyFrame);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("h" + std::to_string(i));
  EXPECT_EQ(error_of([&] { Frame::make(many); }), Errc::FrameTooLarge);
  many.pop_back();
  const auto widest = Frame::make(many);
  EXPECT_EQ(widest.full_mask(), ~std::uint64_t{0});
}

TEST(Frame, EqualityIsByContent) {
  const auto a = Frame::make({"x", "y"});
  const auto b = Frame::make({"x", "y"});
  const auto c = Frame::make({"y", "x"});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
}

TEST(FocalSet, MasksFollowFrameIndices) {
  const auto frame = Frame::make(evidentia::testing::disease_labels());
  EXPECT_EQ(FocalSet::of(frame, {"AI"}).bits(), 0b0000001u);
  const auto none = FocalSet::of(frame, std::vector<std::string>{});
  EXPECT_TRUE(none.empty());
  const auto three = FocalSet::of(frame, {"AI", "ND", "FC"});
  EXPECT_EQ(three.size(), 3);
  EXPECT_EQ(three.bits(), 0b0000111u);
  EXPECT_TRUE(FocalSet::of(frame, evidentia::testing::disease_labels()).is_full());
  EXPECT_EQ(FocalSet::of(frame, evidentia::testing::disease_labels()), FocalSet::full(frame));
}

TEST(FocalSet, UnknownMembersAreRejected) {
  const auto frame = Frame::make({"A", "B"});
  EXPECT_EQ(error_of([&] { FocalSet::of(frame, {"C"}); }), Errc::UnknownLabel);
  EXPECT_EQ(error_of([&] { FocalSet::from_bits(frame, 0b100); }), Errc::UnknownLabel);
}

TEST(FocalSet, SetAlgebraAndDisplay) {
  const auto frame = Frame::make(evidentia::testing::disease_labels());
  const auto nd_shs = FocalSet::of(frame, {"SHS", "ND"});
  const auto ai_nd_fc = FocalSet::of(frame, {"AI", "ND", "FC"});
  EXPECT_EQ(nd_shs.intersect(ai_nd_fc), FocalSet::of(frame, {"ND"}));
  EXPECT_TRUE(FocalSet::of(frame, {"ND"}).is_subset_of(nd_shs));
  EXPECT_FALSE(ai_nd_fc.is_subset_of(nd_shs));
  EXPECT_EQ(nd_shs.complement().size(), 5);
  EXPECT_EQ(nd_shs.labels(), (std::vector<std::string>{"ND", "SHS"}));
  EXPECT_EQ(nd_shs.display(), "{ND,SHS}");
  EXPECT_EQ(FocalSet::of(frame, {"AI"}).display(), "AI");
  EXPECT_EQ(FocalSet::full(frame).display(), "Θ");
}
