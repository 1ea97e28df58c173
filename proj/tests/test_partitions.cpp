#include "repstab/partitions.hpp"

#include <gtest/gtest.h>

using namespace repstab;

namespace {

// f(lambda) by removing corners recursively.
Integer count_by_corners(const std::vector<int>& shape) {
  int total = 0;
  for (int x : shape) total += x;
  if (total == 0) return 1;
  Integer sum = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 0) continue;
    if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;
    auto smaller = shape;
    --smaller[i];
    sum += count_by_corners(smaller);
  }
  return sum;
}

} // namespace

TEST(Partitions, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int d = 0; d < static_cast<int>(p.size()); ++d) EXPECT_EQ(enumerate_partitions(d).size(), p[static_cast<std::size_t>(d)]);
}

TEST(Partitions, EnumerationIsDecreasingLexAndBounded) {
  auto all = enumerate_partitions(7);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
  EXPECT_EQ(all.front(), (Partition{7}));
  EXPECT_EQ(all.back(), (Partition{1, 1, 1, 1, 1, 1, 1}));
  for (const auto& q : enumerate_partitions(9, 3, 4)) {
    EXPECT_LE(q.length(), 3);
    EXPECT_LE(q.first(), 4);
    EXPECT_EQ(q.size(), 9);
  }
}

TEST(Partitions, ConjugateIsAnInvolution) {
  for (int d = 0; d <= 9; ++d)
    for (const auto& q : enumerate_partitions(d)) {
      EXPECT_EQ(conjugate(conjugate(q)), q);
      EXPECT_EQ(conjugate(q).length(), q.first());
    }
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
}

TEST(Partitions, HookLengthMatchesCornerRecursion) {
  for (int d = 1; d <= 9; ++d)
    for (const auto& q : enumerate_partitions(d)) EXPECT_EQ(num_standard_tableaux(q), count_by_corners(q.parts())) << to_string(q);
}

TEST(Partitions, SquaresOfDimensionsSumToFactorial) {
  for (int d = 1; d <= 8; ++d) {
    Integer s = 0;
    for (const auto& q : enumerate_partitions(d)) s += num_standard_tableaux(q) * num_standard_tableaux(q);
    EXPECT_EQ(s, factorial(d));
  }
}

TEST(Partitions, PaddingRoundTrip) {
  EXPECT_EQ(pad(Partition{2, 1}, 6), (Partition{3, 2, 1}));
  for (int d = 0; d <= 5; ++d)
    for (const auto& q : enumerate_partitions(d))
      for (int n = std::max(1, q.size() + q.first()); n <= q.size() + q.first() + 3; ++n) {
        auto [core, size] = unpad(pad(q, n));
        EXPECT_EQ(core, q);
        EXPECT_EQ(size, n);
      }
}

TEST(Partitions, PaddingBelowBoundIsAValidityError) {
  try {
    pad(Partition{2, 1}, 4);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validity);
  }
}

TEST(Partitions, DoublePaddingRoundTrip) {
  DoublePartition l{Partition{1}, Partition{2}};
  auto full = pad(l, 5);
  EXPECT_EQ(full.plus, (Partition{2, 1}));
  EXPECT_EQ(full.minus, (Partition{2}));
  EXPECT_EQ(unpad(full), l);
  EXPECT_THROW(pad(l, 3), Error);
}

TEST(Partitions, Parsing) {
  EXPECT_EQ(parse_partition("3,1,1"), (Partition{3, 1, 1}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_pseudo_partition("2,0,-1"), (PseudoPartition{2, 0, -1}));
  DoublePartition d = parse_double_partition("2,1|1");
  EXPECT_EQ(d.plus, (Partition{2, 1}));
  EXPECT_EQ(d.minus, (Partition{1}));
  EXPECT_THROW(parse_partition("1,2"), Error);
  EXPECT_THROW(parse_partition("2,x"), Error);
  EXPECT_EQ(parse_family("sym"), Family::SYM);
  EXPECT_EQ(parse_family("SP"), Family::SP);
  EXPECT_THROW(parse_family("E8"), Error);
}

TEST(Partitions, LabelValidity) {
  EXPECT_FALSE(label_problem(Family::SYM, Partition{2, 1}, 5));
  EXPECT_TRUE(label_problem(Family::SYM, Partition{2, 1}, 4));
  EXPECT_FALSE(label_problem(Family::GL, PseudoPartition{1, 0, -1}, 3));
  EXPECT_TRUE(label_problem(Family::GL, PseudoPartition{1, 0, -1}, 4));
  EXPECT_TRUE(label_problem(Family::SL, Partition{1, 1, 1}, 3));
  EXPECT_FALSE(label_problem(Family::SP, Partition{1, 1, 1}, 3));
  EXPECT_TRUE(label_problem(Family::SYM, PseudoPartition{1}, 5));
}

TEST(Partitions, OrderIsPaddedLex) {
  EXPECT_LT((Partition{2, 1}), (Partition{3}));
  EXPECT_LT((Partition{1, 1}), (Partition{2}));
  EXPECT_LT((PseudoPartition{0, -1}), (PseudoPartition{}));
}
