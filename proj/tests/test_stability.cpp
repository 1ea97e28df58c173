#include "repstab/arrangements.hpp"
#include "repstab/liehom.hpp"
#include "repstab/stability.hpp"

#include <gtest/gtest.h>

using namespace repstab;

namespace {

DecompositionSequence sequence_of(Family f, int lo, int hi, const std::function<Decomposition(int)>& at) {
  DecompositionSequence seq;
  seq.family = f;
  for (int n = lo; n <= hi; ++n) seq.add(at(n));
  return seq;
}

Decomposition relabelled(const Decomposition& d, int n) {
  Decomposition out(d.family(), n, d.is_virtual());
  for (const auto& [l, m] : d.terms()) out.add(l, m);
  return out;
}

} // namespace

TEST(Stability, ConstantSequenceIsStableFromTheStart) {
  auto seq = sequence_of(Family::SYM, 4, 9, [](int n) {
    Decomposition d(Family::SYM, n);
    d.add(Partition{}, 2);
    d.add(Partition{1}, 1);
    return d;
  });
  auto r = detect(seq, 3);
  EXPECT_EQ(r.verdict, Verdict::Stable);
  EXPECT_EQ(r.verdict_string(), "stable");
  EXPECT_EQ(r.period, 1);
  EXPECT_EQ(r.uniform_onset, 4);
  EXPECT_TRUE(r.empirical);
}

TEST(Stability, RegularRepresentationsAreUnstable) {
  auto seq = sequence_of(Family::SYM, 3, 7, [](int n) {
    Decomposition d(Family::SYM, n);
    for (const auto& mu : enumerate_partitions(n)) d.add(unpad(mu).first, to_mult(num_standard_tableaux(mu)));
    return d;
  });
  EXPECT_EQ(detect(seq, 3).verdict, Verdict::Unstable);
}

TEST(Stability, AlternatingMultiplicitiesArePeriodic) {
  auto seq = sequence_of(Family::SYM, 2, 9, [](int n) {
    Decomposition d(Family::SYM, n);
    d.add(Partition{}, n % 2 ? 1 : 3);
    return d;
  });
  auto r = detect(seq, 3);
  EXPECT_EQ(r.verdict, Verdict::Periodic);
  EXPECT_EQ(r.period, 2);
  EXPECT_EQ(r.verdict_string(), "periodic(2)");
}

TEST(Stability, PureBraidOnsetsWithinTheoreticalRange) {
  for (int i = 1; i <= 2; ++i) {
    auto seq = sequence_of(Family::SYM, i + 1, 9, [i](int n) { return braid_decomposition(Arrangement::A, n, i); });
    auto r = detect(seq, 2);
    EXPECT_EQ(r.verdict, Verdict::Stable);
    ASSERT_TRUE(r.uniform_onset);
    EXPECT_LE(*r.uniform_onset, 4 * i);
  }
  auto h1 = sequence_of(Family::SYM, 3, 9, [](int n) { return braid_decomposition(Arrangement::A, n, 1); });
  EXPECT_EQ(detect(h1, 3).uniform_onset, 4);
}

TEST(Stability, ExtendingByTheLastEntryKeepsTheVerdict) {
  auto seq = sequence_of(Family::SYM, 4, 9, [](int n) { return braid_decomposition(Arrangement::A, n, 2); });
  auto before = detect(seq, 3);
  for (int n = 10; n <= 12; ++n) {
    seq.add(relabelled(seq.entries.rbegin()->second, n));
    auto after = detect(seq, 3);
    EXPECT_EQ(after.verdict, before.verdict);
    EXPECT_EQ(after.uniform_onset, before.uniform_onset);
    EXPECT_EQ(after.onsets, before.onsets);
  }
}

TEST(Stability, Errors) {
  DecompositionSequence empty;
  EXPECT_THROW(detect(empty, 3), Error);
  auto short_seq = sequence_of(Family::SYM, 4, 6, [](int n) { return Decomposition(Family::SYM, n); });
  try {
    detect(short_seq, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Usage);
  }
  auto gap = short_seq;
  gap.entries.erase(5);
  EXPECT_THROW(gap.validate(), Error);
  EXPECT_THROW(detect_simple(short_seq), Error);
}

TEST(SimpleStability, FreeLiePieces) {
  auto seq = sequence_of(Family::GL, 2, 6, [](int n) { return free_lie_decomposition(3, n); });
  auto r = detect_simple(seq, 3);
  EXPECT_EQ(r.verdict, Verdict::SimplyStable);
  EXPECT_EQ(r.verdict_string(), "simply-stable");
}

TEST(SimpleStability, LateEntryIsNotSimple) {
  auto seq = sequence_of(Family::GL, 2, 7, [](int n) {
    Decomposition d(Family::GL, n);
    d.add(PseudoPartition{1}, 1);
    if (n >= 3) d.add(PseudoPartition{1, 1}, 1);
    return d;
  });
  EXPECT_NE(detect_simple(seq, 3).verdict, Verdict::SimplyStable);
}

TEST(SimpleStability, OneRowLabelsFromTheStart) {
  auto seq = sequence_of(Family::GL, 1, 5, [](int n) {
    Decomposition d(Family::GL, n);
    d.add(PseudoPartition{2}, 1);
    d.add(PseudoPartition{1}, 2);
    return d;
  });
  auto r = detect_simple(seq, 3);
  EXPECT_EQ(r.verdict, Verdict::SimplyStable);
  EXPECT_EQ(r.uniform_onset, 1);
}

TEST(SimpleStability, TiraoOnsets) {
  auto seq = sequence_of(Family::GL, 2, 5, [](int n) { return nilpotent_homology(n, 3, 3); });
  auto r = detect_simple(seq, 3);
  EXPECT_EQ(r.verdict, Verdict::SimplyStable);
  for (const auto& [l, onset] : r.onsets) EXPECT_EQ(onset, std::max(2, label_length(l))) << to_string(l);
}

TEST(SimpleStability, NegativePartsAreNotSimple) {
  auto seq = sequence_of(Family::GL, 2, 6, [](int n) {
    std::vector<int> dual(static_cast<std::size_t>(n), 0);
    dual.back() = -1;
    return Decomposition::single(Family::GL, n, PseudoPartition(dual));
  });
  EXPECT_NE(detect_simple(seq, 3).verdict, Verdict::SimplyStable);
}
