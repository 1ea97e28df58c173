#include "repstab/characters.hpp"
#include "repstab/repring.hpp"

#include <gtest/gtest.h>

using namespace repstab;

namespace {

using Poly = std::map<std::vector<int>, long>;

Poly schur_poly(const Partition& shape, int k) {
  Poly out;
  std::vector<std::vector<int>> t;
  for (int r = 0; r < shape.length(); ++r) t.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.length()) {
      std::vector<int> e(static_cast<std::size_t>(k), 0);
      for (const auto& row : t)
        for (int x : row) ++e[static_cast<std::size_t>(x)];
      ++out[e];
      return;
    }
    if (c == shape[r]) return self(self, r + 1, 0);
    int lo = c > 0 ? t[r][c - 1] : 0;
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x < k; ++x) {
      t[r][c] = x;
      self(self, r, c + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Power sum p_rho in k variables.
Poly power_sum(const Partition& rho, int k) {
  Poly f{{std::vector<int>(static_cast<std::size_t>(k), 0), 1}};
  for (int part : rho.parts()) {
    Poly g;
    for (const auto& [e, c] : f)
      for (int v = 0; v < k; ++v) {
        auto e2 = e;
        e2[static_cast<std::size_t>(v)] += part;
        g[e2] += c;
      }
    f = std::move(g);
  }
  return f;
}

// Frobenius: p_rho = sum_lambda chi_lambda(rho) s_lambda.
std::map<Partition, long> frobenius_characters(const Partition& rho) {
  const int k = rho.size();
  Poly f = power_sum(rho, k);
  std::map<Partition, long> out;
  while (true) {
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    if (f.empty()) break;
    auto lead = f.rbegin();
    Partition nu(lead->first);
    long c = lead->second;
    out[nu] = c;
    for (const auto& [e, v] : schur_poly(nu, k)) f[e] -= c * v;
  }
  return out;
}

Decomposition sym(int n, std::initializer_list<std::pair<Partition, Mult>> terms) {
  Decomposition d(Family::SYM, n);
  for (const auto& [l, m] : terms) d.add(l, m);
  return d;
}

} // namespace

TEST(Characters, SpecialValues) {
  for (int d = 1; d <= 7; ++d)
    for (const auto& rho : enumerate_partitions(d)) {
      EXPECT_EQ(character_sym(Partition{d}, rho), 1);
      EXPECT_EQ(character_sym(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), rho), sign_of(rho));
    }
  EXPECT_EQ(character_sym(Partition{2, 1}, Partition{3}), -1);
}

TEST(Characters, MurnaghanNakayamaMatchesFrobeniusFormula) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& rho : enumerate_partitions(d)) {
      auto expected = frobenius_characters(rho);
      for (const auto& l : enumerate_partitions(d)) {
        long want = expected.count(l) ? expected[l] : 0;
        EXPECT_EQ(character_sym(l, rho), want) << l << " at " << rho;
      }
    }
}

TEST(Characters, SymmetricGroupOrthogonality) {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = sym_character_table(n);
    for (std::size_t a = 0; a < t.labels.size(); ++a)
      for (std::size_t b = a; b < t.labels.size(); ++b) {
        Rational s = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          s += Rational(t.values[a][c] * t.values[b][c]) / Rational(t.centralizers[c]);
        EXPECT_EQ(s, a == b ? 1 : 0);
      }
    // Column orthogonality at the identity: sum of squared dimensions.
    Integer sq = 0;
    const int id = t.class_index(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (std::size_t a = 0; a < t.labels.size(); ++a) sq += Integer(t.values[a][static_cast<std::size_t>(id)]) * t.values[a][static_cast<std::size_t>(id)];
    EXPECT_EQ(sq, factorial(n));
  }
}

TEST(Characters, HyperoctahedralSpecialValues) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : hyp_classes(n)) {
      EXPECT_EQ(character_hyp(DoublePartition{Partition{n}, Partition{}}, c), 1);
      EXPECT_EQ(character_hyp(DoublePartition{Partition{}, Partition{n}}, c), c.neg.length() % 2 ? -1 : 1);
    }
  for (int n = 2; n <= 5; ++n) {
    SignedCycleType id{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Partition{}};
    EXPECT_EQ(character_hyp(DoublePartition{Partition{n - 1}, Partition{1}}, id), n);
  }
}

TEST(Characters, HyperoctahedralOrthogonality) {
  for (int n = 1; n <= 8; ++n) {
    const auto irr = hyp_irreducibles(n);
    const auto classes = hyp_classes(n);
    EXPECT_EQ(irr.size(), classes.size());
    std::vector<std::vector<long>> table;
    for (const auto& l : irr) {
      std::vector<long> row;
      for (const auto& c : classes) row.push_back(character_hyp(l, c));
      table.push_back(row);
    }
    for (std::size_t a = 0; a < irr.size(); ++a)
      for (std::size_t b = a; b < irr.size(); ++b) {
        Rational s = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
          s += Rational(table[a][c] * table[b][c]) / Rational(centralizer_order(classes[c]));
        EXPECT_EQ(s, a == b ? 1 : 0) << to_string(irr[a]) << " vs " << to_string(irr[b]);
      }
    Integer sq = 0;
    for (const auto& l : irr) sq += dim_hyp(l) * dim_hyp(l);
    EXPECT_EQ(sq, hyp_group_order(n));
    EXPECT_EQ(hyp_group_order(n), factorial(n) * (Integer(1) << n));
  }
}

TEST(Characters, DecomposeExamples) {
  EXPECT_EQ(decompose(ClassFunction::irreducible(Partition{3, 2})), sym(5, {{Partition{2}, 1}}));
  auto regular = ClassFunction::sym(3, [](const CycleType& rho) { return Rational(rho.length() == 3 ? 6 : 0); });
  EXPECT_EQ(decompose(regular), sym(3, {{Partition{}, 1}, {Partition{1}, 2}, {Partition{1, 1}, 1}}));
  auto points = ClassFunction::sym(5, [](const CycleType& rho) { return Rational(rho.count(1)); });
  EXPECT_EQ(decompose(points), sym(5, {{Partition{}, 1}, {Partition{1}, 1}}));
  auto half = ClassFunction::sym(3, [](const CycleType&) { return Rational(1, 2); });
  try {
    decompose(half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRepresentation);
  }
}

TEST(Characters, KroneckerExamples) {
  for (int n = 4; n <= 6; ++n) {
    EXPECT_EQ(kronecker(Partition{}, Partition{2}, n), sym(n, {{Partition{2}, 1}}));
    // (fix - 1)^2 from cycle types alone.
    auto square = ClassFunction::sym(n, [](const CycleType& rho) {
      long f = rho.count(1) - 1;
      return Rational(f * f);
    });
    EXPECT_EQ(kronecker(Partition{1}, Partition{1}, n), decompose(square));
    EXPECT_EQ(kronecker(Partition{1}, Partition{1}, n),
              sym(n, {{Partition{}, 1}, {Partition{1}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}}));
  }
  auto sign = Partition{1, 1, 1, 1}; // sign of S_5 is (1^5), unpadded (1,1,1,1)
  EXPECT_EQ(kronecker(sign, sign, 5), sym(5, {{Partition{}, 1}}));
}

TEST(Characters, KroneckerSymmetryAndDimension) {
  for (int n = 4; n <= 8; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (const auto& l : enumerate_partitions(a))
          for (const auto& m : enumerate_partitions(b)) {
            if (n < a + l.first() || n < b + m.first()) continue;
            auto d = kronecker(l, m, n);
            EXPECT_EQ(d, kronecker(m, l, n));
            EXPECT_EQ(dimension(d), num_standard_tableaux(pad(l, n)) * num_standard_tableaux(pad(m, n)));
          }
}

TEST(Characters, KroneckerStableRange) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& l : enumerate_partitions(a))
        for (const auto& m : enumerate_partitions(b)) {
          const int B = a + b + l.first() + m.first();
          const int start = std::max(B, 1);
          auto base = kronecker(l, m, start);
          for (int n = start + 1; n <= B + 3; ++n) {
            auto d = kronecker(l, m, n);
            EXPECT_EQ(d.terms(), base.terms()) << l << " x " << m << " n=" << n;
          }
        }
}

TEST(Characters, HemmerExamples) {
  auto groups1 = small_subgroups(1);
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(induce_hemmer(groups1[0].data, groups1[0].order, groups1[0].irreducibles[0].second, n),
              sym(n, {{Partition{}, 1}, {Partition{1}, 1}}));
  auto groups2 = small_subgroups(2);
  const auto& s2 = groups2[1];
  ASSERT_EQ(s2.data.name, "S2");
  EXPECT_EQ(induce_hemmer(s2.data, s2.order, s2.irreducibles[1].second, 4), sym(4, {{Partition{1}, 1}, {Partition{1, 1}, 1}}));
  // Trivial character of S_k: Young's rule, i.e. Pieri on a one-row shape.
  for (int k = 1; k <= 3; ++k) {
    const auto groups = small_subgroups(k);
    const auto& sk = groups.back();
    for (int n = 2 * k; n <= 2 * k + 2; ++n) {
      Decomposition expected(Family::SYM, n);
      for (const auto& [nu, c] : lr(Partition{n - k}, Partition{k}).terms()) expected.add(unpad(nu).first, c);
      EXPECT_EQ(induce_hemmer(sk.data, sk.order, sk.irreducibles[0].second, n), expected);
    }
  }
}

TEST(Characters, HemmerStableRange) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& H : small_subgroups(k))
      for (const auto& [name, chi] : H.irreducibles) {
        auto base = induce_hemmer(H.data, H.order, chi, 2 * k);
        for (int n = 2 * k + 1; n <= 2 * k + 4; ++n)
          EXPECT_EQ(induce_hemmer(H.data, H.order, chi, n).terms(), base.terms()) << H.data.name << " " << name << " n=" << n;
      }
}

TEST(Characters, Restriction) {
  EXPECT_EQ(restrict_sym(Partition{}, 5, 1), sym(4, {{Partition{}, 1}}));
  EXPECT_EQ(restrict_sym(Partition{1}, 5, 1), sym(4, {{Partition{}, 1}, {Partition{1}, 1}}));
  EXPECT_EQ(restrict_sym(Partition{2, 1}, 6, 0), sym(6, {{Partition{2, 1}, 1}}));
  for (int n = 4; n <= 7; ++n)
    for (const auto& l : enumerate_partitions(2)) {
      if (n < 2 + l.first()) continue;
      EXPECT_EQ(dimension(restrict_sym(l, n, 2)), num_standard_tableaux(pad(l, n)));
    }
}

TEST(Characters, HyperoctahedralInduction) {
  DoublePartition p1{Partition{1}, Partition{}}, m1{Partition{}, Partition{1}};
  auto pp = induce_hyp_product(p1, p1);
  Decomposition want(Family::HYP, 2);
  want.add(unpad(DoublePartition{Partition{2}, Partition{}}), 1);
  want.add(unpad(DoublePartition{Partition{1, 1}, Partition{}}), 1);
  EXPECT_EQ(pp, want);
  Decomposition want_m(Family::HYP, 2);
  want_m.add(unpad(DoublePartition{Partition{}, Partition{2}}), 1);
  want_m.add(unpad(DoublePartition{Partition{}, Partition{1, 1}}), 1);
  EXPECT_EQ(induce_hyp_product(m1, m1), want_m);
}
