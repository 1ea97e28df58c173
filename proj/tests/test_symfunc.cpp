#include "repstab/symfunc.hpp"

#include <gtest/gtest.h>

using namespace repstab;

namespace {

using Poly = std::map<std::vector<int>, long>;

// Schur polynomial in k variables by enumerating semistandard tableaux row by row.
Poly schur_poly(const Partition& shape, int k) {
  Poly out;
  std::vector<std::vector<int>> t;
  for (int r = 0; r < shape.length(); ++r) t.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  std::vector<int> cells;
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

Poly multiply_poly(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Expands a symmetric polynomial in Schur polynomials by repeatedly removing the lex-leading monomial.
SchurVector expand(Poly f, int k) {
  SchurVector out;
  while (true) {
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    if (f.empty()) break;
    auto lead = f.rbegin();
    Partition nu(lead->first);
    long c = lead->second;
    out.add(nu, c);
    for (const auto& [e, v] : schur_poly(nu, k)) f[e] -= c * v;
  }
  return out;
}

// Pieri: s_lambda h_k is the sum over horizontal strips of size k.
SchurVector pieri(const Partition& lambda, int k) {
  SchurVector out;
  std::vector<int> nu(lambda.parts());
  nu.push_back(0);
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == nu.size()) {
      if (left == 0) out.add(Partition(nu), 1);
      return;
    }
    const int cap = row == 0 ? left : std::min(left, lambda[static_cast<int>(row) - 1] - lambda[static_cast<int>(row)]);
    for (int add = 0; add <= cap; ++add) {
      nu[row] = lambda[static_cast<int>(row)] + add;
      self(self, row + 1, left - add);
    }
    nu[row] = lambda[static_cast<int>(row)];
  };
  rec(rec, 0, k);
  return out;
}

} // namespace

TEST(Symfunc, SpecExample) {
  SchurVector expected{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}};
  EXPECT_EQ(lr(Partition{2, 1}, Partition{1}), expected);
  EXPECT_EQ(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}), 2);
}

TEST(Symfunc, LittlewoodRichardsonMatchesPolynomialProducts) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& l : enumerate_partitions(a))
        for (const auto& m : enumerate_partitions(b)) {
          const int k = std::max(1, l.length() + m.length());
          EXPECT_EQ(lr(l, m), expand(multiply_poly(schur_poly(l, k), schur_poly(m, k)), k)) << l << " * " << m;
        }
}

TEST(Symfunc, LittlewoodRichardsonIsCommutative) {
  for (const auto& l : enumerate_partitions(4))
    for (const auto& m : enumerate_partitions(3)) EXPECT_EQ(lr(l, m), lr(m, l));
}

TEST(Symfunc, PieriRule) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& l : enumerate_partitions(d))
      for (int k = 1; k <= 3; ++k) EXPECT_EQ(lr(l, Partition{k}), pieri(l, k)) << l << " k=" << k;
}

TEST(Symfunc, DimensionIsConservedUnderProducts) {
  for (const auto& l : enumerate_partitions(4))
    for (const auto& m : enumerate_partitions(3))
      for (int k = 1; k <= 5; ++k) {
        Integer total = 0;
        for (const auto& [nu, c] : lr(l, m).terms()) total += schur_dimension(nu, k) * c;
        EXPECT_EQ(total, schur_dimension(l, k) * schur_dimension(m, k));
      }
}

TEST(Symfunc, SchurDimensionCountsTableaux) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& l : enumerate_partitions(d))
      for (int k = 1; k <= 4; ++k) {
        long count = 0;
        for (const auto& [e, c] : schur_poly(l, k)) count += c;
        EXPECT_EQ(schur_dimension(l, k), count);
      }
}

TEST(Symfunc, KostkaNumbers) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& l : enumerate_partitions(d)) {
      EXPECT_EQ(kostka(l, l), 1);
      EXPECT_EQ(kostka(l, Partition(std::vector<int>(static_cast<std::size_t>(d), 1))), num_standard_tableaux(l));
      for (const auto& m : enumerate_partitions(d))
        if (m > l) EXPECT_EQ(kostka(l, m), 0);
    }
  EXPECT_EQ(kostka(Partition{3, 2}, Partition{2, 2, 1}), 2);
}

TEST(Symfunc, KnownPlethysms) {
  EXPECT_EQ(plethysm(Partition{2}, Partition{2}), (SchurVector{{Partition{4}, 1}, {Partition{2, 2}, 1}}));
  EXPECT_EQ(plethysm(Partition{1, 1}, Partition{2}), (SchurVector{{Partition{3, 1}, 1}}));
  EXPECT_EQ(plethysm(Partition{2}, Partition{3}), (SchurVector{{Partition{6}, 1}, {Partition{4, 2}, 1}}));
  EXPECT_EQ(plethysm(Partition{3}, Partition{2}),
            (SchurVector{{Partition{6}, 1}, {Partition{4, 2}, 1}, {Partition{2, 2, 2}, 1}}));
}

TEST(Symfunc, PlethysmDimensionIdentity) {
  // dim S_lambda(S_mu(Q^k)) computed two ways.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& l : enumerate_partitions(a))
        for (const auto& m : enumerate_partitions(b))
          for (int k = 1; k <= 3; ++k) {
            Integer total = 0;
            for (const auto& [nu, c] : plethysm(l, m).terms()) total += schur_dimension(nu, k) * c;
            EXPECT_EQ(total, schur_dimension(l, static_cast<int>(schur_dimension(m, k).get_si())))
                << l << "[" << m << "] k=" << k;
          }
}

TEST(Symfunc, PlethysmDegreeCap) {
  Limits saved = Limits::global();
  Limits::global().max_plethysm_degree = 6;
  EXPECT_THROW(plethysm(Partition{4}, Partition{2}), Error);
  Limits::global() = saved;
}
