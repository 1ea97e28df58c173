#pragma once

// Schur-basis structure constants: Littlewood-Richardson, Kostka and plethysm
// coefficients, and the inversion of GL weight multiplicities into Schur terms.

#include "sym_characters.hpp"

#include <functional>
#include <map>

namespace repstab {

/// Sparse integer combination of Schur functions.
class SchurVector {
public:
  using Terms = std::map<Partition, Mult, std::greater<>>;

  SchurVector() = default;
  SchurVector(std::initializer_list<std::pair<const Partition, Mult>> init) {
    for (const auto& [p, c] : init) add(p, c);
  }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  Mult operator[](const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  SchurVector& add(const Partition& p, Mult c) {
    if (c == 0) return *this;
    Mult& slot = terms_[p];
    slot += c;
    if (slot == 0) terms_.erase(p);
    return *this;
  }

  SchurVector& operator+=(const SchurVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SchurVector& v) {
  os << '{';
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << ", ";
    first = false;
    os << p << ':' << c;
  }
  return os << '}';
}

// ---------------------------------------------------------------- Littlewood-Richardson

namespace detail {

// Adds letters k = 1..l(mu) as successive horizontal strips; a strip for letter k
// must keep the reverse row reading word a lattice word, which reduces to
// #k in rows <= r  <=  #(k-1) in rows < r  for every row r.
inline void lr_fill(std::vector<int>& shape, const Partition& mu, int letter,
                    std::vector<std::vector<int>>& counts, SchurVector& out) {
  if (letter > mu.length()) {
    out.add(Partition(shape), 1);
    return;
  }
  const int need = mu[letter - 1];
  const std::vector<int> old(shape);
  const int rows = static_cast<int>(old.size());
  std::vector<int>& cnt = counts[static_cast<std::size_t>(letter - 1)];
  cnt.assign(static_cast<std::size_t>(rows + 1), 0);
  const std::vector<int>* prev = letter >= 2 ? &counts[static_cast<std::size_t>(letter - 2)] : nullptr;

  // Prefix sums of the previous letter's counts over rows < r.
  std::vector<int> prev_prefix(static_cast<std::size_t>(rows + 2), 0);
  if (prev)
    for (int r = 0; r <= rows; ++r)
      prev_prefix[static_cast<std::size_t>(r + 1)] =
          prev_prefix[static_cast<std::size_t>(r)] + (r < static_cast<int>(prev->size()) ? (*prev)[static_cast<std::size_t>(r)] : 0);

  shape.resize(static_cast<std::size_t>(rows + 1), 0);
  auto rec = [&](auto&& self, int row, int remaining, int placed_so_far) -> void {
    if (remaining == 0) {
      std::vector<int> trimmed(shape);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      std::vector<int> saved(shape);
      shape = trimmed;
      lr_fill(shape, mu, letter + 1, counts, out);
      shape = saved;
      return;
    }
    if (row > rows) return;
    int base = old.size() > static_cast<std::size_t>(row) ? old[static_cast<std::size_t>(row)] : 0;
    int cap = row == 0 ? remaining : std::min(remaining, old[static_cast<std::size_t>(row - 1)] - base);
    for (int a = cap; a >= 0; --a) {
      if (prev && placed_so_far + a > prev_prefix[static_cast<std::size_t>(row)]) continue;
      shape[static_cast<std::size_t>(row)] = base + a;
      cnt[static_cast<std::size_t>(row)] = a;
      self(self, row + 1, remaining - a, placed_so_far + a);
    }
    shape[static_cast<std::size_t>(row)] = base;
    cnt[static_cast<std::size_t>(row)] = 0;
  };
  rec(rec, 0, need, 0);
  shape = old;
}

} // namespace detail

/// s_lambda * s_mu = sum_nu C^nu_{lambda mu} s_nu.
inline SchurVector lr(const Partition& lambda, const Partition& mu) {
  static Memo<std::pair<Partition, Partition>, SchurVector> memo;
  return memo.get({lambda, mu}, [&] {
    SchurVector out;
    std::vector<int> shape(lambda.parts());
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(mu.length()));
    detail::lr_fill(shape, mu, 1, counts, out);
    return out;
  });
}

inline Mult lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  return lr(lambda, mu)[nu];
}

// ---------------------------------------------------------------- Kostka numbers

/// Number of semistandard tableaux of shape lambda and content mu.
inline Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    fail(ErrorKind::Usage, "kostka: |lambda| != |mu|");
  static Memo<std::pair<Partition, Partition>, Integer> memo;
  if (mu.empty()) return 1;
  return memo.get({lambda, mu}, [&]() -> Integer {
    // Peel off the largest letter: a horizontal strip of size mu_last.
    const int strip = mu[mu.length() - 1];
    std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
    Partition mu_rest(std::move(rest));
    Integer total = 0;
    std::vector<int> inner(lambda.parts());
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (row == lambda.length()) {
        if (remaining == 0) total += kostka(Partition(inner), mu_rest);
        return;
      }
      int lo = lambda[row + 1];  // horizontal strip: lambda_{r+1} <= inner_r <= lambda_r
      for (int keep = lambda[row]; keep >= lo; --keep) {
        int removed = lambda[row] - keep;
        if (removed > remaining) break;
        inner[static_cast<std::size_t>(row)] = keep;
        self(self, row + 1, remaining - removed);
      }
      inner[static_cast<std::size_t>(row)] = lambda[row];
    };
    rec(rec, 0, strip);
    return total;
  });
}

/// dim S_lambda(Q^k) by the hook-content formula.
inline Integer schur_dimension(const Partition& lambda, int k) {
  if (lambda.length() > k) return 0;
  Partition c = conjugate(lambda);
  Integer num = 1, den = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= k + j - i;
      den *= (lambda[i] - j - 1) + (c[j] - i - 1) + 1;
    }
  return num / den;
}

// ---------------------------------------------------------------- plethysm

namespace detail {

using PowerSumPoly = std::map<Partition, Rational>;

inline PowerSumPoly power_sum_expansion(const Partition& mu) {
  PowerSumPoly out;
  for (const auto& sigma : enumerate_partitions(mu.size())) {
    long chi = character_sym(mu, sigma);
    if (chi != 0) out[sigma] = Rational(chi) / Rational(centralizer_order(sigma));
  }
  return out;
}

inline PowerSumPoly scale_indices(const PowerSumPoly& f, int k) {
  PowerSumPoly out;
  for (const auto& [sigma, c] : f) {
    std::vector<int> parts(sigma.parts());
    for (int& p : parts) p *= k;
    out[Partition(std::move(parts))] += c;
  }
  return out;
}

inline PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
  PowerSumPoly out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out[merge(x, y)] += cx * cy;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

} // namespace detail

/// s_lambda[s_mu] = sum_nu M^nu_{lambda mu} s_nu, computed in the power-sum basis.
inline SchurVector plethysm(const Partition& lambda, const Partition& mu) {
  const int degree = lambda.size() * mu.size();
  require_cap(degree <= Limits::global().max_plethysm_degree,
              "plethysm degree " + std::to_string(degree) + " > max " +
                  std::to_string(Limits::global().max_plethysm_degree));
  static Memo<std::pair<Partition, Partition>, SchurVector> memo;
  return memo.get({lambda, mu}, [&] {
    const detail::PowerSumPoly inner = detail::power_sum_expansion(mu);
    std::map<int, detail::PowerSumPoly> composed; // p_k o s_mu
    detail::PowerSumPoly total;
    for (const auto& rho : enumerate_partitions(lambda.size())) {
      long chi = character_sym(lambda, rho);
      if (chi == 0) continue;
      detail::PowerSumPoly term{{Partition{}, Rational(chi) / Rational(centralizer_order(rho))}};
      for (int part : rho.parts()) {
        auto it = composed.find(part);
        if (it == composed.end()) it = composed.emplace(part, detail::scale_indices(inner, part)).first;
        term = detail::multiply(term, it->second);
      }
      for (const auto& [tau, c] : term) total[tau] += c;
    }
    SchurVector out;
    for (const auto& nu : enumerate_partitions(degree)) {
      Rational coeff = 0;
      for (const auto& [tau, c] : total)
        if (c != 0) coeff += c * character_sym(nu, tau);
      if (coeff.get_den() != 1) fail(ErrorKind::Internal, "plethysm coefficient did not clear to an integer");
      out.add(nu, to_mult(coeff));
    }
    return out;
  });
}

// ---------------------------------------------------------------- weight tables

/// Weight multiplicities of a polynomial GL_n-module: exponent vector (length n) -> dimension.
struct WeightTable {
  int n = 0;
  std::map<std::vector<int>, Integer> mult;

  Integer at(const std::vector<int>& weight) const {
    auto it = mult.find(weight);
    return it == mult.end() ? Integer(0) : it->second;
  }
  Integer at(const Partition& p) const {
    std::vector<int> w(p.parts());
    w.resize(static_cast<std::size_t>(n), 0);
    return at(w);
  }
  void add(std::vector<int> weight, const Integer& m) {
    weight.resize(static_cast<std::size_t>(n), 0);
    mult[weight] += m;
  }
};

/// Weight table of S_lambda(Q^n) from semistandard-tableau contents (dominant weights only).
inline WeightTable schur_weight_table(const Partition& lambda, int n) {
  WeightTable t{n, {}};
  for (const auto& mu : enumerate_partitions(lambda.size(), n)) {
    Integer k = kostka(lambda, mu);
    if (k != 0) t.add(mu.parts(), k);
  }
  return t;
}

/// Unique c with sum_lambda c_lambda K_{lambda mu} = weights(mu) for all dominant mu of the given
/// degree, solved by back-substitution along decreasing lex order.
inline SchurVector schur_expand_weights(const WeightTable& weights, int degree) {
  SchurVector out;
  std::vector<std::pair<Partition, Integer>> found;
  for (const auto& mu : enumerate_partitions(degree, weights.n)) {
    Integer c = weights.at(mu);
    for (const auto& [lam, cl] : found) c -= cl * kostka(lam, mu);
    if (c < 0)
      fail(ErrorKind::NotRepresentation, "weight table is not the character of a polynomial module: coefficient of (" +
                                             to_string(mu) + ") would be " + c.get_str());
    if (c > 0) {
      found.emplace_back(mu, c);
      out.add(mu, to_mult(c));
    }
  }
  return out;
}

} // namespace repstab
