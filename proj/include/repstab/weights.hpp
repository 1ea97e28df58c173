#pragma once

// Weight multisets for GL_n and Sp_2n modules: irreducible weight systems
// (Kostka numbers for GL, Freudenthal's recursion for type C) and decomposition
// of a weight multiset by peeling highest weights.

#include "decomposition.hpp"
#include "symfunc.hpp"

#include <numeric>

namespace repstab {

/// Formal character: weight vector (length n) -> multiplicity.
using WeightMultiset = std::map<std::vector<int>, Integer>;

inline void add_weights(WeightMultiset& into, const WeightMultiset& from, const Integer& scale = 1) {
  for (const auto& [w, m] : from) {
    Integer& slot = into[w];
    slot += scale * m;
    if (slot == 0) into.erase(w);
  }
}

inline WeightMultiset multiply_weights(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) {
      std::vector<int> s(x);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      out[s] += mx * my;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace detail {

inline void distinct_permutations(std::vector<int> v, const std::function<void(const std::vector<int>&)>& f) {
  std::sort(v.begin(), v.end());
  do f(v);
  while (std::next_permutation(v.begin(), v.end()));
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

} // namespace detail

// ---------------------------------------------------------------- GL_n

/// Coordinates of a GL label at rank n, and the label of a coordinate vector.
inline std::vector<int> gl_coords(const PseudoPartition& p, int n) { return p.at_rank(n); }
inline PseudoPartition gl_label(const std::vector<int>& coords) { return PseudoPartition(coords); }

inline WeightMultiset gl_weights(const PseudoPartition& lambda, int n) {
  require_valid(Family::GL, lambda, n);
  std::vector<int> c = gl_coords(lambda, n);
  const int shift = n == 0 ? 0 : c.back();
  std::vector<int> bar(c);
  for (int& x : bar) x -= shift;
  Partition base(bar);
  WeightMultiset out;
  for (const auto& mu : enumerate_partitions(base.size(), n)) {
    Integer k = kostka(base, mu);
    if (k == 0) continue;
    std::vector<int> w(mu.parts());
    w.resize(static_cast<std::size_t>(n), 0);
    detail::distinct_permutations(w, [&](const std::vector<int>& v) {
      std::vector<int> s(v);
      for (int& x : s) x += shift;
      out[s] += k;
    });
  }
  return out;
}

/// Peels lex-largest dominant weights; fails if a multiplicity goes negative.
inline Decomposition decompose_gl_weights(WeightMultiset w, int n) {
  Decomposition out(Family::GL, n);
  while (!w.empty()) {
    std::vector<int> top;
    bool found = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (std::is_sorted(it->first.begin(), it->first.end(), std::greater<>())) {
        top = it->first;
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::NotRepresentation, "weight multiset has no dominant weight");
    Integer m = w[top];
    if (m < 0) fail(ErrorKind::NotRepresentation, "weight multiset is not the character of a module");
    out.add(gl_label(top), to_mult(m));
    add_weights(w, gl_weights(gl_label(top), n), -m);
  }
  return out;
}

// ---------------------------------------------------------------- Sp_2n

/// Dominant representative of a type-C weight: sorted absolute values.
inline std::vector<int> sp_dominant(std::vector<int> w) {
  for (int& x : w) x = std::abs(x);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

/// mu <= lambda in the type-C root order (both dominant, length n).
inline bool sp_below(const std::vector<int>& mu, const std::vector<int>& lambda) {
  long partial = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    partial += lambda[i] - mu[i];
    if (partial < 0) return false;
  }
  return partial % 2 == 0;
}

/// Multiplicities of the dominant weights of V(lambda) for Sp_2n (Freudenthal).
inline std::map<std::vector<int>, Integer> sp_dominant_multiplicities(const Partition& lambda, int n) {
  require_valid(Family::SP, lambda, n);
  static Memo<std::pair<Partition, int>, std::map<std::vector<int>, Integer>> memo;
  return memo.get({lambda, n}, [&] {
    std::vector<int> top(lambda.parts());
    top.resize(static_cast<std::size_t>(n), 0);
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - i;

    std::vector<std::vector<int>> pos_roots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 1, a[static_cast<std::size_t>(j)] = -1;
        b[static_cast<std::size_t>(i)] = 1, b[static_cast<std::size_t>(j)] = 1;
        pos_roots.push_back(a);
        pos_roots.push_back(b);
      }
      std::vector<int> c(static_cast<std::size_t>(n), 0);
      c[static_cast<std::size_t>(i)] = 2;
      pos_roots.push_back(c);
    }

    // Dominant weights below lambda, in decreasing lex order.
    std::vector<std::vector<int>> dominant;
    for (int d = lambda.size(); d >= 0; d -= 2)
      for (const auto& mu : enumerate_partitions(d, n, lambda.first())) {
        std::vector<int> v(mu.parts());
        v.resize(static_cast<std::size_t>(n), 0);
        if (sp_below(v, top)) dominant.push_back(v);
      }
    std::sort(dominant.begin(), dominant.end(), std::greater<>());

    auto plus = [](std::vector<int> a, const std::vector<int>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return a;
    };
    const std::vector<int> top_rho = plus(top, rho);
    const int norm_top = detail::dot(top_rho, top_rho);

    std::map<std::vector<int>, Integer> mult;
    for (const auto& mu : dominant) {
      if (mu == top) {
        mult[mu] = 1;
        continue;
      }
      Integer sum = 0;
      for (const auto& alpha : pos_roots) {
        std::vector<int> w = plus(mu, alpha);
        for (;;) {
          std::vector<int> d = sp_dominant(w);
          if (!sp_below(d, top)) break;
          auto it = mult.find(d);
          if (it != mult.end()) sum += it->second * detail::dot(w, alpha);
          w = plus(w, alpha);
        }
      }
      std::vector<int> mu_rho = plus(mu, rho);
      Integer denom = norm_top - detail::dot(mu_rho, mu_rho);
      Integer m = 2 * sum;
      if (denom <= 0 || m % denom != 0) fail(ErrorKind::Internal, "Freudenthal recursion produced a non-integer");
      m /= denom;
      if (m != 0) mult[mu] = m;
    }
    return mult;
  });
}

/// Full weight system of V(lambda) for Sp_2n.
inline WeightMultiset sp_weights(const Partition& lambda, int n) {
  WeightMultiset out;
  for (const auto& [mu, m] : sp_dominant_multiplicities(lambda, n)) {
    detail::distinct_permutations(mu, [&](const std::vector<int>& v) {
      int nonzero = 0;
      for (int x : v) nonzero += x != 0;
      for (int mask = 0; mask < (1 << nonzero); ++mask) {
        std::vector<int> s(v);
        int bit = 0;
        for (int& x : s)
          if (x != 0) {
            if (mask >> bit & 1) x = -x;
            ++bit;
          }
        out[s] += m;
      }
    });
  }
  return out;
}

inline Decomposition decompose_sp_weights(WeightMultiset w, int n) {
  Decomposition out(Family::SP, n);
  while (!w.empty()) {
    std::vector<int> top;
    bool found = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (it->first == sp_dominant(it->first)) {
        top = it->first;
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::NotRepresentation, "weight multiset has no dominant weight");
    Integer m = w[top];
    if (m < 0) fail(ErrorKind::NotRepresentation, "weight multiset is not the character of a module");
    Partition label(top);
    out.add(label, to_mult(m));
    add_weights(w, sp_weights(label, n), -m);
  }
  return out;
}

/// Same peeling from dominant-weight multiplicities only (keys: nonnegative, nonincreasing, length n).
inline Decomposition decompose_sp_dominant(std::map<std::vector<int>, Integer> dominant, int n) {
  Decomposition out(Family::SP, n);
  for (auto it = dominant.begin(); it != dominant.end();) it = it->second == 0 ? dominant.erase(it) : std::next(it);
  while (!dominant.empty()) {
    auto top = std::prev(dominant.end());
    const std::vector<int> w = top->first;
    const Integer m = top->second;
    if (m < 0) fail(ErrorKind::NotRepresentation, "dominant weight multiplicities are not those of a module");
    Partition label(w);
    out.add(label, to_mult(m));
    for (const auto& [mu, k] : sp_dominant_multiplicities(label, n)) {
      Integer& slot = dominant[mu];
      slot -= m * k;
      if (slot == 0) dominant.erase(mu);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Schur functors on weights

/// Character of S_lambda(V) from the weights of V, via power sums.
inline WeightMultiset schur_functor_weights(const Partition& lambda, const WeightMultiset& v, int n) {
  WeightMultiset total;
  std::map<int, WeightMultiset> adams;
  std::map<std::vector<int>, Rational> acc;
  for (const auto& rho : enumerate_partitions(lambda.size())) {
    long chi = character_sym(lambda, rho);
    if (chi == 0) continue;
    WeightMultiset prod{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
    for (int k : rho.parts()) {
      auto it = adams.find(k);
      if (it == adams.end()) {
        WeightMultiset psi;
        for (const auto& [w, m] : v) {
          std::vector<int> s(w);
          for (int& x : s) x *= k;
          psi[s] += m;
        }
        it = adams.emplace(k, std::move(psi)).first;
      }
      prod = multiply_weights(prod, it->second);
    }
    Rational c = Rational(chi) / Rational(centralizer_order(rho));
    for (const auto& [w, m] : prod) acc[w] += c * Rational(m);
  }
  for (const auto& [w, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1) fail(ErrorKind::Internal, "Schur functor character is not integral");
    total[w] = c.get_num();
  }
  return total;
}

} // namespace repstab
