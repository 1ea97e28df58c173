#pragma once

// Orlik-Solomon algebras of the braid arrangement (type A) and the signed
// arrangement (type B) with the S_n / W_n actions on them.

#include "characters.hpp"
#include "linalg.hpp"

#include <memory>

namespace repstab {

enum class Arrangement { A, B };

inline std::string to_string(Arrangement a) { return a == Arrangement::A ? "A" : "B"; }

/// Hyperplane z_j = z_k (type A), stored as the pair j < k (1-based).
struct HyperplaneA {
  int j, k;
};

/// Type-B hyperplanes z_i = z_j, z_i = -z_j, z_i = 0.
struct HyperplaneB {
  enum Kind { Diff, Sum, Coord } kind;
  int i, j; // 1-based; j unused for Coord
};

/// A signed permutation: g(e_i) = sign[i] e_{perm[i]} (0-based). Type A uses all signs +1.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int n) {
    SignedPermutation g{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
  }
  int n() const { return static_cast<int>(perm.size()); }

  SignedPermutation operator*(const SignedPermutation& h) const { // (g*h)(x) = g(h(x))
    SignedPermutation r = identity(n());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      auto hi = static_cast<std::size_t>(h.perm[i]);
      r.perm[i] = perm[hi];
      r.sign[i] = h.sign[i] * sign[hi];
    }
    return r;
  }
  SignedPermutation inverse() const {
    SignedPermutation r = identity(n());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      r.perm[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      r.sign[static_cast<std::size_t>(perm[i])] = sign[i];
    }
    return r;
  }
};

/// Representative of an S_n class: consecutive blocks form the cycles.
inline SignedPermutation class_representative(const CycleType& rho) {
  SignedPermutation g = SignedPermutation::identity(rho.size());
  int start = 0;
  for (int l : rho.parts()) {
    for (int t = 0; t < l; ++t) g.perm[static_cast<std::size_t>(start + t)] = start + (t + 1) % l;
    start += l;
  }
  return g;
}

/// Representative of a W_n class: positive cycles first, then negative cycles, each
/// negative cycle carrying one sign flip.
inline SignedPermutation class_representative(const SignedCycleType& c) {
  SignedPermutation g = SignedPermutation::identity(c.size());
  int start = 0;
  auto place = [&](const Partition& p, bool negative) {
    for (int l : p.parts()) {
      for (int t = 0; t < l; ++t) g.perm[static_cast<std::size_t>(start + t)] = start + (t + 1) % l;
      if (negative) g.sign[static_cast<std::size_t>(start)] = -1;
      start += l;
    }
  };
  place(c.pos, false);
  place(c.neg, true);
  return g;
}

/// A different element of the same class: conjugate by reversal of coordinates (and a
/// sign flip of the first coordinate for type B).
inline SignedPermutation alternate_representative(const SignedPermutation& g, bool signed_conjugator) {
  SignedPermutation t = SignedPermutation::identity(g.n());
  for (int i = 0; i < g.n(); ++i) t.perm[static_cast<std::size_t>(i)] = g.n() - 1 - i;
  if (signed_conjugator && g.n() > 0) t.sign[0] = -1;
  return t * g * t.inverse();
}

/// Degree-i piece of an Orlik-Solomon algebra: nbc basis plus a memoized straightening map.
class OSAlgebraSlice {
public:
  using Monomial = std::vector<int>;            // sorted hyperplane indices
  using Combination = std::map<int, std::int64_t>; // nbc basis index -> coefficient

  OSAlgebraSlice(Arrangement arr, int n, int degree) : arr_(arr), n_(n), degree_(degree) {
    const int top = arr == Arrangement::A ? n - 1 : n;
    if (n < 1 || degree < 0 || degree > std::max(top, 0))
      fail(ErrorKind::Usage, "Orlik-Solomon degree " + std::to_string(degree) + " out of range for type " + to_string(arr) +
                                 ", n=" + std::to_string(n));
    require_cap(n <= Limits::global().max_braid_n, "arrangement rank n=" + std::to_string(n) + " > max " +
                                                       std::to_string(Limits::global().max_braid_n));
    build_forms();
    enumerate_basis();
  }

  Arrangement arrangement() const { return arr_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<long>>& forms() const { return forms_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::vector<HyperplaneA> hyperplanes_a() const {
    std::vector<HyperplaneA> out;
    for (const auto& f : forms_) {
      int j = -1, k = -1;
      for (int t = 0; t < n_; ++t)
        if (f[static_cast<std::size_t>(t)] != 0) (j < 0 ? j : k) = t + 1;
      out.push_back({j, k});
    }
    return out;
  }

  bool is_nbc(const Monomial& s) const { return independent(s) && !has_broken_circuit(s); }

  /// e_S written in the nbc basis.
  Combination straighten(const Monomial& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    Combination result = compute_straighten(s);
    memo_.emplace(s, result);
    return result;
  }

  /// Trace of g on the degree-i piece.
  Rational trace(const SignedPermutation& g) {
    std::vector<int> image(forms_.size());
    for (std::size_t h = 0; h < forms_.size(); ++h) image[h] = act(g, static_cast<int>(h));
    Rational total = 0;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      Monomial m;
      for (int h : basis_[b]) m.push_back(image[static_cast<std::size_t>(h)]);
      int sgn = sort_sign(m);
      Combination c = straighten(m);
      auto f = c.find(static_cast<int>(b));
      if (f != c.end()) total += sgn * f->second;
    }
    return total;
  }

private:
  void build_forms() {
    auto unit = [&](int i, int j, int sj) {
      std::vector<long> f(static_cast<std::size_t>(n_), 0);
      f[static_cast<std::size_t>(i)] = 1;
      if (j >= 0) f[static_cast<std::size_t>(j)] = sj;
      return f;
    };
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        forms_.push_back(unit(i, j, -1));
        if (arr_ == Arrangement::B) forms_.push_back(unit(i, j, 1));
      }
    if (arr_ == Arrangement::B)
      for (int i = 0; i < n_; ++i) forms_.push_back(unit(i, -1, 0));
    for (std::size_t h = 0; h < forms_.size(); ++h) index_[forms_[h]] = static_cast<int>(h);
  }

  // Normalized image of hyperplane h under g: f'_{perm(i)} = sign_i f_i, first nonzero entry positive.
  int act(const SignedPermutation& g, int h) const {
    const auto& f = forms_[static_cast<std::size_t>(h)];
    std::vector<long> out(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(g.perm[i])] = g.sign[i] * f[i];
    for (long x : out)
      if (x != 0) {
        if (x < 0)
          for (long& y : out) y = -y;
        break;
      }
    return index_.at(out);
  }

  int rank_of(const std::vector<int>& hs) const {
    std::vector<std::vector<long>> m;
    for (int h : hs) m.push_back(forms_[static_cast<std::size_t>(h)]);
    return dense_rank(std::move(m));
  }
  bool independent(const Monomial& s) const { return rank_of(s) == static_cast<int>(s.size()); }

  bool in_span(int h, const std::vector<int>& span) const {
    std::vector<int> with(span);
    with.push_back(h);
    return rank_of(with) == rank_of(span);
  }

  // Smallest h outside S lying in the span of the elements of S greater than h, or -1.
  int broken_circuit_witness(const Monomial& s) const {
    for (int h = 0; h < static_cast<int>(forms_.size()); ++h) {
      if (std::binary_search(s.begin(), s.end(), h)) continue;
      std::vector<int> above;
      for (int t : s)
        if (t > h) above.push_back(t);
      if (!above.empty() && in_span(h, above)) return h;
    }
    return -1;
  }
  bool has_broken_circuit(const Monomial& s) const { return broken_circuit_witness(s) >= 0; }

  void enumerate_basis() {
    Monomial cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == degree_) {
        basis_.push_back(cur);
        return;
      }
      for (int h = next; h < static_cast<int>(forms_.size()); ++h) {
        cur.push_back(h);
        if (is_nbc(cur)) self(self, h + 1); // subsets of nbc sets are nbc
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (std::size_t b = 0; b < basis_.size(); ++b) basis_index_[basis_[b]] = static_cast<int>(b);
  }

  // Sorts m in place; returns the sign of the sorting permutation, or 0 on a repeated index.
  static int sort_sign(Monomial& m) {
    int sgn = 1;
    for (std::size_t i = 1; i < m.size(); ++i)
      for (std::size_t j = i; j > 0 && m[j - 1] >= m[j]; --j) {
        if (m[j - 1] == m[j]) return 0;
        std::swap(m[j - 1], m[j]);
        sgn = -sgn;
      }
    return sgn;
  }

  static void accumulate(Combination& into, const Combination& from, std::int64_t scale) {
    for (const auto& [b, c] : from) {
      std::int64_t prod, sum;
      if (__builtin_mul_overflow(c, scale, &prod) || __builtin_add_overflow(into[b], prod, &sum))
        fail(ErrorKind::Internal, "Orlik-Solomon coefficient overflow");
      if (sum == 0) into.erase(b);
      else into[b] = sum;
    }
  }

  Combination compute_straighten(const Monomial& s) {
    if (!independent(s)) return {};
    auto bi = basis_index_.find(s);
    if (bi != basis_index_.end()) return {{bi->second, 1}};
    const int h = broken_circuit_witness(s);
    // Circuit C = {h} + the support of h in terms of S_{>h}.
    std::vector<int> above;
    for (int t : s)
      if (t > h) above.push_back(t);
    std::vector<int> support;
    for (int t : above) {
      std::vector<int> without;
      for (int u : above)
        if (u != t) without.push_back(u);
      if (!in_span(h, without)) support.push_back(t);
    }
    std::vector<int> rest;
    for (int t : s)
      if (!std::binary_search(support.begin(), support.end(), t)) rest.push_back(t);
    // e_S = sgn * e_support ^ e_rest, and e_support = -sum_{k>=1} (-1)^k e_{C - c_k}.
    Monomial joined(support);
    joined.insert(joined.end(), rest.begin(), rest.end());
    const int sgn = sort_sign(joined);
    Combination out;
    for (std::size_t k = 0; k < support.size(); ++k) {
      Monomial term{h};
      for (std::size_t t = 0; t < support.size(); ++t)
        if (t != k) term.push_back(support[t]);
      // In C = (h, support...), support[k] sits at position k+1.
      const int coeff = ((k + 1) % 2 == 0) ? -1 : 1;
      term.insert(term.end(), rest.begin(), rest.end());
      int tsgn = sort_sign(term);
      if (tsgn == 0) continue;
      accumulate(out, straighten(term), static_cast<std::int64_t>(sgn * coeff * tsgn));
    }
    return out;
  }

  Arrangement arr_;
  int n_, degree_;
  std::vector<std::vector<long>> forms_;
  std::map<std::vector<long>, int> index_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> basis_index_;
  std::map<Monomial, Combination> memo_;
};

inline OSAlgebraSlice nbc_basis(Arrangement arr, int n, int degree) { return OSAlgebraSlice(arr, n, degree); }

/// Character of S_n (type A) or W_n (type B) on H^i of the arrangement complement.
inline ClassFunction braid_character(Arrangement arr, int n, int degree) {
  OSAlgebraSlice slice(arr, n, degree);
  if (arr == Arrangement::A)
    return ClassFunction::sym(n, [&](const CycleType& rho) { return slice.trace(class_representative(rho)); });
  return ClassFunction::hyp(n, [&](const SignedCycleType& c) { return slice.trace(class_representative(c)); });
}

inline Decomposition braid_decomposition(Arrangement arr, int n, int degree) {
  return decompose(braid_character(arr, n, degree));
}

/// dim H_i(B_n; V(lambda)_n) = multiplicity of V(lambda)_n in H^i(P_n).
inline Mult twisted_braid_betti(int n, int degree, const Partition& lambda) {
  pad(lambda, n);
  return braid_decomposition(Arrangement::A, n, degree)[lambda];
}

/// Unsigned Stirling number of the first kind c(n, k).
inline Integer stirling_first(int n, int k) {
  std::vector<std::vector<Integer>> c(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  c[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= m; ++j)
      c[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] +
          Integer(m - 1) * c[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
  return k < 0 || k > n ? Integer(0) : c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// e_i(1, 3, ..., 2n-1): Betti numbers of the type-B arrangement complement.
inline Integer odd_elementary(int n, int i) {
  std::vector<Integer> e(static_cast<std::size_t>(n + 1), 0);
  e[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = m; j >= 1; --j) e[static_cast<std::size_t>(j)] += Integer(2 * m - 1) * e[static_cast<std::size_t>(j - 1)];
  return i < 0 || i > n ? Integer(0) : e[static_cast<std::size_t>(i)];
}

} // namespace repstab
