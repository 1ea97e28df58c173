#pragma once

// Graded Lie algebras and their Chevalley-Eilenberg homology: free Lie algebras
// in the Lyndon basis, free nilpotent truncations, and Heisenberg algebras.
// Homology is computed one weight space at a time and assembled into GL or Sp
// decompositions from the dominant weights.

#include "linalg.hpp"
#include "repring.hpp"
#include "weights.hpp"

namespace repstab {

using Word = std::vector<int>; // letters 1..n

// ---------------------------------------------------------------- Lyndon words

/// A word is Lyndon when it is strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(s), w.end())) return false;
  return true;
}

/// Lyndon words of length exactly j over 1..n, in lexicographic order (Duval's algorithm).
inline std::vector<Word> lyndon_basis(int n, int j) {
  if (n < 1 || j < 1) fail(ErrorKind::Usage, "lyndon_basis needs n >= 1 and j >= 1");
  std::vector<Word> out;
  Word w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == j) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < j) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

inline int mobius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  return d > 1 ? -result : result;
}

/// (1/j) sum_{d | j} mu(d) n^{j/d}.
inline Integer necklace_count(int n, int j) {
  Integer total = 0;
  for (int d = 1; d <= j; ++d) {
    if (j % d) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j / d));
    total += mobius(d) * p;
  }
  return total / j;
}

/// Standard factorization w = uv with v the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) fail(ErrorKind::Usage, "letters have no standard factorization");
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word v(w.begin() + static_cast<long>(s), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<long>(s)), v};
  }
  fail(ErrorKind::Internal, "no Lyndon suffix");
}

/// Multiplicity of V(lambda) in L_m(V): (1/m) sum_{d | m} mu(d) chi_lambda(tau^{m/d}),
/// where tau^{m/d} has m/d cycles of length d.
inline Integer bakhturin_multiplicity(const Partition& lambda) {
  const int m = lambda.size();
  if (m < 1) fail(ErrorKind::Usage, "bakhturin_multiplicity needs a nonempty partition");
  long total = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(d);
    if (!mu) continue;
    CycleType rho(std::vector<int>(static_cast<std::size_t>(m / d), d));
    total += mu * character_sym(lambda, rho);
  }
  if (total % m) fail(ErrorKind::Internal, "Bakhturin sum not divisible by m");
  return total / m;
}

/// L_m(V_n) over GL_n from Bakhturin's multiplicities.
inline Decomposition free_lie_decomposition(int m, int n) {
  Decomposition out(Family::GL, n);
  for (const auto& lambda : enumerate_partitions(m, n)) {
    Integer c = bakhturin_multiplicity(lambda);
    if (c != 0) out.add(PseudoPartition(lambda), to_mult(c));
  }
  return out;
}

/// Dominant-weight table of L_m(V_n) from the contents of Lyndon words.
inline WeightTable lyndon_weight_table(int n, int m) {
  WeightTable t{n, {}};
  for (const auto& w : lyndon_basis(n, m)) {
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    for (int x : w) ++content[static_cast<std::size_t>(x - 1)];
    if (std::is_sorted(content.begin(), content.end(), std::greater<>())) t.add(content, 1);
  }
  return t;
}

// ---------------------------------------------------------------- brackets in the Lyndon basis

using LieElement = std::map<Word, Integer>;

namespace detail {

inline void add_scaled(LieElement& into, const LieElement& from, const Integer& scale) {
  for (const auto& [w, c] : from) {
    Integer& slot = into[w];
    slot += scale * c;
    if (slot == 0) into.erase(w);
  }
}

inline LieElement bracket_words(const Word& u, const Word& v);

inline LieElement bracket_word_element(const Word& u, const LieElement& e) {
  LieElement out;
  for (const auto& [w, c] : e) add_scaled(out, bracket_words(u, w), c);
  return out;
}

inline LieElement bracket_element_word(const LieElement& e, const Word& v) {
  LieElement out;
  for (const auto& [w, c] : e) add_scaled(out, bracket_words(w, v), c);
  return out;
}

// For Lyndon u < v, uv is Lyndon with standard factorization (u, v) exactly when u is
// a letter or the right standard factor of u is >= v. Otherwise u = (u1, u2) and
// [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2].
inline LieElement bracket_words(const Word& u, const Word& v) {
  static Memo<std::pair<Word, Word>, LieElement> memo;
  if (u == v) return {};
  if (v < u) {
    LieElement out = bracket_words(v, u);
    for (auto& [w, c] : out) c = -c;
    return out;
  }
  return memo.get({u, v}, [&]() -> LieElement {
    if (u.size() == 1) {
      Word uv(u);
      uv.insert(uv.end(), v.begin(), v.end());
      return {{uv, 1}};
    }
    auto [u1, u2] = standard_factorization(u);
    if (!(u2 < v)) {
      Word uv(u);
      uv.insert(uv.end(), v.begin(), v.end());
      return {{uv, 1}};
    }
    LieElement out = bracket_word_element(u1, bracket_words(u2, v));
    add_scaled(out, bracket_element_word(bracket_words(u1, v), u2), 1);
    return out;
  });
}

} // namespace detail

/// [u, v] in the Lyndon basis; zero when the combined grading exceeds the truncation.
inline LieElement bracket_normal_form(const Word& u, const Word& v, std::optional<int> truncation = std::nullopt) {
  if (!is_lyndon(u) || !is_lyndon(v)) fail(ErrorKind::Usage, "bracket_normal_form takes Lyndon words");
  const int total = static_cast<int>(u.size() + v.size());
  if (truncation && total > *truncation) return {};
  require_cap(total <= Limits::global().max_lie_grading, "bracket grading " + std::to_string(total));
  return detail::bracket_words(u, v);
}

// ---------------------------------------------------------------- finite-dimensional graded Lie algebras

/// Basis elements with grading and weight, and the bracket table in that basis.
struct LieAlgebraModel {
  std::vector<std::string> names;
  std::vector<int> grading;
  std::vector<std::vector<int>> weight;
  std::vector<std::vector<std::vector<std::pair<int, Integer>>>> bracket; // [a][b] -> combination

  int dim() const { return static_cast<int>(names.size()); }
};

/// N_k(n) = L(V_n) / L_{>k}(V_n) with basis the Lyndon words of length <= k.
inline LieAlgebraModel free_nilpotent_model(int n, int k) {
  require_cap(n <= Limits::global().max_lie_rank, "Lie rank n=" + std::to_string(n));
  require_cap(k <= Limits::global().max_lie_step, "nilpotency step k=" + std::to_string(k));
  LieAlgebraModel m;
  std::map<Word, int> index;
  for (int j = 1; j <= k; ++j)
    for (const auto& w : lyndon_basis(n, j)) {
      index[w] = m.dim();
      std::string name;
      for (int x : w) name += std::to_string(x);
      m.names.push_back(name);
      m.grading.push_back(j);
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (int x : w) ++content[static_cast<std::size_t>(x - 1)];
      m.weight.push_back(content);
    }
  std::vector<Word> words(static_cast<std::size_t>(m.dim()));
  for (const auto& [w, i] : index) words[static_cast<std::size_t>(i)] = w;
  const auto d = static_cast<std::size_t>(m.dim());
  m.bracket.assign(d, std::vector<std::vector<std::pair<int, Integer>>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [w, c] : bracket_normal_form(words[a], words[b], k)) m.bracket[a][b].emplace_back(index.at(w), c);
  return m;
}

/// Heisenberg algebra on a_1..a_n, b_1..b_n, z with [a_i, b_i] = z, graded by 1 and 2,
/// with symplectic weights +e_i, -e_i and 0.
inline LieAlgebraModel heisenberg_model(int n) {
  require_cap(n <= Limits::global().max_lie_rank, "Heisenberg rank n=" + std::to_string(n));
  LieAlgebraModel m;
  auto unit = [&](int i, int s) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    if (i >= 0) v[static_cast<std::size_t>(i)] = s;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    m.names.push_back("a" + std::to_string(i + 1));
    m.grading.push_back(1);
    m.weight.push_back(unit(i, 1));
  }
  for (int i = 0; i < n; ++i) {
    m.names.push_back("b" + std::to_string(i + 1));
    m.grading.push_back(1);
    m.weight.push_back(unit(i, -1));
  }
  m.names.push_back("z");
  m.grading.push_back(2);
  m.weight.push_back(unit(-1, 0));
  const auto d = static_cast<std::size_t>(m.dim());
  m.bracket.assign(d, std::vector<std::vector<std::pair<int, Integer>>>(d));
  const int z = 2 * n;
  for (int i = 0; i < n; ++i) {
    m.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = {{z, 1}};
    m.bracket[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i)] = {{z, -1}};
  }
  return m;
}

// ---------------------------------------------------------------- Chevalley-Eilenberg slices

using Wedge = std::vector<int>; // strictly increasing basis indices

/// Degree-i chains of one weight (and optionally one grading): the wedges of i distinct
/// basis elements with that total weight.
struct ChainSlice {
  int degree = 0;
  std::optional<int> grading;
  std::vector<int> weight;
  std::vector<Wedge> basis;
};

inline ChainSlice build_chain_slice(const LieAlgebraModel& g, int i, const std::vector<int>& weight,
                                    std::optional<int> grading = std::nullopt) {
  ChainSlice s{i, grading, weight, {}};
  const int d = g.dim();
  Wedge cur;
  std::vector<int> remaining(weight);
  int grade_left = grading.value_or(0);
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == i) {
      if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }) && (!grading || grade_left == 0))
        s.basis.push_back(cur);
      return;
    }
    for (int b = start; b < d; ++b) {
      const auto& w = g.weight[static_cast<std::size_t>(b)];
      for (std::size_t t = 0; t < w.size(); ++t) remaining[t] -= w[t];
      grade_left -= g.grading[static_cast<std::size_t>(b)];
      cur.push_back(b);
      self(self, b + 1);
      cur.pop_back();
      grade_left += g.grading[static_cast<std::size_t>(b)];
      for (std::size_t t = 0; t < w.size(); ++t) remaining[t] += w[t];
    }
  };
  rec(rec, 0);
  return s;
}

/// d(x_1 ^ ... ^ x_i) = sum_{p<q} (-1)^{p+q+1} [x_p, x_q] ^ x_1 ^ ..(omit p, q).. ^ x_i.
inline std::map<Wedge, Integer> ce_boundary(const LieAlgebraModel& g, const Wedge& x) {
  std::map<Wedge, Integer> out;
  const std::size_t len = x.size();
  for (std::size_t p = 0; p < len; ++p)
    for (std::size_t q = p + 1; q < len; ++q) {
      const auto& br = g.bracket[static_cast<std::size_t>(x[p])][static_cast<std::size_t>(x[q])];
      if (br.empty()) continue;
      const int base_sign = ((p + q + 1) % 2 == 0) ? 1 : -1; // 1-based p+q+1 has the same parity
      Wedge rest;
      for (std::size_t t = 0; t < len; ++t)
        if (t != p && t != q) rest.push_back(x[t]);
      for (const auto& [c, coef] : br) {
        auto pos = std::lower_bound(rest.begin(), rest.end(), c);
        if (pos != rest.end() && *pos == c) continue;
        const long shift = pos - rest.begin();
        Wedge w(rest);
        w.insert(w.begin() + shift, c);
        Integer v = coef * ((shift % 2 == 0) ? base_sign : -base_sign);
        Integer& slot = out[w];
        slot += v;
        if (slot == 0) out.erase(w);
      }
    }
  return out;
}

struct SliceHomology {
  std::size_t chains = 0, rank_out = 0, rank_in = 0;
  long dimension() const { return static_cast<long>(chains) - static_cast<long>(rank_out) - static_cast<long>(rank_in); }
};

/// Homology of one (degree, weight[, grading]) slice. Every boundary composite is checked to vanish.
inline SliceHomology slice_homology(const LieAlgebraModel& g, int i, const std::vector<int>& weight,
                                    std::optional<int> grading = std::nullopt) {
  SliceHomology h;
  ChainSlice here = build_chain_slice(g, i, weight, grading);
  h.chains = here.basis.size();
  if (h.chains == 0) return h;

  std::map<Wedge, std::map<Wedge, Integer>> boundary_here;
  auto rank_of = [](const std::vector<std::map<Wedge, Integer>>& images) {
    std::map<Wedge, int> column;
    EchelonBasis e;
    for (const auto& img : images) {
      SparseRow row;
      for (const auto& [w, c] : img) {
        auto it = column.emplace(w, static_cast<int>(column.size())).first;
        row.emplace(it->second, c);
      }
      e.insert(std::move(row));
    }
    return e.rank();
  };

  if (i > 0) {
    std::vector<std::map<Wedge, Integer>> images;
    for (const auto& x : here.basis) {
      auto img = ce_boundary(g, x);
      boundary_here.emplace(x, img);
      images.push_back(std::move(img));
    }
    h.rank_out = rank_of(images);
  }

  ChainSlice above = build_chain_slice(g, i + 1, weight, grading);
  std::vector<std::map<Wedge, Integer>> images;
  for (const auto& y : above.basis) {
    auto img = ce_boundary(g, y);
    if (i > 0) {
      std::map<Wedge, Integer> twice;
      for (const auto& [x, c] : img) {
        auto it = boundary_here.find(x);
        if (it == boundary_here.end()) fail(ErrorKind::Internal, "boundary left the weight slice");
        for (const auto& [w, c2] : it->second) {
          Integer& slot = twice[w];
          slot += c * c2;
          if (slot == 0) twice.erase(w);
        }
      }
      if (!twice.empty()) fail(ErrorKind::Internal, "Chevalley-Eilenberg boundary does not square to zero");
    }
    images.push_back(std::move(img));
  }
  h.rank_in = rank_of(images);
  return h;
}

/// Alternating sum of chain dimensions of one weight slice (degrees 0..top).
inline long slice_euler_characteristic(const LieAlgebraModel& g, const std::vector<int>& weight, int top,
                                       std::optional<int> grading = std::nullopt) {
  long chi = 0;
  for (int i = 0; i <= top; ++i) {
    long c = static_cast<long>(build_chain_slice(g, i, weight, grading).basis.size());
    chi += (i % 2 == 0) ? c : -c;
  }
  return chi;
}

// ---------------------------------------------------------------- free nilpotent homology

/// Dominant-weight table of H_i(N_k(n)) in grading j.
inline WeightTable nilpotent_homology_weights(const LieAlgebraModel& g, int n, int i, int j) {
  WeightTable t{n, {}};
  for (const auto& mu : enumerate_partitions(j, n)) {
    std::vector<int> w(mu.parts());
    w.resize(static_cast<std::size_t>(n), 0);
    long dim = slice_homology(g, i, w).dimension();
    if (dim < 0) fail(ErrorKind::Internal, "negative homology dimension");
    if (dim > 0) t.add(w, dim);
  }
  return t;
}

/// H_i(N_k(n); Q) as a GL_n-module, in one grading j or summed over all gradings.
inline Decomposition nilpotent_homology(int n, int k, int i, std::optional<int> j = std::nullopt) {
  if (n < 1 || k < 1 || i < 0) fail(ErrorKind::Usage, "nilpotent_homology needs n, k >= 1 and i >= 0");
  require_cap(i <= Limits::global().max_lie_degree, "homological degree i=" + std::to_string(i));
  const int lo = j.value_or(i), hi = j.value_or(i * k);
  require_cap(hi <= Limits::global().max_lie_grading, "grading j=" + std::to_string(hi));
  LieAlgebraModel g = free_nilpotent_model(n, k);
  Decomposition out(Family::GL, n);
  for (int grade = lo; grade <= hi; ++grade) {
    WeightTable t = nilpotent_homology_weights(g, n, i, grade);
    for (const auto& [lambda, c] : schur_expand_weights(t, grade).terms()) out.add(PseudoPartition(lambda), c);
  }
  return out;
}

// ---------------------------------------------------------------- symplectic constructions

/// wedge^i of the standard Sp_2n-module: V(1^i) + V(1^{i-2}) + ... for i <= n.
inline Decomposition sp_wedge_decomposition(int n, int i) {
  if (i < 0) fail(ErrorKind::Usage, "degree must be nonnegative");
  if (i > n) fail(ErrorKind::Validity, "wedge decomposition requires i <= n (i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
  Decomposition out(Family::SP, n);
  for (int r = i; r >= 0; r -= 2) out.add(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), 1);
  return out;
}

/// H_i of the Heisenberg algebra of dimension 2n+1 as an Sp_2n-module.
inline Decomposition heisenberg_homology(int n, int i) {
  if (n < 1 || i < 0) fail(ErrorKind::Usage, "heisenberg_homology needs n >= 1 and i >= 0");
  if (i > 2 * n + 1) fail(ErrorKind::Usage, "homological degree exceeds 2n+1");
  LieAlgebraModel g = heisenberg_model(n);
  std::map<std::vector<int>, Integer> dominant;
  for (int d = 0; d <= i; ++d)
    for (const auto& mu : enumerate_partitions(d, n, 1)) {
      std::vector<int> w(mu.parts());
      w.resize(static_cast<std::size_t>(n), 0);
      long dim = slice_homology(g, i, w).dimension();
      if (dim > 0) dominant[w] = dim;
    }
  return decompose_sp_dominant(std::move(dominant), n);
}

} // namespace repstab
