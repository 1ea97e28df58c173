#pragma once

// Tableau statistics: descent sets and major indices of standard and double
// tableaux, coinvariant algebra multiplicities (types A and B), homogeneous
// polynomials, equivariant Schubert cohomology and rank-selected Lefschetz modules.

#include "characters.hpp"

#include <functional>
#include <set>

namespace repstab {

// ---------------------------------------------------------------- standard tableaux

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int size() const { return shape.size(); }

  /// Row index of each label 1..n (entry 0 unused).
  std::vector<int> row_of() const {
    std::vector<int> where(static_cast<std::size_t>(size()) + 1, -1);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int x : rows[r]) where[static_cast<std::size_t>(x)] = static_cast<int>(r);
    return where;
  }

  /// i is a descent when i+1 sits in a strictly lower row than i.
  std::vector<int> descents() const {
    auto where = row_of();
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (where[static_cast<std::size_t>(i) + 1] > where[static_cast<std::size_t>(i)]) d.push_back(i);
    return d;
  }

  int maj() const {
    int m = 0;
    for (int d : descents()) m += d;
    return m;
  }
};

/// Visits every standard tableau of the shape. Labels are placed from the largest
/// down, each into an outer corner of what remains.
inline void for_each_standard_tableau(const Partition& shape, const std::function<void(const StandardTableau&)>& f) {
  StandardTableau t{shape, {}};
  for (int len : shape.parts()) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> remaining(shape.parts());
  auto rec = [&](auto&& self, int label) -> void {
    if (label == 0) {
      f(t);
      return;
    }
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      int len = remaining[r];
      if (len == 0) continue;
      if (r + 1 < remaining.size() && remaining[r + 1] == len) continue; // not a corner
      t.rows[r][static_cast<std::size_t>(len - 1)] = label;
      --remaining[r];
      self(self, label - 1);
      ++remaining[r];
    }
  };
  rec(rec, shape.size());
}

inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  for_each_standard_tableau(shape, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------- double tableaux

/// Joint filling of (plus, minus). The minus diagram is drawn above the plus diagram.
struct DoubleTableau {
  DoublePartition shape;
  std::vector<std::vector<int>> plus_rows, minus_rows;

  int size() const { return shape.size(); }

  /// Global row of each label: minus rows first, then plus rows.
  std::vector<int> row_of() const {
    std::vector<int> where(static_cast<std::size_t>(size()) + 1, -1);
    const int offset = static_cast<int>(minus_rows.size());
    for (std::size_t r = 0; r < minus_rows.size(); ++r)
      for (int x : minus_rows[r]) where[static_cast<std::size_t>(x)] = static_cast<int>(r);
    for (std::size_t r = 0; r < plus_rows.size(); ++r)
      for (int x : plus_rows[r]) where[static_cast<std::size_t>(x)] = offset + static_cast<int>(r);
    return where;
  }

  bool top_label_in_minus() const {
    for (const auto& row : minus_rows)
      for (int x : row)
        if (x == size()) return true;
    return false;
  }

  /// Flag descents j < n, plus n itself when n lies in the minus diagram.
  std::vector<int> flag_descents() const {
    auto where = row_of();
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (where[static_cast<std::size_t>(i) + 1] > where[static_cast<std::size_t>(i)]) d.push_back(i);
    if (top_label_in_minus()) d.push_back(size());
    return d;
  }

  /// 2 * (sum of flag descents) + |minus|. With literal=false the descent n is left
  /// out of the sum (the statistic that matches the graded W_n character).
  int flag_major_index(bool literal = false) const {
    int s = 0;
    for (int d : flag_descents())
      if (literal || d < size()) s += d;
    return 2 * s + shape.minus.size();
  }
};

inline void for_each_double_tableau(const DoublePartition& shape, const std::function<void(const DoubleTableau&)>& f) {
  DoubleTableau t{shape, {}, {}};
  for (int len : shape.plus.parts()) t.plus_rows.emplace_back(static_cast<std::size_t>(len), 0);
  for (int len : shape.minus.parts()) t.minus_rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> rem_plus(shape.plus.parts()), rem_minus(shape.minus.parts());
  auto rec = [&](auto&& self, int label) -> void {
    if (label == 0) {
      f(t);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      auto& rem = side == 0 ? rem_plus : rem_minus;
      auto& rows = side == 0 ? t.plus_rows : t.minus_rows;
      for (std::size_t r = 0; r < rem.size(); ++r) {
        int len = rem[r];
        if (len == 0 || (r + 1 < rem.size() && rem[r + 1] == len)) continue;
        rows[r][static_cast<std::size_t>(len - 1)] = label;
        --rem[r];
        self(self, label - 1);
        ++rem[r];
      }
    }
  };
  rec(rec, shape.size());
}

// ---------------------------------------------------------------- counting by dynamic programming

namespace detail {

using QPoly = std::vector<Integer>; // coefficient of q^k at index k

inline void add_shifted(QPoly& into, const QPoly& from, int shift) {
  if (into.size() < from.size() + static_cast<std::size_t>(shift)) into.resize(from.size() + static_cast<std::size_t>(shift));
  for (std::size_t k = 0; k < from.size(); ++k) into[k + static_cast<std::size_t>(shift)] += from[k];
}

// Rows are indexed globally (minus rows first, then plus rows at offset `kMinusRows`).
constexpr int kMinusRows = 1 << 10;

struct JointShape {
  std::vector<int> plus, minus;
  auto operator<=>(const JointShape&) const = default;
};

// Generating function, by sum of descents j < size, of joint tableaux whose largest
// label sits in global row `top`. Descent j is recorded when j+1 is strictly lower.
// A plain standard tableau is the case of an empty minus diagram.
class DescentPolys {
public:
  const QPoly& get(const JointShape& s, int top) {
    auto key = std::make_pair(s, top);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QPoly out;
    int size = 0;
    for (int x : s.plus) size += x;
    for (int x : s.minus) size += x;
    JointShape rest = s;
    if (!remove_at(rest, top)) fail(ErrorKind::Internal, "row is not a corner");
    if (size == 1) {
      out = {1};
    } else {
      for (int r : corners(rest)) {
        const QPoly& sub = get(rest, r);
        add_shifted(out, sub, top > r ? size - 1 : 0);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  static std::vector<int> corners(const JointShape& s) {
    std::vector<int> out;
    auto scan = [&](const std::vector<int>& rows, int offset) {
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r] > 0 && (r + 1 == rows.size() || rows[r + 1] < rows[r])) out.push_back(offset + static_cast<int>(r));
    };
    scan(s.minus, 0);
    scan(s.plus, kMinusRows);
    return out;
  }

private:
  static bool remove_at(JointShape& s, int row) {
    auto& rows = row >= kMinusRows ? s.plus : s.minus;
    auto r = static_cast<std::size_t>(row >= kMinusRows ? row - kMinusRows : row);
    if (r >= rows.size() || rows[r] == 0 || (r + 1 < rows.size() && rows[r + 1] == rows[r])) return false;
    --rows[r];
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return true;
  }

  std::map<std::pair<JointShape, int>, QPoly> memo_;
};

inline DescentPolys& descent_polys() {
  thread_local DescentPolys polys;
  return polys;
}

// Counts joint tableaux whose descent set (j < size) equals `want` restricted to
// {1..size-1}; optionally only those whose largest label lies in the plus diagram.
inline Integer count_exact_descents(const JointShape& shape, const std::set<int>& want, bool top_in_plus) {
  std::map<std::pair<JointShape, int>, Integer> memo;
  auto rec = [&](auto&& self, const JointShape& s, int top, int size) -> Integer {
    auto key = std::make_pair(s, top);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    JointShape rest = s;
    auto& rows = top >= kMinusRows ? rest.plus : rest.minus;
    auto r = static_cast<std::size_t>(top >= kMinusRows ? top - kMinusRows : top);
    --rows[r];
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    Integer total = 0;
    if (size == 1) {
      total = 1;
    } else {
      const bool need = want.count(size - 1) > 0;
      for (int c : DescentPolys::corners(rest))
        if ((top > c) == need) total += self(self, rest, c, size - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  int size = 0;
  for (int x : shape.plus) size += x;
  for (int x : shape.minus) size += x;
  if (size == 0) return 1;
  Integer total = 0;
  for (int c : DescentPolys::corners(shape))
    if (!top_in_plus || c >= kMinusRows) total += rec(rec, shape, c, size);
  return total;
}

inline int count_partitions_bounded(int k, int max_part) {
  std::vector<long> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[0] = 1;
  for (int p = 1; p <= std::min(k, max_part); ++p)
    for (int s = p; s <= k; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - p)];
  return static_cast<int>(ways[static_cast<std::size_t>(k)]);
}

} // namespace detail

/// Major-index generating function of the standard tableaux of a shape.
inline detail::QPoly maj_generating_function(const Partition& shape) {
  detail::QPoly out;
  detail::JointShape s{shape.parts(), {}};
  if (shape.empty()) return {1};
  for (int c : detail::DescentPolys::corners(s)) detail::add_shifted(out, detail::descent_polys().get(s, c), 0);
  return out;
}

// ---------------------------------------------------------------- type A coinvariants

/// Multiplicity of V(lambda)_n in the degree-i piece of the coinvariant algebra of S_n.
inline Integer coinv_mult(const Partition& lambda, int n, int i) {
  if (i < 0) fail(ErrorKind::Usage, "degree must be nonnegative");
  if (2L * i > static_cast<long>(n) * (n - 1))
    fail(ErrorKind::Validity, "coinvariant degree " + std::to_string(i) + " exceeds C(n,2) at n=" + std::to_string(n));
  require_cap(n <= Limits::global().max_sym_n * 2, "coinvariant rank " + std::to_string(n));
  auto poly = maj_generating_function(pad(lambda, n));
  return static_cast<std::size_t>(i) < poly.size() ? poly[static_cast<std::size_t>(i)] : Integer(0);
}

inline Decomposition coinv_decomposition(int n, int i) {
  Decomposition out(Family::SYM, n);
  for (const auto& mu : enumerate_partitions(n)) {
    Partition core = unpad(mu).first;
    Integer m = coinv_mult(core, n, i);
    if (m != 0) out.add(core, to_mult(m));
  }
  return out;
}

/// Trace of a permutation of cycle type rho on R_i: coefficient of q^i in
/// prod_{j<=n} (1 - q^j) / prod_{cycles c} (1 - q^{|c|}).
inline Rational coinv_graded_character(const CycleType& rho, int i) {
  if (i < 0) return 0;
  const int n = rho.size();
  std::vector<Integer> series(static_cast<std::size_t>(i) + 1, 0);
  series[0] = 1;
  for (int j = 1; j <= n; ++j)
    for (int k = i; k >= j; --k) series[static_cast<std::size_t>(k)] -= series[static_cast<std::size_t>(k - j)];
  for (int len : rho.parts())
    for (int k = len; k <= i; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - len)];
  return Rational(series[static_cast<std::size_t>(i)]);
}

// ---------------------------------------------------------------- type B coinvariants

/// Multiplicity of V(label)_n in the degree-i piece of the coinvariant algebra of W_n,
/// as the number of double tableaux of shape label[n] with flag major index i.
/// literal=true also counts the descent n (when n is in the minus diagram) in the sum.
inline Integer coinv_b_mult(const DoublePartition& label, int n, int i, bool literal = false) {
  if (i < 0) fail(ErrorKind::Usage, "degree must be nonnegative");
  if (static_cast<long>(i) > static_cast<long>(n) * n)
    fail(ErrorKind::Validity, "W_n coinvariant degree " + std::to_string(i) + " exceeds n^2 at n=" + std::to_string(n));
  require_cap(n <= Limits::global().max_sym_n * 2, "coinvariant rank " + std::to_string(n));
  DoublePartition full = pad(label, n);
  detail::JointShape s{full.plus.parts(), full.minus.parts()};
  const int base = full.minus.size();
  Integer total = 0;
  if (n == 0) return i == 0 ? 1 : 0;
  for (int c : detail::DescentPolys::corners(s)) {
    const auto& poly = detail::descent_polys().get(s, c);
    int extra = base + ((literal && c < detail::kMinusRows) ? 2 * n : 0);
    int k = i - extra;
    if (k < 0 || k % 2 != 0) continue;
    auto idx = static_cast<std::size_t>(k / 2);
    if (idx < poly.size()) total += poly[idx];
  }
  return total;
}

inline Decomposition coinv_b_decomposition(int n, int i, bool literal = false) {
  Decomposition out(Family::HYP, n);
  for (const auto& full : hyp_irreducibles(n)) {
    DoublePartition core = unpad(full);
    Integer m = coinv_b_mult(core, n, i, literal);
    if (m != 0) out.add(core, to_mult(m));
  }
  return out;
}

/// Trace of a signed permutation on the degree-i piece of the W_n coinvariant algebra:
/// coefficient of q^i in prod_{j<=n}(1 - q^{2j}) / prod(1 - q^{|c|}) prod(1 + q^{|c|}),
/// positive cycles in the first product and negative cycles in the second.
inline Rational coinv_b_graded_character(const SignedCycleType& c, int i) {
  if (i < 0) return 0;
  const int n = c.pos.size() + c.neg.size();
  std::vector<Integer> series(static_cast<std::size_t>(i) + 1, 0);
  series[0] = 1;
  for (int j = 1; j <= n; ++j)
    for (int k = i; k >= 2 * j; --k) series[static_cast<std::size_t>(k)] -= series[static_cast<std::size_t>(k - 2 * j)];
  for (int len : c.pos.parts())
    for (int k = len; k <= i; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - len)];
  for (int len : c.neg.parts())
    for (int k = len; k <= i; ++k) series[static_cast<std::size_t>(k)] -= series[static_cast<std::size_t>(k - len)];
  return Rational(series[static_cast<std::size_t>(i)]);
}

// ---------------------------------------------------------------- polynomials and Schubert varieties

/// Multiplicity of V(lambda)_n in the homogeneous polynomials of degree i in n variables.
inline Integer poly_mult(const Partition& lambda, int n, int i) {
  if (i < 0) return 0;
  pad(lambda, n);
  const long top = static_cast<long>(n) * (n - 1) / 2;
  Integer total = 0;
  for (int j = 0; j <= i && j <= top; ++j) {
    Integer r = coinv_mult(lambda, n, j);
    if (r != 0) total += r * detail::count_partitions_bounded(i - j, n);
  }
  return total;
}

/// Permutation in one-line notation on 1..m.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
        fail(ErrorKind::Usage, "not a permutation in one-line notation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int a) const { return a <= size() ? w_[static_cast<std::size_t>(a - 1)] : a; }
  const std::vector<int>& one_line() const { return w_; }

  /// Number of inversions.
  int length() const {
    int inv = 0;
    for (std::size_t a = 0; a < w_.size(); ++a)
      for (std::size_t b = a + 1; b < w_.size(); ++b) inv += w_[a] > w_[b];
    return inv;
  }

  /// The same permutation on 1..m (m >= size), fixing the added points.
  Permutation extended(int m) const {
    std::vector<int> v(w_);
    for (int a = size() + 1; a <= m; ++a) v.push_back(a);
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    const int m = std::max(a.size(), b.size());
    for (int x = 1; x <= m; ++x)
      if (a(x) != b(x)) return false;
    return true;
  }

private:
  std::vector<int> w_;
};

inline Permutation parse_permutation(std::string_view s) {
  std::string text(s);
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    v = detail::parse_int_list(text);
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') fail(ErrorKind::Usage, "bad permutation '" + text + "'");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

inline std::string to_string(const Permutation& p) { return detail::join(p.one_line()); }

/// Bruhat order via rank matrices: v <= w iff #{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k}
/// for all i, k. Permutations of different sizes are compared after adding fixed points.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int m = std::max(v.size(), w.size());
  for (int k = 1; k <= m; ++k) {
    int cv = 0, cw = 0;
    for (int i = 1; i <= m; ++i) {
      cv += v(i) >= k;
      cw += w(i) >= k;
      if (cv > cw) return false;
    }
  }
  return true;
}

inline std::vector<Permutation> all_permutations(int m) {
  require_cap(m <= 9, "permutation enumeration of S_" + std::to_string(m));
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// #{v <= w : length(v) = i}: the ordinary Betti numbers of the Schubert variety.
inline Integer schubert_betti(const Permutation& w, int i) {
  Integer count = 0;
  for (const auto& v : all_permutations(w.size()))
    if (v.length() == i && bruhat_leq(v, w)) ++count;
  return count;
}

/// Multiplicity of V(lambda)_n in the degree-i equivariant cohomology of the Schubert
/// variety of w: the sum over v <= w of the polynomial multiplicity in degree i - length(v).
inline Integer schubert_equivariant_mult(const Permutation& w, int n, int i, const Partition& lambda) {
  if (w.size() > n) fail(ErrorKind::Usage, "permutation has more letters than the rank");
  pad(lambda, n);
  Integer total = 0;
  for (const auto& v : all_permutations(w.size())) {
    int l = v.length();
    if (l <= i && bruhat_leq(v, w)) total += poly_mult(lambda, n, i - l);
  }
  return total;
}

inline Decomposition schubert_decomposition(const Permutation& w, int n, int i) {
  Decomposition out(Family::SYM, n);
  for (const auto& mu : enumerate_partitions(n)) {
    Partition core = unpad(mu).first;
    Integer m = schubert_equivariant_mult(w, n, i, core);
    if (m != 0) out.add(core, to_mult(m));
  }
  return out;
}

// ---------------------------------------------------------------- rank-selected Lefschetz modules

/// Multiplicity of V(lambda)_n in (-1)^{|S|-1}(L_n(S) + Q): standard tableaux of shape
/// lambda[n] with descent set exactly S intersected with {1..n-1}. With raw=true the
/// multiplicity in L_n(S) itself is returned, (-1)^{|S|-1} * count - [lambda = ()].
inline Integer lefschetz_rank_selected(const std::set<int>& S, int n, const Partition& lambda, bool raw = false) {
  std::set<int> want;
  for (int s : S)
    if (s >= 1 && s <= n - 1) want.insert(s);
  Integer count = detail::count_exact_descents({pad(lambda, n).parts(), {}}, want, false);
  if (!raw) return count;
  const int sign = (S.size() % 2 == 1) ? 1 : -1;
  return sign * count - (lambda.empty() ? 1 : 0);
}

inline Decomposition lefschetz_decomposition(const std::set<int>& S, int n, bool raw = false) {
  Decomposition out(Family::SYM, n, raw);
  for (const auto& mu : enumerate_partitions(n)) {
    Partition core = unpad(mu).first;
    Integer m = lefschetz_rank_selected(S, n, core, raw);
    if (m != 0) out.add(core, to_mult(m));
  }
  return out;
}

/// Cross-polytope analogue: double tableaux of shape label[n] whose flag descent set is
/// exactly S intersected with {1..n-1}. A tableau with n in the minus diagram has n in its
/// flag descent set and so never qualifies.
inline Integer cross_polytope_lefschetz(const std::set<int>& S, int n, const DoublePartition& label) {
  std::set<int> want;
  for (int s : S)
    if (s >= 1 && s <= n - 1) want.insert(s);
  DoublePartition full = pad(label, n);
  return detail::count_exact_descents({full.plus.parts(), full.minus.parts()}, want, true);
}

inline Decomposition cross_polytope_decomposition(const std::set<int>& S, int n) {
  Decomposition out(Family::HYP, n);
  for (const auto& full : hyp_irreducibles(n)) {
    DoublePartition core = unpad(full);
    Integer m = cross_polytope_lefschetz(S, n, core);
    if (m != 0) out.add(core, to_mult(m));
  }
  return out;
}

inline std::set<int> parse_int_set(std::string_view s) {
  std::set<int> out;
  if (s.empty() || s == "{}" || s == "-") return out;
  for (int x : detail::parse_int_list(s)) {
    if (x < 1) fail(ErrorKind::Usage, "set elements must be positive");
    out.insert(x);
  }
  return out;
}

} // namespace repstab
