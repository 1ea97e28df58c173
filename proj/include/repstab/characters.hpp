#pragma once

// Characters of S_n and of the hyperoctahedral group W_n = Z/2 wr S_n,
// class-function decomposition, Kronecker products, induction and branching.

#include "decomposition.hpp"
#include "symfunc.hpp"

#include <vector>

namespace repstab {

// ---------------------------------------------------------------- W_n classes

/// Conjugacy class of W_n: cycle lengths of positive and of negative cycles.
struct SignedCycleType {
  Partition pos;
  Partition neg;
  int size() const { return pos.size() + neg.size(); }
  friend auto operator<=>(const SignedCycleType&, const SignedCycleType&) = default;
  friend bool operator==(const SignedCycleType&, const SignedCycleType&) = default;
};

inline std::string to_string(const SignedCycleType& c) { return to_string(c.pos) + "|" + to_string(c.neg); }

namespace detail {
inline Integer wreath_factor(const Partition& p) {
  Integer z = 1;
  for (int i = 0; i < p.length();) {
    int j = i;
    while (j < p.length() && p[j] == p[i]) ++j;
    for (int t = i; t < j; ++t) z *= 2 * p[i];
    z *= factorial(j - i);
    i = j;
  }
  return z;
}
} // namespace detail

/// |C_{W_n}(g)| = prod over both cycle kinds of (2i)^{m_i} m_i!.
inline Integer centralizer_order(const SignedCycleType& c) {
  return detail::wreath_factor(c.pos) * detail::wreath_factor(c.neg);
}

inline Integer hyp_group_order(int n) {
  Integer r = factorial(n);
  r <<= static_cast<mp_bitcnt_t>(n);
  return r;
}

inline std::vector<SignedCycleType> hyp_classes(int n) {
  std::vector<SignedCycleType> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : enumerate_partitions(k))
      for (const auto& b : enumerate_partitions(n - k)) out.push_back({a, b});
  return out;
}

/// Irreducible W_n labels (lambda^+, lambda^-) with |lambda^+| + |lambda^-| = n.
inline std::vector<DoublePartition> hyp_irreducibles(int n) {
  std::vector<DoublePartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : enumerate_partitions(k))
      for (const auto& b : enumerate_partitions(n - k)) out.push_back({a, b});
  return out;
}

// ---------------------------------------------------------------- W_n characters

namespace detail {

// Sub-multisets of a partition, as (taken, rest) pairs of a given size.
inline void split_partition(const Partition& p, int want, std::vector<std::pair<Partition, Partition>>& out) {
  std::vector<std::pair<int, int>> groups; // (part, multiplicity)
  for (int part : p.parts()) {
    if (!groups.empty() && groups.back().first == part) ++groups.back().second;
    else groups.emplace_back(part, 1);
  }
  std::vector<int> taken, rest;
  auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
    if (g == groups.size()) {
      if (remaining == 0) out.emplace_back(Partition(taken), Partition(rest));
      return;
    }
    auto [part, m] = groups[g];
    for (int t = 0; t <= m && t * part <= remaining; ++t) {
      std::size_t ts = taken.size(), rs = rest.size();
      taken.insert(taken.end(), static_cast<std::size_t>(t), part);
      rest.insert(rest.end(), static_cast<std::size_t>(m - t), part);
      self(self, g + 1, remaining - t * part);
      taken.resize(ts);
      rest.resize(rs);
    }
  };
  rec(rec, 0, want);
}

} // namespace detail

/// Irreducible character of W_n at a class (alpha, beta).
/// (lambda, 0) pulls back chi_lambda along W_n -> S_n; (0, lambda) twists it by the
/// character that is -1 on each sign flip; mixed labels are induced from W_k x W_{n-k}.
inline long character_hyp(const DoublePartition& label, const SignedCycleType& c) {
  if (label.size() != c.size())
    fail(ErrorKind::Usage, "character_hyp: label has size " + std::to_string(label.size()) + " but class has size " +
                               std::to_string(c.size()));
  if (label.minus.empty()) return character_sym(label.plus, merge(c.pos, c.neg));
  if (label.plus.empty()) {
    long v = character_sym(label.minus, merge(c.pos, c.neg));
    return c.neg.length() % 2 == 0 ? v : -v;
  }
  static Memo<std::pair<DoublePartition, SignedCycleType>, long> memo;
  return memo.get({label, c}, [&]() -> long {
    const int k = label.plus.size();
    const Integer zc = centralizer_order(c);
    Integer total = 0;
    for (int kp = 0; kp <= k; ++kp) {
      std::vector<std::pair<Partition, Partition>> pos_splits, neg_splits;
      detail::split_partition(c.pos, kp, pos_splits);
      if (pos_splits.empty()) continue;
      detail::split_partition(c.neg, k - kp, neg_splits);
      for (const auto& [p1, p2] : pos_splits)
        for (const auto& [n1, n2] : neg_splits) {
          SignedCycleType c1{p1, n1}, c2{p2, n2};
          long f1 = character_hyp({label.plus, Partition{}}, c1);
          if (f1 == 0) continue;
          long f2 = character_hyp({Partition{}, label.minus}, c2);
          if (f2 == 0) continue;
          Integer weight = zc / (centralizer_order(c1) * centralizer_order(c2));
          total += weight * f1 * f2;
        }
    }
    return to_mult(total);
  });
}

inline Integer dim_hyp(const DoublePartition& label) {
  return binomial(label.size(), label.plus.size()) * num_standard_tableaux(label.plus) *
         num_standard_tableaux(label.minus);
}

// ---------------------------------------------------------------- class functions

/// Rational class function on S_n (classes in decreasing lex order) or on W_n
/// (classes in hyp_classes order).
struct ClassFunction {
  Family group = Family::SYM; // SYM or HYP
  int n = 0;
  std::vector<Rational> values;

  template <class F>
  static ClassFunction sym(int n, F&& f) {
    ClassFunction cf{Family::SYM, n, {}};
    for (const auto& rho : enumerate_partitions(n)) cf.values.emplace_back(f(rho));
    return cf;
  }
  template <class F>
  static ClassFunction hyp(int n, F&& f) {
    ClassFunction cf{Family::HYP, n, {}};
    for (const auto& c : hyp_classes(n)) cf.values.emplace_back(f(c));
    return cf;
  }

  static ClassFunction irreducible(const Partition& lambda) {
    return sym(lambda.size(), [&](const CycleType& rho) { return Rational(character_sym(lambda, rho)); });
  }
  static ClassFunction irreducible(const DoublePartition& label) {
    return hyp(label.size(), [&](const SignedCycleType& c) { return Rational(character_hyp(label, c)); });
  }

  ClassFunction& operator*=(const ClassFunction& o) {
    if (group != o.group || n != o.n) fail(ErrorKind::Usage, "class functions on different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] *= o.values[i];
    return *this;
  }
  ClassFunction& operator+=(const ClassFunction& o) {
    if (group != o.group || n != o.n) fail(ErrorKind::Usage, "class functions on different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// <f, g> = (1/|G|) sum_g f(g) g(g) for real-valued class functions.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group != g.group || f.n != g.n) fail(ErrorKind::Usage, "class functions on different groups");
  Rational total = 0;
  if (f.group == Family::SYM) {
    auto classes = enumerate_partitions(f.n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      total += f.values[i] * g.values[i] / Rational(centralizer_order(classes[i]));
  } else {
    auto classes = hyp_classes(f.n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      total += f.values[i] * g.values[i] / Rational(centralizer_order(classes[i]));
  }
  return total;
}

namespace detail {
inline Label unpadded_label(const Partition& full) {
  return full.empty() ? Partition{} : unpad(full).first;
}
} // namespace detail

/// Multiplicities <f, chi> over all irreducibles, in unpadded coordinates.
/// Non-integral multiplicities always fail; negative ones fail unless allow_virtual.
inline Decomposition decompose(const ClassFunction& f, bool allow_virtual = false) {
  Decomposition out(f.group, f.n, allow_virtual);
  auto record = [&](const Label& full_name, const Label& key, const Rational& m) {
    if (m.get_den() != 1)
      fail(ErrorKind::NotRepresentation, "not a character: multiplicity of (" + to_string(full_name) + ") is " + m.get_str());
    if (m < 0 && !allow_virtual)
      fail(ErrorKind::NotRepresentation, "not a character: multiplicity of (" + to_string(full_name) + ") is " + m.get_str());
    out.add(key, to_mult(m));
  };
  if (f.group == Family::SYM) {
    const auto classes = enumerate_partitions(f.n);
    for (const auto& lambda : enumerate_partitions(f.n)) {
      Rational m = 0;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (f.values[i] != 0) m += f.values[i] * character_sym(lambda, classes[i]) / Rational(centralizer_order(classes[i]));
      record(lambda, detail::unpadded_label(lambda), m);
    }
  } else if (f.group == Family::HYP) {
    const auto classes = hyp_classes(f.n);
    for (const auto& label : hyp_irreducibles(f.n)) {
      Rational m = 0;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (f.values[i] != 0) m += f.values[i] * character_hyp(label, classes[i]) / Rational(centralizer_order(classes[i]));
      record(label, unpad(label), m);
    }
  } else {
    fail(ErrorKind::Usage, "decompose: class functions live on S_n or W_n");
  }
  return out;
}

// ---------------------------------------------------------------- S_n constructions

/// V(lambda)_n (x) V(mu)_n over S_n, unpadded.
inline Decomposition kronecker(const Partition& lambda, const Partition& mu, int n) {
  Partition a = pad(lambda, n), b = pad(mu, n);
  ClassFunction f = ClassFunction::irreducible(a);
  f *= ClassFunction::irreducible(b);
  return decompose(f);
}

/// Class data of a subgroup H <= S_k: each H-class (or union of H-classes on which
/// all characters of interest agree) with its S_k cycle type and size.
struct SubgroupClassData {
  struct Entry {
    CycleType type;
    Integer size;
  };
  int k = 0;
  std::string name;
  std::vector<Entry> classes;

  Integer order() const {
    Integer s = 0;
    for (const auto& e : classes) s += e.size;
    return s;
  }
  void validate(const Integer& expected_order) const {
    for (const auto& e : classes)
      if (e.type.size() != k) fail(ErrorKind::Usage, "subgroup class type is not a cycle type of S_" + std::to_string(k));
    if (order() != expected_order)
      fail(ErrorKind::Usage, "subgroup class sizes sum to " + order().get_str() + ", not |H| = " + expected_order.get_str());
  }
};

/// Ind_{H x S_{n-k}}^{S_n}(V [x] Q), unpadded. chi_v lists the character of V per entry of H's class data.
inline Decomposition induce_hemmer(const SubgroupClassData& H, const Integer& order, const std::vector<Rational>& chi_v,
                                   int n) {
  H.validate(order);
  if (chi_v.size() != H.classes.size()) fail(ErrorKind::Usage, "character length does not match subgroup class data");
  if (n < H.k) fail(ErrorKind::Usage, "induce_hemmer requires n >= k");
  const int rest = n - H.k;
  const auto rest_classes = enumerate_partitions(rest);
  Decomposition out(Family::SYM, n);
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational m = 0;
    for (std::size_t c = 0; c < H.classes.size(); ++c) {
      if (chi_v[c] == 0) continue;
      Rational inner = 0;
      for (const auto& tau : rest_classes)
        inner += Rational(character_sym(lambda, merge(H.classes[c].type, tau))) / Rational(centralizer_order(tau));
      m += Rational(H.classes[c].size) * chi_v[c] * inner;
    }
    m /= Rational(order);
    if (m.get_den() != 1 || m < 0)
      fail(ErrorKind::NotRepresentation, "induce_hemmer: supplied function is not a character of H");
    out.add(detail::unpadded_label(lambda), to_mult(m));
  }
  return out;
}

/// A subgroup of S_k together with its rational irreducible characters.
struct SubgroupWithCharacters {
  SubgroupClassData data;
  Integer order;
  std::vector<std::pair<std::string, std::vector<Rational>>> irreducibles;
};

/// Every subgroup of S_k up to conjugacy for k <= 3, with its irreducibles over Q.
inline std::vector<SubgroupWithCharacters> small_subgroups(int k) {
  using P = Partition;
  std::vector<SubgroupWithCharacters> out;
  auto R = [](long v) { return Rational(v); };
  auto trivial_group = [&](int kk) {
    std::vector<int> ones(static_cast<std::size_t>(kk), 1);
    return SubgroupWithCharacters{{kk, "1", {{P(ones), 1}}}, 1, {{"trivial", {R(1)}}}};
  };
  switch (k) {
  case 0:
  case 1: out.push_back(trivial_group(k)); break;
  case 2:
    out.push_back(trivial_group(2));
    out.push_back({{2, "S2", {{P{1, 1}, 1}, {P{2}, 1}}}, 2, {{"trivial", {R(1), R(1)}}, {"sign", {R(1), R(-1)}}}});
    break;
  case 3:
    out.push_back(trivial_group(3));
    out.push_back({{3, "C2", {{P{1, 1, 1}, 1}, {P{2, 1}, 1}}}, 2, {{"trivial", {R(1), R(1)}}, {"sign", {R(1), R(-1)}}}});
    // Over Q the two nontrivial linear characters of C3 fuse into one 2-dimensional irreducible.
    out.push_back({{3, "C3", {{P{1, 1, 1}, 1}, {P{3}, 2}}}, 3, {{"trivial", {R(1), R(1)}}, {"rotation", {R(2), R(-1)}}}});
    out.push_back({{3, "S3", {{P{1, 1, 1}, 1}, {P{2, 1}, 3}, {P{3}, 2}}},
                   6,
                   {{"trivial", {R(1), R(1), R(1)}}, {"sign", {R(1), R(-1), R(1)}}, {"standard", {R(2), R(0), R(-1)}}}});
    break;
  default: fail(ErrorKind::Usage, "subgroup catalogue covers k <= 3");
  }
  return out;
}

/// V(lambda)_n restricted to S_{n-steps}, unpadded.
inline Decomposition restrict_sym(const Partition& lambda, int n, int steps) {
  if (steps < 0 || steps >= n) fail(ErrorKind::Usage, "restrict_sym requires 0 <= steps < n");
  std::map<Partition, Mult, std::greater<>> cur{{pad(lambda, n), 1}};
  for (int s = 0; s < steps; ++s) {
    std::map<Partition, Mult, std::greater<>> next;
    for (const auto& [shape, m] : cur) {
      const auto& parts = shape.parts();
      for (std::size_t r = 0; r < parts.size(); ++r) {
        if (r + 1 < parts.size() && parts[r + 1] == parts[r]) continue; // not a corner
        std::vector<int> smaller(parts);
        --smaller[r];
        next[Partition(std::move(smaller))] += m;
      }
    }
    cur = std::move(next);
  }
  Decomposition out(Family::SYM, n - steps);
  for (const auto& [shape, m] : cur) out.add(detail::unpadded_label(shape), m);
  return out;
}

// ---------------------------------------------------------------- W_n constructions

/// Ind_{W_k x W_{n-k}}^{W_n}(V_a [x] V_b), unpadded.
inline Decomposition induce_hyp_product(const DoublePartition& a, const DoublePartition& b) {
  const int n = a.size() + b.size();
  Decomposition out(Family::HYP, n);
  SchurVector plus = lr(a.plus, b.plus), minus = lr(a.minus, b.minus);
  for (const auto& [np, cp] : plus.terms())
    for (const auto& [nm, cm] : minus.terms()) out.add(unpad(DoublePartition{np, nm}), cp * cm);
  return out;
}

} // namespace repstab
