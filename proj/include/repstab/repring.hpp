#pragma once

// Representation rings of GL_n, SL_n and Sp_2n (plus S_n, W_n through characters):
// tensor products, restrictions, Schur functors, dimensions, division, mixed-tensor names.

#include "characters.hpp"
#include "weights.hpp"

namespace repstab {

// ---------------------------------------------------------------- dimensions

inline Integer dim_gl(const PseudoPartition& lambda, int n) {
  require_valid(Family::GL, lambda, n);
  std::vector<int> c = gl_coords(lambda, n);
  const int shift = n == 0 ? 0 : c.back();
  for (int& x : c) x -= shift;
  return schur_dimension(Partition(c), n);
}

/// Weyl dimension formula for type C_n with rho = (n, ..., 1).
inline Integer dim_sp(const Partition& lambda, int n) {
  require_valid(Family::SP, lambda, n);
  Integer num = 1, den = 1;
  std::vector<long> l(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = n - i;
    l[static_cast<std::size_t>(i)] = lambda[i] + n - i;
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      num *= (l[a] - l[b]) * (l[a] + l[b]);
      den *= (r[a] - r[b]) * (r[a] + r[b]);
    }
    num *= l[a];
    den *= r[a];
  }
  return num / den;
}

/// Dimension of one irreducible of any family (labels unpadded where applicable).
inline Integer dim_irreducible(Family family, const Label& label, int n) {
  require_valid(family, label, n);
  switch (family) {
  case Family::SYM: return num_standard_tableaux(pad(std::get<Partition>(label), n));
  case Family::HYP: return dim_hyp(pad(std::get<DoublePartition>(label), n));
  case Family::GL: return dim_gl(std::get<PseudoPartition>(label), n);
  case Family::SL: return dim_gl(PseudoPartition(std::get<Partition>(label)), n);
  case Family::SP: return dim_sp(std::get<Partition>(label), n);
  }
  return 0;
}

inline Integer dimension(const Decomposition& d) {
  Integer total = 0;
  for (const auto& [l, m] : d.terms()) total += dim_irreducible(d.family(), l, d.n()) * m;
  return total;
}

// ---------------------------------------------------------------- GL / SL tensor

namespace detail {

/// Splits a GL label at rank n into (partition lambda-bar, determinant power lambda_n).
inline std::pair<Partition, int> untwist(const PseudoPartition& p, int n) {
  std::vector<int> c = gl_coords(p, n);
  int shift = n == 0 ? 0 : c.back();
  for (int& x : c) x -= shift;
  return {Partition(c), shift};
}

inline PseudoPartition retwist(const Partition& bar, int shift, int n) {
  std::vector<int> c(bar.parts());
  c.resize(static_cast<std::size_t>(n), 0);
  for (int& x : c) x += shift;
  return gl_label(c);
}

/// SL normal form: subtract the last coordinate at rank n.
inline Partition sl_normalize(const Partition& p, int n) {
  if (p.length() < n) return p;
  std::vector<int> c(p.parts());
  int last = c.back();
  for (int& x : c) x -= last;
  return Partition(c);
}

} // namespace detail

inline Decomposition tensor_gl(const PseudoPartition& a, const PseudoPartition& b, int n) {
  require_valid(Family::GL, a, n);
  require_valid(Family::GL, b, n);
  auto [abar, as] = detail::untwist(a, n);
  auto [bbar, bs] = detail::untwist(b, n);
  Decomposition out(Family::GL, n);
  for (const auto& [nu, c] : lr(abar, bbar).terms())
    if (nu.length() <= n) out.add(detail::retwist(nu, as + bs, n), c);
  return out;
}

inline Decomposition tensor_sl(const Partition& a, const Partition& b, int n) {
  require_valid(Family::SL, a, n);
  require_valid(Family::SL, b, n);
  Decomposition out(Family::SL, n);
  for (const auto& [nu, c] : lr(a, b).terms())
    if (nu.length() <= n) out.add(detail::sl_normalize(nu, n), c);
  return out;
}

// ---------------------------------------------------------------- Sp tensor

namespace detail {

/// s_{lambda/zeta} in the Schur basis: sigma -> C^lambda_{zeta sigma}.
inline SchurVector skew(const Partition& lambda, const Partition& zeta) {
  SchurVector out;
  for (int i = 0; i < zeta.length(); ++i)
    if (zeta[i] > lambda[i]) return out;
  if (zeta.size() > lambda.size()) return out;
  for (const auto& sigma : enumerate_partitions(lambda.size() - zeta.size(), lambda.length(), lambda.first())) {
    Mult c = lr(zeta, sigma)[lambda];
    if (c) out.add(sigma, c);
  }
  return out;
}

/// The partitions contained in both shapes.
inline std::vector<Partition> common_subshapes(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  int cap = std::min(a.size(), b.size());
  for (int d = 0; d <= cap; ++d)
    for (const auto& z : enumerate_partitions(d, std::min(a.length(), b.length()))) {
      bool ok = true;
      for (int i = 0; i < z.length() && ok; ++i) ok = z[i] <= a[i] && z[i] <= b[i];
      if (ok) out.push_back(z);
    }
  return out;
}

} // namespace detail

/// sum over zeta, sigma, tau of C^lambda_{zeta sigma} C^mu_{zeta tau} C^nu_{sigma tau}, keeping l(nu) <= n.
/// The formula is exact once n >= l(lambda) + l(mu). In strict mode, a nonzero dropped term
/// below that threshold is reported as a validity error instead of being silently truncated.
inline Decomposition tensor_sp(const Partition& lambda, const Partition& mu, int n, bool strict = false) {
  require_valid(Family::SP, lambda, n);
  require_valid(Family::SP, mu, n);
  Decomposition out(Family::SP, n);
  const bool stable = n >= lambda.length() + mu.length();
  // Below the stable range truncation is wrong (modification rules apply); use weights instead.
  if (!stable && !strict) return decompose_sp_weights(multiply_weights(sp_weights(lambda, n), sp_weights(mu, n)), n);
  for (const auto& zeta : detail::common_subshapes(lambda, mu)) {
    SchurVector left = detail::skew(lambda, zeta), right = detail::skew(mu, zeta);
    for (const auto& [sigma, cs] : left.terms())
      for (const auto& [tau, ct] : right.terms())
        for (const auto& [nu, cn] : lr(sigma, tau).terms()) {
          if (nu.length() > n) {
            if (strict && !stable)
              fail(ErrorKind::Validity, "tensor_sp: term (" + to_string(nu) + ") dropped below the stable range n >= " +
                                            std::to_string(lambda.length() + mu.length()));
            continue;
          }
          out.add(nu, cs * ct * cn);
        }
  }
  return out;
}

// ---------------------------------------------------------------- characters of S_n / W_n modules

inline ClassFunction character_of(const Decomposition& d) {
  if (d.family() == Family::SYM) {
    ClassFunction f = ClassFunction::sym(d.n(), [](const CycleType&) { return Rational(0); });
    for (const auto& [l, m] : d.terms()) {
      ClassFunction g = ClassFunction::irreducible(pad(std::get<Partition>(l), d.n()));
      for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += Rational(m) * g.values[i];
    }
    return f;
  }
  if (d.family() == Family::HYP) {
    ClassFunction f = ClassFunction::hyp(d.n(), [](const SignedCycleType&) { return Rational(0); });
    for (const auto& [l, m] : d.terms()) {
      ClassFunction g = ClassFunction::irreducible(pad(std::get<DoublePartition>(l), d.n()));
      for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += Rational(m) * g.values[i];
    }
    return f;
  }
  fail(ErrorKind::Usage, "character_of: only S_n and W_n modules have class-function characters here");
}

namespace detail {

/// Cycle type of g^k for g of cycle type rho.
inline CycleType power_class(const CycleType& rho, int k) {
  std::vector<int> parts;
  for (int l : rho.parts()) {
    int g = std::gcd(l, k);
    parts.insert(parts.end(), static_cast<std::size_t>(g), l / g);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CycleType(parts);
}

/// Signed class of g^k: a cycle of length l splits into gcd(l,k) cycles whose sign is raised to k/gcd.
inline SignedCycleType power_class(const SignedCycleType& c, int k) {
  std::vector<int> pos, neg;
  auto spread = [&](const Partition& p, bool negative) {
    for (int l : p.parts()) {
      int g = std::gcd(l, k);
      bool neg_out = negative && ((k / g) % 2 == 1);
      (neg_out ? neg : pos).insert((neg_out ? neg : pos).end(), static_cast<std::size_t>(g), l / g);
    }
  };
  spread(c.pos, false);
  spread(c.neg, true);
  std::sort(pos.begin(), pos.end(), std::greater<>());
  std::sort(neg.begin(), neg.end(), std::greater<>());
  return {Partition(pos), Partition(neg)};
}

} // namespace detail

/// Character of S_lambda(V) for a class function V, via power maps.
inline ClassFunction schur_functor_character(const Partition& lambda, const ClassFunction& v) {
  auto eval = [&](const auto& cls, const auto& classes) {
    Rational total = 0;
    for (const auto& rho : enumerate_partitions(lambda.size())) {
      long chi = character_sym(lambda, rho);
      if (chi == 0) continue;
      Rational prod = 1;
      for (int k : rho.parts()) {
        auto target = detail::power_class(cls, k);
        auto idx = std::find(classes.begin(), classes.end(), target) - classes.begin();
        prod *= v.values[static_cast<std::size_t>(idx)];
      }
      total += Rational(chi) / Rational(centralizer_order(rho)) * prod;
    }
    return total;
  };
  if (v.group == Family::SYM) {
    auto classes = enumerate_partitions(v.n);
    return ClassFunction::sym(v.n, [&](const CycleType& c) { return eval(c, classes); });
  }
  auto classes = hyp_classes(v.n);
  return ClassFunction::hyp(v.n, [&](const SignedCycleType& c) { return eval(c, classes); });
}

// ---------------------------------------------------------------- generic tensor

namespace detail {

inline WeightMultiset weights_of(const Decomposition& d) {
  WeightMultiset w;
  for (const auto& [l, m] : d.terms()) {
    if (d.family() == Family::SP) add_weights(w, sp_weights(std::get<Partition>(l), d.n()), m);
    else if (d.family() == Family::GL) add_weights(w, gl_weights(std::get<PseudoPartition>(l), d.n()), m);
    else fail(ErrorKind::Usage, "weights_of: GL or SP only");
  }
  return w;
}

} // namespace detail

/// Tensor product of two modules of the same family and rank.
inline Decomposition tensor(const Decomposition& a, const Decomposition& b) {
  a.check_compatible(b);
  const int n = a.n();
  Decomposition out(a.family(), n, a.is_virtual() || b.is_virtual());
  switch (a.family()) {
  case Family::SYM:
  case Family::HYP: {
    ClassFunction f = character_of(a);
    f *= character_of(b);
    return out.is_virtual() ? decompose(f, true) : decompose(f);
  }
  default: break;
  }
  for (const auto& [la, ma] : a.terms())
    for (const auto& [lb, mb] : b.terms()) {
      Decomposition piece;
      switch (a.family()) {
      case Family::GL: piece = tensor_gl(std::get<PseudoPartition>(la), std::get<PseudoPartition>(lb), n); break;
      case Family::SL: piece = tensor_sl(std::get<Partition>(la), std::get<Partition>(lb), n); break;
      case Family::SP: piece = tensor_sp(std::get<Partition>(la), std::get<Partition>(lb), n); break;
      default: break;
      }
      for (const auto& [l, m] : piece.terms()) out.add(l, m * ma * mb);
    }
  return out;
}

// ---------------------------------------------------------------- restriction and branching

/// GL_n -> GL_{n-k}: coefficient of nu is sum_mu C^lambda_{mu nu} dim S_mu(Q^k), after the determinant untwist.
inline Decomposition restrict_gl(const PseudoPartition& lambda, int n, int k) {
  require_valid(Family::GL, lambda, n);
  if (k < 0 || k >= n) fail(ErrorKind::Usage, "restrict_gl requires 0 <= k < n");
  auto [bar, shift] = detail::untwist(lambda, n);
  Decomposition out(Family::GL, n - k);
  for (int d = 0; d <= bar.size(); ++d)
    for (const auto& mu : enumerate_partitions(d, k)) {
      Integer dm = schur_dimension(mu, k);
      for (const auto& [nu, c] : detail::skew(bar, mu).terms())
        if (nu.length() <= n - k) out.add(detail::retwist(nu, shift, n - k), c * to_mult(dm));
    }
  return out;
}

/// Same restriction for SL labels, normalized at rank n-k.
inline Decomposition restrict_sl(const Partition& lambda, int n, int k) {
  require_valid(Family::SL, lambda, n);
  Decomposition gl = restrict_gl(PseudoPartition(lambda), n, k);
  Decomposition out(Family::SL, n - k);
  for (const auto& [l, m] : gl.terms()) {
    const auto& p = std::get<PseudoPartition>(l);
    out.add(detail::sl_normalize(Partition(p.parts()), n - k), m);
  }
  return out;
}

/// Sp_2n -> Sp_{2n-2}; N^nu_lambda counts interleaving sequences p_1..p_n.
inline Decomposition branch_sp(const Partition& lambda, int n) {
  require_valid(Family::SP, lambda, n);
  if (n < 2) fail(ErrorKind::Usage, "branch_sp requires n >= 2");
  Decomposition out(Family::SP, n - 1);
  std::vector<int> p(static_cast<std::size_t>(n)), nu(static_cast<std::size_t>(n - 1));
  auto nu_rec = [&](auto&& self, int i) -> void {
    if (i == n - 1) {
      out.add(Partition(nu), 1);
      return;
    }
    for (int v = p[static_cast<std::size_t>(i)]; v >= p[static_cast<std::size_t>(i + 1)]; --v) {
      nu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  auto p_rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      nu_rec(nu_rec, 0);
      return;
    }
    for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
      p[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  p_rec(p_rec, 0);
  return out;
}

/// S_lambda(Q^{2n}) restricted from GL_2n to Sp_2n (Littlewood): sum over eta whose parts
/// each occur an even number of times.
inline Decomposition littlewood_restrict(const Partition& lambda, int n) {
  if (lambda.length() > n)
    fail(ErrorKind::Validity, "littlewood_restrict requires l(lambda) <= n (got " + std::to_string(lambda.length()) + " > " +
                                  std::to_string(n) + ")");
  Decomposition out(Family::SP, n);
  for (int d = 0; d <= lambda.size(); d += 2)
    for (const auto& eta : enumerate_partitions(d, lambda.length(), lambda.first())) {
      bool paired = true;
      for (int i = 0; i < eta.length() && paired; i += 2) paired = eta[i] == eta[i + 1];
      if (!paired) continue;
      for (const auto& [mu, c] : detail::skew(lambda, eta).terms()) out.add(mu, c);
    }
  return out;
}

// ---------------------------------------------------------------- Schur functors

inline Decomposition schur_functor(const Partition& lambda, const Decomposition& a);

/// S_lambda(A + B) = sum C^lambda_{mu nu} S_mu(A) (x) S_nu(B).
inline Decomposition schur_of_sum(const Partition& lambda, const Decomposition& a, const Decomposition& b) {
  a.check_compatible(b);
  Decomposition out(a.family(), a.n());
  for (int d = 0; d <= lambda.size(); ++d)
    for (const auto& mu : enumerate_partitions(d, lambda.length(), lambda.first())) {
      Decomposition sa = schur_functor(mu, a);
      if (sa.empty()) continue;
      for (const auto& [nu, c] : detail::skew(lambda, mu).terms()) {
        Decomposition sb = schur_functor(nu, b);
        if (sb.empty()) continue;
        out += tensor(sa, sb).scaled(c);
      }
    }
  return out;
}

/// D^lambda_{mu nu} = (1/d!) sum_rho |C_rho| chi_lambda chi_mu chi_nu (rho).
inline Rational d_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Rational total = 0;
  for (const auto& rho : enumerate_partitions(lambda.size()))
    total += Rational(character_sym(lambda, rho) * character_sym(mu, rho) * character_sym(nu, rho)) /
             Rational(centralizer_order(rho));
  return total;
}

/// S_lambda(A (x) B) = sum D^lambda_{mu nu} S_mu(A) (x) S_nu(B).
inline Decomposition schur_of_tensor(const Partition& lambda, const Decomposition& a, const Decomposition& b) {
  a.check_compatible(b);
  Decomposition out(a.family(), a.n());
  const auto shapes = enumerate_partitions(lambda.size());
  for (const auto& mu : shapes) {
    Decomposition sa = schur_functor(mu, a);
    if (sa.empty()) continue;
    for (const auto& nu : shapes) {
      Mult dc = to_mult(d_coefficient(lambda, mu, nu));
      if (dc == 0) continue;
      Decomposition sb = schur_functor(nu, b);
      if (sb.empty()) continue;
      out += tensor(sa, sb).scaled(dc);
    }
  }
  return out;
}

namespace detail {

/// S_lambda of one irreducible GL/SL module via plethysm.
inline Decomposition schur_of_irreducible_gl(const Partition& lambda, Family family, const Label& label, int n) {
  Partition bar;
  int shift = 0;
  if (family == Family::GL) std::tie(bar, shift) = untwist(std::get<PseudoPartition>(label), n);
  else bar = std::get<Partition>(label);
  Decomposition out(family, n);
  for (const auto& [nu, c] : plethysm(lambda, bar).terms()) {
    if (nu.length() > n) continue;
    if (family == Family::GL) out.add(retwist(nu, shift * lambda.size(), n), c);
    else out.add(sl_normalize(nu, n), c);
  }
  return out;
}

} // namespace detail

/// S_lambda(A) for a (reducible) module A. GL/SL split A into irreducible summands with
/// schur_of_sum and use plethysm on each; SP goes through weights; SYM/HYP through characters.
inline Decomposition schur_functor(const Partition& lambda, const Decomposition& a) {
  const int n = a.n();
  if (a.is_virtual()) fail(ErrorKind::Usage, "schur_functor of a virtual module");
  if (lambda.empty()) return Decomposition::single(a.family(), n, a.family() == Family::GL ? Label(PseudoPartition{})
                                                                  : a.family() == Family::HYP ? Label(DoublePartition{})
                                                                                              : Label(Partition{}));
  if (a.empty()) return Decomposition(a.family(), n);
  switch (a.family()) {
  case Family::SYM:
  case Family::HYP: return decompose(schur_functor_character(lambda, character_of(a)));
  case Family::SP: return decompose_sp_weights(schur_functor_weights(lambda, detail::weights_of(a), n), n);
  default: break;
  }
  const auto& [first_label, first_mult] = *a.terms().begin();
  if (a.size() == 1 && first_mult == 1) return detail::schur_of_irreducible_gl(lambda, a.family(), first_label, n);
  Decomposition head(a.family(), n), rest = a;
  head.add(first_label, 1);
  rest.add(first_label, -1);
  return schur_of_sum(lambda, head, rest);
}

// ---------------------------------------------------------------- division

/// The unique X with X (x) W = VW, by lexicographic peeling.
inline Decomposition divide(const Decomposition& w, const Decomposition& vw) {
  w.check_compatible(vw);
  if (w.empty()) fail(ErrorKind::Usage, "divide by the zero module");
  const Family fam = w.family();
  if (fam != Family::GL && fam != Family::SL && fam != Family::SP)
    fail(ErrorKind::Usage, "divide is defined for GL, SL and SP");
  const int n = w.n();
  const auto& [wtop, wmult] = *w.terms().begin();
  auto coords = [&](const Label& l) {
    if (fam == Family::GL) return gl_coords(std::get<PseudoPartition>(l), n);
    std::vector<int> c(std::get<Partition>(l).parts());
    c.resize(static_cast<std::size_t>(n), 0);
    return c;
  };
  const std::vector<int> mu = coords(wtop);

  Decomposition remainder = vw.as_virtual();
  Decomposition quotient(fam, n);
  std::size_t guard = 0;
  while (!remainder.empty()) {
    if (++guard > 100000) fail(ErrorKind::Internal, "divide did not terminate");
    const auto [ntop, nmult] = *remainder.terms().begin();
    if (nmult < 0 || nmult % wmult != 0)
      fail(ErrorKind::NotDivisible, "not divisible: remainder term (" + to_string(ntop) + ") has multiplicity " +
                                        std::to_string(nmult));
    std::vector<int> nu = coords(ntop), lam(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lam[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
    bool ok = std::is_sorted(lam.begin(), lam.end(), std::greater<>());
    if (fam != Family::GL) ok = ok && (lam.empty() || lam.back() >= 0);
    if (!ok) fail(ErrorKind::NotDivisible, "not divisible: peeling (" + to_string(ntop) + ") leaves a non-partition");
    Label piece;
    if (fam == Family::GL) piece = gl_label(lam);
    else if (fam == Family::SL) piece = detail::sl_normalize(Partition(lam), n);
    else piece = Partition(lam);
    if (auto problem = label_problem(fam, piece, n))
      fail(ErrorKind::NotDivisible, "not divisible: " + *problem);
    const Mult c = nmult / wmult;
    quotient.add(piece, c);
    remainder -= tensor(Decomposition::single(fam, n, piece), w).scaled(c);
  }
  return quotient;
}

// ---------------------------------------------------------------- mixed tensor names

/// V(lambda; mu)_n: highest weight (lambda_1, ..., 0, ..., -mu_1).
struct MixedLabel {
  Partition lam;
  Partition mu;
  friend bool operator==(const MixedLabel&, const MixedLabel&) = default;
};

inline MixedLabel mixed_name(const PseudoPartition& p, int n) {
  require_valid(Family::GL, p, n);
  std::vector<int> c = gl_coords(p, n), lam, mu;
  for (int x : c)
    if (x > 0) lam.push_back(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    if (*it < 0) mu.push_back(-*it);
  return {Partition(lam), Partition(mu)};
}

inline PseudoPartition from_mixed_name(const MixedLabel& m, int n) {
  if (n < m.lam.length() + m.mu.length())
    fail(ErrorKind::Validity, "V(lambda;mu)_n requires n >= l(lambda) + l(mu)");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m.lam.length(); ++i) c[static_cast<std::size_t>(i)] = m.lam[i];
  for (int i = 0; i < m.mu.length(); ++i) c[static_cast<std::size_t>(n - 1 - i)] = -m.mu[i];
  return gl_label(c);
}

/// The dual of V(lambda;mu)_n is V(mu;lambda)_n.
inline PseudoPartition dual_gl(const PseudoPartition& p, int n) {
  std::vector<int> c = gl_coords(p, n);
  std::reverse(c.begin(), c.end());
  for (int& x : c) x = -x;
  return gl_label(c);
}

inline std::string to_string(const MixedLabel& m) { return "(" + to_string(m.lam) + ";" + to_string(m.mu) + ")"; }

} // namespace repstab
