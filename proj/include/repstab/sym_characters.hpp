#pragma once

// Irreducible characters of S_d via the Murnaghan-Nakayama rule.

#include "partitions.hpp"

#include <memory>
#include <vector>

namespace repstab {

/// Conjugacy class of S_d, encoded by its cycle type.
using CycleType = Partition;

/// Centralizer order z_rho = prod_i i^{m_i} m_i!.
inline Integer centralizer_order(const CycleType& rho) {
  Integer z = 1;
  int i = 0;
  const auto& p = rho.parts();
  while (i < rho.length()) {
    int j = i;
    while (j < rho.length() && p[j] == p[i]) ++j;
    int m = j - i;
    for (int t = 0; t < m; ++t) z *= p[i];
    z *= factorial(m);
    i = j;
  }
  return z;
}

inline Integer class_size(const CycleType& rho) { return factorial(rho.size()) / centralizer_order(rho); }

inline int sign_of(const CycleType& rho) { return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1; }

/// Multiset union of two cycle types.
inline CycleType merge(const CycleType& a, const CycleType& b) {
  std::vector<int> v(a.parts());
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return CycleType(std::move(v));
}

namespace detail {

inline Memo<std::pair<Partition, CycleType>, long>& mn_memo() {
  static Memo<std::pair<Partition, CycleType>, long> memo;
  return memo;
}

inline long mn_value(const Partition& shape, const CycleType& rho) {
  if (rho.empty()) return 1;
  return mn_memo().get({shape, rho}, [&]() -> long {
    const int r = rho[0];
    std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
    CycleType tail(std::move(rest));

    const int len = shape.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[i] + (len - 1 - i);

    long total = 0;
    for (int i = 0; i < len; ++i) {
      int b = beta[static_cast<std::size_t>(i)];
      int nb = b - r;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      // Rim hook removal: beta-number b slides to nb; height = number of beta-numbers jumped.
      int height = 0;
      for (int x : beta)
        if (x > nb && x < b) ++height;
      std::vector<int> nbeta(beta);
      nbeta[static_cast<std::size_t>(i)] = nb;
      std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
      std::vector<int> parts(static_cast<std::size_t>(len));
      for (int j = 0; j < len; ++j) parts[static_cast<std::size_t>(j)] = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
      long v = mn_value(Partition(std::move(parts)), tail);
      total += (height % 2 == 0) ? v : -v;
    }
    return total;
  });
}

} // namespace detail

/// chi_lambda(rho), exact.
inline long character_sym(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.size())
    fail(ErrorKind::Usage, "character_sym: |lambda| = " + std::to_string(lambda.size()) + " but |rho| = " +
                               std::to_string(rho.size()));
  return detail::mn_value(lambda, rho);
}

/// Full character table of S_n; rows and columns in decreasing lex order.
struct SymCharacterTable {
  int n = 0;
  std::vector<Partition> labels;   // irreducibles
  std::vector<CycleType> classes;  // conjugacy classes
  std::vector<Integer> centralizers;
  std::vector<std::vector<long>> values; // values[label][class]

  int class_index(const CycleType& rho) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), rho, std::greater<>());
    if (it == classes.end() || *it != rho) fail(ErrorKind::Internal, "unknown cycle type");
    return static_cast<int>(it - classes.begin());
  }
  int label_index(const Partition& lambda) const { return class_index(lambda); }
};

inline const SymCharacterTable& sym_character_table(int n) {
  require_cap(n <= Limits::global().max_sym_n,
              "symmetric group character table n=" + std::to_string(n) + " > max " +
                  std::to_string(Limits::global().max_sym_n));
  static Memo<int, std::shared_ptr<const SymCharacterTable>> memo;
  return *memo.get(n, [n] {
    auto t = std::make_shared<SymCharacterTable>();
    t->n = n;
    t->labels = enumerate_partitions(n);
    t->classes = t->labels;
    for (const auto& c : t->classes) t->centralizers.push_back(centralizer_order(c));
    for (const auto& l : t->labels) {
      std::vector<long> row;
      row.reserve(t->classes.size());
      for (const auto& c : t->classes) row.push_back(character_sym(l, c));
      t->values.push_back(std::move(row));
    }
    return std::shared_ptr<const SymCharacterTable>(std::move(t));
  });
}

} // namespace repstab
