#pragma once

// Exact rank computations: fraction-free echelon insertion over the integers.

#include "common.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace repstab {

/// Sparse integer row: column -> nonzero entry.
using SparseRow = std::map<int, Integer>;

/// Incremental row echelon form over Z. Each inserted row is reduced against the stored
/// pivots by cross-multiplication, then divided by its content to keep entries small.
class EchelonBasis {
public:
  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseRow row) {
    for (;;) {
      if (row.empty()) return false;
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        normalize(row);
        pivots_.emplace(row.begin()->first, std::move(row));
        return true;
      }
      const SparseRow& p = it->second;
      const Integer a = p.begin()->second, b = lead->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer fa = a / g, fb = b / g;
      SparseRow next;
      for (const auto& [c, v] : row) next.emplace(c, v * fa);
      for (const auto& [c, v] : p) {
        Integer& slot = next[c];
        slot -= v * fb;
        if (slot == 0) next.erase(c);
      }
      row = std::move(next);
      normalize(row);
    }
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  static void normalize(SparseRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (row.begin()->second < 0) g = -g;
    if (g != 1)
      for (auto& [c, v] : row) v /= g;
  }

  std::map<int, SparseRow> pivots_;
};

inline std::size_t rank(const std::vector<SparseRow>& rows) {
  EchelonBasis e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Rank of a small dense integer matrix.
inline int dense_rank(std::vector<std::vector<long>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(piv)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      long a = pr[static_cast<std::size_t>(c)], b = row[static_cast<std::size_t>(c)];
      if (b == 0) continue;
      long g = std::gcd(a, b);
      long fa = a / g, fb = b / g;
      long content = 0;
      for (int j = 0; j < cols; ++j) {
        auto J = static_cast<std::size_t>(j);
        row[J] = row[J] * fa - pr[J] * fb;
        content = std::gcd(content, row[J]);
      }
      if (content > 1)
        for (auto& x : row) x /= content;
    }
    ++r;
  }
  return r;
}

} // namespace repstab
