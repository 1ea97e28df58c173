#pragma once

// Multiplicity-level stability analysis of a sequence of decompositions indexed by n.
// Only multiplicities are examined; the injectivity and surjectivity conditions on the
// connecting maps are out of reach of this data and every report says so.

#include "decomposition.hpp"

#include <set>

namespace repstab {

struct DecompositionSequence {
  Family family = Family::SYM;
  std::map<int, Decomposition> entries; // rank -> decomposition in unpadded coordinates
  std::string provenance;

  void add(const Decomposition& d) {
    if (d.family() != family) fail(ErrorKind::Usage, "sequence entry has the wrong family");
    entries[d.n()] = d;
  }

  int first() const { return entries.begin()->first; }
  int last() const { return entries.rbegin()->first; }
  int length() const { return static_cast<int>(entries.size()); }

  /// Fails unless the ranks form a contiguous nonempty range.
  void validate() const {
    if (entries.empty()) fail(ErrorKind::Usage, "empty decomposition sequence");
    int expect = first();
    for (const auto& [n, d] : entries) {
      if (n != expect) fail(ErrorKind::Usage, "sequence ranks are not contiguous (missing n=" + std::to_string(expect) + ")");
      if (d.family() != family || d.n() != n) fail(ErrorKind::Usage, "sequence entry does not match its rank or family");
      ++expect;
    }
  }

  std::set<Label> labels() const {
    std::set<Label> out;
    for (const auto& [n, d] : entries)
      for (const auto& [l, m] : d.terms()) out.insert(l);
    return out;
  }

  /// Multiplicities of one label along the range (zero where absent).
  std::vector<Mult> multiplicities(const Label& l) const {
    std::vector<Mult> out;
    for (const auto& [n, d] : entries) out.push_back(d[l]);
    return out;
  }
};

enum class Verdict { Stable, SimplyStable, Periodic, Unstable, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Stable: return "stable";
  case Verdict::SimplyStable: return "simply-stable";
  case Verdict::Periodic: return "periodic";
  case Verdict::Unstable: return "unstable";
  case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct StabilityReport {
  Family family = Family::SYM;
  int first = 0, last = 0;
  int window = 3;
  std::map<Label, int> onsets; // first n from which the multiplicity is constant to the end of the range
  std::optional<int> uniform_onset;
  Verdict verdict = Verdict::Inconclusive;
  int period = 0; // set for periodic verdicts
  bool empirical = true;
  std::string note = "multiplicity stability only: the connecting maps are not examined";

  std::string verdict_string() const {
    return verdict == Verdict::Periodic ? "periodic(" + std::to_string(period) + ")" : to_string(verdict);
  }
};

namespace detail {

// Smallest rank N from which every label satisfies m(n) = m(n + C) up to the end of the
// range, or nullopt if the agreement does not cover at least `span` ranks.
inline std::optional<int> periodic_onset(const DecompositionSequence& seq, const std::set<Label>& labels, int C, int span) {
  const int len = seq.length();
  int start = 0; // index into the range
  for (const auto& l : labels) {
    auto m = seq.multiplicities(l);
    int s = len - C;
    while (s - 1 >= 0 && m[static_cast<std::size_t>(s - 1)] == m[static_cast<std::size_t>(s - 1 + C)]) --s;
    // indices s .. len-1 agree with the period
    start = std::max(start, std::min(s, len - C));
  }
  if (len - start < span) return std::nullopt;
  return seq.first() + start;
}

inline StabilityReport classify(const DecompositionSequence& seq, int window) {
  seq.validate();
  if (window < 1) fail(ErrorKind::Usage, "window must be positive");
  StabilityReport r;
  r.family = seq.family;
  r.first = seq.first();
  r.last = seq.last();
  r.window = window;
  const auto labels = seq.labels();
  const int len = seq.length();

  for (const auto& l : labels) {
    auto m = seq.multiplicities(l);
    int s = len - 1;
    while (s > 0 && m[static_cast<std::size_t>(s - 1)] == m[static_cast<std::size_t>(s)]) --s;
    r.onsets[l] = seq.first() + s;
  }

  // Period 1 with span `window` is exactly the stable condition.
  for (int C = 1; C <= std::max(1, len / 2); ++C) {
    if (auto onset = periodic_onset(seq, labels, C, std::max(2 * C, window))) {
      r.uniform_onset = onset;
      r.verdict = C == 1 ? Verdict::Stable : Verdict::Periodic;
      r.period = C;
      if (C == 1) {
        int u = seq.first();
        for (const auto& [l, n] : r.onsets) u = std::max(u, n);
        r.uniform_onset = u;
      }
      return r;
    }
  }

  // Some multiplicity strictly increasing over the trailing window: unstable.
  if (len >= window)
    for (const auto& l : labels) {
      auto m = seq.multiplicities(l);
      bool increasing = true;
      for (int t = len - window + 1; t < len; ++t)
        if (m[static_cast<std::size_t>(t)] <= m[static_cast<std::size_t>(t - 1)]) increasing = false;
      if (increasing && window >= 2) {
        r.verdict = Verdict::Unstable;
        return r;
      }
    }
  r.verdict = Verdict::Inconclusive;
  return r;
}

} // namespace detail

/// Onsets per label, uniform onset and verdict over the observed range.
inline StabilityReport detect(const DecompositionSequence& seq, int window) {
  if (seq.entries.empty()) fail(ErrorKind::Usage, "empty decomposition sequence");
  if (seq.length() < window + 1)
    fail(ErrorKind::Usage, "range of " + std::to_string(seq.length()) + " ranks is shorter than window + 1 = " +
                               std::to_string(window + 1));
  return detail::classify(seq, window);
}

/// Simple stability for GL sequences: every label present from n = length(label) onward with
/// constant multiplicity, and no labels with negative parts.
inline StabilityReport detect_simple(const DecompositionSequence& seq, int window = 3) {
  if (seq.family != Family::GL) fail(ErrorKind::Usage, "simple stability applies to GL sequences");
  StabilityReport r = detail::classify(seq, std::min(window, seq.length()));
  bool simple = true;
  std::map<Label, int> entries;
  for (const auto& l : seq.labels()) {
    const auto& p = std::get<PseudoPartition>(l);
    if (p.has_negative()) simple = false;
    const int entry = std::max(seq.first(), p.length());
    auto m = seq.multiplicities(l);
    for (int n = entry; n <= seq.last(); ++n)
      if (m[static_cast<std::size_t>(n - seq.first())] != m.back()) simple = false;
    entries[l] = entry;
  }
  if (simple) {
    r.verdict = Verdict::SimplyStable;
    r.period = 0;
    r.onsets = entries;
    int u = seq.first();
    for (const auto& [l, n] : entries) u = std::max(u, n);
    r.uniform_onset = u;
  }
  return r;
}

} // namespace repstab
