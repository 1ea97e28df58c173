#pragma once

// Irreducible labels: partitions, pseudo-partitions, double partitions, and
// the padding convention lambda[n] = (n - |lambda|, lambda_1, ..., lambda_l).

#include "common.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace repstab {

namespace detail {

// Lexicographic comparison treating missing entries as zero.
inline std::strong_ordering padded_compare(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

inline void trim_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace detail

/// Weakly decreasing positive integers; the empty list is the partition of 0.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    detail::trim_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) fail(ErrorKind::Usage, "partition parts must be nonnegative");
      if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorKind::Usage, "partition parts must be nonincreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int first() const { return empty() ? 0 : parts_[0]; }

  /// Multiplicity of part value k.
  int count(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return detail::padded_compare(a.parts_, b.parts_);
  }

private:
  std::vector<int> parts_;
};

/// Weakly decreasing integers, negatives allowed; trailing zeros dropped.
/// At rank n the label is read as padded with zeros to length n.
class PseudoPartition {
public:
  PseudoPartition() = default;
  PseudoPartition(std::initializer_list<int> parts) : PseudoPartition(std::vector<int>(parts)) {}
  explicit PseudoPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > parts_[i - 1]) fail(ErrorKind::Usage, "pseudo-partition parts must be nonincreasing");
    detail::trim_zeros(parts_);
  }
  PseudoPartition(const Partition& p) : parts_(p.parts()) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool has_negative() const { return !parts_.empty() && parts_.back() < 0; }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  /// Full coordinate vector at rank n.
  std::vector<int> at_rank(int n) const {
    std::vector<int> v(parts_);
    v.resize(static_cast<std::size_t>(std::max(n, length())), 0);
    return v;
  }

  friend bool operator==(const PseudoPartition&, const PseudoPartition&) = default;
  friend std::strong_ordering operator<=>(const PseudoPartition& a, const PseudoPartition& b) {
    return detail::padded_compare(a.parts_, b.parts_);
  }

private:
  std::vector<int> parts_;
};

struct DoublePartition {
  Partition plus;
  Partition minus;

  int size() const { return plus.size() + minus.size(); }
  friend bool operator==(const DoublePartition&, const DoublePartition&) = default;
  friend std::strong_ordering operator<=>(const DoublePartition& a, const DoublePartition& b) {
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }
};

enum class Family { SYM, HYP, GL, SL, SP };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::SYM: return "SYM";
  case Family::HYP: return "HYP";
  case Family::GL: return "GL";
  case Family::SL: return "SL";
  case Family::SP: return "SP";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  std::string u(s);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (u == "SYM") return Family::SYM;
  if (u == "HYP") return Family::HYP;
  if (u == "GL") return Family::GL;
  if (u == "SL") return Family::SL;
  if (u == "SP") return Family::SP;
  fail(ErrorKind::Usage, "unknown family '" + std::string(s) + "'");
}

using Label = std::variant<Partition, PseudoPartition, DoublePartition>;

// ---------------------------------------------------------------- padding

inline Partition pad(const Partition& core, int n) {
  int k = core.size();
  if (n < k + core.first())
    fail(ErrorKind::Validity, "padding requires n >= |lambda| + lambda_1 (n=" + std::to_string(n) +
                                  ", need " + std::to_string(k + core.first()) + ")");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), core.parts().begin(), core.parts().end());
  return Partition(std::move(parts));
}

inline std::pair<Partition, int> unpad(const Partition& mu) {
  if (mu.empty()) fail(ErrorKind::Usage, "cannot unpad the empty partition");
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  return {Partition(std::move(rest)), mu.size()};
}

/// lambda[n] = ((n - k, lambda^+), lambda^-) with k = |lambda^+| + |lambda^-|.
inline DoublePartition pad(const DoublePartition& core, int n) {
  int k = core.size();
  if (n < k + core.plus.first())
    fail(ErrorKind::Validity, "padding requires n >= |lambda| + lambda^+_1 (n=" + std::to_string(n) + ")");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), core.plus.parts().begin(), core.plus.parts().end());
  return {Partition(std::move(parts)), core.minus};
}

inline DoublePartition unpad(const DoublePartition& mu) {
  if (mu.plus.empty()) return {Partition{}, mu.minus};
  std::vector<int> rest(mu.plus.parts().begin() + 1, mu.plus.parts().end());
  return {Partition(std::move(rest)), mu.minus};
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> c(static_cast<std::size_t>(p.first()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

/// All partitions of d (optionally bounded in length and largest part), decreasing lex order.
inline std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length = std::nullopt,
                                                   std::optional<int> max_part = std::nullopt) {
  std::vector<Partition> out;
  if (d < 0) return out;
  int len_cap = max_length.value_or(d);
  int part_cap = max_part.value_or(d);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= len_cap) return;
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, part_cap);
  return out;
}

/// Number of standard tableaux of a shape (hook length formula).
inline Integer num_standard_tableaux(const Partition& p) {
  Partition c = conjugate(p);
  Integer denom = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) denom *= (p[i] - j - 1) + (c[j] - i - 1) + 1;
  return factorial(p.size()) / denom;
}

// ---------------------------------------------------------------- validity

inline int label_length(const Label& l) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DoublePartition>)
      return std::max(x.plus.length(), x.minus.length());
    else
      return x.length();
  }, l);
}

/// Validity of an (unpadded) label at rank n for a family.
inline std::optional<std::string> label_problem(Family family, const Label& label, int n) {
  auto need = [&](bool ok, const std::string& msg) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return msg + " at n=" + std::to_string(n);
  };
  switch (family) {
  case Family::SYM: {
    const auto* p = std::get_if<Partition>(&label);
    if (!p) return "SYM labels are partitions";
    return need(n >= p->size() + p->first(), "SYM label requires n >= |lambda| + lambda_1");
  }
  case Family::HYP: {
    const auto* p = std::get_if<DoublePartition>(&label);
    if (!p) return "HYP labels are double partitions";
    return need(n >= p->size() + p->plus.first(), "HYP label requires n >= |lambda| + lambda^+_1");
  }
  case Family::SL: {
    const auto* p = std::get_if<Partition>(&label);
    if (!p) return "SL labels are partitions";
    return need(n > p->length(), "SL label requires n > length");
  }
  case Family::SP: {
    const auto* p = std::get_if<Partition>(&label);
    if (!p) return "SP labels are partitions";
    return need(n >= p->length(), "SP label requires n >= length");
  }
  case Family::GL: {
    const auto* p = std::get_if<PseudoPartition>(&label);
    if (!p) return "GL labels are pseudo-partitions";
    if (p->length() > n) return need(false, "GL label requires n >= length");
    return need(!p->has_negative() || p->length() == n, "GL label with negative parts must have exactly n entries");
  }
  }
  return "unknown family";
}

inline void require_valid(Family family, const Label& label, int n) {
  if (auto problem = label_problem(family, label, n)) fail(ErrorKind::Validity, *problem);
}

// ---------------------------------------------------------------- text syntax

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::Usage, "empty entry in '" + std::string(s) + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "not an integer: '" + item + "'");
    }
    if (used != item.size()) fail(ErrorKind::Usage, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string join(const std::vector<int>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace detail

/// "3,1" -> (3,1); "0" or "" -> ().
inline Partition parse_partition(std::string_view s) {
  if (s.empty()) return Partition{};
  return Partition(detail::parse_int_list(s));
}

inline PseudoPartition parse_pseudo_partition(std::string_view s) {
  if (s.empty()) return PseudoPartition{};
  return PseudoPartition(detail::parse_int_list(s));
}

/// "3,1|2" -> ((3,1),(2)).
inline DoublePartition parse_double_partition(std::string_view s) {
  auto bar = s.find('|');
  if (bar == std::string_view::npos) return {parse_partition(s), Partition{}};
  return {parse_partition(s.substr(0, bar)), parse_partition(s.substr(bar + 1))};
}

inline std::string to_string(const Partition& p) { return detail::join(p.parts()); }
inline std::string to_string(const PseudoPartition& p) { return detail::join(p.parts()); }
inline std::string to_string(const DoublePartition& p) { return to_string(p.plus) + "|" + to_string(p.minus); }
inline std::string to_string(const Label& l) {
  return std::visit([](const auto& x) { return to_string(x); }, l);
}

inline Label parse_label(Family family, std::string_view s) {
  switch (family) {
  case Family::HYP: return parse_double_partition(s);
  case Family::GL: return parse_pseudo_partition(s);
  default: return parse_partition(s);
  }
}

struct PaddedLabel {
  Family family;
  Label core;
  int n;
};

/// "V(3,1)@9" with the family supplied by context.
inline PaddedLabel parse_padded_label(Family family, std::string_view s) {
  auto at = s.find('@');
  if (s.size() < 4 || s.substr(0, 2) != "V(" || at == std::string_view::npos || s[at - 1] != ')')
    fail(ErrorKind::Usage, "expected V(parts)@n, got '" + std::string(s) + "'");
  auto inner = s.substr(2, at - 3);
  int n = 0;
  try {
    n = std::stoi(std::string(s.substr(at + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::Usage, "bad rank in '" + std::string(s) + "'");
  }
  PaddedLabel out{family, parse_label(family, inner), n};
  require_valid(family, out.core, n);
  return out;
}

inline std::string to_string(const PaddedLabel& l) { return "V(" + to_string(l.core) + ")@" + std::to_string(l.n); }

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const PseudoPartition& p) { return os << '(' << to_string(p) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const DoublePartition& p) { return os << '(' << to_string(p) << ')'; }

} // namespace repstab
