#pragma once

#include "partitions.hpp"

#include <functional>
#include <map>

namespace repstab {

/// Sparse multiset of irreducible labels at a fixed rank. SYM and HYP labels
/// are stored unpadded; GL labels are pseudo-partitions; SL/SP labels are partitions.
/// Iteration order is decreasing lexicographic.
class Decomposition {
public:
  using Terms = std::map<Label, Mult, std::greater<>>;

  Decomposition() = default;
  Decomposition(Family family, int n, bool is_virtual = false) : family_(family), n_(n), virtual_(is_virtual) {
    if (n < 0) fail(ErrorKind::Usage, "rank must be nonnegative");
  }

  Family family() const { return family_; }
  int n() const { return n_; }
  bool is_virtual() const { return virtual_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Mult operator[](const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Total number of irreducible summands counted with multiplicity.
  Mult total_multiplicity() const {
    Mult s = 0;
    for (const auto& [l, m] : terms_) s += m;
    return s;
  }

  Decomposition& add(const Label& label, Mult mult) {
    if (mult == 0) return *this;
    require_valid(family_, label, n_);
    Mult& slot = terms_[label];
    slot += mult;
    if (slot == 0) {
      terms_.erase(label);
    } else if (slot < 0 && !virtual_) {
      fail(ErrorKind::NotRepresentation, "negative multiplicity " + std::to_string(slot) + " for " +
                                             to_string(label) + " in a non-virtual decomposition");
    }
    return *this;
  }

  Decomposition& operator+=(const Decomposition& other) {
    check_compatible(other);
    for (const auto& [l, m] : other.terms_) add(l, m);
    return *this;
  }

  Decomposition& operator-=(const Decomposition& other) {
    check_compatible(other);
    for (const auto& [l, m] : other.terms_) add(l, -m);
    return *this;
  }

  Decomposition scaled(Mult k) const {
    Decomposition out(family_, n_, virtual_ || k < 0);
    if (k != 0)
      for (const auto& [l, m] : terms_) out.terms_[l] = m * k;
    return out;
  }

  Decomposition as_virtual() const {
    Decomposition out = *this;
    out.virtual_ = true;
    return out;
  }

  /// Clears the virtual tag; fails if any multiplicity is negative.
  Decomposition as_actual() const {
    for (const auto& [l, m] : terms_)
      if (m < 0) fail(ErrorKind::NotRepresentation, "negative multiplicity for " + to_string(l));
    Decomposition out = *this;
    out.virtual_ = false;
    return out;
  }

  void check_compatible(const Decomposition& other) const {
    if (family_ != other.family_) fail(ErrorKind::Usage, "family mismatch in representation-ring arithmetic");
    if (n_ != other.n_)
      fail(ErrorKind::Usage, "cross-rank arithmetic (n=" + std::to_string(n_) + " vs n=" + std::to_string(other.n_) + ")");
  }

  /// Multiplicity-level equality (family, rank and terms; the virtual tag is ignored).
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  static Decomposition single(Family family, int n, const Label& label, Mult mult = 1) {
    Decomposition d(family, n);
    d.add(label, mult);
    return d;
  }

private:
  Family family_ = Family::SYM;
  int n_ = 0;
  bool virtual_ = false;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Decomposition& d) {
  os << to_string(d.family()) << "[n=" << d.n() << "]{";
  bool first = true;
  for (const auto& [l, m] : d.terms()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << to_string(l) << "):" << m;
  }
  return os << '}';
}

inline std::string to_string(const Decomposition& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

} // namespace repstab
