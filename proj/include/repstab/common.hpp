#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace repstab {

using Integer = mpz_class;
using Rational = mpq_class;
using Mult = std::int64_t;

/// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Usage,             // malformed input or arguments
  Validity,          // a stated validity bound is violated (padding, KW/Stembridge ranges)
  Resource,          // configured resource cap refused the computation
  NotRepresentation, // a class function or weight table is not a genuine module
  NotDivisible,      // ring division failed
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Usage: return 2;
  case ErrorKind::Validity: return 3;
  case ErrorKind::Resource: return 4;
  default: return 1;
  }
}

/// Process-wide resource caps. Values can be overridden from the environment
/// (REPSTAB_MAX_N, REPSTAB_MAX_DEGREE, REPSTAB_THREADS, REPSTAB_WINDOW) or by the CLI.
struct Limits {
  int max_sym_n = 16;          // symmetric / hyperoctahedral character tables
  int max_plethysm_degree = 12;
  int max_lie_rank = 5;
  int max_lie_step = 3;
  int max_lie_grading = 12;
  int max_lie_degree = 5;
  int max_braid_n = 9;
  int threads = 1;
  int window = 3;

  static Limits& global() {
    static Limits limits = from_env();
    return limits;
  }

  static Limits from_env() {
    Limits l;
    auto read = [](const char* name, int& slot) {
      if (const char* v = std::getenv(name)) {
        try {
          slot = std::stoi(v);
        } catch (const std::exception&) {
          fail(ErrorKind::Usage, std::string("bad integer in environment variable ") + name);
        }
      }
    };
    int max_n = -1;
    read("REPSTAB_MAX_N", max_n);
    if (max_n > 0) {
      l.max_sym_n = max_n;
      l.max_braid_n = max_n;
      l.max_lie_rank = max_n;
    }
    read("REPSTAB_MAX_DEGREE", l.max_plethysm_degree);
    read("REPSTAB_THREADS", l.threads);
    read("REPSTAB_WINDOW", l.window);
    return l;
  }
};

inline void require_cap(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Resource, "resource cap exceeded: " + what);
}

/// Mutex-guarded memo table. Values are computed outside the lock; a racing
/// duplicate computation is harmless because every cached function is pure.
template <class Key, class Value>
class Memo {
public:
  template <class F>
  Value get(const Key& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
  }

private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Mult to_mult(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::Internal, "multiplicity overflows 64 bits");
  return z.get_si();
}

inline Mult to_mult(const Rational& q) {
  if (q.get_den() != 1) fail(ErrorKind::Internal, "non-integral value where an integer was expected");
  return to_mult(q.get_num());
}

} // namespace repstab
