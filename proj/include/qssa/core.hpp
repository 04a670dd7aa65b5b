#pragma once

// Shared numeric types, exponent vectors and error types.

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qssa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector. Trailing zeros are always trimmed so that equal
/// monomials have equal representations regardless of universe size.
using Exponents = boost::container::small_vector<std::uint16_t, 12>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

inline void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline std::uint16_t exponent_at(const Exponents& e, std::size_t i) {
  return i < e.size() ? e[i] : std::uint16_t{0};
}

inline std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  const Exponents& longer = a.size() >= b.size() ? a : b;
  const Exponents& shorter = a.size() >= b.size() ? b : a;
  Exponents r(longer);
  for (std::size_t i = 0; i < shorter.size(); ++i) {
    std::uint32_t s = std::uint32_t(r[i]) + shorter[i];
    if (s > 0xFFFFu) throw DomainError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

inline bool divides_exponents(const Exponents& d, const Exponents& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

/// m / d, assuming divides_exponents(d, m).
inline Exponents sub_exponents(const Exponents& m, const Exponents& d) {
  Exponents r(m);
  for (std::size_t i = 0; i < d.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] - d[i]);
  trim(r);
  return r;
}

inline Exponents lcm_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(exponent_at(a, i), exponent_at(b, i));
  return r;
}

inline Exponents gcd_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(std::min(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  trim(r);
  return r;
}

inline bool coprime_exponents(const Exponents& a, const Exponents& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// Lexicographic comparison, index 0 most significant.
inline int compare_lex(const Exponents& a, const Exponents& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto x = exponent_at(a, i), y = exponent_at(b, i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

/// Graded lexicographic comparison.
inline int compare_grlex(const Exponents& a, const Exponents& b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  return compare_lex(a, b);
}

inline Exponents unit_exponents(std::size_t index, std::uint16_t power = 1) {
  Exponents e(index + 1, 0);
  e[index] = power;
  return e;
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Wall-clock and step budget shared by long-running computations.
class Budget {
 public:
  Budget() = default;
  explicit Budget(double seconds, std::uint64_t max_steps = 0)
      : deadline_(seconds > 0 ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                   std::chrono::duration<double>(seconds))
                              : Clock::time_point::max()),
        max_steps_(max_steps) {}

  void step(std::uint64_t n = 1) {
    steps_ += n;
    if (max_steps_ && steps_ > max_steps_) throw ResourceLimit("step cap exceeded");
    if ((steps_ & 0x3F) == 0 || n > 1) check_time();
  }
  void check_time() const {
    if (deadline_ != Clock::time_point::max() && Clock::now() > deadline_)
      throw ResourceLimit("time cap exceeded");
  }
  std::uint64_t steps() const { return steps_; }

  static Budget& unlimited() {
    thread_local Budget b;
    return b;
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point deadline_ = Clock::time_point::max();
  std::uint64_t max_steps_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace qssa
