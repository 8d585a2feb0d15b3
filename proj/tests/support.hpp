#ifndef DZETA_TESTS_SUPPORT_HPP
#define DZETA_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "dzeta/complex.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta::test {

/// Oracle literal parsed with plenty of bits.
inline Complex oracle(const std::string& text) { return Complex::parse(text, bits_for_digits(80)); }
inline Real oracle_real(const std::string& text) { return Real::parse(text, bits_for_digits(80)); }

inline double abs_error(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

/// log10 of |a - b| / |b|; -inf on exact agreement.
inline double rel_error_log10(const Complex& a, const Complex& b) {
  Complex d = a - b;
  if (d.is_zero()) return -INFINITY;
  return abs(d).log10_abs() - abs(b).log10_abs();
}

/// Seeded generator for property checks; the seed is part of every
/// failure message so a case can be replayed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Complex complex(double sigma_lo, double sigma_hi, double t_lo, double t_hi, Precision bits) {
    double s = uniform(sigma_lo, sigma_hi);
    double t = uniform(t_lo, t_hi);
    return Complex(s, t, bits);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace dzeta::test

#endif  // DZETA_TESTS_SUPPORT_HPP
