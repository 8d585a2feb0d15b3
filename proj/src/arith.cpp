#include "dzeta/arith.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "dzeta/errors.hpp"

namespace dzeta {

PrecisionContext::PrecisionContext(int digits, int guard_digits)
    : digits_(digits), guard_digits_(guard_digits) {
  if (digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (guard_digits < kMinGuardDigits) {
    throw DomainError("guard digits must be at least " + std::to_string(kMinGuardDigits));
  }
}

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw DomainError("not a rational: '" + text + "'");
  }
  return Rational(q);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Real Rational::to_real(Precision bits) const {
  Real r(bits);
  mpfr_set_q(r.raw(), value_.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero rational");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

namespace {

// B_{2k} for k = 1..capacity via tangent numbers, exact.
class EvenBernoulliTable {
 public:
  mpq_class get(unsigned k) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (k > values_.size()) grow(std::max<unsigned>(k, 2 * static_cast<unsigned>(values_.size())));
    return values_[k - 1];
  }

 private:
  void grow(unsigned n) {
    std::vector<mpz_class> tangent(n + 1);
    tangent[1] = 1;
    for (unsigned k = 2; k <= n; ++k) tangent[k] = (k - 1) * tangent[k - 1];
    for (unsigned k = 2; k <= n; ++k) {
      for (unsigned j = k; j <= n; ++j) {
        tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];
      }
    }
    values_.clear();
    values_.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
      mpq_class b(2 * k * tangent[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

EvenBernoulliTable& even_table() {
  static EvenBernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli_number(unsigned q) {
  if (q == 0) return Rational(1);
  if (q == 1) return Rational(-1, 2);
  if (q % 2 == 1) return Rational(0);
  return Rational(even_table().get(q / 2));
}

Real bernoulli_over_factorial(unsigned q, Precision bits) {
  thread_local std::map<std::pair<unsigned, Precision>, Real> cache;
  auto key = std::make_pair(q, bits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), q);
  Rational value = bernoulli_number(q) / Rational(mpq_class(fact));
  Real r = value.to_real(bits);
  cache.emplace(key, r);
  return r;
}

Complex pochhammer(const Complex& s, unsigned q) {
  Precision bits = s.precision();
  Complex result(1.0, 0.0, bits);
  for (unsigned k = 0; k < q; ++k) {
    result *= s + Real(static_cast<long>(k), bits);
  }
  return result;
}

Complex complex_pow(const Real& n, const Complex& s, const PrecisionContext& ctx) {
  if (n.sign() <= 0) throw DomainError("complex_pow requires a positive base");
  Precision bits = ctx.working_bits();
  if (s.is_zero()) return Complex(1.0, 0.0, ctx.result_bits());
  Real ln_n = log(Real(n, bits));
  Complex exponent(Real(s.real(), bits), Real(s.imag(), bits));
  exponent *= ln_n;
  Complex r = exp(-exponent);
  r.round_to(ctx.result_bits());
  return r;
}

std::vector<Complex> inverse_powers(unsigned count, const Complex& s, Precision bits) {
  std::vector<Complex> out;
  out.reserve(count);
  if (count == 0) return out;
  std::vector<unsigned> least_factor(count + 1, 0);
  for (unsigned p = 2; p <= count; ++p) {
    if (least_factor[p] != 0) continue;
    for (unsigned long m = p; m <= count; m += p) {
      if (least_factor[m] == 0) least_factor[m] = p;
    }
  }
  Real sigma(s.real(), bits);
  Real t(s.imag(), bits);
  bool real_exponent = t.is_zero();
  Real ln(bits), mag(bits), ta(bits), tb(bits);
  out.emplace_back(1.0, 0.0, bits);
  for (unsigned k = 2; k <= count; ++k) {
    unsigned p = least_factor[k];
    if (p == k) {
      Complex v(bits);
      mpfr_set_ui(ln.raw(), k, MPFR_RNDN);
      mpfr_log(ln.raw(), ln.raw(), MPFR_RNDN);
      mpfr_mul(mag.raw(), sigma.raw(), ln.raw(), MPFR_RNDN);
      mpfr_neg(mag.raw(), mag.raw(), MPFR_RNDN);
      mpfr_exp(mag.raw(), mag.raw(), MPFR_RNDN);
      if (real_exponent) {
        mpfr_set(v.real().raw(), mag.raw(), MPFR_RNDN);
      } else {
        mpfr_mul(ln.raw(), ln.raw(), t.raw(), MPFR_RNDN);
        mpfr_sin_cos(v.imag().raw(), v.real().raw(), ln.raw(), MPFR_RNDN);
        mpfr_neg(v.imag().raw(), v.imag().raw(), MPFR_RNDN);
        mpfr_mul(v.real().raw(), v.real().raw(), mag.raw(), MPFR_RNDN);
        mpfr_mul(v.imag().raw(), v.imag().raw(), mag.raw(), MPFR_RNDN);
      }
      out.push_back(std::move(v));
    } else {
      Complex v = out[p - 1];
      mul_inplace(v, out[k / p - 1], ta, tb);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace dzeta
