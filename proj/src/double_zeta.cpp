#include "dzeta/double_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dzeta/arith.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/riemann_zeta.hpp"

namespace dzeta {

void EvalParams::validate() const {
  if (l < 1 || l > 20) throw DomainError("EvalParams: l must lie in [1, 20]");
  if (N < 10) throw DomainError("EvalParams: N must be at least 10");
  if (!(guard_radius > 0)) throw DomainError("EvalParams: guard_radius must be positive");
}

EvalParams em_params_for(double t) {
  if (t < 0) throw DomainError("em_params_for: t must be non-negative");
  if (t < 400) return {10, 100};
  if (t < 600) return {8, 200};
  if (t < 800) return {8, 300};
  auto steps = static_cast<unsigned>(std::ceil((t - 800) / 200));
  return {8, 300 + 100 * steps, kDefaultGuardRadius, true};
}

namespace {

constexpr double kLog10Of2 = 0.30102999566398120;

double log10_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = std::max(a, b);
  double lo = std::min(a, b);
  return hi + std::log10(1.0 + std::pow(10.0, lo - hi));
}

double log10_abs(const Complex& z) {
  double re = z.real().log10_abs();
  double im = z.imag().log10_abs();
  return log10_sum_exp(re, im);
}

int ceil_digits(double x) { return static_cast<int>(std::ceil(std::max(0.0, x))); }

// c_q = (s)_q B_{q+1}/(q+1)! for q = 1..l, index q-1. Entries with
// B_{q+1} = 0 (even q) are left at zero and never multiply anything.
std::vector<Complex> em_coefficients(const Complex& s_in, unsigned l, Precision bits) {
  Complex s(s_in, bits);
  std::vector<Complex> coeffs;
  coeffs.reserve(l);
  Complex rising(1.0, 0.0, bits);
  for (unsigned q = 1; q <= l; ++q) {
    rising *= s + Real(static_cast<long>(q - 1), bits);
    if (q % 2 == 0) {
      coeffs.emplace_back(bits);
    } else {
      coeffs.push_back(rising * bernoulli_over_factorial(q + 1, bits));
    }
  }
  return coeffs;
}

std::vector<double> coefficient_log10(const std::vector<Complex>& coeffs) {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const Complex& c : coeffs) out.push_back(log10_abs(c));
  return out;
}

double max_log10(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  return m;
}

// Pieces of phi_l(n, s) other than the partial sum:
//   zeta(s) + n^{-s} (n/(1-s) + 1/2 - sum_q c_q n^{-q}).
struct TailBracket {
  Complex value;
  // log10 of the largest magnitude entering the bracket.
  double scale_log10;
};

class PhiEvaluator {
 public:
  PhiEvaluator(const Complex& s, unsigned l, Precision bits)
      : bits_(bits),
        s_(s, bits),
        sigma_(s.real().to_double()),
        coeffs_(em_coefficients(s, l, bits)),
        coeff_log10_(coefficient_log10(coeffs_)),
        inv_one_minus_s_(Complex(1.0, 0.0, bits) / (Complex(1.0, 0.0, bits) - s_)),
        zeta_s_(detail::zeta_at_bits(s_, bits)),
        zeta_log10_(log10_abs(zeta_s_)),
        one_minus_s_log10_(log10_abs(Complex(1.0, 0.0, bits) - s_)) {}

  TailBracket bracket(unsigned n, const Complex& n_pow) const {
    Real inv_n(1L, bits_);
    inv_n /= static_cast<long>(n);
    // Horner in 1/n over the non-vanishing coefficients.
    Complex h(bits_);
    for (size_t q = coeffs_.size(); q-- > 0;) {
      h *= inv_n;
      if (!coeffs_[q].is_zero()) h += coeffs_[q];
    }
    h *= inv_n;
    Complex w = inv_one_minus_s_ * Real(static_cast<long>(n), bits_);
    w += Real(0.5, bits_);
    w -= h;
    Complex value = zeta_s_ + n_pow * w;

    double log_n = std::log10(static_cast<double>(n));
    double inner = log_n - one_minus_s_log10_;
    for (size_t q = 0; q < coeff_log10_.size(); ++q) {
      inner = log10_sum_exp(inner, coeff_log10_[q] - static_cast<double>(q + 1) * log_n);
    }
    double scale = std::max(zeta_log10_, -sigma_ * log_n + std::max(inner, 0.0));
    return {std::move(value), scale};
  }

  const Complex& s() const { return s_; }
  const Complex& zeta_s() const { return zeta_s_; }
  Precision bits() const { return bits_; }

 private:
  Precision bits_;
  Complex s_;
  double sigma_;
  std::vector<Complex> coeffs_;
  std::vector<double> coeff_log10_;
  Complex inv_one_minus_s_;
  Complex zeta_s_;
  double zeta_log10_;
  double one_minus_s_log10_;
};

// sum_{k >= m} k^{-s} by Euler-Maclaurin at m with no explicit terms.
// Requires m well above |s|/(2 pi).
Complex hurwitz_tail(unsigned m, const Complex& s, Precision bits) {
  Real m_real(static_cast<long>(m), bits);
  Complex exponent = s * log(m_real);
  Complex m_pow = exp(-exponent);
  Complex s_minus_one = s - Real(1L, bits);
  Complex sum = m_pow * m_real / s_minus_one;
  Complex half = m_pow;
  half /= 2L;
  sum += half;
  Complex term = s * m_pow;
  term /= m_real;
  Real m_sq = m_real * m_real;
  const double eps_log10 = -static_cast<double>(bits) * kLog10Of2;
  for (unsigned j = 1; j < 4 * static_cast<unsigned>(bits); ++j) {
    Complex c = term * bernoulli_over_factorial(2 * j, bits);
    sum += c;
    if (j >= 2 && (c.is_zero() || log10_abs(c) < log10_abs(sum) + eps_log10)) break;
    Complex a = s + Real(static_cast<long>(2 * j - 1), bits);
    Complex b = s + Real(static_cast<long>(2 * j), bits);
    term *= a * b;
    term /= m_sq;
  }
  return sum;
}

constexpr unsigned kDirectPhiLimit = 20000;

double abs_estimate_log10(const Complex& z) {
  double re = z.real().to_double();
  double im = z.imag().to_double();
  double h = std::hypot(re, im);
  return h > 0 && std::isfinite(h) ? std::log10(h) : log10_abs(z);
}

}  // namespace

Complex phi_tail(unsigned n, const Complex& s, unsigned l, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("phi_tail: n must be positive");
  if (l < 1 || l > 20) throw DomainError("phi_tail: l must lie in [1, 20]");
  if (std::hypot(s.real().to_double() - 1.0, s.imag().to_double()) <= kDefaultGuardRadius) {
    throw PoleError("pole of order 1 at s=1");
  }
  double sigma = s.real().to_double();
  double log_n = std::log10(static_cast<double>(n));
  double coeff_mag = max_log10(coefficient_log10(em_coefficients(s, l, 64)));
  int extra = ceil_digits((sigma + l + 1) * log_n) + ctx.guard_digits() + ceil_digits(coeff_mag) +
              ceil_digits((1 - sigma) * log_n);
  int phi_digits = ctx.working_digits() + extra;
  Precision bits = bits_for_digits(phi_digits);

  PhiEvaluator eval(s, l, bits);
  Complex partial(bits);
  Complex n_pow(bits);
  double partial_log10;
  if (n <= kDirectPhiLimit) {
    std::vector<Complex> powers = inverse_powers(n, eval.s(), bits);
    for (const Complex& p : powers) partial += p;
    n_pow = powers[n - 1];
    partial_log10 = abs_estimate_log10(partial);
  } else {
    // Far from the origin the partial sum is zeta(s) minus a rapidly
    // converging Euler-Maclaurin tail.
    Complex tail = hurwitz_tail(n + 1, eval.s(), bits);
    partial = eval.zeta_s() - tail;
    n_pow = complex_pow(Real(static_cast<long>(n), bits), eval.s(), PrecisionContext(phi_digits));
    n_pow.round_to(bits);
    partial_log10 = std::max(abs_estimate_log10(partial), log10_abs(tail));
  }
  TailBracket b = eval.bracket(n, n_pow);
  Complex phi = partial - b.value;

  double scale = std::max(partial_log10, b.scale_log10);
  double retained = phi_digits - (scale - log10_abs(phi));
  if (!phi.is_zero() && retained < ctx.digits()) {
    throw PrecisionError("phi_tail: cancellation left " + std::to_string(static_cast<int>(retained)) +
                         " of " + std::to_string(ctx.digits()) + " digits");
  }
  phi.round_to(ctx.result_bits());
  return phi;
}

Complex double_zeta_em(const Complex& s1, const Complex& s2, const EvalParams& params,
                       const PrecisionContext& ctx) {
  params.validate();
  if (auto locus = SingularityMap::general_near(s1, s2, params.guard_radius, params.l)) {
    throw SingularityError(*locus, "zeta_2 is singular on the locus " + *locus);
  }
  double sigma1 = s1.real().to_double();
  double sigma2 = s2.real().to_double();
  if (!(sigma1 + sigma2 > -static_cast<double>(params.l))) {
    throw DomainError("double_zeta_em: requires Re(s1+s2) > -l");
  }
  const unsigned l = params.l;
  const unsigned big_n = params.N;
  double log_big_n = std::log10(static_cast<double>(big_n));

  // Large Bernoulli coefficients cancel between the leading terms and the
  // remainder sum; carry their magnitude as extra digits.
  double coeff_mag = max_log10(coefficient_log10(em_coefficients(s2, l, 64)));
  int big_digits = ctx.working_digits() + ceil_digits(coeff_mag);
  int budget = std::max(ceil_digits((sigma2 + l + 1) * log_big_n) + ctx.guard_digits(),
                        ceil_digits((std::max(0.0, 1 - sigma2) + std::max(0.0, -sigma1) + 1) * log_big_n));
  int phi_digits = big_digits + budget;
  Precision big_bits = bits_for_digits(big_digits);
  Precision phi_bits = bits_for_digits(phi_digits);

  Complex a(s1, big_bits);
  Complex b(s2, big_bits);
  Complex sum = a + b;
  Real one(1L, big_bits);

  // zeta(s1+s2-1)/(s2-1) - zeta(s1+s2)/2 + sum_q c_q zeta(s1+s2+q)
  Complex lead = detail::zeta_at_bits(sum - one, big_bits) / (b - one);
  Complex zeta_sum = detail::zeta_at_bits(sum, big_bits);
  zeta_sum /= 2L;
  lead -= zeta_sum;
  std::vector<Complex> coeffs = em_coefficients(b, l, big_bits);
  for (unsigned q = 1; q <= l; ++q) {
    if (q % 2 == 0) continue;  // B_{q+1} = 0; zeta(s1+s2+q) may sit on its pole
    lead += coeffs[q - 1] * detail::zeta_at_bits(sum + Real(static_cast<long>(q), big_bits), big_bits);
  }

  PhiEvaluator eval(s2, l, phi_bits);
  std::vector<Complex> pow2 = inverse_powers(big_n, eval.s(), phi_bits);
  bool diagonal = s1 == s2;
  std::vector<Complex> pow1;
  if (!diagonal) pow1 = inverse_powers(big_n, Complex(s1, phi_bits), phi_bits);

  Complex partial(phi_bits);
  Complex tail(phi_bits);
  double error_log10 = -std::numeric_limits<double>::infinity();
  for (unsigned n = 1; n <= big_n; ++n) {
    const Complex& p2 = pow2[n - 1];
    partial += p2;
    TailBracket br = eval.bracket(n, p2);
    Complex phi = partial - br.value;
    const Complex& p1 = diagonal ? p2 : pow1[n - 1];
    tail += phi * p1;
    double log_n = std::log10(static_cast<double>(n));
    double scale = std::max(abs_estimate_log10(partial), br.scale_log10);
    error_log10 = log10_sum_exp(error_log10, scale - sigma1 * log_n);
  }
  error_log10 -= phi_digits;

  Complex result = lead;
  result.round_to(phi_bits);
  result -= tail;
  double allowed = -ctx.working_digits() + std::max(0.0, abs_estimate_log10(result)) + ctx.guard_digits() / 2.0;
  if (error_log10 > allowed) {
    throw PrecisionError("double_zeta_em: remainder cancellation exceeds the precision budget");
  }
  result.round_to(ctx.result_bits());
  return result;
}

namespace detail {

void check_diagonal(const Complex& s, double radius) {
  auto sing = SingularityMap::diagonal_near(s, radius);
  if (!sing) return;
  if (sing->kind == DiagonalSingularity::Kind::pole) throw PoleError(sing->describe());
  throw IndeterminateError(sing->describe(),
                           sing->describe() + " (use central_value(" +
                               (-sing->location).to_string() + "))");
}

Complex diagonal_at(const Complex& s, int working_digits) {
  Precision bits = bits_for_digits(working_digits);
  Complex z(s, bits);
  Complex zs = zeta_at_bits(z, bits);
  Complex two_s = z;
  two_s *= 2L;
  Complex r = zs * zs - zeta_at_bits(two_s, bits);
  r /= 2L;
  return r;
}

}  // namespace detail

Complex double_zeta_diagonal(const Complex& s, const PrecisionContext& ctx, double guard_radius) {
  detail::check_diagonal(s, guard_radius);
  Complex r = detail::diagonal_at(s, ctx.working_digits());
  r.round_to(ctx.result_bits());
  return r;
}

Complex diagonal_derivative(const Complex& s, const PrecisionContext& ctx, double guard_radius) {
  detail::check_diagonal(s, guard_radius);
  Precision bits = ctx.working_bits();
  Complex z(s, bits);
  Complex two_s = z;
  two_s *= 2L;
  Complex r = detail::zeta_at_bits(z, bits) *
                  detail::zeta_derivative_at(z, ctx.digits(), ctx.working_digits()) -
              detail::zeta_derivative_at(two_s, ctx.digits(), ctx.working_digits());
  r.round_to(ctx.result_bits());
  return r;
}

Rational central_value(unsigned k) {
  Rational z = zeta_at_negative_integer(k);
  return (z * z - zeta_at_negative_integer(2 * k)) / Rational(2);
}

double zero_free_bound(double sigma) {
  if (!(sigma > 1)) throw DomainError("zero_free_bound requires sigma > 1");
  double d = sigma - 1;
  double bound = std::pow(2.0, -sigma);
  bound += 2 * (sigma + 2) / d * std::pow(3.0, -sigma);                  // 2|Z1|
  bound += (sigma + 0.5) / d * std::pow(2.0 / 3.0, sigma);               // |Z2|
  bound += sigma / (d * d) * std::pow(2.0, 2 - 3 * sigma);               // |Z3|
  bound += (sigma - 0.25) / (d * d) * std::pow(2.0, 1 - sigma) *
           std::pow(1.5, 1 - 2 * sigma);                                 // |Z4|
  return bound;
}

double zero_free_threshold() {
  for (int i = 1; i <= 49000; ++i) {
    double sigma = 1.0 + i / 1000.0;
    if (zero_free_bound(sigma) < 1) return sigma;
  }
  return 50.0;
}

}  // namespace dzeta
