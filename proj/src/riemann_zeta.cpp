#include "dzeta/riemann_zeta.hpp"

#include <algorithm>
#include <cmath>

#include "dzeta/arith.hpp"
#include "dzeta/errors.hpp"

namespace dzeta {

ZetaEvalPolicy ZetaEvalPolicy::for_point(const Complex& s, int working_digits) {
  double t = std::fabs(s.imag().to_double());
  double sigma = s.real().to_double();
  auto by_rule = static_cast<unsigned>(std::ceil(0.7 * working_digits) + std::ceil(t / 2));
  unsigned cutoff = std::max({20u, by_rule, static_cast<unsigned>(std::ceil(t))});
  // The remainder after J terms is O(m^{-sigma-2J-1}); each term gains
  // roughly one decimal digit at this cutoff.
  unsigned terms = static_cast<unsigned>(working_digits) + 4;
  if (sigma < 0) terms += static_cast<unsigned>(std::ceil(-sigma / 2)) + 2;
  terms += terms % 2;
  return {cutoff, terms};
}

namespace detail {

Complex zeta_at_bits(const Complex& s_in, Precision bits) {
  int working_digits = digits_for_bits(bits);
  ZetaEvalPolicy policy = ZetaEvalPolicy::for_point(s_in, working_digits);
  const unsigned m = policy.cutoff;

  // For sigma < 1 the partial sum grows like m^{1-sigma} and cancels.
  double sigma_d = s_in.real().to_double();
  if (sigma_d < 1) {
    bits += static_cast<Precision>(std::ceil((1 - sigma_d) * std::log2(static_cast<double>(m)))) + 4;
  }

  Complex s(s_in, bits);
  std::vector<Complex> powers = inverse_powers(m, s, bits);

  Complex sum(bits);
  for (unsigned k = 0; k + 1 < m; ++k) sum += powers[k];

  const Complex& m_pow = powers[m - 1];
  Real m_real(static_cast<long>(m), bits);

  // m^{1-s}/(s-1)
  Complex s_minus_one = s - Real(1L, bits);
  sum += m_pow * m_real / s_minus_one;
  // m^{-s}/2
  Complex half = m_pow;
  half /= 2L;
  sum += half;

  // term_j = (s)_{2j-1} m^{-s-2j+1}, weighted by B_{2j}/(2j)!.
  Complex term = s * m_pow;
  term /= m_real;
  Real m_sq = m_real * m_real;
  const double eps_log10 = -static_cast<double>(bits) * std::log10(2.0);
  for (unsigned j = 1; j <= policy.expansion_terms; ++j) {
    Complex contribution = term * bernoulli_over_factorial(2 * j, bits);
    sum += contribution;
    double c_mag = abs(contribution).log10_abs();
    double s_mag = abs(sum).log10_abs();
    bool past_sigma = 2.0 * j + 1 > -sigma_d + 1;
    if (j >= 2 && past_sigma && (term.is_zero() || c_mag < s_mag + eps_log10)) break;
    // (s+2j-1)(s+2j) / m^2
    Complex a = s + Real(static_cast<long>(2 * j - 1), bits);
    Complex b = s + Real(static_cast<long>(2 * j), bits);
    term *= a * b;
    term /= m_sq;
  }
  return sum;
}

Complex zeta_derivative_at(const Complex& s, int digits, int working_digits) {
  int half = (digits + 1) / 2;
  Precision bits = bits_for_digits(working_digits + half + 2);
  Real h(bits);
  mpfr_set_ui(h.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(h.raw(), h.raw(), -half, MPFR_RNDN);
  Complex s_hi(s, bits);
  Complex plus = s_hi + h;
  Complex minus = s_hi - h;
  Complex d = zeta_at_bits(plus, bits) - zeta_at_bits(minus, bits);
  d /= h * 2L;
  return d;
}

}  // namespace detail

namespace {

double distance_to_one(const Complex& s) {
  return std::hypot(s.real().to_double() - 1.0, s.imag().to_double());
}

}  // namespace

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
  if (distance_to_one(s) <= kZetaPoleGuard) throw PoleError("pole of order 1 at s=1");
  Complex r = detail::zeta_at_bits(s, ctx.working_bits());
  r.round_to(ctx.result_bits());
  return r;
}

Rational zeta_at_negative_integer(unsigned k) {
  if (k == 0) return Rational(-1, 2);
  return -bernoulli_number(k + 1) / Rational(static_cast<long>(k) + 1);
}

Complex zeta_derivative(const Complex& s, const PrecisionContext& ctx) {
  if (distance_to_one(s) <= 1e-3) throw PoleError("pole of order 1 at s=1");
  Complex r = detail::zeta_derivative_at(s, ctx.digits(), ctx.working_digits());
  r.round_to(ctx.result_bits());
  return r;
}

}  // namespace dzeta
