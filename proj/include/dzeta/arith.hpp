#ifndef DZETA_ARITH_HPP
#define DZETA_ARITH_HPP

#include <vector>

#include "dzeta/complex.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/rational.hpp"

namespace dzeta {

/// Exact B_q with t/(e^t - 1) = sum B_q t^q / q!, so B_1 = -1/2.
/// Thread-safe; values are cached after first use.
Rational bernoulli_number(unsigned q);

/// B_q / q! rounded to `bits`.
Real bernoulli_over_factorial(unsigned q, Precision bits);

/// Rising factorial (s)_q = s(s+1)...(s+q-1); (s)_0 = 1.
Complex pochhammer(const Complex& s, unsigned q);

/// n^{-s} = exp(-s ln n) at the working precision of `ctx`, rounded to
/// ctx.digits(). Exactly 1 when s = 0. Throws DomainError for n <= 0.
Complex complex_pow(const Real& n, const Complex& s, const PrecisionContext& ctx);

/// k^{-s} for k = 1..count at `bits`, entry k-1 holding k^{-s}.
/// Composite k reuse the factorisation k = p*(k/p).
std::vector<Complex> inverse_powers(unsigned count, const Complex& s, Precision bits);

}  // namespace dzeta

#endif  // DZETA_ARITH_HPP
