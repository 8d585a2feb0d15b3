#include <doctest.h>

#include <cmath>

#include "dzeta/arith.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/rational.hpp"
#include "dzeta/riemann_zeta.hpp"
#include "support.hpp"

using namespace dzeta;
using dzeta::test::Gen;

namespace {

struct OraclePoint {
  const char* s;
  const char* value;
};

// mpmath at 60 digits
const OraclePoint kZetaOracle[] = {
    {"0.5+30i", "-0.120642287590043699914021147312016281930528585293075272046194-0.583691214763706288757635825664255194144751148061234983003665i"},
    {"3+4i", "0.890554906965073258142689215589657949742467898823254334375297-0.00807594542432725984680909073843771045885728946725398440838123i"},
    {"-3.5+7i", "-0.413333071217888216953133478586873113509820000811537631045479+1.84182646197012282483316254506258939498635782588173037378668i"},
    {"-11.5+120i", "2392434699660423.17097889697851244776363372024351177853849724-219941531832729.730310132219610910306617289055940039620224014i"},
};

}  // namespace

TEST_SUITE("riemann-zeta") {

TEST_CASE("classical values") {
  PrecisionContext ctx(50);
  Precision bits = ctx.working_bits();
  Real pi = Real::pi(bits);
  Complex z2 = zeta(Complex(2.0, 0.0, bits), ctx);
  CHECK(test::rel_error_log10(z2, Complex(pi * pi / 6L, Real(bits))) < -49);
  Complex z0 = zeta(Complex(bits), ctx);
  CHECK(test::abs_error(z0, Complex(-0.5, 0.0, bits)) < 1e-49);
  for (long k : {2L, 4L, 6L}) {
    Complex v = zeta(Complex(static_cast<double>(-k), 0.0, bits), ctx);
    CHECK_MESSAGE(abs(v).log10_abs() < -ctx.digits() + 5, "s = -" << k);
  }
  Complex z3 = zeta(Complex(3.0, 0.0, bits), ctx);
  CHECK(test::rel_error_log10(z3, test::oracle("1.20205690315959428539973816151144999076498629234049888179227")) < -49);
}

TEST_CASE("zeta(3) against a direct sum with tail bounds") {
  PrecisionContext ctx(30);
  Precision bits = ctx.working_bits();
  Complex s(3.0, 0.0, bits);
  const unsigned K = 20000;
  std::vector<Complex> terms = inverse_powers(K, s, bits);
  Complex partial(bits);
  for (const Complex& c : terms) partial += c;
  // sum_{k>K} k^-3 lies between 1/(2(K+1)^2) and 1/(2K^2)
  double lo = 0.5 / ((K + 1.0) * (K + 1.0));
  double hi = 0.5 / (double(K) * K);
  double gap = (zeta(s, ctx) - partial).real().to_double();
  CHECK(gap > lo);
  CHECK(gap < hi);
}

TEST_CASE("frozen high-precision oracle values") {
  PrecisionContext ctx(50);
  for (const OraclePoint& p : kZetaOracle) {
    Complex s = Complex::parse(p.s, ctx.working_bits());
    CHECK_MESSAGE(test::rel_error_log10(zeta(s, ctx), test::oracle(p.value)) < -48, "s = " << p.s);
  }
}

TEST_CASE("pole guard") {
  PrecisionContext ctx(30);
  Precision bits = ctx.working_bits();
  CHECK_THROWS_AS(zeta(Complex(1.0, 0.0, bits), ctx), PoleError);
  CHECK_THROWS_AS(zeta(Complex(1.0 + 5e-7, 0.0, bits), ctx), PoleError);
  CHECK_NOTHROW(zeta(Complex(1.0 + 1e-5, 0.0, bits), ctx));
  CHECK_THROWS_AS(zeta_derivative(Complex(1.0, 5e-4, bits), ctx), PoleError);
  try {
    zeta(Complex(1.0, 0.0, bits), ctx);
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("s=1") != std::string::npos);
  }
}

TEST_CASE("exact values at negative integers") {
  CHECK(zeta_at_negative_integer(0) == Rational(-1, 2));
  CHECK(zeta_at_negative_integer(1) == Rational(-1, 12));
  CHECK(zeta_at_negative_integer(2) == Rational(0));
  CHECK(zeta_at_negative_integer(3) == Rational(1, 120));
  CHECK(zeta_at_negative_integer(5) == Rational(-1, 252));
  PrecisionContext ctx(40);
  for (unsigned k = 0; k <= 9; ++k) {
    Complex v = zeta(Complex(-static_cast<double>(k), 0.0, ctx.working_bits()), ctx);
    Real exact = zeta_at_negative_integer(k).to_real(ctx.working_bits());
    CHECK_MESSAGE(abs(v - Complex(exact, Real(ctx.working_bits()))).to_double() < 1e-38, "k = " << k);
  }
}

TEST_CASE("derivative values") {
  PrecisionContext ctx(50);
  Precision bits = ctx.working_bits();
  Complex d2 = zeta_derivative(Complex(2.0, 0.0, bits), ctx);
  CHECK(test::rel_error_log10(d2, test::oracle("-0.937548254315843753702574094567864")) < -30);
  Complex dm2 = zeta_derivative(Complex(-2.0, 0.0, bits), ctx);
  CHECK(test::rel_error_log10(dm2, test::oracle("-0.0304484570583932707802515304711547766470004835449739362529719")) < -24);
  Complex d = zeta_derivative(Complex::parse("0.5+14i", bits), ctx);
  CHECK(test::rel_error_log10(d, test::oracle("0.748233696120086262529159923141603431142715736731891325475182+0.204436533784997419471682850738829706146624688212530410506802i")) < -24);
}

TEST_CASE("conjugation symmetry") {
  Gen gen(31337);
  PrecisionContext ctx(40);
  for (int i = 0; i < 15; ++i) {
    Complex s = gen.complex(-4, 4, 0.5, 80, ctx.working_bits());
    CHECK_MESSAGE(test::rel_error_log10(zeta(conj(s), ctx), conj(zeta(s, ctx))) < -38, "seed " << gen.seed() << " i " << i);
    CHECK_MESSAGE(test::rel_error_log10(zeta_derivative(conj(s), ctx), conj(zeta_derivative(s, ctx))) < -18,
                  "seed " << gen.seed() << " i " << i);
  }
}

TEST_CASE("brute-force tail bound for sigma > 2") {
  Gen gen(4242);
  PrecisionContext ctx(30);
  Precision bits = ctx.working_bits();
  const unsigned K = 10000;
  for (int i = 0; i < 20; ++i) {
    Complex s = gen.complex(2.05, 6, -50, 50, bits);
    std::vector<Complex> terms = inverse_powers(K, s, bits);
    Complex partial(bits);
    for (const Complex& c : terms) partial += c;
    double sigma = s.real().to_double();
    double bound = std::pow(double(K), 1 - sigma) / (sigma - 1);
    CHECK_MESSAGE(abs(zeta(s, ctx) - partial).to_double() <= bound, "seed " << gen.seed() << " s " << s.to_string(10));
  }
}

TEST_CASE("error shrinks with precision") {
  Complex s = Complex::parse("0.5+30i", bits_for_digits(260));
  Complex reference = zeta(s, PrecisionContext(200));
  double e30 = abs(zeta(s, PrecisionContext(30)) - reference).log10_abs();
  double e60 = abs(zeta(s, PrecisionContext(60)) - reference).log10_abs();
  CHECK(e30 < -29);
  CHECK(e60 < -59);
  CHECK(e30 - e60 >= 30 - 5);
}

TEST_CASE("evaluation policy invariants") {
  Gen gen(9);
  for (int i = 0; i < 50; ++i) {
    Complex s = gen.complex(-20, 20, -1000, 1000, 128);
    int wd = static_cast<int>(gen.integer(26, 300));
    ZetaEvalPolicy p = ZetaEvalPolicy::for_point(s, wd);
    double t = std::fabs(s.imag().to_double());
    CHECK(p.cutoff >= std::max(10.0, std::ceil(t)));
    CHECK(p.expansion_terms % 2 == 0);
    CHECK(p.expansion_terms >= 4);
  }
}

}  // TEST_SUITE
