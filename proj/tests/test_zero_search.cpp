#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dzeta/double_zeta.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/zero_search.hpp"
#include "reference_zeros.hpp"
#include "support.hpp"

using namespace dzeta;

namespace {

bool has_seed_near(const std::vector<Seed>& seeds, double t, double tol) {
  return std::any_of(seeds.begin(), seeds.end(), [&](const Seed& s) { return std::fabs(s.t - t) < tol; });
}

bool near(const ZeroRecord& z, double sigma, double t, double tol) {
  return std::fabs(z.sigma() - sigma) < tol && std::fabs(z.t() - t) < tol;
}

}  // namespace

TEST_SUITE("zero-search") {

TEST_CASE("method names") {
  CHECK(method_from_string("hp") == Method::harmonic_product);
  CHECK(method_from_string("euler_maclaurin") == Method::euler_maclaurin);
  CHECK(to_string(Method::euler_maclaurin) == "euler_maclaurin");
  CHECK_THROWS_AS(method_from_string("newton"), DomainError);
}

TEST_CASE("scan config validation") {
  ScanConfig c;
  CHECK_NOTHROW(c.validate());
  c.t_step = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = ScanConfig{};
  c.sigma_hi = c.sigma_lo;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("grid points") {
  std::vector<double> g = grid_points(0, 1, 0.25);
  REQUIRE(g.size() == 5);
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK(grid_points(2, 60, 0.05).size() == 1161);
}

TEST_CASE("scan_line examples") {
  PrecisionContext ctx(16);
  CHECK(has_seed_near(scan_line(0.56, 60, 70, 0.05, ctx), 65.626, 0.1));
  CHECK(has_seed_near(scan_line(0.28, 8, 9, 0.05, ctx), 8.40, 0.05));
  CHECK(scan_line(4.0, 0, 100, 0.05, ctx).empty());
}

TEST_CASE("profile skips guarded points") {
  PrecisionContext ctx(16);
  LineProfile p = profile_line(0.5, -0.1, 0.1, 0.05, DiagonalFunction(), ctx);
  REQUIRE(p.skipped.size() == 1);
  CHECK(p.skipped[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.modulus.size() == p.t.size());
}

TEST_CASE("refine examples") {
  PrecisionContext ctx(50);
  DiagonalFunction f;
  Precision bits = ctx.working_bits();
  ZeroRecord a = refine_zero(Complex(0.28, 8.4, bits), f, ctx);
  CHECK(near(a, 0.27672860, 8.39755368, 1e-8));
  CHECK_FALSE(a.certified);
  CHECK(a.digits_used == 50);
  ZeroRecord b = refine_zero(Complex(1.04, 99.0, bits), f, ctx);
  CHECK(near(b, 1.043571, 98.989673, 1e-6));
  ZeroRecord c = refine_zero(Complex(0.72, 42.5, bits), f, ctx);
  CHECK(near(c, 0.719846, 42.458519, 1e-6));
  ZeroRecord d = refine_zero(Complex(0.72, 42.5, bits), DiagonalFunction(Method::euler_maclaurin), ctx);
  CHECK(d.method == Method::euler_maclaurin);
  REQUIRE(d.params);
  CHECK(d.params->N == 100);
  CHECK(abs(d.location - c.location).to_double() < 1e-15);
}

TEST_CASE("refine rejects guarded seeds") {
  PrecisionContext ctx(30);
  CHECK_THROWS_AS(refine_zero(Complex(1.0, 0.0, ctx.working_bits()), DiagonalFunction(), ctx), SingularityError);
}

TEST_CASE("find around the leftmost listed zero") {
  ScanConfig c;
  c.t_lo = 35;
  c.t_hi = 36;
  FindResult r = find_zeros_region(c, DiagonalFunction(), PrecisionContext(50));
  CHECK(r.failures.empty());
  REQUIRE(r.zeros.size() == 1);
  CHECK(near(r.zeros[0], -0.83037218, 35.60380497, 1e-6));
}

TEST_CASE("find on the first stretch") {
  ScanConfig c;
  c.t_hi = 16;
  FindResult r = find_zeros_region(c, DiagonalFunction(), PrecisionContext(40));
  REQUIRE(r.zeros.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    const auto& ref = test::kReferenceZeros[i];
    CHECK_MESSAGE(near(r.zeros[i], ref.sigma, ref.t, 1e-6), "zero " << i);
  }
  for (size_t i = 1; i < r.zeros.size(); ++i) CHECK(r.zeros[i - 1].t() < r.zeros[i].t());
}

TEST_CASE("find in the zero-free half plane") {
  ScanConfig c;
  c.sigma_lo = 2;
  c.sigma_hi = 4;
  c.sigma_step = 0.1;
  c.t_lo = 0;
  c.t_hi = 100;
  c.t_step = 0.1;
  FindResult r = find_zeros_region(c, DiagonalFunction(), PrecisionContext(30));
  CHECK(r.zeros.empty());
  CHECK(r.failures.empty());
}

TEST_CASE("real axis scan") {
  PrecisionContext ctx(40);
  std::vector<RealAxisPoint> a = real_axis_scan(0.5, 1, ctx);
  std::vector<RealAxisPoint> zeros;
  for (const auto& p : a)
    if (p.kind == RealAxisPoint::Kind::zero) zeros.push_back(p);
  REQUIRE(zeros.size() == 1);
  CHECK(std::fabs(zeros[0].location.to_double() - 0.626817553773093) < 1e-12);
  CHECK(std::count_if(a.begin(), a.end(), [](const RealAxisPoint& p) { return p.kind == RealAxisPoint::Kind::pole; }) == 2);

  std::vector<double> found;
  std::vector<double> exact;
  for (const auto& p : real_axis_scan(-5.5, -0.5, ctx)) {
    if (p.kind != RealAxisPoint::Kind::zero) continue;
    found.push_back(p.location.to_double());
    if (p.exact) exact.push_back(p.location.to_double());
  }
  std::sort(found.begin(), found.end());
  std::vector<double> expected{-5.000415702252600, -4, -3.005839037636462, -2, -1.095527347904747};
  REQUIRE(found.size() == expected.size());
  for (size_t i = 0; i < found.size(); ++i) CHECK(found[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  std::sort(exact.begin(), exact.end());
  CHECK(exact == std::vector<double>{-4, -2});
  CHECK_THROWS_AS(real_axis_scan(1, 0, ctx), DomainError);
}

TEST_CASE("sign change between the poles") {
  PrecisionContext ctx(30);
  Precision bits = ctx.working_bits();
  double lo = double_zeta_diagonal(Complex(0.6, 0.0, bits), ctx).real().to_double();
  double hi = double_zeta_diagonal(Complex(0.99, 0.0, bits), ctx).real().to_double();
  CHECK(lo * hi < 0);
}

TEST_CASE("refined zeros have small residual at higher precision") {
  PrecisionContext ctx(40);
  PrecisionContext check(60);
  DiagonalFunction f;
  for (size_t i = 0; i < test::kReferenceZeros.size(); i += 3) {
    const auto& ref = test::kReferenceZeros[i];
    ZeroRecord z = refine_zero(Complex(ref.sigma, ref.t, ctx.working_bits()), f, ctx);
    Complex at(z.location, check.working_bits());
    CHECK_MESSAGE(abs(double_zeta_diagonal(at, check)).to_double() < 1e-20, "zero " << i);
    CHECK(z.residual < 1e-20);
  }
}

TEST_CASE("refinement is idempotent") {
  PrecisionContext ctx(40);
  DiagonalFunction f;
  for (size_t i = 1; i < test::kReferenceZeros.size(); i += 4) {
    const auto& ref = test::kReferenceZeros[i];
    ZeroRecord once = refine_zero(Complex(ref.sigma, ref.t, ctx.working_bits()), f, ctx);
    ZeroRecord twice = refine_zero(once.location, f, ctx);
    CHECK_MESSAGE(abs(once.location - twice.location).to_double() < 1e-34, "zero " << i);
  }
}

TEST_CASE("conjugate closure") {
  PrecisionContext ctx(40);
  DiagonalFunction f;
  for (size_t i = 2; i < test::kReferenceZeros.size(); i += 5) {
    const auto& ref = test::kReferenceZeros[i];
    ZeroRecord up = refine_zero(Complex(ref.sigma, ref.t, ctx.working_bits()), f, ctx);
    ZeroRecord down = refine_zero(conj(up.location), f, ctx);
    CHECK_MESSAGE(abs(down.location - conj(up.location)).to_double() < 1e-34, "zero " << i);
  }
}

TEST_CASE("grid halving keeps the zero set") {
  PrecisionContext ctx(30);
  ScanConfig c;
  c.sigma_lo = 0.1;
  c.sigma_hi = 0.3;
  c.sigma_step = 0.2;
  FindResult coarse = find_zeros_region(c, DiagonalFunction(), ctx);
  c.t_step /= 2;
  FindResult fine = find_zeros_region(c, DiagonalFunction(), ctx);
  REQUIRE(coarse.zeros.size() == fine.zeros.size());
  CHECK(coarse.zeros.size() >= 10);
  for (size_t i = 0; i < coarse.zeros.size(); ++i) {
    CHECK_MESSAGE(abs(coarse.zeros[i].location - fine.zeros[i].location).to_double() < 1e-20, "i " << i);
  }
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  parallel_for(0, 4, [&](size_t) { hits[0] = 7; });
  CHECK(hits[0] == 1);
}

}  // TEST_SUITE
