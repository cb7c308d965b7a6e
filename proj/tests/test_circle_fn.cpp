#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hdlab/circle_fn.hpp"
#include "hdlab/geometry.hpp"
#include "support.hpp"

using namespace hdlab;
using oracle::pi;

namespace {

GridFunction e1(std::size_t M) {
  return GridFunction::sample(M, [](double t) { return std::polar(1.0, t); });
}

}  // namespace

TEST(GridFunction, RejectsBadSizesAndNonFinite) {
  EXPECT_THROW(GridFunction(std::vector<cplx>(6)), ValidationError);
  EXPECT_THROW(GridFunction(std::vector<cplx>(2)), ValidationError);
  std::vector<cplx> v(8, 1.0);
  v[3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(GridFunction{v}, ValidationError);
  EXPECT_NO_THROW(GridFunction(std::vector<cplx>(8)));
}

TEST(Analyze, SingleHarmonic) {
  const auto s = analyze(e1(16), 4);
  for (int n = -4; n <= 4; ++n) EXPECT_NEAR(std::abs(s(n) - (n == 1 ? 1.0 : 0.0)), 0.0, 1e-15) << n;
}

TEST(Analyze, ConstantAndCosine) {
  const auto c = analyze(GridFunction::constant(16, 3.0), 4);
  EXPECT_NEAR(std::abs(c(0) - 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c(2)), 0.0, 1e-15);
  const auto s = analyze(GridFunction::sample(32, [](double t) { return std::cos(t); }), 8);
  EXPECT_NEAR(std::abs(s(1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s(-1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s(0)), 0.0, 1e-15);
}

TEST(Analyze, MatchesNaiveDft) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<cplx> x(64);
  for (auto& z : x) z = {g(rng), g(rng)};
  const auto s = analyze(GridFunction(x), 31);
  const auto ref = oracle::naive_dft(x, 31);
  for (int n = -31; n <= 31; ++n) EXPECT_NEAR(std::abs(s(n) - ref[n + 31]), 0.0, 1e-13) << n;
}

TEST(Analyze, NyquistLimit) {
  EXPECT_THROW(analyze(e1(16), 8), ValidationError);
  EXPECT_NO_THROW(analyze(e1(16), 7));
}

TEST(Synthesize, MonomialAndZero) {
  const auto g = synthesize(FourierSeries::monomial(1), 8);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(g[k] - std::polar(1.0, g.angle(k))), 0.0, 1e-15);
  const auto z = synthesize(FourierSeries::zero(5), 16);
  for (const auto& v : z.samples()) EXPECT_EQ(v, cplx(0.0));
}

TEST(Synthesize, RoundTripRandomSeries) {
  std::mt19937_64 rng(11);
  const auto c = oracle::random_coeffs(rng, 32);
  const FourierSeries s(32, c);
  const auto back = analyze(synthesize(s, 128), 32);
  double err = 0.0;
  for (int n = -32; n <= 32; ++n) err = std::max(err, std::abs(back(n) - s(n)));
  EXPECT_LT(err, 1e-12);
  const auto direct = oracle::sample_poly(c, 128);
  const auto g = synthesize(s, 128);
  for (std::size_t k = 0; k < 128; ++k) EXPECT_NEAR(std::abs(g[k] - direct[k]), 0.0, 1e-11);
}

TEST(Synthesize, RequiresOversampling) {
  EXPECT_THROW(synthesize(FourierSeries::zero(4), 8), ValidationError);
  EXPECT_THROW(synthesize(FourierSeries::zero(2), 12), ValidationError);
}

TEST(PointwiseMul, ProductFormulas) {
  const auto sq = pointwise_mul(e1(16), e1(16));
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(sq[k] - std::polar(1.0, 2.0 * sq.angle(k))), 0.0, 1e-14);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  std::vector<cplx> x(32);
  for (auto& z : x) z = {n(rng), n(rng)};
  const auto same = pointwise_mul(GridFunction(x), GridFunction::constant(32, 1.0));
  for (std::size_t k = 0; k < 32; ++k) EXPECT_EQ(same[k], x[k]);

  const auto c = GridFunction::sample(64, [](double t) { return std::cos(t); });
  const auto s = analyze(pointwise_mul(c, c), 8);
  EXPECT_NEAR(s(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(s(2).real(), 0.25, 1e-15);
  EXPECT_NEAR(s(-2).real(), 0.25, 1e-15);
  EXPECT_NEAR(std::abs(s(1)), 0.0, 1e-15);
  EXPECT_THROW(pointwise_mul(e1(16), e1(32)), ValidationError);
}

TEST(Shift, MovesCoefficients) {
  const auto s = shift(FourierSeries::monomial(0), 1);
  EXPECT_EQ(s(1), cplx(1.0));
  EXPECT_EQ(s(0), cplx(0.0));

  std::mt19937_64 rng(5);
  const FourierSeries r(6, oracle::random_coeffs(rng, 6));
  const auto id = shift(r, 0);
  const auto twice = shift(shift(r, 1), 1);
  const auto once = shift(r, 2);
  for (int n = -10; n <= 10; ++n) {
    EXPECT_EQ(id(n), r(n));
    EXPECT_EQ(twice(n), once(n));
    EXPECT_EQ(once(n), r(n - 2));
  }
  EXPECT_EQ(once.bandwidth(), 8);
}

TEST(FourierSeries, OutsideRangeIsZero) {
  const auto m = FourierSeries::monomial(3, 2.0);
  EXPECT_EQ(m(3), cplx(2.0));
  EXPECT_EQ(m(100), cplx(0.0));
  EXPECT_EQ(m(-4), cplx(0.0));
}

TEST(SpectralDerivative, TrigPolynomial) {
  const auto g = GridFunction::sample(64, [](double t) { return std::sin(3 * t) + cplx(0, 1) * std::cos(t); });
  const auto d = spectral_derivative(g);
  for (std::size_t k = 0; k < 64; ++k) {
    const double t = g.angle(k);
    EXPECT_NEAR(std::abs(d[k] - (3 * std::cos(3 * t) - cplx(0, 1) * std::sin(t))), 0.0, 1e-12);
  }
}

TEST(LipSeminorm, IdentityAndConstant) {
  EXPECT_NEAR(lip_seminorm(e1(64), 1.0), 1.0, 1e-12);
  EXPECT_EQ(lip_seminorm(GridFunction::constant(64, 2.0), 0.5), 0.0);
  EXPECT_THROW(lip_seminorm(e1(64), 0.0), ValidationError);
  EXPECT_THROW(lip_seminorm(e1(64), 1.5), ValidationError);
}

TEST(LipSeminorm, DistancePowerStableUnderRefinement) {
  const auto E = CircleSet::from_points({0.0, pi});
  auto f = [&](std::size_t M) {
    auto d = sample_distance(E, M);
    for (double& x : d) x = std::pow(x, 0.5);
    return lip_seminorm(GridFunction::from_real(d), 0.5);
  };
  const double a = f(512), b = f(1024);
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_LT(oracle::rel(b, a), 0.05);
}
