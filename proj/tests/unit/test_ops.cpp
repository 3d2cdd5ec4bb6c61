#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jackson/ops.hpp"
#include "oracles.hpp"

using namespace jackson;
using namespace jackson::ops;

namespace {
const double pi = std::numbers::pi;
GridFunction cos1(std::size_t n = 64) {
  return discretize([](double x) { return std::cos(x); }, n);
}
}  // namespace

TEST(Translate, IdentityTrigAndGroupLaw) {
  const auto f = oracle::random_poly_1d(3, 64, 10);
  EXPECT_LT(translate(f, 0.0).max_abs_diff(f), 1e-14);
  const auto msin = discretize([](double x) { return -std::sin(x); }, 64);
  EXPECT_LT(translate(cos1(), pi / 2).max_abs_diff(msin), 1e-12);
  EXPECT_LT(translate(translate(f, 0.3), 1.1).max_abs_diff(translate(f, 1.4)), 1e-12);
  const auto g = oracle::random_poly_2d(4, 32, 6);
  EXPECT_LT(translate(translate(g, {0.3, -0.2}), {0.5, 1.0}).max_abs_diff(translate(g, {0.8, 0.8})), 1e-12);
}

TEST(Difference, ClosedFormAndBinomial) {
  const auto f = oracle::random_poly_1d(5, 64, 12);
  EXPECT_LT(difference(f, 0.0, 1).max_abs(), 1e-15);
  for (double h : {0.1, 0.7, 2.0, 3.1}) {
    const auto d = difference(cos1(), h, 1);
    const auto direct = discretize([&](double x) { return std::cos(x + h) - std::cos(x); }, 64);
    EXPECT_NEAR(lp_norm(d, 2), lp_norm(direct, 2), 1e-13);
    EXPECT_NEAR(lp_norm(d, 2), std::sqrt(2.0) * std::abs(std::sin(h / 2)), 1e-13);
  }
  for (int r = 1; r <= 4; ++r) {
    const double h = 0.41;
    GridFunction rec = f;
    for (int i = 0; i < r; ++i) rec = translate(rec, h) - rec;
    GridFunction bin = GridFunction::zeros(1, 64);
    for (int k = 0; k <= r; ++k) bin.axpy(((r - k) % 2 ? -1.0 : 1.0) * numeric::binomial(r, k), translate(f, k * h));
    EXPECT_LT(rec.max_abs_diff(bin), 1e-12);
    EXPECT_LT(difference(f, h, r).max_abs_diff(bin), 1e-12);
  }
}

TEST(Modulus, ClosedFormForCos) {
  const auto B = NormSpec::lp(2);
  EXPECT_EQ(modulus(cos1(), 1, 0.0, B), 0.0);
  for (int i = 1; i <= 30; ++i) {
    const double t = 0.1 * i;
    EXPECT_NEAR(modulus(cos1(), 1, t, B), std::sqrt(2.0) * std::sin(t / 2), 1e-6) << t;
  }
  // generic norm path agrees with the Parseval path
  EXPECT_NEAR(modulus(cos1(), 2, 1.3, NormSpec::lp(2).with_m(1)), modulus(cos1(), 2, 1.3, NormSpec::luxemburg(YoungFunction::power(2))), 1e-10);
}

TEST(Modulus, ClassicalBoundMonotoneAndRefinement) {
  const std::vector<NormSpec> norms = {NormSpec::lp(2), NormSpec::lp(4), NormSpec::lp(1)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = oracle::random_poly_1d(seed + 11, 128, 20);
    for (const auto& B : norms) {
      for (double t : {0.05, 0.4, 1.7}) {
        for (int r = 1; r <= 3; ++r)
          EXPECT_LE(modulus(f, r + 1, t, B), 2 * modulus(f, r, t, B) + 1e-9);
        EXPECT_LE(modulus(f, 1, t, B, {16, 1}), modulus(f, 1, t, B, {32, 1}) + 1e-15);
      }
      std::vector<double> ts;
      for (int n = 8; n >= 0; --n) ts.push_back(std::ldexp(1.0, -n));
      const auto prof = modulus_profile(f, 2, ts, B);
      for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_GE(prof[i], prof[i - 1]);
    }
  }
  const auto g = oracle::random_poly_2d(9, 32, 5);
  EXPECT_LE(modulus(g, 1, 0.3, NormSpec::lp(2), {8, 8}), modulus(g, 1, 0.3, NormSpec::lp(2), {16, 16}) + 1e-15);
}

TEST(AveragedModulus, ClosedFormAndBracket) {
  const auto B = NormSpec::lp(2);
  EXPECT_NEAR(averaged_modulus(GridFunction::constant(1, 32, 2.0), 1, 0.5, Semigroup::shift(), B), 0.0, 1e-15);
  for (int i = 1; i <= 30; ++i) {
    const double t = 0.1 * i;
    const double ref = 2 * std::sqrt(2.0) / t * (1 - std::cos(t / 2));
    EXPECT_NEAR(averaged_modulus(cos1(), 1, t, Semigroup::shift(), B, 1024), ref, 1e-6) << t;
  }
  const auto f = oracle::random_poly_1d(21, 128, 30);
  for (int r = 1; r <= 3; ++r)
    for (double t : {0.01, 0.1, 1.0})
      for (auto T : {Semigroup::shift(), Semigroup::heat(), Semigroup::abel()}) {
        const auto S = spectral::forward(f);
        const double w = averaged_modulus(S, r, t, T, B, 64);
        double om = semigroup_modulus_raw(S, T, r, t, B, 64);
        for (int q = 0; q < 64; ++q) om = std::max(om, semigroup_difference_norm(S, T, (q + 0.5) * t / 64, r, B));
        EXPECT_LE(w, om + 1e-10);
      }
}

TEST(Semigroups, IdentityHeatCosAndLaw) {
  const auto f = oracle::random_poly_1d(2, 64, 15);
  EXPECT_LT(spectral_semigroup(f, 0.0, SemigroupKind::heat).max_abs_diff(f), 1e-14);
  EXPECT_LT(spectral_semigroup(f, 0.0, SemigroupKind::abel).max_abs_diff(f), 1e-14);
  for (double t : {0.01, 0.5, 2.0}) {
    GridFunction ref = cos1();
    ref *= std::exp(-t);
    EXPECT_LT(spectral_semigroup(cos1(), t, SemigroupKind::heat).max_abs_diff(ref), 1e-14);
  }
  for (auto kind : {SemigroupKind::heat, SemigroupKind::abel}) {
    const auto lhs = spectral_semigroup(spectral_semigroup(f, 0.13, kind), 0.29, kind);
    EXPECT_LT(lhs.max_abs_diff(spectral_semigroup(f, 0.42, kind)), 1e-12);
  }
  const auto g = oracle::random_poly_2d(3, 32, 6);
  EXPECT_LT(spectral_semigroup(spectral_semigroup(g, 0.1, SemigroupKind::heat), 0.2, SemigroupKind::heat)
                .max_abs_diff(spectral_semigroup(g, 0.3, SemigroupKind::heat)),
            1e-12);
}

TEST(Cesaro, CoefficientsConstantsAndFejerPositivity) {
  GridFunction ref = cos1();
  ref *= 2.0 / 3.0;
  EXPECT_LT(cesaro(cos1(), 2, 1).max_abs_diff(ref), 1e-15);
  const auto c = GridFunction::constant(1, 32, 1.7);
  for (int n : {0, 3, 10})
    for (int l : {1, 2, 3}) EXPECT_LT(cesaro(c, n, l).max_abs_diff(c), 1e-14);
  // kernel = Fejer mean of the grid delta of mass one
  for (int n : {1, 4, 16, 31}) {
    std::vector<double> delta(64, 0.0);
    delta[0] = 64.0;
    const auto K = cesaro(GridFunction(1, 64, delta), n, 1);
    for (std::size_t j = 0; j < 64; ++j) {
      EXPECT_NEAR(K[j], oracle::fejer_kernel(n, GridFunction::node(j, 64)), 1e-12);
      EXPECT_GE(K[j], -1e-12);
    }
  }
  EXPECT_THROW(cesaro(oracle::random_poly_2d(1, 8, 1), 2, 1), std::invalid_argument);
  EXPECT_THROW(cesaro(cos1(), 2, 0), std::invalid_argument);
}

TEST(Laplacian, Powers) {
  GridFunction neg = cos1();
  neg *= -1;
  EXPECT_LT(laplacian_power(cos1(), 1).max_abs_diff(neg), 1e-12);
  EXPECT_LT(laplacian_power(GridFunction::constant(1, 16, 3.0), 2).max_abs(), 1e-15);
  const auto c2 = discretize([](double x) { return std::cos(2 * x); }, 32);
  GridFunction ref = c2;
  ref *= 16.0;
  EXPECT_LT(laplacian_power(c2, 2).max_abs_diff(ref), 1e-10);
  const auto g = discretize([](double x, double y) { return std::sin(x + 2 * y); }, 16, 2);
  GridFunction g5 = g;
  g5 *= -5.0;
  EXPECT_LT(laplacian_power(g, 1).max_abs_diff(g5), 1e-12);
}

TEST(SphericalMean, ConstantsBesselAndReduction) {
  const auto one = GridFunction::constant(2, 64, 1.0);
  for (double t : {0.1, 1.0, 7.0}) {
    const auto v = spherical_mean(one, t, 1);
    for (double x : v.samples()) EXPECT_EQ(x, 1.0);
  }
  const auto f = discretize([](double x, double) { return std::cos(x); }, 64, 2);
  for (double t : {0.05, 0.5, 1.0, 2.4, 3.0, 6.0}) {
    GridFunction ref = f;
    ref *= std::cyl_bessel_j(0.0, t);
    EXPECT_LT(spherical_mean(f, t, 1).max_abs_diff(ref), 1e-8) << t;
  }
  const auto g = oracle::random_poly_2d(8, 32, 5);
  const auto S = spectral::forward(g);
  EXPECT_LT(spherical_mean(S, 0.4, 1).max_abs_diff(spherical_mean(g, 0.4)), 1e-15);
  // V_{2,t} = (4/3) V_t - (1/3) V_{2t}
  GridFunction comb = (4.0 / 3.0) * spherical_mean(g, 0.3);
  comb.axpy(-1.0 / 3.0, spherical_mean(g, 0.6));
  EXPECT_LT(spherical_mean(g, 0.3, 2).max_abs_diff(comb), 1e-13);
  EXPECT_THROW(spherical_mean(cos1(), 0.3), std::invalid_argument);
}

TEST(Contraction, SemigroupsCesaroSphericalMean) {
  const std::vector<NormSpec> norms = {NormSpec::lp(1), NormSpec::lp(2), NormSpec::lp(4),
                                       NormSpec::luxemburg(YoungFunction::zygmund(2, 0.5))};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = oracle::random_poly_1d(100 + seed, 128, 25);
    const auto g = oracle::random_poly_2d(200 + seed, 32, 6);
    for (const auto& B : norms) {
      const double nf = B(f), ng = B(g);
      for (double t : {0.001, 0.1, 1.0}) EXPECT_LE(B(spectral_semigroup(f, t, SemigroupKind::heat)), nf * (1 + 1e-10));
      for (double t : {0.1, 1.0}) EXPECT_LE(B(spectral_semigroup(f, t, SemigroupKind::abel)), nf * (1 + 1e-10));
      for (int n : {1, 5, 20}) EXPECT_LE(B(cesaro(f, n, 1)), nf * (1 + 1e-10));
      for (double t : {0.2, 1.5}) EXPECT_LE(B(spherical_mean(g, t)), ng * (1 + 1e-10)) << B.label();
    }
  }
}

TEST(AveragingIdentity, ShiftSemigroupUpToOrderThree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = oracle::random_poly_1d(300 + seed, 64, 20);
    const double h = 0.3 + 0.01 * seed, s = 0.17;
    for (int r = 1; r <= 3; ++r) {
      const auto lhs = semigroup_difference(f, Semigroup::shift(), h, r);
      GridFunction rhs = GridFunction::zeros(1, 64);
      for (int k = 1; k <= r; ++k) {
        const double c = (k % 2 ? -1.0 : 1.0) * numeric::binomial(r, k);
        rhs.axpy(c, translate(semigroup_difference(f, Semigroup::shift(), k * s, r), k * h));
        rhs.axpy(-c, semigroup_difference(f, Semigroup::shift(), h + k * s, r));
      }
      EXPECT_LT(lhs.max_abs_diff(rhs), 1e-10) << "r=" << r;
    }
  }
}

TEST(OperatorSpec, Dispatch) {
  const auto f = cos1();
  EXPECT_LT(apply(Shift{{pi / 2, 0}}, f).max_abs_diff(translate(f, pi / 2)), 1e-15);
  EXPECT_LT(apply(Heat{0.2}, f).max_abs_diff(spectral_semigroup(f, 0.2, SemigroupKind::heat)), 1e-15);
  EXPECT_LT(apply(Cesaro{3, 2}, f).max_abs_diff(cesaro(f, 3, 2)), 1e-15);
  EXPECT_LT(apply(LaplacianPower{1}, f).max_abs_diff(laplacian_power(f, 1)), 1e-15);
  EXPECT_EQ(operator_name(SphericalMean{0.1, 1}), "sphmean");
}
