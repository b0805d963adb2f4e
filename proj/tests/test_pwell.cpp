#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ptsqw/pwell.hpp"

using namespace ptsqw;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt3 = std::sqrt(3.0);

// reference roots recomputed at 40+ decimal digits with an independent
// matching determinant (and cross-checked by shooting)
constexpr double kRootZ01 = 0.2184691088;
constexpr double kRootZ1 = 0.4132632771;
constexpr double kRootsZ1200[7] = {0.9597927538, 1.7698595440, 2.5676031000, 3.3492547940,
                                   4.1066102120, 4.8164598470, 5.3131339220};
}  // namespace

TEST_CASE("parameter split and its identities") {
  auto p = pwell::params(8.0, 16.0);
  CHECK(p.alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.beta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.t == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.R == doctest::Approx(1.0).epsilon(1e-14));

  auto mid = pwell::params(0.5, 1.0);
  CHECK(mid.t == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mid.R == doctest::Approx(1.0).epsilon(1e-14));

  auto near = pwell::params(1.0 - 1e-9, 1.0);
  CHECK(near.beta < 1e-3);
  CHECK(near.t < 1e-2);
  CHECK(near.R == doctest::Approx(1.0).epsilon(1e-2));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uz(-3, 3), uf(1e-6, 1 - 1e-6);
  for (int i = 0; i < 10000; ++i) {
    double Z = std::pow(10.0, uz(rng));
    double E = Z * uf(rng);
    auto pp = pwell::params(E, Z);
    CHECK(std::abs(8 * std::pow(pp.alpha, 3) + 8 * std::pow(pp.beta, 3) - Z) <= 1e-14 * Z);
    double one = (1 - pp.t + pp.t * pp.t) * pp.R * pp.R;
    CHECK(std::abs(one - 1.0) <= 1e-13);
    CHECK(pp.R <= 2.0 / kSqrt3 + 1e-15);
    CHECK(pp.R > 0);
  }
  CHECK_THROWS_AS(pwell::params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(pwell::params(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(pwell::params(2.0, 1.0), DomainError);
}

TEST_CASE("secular value at the symmetric and threshold slices") {
  // t = 1: value reduces to -2 cos(2 sqrt3 a) - e^{-6a}/4
  for (double Z : {0.5, 1.0, 7.0}) {
    double E = Z / 2;
    auto p = pwell::params(E, Z);
    double expect = -2 * std::cos(2 * kSqrt3 * p.alpha) - std::exp(-6 * p.alpha) / 4;
    CHECK(pwell::secular_value(E, Z) == doctest::Approx(expect).epsilon(1e-12));
  }
  // t -> 0: value approaches cos + sqrt3 sin - e^{-6a}
  {
    double Z = 1.0, E = Z * (1 - 1e-12);
    auto p = pwell::params(E, Z);
    double expect = std::cos(2 * kSqrt3 * p.alpha) + kSqrt3 * std::sin(2 * kSqrt3 * p.alpha) -
                    std::exp(-6 * p.alpha);
    CHECK(pwell::secular_value(E, Z) == doctest::Approx(expect).epsilon(1e-3));
  }
}

TEST_CASE("threshold alpha") {
  CHECK(pwell::threshold_alpha(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pwell::threshold_alpha(0.1) == doctest::Approx(0.23207944168063893).epsilon(1e-14));
  CHECK(pwell::threshold_alpha(8.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(pwell::threshold_alpha(0.0), DomainError);
}

TEST_CASE("shallow-well spectra against the frozen reference roots") {
  auto s01 = pwell::find_spectrum(0.1);
  REQUIRE(s01.roots.size() == 1);
  CHECK(s01.roots[0].alpha == doctest::Approx(kRootZ01).epsilon(1e-8));

  auto s1 = pwell::find_spectrum(1.0);
  REQUIRE(s1.roots.size() == 1);
  CHECK(s1.roots[0].alpha == doctest::Approx(kRootZ1).epsilon(1e-8));
  CHECK(std::abs(s1.roots[0].residual) <= 1e-10);

  // the secular curve's left plateau sits at -24 amax^2 - 24 amax - 9
  double amax = pwell::threshold_alpha(1e-3);
  double plateau = pwell::secular_value(8 * std::pow(amax * 1e-5, 3), 1e-3);
  CHECK(plateau == doctest::Approx(-24 * amax * amax - 24 * amax - 9).epsilon(1e-3));
}

TEST_CASE("deep-well spectrum at fixed and adaptive precision") {
  num::PrecisionPolicy fixed16;
  fixed16.max_digits = 16;
  auto s16 = pwell::find_spectrum(1200.0, fixed16);
  CHECK(s16.digits_used == 16);
  REQUIRE(s16.roots.size() == 7);

  auto sad = pwell::find_spectrum(1200.0);
  CHECK(sad.digits_used == pwell::adaptive_digits_floor(1200.0));
  REQUIRE(sad.roots.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(sad.roots[i].alpha == doctest::Approx(kRootsZ1200[i]).epsilon(1e-8));
    CHECK(std::abs(sad.roots[i].residual) <= 1e-10);
  }
  double amax = pwell::threshold_alpha(1200.0);
  for (const auto& r : sad.roots) {
    CHECK(r.alpha > 0);
    CHECK(r.alpha < amax);
    CHECK(r.E == doctest::Approx(8 * std::pow(r.alpha, 3)).epsilon(1e-14));
  }
  for (size_t i = 1; i < sad.roots.size(); ++i) CHECK(sad.roots[i].alpha > sad.roots[i - 1].alpha);
}

TEST_CASE("find_spectrum is deterministic") {
  auto a = pwell::find_spectrum(35.0);
  auto b = pwell::find_spectrum(35.0);
  REQUIRE(a.roots.size() == b.roots.size());
  for (size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].alpha == b.roots[i].alpha);  // bit-identical
    CHECK(a.roots[i].residual == b.roots[i].residual);
  }
  CHECK_THROWS_AS(pwell::find_spectrum(-1.0), DomainError);
}

TEST_CASE("secular value is stable between d and 2d digits") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uz(-2, 1), uf(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    double Z = std::pow(10.0, uz(rng));
    double E = Z * uf(rng);
    double lp = pwell::secular_value(E, Z);
    BigFloat::ScopedDigits guard(32);
    double hp = pwell::core::secular_value_t<BigFloat>(BigFloat(E), BigFloat(Z)).to_double();
    double scale = std::max(std::abs(hp), 1e-3);
    CHECK(std::abs(lp - hp) <= 1e-13 * scale);
  }
}

TEST_CASE("coefficients satisfy the trigonometric constraint") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uf(1e-3, 1 - 1e-3);
  for (double Z : {0.1, 1.0, 20.0})
    for (int i = 0; i < 333; ++i) {
      double E = Z * uf(rng);
      auto p = pwell::params(E, Z);
      auto cf = pwell::coefficients(E, Z);
      double at = kSqrt3 * p.alpha;
      double lhs = std::cos(at + cf.theta);
      double rhs = cf.epsilon * (1 - p.t / 2) * p.R;
      CHECK(std::abs(lhs - rhs) <= 1e-12);
      double sl = std::sin(at + cf.theta);
      double sr = cf.epsilon * (kSqrt3 / 2) * p.t * p.R;
      CHECK(std::abs(sl - sr) <= 1e-12);
      double unity = (1 - p.t / 2) * (1 - p.t / 2) * p.R * p.R + 0.75 * p.t * p.t * p.R * p.R;
      CHECK(std::abs(unity - 1.0) <= 1e-12);
      CHECK((cf.epsilon == 1 || cf.epsilon == -1));
    }
}

TEST_CASE("the t = 2 pole of the printed phase formula is regular") {
  double Z = 9.0, E = 1.0;  // beta = 2 alpha exactly
  auto p = pwell::params(E, Z);
  CHECK(p.t == doctest::Approx(2.0).epsilon(1e-14));
  auto cf = pwell::coefficients(E, Z);
  CHECK(std::isfinite(cf.theta));
  CHECK(std::isfinite(cf.F));
  // at + theta = pi/2 (mod pi)
  double m = std::fmod(std::abs(kSqrt3 * p.alpha + cf.theta), kPi);
  CHECK(std::min(std::abs(m - kPi / 2), std::abs(m + kPi / 2 - kPi)) < 1e-12);
}

TEST_CASE("matching residuals: construction zeros and the physics defect") {
  double Z = 1.0;
  double Estar = pwell::find_spectrum(Z).roots[0].E;

  auto cf = pwell::coefficients(Estar, Z);
  auto r = pwell::matching_residuals(Estar, Z, cf);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(r[i]) <= 1e-12);
  CHECK(std::abs(r[5]) <= 1e-10);

  // off the eigenvalue only the psi'' defect at p=-1 survives, proportional
  // to the secular value with the exact (negative) factor
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> uf(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    double E = Z * uf(rng);
    auto p = pwell::params(E, Z);
    auto cfe = pwell::coefficients(E, Z);
    auto rr = pwell::matching_residuals(E, Z, cfe);
    for (int j = 0; j < 5; ++j) CHECK(std::abs(rr[j]) <= 1e-11 * (1 + std::abs(rr[5])));
    double factor = -(4.0 / 3.0) * p.alpha * p.alpha * (1 + p.t) * (1 + p.t) *
                    std::exp(2 * p.alpha) * std::exp(-2 * p.beta);
    double sv = pwell::secular_value(E, Z);
    CHECK(rr[5] == doctest::Approx(factor * sv).epsilon(1e-9));

    // the weighted-sum combination from the paper-side quantities
    double at = kSqrt3 * p.alpha;
    double ws = kSqrt3 * cfe.F * std::sin(-at + cfe.theta) +
                (2 * p.t - 1) * cfe.F * std::cos(-at + cfe.theta) +
                2 * (1 - p.t + p.t * p.t) / (p.t + 1) * cfe.D * std::exp(-6 * p.alpha);
    double G = cfe.g * std::exp(-2 * p.beta);
    CHECK(ws == doctest::Approx(-(2.0 / 3.0) * (p.t + 1) * G * sv).epsilon(1e-9));
  }
}

TEST_CASE("piecewise wave function: continuity, decay, left oscillation") {
  double Z = 1.0;
  double Estar = pwell::find_spectrum(Z).roots[0].E;
  auto par = pwell::params(Estar, Z);
  auto cf = pwell::coefficients(Estar, Z);

  CHECK(std::abs(pwell::psi(1.0 - 1e-12, par, cf) - pwell::psi(1.0 + 1e-12, par, cf)) <= 1e-11);
  CHECK(std::abs(pwell::psi(-1.0 - 1e-12, par, cf) - pwell::psi(-1.0 + 1e-12, par, cf)) <= 1e-11);

  // pure exponential tail on the right
  double r1 = pwell::psi(3.0, par, cf), r2 = pwell::psi(5.0, par, cf);
  CHECK(r2 / r1 == doctest::Approx(std::exp(-2 * par.beta * 2.0)).epsilon(1e-12));

  // sign changes accumulate to the left
  int flips = 0;
  double prev = pwell::psi(-30.0, par, cf);
  for (int i = 1; i <= 4000; ++i) {
    double p = -30.0 + 29.0 * i / 4000.0;
    double cur = pwell::psi(p, par, cf);
    if (prev * cur < 0) ++flips;
    prev = cur;
  }
  CHECK(flips > 10);
}

TEST_CASE("nodal zeros by region") {
  double Z = 1.0;
  double Estar = pwell::find_spectrum(Z).roots[0].E;
  auto par = pwell::params(Estar, Z);
  auto cf = pwell::coefficients(Estar, Z);

  CHECK(pwell::nodal_zeros(par, cf, pwell::Region::right, 5).empty());

  auto left = pwell::nodal_zeros(par, cf, pwell::Region::left, 8);
  REQUIRE(left.size() == 8);
  const double spacing = kPi / (kSqrt3 * par.beta);
  for (size_t i = 0; i < left.size(); ++i) {
    CHECK(left[i] < -1.0);
    if (i) {
      CHECK(left[i] < left[i - 1]);  // counted downward from p = -1
      CHECK(std::abs((left[i - 1] - left[i]) - spacing) <= 1e-10);
    }
    // they really are zeros of the left-region form
    double envelope = cf.c * std::exp(par.beta * left[i]);
    CHECK(std::abs(pwell::psi(left[i], par, cf)) <= 1e-9 * std::abs(envelope) + 1e-300);
  }

  auto middle = pwell::nodal_zeros(par, cf, pwell::Region::middle, 10);
  for (double z : middle) {
    CHECK(z > -1.0);
    CHECK(z < 1.0);
    CHECK(std::abs(pwell::psi(z, par, cf)) <= 1e-9);
  }

  auto off_par = pwell::params(Estar * 1.05, Z);
  auto off_cf = pwell::coefficients(Estar * 1.05, Z);
  CHECK_THROWS_AS(pwell::nodal_zeros(off_par, off_cf, pwell::Region::left, 3), NotAnEigenvalue);
}

TEST_CASE("sweep over increasing depths") {
  std::vector<double> zs;
  for (int i = 0; i < 60; ++i) zs.push_back(1e-3 * std::pow(1.3e6, i / 59.0));
  auto recs = pwell::sweep(zs);
  REQUIRE(recs.size() == zs.size());
  int prev = recs[0].n_levels;
  for (size_t i = 1; i < recs.size(); ++i) {
    CHECK(recs[i].Z == zs[i]);
    CHECK(recs[i].delta == recs[i].n_levels - prev);
    if (recs[i].delta == 1) {
      REQUIRE(recs[i].events.size() == 1);
      CHECK(recs[i].events[0].kind == pwell::EventKind::threshold_entry);
      CHECK(pwell::threshold_alpha(recs[i].Z) - recs[i].events[0].alpha <
            0.2 * pwell::threshold_alpha(recs[i].Z));
    }
    prev = recs[i].n_levels;
  }
  CHECK(recs.front().n_levels == 1);
  CHECK(recs.back().n_levels == 7);

  auto again = pwell::sweep(zs);
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(again[i].n_levels == recs[i].n_levels);
    REQUIRE(again[i].root_alphas.size() == recs[i].root_alphas.size());
    for (size_t j = 0; j < recs[i].root_alphas.size(); ++j)
      CHECK(again[i].root_alphas[j] == recs[i].root_alphas[j]);
  }

  CHECK_THROWS_AS(pwell::sweep({1.0, 1.0}), DomainError);
}

TEST_CASE("doublet search reports the absence of a +2 jump") {
  CHECK_THROWS_AS(pwell::locate_doublet_birth(0.01, 0.1), NoBirthInInterval);
  CHECK_THROWS_AS(pwell::locate_doublet_birth(5.0, 5.6), NoBirthInInterval);
  CHECK_THROWS_AS(pwell::locate_doublet_birth(3.0, 40.0), NoBirthInInterval);
  CHECK_THROWS_AS(pwell::locate_doublet_birth(1.0, 0.5), DomainError);
}

TEST_CASE("adaptive digits floor follows the threshold exponent") {
  CHECK(pwell::adaptive_digits_floor(1200.0) == 24);
  CHECK(pwell::adaptive_digits_floor(1.0) <= 16);
  num::PrecisionPolicy fixed;
  fixed.max_digits = fixed.digits;
  CHECK(pwell::find_spectrum(1200.0, fixed).digits_used == 16);
  CHECK(pwell::find_spectrum(100.0).digits_used == pwell::adaptive_digits_floor(100.0));
}
