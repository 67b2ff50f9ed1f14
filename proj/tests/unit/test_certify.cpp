#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "wiener/certify.hpp"
#include "wiener/error.hpp"

using namespace wiener;
using testing_support::pi;

TEST_CASE("peetre bracket contains 4/3 for ten seeds") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = peetre_certify(seed, 20000);
    CHECK(r.bracket_low <= 4.0 / 3.0);
    CHECK(r.bracket_high >= 4.0 / 3.0);
    CHECK(r.bracket_high - r.bracket_low <= 1e-6);
    CHECK(r.witness_slack < 0.0);
    CHECK(peetre_slack(r.bracket_low, r.witness, r.witness) < 0.0);
    CHECK(r.bracket.pass);
    CHECK(r.tau2.pass);
    CHECK(r.tau2_violations == 0);
  }
}

TEST_CASE("peetre witness arithmetic") {
  // tau = 1, xi1 = xi2 with |xi|^2 = 2/3: 1 + 8/3 > (1 + 2/3)^2.
  const Vec3 w{std::sqrt(2.0 / 3.0), 0.0, 0.0};
  CHECK(peetre_slack(1.0, w, w) == doctest::Approx(25.0 / 9.0 - 11.0 / 3.0).epsilon(1e-14));
  // Along the witness family the least slack is 3 tau - 4.
  for (double tau : {0.5, 1.0, 1.3, 1.5}) {
    const Vec3 a{std::sqrt(2.0 - tau), 0.0, 0.0};
    CHECK(peetre_slack(tau, a, a) == doctest::Approx(3.0 * tau - 4.0).epsilon(1e-12));
  }
  // tau = 2 slack is 2 + (a-b)^2 + a^2 b^2 for collinear pairs.
  const Vec3 a{0.7, 0, 0}, b{1.9, 0, 0};
  CHECK(peetre_slack(2.0, a, b) == doctest::Approx(2.0 + 1.2 * 1.2 + 0.49 * 3.61));
}

TEST_CASE("cross-product bounds") {
  CHECK(hadamard_cross_certify(3, 2000).pass);
  CHECK(holder_cross_certify(3, 60).pass);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  NodalVectors a{6, 2 * pi, std::vector<Vec3>(216)}, b = a;
  for (auto& x : a.values) x = {gauss(rng), gauss(rng), gauss(rng)};
  for (auto& x : b.values) x = {gauss(rng), gauss(rng), gauss(rng)};
  const auto r = holder_cross_check(a, b, 2, 6);
  CHECK(r.pass);
  CHECK(r.lhs <= r.rhs);
  CHECK_THROWS_AS(holder_cross_check(a, b, 1, 1), InvalidInput);
}

TEST_CASE("star convolution against a point mass") {
  const int n = 4;
  const double L = 3.0, h = L / n;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> gauss;
  NodalVectors delta{n, L, std::vector<Vec3>(64)}, b = delta;
  delta.values[0] = {0.0, 0.0, 1.0 / (h * h * h)};
  for (auto& x : b.values) x = {gauss(rng), gauss(rng), gauss(rng)};
  const auto c = star_convolution(delta, b);
  const double w = std::pow(2 * pi, -1.5);
  for (std::size_t i = 0; i < 64; ++i) {
    const Vec3 expect = w * cross(Vec3{0, 0, 1}, b.values[i]);
    for (int k = 0; k < 3; ++k) CHECK(c.values[i][k] == doctest::Approx(expect[k]).epsilon(1e-13));
  }
  CHECK(young_star_certify(delta, b, 1, 2).pass);
  CHECK(young_star_campaign(1, 40).pass);
}

TEST_CASE("power inequality") {
  const auto r = power_inequality_certify();
  CHECK(r.pass);
  CHECK(r.note.find("instances = 6018") != std::string::npos);
  CHECK(std::pow(11.0, 2) <= 2.0 * 101.0);
}

TEST_CASE("kappa split for sin x1") {
  const GridSpec g(8, 2 * pi, 2);
  SpectralField v(g, Rank::Vector);
  v.at(1, Wavevector{1, 0, 0}) = Complex(0, -0.5);
  v.at(1, Wavevector{-1, 0, 0}) = Complex(0, 0.5);
  for (double kappa : {-0.4, 0.0, 0.4}) {
    double b2 = 0.0;
    for (int l = -4; l < 4; ++l)
      for (int j = -4; j < 4; ++j)
        for (int i = -4; i < 4; ++i) {
          const double k2 = i * i + j * j + l * l;
          if (k2 > 1) b2 += std::pow(k2, kappa - 2.0);
        }
    const auto r = kappa_split_certify(v, kappa);
    CHECK(r.lhs == doctest::Approx(1.0));
    CHECK(r.rhs == doctest::Approx(std::sqrt(6.0) * std::sqrt(0.5) + std::sqrt(b2) * std::sqrt(0.5)));
    CHECK(r.pass);
  }
  // kappa = 0 is the rho = 1 split, which the minimized bound cannot exceed.
  const auto w = wiener_split_certify(v);
  CHECK(w.pass);
  CHECK(w.rhs <= kappa_split_certify(v, 0.0).rhs * (1 + 1e-14));
  CHECK_THROWS_AS(kappa_split_certify(v, 0.5), InvalidInput);
  CHECK_THROWS_AS(wiener_split_certify(SpectralField(g, Rank::Vector)), InvalidInput);
}

TEST_CASE("chebyshev tail on a single shell") {
  const GridSpec g(8, 2 * pi, 2);
  SpectralField v(g, Rank::Scalar);
  v.at(0, Wavevector{2, 0, 0}) = 1.0;
  v.at(0, Wavevector{-2, 0, 0}) = 1.0;
  const auto r = chebyshev_tail_certify(v);
  CHECK(r.pass);
  // rho = 2: tail 2, bound 2 * 16 / 16: equality.
  CHECK(r.residual == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("lattice split and submultiplicativity campaigns") {
  for (const auto& r : lattice_split_campaign(4, 90)) CHECK_MESSAGE(r.pass, r.check_id << ": " << r.note);
  const auto sub = submultiplicativity_certify({0.0, 2.5}, 4, 30);
  REQUIRE(sub.size() == 2);
  for (const auto& r : sub) CHECK(r.pass);
}

namespace {

// Radial ratio for f = (1 - r^2/R^2)^3 by composite Simpson in r.
double radial_cubic_ratio(double R) {
  const int m = 20000;
  double g = 0.0, f = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double r = R * i / m, w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double u = 1.0 - r * r / (R * R);
    g += w * 4 * pi * r * r * std::abs(-6.0 * r / (R * R) * u * u);
    f += w * 4 * pi * r * r * std::pow(u * u * u, 1.5);
  }
  g *= R / m / 3.0;
  f *= R / m / 3.0;
  return g / (3.0 * std::cbrt(4 * pi / 3) * std::pow(f, 2.0 / 3.0));
}

}  // namespace

TEST_CASE("GN isoperimetric diagnostic") {
  const double L = 2 * pi;
  const auto fixtures = gn_bump_fixtures(L);
  REQUIRE(fixtures.size() == 5);
  for (const Bump& b : fixtures) {
    const auto r = gn_isoperimetric_diagnostic(b, L, 64);
    CHECK(r.diagnostic);
    CHECK_MESSAGE(r.pass, b.name << ": " << r.note);
    CHECK(r.lhs > 1.0);
  }
  const double oracle = radial_cubic_ratio(L / 4);
  CHECK(gn_ratio(fixtures[0], L, 64).ratio == doctest::Approx(oracle).epsilon(1e-3));

  Bump small = fixtures[0];
  small.radii = {L / 8, L / 8, L / 8};
  CHECK(gn_ratio(small, L, 128).ratio == doctest::Approx(gn_ratio(fixtures[0], L, 64).ratio).epsilon(1e-12));

  Bump zero = fixtures[0];
  zero.amplitude = 0.0;
  const auto z = gn_isoperimetric_diagnostic(zero, L, 64);
  CHECK(z.pass);
  CHECK(z.note.find("skipped") != std::string::npos);

  Bump outside = fixtures[0];
  outside.center = {0.1, L / 2, L / 2};
  CHECK_THROWS_AS(gn_ratio(outside, L, 32), InvalidInput);
}
