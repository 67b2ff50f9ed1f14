#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wiener/bands.hpp"
#include "wiener/error.hpp"

using namespace wiener;
using namespace testing_support;

namespace {
using Kind = CutoffProfile::Kind;
const GridSpec G(16, 2 * pi, 7);

SpectralField band_limited_scalar(std::uint64_t seed, int band) {
  std::mt19937_64 rng(seed);
  return random_coefficients(G, Rank::Scalar, band, rng);
}
}  // namespace

TEST_CASE("smoothstep and its derivative") {
  CHECK(smoothstep7(0.0) == 0.0);
  CHECK(smoothstep7(1.0) == 1.0);
  CHECK(smoothstep7(0.5) == doctest::Approx(0.5));
  for (double t = 0.01; t < 1.0; t += 0.01) {
    const double fd = (smoothstep7(t + 1e-6) - smoothstep7(t - 1e-6)) / 2e-6;
    CHECK(std::abs(fd - smoothstep7_derivative(t)) < 1e-6);
  }
}

TEST_CASE("cutoff construction") {
  CHECK_THROWS_AS(build_cutoff(Kind::LowPass, 2.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(build_cutoff(Kind::LowPass, 0.0, 1.0), InvalidInput);
  const auto a = build_cutoff(Kind::LowPass, 1.0, 2.0);
  CHECK(a(0.0) == 1.0);
  CHECK(a(2.0) == 0.0);
  CHECK(a(3.5) == 0.0);
  const auto b = a.complement();
  CHECK(b(0.0) == 0.0);
  CHECK(b(2.0) == 1.0);
  for (double r = 0; r < 3; r += 0.01) CHECK(a(r) + b(r) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(check_cutoff(a, G).pass);
  CHECK(check_cutoff(b, G).pass);
  CHECK(check_cutoff(build_cutoff(Kind::Bump, 0.5, 0.75), G).pass);
}

TEST_CASE("plateau identity and band disjointness") {
  const auto chi = build_cutoff(Kind::Bump, 1.0, 2.0);
  CHECK(plateau_identity_check(chi, 0.5, G).pass);
  CHECK(plateau_identity_check(chi, 0.25, GridSpec(16, 40.0, 7)).pass);
  // For eps close to 1 the identity fails inside the transition.
  CHECK_FALSE(plateau_identity_check(chi, 0.9, G).pass);
  const auto alpha = build_cutoff(Kind::LowPass, 1.0, 2.0);
  CHECK(band_disjointness_check(alpha, GridSpec(32, 60.0, 10)).pass);
}

TEST_CASE("band split") {
  const auto v = vector_from(G, [](const Vec3& x) { return Vec3{std::sin(x[0]) + std::sin(5 * x[1]), 0, 0}; });
  const auto alpha = build_cutoff(Kind::LowPass, 2.0, 3.0);
  const auto split = split_bands(v, alpha);
  const auto low = spectrum_support(split.low, 1e-12), high = spectrum_support(split.high, 1e-12);
  REQUIRE(low.size() == 2);
  REQUIRE(high.size() == 2);
  for (const auto& m : low) CHECK(m.norm2() == 1);
  for (const auto& m : high) CHECK(m.norm2() == 25);
  CHECK(relative_max_difference(split.low + split.high, v) == 0.0);
  CHECK(relative_max_difference(curl(split.low), apply_cutoff(alpha, 1.0, curl(v))) < 1e-12);

  const auto lowonly = vector_from(G, [](const Vec3& x) { return Vec3{0, std::cos(x[2]), 0}; });
  CHECK(split_bands(lowonly, alpha).high.max_magnitude() < 1e-16);

  std::mt19937_64 rng(3);
  const auto r = random_coefficients(G, Rank::Vector, 7, rng);
  const auto s = split_bands(r, alpha);
  CHECK(relative_max_difference(s.low + s.high, r) < 1e-16);
  for (const auto& m : spectrum_support(s.low, 0.0)) CHECK(m.norm2() < 9);
  for (const auto& m : spectrum_support(s.high, 0.0)) CHECK(m.norm2() > 4);
  CHECK_THROWS_AS(split_bands(r, alpha.complement()), InvalidInput);
}

TEST_CASE("direct commutator basics") {
  const auto beta = build_cutoff(Kind::HighPass, 1.0, 2.0);
  std::mt19937_64 rng(5);
  const auto u = random_coefficients(G, Rank::Vector, 3, rng);
  const auto one = scalar_from(G, [](const Vec3&) { return 2.5; });
  CHECK(commutator_direct(beta, 1.0, one, u).max_magnitude() < 1e-12 * u.max_magnitude());
  CHECK(commutator_direct(beta, 1.0, band_limited_scalar(1, 3), SpectralField(G, Rank::Vector)).max_magnitude() ==
        0.0);
}

TEST_CASE("commutator spectrum respects the band arithmetic") {
  // k unit 1/8: w lives on |k| >= 5/8 ... 1, u on |k| <= 1/8, beta(3k) kills u.
  const GridSpec g(32, 16 * pi, 10);
  SpectralField w(g, Rank::Scalar), u(g, Rank::Vector);
  w.at(0, Wavevector{6, 0, 0}) = Complex(0.3, 0.1);
  w.at(0, Wavevector{-6, 0, 0}) = Complex(0.3, -0.1);
  w.at(0, Wavevector{0, 5, 5}) = 0.2;
  w.at(0, Wavevector{0, -5, -5}) = 0.2;
  u.at(1, Wavevector{1, 0, 0}) = Complex(0.0, 0.5);
  u.at(1, Wavevector{-1, 0, 0}) = Complex(0.0, -0.5);
  const auto alpha = build_cutoff(Kind::LowPass, 1.0, 2.0);
  const auto c = commutator_direct(alpha.complement(), 3.0, w, u);
  const double unit = g.wavenumber_unit();
  CHECK(c.max_magnitude() > 0.0);
  for (const auto& m : spectrum_support(c, 1e-14)) CHECK(std::sqrt(double(m.norm2())) * unit >= 4.0 / 8);
}

TEST_CASE("Gauss-Legendre rules") {
  for (int order : {1, 2, 4, 8, 16}) {
    const auto q = gauss_legendre01(order);
    double sum = 0.0;
    for (double w : q.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    // Exact for polynomials of degree 2 order - 1.
    const int deg = 2 * order - 1;
    double integral = 0.0;
    for (int i = 0; i < order; ++i) integral += q.weights[i] * std::pow(q.nodes[i], deg);
    CHECK(integral == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-13));
  }
}

TEST_CASE("kernel commutator converges to the direct one") {
  const auto beta = build_cutoff(Kind::LowPass, 1.0, 7.0).complement();
  const auto w = band_limited_scalar(11, 3);
  std::mt19937_64 rng(12);
  const auto u = random_coefficients(G, Rank::Vector, 3, rng);
  double previous = 1e300;
  for (int order : {2, 4, 8}) {
    const auto r = commutator_kernel(beta, 1.0, w, u, order);
    CHECK(r.report.residual < previous);
    previous = r.report.residual;
    if (order == 8) CHECK(r.report.pass);
  }
  const auto one = scalar_from(G, [](const Vec3&) { return 1.0; });
  CHECK(commutator_kernel(beta, 1.0, one, u, 4).value.max_magnitude() < 1e-12);
  // A sharp, box-filling kernel is refused.
  CHECK_THROWS_AS(commutator_kernel(build_cutoff(Kind::HighPass, 1.0, 1.5), 1.0, w, u, 4), PreconditionViolation);
}
