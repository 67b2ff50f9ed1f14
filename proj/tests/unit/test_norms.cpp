#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "wiener/error.hpp"
#include "wiener/norms.hpp"
#include "wiener/operators.hpp"

using namespace wiener;
using namespace testing_support;

namespace {

const GridSpec G(16, 2 * pi, 7);
const double box = std::pow(2 * pi, 3);

SpectralField sin1() { return scalar_from(G, [](const Vec3& x) { return std::sin(x[0]); }); }

}  // namespace

TEST_CASE("pairwise sum is order-fixed and accurate") {
  std::vector<double> xs(1000, 0.1);
  CHECK(pairwise_sum(xs) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum({}) == 0.0);
}

TEST_CASE("Lp norms of sin and constants") {
  const auto s = sin1();
  CHECK(lp_norm(s, 2).value == doctest::Approx(std::sqrt(box / 2)).epsilon(1e-13));
  CHECK(lp_norm(s, std::numeric_limits<double>::infinity()).value == doctest::Approx(1.0).epsilon(1e-15));
  const auto one = forward(sample_scalar(G, [](const Vec3&) { return 1.0; }));
  for (double p : {1.0, 1.5, 2.0, 4.5, 6.0}) {
    CHECK(lp_norm(one, p).value == doctest::Approx(std::pow(2 * pi, 3.0 / p)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(lp_norm(s, 0.5), InvalidInput);
  CHECK_THROWS_AS(lp_norm(s, std::nan("")), InvalidInput);
}

TEST_CASE("Lp units scale with L^{3/p}") {
  const auto v = vector_from(G, [](const Vec3& x) { return Vec3{std::sin(x[1]), 0, 0}; });
  SpectralField u = v;
  u.set_units(Dimension::velocity());
  const auto n = lp_norm(u, 1.5);
  CHECK(n.units == Dimension{Rational(3), Rational(-1)});
  CHECK(hdot_norm(u, 1).units == Dimension{Rational(3, 2), Rational(-1)});
}

TEST_CASE("Wiener and V^{s} norms") {
  CHECK(wiener_norm(sin1()).value == doctest::Approx(1.0).epsilon(1e-14));
  const auto one = forward(sample_scalar(G, [](const Vec3&) { return 1.0; }));
  CHECK(vsw_norm(one, 2).value == doctest::Approx(2.0).epsilon(1e-14));
  const auto c = scalar_from(G, [](const Vec3& x) { return std::cos(x[0]); });
  CHECK(vsw_norm(c, 2).value == doctest::Approx(3.0).epsilon(1e-14));
  std::mt19937_64 rng(3);
  const auto v = random_coefficients(G, Rank::Vector, 3, rng);
  CHECK(vsw_norm(v, 0).value == doctest::Approx(wiener_norm(v).value).epsilon(1e-14));
}

TEST_CASE("homogeneous Sobolev and weighted Wiener") {
  const auto s = sin1();
  CHECK(hdot_norm(s, 1).value == doctest::Approx(std::sqrt(box / 2)).epsilon(1e-13));
  CHECK(hdot_norm(s, 1).value == doctest::Approx(lp_norm(grad(s), 2).value).epsilon(1e-12));
  std::mt19937_64 rng(5);
  const auto v = random_coefficients(G, Rank::Vector, 3, rng);
  CHECK(weighted_wiener(v, 0).value ==
        doctest::Approx(wiener_norm(v).value - v.magnitude(0)).epsilon(1e-14));
  const auto shear = vector_from(G, [](const Vec3& x) { return Vec3{std::sin(x[1]) + 0.3 * std::cos(2 * x[2]), 0, 0}; });
  CHECK(hdot_norm(shear, 1).value == doctest::Approx(lp_norm(curl(shear), 2).value).epsilon(1e-10));
  const auto w = leray_project(v);
  CHECK(hdot_norm(w, 1).value == doctest::Approx(lp_norm(curl(w), 2).value).epsilon(1e-10));
}

TEST_CASE("superlevel measure") {
  const GridSpec g(64, 2 * pi, 31);
  const auto f = sample_scalar(g, [](const Vec3& x) { return std::sin(x[0]); });
  const double m = superlevel_measure(f, std::sqrt(2.0) / 2);
  // Boundary nodes sit on the level set; the discrete count differs by O(1/n).
  CHECK(std::abs(m - box / 2) <= box * 4.0 / 64);
  CHECK(superlevel_measure(f, 1.0) == 0.0);
  const auto pos = sample_scalar(G, [](const Vec3& x) { return 2.0 + std::sin(x[0]); });
  CHECK(superlevel_measure(pos, 0.0) == doctest::Approx(box).epsilon(1e-14));
  double prev = box + 1;
  for (double t = 0; t < 1.2; t += 0.05) {
    const double cur = superlevel_measure(f, t);
    CHECK(cur <= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(superlevel_measure(f, -0.1), InvalidInput);
}

TEST_CASE("submultiplicativity, sup bound and monotonicity in s") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_coefficients(G, Rank::Scalar, 3, rng);
    const auto b = random_coefficients(G, Rank::Vector, 3, rng);
    const auto c = random_coefficients(G, Rank::Vector, 2, rng);
    const auto ab = product(a, b);
    const auto bc = dot(b, c);
    for (double s : {0.0, 1.0, 2.5}) {
      CHECK(vsw_norm(ab, s).value <= vsw_norm(a, s).value * vsw_norm(b, s).value * (1 + 1e-12));
      CHECK(vsw_norm(bc, s).value <= vsw_norm(b, s).value * vsw_norm(c, s).value * (1 + 1e-12));
    }
    CHECK(lp_norm(b, std::numeric_limits<double>::infinity()).value <= wiener_norm(b).value * (1 + 1e-12));
    double prev = 0.0;
    for (double s = 0.0; s <= 3.0; s += 0.25) {
      const double cur = vsw_norm(b, s).value;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("norm table CSV") {
  std::ostringstream os;
  const NormRow rows[] = {{"shear", "L(2)", 2.0, 1.5}, {"shear", "W", 0.0, 0.25}};
  write_norm_table(os, rows);
  CHECK(os.str() == "field_id,norm_id,s_or_p,value\nshear,L(2),2,1.5\nshear,W,0,0.25\n");
}
