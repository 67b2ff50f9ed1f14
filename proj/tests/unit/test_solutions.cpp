#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wiener/error.hpp"
#include "wiener/norms.hpp"
#include "wiener/operators.hpp"
#include "wiener/solutions.hpp"

using namespace wiener;
using namespace testing_support;

namespace {

const GridSpec G(16, 2 * pi, 7);
using P = Polynomial3;
const P x1 = P::variable(0), x2 = P::variable(1), x3 = P::variable(2);

}  // namespace

TEST_CASE("polynomial arithmetic and derivatives") {
  const P p = x1 * x1 - x2 * x2;
  CHECK(p.str() == "x1^2 - x2^2");
  CHECK(p({3, 2, 7}) == 5.0);
  CHECK(p.derivative(0).str() == "2 x1");
  CHECK(p.laplacian().is_zero());
  CHECK((x1 * x2 * x3).laplacian().is_zero());
  CHECK((x1 * x1).laplacian().str() == "2");
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");
  CHECK((x1 * x1 * x1).degree() == 3);
  CHECK((-0.5 * (x1 + P::constant(1))).str() == "-0.5 x1 - 0.5");
  CHECK_THROWS_AS(P::variable(3), InvalidInput);
}

TEST_CASE("harmonic gradients") {
  const auto h = make_harmonic_gradient(x1 * x1 - x2 * x2, "saddle");
  const Vec3 x{0.3, -1.2, 0.7};
  const Vec3 v = h.field.value(x);
  CHECK(v[0] == doctest::Approx(0.6));
  CHECK(v[1] == doctest::Approx(2.4));
  CHECK(v[2] == 0.0);
  CHECK(h.q.is_zero());
  CHECK(h.pressure(x) == doctest::Approx(-0.5 * (0.36 + 5.76)));
  const auto c = make_harmonic_gradient(x1, "constant");
  CHECK(c.pressure.str() == "-0.5");
  try {
    make_harmonic_gradient(x1 * x1 + x2, "bad");
    FAIL("non-harmonic potential accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("Laplacian = 2") != std::string::npos);
  }
  const auto fixtures = harmonic_gradient_fixtures();
  REQUIRE(fixtures.size() == 5);
  const auto pts = sample_points(4, 1000);
  for (const auto& f : fixtures) {
    CHECK(f.psi.laplacian().is_zero());
    CHECK(jacobian_self_check(f.field, 1).pass);
    for (const auto& r : harmonic_identity_suite(f, 0.5, pts, "harmonic")) {
      CAPTURE(r.check_id);
      CAPTURE(f.field.provenance);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("analytic identities detect a rotational field") {
  // A rigid rotation is not a gradient: the suite's symbolic P~ step refuses it.
  HarmonicGradient h = make_harmonic_gradient(x1 * x2, "xy");
  h.v = {-1.0 * x2, x1, P{}};
  h.field.value = [](const Vec3& x) { return Vec3{-x[1], x[0], 0}; };
  h.field.jacobian = [](const Vec3&) { return Mat3{Vec3{0, -1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 0}}; };
  h.field.second_derivatives = [](const Vec3&) { return Hessian3{}; };
  const auto rs = harmonic_identity_suite(h, 1.0, sample_points(1, 50), "rotation");
  for (const auto& r : rs) {
    if (r.check_id == "analytic/identity/curl-cross") CHECK(r.pass);
    if (r.check_id == "analytic/identity/grad-q") CHECK_FALSE(r.pass);
    if (r.check_id == "analytic/conditional/residual-bernoulli") CHECK_FALSE(r.pass);
  }
}

TEST_CASE("jacobian self check catches a wrong derivative") {
  AnalyticField f;
  f.value = [](const Vec3& x) { return Vec3{x[0] * x[0], 0, 0}; };
  f.jacobian = [](const Vec3& x) { return Mat3{Vec3{x[0], 0, 0}, Vec3{}, Vec3{}}; };
  CHECK_FALSE(jacobian_self_check(f, 3).pass);
}

TEST_CASE("shear states") {
  const double nu = 0.4;
  const auto s = make_shear(G, {{1, 0.0, 1.0}}, nu);
  const auto f = vector_from(G, [nu](const Vec3& x) { return Vec3{nu * std::sin(x[1]), 0, 0}; });
  CHECK(relative_max_difference(s.f, f) < 1e-14);
  CHECK(s.p.max_magnitude() < 1e-16);
  CHECK(residual_check(s).pass);
  const auto c = make_shear(G, {{0, 2.0, 0.0}}, nu);
  CHECK(c.f.max_magnitude() == 0.0);
  const auto m = make_shear(G, {{1, 0.0, 1.0}, {3, 0.0, 0.5}}, nu, 2, 0);
  CHECK(residual_check(m).residual < 1e-12);
  const auto expect = vector_from(G, [](const Vec3& x) { return Vec3{0, 0, std::sin(x[0]) + 0.5 * std::sin(3 * x[0])}; });
  CHECK(relative_max_difference(m.v, expect) < 1e-14);
  CHECK_THROWS_AS(make_shear(G, {{1, 0, 1}}, nu, 1, 1), InvalidInput);
  CHECK_THROWS_AS(make_shear(G, {{9, 0, 1}}, nu), InvalidInput);
}

TEST_CASE("random divergence-free states") {
  const auto a = make_random_divfree(G, 42, 2, 3.5, 1.0, 0.1);
  const auto b = make_random_divfree(G, 42, 2, 3.5, 1.0, 0.1);
  CHECK(a.v.coefficients() == b.v.coefficients());
  CHECK(a.field_id == "random-42");
  CHECK(divergence_defect(a.v) < 1e-14);
  CHECK(check_reality(a.v).pass);
  CHECK(lp_norm(a.v, 2).value / std::pow(2 * pi, 1.5) == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& m : spectrum_support(a.v, 1e-14)) {
    CHECK(m.norm2() >= 4);
    CHECK(m.norm2() <= 12);
  }
  const auto z = make_random_divfree(G, 42, 2, 3.5, 0.0, 0.1);
  CHECK(z.v.max_magnitude() == 0.0);
  // Coefficients do not depend on the resolution.
  const GridSpec fine(32, 2 * pi, 10);
  const auto c = make_random_divfree(fine, 42, 2, 3.5, 1.0, 0.1);
  double worst = 0.0;
  for (std::size_t k = 0; k < G.size(); ++k) {
    const Wavevector m = G.mode_at(k);
    for (int comp = 0; comp < 3; ++comp) worst = std::max(worst, std::abs(a.v.at(comp, m) - c.v.at(comp, m)));
  }
  CHECK(worst == 0.0);
  CHECK_THROWS_AS(make_random_divfree(G, 1, 2, 9, 1.0, 0.1), InvalidInput);
}

TEST_CASE("rescaling") {
  const double nu = 0.3;
  const auto s = make_shear(G, {{1, 0.0, 1.0}}, nu);
  const auto w = rescale(s, 2);
  CHECK(w.v.grid().length() == doctest::Approx(pi));
  const GridSpec& gw = w.v.grid();
  const auto expect = vector_from(gw, [nu](const Vec3& x) { return Vec3{8 * nu * std::sin(2 * x[1]), 0, 0}; });
  CHECK(relative_max_difference(w.f, expect) < 1e-14);
  CHECK(relative_max_difference(rescale(s, 1).v, s.v) == 0.0);
  CHECK_THROWS_AS(rescale(s, 0), InvalidInput);
  CHECK(scaling_covariance_check(s, 2).pass);
  CHECK(scaling_covariance_check(s, 1).residual < 1e-14);
  for (std::uint64_t seed = 1; seed < 4; ++seed) {
    const auto r = make_random_divfree(G, seed, 1, 3, 1.0, nu);
    const auto rep = scaling_covariance_check(r, 2);
    CAPTURE(rep.note);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(2 * rep.rhs / 2).epsilon(1e-12));
    // A forcing that is not synthesized leaves a nonzero residual that still scales covariantly.
    const auto unforced = make_forced_state(r.v, nu, SpectralField(G, Rank::Vector), "unforced");
    CHECK(scaling_covariance_check(unforced, 3).pass);
  }
}
