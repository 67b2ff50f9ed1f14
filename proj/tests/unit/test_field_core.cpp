#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "wiener/error.hpp"
#include "wiener/field_io.hpp"

using namespace wiener;
using namespace testing_support;

TEST_CASE("grid spec validation and index maps") {
  CHECK_THROWS_AS(GridSpec(6, 1.0, 2), InvalidInput);
  CHECK_THROWS_AS(GridSpec(2, 1.0, 1), InvalidInput);
  CHECK_THROWS_AS(GridSpec(8, -1.0, 2), InvalidInput);
  CHECK_THROWS_AS(GridSpec(8, 1.0, 4), InvalidInput);
  const GridSpec g(8, 2 * pi, 3);
  CHECK(g.wave_index(4) == 4);
  CHECK(g.wave_index(5) == -3);
  for (std::size_t s = 0; s < g.size(); ++s) CHECK(g.linear(g.mode_at(s)) == s);
  const GridSpec d = GridSpec::desk_scale();
  CHECK(d.n() == 32);
  CHECK(d.dealias_limit() == 10);
}

TEST_CASE("sin(x1) has coefficients -i/2 and +i/2") {
  const GridSpec g(16, 2 * pi, 7);
  const auto c = scalar_from(g, [](const Vec3& x) { return std::sin(x[0]); });
  CHECK(std::abs(c.at(0, Wavevector{1, 0, 0}) - Complex(0, -0.5)) < 1e-15);
  CHECK(std::abs(c.at(0, Wavevector{-1, 0, 0}) - Complex(0, 0.5)) < 1e-15);
  const auto support = spectrum_support(c, 1e-12);
  REQUIRE(support.size() == 2);
  CHECK(support[0] == Wavevector{-1, 0, 0});
  CHECK(support[1] == Wavevector{1, 0, 0});
}

TEST_CASE("constant field is the zero mode") {
  const GridSpec g(8, 3.0, 3);
  const auto c = scalar_from(g, [](const Vec3&) { return 1.0; });
  CHECK(std::abs(c.at(0, 0) - 1.0) < 1e-15);
  CHECK(spectrum_support(c, 1e-14).size() == 1);
  CHECK(spectrum_support(SpectralField(g, Rank::Scalar), 0.0).empty());
}

TEST_CASE("forward matches a brute-force DFT") {
  const GridSpec g(8, 1.7, 3);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  PhysicalField v(g, Rank::Vector);
  for (auto& s : v.samples()) s = u(rng);
  const auto c = forward(v);
  const int n = g.n();
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Wavevector m = g.mode_at(k);
    for (int comp = 0; comp < 3; ++comp) {
      Complex acc = 0.0;
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i) {
            const double phase = -2 * pi * (m.m1 * i + m.m2 * j + m.m3 * l) / n;
            acc += v.at(comp, g.linear(i, j, l)) * std::polar(1.0, phase);
          }
      worst = std::max(worst, std::abs(acc / double(g.size()) - c.at(comp, k)));
    }
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("round trip and Parseval on a random 32^3 field") {
  const GridSpec g = GridSpec::desk_scale();
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  PhysicalField v(g, Rank::Vector);
  for (auto& s : v.samples()) s = gauss(rng);
  const auto c = forward(v);
  const auto back = inverse(c);
  CHECK(relative_max_difference(v, back) < 1e-12);
  double phys = 0.0, spec = 0.0;
  for (double s : v.samples()) phys += s * s;
  phys *= g.cell_volume();
  for (const auto& z : c.coefficients()) spec += std::norm(z);
  spec *= g.volume();
  CHECK(std::abs(phys - spec) / phys < 1e-12);
}

TEST_CASE("non-finite samples are rejected") {
  const GridSpec g(8, 1.0, 3);
  PhysicalField v(g, Rank::Scalar);
  v.at(0, 3) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(forward(v), InvalidInput);
}

TEST_CASE("reality checks") {
  const GridSpec g(16, 2 * pi, 7);
  CHECK(check_reality(scalar_from(g, [](const Vec3& x) { return std::cos(x[0]); })).pass);
  CHECK(check_reality(scalar_from(g, [](const Vec3& x) { return std::sin(x[0]) + std::cos(2 * x[1]); })).pass);
  SpectralField broken(g, Rank::Scalar);
  broken.at(0, Wavevector{1, 0, 0}) = 1.0;
  CHECK_FALSE(check_reality(broken).pass);
  CHECK_THROWS_AS(inverse(broken), InvalidInput);
  std::mt19937_64 rng(3);
  CHECK(check_reality(random_coefficients(g, Rank::Vector, 4, rng)).pass);
}

TEST_CASE("band-limited random field stays in its annulus") {
  const GridSpec g(16, 2 * pi, 7);
  std::mt19937_64 rng(9);
  auto c = random_coefficients(g, Rank::Scalar, 5, rng);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const int r2 = g.mode_at(k).norm2();
    if (r2 < 4 || r2 > 25) c.at(0, k) = 0.0;
  }
  for (const auto& m : spectrum_support(c, 0.0)) {
    CHECK(m.norm2() >= 4);
    CHECK(m.norm2() <= 25);
  }
}

TEST_CASE("dealiased product equals the brute-force convolution") {
  const GridSpec g(8, 2 * pi, 3);
  std::mt19937_64 rng(21);
  const auto a = random_coefficients(g, Rank::Scalar, 2, rng);
  const auto b = random_coefficients(g, Rank::Vector, 2, rng);
  const auto ab = product(a, b);
  double worst = 0.0;
  for (int l = -3; l <= 3; ++l)
    for (int j = -3; j <= 3; ++j)
      for (int i = -3; i <= 3; ++i) {
        for (int comp = 0; comp < 3; ++comp) {
          Complex acc = 0.0;
          for (int q3 = -2; q3 <= 2; ++q3)
            for (int q2 = -2; q2 <= 2; ++q2)
              for (int q1 = -2; q1 <= 2; ++q1) {
                const Wavevector r{i - q1, j - q2, l - q3};
                if (r.max_abs() > 2) continue;
                acc += a.at(0, Wavevector{q1, q2, q3}) * b.at(comp, r);
              }
          worst = std::max(worst, std::abs(acc - ab.at(comp, Wavevector{i, j, l})));
        }
      }
  CHECK(worst < 1e-12);
  // Modes beyond the dealias limit are exactly zero.
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!g.retained(g.mode_at(k))) CHECK(ab.magnitude(k) == 0.0);
  }
}

TEST_CASE("products at the nodes agree with pointwise products for low bands") {
  const GridSpec g(16, 2 * pi, 7);
  std::mt19937_64 rng(4);
  const auto a = random_coefficients(g, Rank::Vector, 3, rng);
  const auto b = random_coefficients(g, Rank::Vector, 3, rng);
  const auto pa = inverse(a), pb = inverse(b);
  const auto c = inverse(cross(a, b));
  const auto d = inverse(dot(a, b));
  double worst = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Vec3 cr = wiener::cross(pa.vec(x), pb.vec(x));
    worst = std::max(worst, norm(cr - c.vec(x)));
    worst = std::max(worst, std::abs(wiener::dot(pa.vec(x), pb.vec(x)) - d.at(0, x)));
  }
  CHECK(worst < 1e-11 * pa.max_magnitude() * pb.max_magnitude());
}

TEST_CASE("resample translates and refines") {
  const GridSpec g(16, 2 * pi, 7);
  const GridSpec fine(32, 2 * pi, 10);
  const auto c = scalar_from(g, [](const Vec3& x) { return std::sin(x[0]) * std::cos(2 * x[2]); });
  const Vec3 s{0.1, 0.2, 0.3};
  const auto shifted = inverse(resample(c, fine, s));
  double worst = 0.0;
  for (std::size_t x = 0; x < fine.size(); ++x) {
    const Vec3 p = fine.node(x) + s;
    worst = std::max(worst, std::abs(shifted.at(0, x) - std::sin(p[0]) * std::cos(2 * p[2])));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("spectral CSV and raw dumps round trip") {
  const GridSpec g(8, 2 * pi, 3);
  std::mt19937_64 rng(8);
  const auto c = random_coefficients(g, Rank::Vector, 2, rng);
  std::stringstream ss;
  write_spectral_csv(ss, c);
  const std::string text = ss.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * static_cast<long>(g.size()));
  const auto back = read_spectral_csv(ss, g, Rank::Vector);
  CHECK(relative_max_difference(c, back) == 0.0);

  const auto v = inverse(c);
  const auto stem = std::filesystem::temp_directory_path() / "wiener_raw_roundtrip";
  write_raw(stem, v);
  const auto w = read_raw(stem);
  CHECK(w.grid() == g);
  CHECK(w.samples() == v.samples());
}
