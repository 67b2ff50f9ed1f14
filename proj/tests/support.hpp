#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "wiener/field.hpp"
#include "wiener/transform.hpp"

namespace testing_support {

using namespace wiener;

inline constexpr double pi = std::numbers::pi;

/// Real field with independent Gaussian coefficients on |m_i| <= band,
/// written directly into coefficient storage with conjugate partners.
inline SpectralField random_coefficients(const GridSpec& g, Rank rank, int band, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  SpectralField c(g, rank);
  for (int l = -band; l <= band; ++l)
    for (int j = -band; j <= band; ++j)
      for (int i = -band; i <= band; ++i) {
        const Wavevector m{i, j, l};
        if (-m < m) continue;
        for (int comp = 0; comp < components(rank); ++comp) {
          if (m == -m) {
            c.at(comp, m) = gauss(rng);
          } else {
            const Complex z(gauss(rng), gauss(rng));
            c.at(comp, m) = z;
            c.at(comp, -m) = std::conj(z);
          }
        }
      }
  return c;
}

inline SpectralField scalar_from(const GridSpec& g, double (*f)(const Vec3&)) { return forward(sample_scalar(g, f)); }

inline SpectralField vector_from(const GridSpec& g, const std::function<Vec3(const Vec3&)>& f) {
  return forward(sample_vector(g, f));
}

/// Zeroes coefficients below rel · max |c_k| (transform rounding of sampled
/// trigonometric fields).
inline SpectralField chop(SpectralField c, double rel = 1e-13) {
  const double cut = rel * c.max_magnitude();
  for (auto& z : c.coefficients())
    if (std::abs(z) < cut) z = 0.0;
  return c;
}

inline double max_abs_coefficient(const SpectralField& c) { return c.max_magnitude(); }

}  // namespace testing_support
