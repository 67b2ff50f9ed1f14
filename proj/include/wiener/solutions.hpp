#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wiener/check_report.hpp"
#include "wiener/nse.hpp"
#include "wiener/polynomial.hpp"

namespace wiener {

/// One Fourier mode of a shear profile: a cos(m x) + b sin(m x) with the
/// box wavenumber 2π m / L; m = 0 contributes the constant a.
struct ShearMode {
  int m = 1;
  double cos_coef = 0.0;
  double sin_coef = 1.0;
};

/// v_component = g(x_variable), every other component zero; the two axes
/// must differ (which makes v divergence-free). Returns the manufactured
/// state, whose forcing is -νΔv.
NseState make_shear(const GridSpec& grid, const std::vector<ShearMode>& profile, double nu, int component = 0,
                    int variable = 1, std::string field_id = "shear");

/// v = P(w) for w with independent Gaussian coefficients on the lattice
/// modes with radius_low <= |m| <= radius_high, scaled to root-mean-square
/// speed `amplitude`. Coefficients depend on the seed and box only, not on
/// the resolution. Throws InvalidInput when the band exceeds the dealias
/// limit. Products are exact for the identity suites when radius_high is at
/// most half the dealias limit.
SpectralField random_divfree_field(const GridSpec& grid, std::uint64_t seed, double radius_low, double radius_high,
                                   double amplitude);
/// Manufactured state built on random_divfree_field.
NseState make_random_divfree(const GridSpec& grid, std::uint64_t seed, double radius_low, double radius_high,
                             double amplitude, double nu, std::string field_id = "");

using Mat3Field = std::function<Mat3(const Vec3&)>;
/// H[i][j][k] = ∂_j ∂_k v_i.
using Hessian3 = std::array<Mat3, 3>;

/// Closed-form vector field with exact derivatives.
struct AnalyticField {
  std::function<Vec3(const Vec3&)> value;
  /// J[i][j] = ∂_j v_i.
  Mat3Field jacobian;
  std::function<Hessian3(const Vec3&)> second_derivatives;
  std::string provenance;
};

/// Jacobian against central differences (step 1e-5) at `points` seeded
/// random points of [-half_width, half_width]^3; the residual is the largest
/// error relative to max(1, |J|).
CheckReport jacobian_self_check(const AnalyticField& f, std::uint64_t seed, int points = 100, double half_width = 2.0,
                                double tol = 1e-6);

/// Exact solution v = ∇ψ of the unforced system for harmonic ψ, with
/// p = -½|∇ψ|² and Q = p + ½|v|² = 0, all kept symbolically.
struct HarmonicGradient {
  Polynomial3 psi;
  std::array<Polynomial3, 3> v;
  Polynomial3 pressure;
  Polynomial3 q;
  AnalyticField field;
};

/// Throws InvalidInput with the Laplacian remainder when Δψ != 0.
HarmonicGradient make_harmonic_gradient(const Polynomial3& psi, std::string provenance);

/// Five fixtures: x1² - x2², x1, x1 x2 x3, ½⟨Ax, x⟩ + ⟨η, x⟩ with trace-free
/// symmetric A, and x1⁴ - 6 x1² x2² + x2⁴ + x3 (x1² - x2²).
std::vector<HarmonicGradient> harmonic_gradient_fixtures();

/// `count` seeded points, uniform in [-half_width, half_width]^3.
std::vector<Vec3> sample_points(std::uint64_t seed, int count, double half_width = 2.0);

/// Pointwise versions of the unconditional and conditional identity suites
/// for a harmonic gradient (no grid involved). Nonlocal operators enter only
/// through P and P~ applied to fields that vanish symbolically, so every
/// check reduces to local algebra on the exact derivatives.
std::vector<CheckReport> harmonic_identity_suite(const HarmonicGradient& h, double nu, const std::vector<Vec3>& points,
                                                 const std::string& field_id);

/// w(x) = λ v(λx), q(x) = λ² p(λx), f_w(x) = λ³ f(λx), placed on the box of
/// side L/λ with the same resolution so node x of w sits at node λx of v.
/// Throws InvalidInput unless λ is a positive integer.
NseState rescale(const NseState& s, int lambda);

/// Residual and its viscous and nonlinear terms satisfy
/// r_w(x) = λ³ r_v(λx), the pressure q(x) = λ² p(λx), and
/// ‖curl w‖²_L2 = λ ‖curl v‖²_L2. The residual is the largest relative
/// discrepancy.
CheckReport scaling_covariance_check(const NseState& s, int lambda, double tol = 1e-10);

}  // namespace wiener
