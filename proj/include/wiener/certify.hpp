#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wiener/check_report.hpp"
#include "wiener/field.hpp"
#include "wiener/vec3.hpp"

namespace wiener {

/// Slack (τ + |a|²)(τ + |b|²) − τ − |a + b|² of the Peetre-type inequality;
/// negative means (a, b) violates it for this τ.
double peetre_slack(double tau, const Vec3& a, const Vec3& b);

struct PeetreSearchResult {
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  /// ξ₁ = ξ₂ = witness violates the inequality at τ = bracket_low.
  Vec3 witness{};
  double witness_slack = 0.0;
  std::size_t samples = 0;
  std::size_t tau2_violations = 0;
  CheckReport bracket;
  CheckReport tau2;
};

/// Bisection for the least admissible τ. Violation below a trial τ comes from
/// the collinear witness |ξ₁| = |ξ₂| = √(2 − τ); admissibility above it is
/// tested on `samples` random and structured pairs reduced to magnitudes
/// (a, b) with |ξ₁ + ξ₂| = a + b. The same pairs certify τ = 2.
PeetreSearchResult peetre_certify(std::uint64_t seed = 0, std::size_t samples = 100000,
                                  double bracket_width = 1e-6);

/// |a × b| <= |a||b| for random vector pairs (magnitudes spread over 12 decades).
CheckReport hadamard_cross_certify(std::uint64_t seed = 0, std::size_t samples = 10000);

/// Samples of a vector field on an n³ grid of a box of side L, x1 fastest.
struct NodalVectors {
  int n = 0;
  double length = 0.0;
  std::vector<Vec3> values;
};

/// (h³ Σ |u|^p)^{1/p}; p = +infinity gives the max.
double nodal_lp(const NodalVectors& u, double p);

/// ‖a × b‖_r <= ‖a‖_p ‖b‖_q with 1/r = 1/p + 1/q (discrete Hölder).
CheckReport holder_cross_check(const NodalVectors& a, const NodalVectors& b, double p, double q);

/// (a ⋆ b)(x) = (2π)^{-3/2} h³ Σ_y a(x − y) × b(y), by direct summation.
NodalVectors star_convolution(const NodalVectors& a, const NodalVectors& b);

/// ‖a ⋆ b‖_r <= (2π)^{-3/2} ‖a‖_p ‖b‖_q with 1 + 1/r = 1/p + 1/q (discrete Young).
CheckReport young_star_certify(const NodalVectors& a, const NodalVectors& b, double p, double q);

/// Randomized campaigns over exponent triples; one aggregated report each.
CheckReport holder_cross_certify(std::uint64_t seed = 0, std::size_t instances = 1000);
CheckReport young_star_campaign(std::uint64_t seed = 0, std::size_t instances = 1000);

/// (1 + a)^s <= 2^{s-1}(1 + a^s), s ∈ {1, 1.5, 2, 3, 5, 10}, a on a log grid
/// over [1e-6, 1e6] plus a = 0 and a = 1.
CheckReport power_inequality_certify();

/// Σ_{k≠0} |k|^κ |c_k| <= A_κ (Σ|k|²|c_k|²)^{1/2} + B_κ (Σ|k|⁴|c_k|²)^{1/2}
/// with the lattice constants A_κ = (Σ_{0<|k|<=1} |k|^{2κ-2})^{1/2} and
/// B_κ = (Σ_{|k|>1} |k|^{2κ-4})^{1/2} over the grid modes. κ ∈ (-1/2, 1/2).
CheckReport kappa_split_certify(const SpectralField& v, double kappa);

/// Σ_{k≠0} |c_k| <= min over lattice radii ρ of the ρ-split bound.
CheckReport wiener_split_certify(const SpectralField& v);

/// Σ_{|k|>=ρ} |c_k|² <= ρ⁻⁴ Σ |k|⁴ |c_k|² for ρ ∈ {1, 2, 4}.
CheckReport chebyshev_tail_certify(const SpectralField& v);

/// Random band-limited fields on assorted boxes; reports for the κ-split
/// (κ cycling through -0.4, 0, 0.4), the Wiener split and the Chebyshev tail.
std::vector<CheckReport> lattice_split_campaign(std::uint64_t seed = 0, std::size_t instances = 1000);

/// ‖fg‖_{V(s)} <= ‖f‖_{V(s)} ‖g‖_{V(s)} over random scalar pairs; one report
/// per s, all on the same pairs.
std::vector<CheckReport> submultiplicativity_certify(const std::vector<double>& s_values, std::uint64_t seed = 0,
                                                     std::size_t pairs = 1000);

/// f(x) = ψ(u), u = Σ ((x − c)_i / R_i)², supported in u < 1.
struct Bump {
  enum class Profile { Cubic, Quadratic, Exponential };
  std::string name;
  Profile profile = Profile::Cubic;
  Vec3 center{};
  Vec3 radii{};
  double amplitude = 1.0;
};

struct GnRatio {
  double gradient_l1 = 0.0;
  double f_l32 = 0.0;
  /// ‖∇f‖₁ / (3 (4π/3)^{1/3} ‖f‖_{3/2}); NaN for the zero field.
  double ratio = 0.0;
};

/// Node-sum quadrature on an n³ grid over the box of side L with the exact
/// gradient. Throws InvalidInput unless the support is strictly inside.
GnRatio gn_ratio(const Bump& b, double length, int n);

/// Ratio >= 1 − δ(h) with δ(h) = |r(h) − r(2h)|; diagnostic report.
CheckReport gn_isoperimetric_diagnostic(const Bump& b, double length, int n = 64);

/// Five bump shapes centred in a box of side L.
std::vector<Bump> gn_bump_fixtures(double length);

/// Every certificate above in a fixed order (unit audits are separate).
std::vector<CheckReport> certify_suite(std::uint64_t seed = 0);

}  // namespace wiener
