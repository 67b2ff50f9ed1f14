#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wiener/bands.hpp"
#include "wiener/check_report.hpp"
#include "wiener/field.hpp"

namespace wiener {

/// A divergence-free velocity with viscosity, forcing and the derived
/// pressure p and Bernoulli head pressure Q = p + ½|v|².
///
/// A manufactured state carries f = ν C²v + P(Cv × v), which makes v an exact
/// solution of the forced stationary system.
struct NseState {
  std::string field_id;
  SpectralField v;
  double nu = 1.0;
  SpectralField f;
  SpectralField p;
  SpectralField q;
  bool manufactured = false;
};

/// Divergence-free tolerance of the state constructors (field-core rule).
inline constexpr double kDivergenceTolerance = 1e-10;

/// Throws InvalidInput unless v is a real vector field with
/// max_k |k·c_k| <= 1e-10 max_k |k||c_k|.
void require_divergence_free(const SpectralField& v, const char* what);

SpectralField manufactured_forcing(const SpectralField& v, double nu);
/// Throws InvalidInput for ν <= 0 or a non-solenoidal v.
NseState make_manufactured_state(SpectralField v, double nu, std::string field_id);
NseState make_forced_state(SpectralField v, double nu, SpectralField f, std::string field_id);

/// p = Σ_ij |D|^-2 ∂_i ∂_j (v_i v_j) with mean zero.
SpectralField pressure_from_v(const SpectralField& v);
/// Q = p + ½|v|².
SpectralField bernoulli_q(const SpectralField& v);

/// ν C²v + P(Cv × v) - f.
SpectralField residual_leray(const NseState& s);
/// ν C²v + Cv × v + ∇Q - f.
SpectralField residual_bernoulli(const NseState& s);

// Unconditional identities, valid for any divergence-free v that is
// band-limited to half the dealias limit (so every nested product is exact).
// Each compares nodal samples of two independently evaluated sides; the
// residual is the max-norm difference relative to the largest term.

/// (Cv) × v = (v·∇)v - ½∇|v|².
CheckReport identity_cross(const SpectralField& v, double tol = 1e-10);
/// div(Cv × v) = ⟨C²v, v⟩ - |Cv|².
CheckReport identity_div_cross(const SpectralField& v, double tol = 1e-10);
/// ΔQ = |Cv|² - ⟨C²v, v⟩.
CheckReport identity_deltaq_unconditional(const SpectralField& v, double tol = 1e-10);
/// ∇Q = -P~(Cv × v).
CheckReport identity_grad_q(const SpectralField& v, double tol = 1e-10);
/// P(Cv × v) = Σ_ℓ ∂_ℓ u_ℓ with u_ℓ the columns of s0_map(v).
CheckReport identity_s0_divergence(const SpectralField& v, double tol = 1e-10);
/// P(∇|v|²) = 0.
CheckReport identity_leray_kills_gradient(const SpectralField& v, double tol = 1e-12);
/// max_x |⟨Cv × v, v⟩| <= tol · max_x |Cv| |v|².
CheckReport pointwise_cancellation(const SpectralField& v, double tol = 1e-12);

/// All of the above, in a fixed order, tagged with field_id.
std::vector<CheckReport> unconditional_identity_suite(const SpectralField& v, const std::string& field_id);

// Conditional checks for a state.

/// Max-norm of residual_leray relative to the largest equation term.
CheckReport residual_check(const NseState& s, double tol = 1e-10);
/// P(residual_bernoulli - residual_leray) = 0 relative to the equation terms.
CheckReport residual_consistency(const NseState& s, double tol = 1e-10);
/// Q = p + ½|v|² at the nodes.
CheckReport bernoulli_consistency(const NseState& s, double tol = 1e-12);
/// ΔQ = |Cv|² + ν^-1 ⟨∇Q, v⟩ - ν^-1 ⟨f, v⟩ (the unforced form when f = 0).
CheckReport identity_deltaq(const NseState& s, double tol = 1e-9);
/// ν ‖Cv‖² = ⟨f, v⟩ (torus limit: all cutoff-gradient terms vanish).
CheckReport energy_balance(const NseState& s, double tol = 1e-9);
/// ∫(ΔQ)_+ = ∫(ΔQ)_- with ΔQ sampled from the right-hand side of the
/// generalized identity; the note records ∫ΔQ.
CheckReport laplacian_q_balance(const NseState& s, double tol = 1e-9);

std::vector<CheckReport> conditional_identity_suite(const NseState& s);

/// Terms of the sublevel energy identity over S = {Q < -ε}, by sharp node
/// masking on the state's grid.
struct SublevelTerms {
  double curl_energy = 0.0;     ///< ∫_S |Cv|²
  double laplacian_q = 0.0;     ///< ∫_S ΔQ
  double forcing = 0.0;         ///< ν^-1 ∫_S ⟨f, v⟩
  double flux = 0.0;            ///< ν^-1 ∫_S ⟨∇Q, v⟩, zero in the continuum
  std::size_t nodes = 0;        ///< nodes in S
  /// min |∇Q| over the discrete level band |Q + ε| <= h max|∇Q|, relative to
  /// max |∇Q|; small values flag a near-critical level.
  double level_gradient_ratio = 1.0;
  double discrepancy() const;   ///< |curl_energy - laplacian_q - forcing|
};

SublevelTerms sublevel_terms(const NseState& s, double eps);

/// ∫_S |Cv|² = ∫_S ΔQ + ν^-1 ∫_S ⟨f, v⟩. The tolerance is relative and
/// scales with the spacing: tolerance_per_cell · h / L. Empty S passes
/// trivially. Throws InvalidInput for ε <= 0.
CheckReport sublevel_energy_audit(const NseState& s, double eps, double tolerance_per_cell = 1.0);

/// Levels whose discrete level band has |∇Q| below this fraction of its max
/// are flagged as not regular.
inline constexpr double kRegularLevelRatio = 0.05;

using StateBuilder = std::function<NseState(const GridSpec& grid, const Vec3& shift)>;

struct SublevelSweep {
  std::vector<int> n;
  std::vector<double> rms_discrepancy;
  /// Shift means of ∫_S |Cv|² and of ∫_S ΔQ + ν^-1 ∫_S ⟨f, v⟩ per grid.
  std::vector<double> curl_energy;
  std::vector<double> rhs;
  std::vector<double> observed_order;
  CheckReport report;
};

/// Builds the state on each grid for `shift_count` translations (fixed,
/// seeded, uniform in one coarse cell), takes the RMS of the sublevel
/// discrepancy per grid and passes iff the observed order between every
/// consecutive pair of grids is at least `min_order`.
SublevelSweep sublevel_resolution_sweep(const StateBuilder& build, double eps, const std::vector<GridSpec>& grids,
                                        int shift_count = 8, std::uint64_t seed = 0, double min_order = 1.0);

struct BootstrapAudit {
  CheckReport spectral_equation;
  CheckReport cascade;
};

/// Per-mode residual of ν|k|²W + i P(k) k_j (W_j ⋆ W) - F = 0 (W, F the
/// coefficients of v and f) and the lattice cascade
///   ν Σ_{k≠0} |k|^{1+κ} |W| <= Σ_ℓ Σ_{k≠0} |k|^κ |U_ℓ| + Σ_{k≠0} |k|^{κ-1} |F|,
/// U_ℓ the columns of s0_map(v). Requires a manufactured state and κ >= 0.
BootstrapAudit bootstrap_spectral_audit(const NseState& s, double kappa, double tol = 1e-10);

/// Low/high split diagnostics for the L^{9/2} band hypothesis: norms of v_[0]
/// and v_[1] and the four terms of v_[0] S0[(v_[0] + v_[1]) ⊗ (v_[0] + v_[1])].
/// Pass/fail only on the reassembly of the four terms.
CheckReport galdi_band_audit(const NseState& s, const CutoffProfile& alpha0, double tol = 1e-10);
/// Terms of C²v·v = C²v·v_[1] + C²v_[1]·v_[0] + C²v_[0]·v_[0] and
/// ‖α0(D)C²v‖_{L^{6/5}}; pass/fail only on reassembly.
CheckReport chae_band_audit(const NseState& s, const CutoffProfile& alpha0, double tol = 1e-10);

/// With g = -νΔf + X·∇f: ν‖∇f‖² = ⟨g, f⟩ + ½⟨div X, f²⟩. The note reports
/// ‖(div X)_+‖_{L^{3/2}}.
CheckReport linear_liouville_audit(const SpectralField& f, const SpectralField& x, double nu, double tol = 1e-9);

}  // namespace wiener
