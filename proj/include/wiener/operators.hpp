#pragma once

#include <array>
#include <functional>
#include <string>

#include "wiener/check_report.hpp"
#include "wiener/field.hpp"

namespace wiener {

enum class Parity {
  /// m(-k) = m(k), real symmetric values (|k|^2, Leray projectors, R0).
  RealEvenSymmetric,
  /// m(-k) = -m(k), purely imaginary antisymmetric values (curl, gradient).
  ImaginaryOddAntisymmetric,
  Other,
};

std::string parity_name(Parity p);

/// Fourier multiplier m(D): c'_k = m(k) c_k.
///
/// The symbol is a row-major (out x in) complex matrix, or a scalar applied
/// componentwise to a field of any rank when `componentwise` is set. The
/// symbol is evaluated at the effective wavevector, which is k with every
/// Nyquist component (index n/2) set to zero: a Nyquist mode is its own
/// reality partner, so this is what keeps both parity classes reality
/// preserving. When the effective wavevector vanishes `zero_mode` is used.
struct MultiplierSpec {
  using Matrix = std::array<Complex, 27>;

  std::string name;
  Rank in_rank = Rank::Vector;
  Rank out_rank = Rank::Vector;
  bool componentwise = false;
  std::function<Matrix(const Vec3&)> symbol;
  Matrix zero_mode{};
  Parity parity = Parity::Other;
  /// Physical order: the output carries units of the input times L^-order.
  int order = 0;
  /// Symbol even in each coordinate separately (radial cutoffs). Such a
  /// symbol is reality preserving at the true Nyquist wavevector, which is
  /// then used instead of the effective one.
  bool coordinate_even = false;

  static MultiplierSpec scalar(std::string name, std::function<Complex(const Vec3&)> s, Complex zero,
                               Parity parity, int order);
};

/// Wavevector the symbols see: Nyquist components zeroed.
Vec3 effective_wavevector(const GridSpec& g, const Wavevector& m);

/// Throws GridMismatch / RankMismatch. Output is flagged real iff the input
/// is and the parity class is not Other.
SpectralField apply_multiplier(const MultiplierSpec& m, const SpectralField& v);

/// Scans the retained band: parity class claims hold exactly (up to 1e-14 of
/// the symbol size) and the symbol is bounded; lhs reports the supremum of
/// the operator norm.
CheckReport check_multiplier(const MultiplierSpec& m, const GridSpec& g);

/// Largest singular value of an (rows x cols) complex matrix.
double operator_norm(const MultiplierSpec::Matrix& a, int rows, int cols);

// Standard symbols.
MultiplierSpec curl_multiplier();
MultiplierSpec curl2_multiplier();
MultiplierSpec grad_multiplier();
MultiplierSpec div_multiplier();
MultiplierSpec laplacian_multiplier();
MultiplierSpec inv_neg_laplacian_multiplier();
MultiplierSpec leray_multiplier();
MultiplierSpec leray_complement_multiplier();
/// |D|^-2 C^2 with zero mode 0 (the curl form of the projector).
MultiplierSpec leray_via_curl_multiplier();
/// Tensor -> scalar, symbol -k_i k_j / |k|^2, zero mode 0.
MultiplierSpec riesz_r0_multiplier();

SpectralField curl(const SpectralField& v);
SpectralField curl2(const SpectralField& v);
SpectralField grad(const SpectralField& s);
SpectralField div(const SpectralField& v);
SpectralField laplacian(const SpectralField& f);
SpectralField inv_neg_laplacian(const SpectralField& f);
SpectralField leray_project(const SpectralField& v);
SpectralField leray_complement(const SpectralField& v);
SpectralField leray_project_via_curl(const SpectralField& v);
/// Σ_ij |D|^-2 ∂_i ∂_j T_ij, zero mode 0.
SpectralField riesz_r0(const SpectralField& t);

/// Rank-2 field whose column ℓ is u_ℓ = P(v_ℓ v - ½|v|² e_ℓ), with products
/// dealiased and the mean of every u_ℓ set to zero. Entry (i, ℓ) is the i-th
/// component of u_ℓ.
SpectralField s0_map(const SpectralField& v);
/// Bilinear form behind s0_map: column ℓ is P(a_ℓ b - ½⟨a, b⟩ e_ℓ), mean
/// zero; s0_map(v) = s0_bilinear(v, v).
SpectralField s0_bilinear(const SpectralField& a, const SpectralField& b);
/// Σ_ℓ ∂_ℓ u_ℓ for a field in the layout of s0_map.
SpectralField column_divergence(const SpectralField& u);
/// Column ℓ of a rank-2 field as a vector field.
SpectralField tensor_column(const SpectralField& t, int l);

/// max_k |k·c_k| / max_k |k||c_k| (0 for a constant field).
double divergence_defect(const SpectralField& v);

}  // namespace wiener
