#pragma once

#include <vector>

#include "wiener/check_report.hpp"
#include "wiener/field.hpp"
#include "wiener/operators.hpp"

namespace wiener {

/// 7th-order smoothstep t^4 (35 - 84 t + 70 t^2 - 20 t^3), clamped to [0, 1].
double smoothstep7(double t);
double smoothstep7_derivative(double t);

/// Radial cutoff. LowPass and Bump equal 1 on |x| <= inner and 0 on
/// |x| >= outer; HighPass is the complement 1 - LowPass.
struct CutoffProfile {
  enum class Kind { LowPass, HighPass, Bump };
  Kind kind = Kind::LowPass;
  double inner_radius = 1.0;
  double outer_radius = 2.0;

  double operator()(double r) const;
  double operator()(const Vec3& x) const { return (*this)(norm(x)); }
  double derivative(double r) const;
  CutoffProfile complement() const;
};

/// Throws InvalidInput unless 0 < inner < outer (both finite).
CutoffProfile build_cutoff(CutoffProfile::Kind kind, double inner_radius, double outer_radius);

/// Pointwise invariants on the lattice of `g` and on a fine radial sweep:
/// range [0, 1], plateau and support radii, and a bounded finite-difference
/// slope (C^1 transition). lhs is the largest slope found.
CheckReport check_cutoff(const CutoffProfile& p, const GridSpec& g);

/// χ~(ξ/ε) χ~(ξ) = χ~(ξ) with χ~ = 1 - χ, at every lattice wavevector and on
/// a radial sweep.
CheckReport plateau_identity_check(const CutoffProfile& chi, double eps, const GridSpec& g);

/// β(3k) α(6k) = 0 at every lattice wavevector, β the complement of α.
CheckReport band_disjointness_check(const CutoffProfile& alpha, const GridSpec& g, double beta_scale = 3.0,
                                    double alpha_scale = 6.0);

/// Componentwise multiplier p(scale · k).
MultiplierSpec cutoff_multiplier(const CutoffProfile& p, double scale = 1.0);
SpectralField apply_cutoff(const CutoffProfile& p, double scale, const SpectralField& v);

struct BandSplit {
  SpectralField low;
  SpectralField high;
};

/// low = α(D) v, high = β(D) v with β = 1 - α; requires a low-pass α.
BandSplit split_bands(const SpectralField& v, const CutoffProfile& alpha);

/// β(scale D)(w u) - w β(scale D) u with dealiased products; w scalar.
SpectralField commutator_direct(const CutoffProfile& beta, double scale, const SpectralField& w,
                                const SpectralField& u);

/// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre01(int order);

struct KernelOptions {
  /// Largest admissible kernel magnitude on the half-period planes relative
  /// to its peak.
  double tail_tolerance = 1e-3;
  /// Agreement tolerance against commutator_direct recorded in the report.
  double agreement_tolerance = 1e-3;
};

struct KernelResult {
  SpectralField value;
  CheckReport report;
  double tail_ratio = 0.0;
};

/// Kernel form of the commutator:
///   [β(sD), w] u (x) = Σ_z h^3 K(-z) u(x+z) ∫_0^1 ∇w(x + θ z)·z dθ,
/// K the periodic kernel of β(sD), z ranging over minimal-image node offsets,
/// the θ-integral by Gauss-Legendre of the given order and the z-sum the
/// trapezoidal rule. Throws PreconditionViolation when the kernel tail
/// exceeds options.tail_tolerance. The report compares against
/// commutator_direct.
KernelResult commutator_kernel(const CutoffProfile& beta, double scale, const SpectralField& w,
                               const SpectralField& u, int quadrature_order, const KernelOptions& options = {});

/// Max of |K| over the planes z_i = L/2 relative to max |K|, for the kernel
/// of the low-pass part of p(scale D).
double kernel_tail_ratio(const CutoffProfile& p, double scale, const GridSpec& g);

}  // namespace wiener
