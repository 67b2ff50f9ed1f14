#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wiener/check_report.hpp"
#include "wiener/field.hpp"

namespace wiener {

/// Fourier-series coefficients: c = DFT(v) / n^3. Throws InvalidInput on
/// non-finite samples.
SpectralField forward(const PhysicalField& v);

/// Samples from coefficients. The imaginary residue must stay below 1e-12 of
/// the field magnitude, otherwise InvalidInput is thrown (a field whose
/// coefficients violate c_{-k} = conj(c_k) has no real samples).
PhysicalField inverse(const SpectralField& c);

/// Passes iff max_k |c_{-k} - conj(c_k)| <= tol * max_k |c_k|.
CheckReport check_reality(const SpectralField& c, double tol = 1e-12);

/// Modes with |c_k| > threshold, sorted.
std::vector<Wavevector> spectrum_support(const SpectralField& c, double threshold);

/// Zeroes every coefficient with some |m_i| above the dealias limit.
void truncate_to_dealias(SpectralField& c);

/// Samples on the 2n-per-axis grid of the trigonometric interpolant of c
/// (Nyquist coefficients split evenly between +n/2 and -n/2).
PhysicalField padded_samples(const SpectralField& c);

using NodeKernel = std::function<void(std::span<const double> in, std::span<double> out)>;

/// Dealiased pointwise map: evaluates every input on the 2n grid, applies
/// `kernel` node by node (inputs concatenated component-wise, in order),
/// transforms back and keeps only modes within the dealias limit. Exact for
/// quadratic kernels of inputs band-limited to the dealias limit.
SpectralField pointwise_dealiased(std::span<const SpectralField* const> inputs, Rank out_rank,
                                  const NodeKernel& kernel, Dimension units = {});

/// a * b with a scalar and b of any rank.
SpectralField product(const SpectralField& a, const SpectralField& b);
/// ⟨a, b⟩ for vector fields.
SpectralField dot(const SpectralField& a, const SpectralField& b);
SpectralField cross(const SpectralField& a, const SpectralField& b);
/// (a ⊗ b)_ij = a_i b_j.
SpectralField outer(const SpectralField& a, const SpectralField& b);
/// |a|^2 for any rank.
SpectralField norm2(const SpectralField& a);

/// Copies the coefficients onto another grid of the same box length and
/// translates by `shift`: the result samples v(x + shift). Modes that do not
/// fit strictly inside the target's Nyquist band are dropped.
SpectralField resample(const SpectralField& c, const GridSpec& target, const Vec3& shift = {0.0, 0.0, 0.0});

/// Samples of a callable on the grid nodes.
PhysicalField sample_scalar(const GridSpec& g, const std::function<double(const Vec3&)>& f, Dimension units = {});
PhysicalField sample_vector(const GridSpec& g, const std::function<Vec3(const Vec3&)>& f, Dimension units = {});

}  // namespace wiener
