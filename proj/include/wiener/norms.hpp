#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wiener/field.hpp"
#include "wiener/units.hpp"

namespace wiener {

struct NormValue {
  double value = 0.0;
  std::string norm_id;
  Dimension units;
};

/// Pairwise (tree) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

/// (Σ_x |v(x)|^p (L/n)^3)^{1/p} with Euclidean magnitude over components;
/// p = +infinity gives the largest magnitude. Throws InvalidInput for p < 1.
NormValue lp_norm(const PhysicalField& v, double p);
NormValue lp_norm(const SpectralField& v, double p);

/// Σ_k |c_k|, |c_k| the Euclidean norm of the coefficient vector.
NormValue wiener_norm(const SpectralField& v);
/// Σ_k (2 + |k|^2)^{s/2} |c_k|.
NormValue vsw_norm(const SpectralField& v, double s);
/// (L^3 Σ_{k≠0} |k|^{2s} |c_k|^2)^{1/2}.
NormValue hdot_norm(const SpectralField& v, double s);
/// Σ_{k≠0} |k|^κ |c_k|.
NormValue weighted_wiener(const SpectralField& v, double kappa);

/// L² inner product L^3 Σ_k Re⟨a_k, conj b_k⟩ (Parseval).
double inner_product(const SpectralField& a, const SpectralField& b);
/// ∫ f dx = L^3 c_0 for a scalar field.
double integral(const SpectralField& f);

/// (L/n)^3 · #{x : |f(x)| > t}; throws InvalidInput for t < 0.
double superlevel_measure(const PhysicalField& f, double t);

struct NormRow {
  std::string field_id;
  std::string norm_id;
  double parameter = 0.0;
  double value = 0.0;
};

/// CSV with header field_id,norm_id,s_or_p,value.
void write_norm_table(std::ostream& os, std::span<const NormRow> rows);

}  // namespace wiener
