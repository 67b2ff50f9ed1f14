#include "wiener/norms.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "wiener/error.hpp"
#include "wiener/transform.hpp"

namespace wiener {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 16) {
    double s = 0.0;
    for (double x : values) s += x;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

std::vector<double> pointwise_magnitudes(const PhysicalField& v) {
  std::vector<double> out(v.grid().size());
  const int nc = components(v.rank());
  for (std::size_t x = 0; x < out.size(); ++x) {
    double s = 0.0;
    for (int c = 0; c < nc; ++c) s += v.at(c, x) * v.at(c, x);
    out[x] = std::sqrt(s);
  }
  return out;
}

// Exponents arrive as doubles; they are short decimals in practice.
Rational approx_rational(double x) {
  return Rational(static_cast<std::int64_t>(std::llround(x * 10000.0)), 10000);
}

std::string param_id(const std::string& base, double p) {
  std::ostringstream os;
  os << base << "(" << p << ")";
  return os.str();
}

}  // namespace

NormValue lp_norm(const PhysicalField& v, double p) {
  if (!(p >= 1.0)) throw InvalidInput("lp_norm: p must be >= 1");
  auto mag = pointwise_magnitudes(v);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : mag) m = std::max(m, x);
    return {m, "Linf", v.units()};
  }
  for (double& x : mag) x = std::pow(x, p);
  const double value = std::pow(pairwise_sum(mag) * v.grid().cell_volume(), 1.0 / p);
  return {value, param_id("L", p), v.units() * Dimension::length_only(Rational(3) / approx_rational(p))};
}

NormValue lp_norm(const SpectralField& v, double p) { return lp_norm(inverse(v), p); }

namespace {

template <class Weight>
double weighted_coefficient_sum(const SpectralField& v, Weight weight, bool skip_zero) {
  const GridSpec& g = v.grid();
  std::vector<double> terms(g.size(), 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (skip_zero && k == 0) continue;
    const double mag = v.magnitude(k);
    if (mag == 0.0) continue;
    terms[k] = weight(norm(g.wavevector(g.mode_at(k)))) * mag;
  }
  return pairwise_sum(terms);
}

}  // namespace

NormValue wiener_norm(const SpectralField& v) {
  return {weighted_coefficient_sum(v, [](double) { return 1.0; }, false), "W", v.units()};
}

NormValue vsw_norm(const SpectralField& v, double s) {
  const double value = weighted_coefficient_sum(
      v, [s](double r) { return std::pow(2.0 + r * r, 0.5 * s); }, false);
  return {value, param_id("V", s), v.units()};
}

NormValue hdot_norm(const SpectralField& v, double s) {
  const GridSpec& g = v.grid();
  std::vector<double> terms(g.size(), 0.0);
  for (std::size_t k = 1; k < g.size(); ++k) {
    const double mag = v.magnitude(k);
    if (mag == 0.0) continue;
    terms[k] = std::pow(norm(g.wavevector(g.mode_at(k))), 2.0 * s) * mag * mag;
  }
  const double value = std::sqrt(g.volume() * pairwise_sum(terms));
  return {value, param_id("Hdot", s), v.units() * Dimension::length_only(Rational(3, 2) - approx_rational(s))};
}

NormValue weighted_wiener(const SpectralField& v, double kappa) {
  const double value = weighted_coefficient_sum(v, [kappa](double r) { return std::pow(r, kappa); }, true);
  return {value, param_id("Wk", kappa), v.units() * Dimension::length_only(-approx_rational(kappa))};
}

double inner_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  require_rank(b.rank(), a.rank(), "inner_product");
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<double> terms(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) terms[i] = (ca[i] * std::conj(cb[i])).real();
  return a.grid().volume() * pairwise_sum(terms);
}

double integral(const SpectralField& f) {
  require_rank(f.rank(), Rank::Scalar, "integral");
  return f.grid().volume() * f.at(0, std::size_t{0}).real();
}

double superlevel_measure(const PhysicalField& f, double t) {
  if (!(t >= 0.0)) throw InvalidInput("superlevel_measure: t must be >= 0");
  const auto mag = pointwise_magnitudes(f);
  std::size_t count = 0;
  for (double x : mag) count += x > t ? 1 : 0;
  return static_cast<double>(count) * f.grid().cell_volume();
}

void write_norm_table(std::ostream& os, std::span<const NormRow> rows) {
  os << "field_id,norm_id,s_or_p,value\n";
  os << std::setprecision(17);
  for (const auto& r : rows) os << r.field_id << ',' << r.norm_id << ',' << r.parameter << ',' << r.value << '\n';
}

}  // namespace wiener
