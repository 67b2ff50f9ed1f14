#include "wiener/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wiener/error.hpp"
#include "wiener/fft.hpp"
#include "wiener/transform.hpp"

namespace wiener {

double smoothstep7(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double t2 = t * t;
  return std::clamp(t2 * t2 * (35.0 - 84.0 * t + 70.0 * t2 - 20.0 * t2 * t), 0.0, 1.0);
}

double smoothstep7_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double s = t * (1.0 - t);
  return 140.0 * s * s * s;
}

double CutoffProfile::operator()(double r) const {
  const double low = 1.0 - smoothstep7((r - inner_radius) / (outer_radius - inner_radius));
  return kind == Kind::HighPass ? 1.0 - low : low;
}

double CutoffProfile::derivative(double r) const {
  const double w = outer_radius - inner_radius;
  const double d = smoothstep7_derivative((r - inner_radius) / w) / w;
  return kind == Kind::HighPass ? d : -d;
}

CutoffProfile CutoffProfile::complement() const {
  CutoffProfile c = *this;
  c.kind = kind == Kind::HighPass ? Kind::LowPass : Kind::HighPass;
  return c;
}

CutoffProfile build_cutoff(CutoffProfile::Kind kind, double inner_radius, double outer_radius) {
  if (!(std::isfinite(inner_radius) && std::isfinite(outer_radius) && inner_radius > 0.0 &&
        inner_radius < outer_radius)) {
    throw InvalidInput("build_cutoff: need 0 < inner_radius < outer_radius");
  }
  return CutoffProfile{kind, inner_radius, outer_radius};
}

namespace {

// Value the profile must take where it is pinned, or NaN in the transition.
double pinned_value(const CutoffProfile& p, double r) {
  const bool high = p.kind == CutoffProfile::Kind::HighPass;
  if (r <= p.inner_radius) return high ? 0.0 : 1.0;
  if (r >= p.outer_radius) return high ? 1.0 : 0.0;
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

CheckReport check_cutoff(const CutoffProfile& p, const GridSpec& g) {
  double violation = 0.0;
  auto check_value = [&](double r) {
    const double v = p(r);
    violation = std::max({violation, -v, v - 1.0});
    const double pin = pinned_value(p, r);
    if (!std::isnan(pin)) violation = std::max(violation, std::abs(v - pin));
  };
  for (std::size_t k = 0; k < g.size(); ++k) check_value(norm(g.wavevector(g.mode_at(k))));
  const int samples = 20000;
  const double rmax = 1.5 * p.outer_radius;
  const double h = rmax / samples;
  double slope = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double r = i * h;
    check_value(r);
    if (i < samples) slope = std::max(slope, std::abs(p(r + h) - p(r)) / h);
  }
  // Mean value theorem: a difference quotient never exceeds max |p'|.
  const double bound = smoothstep7_derivative(0.5) / (p.outer_radius - p.inner_radius);
  violation = std::max(violation, slope - bound * (1.0 + 1e-12));
  CheckReport r = make_report("bands/cutoff", "cutoff equals 1 on the plateau and 0 outside its support", slope,
                              bound, violation, 0.0);
  r.grid = g.describe();
  r.note = "largest difference quotient vs max |p'|";
  return r;
}

CheckReport plateau_identity_check(const CutoffProfile& chi, double eps, const GridSpec& g) {
  if (!(eps > 0.0)) throw InvalidInput("plateau_identity_check: eps must be positive");
  auto tilde = [&](double r) { return 1.0 - chi(r); };
  double worst = 0.0;
  auto at = [&](double r) { worst = std::max(worst, std::abs(tilde(r / eps) * tilde(r) - tilde(r))); };
  for (std::size_t k = 0; k < g.size(); ++k) at(norm(g.wavevector(g.mode_at(k))));
  for (int i = 0; i <= 20000; ++i) at(i * 2.0 * chi.outer_radius / 20000);
  CheckReport r = make_report("bands/plateau-identity", "plateau identity chi~(xi/eps) chi~(xi) = chi~(xi)", worst,
                              0.0, worst, 0.0);
  r.grid = g.describe();
  r.note = "eps = " + std::to_string(eps);
  return r;
}

CheckReport band_disjointness_check(const CutoffProfile& alpha, const GridSpec& g, double beta_scale,
                                    double alpha_scale) {
  const CutoffProfile beta = alpha.complement();
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double r = norm(g.wavevector(g.mode_at(k)));
    worst = std::max(worst, std::abs(beta(beta_scale * r) * alpha(alpha_scale * r)));
  }
  CheckReport r = make_report("bands/disjointness", "beta(3D) alpha(6D) = 0", worst, 0.0, worst, 0.0);
  r.grid = g.describe();
  return r;
}

MultiplierSpec cutoff_multiplier(const CutoffProfile& p, double scale) {
  auto m = MultiplierSpec::scalar(
      p.kind == CutoffProfile::Kind::HighPass ? "high-pass" : "low-pass",
      [p, scale](const Vec3& k) { return Complex(p(scale * norm(k))); }, p(0.0), Parity::RealEvenSymmetric, 0);
  m.coordinate_even = true;
  return m;
}

SpectralField apply_cutoff(const CutoffProfile& p, double scale, const SpectralField& v) {
  SpectralField out = apply_multiplier(cutoff_multiplier(p, scale), v);
  out.set_divergence_free(v.divergence_free());
  return out;
}

BandSplit split_bands(const SpectralField& v, const CutoffProfile& alpha) {
  if (alpha.kind == CutoffProfile::Kind::HighPass) throw InvalidInput("split_bands: alpha must be low-pass");
  SpectralField low = apply_cutoff(alpha, 1.0, v);
  // high = v - low keeps low + high = v exact coefficientwise.
  SpectralField high = v - low;
  high.set_divergence_free(v.divergence_free());
  return {std::move(low), std::move(high)};
}

SpectralField commutator_direct(const CutoffProfile& beta, double scale, const SpectralField& w,
                                const SpectralField& u) {
  require_rank(w.rank(), Rank::Scalar, "commutator_direct");
  require_same_grid(w.grid(), u.grid(), "commutator_direct");
  return apply_cutoff(beta, scale, product(w, u)) - product(w, apply_cutoff(beta, scale, u));
}

Quadrature gauss_legendre01(int order) {
  if (order < 1) throw InvalidInput("gauss_legendre01: order must be >= 1");
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    q.nodes[i] = 0.5 * (1.0 - x);
    q.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

namespace {

// h^3 K(z) at every node for the multiplier p(scale k).
std::vector<double> nodal_kernel(const CutoffProfile& p, double scale, const GridSpec& g) {
  std::vector<Complex> buf(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    buf[k] = p(scale * norm(g.wavevector(g.mode_at(k))));
  }
  fft::transform(buf, g.n(), +1);
  std::vector<double> out(g.size());
  const double inv = 1.0 / static_cast<double>(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = buf[x].real() * inv;
  return out;
}

Vec3 minimal_image(const GridSpec& g, std::size_t node) {
  const Wavevector m = g.mode_at(node);
  const double h = g.spacing();
  return {h * m.m1, h * m.m2, h * m.m3};
}

}  // namespace

double kernel_tail_ratio(const CutoffProfile& p, double scale, const GridSpec& g) {
  const CutoffProfile low = p.kind == CutoffProfile::Kind::HighPass ? p.complement() : p;
  const auto k = nodal_kernel(low, scale, g);
  double peak = 0.0, tail = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    peak = std::max(peak, std::abs(k[x]));
    if (g.on_nyquist_plane(g.mode_at(x))) tail = std::max(tail, std::abs(k[x]));
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

KernelResult commutator_kernel(const CutoffProfile& beta, double scale, const SpectralField& w,
                               const SpectralField& u, int quadrature_order, const KernelOptions& options) {
  require_rank(w.rank(), Rank::Scalar, "commutator_kernel");
  require_same_grid(w.grid(), u.grid(), "commutator_kernel");
  const GridSpec& g = w.grid();
  const double tail = kernel_tail_ratio(beta, scale, g);
  if (tail > options.tail_tolerance) {
    throw PreconditionViolation("commutator_kernel: kernel tail ratio " + std::to_string(tail) +
                                " exceeds tolerance " + std::to_string(options.tail_tolerance) +
                                "; the kernel does not decay within the box");
  }
  const auto kh = nodal_kernel(beta, scale, g);
  const Quadrature quad = gauss_legendre01(quadrature_order);
  const int nu = components(u.rank());

  std::vector<Vec3> z(g.size());
  std::vector<double> kminus(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    z[x] = minimal_image(g, x);
    kminus[x] = kh[g.linear(-g.mode_at(x))];
  }
  std::vector<std::size_t> u_support;
  const double u_floor = 1e-15 * u.max_magnitude();
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (u.magnitude(k) > u_floor) u_support.push_back(k);
  }

  SpectralField out(g, u.rank(), w.units() * u.units());
  std::vector<Complex> gbuf(g.size());
  const double w_floor = 1e-15 * w.max_magnitude();
  for (std::size_t qs = 0; qs < g.size(); ++qs) {
    const Complex wq = w.at(0, qs);
    if (std::abs(wq) <= w_floor) continue;
    const Wavevector qm = g.mode_at(qs);
    const Vec3 q = effective_wavevector(g, qm);
    for (std::size_t x = 0; x < g.size(); ++x) {
      const double qz = dot(q, z[x]);
      Complex theta_sum = 0.0;
      for (std::size_t t = 0; t < quad.nodes.size(); ++t) theta_sum += quad.weights[t] * std::polar(1.0, quad.nodes[t] * qz);
      gbuf[x] = kminus[x] * Complex(0.0, qz) * theta_sum;
    }
    fft::transform(gbuf, g.n(), +1);
    for (std::size_t k : u_support) {
      const Wavevector km = g.mode_at(k);
      const std::size_t target = g.linear(Wavevector{km.m1 + qm.m1, km.m2 + qm.m2, km.m3 + qm.m3});
      const Complex f = wq * gbuf[k];
      for (int c = 0; c < nu; ++c) out.at(c, target) += f * u.at(c, k);
    }
  }
  out.set_real(w.real() && u.real());

  const SpectralField direct = commutator_direct(beta, scale, w, u);
  const double scale_ref = std::max(direct.max_magnitude(), out.max_magnitude());
  const double err = relative_discrepancy((out - direct).max_magnitude(), scale_ref);
  KernelResult result{std::move(out), {}, tail};
  result.report = make_report("bands/commutator-kernel/order-" + std::to_string(quadrature_order),
                              "kernel representation of [beta(sD), w] u", result.value.max_magnitude(),
                              direct.max_magnitude(), err, options.agreement_tolerance);
  result.report.grid = g.describe();
  result.report.note = "theta order " + std::to_string(quadrature_order) + ", kernel tail ratio " +
                       std::to_string(tail);
  return result;
}

}  // namespace wiener
