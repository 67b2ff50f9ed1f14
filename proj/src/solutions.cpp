#include "wiener/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wiener/error.hpp"
#include "wiener/norms.hpp"
#include "wiener/operators.hpp"
#include "wiener/transform.hpp"

namespace wiener {

NseState make_shear(const GridSpec& grid, const std::vector<ShearMode>& profile, double nu, int component,
                    int variable, std::string field_id) {
  if (component < 0 || component > 2 || variable < 0 || variable > 2 || component == variable) {
    throw InvalidInput("make_shear: component and variable must be distinct axes");
  }
  SpectralField v(grid, Rank::Vector, Dimension::velocity());
  for (const ShearMode& mode : profile) {
    if (std::abs(mode.m) > grid.dealias_limit()) throw InvalidInput("make_shear: profile exceeds the dealias limit");
    std::array<int, 3> idx{0, 0, 0};
    idx[variable] = std::abs(mode.m);
    const Wavevector m{idx[0], idx[1], idx[2]};
    if (mode.m == 0) {
      v.at(component, m) += mode.cos_coef;
      continue;
    }
    // a cos + b sin with the sign of m folded into b.
    const double b = mode.m < 0 ? -mode.sin_coef : mode.sin_coef;
    const Complex c(0.5 * mode.cos_coef, -0.5 * b);
    v.at(component, m) += c;
    v.at(component, -m) += std::conj(c);
  }
  return make_manufactured_state(std::move(v), nu, std::move(field_id));
}

SpectralField random_divfree_field(const GridSpec& grid, std::uint64_t seed, double radius_low, double radius_high,
                                   double amplitude) {
  if (!(radius_low >= 0.0) || !(radius_high >= radius_low)) throw InvalidInput("make_random_divfree: bad band");
  const int r = static_cast<int>(std::floor(radius_high));
  if (r > grid.dealias_limit()) throw InvalidInput("make_random_divfree: band exceeds the dealias limit");
  if (!(amplitude >= 0.0)) throw InvalidInput("make_random_divfree: amplitude must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  SpectralField w(grid, Rank::Vector, Dimension::velocity());
  const double lo2 = radius_low * radius_low, hi2 = radius_high * radius_high;
  for (int l = -r; l <= r; ++l)
    for (int j = -r; j <= r; ++j)
      for (int i = -r; i <= r; ++i) {
        const Wavevector m{i, j, l};
        const int n2 = m.norm2();
        if (n2 == 0 || n2 < lo2 || n2 > hi2 || -m < m) continue;
        for (int c = 0; c < 3; ++c) {
          const double re = gauss(rng);
          const double im = gauss(rng);
          w.at(c, m) = Complex(re, im);
          w.at(c, -m) = Complex(re, -im);
        }
      }
  SpectralField v = leray_project(w);
  double energy = 0.0;
  for (const Complex& z : v.coefficients()) energy += std::norm(z);
  if (energy > 0.0) v *= amplitude / std::sqrt(energy);
  return v;
}

NseState make_random_divfree(const GridSpec& grid, std::uint64_t seed, double radius_low, double radius_high,
                             double amplitude, double nu, std::string field_id) {
  SpectralField v = random_divfree_field(grid, seed, radius_low, radius_high, amplitude);
  if (field_id.empty()) {
    std::ostringstream os;
    os << "random-" << seed;
    field_id = os.str();
  }
  return make_manufactured_state(std::move(v), nu, std::move(field_id));
}

namespace {

double frob(const Mat3& m) {
  double s = 0.0;
  for (const auto& row : m) s += dot(row, row);
  return std::sqrt(s);
}

double frob(const Hessian3& h) {
  double s = 0.0;
  for (const auto& m : h) s += frob(m) * frob(m);
  return std::sqrt(s);
}

}  // namespace

std::vector<Vec3> sample_points(std::uint64_t seed, int count, double half_width) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3> pts(count);
  for (auto& p : pts)
    for (double& c : p) c = half_width * (2.0 * static_cast<double>(rng() >> 11) * 0x1p-53 - 1.0);
  return pts;
}

CheckReport jacobian_self_check(const AnalyticField& f, std::uint64_t seed, int points, double half_width,
                                double tol) {
  const double h = 1e-5;
  double worst = 0.0;
  for (const Vec3& x : sample_points(seed, points, half_width)) {
    const Mat3 j = f.jacobian(x);
    const double scale = std::max(1.0, frob(j));
    for (int b = 0; b < 3; ++b) {
      Vec3 xp = x, xm = x;
      xp[b] += h;
      xm[b] -= h;
      const Vec3 d = (1.0 / (2 * h)) * (f.value(xp) - f.value(xm));
      for (int a = 0; a < 3; ++a) worst = std::max(worst, std::abs(d[a] - j[a][b]) / scale);
    }
  }
  CheckReport r = make_report("solutions/jacobian-self-check", "analytic Jacobian against central differences", worst,
                              0.0, worst, tol);
  r.note = f.provenance;
  return r;
}

HarmonicGradient make_harmonic_gradient(const Polynomial3& psi, std::string provenance) {
  const Polynomial3 lap = psi.laplacian();
  if (!lap.is_zero()) {
    throw InvalidInput("make_harmonic_gradient: psi = " + psi.str() + " is not harmonic, Laplacian = " + lap.str());
  }
  HarmonicGradient h;
  h.psi = psi;
  for (int i = 0; i < 3; ++i) h.v[i] = psi.derivative(i);
  Polynomial3 speed2;
  for (int i = 0; i < 3; ++i) speed2 += h.v[i] * h.v[i];
  h.pressure = -0.5 * speed2;
  h.q = h.pressure + 0.5 * speed2;

  std::array<std::array<Polynomial3, 3>, 3> jac;
  std::array<std::array<std::array<Polynomial3, 3>, 3>, 3> hess;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      jac[i][j] = h.v[i].derivative(j);
      for (int k = 0; k < 3; ++k) hess[i][j][k] = jac[i][j].derivative(k);
    }
  const auto v = h.v;
  h.field.value = [v](const Vec3& x) { return Vec3{v[0](x), v[1](x), v[2](x)}; };
  h.field.jacobian = [jac](const Vec3& x) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = jac[i][j](x);
    return m;
  };
  h.field.second_derivatives = [hess](const Vec3& x) {
    Hessian3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m[i][j][k] = hess[i][j][k](x);
    return m;
  };
  h.field.provenance = std::move(provenance);
  return h;
}

std::vector<HarmonicGradient> harmonic_gradient_fixtures() {
  using P = Polynomial3;
  const P x1 = P::variable(0), x2 = P::variable(1), x3 = P::variable(2);
  std::vector<HarmonicGradient> out;
  out.push_back(make_harmonic_gradient(x1 * x1 - x2 * x2, "psi = x1^2 - x2^2 (trace-free quadratic diag(2,-2,0))"));
  out.push_back(make_harmonic_gradient(x1, "psi = x1 (constant velocity)"));
  out.push_back(make_harmonic_gradient(x1 * x2 * x3, "psi = x1 x2 x3"));
  // ½⟨Ax, x⟩ + ⟨η, x⟩, A = [[1, 2, 0], [2, -3, 1], [0, 1, 2]], η = (1, -1, 0.5).
  const double a[3][3] = {{1, 2, 0}, {2, -3, 1}, {0, 1, 2}};
  const P xs[3] = {x1, x2, x3};
  P quad = x1 - x2 + 0.5 * x3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) quad += (0.5 * a[i][j]) * (xs[i] * xs[j]);
  out.push_back(make_harmonic_gradient(quad, "psi = <Ax, x>/2 + <eta, x>, A symmetric with null trace"));
  const P x1s = x1 * x1, x2s = x2 * x2;
  out.push_back(make_harmonic_gradient(x1s * x1s - 6.0 * (x1s * x2s) + x2s * x2s + x3 * (x1s - x2s),
                                       "psi = x1^4 - 6 x1^2 x2^2 + x2^4 + x3 (x1^2 - x2^2)"));
  return out;
}

namespace {

Vec3 curl_of(const Mat3& j) { return {j[2][1] - j[1][2], j[0][2] - j[2][0], j[1][0] - j[0][1]}; }

/// dw[m] = ∂_m ω for ω = curl v.
Mat3 curl_gradient(const Hessian3& h) {
  Mat3 dw{};
  for (int m = 0; m < 3; ++m) {
    dw[0][m] = h[2][1][m] - h[1][2][m];
    dw[1][m] = h[0][2][m] - h[2][0][m];
    dw[2][m] = h[1][0][m] - h[0][1][m];
  }
  return dw;
}

Vec3 transpose_apply(const Mat3& m, const Vec3& x) {
  return {m[0][0] * x[0] + m[1][0] * x[1] + m[2][0] * x[2], m[0][1] * x[0] + m[1][1] * x[1] + m[2][1] * x[2],
          m[0][2] * x[0] + m[1][2] * x[1] + m[2][2] * x[2]};
}

struct Accumulator {
  double worst = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  void add(double l, double r, double scale) {
    const double d = relative_discrepancy(l - r, std::max({scale, std::abs(l), std::abs(r)}));
    if (std::isnan(worst)) return;
    if (std::isnan(d) || d >= worst) {
      worst = d;
      lhs = l;
      rhs = r;
    }
  }
  void add(const Vec3& l, const Vec3& r, double scale) {
    const double d = relative_discrepancy(norm(l - r), std::max({scale, norm(l), norm(r)}));
    if (std::isnan(worst)) return;
    if (std::isnan(d) || d >= worst) {
      worst = d;
      lhs = norm(l);
      rhs = norm(r);
    }
  }
};

}  // namespace

std::vector<CheckReport> harmonic_identity_suite(const HarmonicGradient& h, double nu, const std::vector<Vec3>& points,
                                                 const std::string& field_id) {
  if (!(nu > 0.0)) throw InvalidInput("harmonic_identity_suite: viscosity must be positive");
  // Symbolic pieces.
  std::array<Polynomial3, 3> grad_q;
  for (int i = 0; i < 3; ++i) grad_q[i] = h.q.derivative(i);
  const Polynomial3 lap_q = h.q.laplacian();
  Polynomial3 speed2;
  for (int i = 0; i < 3; ++i) speed2 += h.v[i] * h.v[i];
  // Σ_ℓ ∂_ℓ (v_ℓ v_i - ½|v|² δ_iℓ), the unprojected S0 divergence.
  std::array<Polynomial3, 3> s0_div;
  for (int i = 0; i < 3; ++i) {
    for (int l = 0; l < 3; ++l) s0_div[i] += (h.v[l] * h.v[i]).derivative(l);
    s0_div[i] -= 0.5 * speed2.derivative(i);
  }
  // curl v and (curl v) × v, symbolically.
  std::array<Polynomial3, 3> w{h.v[2].derivative(1) - h.v[1].derivative(2), h.v[0].derivative(2) - h.v[2].derivative(0),
                               h.v[1].derivative(0) - h.v[0].derivative(1)};
  std::array<Polynomial3, 3> wxv{w[1] * h.v[2] - w[2] * h.v[1], w[2] * h.v[0] - w[0] * h.v[2],
                                 w[0] * h.v[1] - w[1] * h.v[0]};
  const bool wxv_zero = wxv[0].is_zero() && wxv[1].is_zero() && wxv[2].is_zero();
  const Polynomial3 div_v = h.v[0].derivative(0) + h.v[1].derivative(1) + h.v[2].derivative(2);
  // curl ∇|v|², zero for every polynomial; its vanishing is what P(∇|v|²) = 0 rests on.
  std::array<Polynomial3, 3> curl_grad{speed2.derivative(2).derivative(1) - speed2.derivative(1).derivative(2),
                                       speed2.derivative(0).derivative(2) - speed2.derivative(2).derivative(0),
                                       speed2.derivative(1).derivative(0) - speed2.derivative(0).derivative(1)};

  Accumulator cross_acc, divcross_acc, lapq_acc, gradq_acc, s0_acc, lgrad_acc, cancel_acc, divfree_acc, resid_acc,
      lapq_cond_acc;
  std::vector<double> energy_l, energy_r, pos, neg;
  for (const Vec3& x : points) {
    const Vec3 v = h.field.value(x);
    const Mat3 j = h.field.jacobian(x);
    const Hessian3 hs = h.field.second_derivatives(x);
    const Vec3 om = curl_of(j);
    const Mat3 dw = curl_gradient(hs);
    const Vec3 c2v{dw[2][1] - dw[1][2], dw[0][2] - dw[2][0], dw[1][0] - dw[0][1]};
    const Vec3 omxv = cross(om, v);
    const double s1 = norm(v) * frob(j);
    const double s2 = norm(v) * frob(hs) + frob(j) * frob(j);

    cross_acc.add(omxv, apply(j, v) - transpose_apply(j, v), s1);
    double dcross = 0.0;
    // ∂_i (ω × v)_i = ε_ijk (∂_i ω_j v_k + ω_j ∂_i v_k).
    const int eps[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& p : eps) {
      const int i = p[0], jj = p[1], k = p[2];
      dcross += dw[jj][i] * v[k] + om[jj] * j[k][i];
      dcross -= dw[k][i] * v[jj] + om[k] * j[jj][i];
    }
    divcross_acc.add(dcross, dot(c2v, v) - dot(om, om), s2);
    lapq_acc.add(lap_q(x), dot(om, om) - dot(c2v, v), s2);
    const Vec3 gq{grad_q[0](x), grad_q[1](x), grad_q[2](x)};
    // -P~((curl v) × v) of the symbolically vanishing field is 0.
    gradq_acc.add(gq, wxv_zero ? Vec3{0, 0, 0} : Vec3{NAN, NAN, NAN}, s1);
    s0_acc.add(Vec3{s0_div[0](x), s0_div[1](x), s0_div[2](x)}, omxv, s1);
    lgrad_acc.add(Vec3{curl_grad[0](x), curl_grad[1](x), curl_grad[2](x)}, Vec3{0, 0, 0}, s2);
    cancel_acc.add(dot(omxv, v), 0.0, norm(om) * dot(v, v));
    divfree_acc.add(div_v(x), 0.0, frob(j));
    resid_acc.add(nu * c2v + omxv + gq, Vec3{0, 0, 0}, nu * frob(hs) + s1);
    lapq_cond_acc.add(lap_q(x), dot(om, om) + dot(gq, v) / nu, s2);
    energy_l.push_back(nu * dot(om, om));
    energy_r.push_back(0.0);  // ⟨f, v⟩ with f = 0
    pos.push_back(std::max(lap_q(x), 0.0));
    neg.push_back(std::max(-lap_q(x), 0.0));
  }
  const double count = static_cast<double>(std::max<std::size_t>(points.size(), 1));
  auto mean = [count](const std::vector<double>& xs) { return pairwise_sum(xs) / count; };
  double grad_scale = 0.0;
  for (const Vec3& x : points) grad_scale = std::max(grad_scale, frob(h.field.jacobian(x)));

  std::vector<CheckReport> out;
  auto emit = [&](const char* id, const char* anchor, const Accumulator& a, double tol) {
    CheckReport r = make_report(id, anchor, a.lhs, a.rhs, a.worst, tol);
    r.grid = "pointwise, " + std::to_string(points.size()) + " points";
    r.field_id = field_id;
    r.note = h.field.provenance;
    out.push_back(r);
  };
  emit("analytic/identity/curl-cross", "(curl v) x v = (v.grad) v - grad |v|^2 / 2", cross_acc, 1e-10);
  emit("analytic/identity/div-curl-cross", "div((curl v) x v) = <curl^2 v, v> - |curl v|^2", divcross_acc, 1e-10);
  emit("analytic/identity/laplacian-q", "Bernoulli head pressure: Delta Q = |curl v|^2 - <curl^2 v, v>", lapq_acc,
       1e-10);
  emit("analytic/identity/grad-q", "grad Q = -(I - P)((curl v) x v), (curl v) x v vanishing symbolically", gradq_acc,
       1e-10);
  emit("analytic/identity/s0-divergence",
       "sum_l d_l (v_l v - |v|^2 e_l / 2) = (curl v) x v before projection", s0_acc, 1e-10);
  emit("analytic/identity/leray-gradient", "grad |v|^2 is curl-free, so P(grad |v|^2) = 0", lgrad_acc, 1e-12);
  emit("analytic/identity/pointwise-cancellation", "<(curl v) x v, v> = det(curl v, v, v) = 0", cancel_acc, 1e-12);
  emit("analytic/divergence-free", "div grad psi = Delta psi = 0", divfree_acc, 1e-12);
  emit("analytic/conditional/residual-bernoulli", "with Q = 0: nu C^2 v + C v x v + grad Q = 0", resid_acc, 1e-9);
  emit("analytic/conditional/laplacian-q", "Delta Q = |curl v|^2 + <grad Q, v>/nu - <f, v>/nu with f = 0",
       lapq_cond_acc, 1e-9);
  Accumulator energy, balance;
  energy.add(mean(energy_l), mean(energy_r), nu * grad_scale * grad_scale);
  balance.add(mean(pos), mean(neg), grad_scale * grad_scale);
  emit("analytic/conditional/energy-density", "sample mean of nu |curl v|^2 = sample mean of <f, v>", energy, 1e-9);
  emit("analytic/conditional/laplacian-q-balance", "sample means of (Delta Q)_+ and (Delta Q)_- agree", balance,
       1e-9);
  return out;
}

NseState rescale(const NseState& s, int lambda) {
  if (lambda < 1) throw InvalidInput("rescale: lambda must be a positive integer");
  const GridSpec& g = s.v.grid();
  const GridSpec target(g.n(), g.length() / lambda, g.dealias_limit());
  auto moved = [&](const SpectralField& src, double factor) {
    SpectralField out(target, src.rank(), src.units());
    out.set_real(src.real());
    out.set_divergence_free(src.divergence_free());
    auto& dst = out.coefficients();
    const auto& from = src.coefficients();
    for (std::size_t i = 0; i < from.size(); ++i) dst[i] = factor * from[i];
    return out;
  };
  const double l = lambda;
  NseState w{s.field_id + "-scaled-" + std::to_string(lambda), moved(s.v, l), s.nu, moved(s.f, l * l * l),
             moved(s.p, l * l), moved(s.q, l * l), s.manufactured};
  return w;
}

CheckReport scaling_covariance_check(const NseState& s, int lambda, double tol) {
  const NseState w = rescale(s, lambda);
  const double l = lambda, l3 = l * l * l;
  double worst = 0.0;
  std::ostringstream note;
  auto compare = [&](const char* what, const SpectralField& on_w, const SpectralField& on_v, double factor,
                     double scale) {
    const PhysicalField a = inverse(on_w);
    const PhysicalField b = inverse(on_v);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.samples().size(); ++i)
      diff = std::max(diff, std::abs(a.samples()[i] - factor * b.samples()[i]));
    const double rel = relative_discrepancy(diff, std::max(scale, a.max_magnitude()));
    worst = std::max(worst, rel);
    note << what << " " << rel << "; ";
  };
  const SpectralField visc_v = s.nu * curl2(s.v), visc_w = w.nu * curl2(w.v);
  const SpectralField nl_v = leray_project(cross(curl(s.v), s.v)), nl_w = leray_project(cross(curl(w.v), w.v));
  const double term_scale =
      l3 * std::max({inverse(visc_v).max_magnitude(), inverse(nl_v).max_magnitude(), inverse(s.f).max_magnitude()});
  compare("residual", residual_leray(w), residual_leray(s), l3, term_scale);
  compare("viscous", visc_w, visc_v, l3, term_scale);
  compare("nonlinear", nl_w, nl_v, l3, term_scale);
  compare("pressure", pressure_from_v(w.v), pressure_from_v(s.v), l * l,
          l * l * inverse(0.5 * norm2(s.v)).max_magnitude());
  const SpectralField cw = curl(w.v), cv = curl(s.v);
  const double ew = inner_product(cw, cw), ev = l * inner_product(cv, cv);
  const double rel = relative_discrepancy(ew - ev, std::max(std::abs(ew), std::abs(ev)));
  worst = std::max(worst, rel);
  note << "curl energy " << rel;
  CheckReport r = make_report("solutions/scaling-covariance/lambda-" + std::to_string(lambda),
                              "scaling w(x) = lambda v(lambda x), q(x) = lambda^2 p(lambda x): residual covariance and "
                              "|curl w|^2 = lambda |curl v|^2",
                              ew, ev, worst, tol);
  r.grid = s.v.grid().describe() + " -> " + w.v.grid().describe();
  r.field_id = s.field_id;
  r.note = note.str();
  return r;
}

}  // namespace wiener
