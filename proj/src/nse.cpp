#include "wiener/nse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "wiener/error.hpp"
#include "wiener/norms.hpp"
#include "wiener/operators.hpp"
#include "wiener/transform.hpp"

namespace wiener {

namespace {

const Complex I(0.0, 1.0);

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double nodal_max(const SpectralField& f) { return inverse(f).max_magnitude(); }

/// Nodal comparison of two sides; the scale is the largest of the sides and
/// of the extra terms (so identities whose sides both vanish still have a
/// meaningful denominator).
CheckReport compare_sides(std::string id, std::string anchor, const SpectralField& lhs, const SpectralField& rhs,
                          std::initializer_list<const SpectralField*> terms, double tol, double floor = 0.0) {
  const PhysicalField a = inverse(lhs);
  const PhysicalField b = inverse(rhs);
  double diff = 0.0;
  const int nc = components(a.rank());
  for (std::size_t x = 0; x < a.grid().size(); ++x) {
    double s = 0.0;
    for (int c = 0; c < nc; ++c) s += (a.at(c, x) - b.at(c, x)) * (a.at(c, x) - b.at(c, x));
    diff = std::max(diff, std::sqrt(s));
  }
  double scale = std::max({a.max_magnitude(), b.max_magnitude(), floor});
  for (const SpectralField* t : terms) scale = std::max(scale, nodal_max(*t));
  CheckReport r = make_report(std::move(id), std::move(anchor), a.max_magnitude(), b.max_magnitude(),
                              relative_discrepancy(diff, scale), tol);
  r.grid = lhs.grid().describe();
  r.note = "max |lhs - rhs| = " + fmt(diff) + ", term scale = " + fmt(scale);
  return r;
}

CheckReport compare_numbers(std::string id, std::string anchor, double lhs, double rhs, double scale, double tol,
                            const GridSpec& g) {
  scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  CheckReport r = make_report(std::move(id), std::move(anchor), lhs, rhs, relative_discrepancy(lhs - rhs, scale), tol);
  r.grid = g.describe();
  return r;
}

/// J_ij = ∂_j v_i at index 3 i + j.
SpectralField jacobian(const SpectralField& v) {
  const GridSpec& g = v.grid();
  SpectralField out(g, Rank::Tensor, v.units() * Dimension::length_only(-1));
  out.set_real(v.real());
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    const Vec3 k = effective_wavevector(g, g.mode_at(slot));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.at(3 * i + j, slot) = I * k[j] * v.at(i, slot);
  }
  return out;
}

/// (v·∇)v with products dealiased.
SpectralField convective(const SpectralField& v) {
  const SpectralField jac = jacobian(v);
  const SpectralField* in[] = {&v, &jac};
  return pointwise_dealiased(
      in, Rank::Vector,
      [](std::span<const double> x, std::span<double> y) {
        for (int i = 0; i < 3; ++i) y[i] = x[0] * x[3 + 3 * i] + x[1] * x[4 + 3 * i] + x[2] * x[5 + 3 * i];
      },
      v.units() * jac.units());
}

/// Σ_i a_i U_{iℓ} for a vector a and a rank-2 U, as a vector indexed by ℓ.
SpectralField contract(const SpectralField& a, const SpectralField& u) {
  const SpectralField* in[] = {&a, &u};
  return pointwise_dealiased(
      in, Rank::Vector,
      [](std::span<const double> x, std::span<double> y) {
        for (int l = 0; l < 3; ++l) y[l] = x[0] * x[3 + l] + x[1] * x[6 + l] + x[2] * x[9 + l];
      },
      a.units() * u.units());
}

/// Size of a quadratic expression in v carrying `order` derivatives:
/// |v||∇v| for order 1, max(|v||Δv|, |∇v|^2) for order 2. Used as the
/// denominator floor when both sides of an identity vanish identically.
double quadratic_scale(const SpectralField& v, int order) {
  const double v0 = nodal_max(v);
  const double v1 = nodal_max(jacobian(v));
  if (order == 1) return v0 * v1;
  return std::max(v0 * nodal_max(laplacian(v)), v1 * v1);
}

SpectralField zero_like(const SpectralField& v, Rank rank) { return SpectralField(v.grid(), rank, v.units()); }

void tag(std::vector<CheckReport>& rs, const std::string& field_id) {
  for (auto& r : rs) r.field_id = field_id;
}

}  // namespace

void require_divergence_free(const SpectralField& v, const char* what) {
  require_rank(v.rank(), Rank::Vector, what);
  const double defect = divergence_defect(v);
  if (defect > kDivergenceTolerance) {
    throw InvalidInput(std::string(what) + ": field is not divergence-free (max |k.c_k| / max |k||c_k| = " +
                       fmt(defect) + ")");
  }
}

SpectralField manufactured_forcing(const SpectralField& v, double nu) {
  require_divergence_free(v, "manufactured_forcing");
  SpectralField f = leray_project(cross(curl(v), v));
  f += nu * curl2(v);
  f.set_divergence_free(false);
  return f;
}

namespace {

void check_state_inputs(const SpectralField& v, double nu, const char* what) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidInput(std::string(what) + ": viscosity must be positive");
  require_divergence_free(v, what);
  if (!check_reality(v).pass) throw InvalidInput(std::string(what) + ": coefficients are not those of a real field");
}

}  // namespace

NseState make_manufactured_state(SpectralField v, double nu, std::string field_id) {
  check_state_inputs(v, nu, "make_manufactured_state");
  SpectralField f = manufactured_forcing(v, nu);
  SpectralField p = pressure_from_v(v);
  SpectralField q = p;
  q += 0.5 * norm2(v);
  NseState s{std::move(field_id), v, nu, std::move(f), std::move(p), std::move(q), true};
  s.v.set_divergence_free(true);
  return s;
}

NseState make_forced_state(SpectralField v, double nu, SpectralField f, std::string field_id) {
  check_state_inputs(v, nu, "make_forced_state");
  require_rank(f.rank(), Rank::Vector, "make_forced_state");
  require_same_grid(v.grid(), f.grid(), "make_forced_state");
  SpectralField p = pressure_from_v(v);
  SpectralField q = p;
  q += 0.5 * norm2(v);
  NseState s{std::move(field_id), v, nu, std::move(f), std::move(p), std::move(q), false};
  s.v.set_divergence_free(true);
  return s;
}

SpectralField pressure_from_v(const SpectralField& v) {
  require_divergence_free(v, "pressure_from_v");
  SpectralField p = riesz_r0(outer(v, v));
  p.at(0, std::size_t{0}) = 0.0;
  return p;
}

SpectralField bernoulli_q(const SpectralField& v) {
  SpectralField q = pressure_from_v(v);
  q += 0.5 * norm2(v);
  return q;
}

SpectralField residual_leray(const NseState& s) {
  SpectralField r = leray_project(cross(curl(s.v), s.v));
  r += s.nu * curl2(s.v);
  r -= s.f;
  r.set_divergence_free(false);
  return r;
}

SpectralField residual_bernoulli(const NseState& s) {
  SpectralField r = cross(curl(s.v), s.v);
  r += s.nu * curl2(s.v);
  r += grad(s.q);
  r -= s.f;
  return r;
}

CheckReport identity_cross(const SpectralField& v, double tol) {
  const SpectralField lhs = cross(curl(v), v);
  const SpectralField adv = convective(v);
  const SpectralField half_grad = 0.5 * grad(norm2(v));
  return compare_sides("nse/identity/curl-cross", "(curl v) x v = (v.grad) v - grad |v|^2 / 2", lhs,
                       adv - half_grad, {&adv, &half_grad}, tol,
                       quadratic_scale(v, 1));
}

CheckReport identity_div_cross(const SpectralField& v, double tol) {
  const SpectralField w = curl(v);
  const SpectralField lhs = div(cross(w, v));
  const SpectralField a = dot(curl2(v), v);
  const SpectralField b = norm2(w);
  return compare_sides("nse/identity/div-curl-cross", "div((curl v) x v) = <curl^2 v, v> - |curl v|^2", lhs, a - b,
                       {&a, &b}, tol,
                       quadratic_scale(v, 2));
}

CheckReport identity_deltaq_unconditional(const SpectralField& v, double tol) {
  const SpectralField lhs = laplacian(bernoulli_q(v));
  const SpectralField a = norm2(curl(v));
  const SpectralField b = dot(curl2(v), v);
  return compare_sides("nse/identity/laplacian-q", "Bernoulli head pressure: Delta Q = |curl v|^2 - <curl^2 v, v>",
                       lhs, a - b, {&a, &b}, tol,
                       quadratic_scale(v, 2));
}

CheckReport identity_grad_q(const SpectralField& v, double tol) {
  const SpectralField lhs = grad(bernoulli_q(v));
  const SpectralField cv = cross(curl(v), v);
  const SpectralField rhs = -1.0 * leray_complement(cv);
  return compare_sides("nse/identity/grad-q", "grad Q = -(I - P)((curl v) x v)", lhs, rhs, {&cv}, tol,
                       quadratic_scale(v, 1));
}

CheckReport identity_s0_divergence(const SpectralField& v, double tol) {
  const SpectralField cv = cross(curl(v), v);
  const SpectralField lhs = leray_project(cv);
  const SpectralField rhs = column_divergence(s0_map(v));
  return compare_sides("nse/identity/s0-divergence", "P((curl v) x v) = sum_l d_l P(v_l v - |v|^2 e_l / 2)", lhs,
                       rhs, {&cv}, tol,
                       quadratic_scale(v, 1));
}

CheckReport identity_leray_kills_gradient(const SpectralField& v, double tol) {
  const SpectralField g2 = grad(norm2(v));
  const SpectralField lhs = leray_project(g2);
  return compare_sides("nse/identity/leray-gradient", "P(grad |v|^2) = 0", lhs, zero_like(lhs, Rank::Vector), {&g2},
                       tol,
                       quadratic_scale(v, 1));
}

CheckReport pointwise_cancellation(const SpectralField& v, double tol) {
  const PhysicalField w = inverse(curl(v));
  const PhysicalField u = inverse(v);
  double worst = 0.0, scale = 0.0;
  for (std::size_t x = 0; x < u.grid().size(); ++x) {
    const Vec3 a = w.vec(x), b = u.vec(x);
    worst = std::max(worst, std::abs(dot(cross(a, b), b)));
    scale = std::max(scale, norm(a) * dot(b, b));
  }
  CheckReport r = make_report("nse/identity/pointwise-cancellation", "<(curl v) x v, v> = det(curl v, v, v) = 0",
                              worst, 0.0, relative_discrepancy(worst, scale), tol);
  r.grid = v.grid().describe();
  r.note = "max |<(curl v) x v, v>| = " + fmt(worst) + ", max |curl v||v|^2 = " + fmt(scale);
  return r;
}

std::vector<CheckReport> unconditional_identity_suite(const SpectralField& v, const std::string& field_id) {
  std::vector<CheckReport> rs{identity_cross(v),         identity_div_cross(v),
                              identity_deltaq_unconditional(v), identity_grad_q(v),
                              identity_s0_divergence(v), identity_leray_kills_gradient(v),
                              pointwise_cancellation(v)};
  tag(rs, field_id);
  return rs;
}

CheckReport residual_check(const NseState& s, double tol) {
  const SpectralField r = residual_leray(s);
  const SpectralField visc = s.nu * curl2(s.v);
  const SpectralField conv = cross(curl(s.v), s.v);
  CheckReport rep = compare_sides("nse/residual/leray", "nu C^2 v + P(C v x v) - f = 0", r, zero_like(r, Rank::Vector),
                                  {&visc, &conv, &s.f}, tol);
  rep.field_id = s.field_id;
  return rep;
}

CheckReport residual_consistency(const NseState& s, double tol) {
  const SpectralField d = residual_bernoulli(s) - residual_leray(s);
  const SpectralField lhs = leray_project(d);
  const SpectralField conv = cross(curl(s.v), s.v);
  const SpectralField gq = grad(s.q);
  CheckReport rep = compare_sides("nse/residual/bernoulli-vs-leray",
                                  "the two residual forms differ by a gradient: P(r_Bernoulli - r_Leray) = 0", lhs,
                                  zero_like(lhs, Rank::Vector), {&conv, &gq, &d}, tol);
  rep.field_id = s.field_id;
  return rep;
}

CheckReport bernoulli_consistency(const NseState& s, double tol) {
  const PhysicalField q = inverse(s.q);
  const PhysicalField p = inverse(s.p);
  const PhysicalField v = inverse(s.v);
  double diff = 0.0, scale = 0.0;
  for (std::size_t x = 0; x < q.grid().size(); ++x) {
    const double half = 0.5 * dot(v.vec(x), v.vec(x));
    diff = std::max(diff, std::abs(q.at(0, x) - p.at(0, x) - half));
    scale = std::max({scale, std::abs(q.at(0, x)), std::abs(p.at(0, x)), half});
  }
  CheckReport r = make_report("nse/bernoulli-head", "Bernoulli head pressure Q = p + |v|^2 / 2 at every node",
                              q.max_magnitude(), scale, relative_discrepancy(diff, scale), tol);
  r.grid = s.v.grid().describe();
  r.field_id = s.field_id;
  return r;
}

CheckReport identity_deltaq(const NseState& s, double tol) {
  const SpectralField lhs = laplacian(s.q);
  const SpectralField a = norm2(curl(s.v));
  const SpectralField b = (1.0 / s.nu) * dot(grad(s.q), s.v);
  const SpectralField c = (1.0 / s.nu) * dot(s.f, s.v);
  CheckReport r = compare_sides("nse/conditional/laplacian-q",
                                "pointwise equality for solutions: Delta Q = |curl v|^2 + <grad Q, v>/nu - <f, v>/nu",
                                lhs, a + b - c, {&a, &b, &c}, tol);
  r.field_id = s.field_id;
  return r;
}

CheckReport energy_balance(const NseState& s, double tol) {
  const SpectralField w = curl(s.v);
  const double lhs = s.nu * inner_product(w, w);
  const double rhs = inner_product(s.f, s.v);
  CheckReport r = compare_numbers("nse/conditional/energy-balance",
                                  "generic energy computation, cutoff equal to 1: nu |curl v|_L2^2 = <f, v>", lhs, rhs,
                                  0.0, tol, s.v.grid());
  r.field_id = s.field_id;
  return r;
}

CheckReport laplacian_q_balance(const NseState& s, double tol) {
  // Sampled on the padded grid, where every product of the right-hand side is
  // resolved exactly, so the Riemann sum of ΔQ is its integral.
  const PhysicalField w = padded_samples(curl(s.v));
  const PhysicalField gq = padded_samples(grad(s.q));
  const PhysicalField v = padded_samples(s.v);
  const PhysicalField f = padded_samples(s.f);
  const GridSpec& big = w.grid();
  std::vector<double> pos(big.size()), neg(big.size()), all(big.size());
  for (std::size_t x = 0; x < big.size(); ++x) {
    const Vec3 vx = v.vec(x), wx = w.vec(x);
    const double dq = dot(wx, wx) + (dot(gq.vec(x), vx) - dot(f.vec(x), vx)) / s.nu;
    all[x] = dq;
    pos[x] = std::max(dq, 0.0);
    neg[x] = std::max(-dq, 0.0);
  }
  const double h3 = big.cell_volume();
  const double ip = pairwise_sum(pos) * h3, in = pairwise_sum(neg) * h3;
  CheckReport r = compare_numbers("nse/conditional/laplacian-q-balance",
                                  "Beppo-Levi balance on the torus: int (Delta Q)_+ = int (Delta Q)_-", ip, in, 0.0,
                                  tol, s.v.grid());
  r.note = "int Delta Q = " + fmt(pairwise_sum(all) * h3);
  r.field_id = s.field_id;
  return r;
}

std::vector<CheckReport> conditional_identity_suite(const NseState& s) {
  return {residual_check(s), residual_consistency(s), bernoulli_consistency(s), identity_deltaq(s),
          energy_balance(s), laplacian_q_balance(s)};
}

double SublevelTerms::discrepancy() const { return std::abs(curl_energy - laplacian_q - forcing); }

SublevelTerms sublevel_terms(const NseState& s, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("sublevel_terms: epsilon must be positive");
  const PhysicalField q = inverse(s.q);
  const PhysicalField w = inverse(curl(s.v));
  const PhysicalField lq = inverse(laplacian(s.q));
  const PhysicalField gq = inverse(grad(s.q));
  const PhysicalField v = inverse(s.v);
  const PhysicalField f = inverse(s.f);
  const GridSpec& g = q.grid();
  const std::size_t N = g.size();
  std::vector<double> ce(N, 0.0), lap(N, 0.0), forc(N, 0.0), flux(N, 0.0);
  SublevelTerms t;
  double grad_max = 0.0;
  for (std::size_t x = 0; x < N; ++x) grad_max = std::max(grad_max, norm(gq.vec(x)));
  double band_min = std::numeric_limits<double>::infinity();
  const double band = g.spacing() * grad_max;
  for (std::size_t x = 0; x < N; ++x) {
    const double qx = q.at(0, x);
    if (std::abs(qx + eps) <= band) band_min = std::min(band_min, norm(gq.vec(x)));
    if (!(qx < -eps)) continue;
    ++t.nodes;
    const Vec3 vx = v.vec(x), wx = w.vec(x);
    ce[x] = dot(wx, wx);
    lap[x] = lq.at(0, x);
    forc[x] = dot(f.vec(x), vx) / s.nu;
    flux[x] = dot(gq.vec(x), vx) / s.nu;
  }
  const double h3 = g.cell_volume();
  t.curl_energy = pairwise_sum(ce) * h3;
  t.laplacian_q = pairwise_sum(lap) * h3;
  t.forcing = pairwise_sum(forc) * h3;
  t.flux = pairwise_sum(flux) * h3;
  if (std::isfinite(band_min) && grad_max > 0.0) t.level_gradient_ratio = band_min / grad_max;
  return t;
}

CheckReport sublevel_energy_audit(const NseState& s, double eps, double tolerance_per_cell) {
  if (!(eps > 0.0)) throw InvalidInput("sublevel_energy_audit: epsilon must be positive");
  const SublevelTerms t = sublevel_terms(s, eps);
  const GridSpec& g = s.v.grid();
  const double tol = tolerance_per_cell * g.spacing() / g.length();
  const double rhs = t.laplacian_q + t.forcing;
  const double scale = std::max({std::abs(t.curl_energy), std::abs(t.laplacian_q), std::abs(t.forcing)});
  CheckReport r = make_report("nse/sublevel-energy",
                              "sublevel set {Q < -eps}, regular value: int |curl v|^2 = int Delta Q (+ forcing term)",
                              t.curl_energy, rhs, relative_discrepancy(t.discrepancy(), scale), tol);
  r.grid = g.describe();
  r.field_id = s.field_id;
  if (t.nodes == 0) {
    r.note = "sublevel set is empty at eps = " + fmt(eps);
  } else {
    r.note = "eps = " + fmt(eps) + ", nodes = " + std::to_string(t.nodes) + ", boundary flux = " + fmt(t.flux) +
             ", level gradient ratio = " + fmt(t.level_gradient_ratio) +
             (t.level_gradient_ratio < kRegularLevelRatio ? " (level flagged as not regular)" : "");
  }
  return r;
}

SublevelSweep sublevel_resolution_sweep(const StateBuilder& build, double eps, const std::vector<GridSpec>& grids,
                                        int shift_count, std::uint64_t seed, double min_order) {
  if (grids.size() < 2) throw InvalidInput("sublevel_resolution_sweep: need at least two grids");
  if (shift_count < 1) throw InvalidInput("sublevel_resolution_sweep: need at least one shift");
  std::mt19937_64 rng(seed);
  const double cell = grids.front().spacing();
  std::vector<Vec3> shifts(shift_count);
  for (auto& sh : shifts)
    for (double& c : sh) c = cell * static_cast<double>(rng() >> 11) * 0x1p-53;

  SublevelSweep out;
  std::ostringstream note;
  note << "eps = " << fmt(eps) << ";";
  for (const GridSpec& g : grids) {
    double acc = 0.0, lhs = 0.0, rhs = 0.0;
    double worst_ratio = 1.0;
    for (const Vec3& sh : shifts) {
      const SublevelTerms t = sublevel_terms(build(g, sh), eps);
      acc += t.discrepancy() * t.discrepancy();
      lhs += t.curl_energy;
      rhs += t.laplacian_q + t.forcing;
      worst_ratio = std::min(worst_ratio, t.level_gradient_ratio);
    }
    out.n.push_back(g.n());
    out.rms_discrepancy.push_back(std::sqrt(acc / shift_count));
    out.curl_energy.push_back(lhs / shift_count);
    out.rhs.push_back(rhs / shift_count);
    note << " n=" << g.n() << ": rms " << fmt(out.rms_discrepancy.back()) << " (level gradient ratio >= "
         << fmt(worst_ratio) << ")";
  }
  double worst_order = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < out.n.size(); ++i) {
    const double a = out.rms_discrepancy[i], b = out.rms_discrepancy[i + 1];
    double order = std::numeric_limits<double>::infinity();
    if (a > 0.0 && b > 0.0) order = std::log(a / b) / std::log(static_cast<double>(out.n[i + 1]) / out.n[i]);
    else if (a > 0.0 || b > 0.0) order = b == 0.0 ? order : -order;
    out.observed_order.push_back(order);
    worst_order = std::min(worst_order, order);
    note << "; order " << out.n[i] << "->" << out.n[i + 1] << " = " << fmt(order);
  }
  out.report = make_report("nse/sublevel-energy/resolution-sweep",
                           "sublevel energy identity: discretization error decays under refinement",
                           out.rms_discrepancy.front(), out.rms_discrepancy.back(), min_order - worst_order, 0.0);
  out.report.grid = grids.front().describe() + " .. " + grids.back().describe();
  out.report.note = note.str();
  return out;
}

BootstrapAudit bootstrap_spectral_audit(const NseState& s, double kappa, double tol) {
  if (!s.manufactured) throw PreconditionViolation("bootstrap_spectral_audit: state must be manufactured");
  if (!(kappa >= 0.0)) throw InvalidInput("bootstrap_spectral_audit: kappa must be >= 0");
  const GridSpec& g = s.v.grid();
  const SpectralField t = outer(s.v, s.v);
  const SpectralField u = s0_map(s.v);
  double worst = 0.0, scale = 0.0;
  std::vector<double> lhs_terms(g.size(), 0.0), u_terms(g.size(), 0.0), f_terms(g.size(), 0.0);
  for (std::size_t slot = 1; slot < g.size(); ++slot) {
    const Vec3 k = effective_wavevector(g, g.mode_at(slot));
    const double k2 = dot(k, k);
    const CVec3 w = s.v.vec(slot);
    const CVec3 f = s.f.vec(slot);
    // N_i = i k_j (W_j ⋆ W_i), then P(k) N.
    CVec3 n{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) n[i] += I * k[j] * t.at(3 * i + j, slot);
    CVec3 pn = n;
    if (k2 > 0.0) {
      const Complex kn = k[0] * n[0] + k[1] * n[1] + k[2] * n[2];
      for (int i = 0; i < 3; ++i) pn[i] -= k[i] * kn / k2;
    }
    CVec3 res{};
    for (int i = 0; i < 3; ++i) res[i] = s.nu * k2 * w[i] + pn[i] - f[i];
    worst = std::max(worst, norm(res));
    scale = std::max({scale, s.nu * k2 * norm(w), norm(pn), norm(f)});
    if (k2 == 0.0) continue;
    const double kn = std::sqrt(k2);
    lhs_terms[slot] = s.nu * std::pow(kn, 1.0 + kappa) * norm(w);
    double us = 0.0;
    for (int l = 0; l < 3; ++l) us += norm(CVec3{u.at(l, slot), u.at(3 + l, slot), u.at(6 + l, slot)});
    u_terms[slot] = std::pow(kn, kappa) * us;
    f_terms[slot] = std::pow(kn, kappa - 1.0) * norm(f);
  }
  BootstrapAudit out;
  out.spectral_equation =
      make_report("nse/bootstrap/spectral-equation",
                  "spectral form with W_j * W in L1: nu |k|^2 W + i P(k) k_j (W_j * W) - F = 0 per mode", worst, 0.0,
                  relative_discrepancy(worst, scale), tol);
  const double lhs = pairwise_sum(lhs_terms);
  const double rhs = pairwise_sum(u_terms) + pairwise_sum(f_terms);
  std::ostringstream id;
  id << "nse/bootstrap/cascade/kappa-" << kappa;
  out.cascade = make_report(id.str(), "cascade bound proving v in V^{kappa+1}: nu sum |k|^{1+kappa}|W| <= "
                                      "sum_l sum |k|^kappa |U_l| + sum |k|^{kappa-1} |F|",
                            lhs, rhs, rhs > 0.0 ? (lhs - rhs) / rhs : (lhs > 0.0 ? 1.0 : 0.0), 1e-12);
  out.cascade.note = "U sum = " + fmt(pairwise_sum(u_terms)) + ", F sum = " + fmt(pairwise_sum(f_terms));
  for (CheckReport* r : {&out.spectral_equation, &out.cascade}) {
    r->grid = g.describe();
    r->field_id = s.field_id;
  }
  return out;
}

namespace {

double lp(const SpectralField& f, double p) { return lp_norm(f, p).value; }

}  // namespace

CheckReport galdi_band_audit(const NseState& s, const CutoffProfile& alpha0, double tol) {
  const BandSplit b = split_bands(s.v, alpha0);
  const SpectralField s00 = s0_bilinear(b.low, b.low), s01 = s0_bilinear(b.low, b.high),
                      s10 = s0_bilinear(b.high, b.low), s11 = s0_bilinear(b.high, b.high);
  const SpectralField t00 = contract(b.low, s00), t01 = contract(b.low, s01), t10 = contract(b.low, s10),
                      t11 = contract(b.low, s11);
  const SpectralField direct = contract(b.low, s0_map(s.v));
  const SpectralField sum = t00 + t01 + t10 + t11;
  CheckReport r = compare_sides("nse/band/galdi-decomposition",
                                "low band in L^{9/2}: v0 S0(v x v) = v0 S0[v0 x v0] + v0 S0[v0 x v1] + v0 S0[v1 x v0] + "
                                "v0 S0[v1 x v1]",
                                direct, sum, {&t00, &t01, &t10, &t11}, tol);
  r.lhs = lp(direct, 1.5);
  r.rhs = lp(sum, 1.5);
  const double v0_6 = lp(b.low, 6.0);
  std::ostringstream note;
  note << "|v0|_L9/2 = " << fmt(lp(b.low, 4.5)) << ", |v1|_L2 = " << fmt(lp(b.high, 2.0)) << ", |v0|_W = "
       << fmt(wiener_norm(b.low).value) << ", |v1|_W = " << fmt(wiener_norm(b.high).value)
       << "; L3/2 norms (Holder bound): T00 " << fmt(lp(t00, 1.5)) << " (" << fmt(lp(b.low, 4.5) * lp(s00, 2.25))
       << "), T01 " << fmt(lp(t01, 1.5)) << " (" << fmt(v0_6 * lp(s01, 2.0)) << "), T10 " << fmt(lp(t10, 1.5))
       << " (" << fmt(v0_6 * lp(s10, 2.0)) << "), T11 " << fmt(lp(t11, 1.5)) << " (" << fmt(v0_6 * lp(s11, 2.0))
       << ")";
  r.note = note.str();
  r.field_id = s.field_id;
  return r;
}

CheckReport chae_band_audit(const NseState& s, const CutoffProfile& alpha0, double tol) {
  const BandSplit b = split_bands(s.v, alpha0);
  const SpectralField c2v = curl2(s.v);
  const SpectralField a = dot(c2v, b.high);
  const SpectralField c = dot(curl2(b.high), b.low);
  const SpectralField d = dot(curl2(b.low), b.low);
  const SpectralField direct = dot(c2v, s.v);
  CheckReport r = compare_sides("nse/band/chae-decomposition",
                                "curl^2 v . v = curl^2 v . v1 + curl^2 v1 . v0 + curl^2 v0 . v0", direct, a + c + d,
                                {&a, &c, &d}, tol);
  r.lhs = lp(direct, 1.0);
  r.rhs = lp(a + c + d, 1.0);
  std::ostringstream note;
  note << "|curl^2 v . v1|_L1 = " << fmt(lp(a, 1.0)) << ", |curl^2 v1 . v0|_L1 = " << fmt(lp(c, 1.0))
       << ", |curl^2 v0 . v0|_L1 = " << fmt(lp(d, 1.0))
       << ", |alpha0(D) curl^2 v|_L6/5 = " << fmt(lp(apply_cutoff(alpha0, 1.0, c2v), 1.2));
  r.note = note.str();
  r.field_id = s.field_id;
  return r;
}

CheckReport linear_liouville_audit(const SpectralField& f, const SpectralField& x, double nu, double tol) {
  require_rank(f.rank(), Rank::Scalar, "linear_liouville_audit");
  require_rank(x.rank(), Rank::Vector, "linear_liouville_audit");
  require_same_grid(f.grid(), x.grid(), "linear_liouville_audit");
  if (!(nu > 0.0)) throw InvalidInput("linear_liouville_audit: viscosity must be positive");
  const SpectralField gf = grad(f);
  SpectralField g = dot(x, gf);
  g -= nu * laplacian(f);
  const SpectralField divx = div(x);
  const double lhs = nu * inner_product(gf, gf);
  const double gterm = inner_product(g, f);
  const double dterm = 0.5 * inner_product(divx, product(f, f));
  CheckReport r = compare_numbers("nse/linear-liouville",
                                  "ellipticity energy identity: nu |grad f|^2 = <g, f> + <div X, f^2> / 2", lhs,
                                  gterm + dterm, std::max(std::abs(gterm), std::abs(dterm)), tol, f.grid());
  PhysicalField dp = inverse(divx);
  for (double& y : dp.samples()) y = std::max(y, 0.0);
  r.note = "|(div X)_+|_L3/2 = " + fmt(lp_norm(dp, 1.5).value);
  return r;
}

}  // namespace wiener
