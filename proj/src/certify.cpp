#include "wiener/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "wiener/error.hpp"
#include "wiener/norms.hpp"
#include "wiener/transform.hpp"

namespace wiener {

namespace {

constexpr double kRounding = 1e-12;
constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

/// Relative excess of lhs over rhs; <= 0 when the bound holds.
double excess(double lhs, double rhs) {
  if (lhs <= rhs) return (lhs - rhs) / std::max(std::abs(rhs), std::numeric_limits<double>::min());
  return (lhs - rhs) / std::max(std::abs(rhs), std::abs(lhs));
}

/// Aggregates per-instance inequality outcomes into one report.
class Tally {
 public:
  Tally(std::string id, std::string anchor) : id_(std::move(id)), anchor_(std::move(anchor)) {}

  void add(double lhs, double rhs, const std::string& what = {}) {
    const double r = excess(lhs, rhs);
    ++count_;
    if (std::isnan(r) || r > kRounding) ++violations_;
    if (std::isnan(r) || r > worst_ || count_ == 1) {
      worst_ = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
      lhs_ = lhs;
      rhs_ = rhs;
      what_ = what;
    }
  }
  void add(const CheckReport& r) { add(r.lhs, r.rhs, r.note); }

  CheckReport report(const std::string& extra = {}) const {
    CheckReport r = make_report(id_, anchor_, lhs_, rhs_, worst_, kRounding);
    std::ostringstream os;
    os << "instances = " << count_ << ", violations = " << violations_ << ", worst relative excess = " << fmt(worst_);
    if (!what_.empty()) os << " (" << what_ << ")";
    if (!extra.empty()) os << "; " << extra;
    r.note = os.str();
    if (violations_ > 0) r.pass = false;
    return r;
  }

 private:
  std::string id_, anchor_;
  std::size_t count_ = 0, violations_ = 0;
  double worst_ = -std::numeric_limits<double>::infinity();
  double lhs_ = 0.0, rhs_ = 0.0;
  std::string what_;
};

double peetre_scalar_slack(double tau, double a, double b) {
  return (tau + a * a) * (tau + b * b) - tau - (a + b) * (a + b);
}

Vec3 random_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const double scale = std::pow(10.0, -6.0 + 12.0 * uniform01(rng));
  return scale * Vec3{gauss(rng), gauss(rng), gauss(rng)};
}

NodalVectors random_nodal(int n, double length, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  NodalVectors u{n, length, std::vector<Vec3>(static_cast<std::size_t>(n) * n * n)};
  for (auto& x : u.values) {
    // Log-normal magnitudes give heavy-tailed samples.
    x = std::exp(gauss(rng)) * Vec3{gauss(rng), gauss(rng), gauss(rng)};
  }
  return u;
}

SpectralField random_field(const GridSpec& g, Rank rank, int band, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  SpectralField c(g, rank);
  const double decay = 0.5 * uniform01(rng);
  for (int l = -band; l <= band; ++l)
    for (int j = -band; j <= band; ++j)
      for (int i = -band; i <= band; ++i) {
        const Wavevector m{i, j, l};
        if (-m < m) continue;
        const double w = std::exp(-decay * m.norm2());
        for (int comp = 0; comp < components(rank); ++comp) {
          if (m == -m) {
            c.at(comp, m) = w * gauss(rng);
          } else {
            const Complex z = w * Complex(gauss(rng), gauss(rng));
            c.at(comp, m) = z;
            c.at(comp, -m) = std::conj(z);
          }
        }
      }
  return c;
}

/// Per-mode |k|² (true wavevector) and Euclidean coefficient magnitude.
struct ModeData {
  double k2;
  double mag;
};

std::vector<ModeData> nonzero_modes(const SpectralField& v) {
  const GridSpec& g = v.grid();
  std::vector<ModeData> out;
  out.reserve(g.size());
  for (std::size_t slot = 1; slot < g.size(); ++slot) {
    const Vec3 k = g.wavevector(g.mode_at(slot));
    double m2 = 0.0;
    for (int c = 0; c < components(v.rank()); ++c) m2 += std::norm(v.at(c, slot));
    out.push_back({dot(k, k), std::sqrt(m2)});
  }
  return out;
}

void require_nonzero(const SpectralField& v, const char* what) {
  for (const Complex& z : v.coefficients())
    if (z != 0.0) return;
  throw InvalidInput(std::string(what) + ": field is zero");
}

}  // namespace

double peetre_slack(double tau, const Vec3& a, const Vec3& b) {
  const Vec3 s = a + b;
  return (tau + dot(a, a)) * (tau + dot(b, b)) - tau - dot(s, s);
}

PeetreSearchResult peetre_certify(std::uint64_t seed, std::size_t samples, double bracket_width) {
  if (samples < 1 || !(bracket_width > 0.0)) throw InvalidInput("peetre_certify: bad parameters");
  std::mt19937_64 rng(seed);
  // Magnitude pairs: a quarter log-uniform over [1e-4, 1e4], a quarter uniform
  // over [0, 3], a quarter on the diagonal a = b and a quarter clustered near
  // the extremal a = b = √(2/3).
  std::vector<std::pair<double, double>> pairs(samples);
  const double crit = std::sqrt(2.0 / 3.0);
  for (std::size_t i = 0; i < samples; ++i) {
    double a = 0.0, b = 0.0;
    switch (i % 4) {
      case 0:
        a = std::pow(10.0, -4.0 + 8.0 * uniform01(rng));
        b = std::pow(10.0, -4.0 + 8.0 * uniform01(rng));
        break;
      case 1:
        a = 3.0 * uniform01(rng);
        b = 3.0 * uniform01(rng);
        break;
      case 2:
        a = b = 2.0 * uniform01(rng);
        break;
      default:
        a = crit + 1e-3 * (uniform01(rng) - 0.5);
        b = crit + 1e-3 * (uniform01(rng) - 0.5);
        break;
    }
    pairs[i] = {a, b};
  }

  PeetreSearchResult out;
  out.samples = samples;
  auto witness_for = [](double tau) { return Vec3{std::sqrt(std::max(0.0, 2.0 - tau)), 0.0, 0.0}; };
  auto admissible_on_samples = [&](double tau) {
    for (const auto& [a, b] : pairs)
      if (peetre_scalar_slack(tau, a, b) < 0.0) return false;
    return true;
  };

  double lo = 0.0, hi = 2.0;
  if (!admissible_on_samples(hi)) throw Error("peetre_certify: tau = 2 violated on samples");
  while (hi - lo > bracket_width) {
    const double mid = 0.5 * (lo + hi);
    const Vec3 w = witness_for(mid);
    if (peetre_slack(mid, w, w) < 0.0 || !admissible_on_samples(mid)) lo = mid;
    else hi = mid;
  }
  out.bracket_low = lo;
  out.bracket_high = hi;
  out.witness = witness_for(lo);
  out.witness_slack = peetre_slack(lo, out.witness, out.witness);

  const double target = 4.0 / 3.0;
  const bool contains = lo <= target && target <= hi;
  const double miss = contains ? 0.0 : std::min(std::abs(lo - target), std::abs(hi - target));
  out.bracket = make_report("certify/peetre/bracket", "Peetre-type inequality: least admissible tau is 4/3", lo, hi,
                            miss, 0.0);
  if (!(hi - lo <= bracket_width) || !(out.witness_slack < 0.0)) out.bracket.pass = false;
  out.bracket.note = "bracket [" + fmt(lo) + ", " + fmt(hi) + "], width " + fmt(hi - lo) + "; witness |xi| = " +
                     fmt(out.witness[0]) + " has slack " + fmt(out.witness_slack) + " at tau = bracket_low; " +
                     std::to_string(samples) + " sampled pairs, seed " + std::to_string(seed);

  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs) {
    const double ratio = (2.0 + (a + b) * (a + b)) / ((2.0 + a * a) * (2.0 + b * b));
    if (!(ratio <= 1.0)) ++out.tau2_violations;
    worst = std::max(worst, ratio);
  }
  out.tau2 = make_report("certify/peetre/tau-2",
                         "weight submultiplicativity: (2+|x1+x2|^2) <= (2+|x1|^2)(2+|x2|^2)", worst, 1.0,
                         worst - 1.0, 0.0);
  if (out.tau2_violations > 0) out.tau2.pass = false;
  out.tau2.note = std::to_string(samples) + " pairs, violations = " + std::to_string(out.tau2_violations) +
                  ", largest ratio = " + fmt(worst);
  return out;
}

CheckReport hadamard_cross_certify(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  Tally t("certify/hadamard-cross", "Hadamard bound for the cross product: |a x b| <= |a||b|");
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0};
  t.add(norm(cross(e1, e2)), norm(e1) * norm(e2), "orthonormal pair");
  t.add(norm(cross(e1, 3.0 * e1)), 3.0, "parallel pair");
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec3 a = random_vector(rng), b = random_vector(rng);
    t.add(norm(cross(a, b)), norm(a) * norm(b));
  }
  return t.report();
}

double nodal_lp(const NodalVectors& u, double p) {
  if (!(p >= 1.0)) throw InvalidInput("nodal_lp: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Vec3& x : u.values) m = std::max(m, norm(x));
    return m;
  }
  std::vector<double> terms(u.values.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::pow(norm(u.values[i]), p);
  const double h = u.length / u.n;
  return std::pow(pairwise_sum(terms) * h * h * h, 1.0 / p);
}

CheckReport holder_cross_check(const NodalVectors& a, const NodalVectors& b, double p, double q) {
  if (a.n != b.n || a.length != b.length || a.values.size() != b.values.size())
    throw InvalidInput("holder_cross_check: grids differ");
  const double inv_r = 1.0 / p + 1.0 / q;
  if (!(inv_r > 0.0 && inv_r <= 1.0)) throw InvalidInput("holder_cross_check: need 0 < 1/p + 1/q <= 1");
  NodalVectors c{a.n, a.length, std::vector<Vec3>(a.values.size())};
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = cross(a.values[i], b.values[i]);
  const double lhs = nodal_lp(c, 1.0 / inv_r);
  const double rhs = nodal_lp(a, p) * nodal_lp(b, q);
  CheckReport r = make_report("certify/holder-cross", "Hoelder bound for the cross product", lhs, rhs,
                              excess(lhs, rhs), kRounding);
  r.note = "p = " + fmt(p) + ", q = " + fmt(q) + ", r = " + fmt(1.0 / inv_r);
  return r;
}

NodalVectors star_convolution(const NodalVectors& a, const NodalVectors& b) {
  if (a.n != b.n || a.length != b.length) throw InvalidInput("star_convolution: grids differ");
  const int n = a.n;
  const double h = a.length / n;
  const double weight = h * h * h * std::pow(2.0 * kPi, -1.5);
  NodalVectors out{n, a.length, std::vector<Vec3>(a.values.size())};
  auto idx = [n](int i, int j, int l) { return static_cast<std::size_t>((l * n + j) * n + i); };
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Vec3 acc{};
        for (int yl = 0; yl < n; ++yl)
          for (int yj = 0; yj < n; ++yj)
            for (int yi = 0; yi < n; ++yi) {
              const Vec3& ax = a.values[idx((i - yi + n) % n, (j - yj + n) % n, (l - yl + n) % n)];
              acc = acc + cross(ax, b.values[idx(yi, yj, yl)]);
            }
        out.values[idx(i, j, l)] = weight * acc;
      }
  return out;
}

CheckReport young_star_certify(const NodalVectors& a, const NodalVectors& b, double p, double q) {
  const double inv_r = 1.0 / p + 1.0 / q - 1.0;
  if (!(p >= 1.0 && q >= 1.0 && inv_r >= 0.0 && inv_r <= 1.0))
    throw InvalidInput("young_star_certify: need p, q >= 1 and 1 <= 1/p + 1/q <= 2");
  const double r = inv_r == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_r;
  const double lhs = nodal_lp(star_convolution(a, b), r);
  const double rhs = std::pow(2.0 * kPi, -1.5) * nodal_lp(a, p) * nodal_lp(b, q);
  CheckReport rep = make_report("certify/young-star", "Young bound for the star convolution", lhs, rhs,
                                excess(lhs, rhs), kRounding);
  rep.note = "p = " + fmt(p) + ", q = " + fmt(q) + ", r = " + fmt(r);
  return rep;
}

CheckReport holder_cross_certify(std::uint64_t seed, std::size_t instances) {
  static const double kInf = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<double, double>> exps{{2, 6}, {2, 2}, {4, 4}, {kInf, 2}, {3, 3}, {1, kInf}};
  const double lengths[] = {1.0, 2.0 * kPi, 10.0};
  std::mt19937_64 rng(seed);
  Tally t("certify/holder-cross", "Hoelder bound for the cross product: |a x b|_r <= |a|_p |b|_q");
  for (std::size_t i = 0; i < instances; ++i) {
    const double L = lengths[i % 3];
    const auto a = random_nodal(6, L, rng), b = random_nodal(6, L, rng);
    const auto [p, q] = exps[i % exps.size()];
    t.add(holder_cross_check(a, b, p, q));
  }
  return t.report("exponents (p, q) cycle through (2,6) (2,2) (4,4) (inf,2) (3,3) (1,inf)");
}

CheckReport young_star_campaign(std::uint64_t seed, std::size_t instances) {
  static const double kInf = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<double, double>> exps{{1, 1},           {2, 1},    {1, 2},   {2, 2},
                                                    {4. / 3, 4. / 3}, {1, kInf}, {1.5, 1.2}};
  const double lengths[] = {1.0, 2.0 * kPi, 10.0};
  std::mt19937_64 rng(seed);
  Tally t("certify/young-star", "Young bound for the star convolution: |a * b|_r <= (2pi)^-3/2 |a|_p |b|_q");
  for (std::size_t i = 0; i < instances; ++i) {
    const double L = lengths[i % 3];
    const auto a = random_nodal(4, L, rng), b = random_nodal(4, L, rng);
    const auto [p, q] = exps[i % exps.size()];
    t.add(young_star_certify(a, b, p, q));
  }
  return t.report("4^3 grids, direct summation");
}

CheckReport power_inequality_certify() {
  Tally t("certify/power-inequality", "power inequality: (1+a)^s <= 2^(s-1) (1+a^s) for s >= 1");
  const double exps[] = {1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
  double equality_gap = 0.0;
  for (double s : exps) {
    std::vector<double> as{0.0, 1.0};
    for (int i = 0; i <= 1000; ++i) as.push_back(std::pow(10.0, -6.0 + 12.0 * i / 1000.0));
    for (double a : as) {
      const double lhs = std::pow(1.0 + a, s), rhs = std::pow(2.0, s - 1.0) * (1.0 + std::pow(a, s));
      t.add(lhs, rhs, "s = " + fmt(s) + ", a = " + fmt(a));
      if (a == 1.0) equality_gap = std::max(equality_gap, std::abs(lhs - rhs) / rhs);
    }
  }
  return t.report("equality at a = 1 holds to relative " + fmt(equality_gap));
}

CheckReport kappa_split_certify(const SpectralField& v, double kappa) {
  if (!(kappa > -0.5 && kappa < 0.5)) throw InvalidInput("kappa_split_certify: kappa must lie in (-1/2, 1/2)");
  require_nonzero(v, "kappa_split_certify");
  const auto modes = nonzero_modes(v);
  std::vector<double> lhs_t, a_t, b_t, h1_t, h2_t;
  for (const auto& [k2, mag] : modes) {
    const double k = std::sqrt(k2);
    lhs_t.push_back(std::pow(k, kappa) * mag);
    if (k <= 1.0) a_t.push_back(std::pow(k, 2.0 * kappa - 2.0));
    else b_t.push_back(std::pow(k, 2.0 * kappa - 4.0));
    h1_t.push_back(k2 * mag * mag);
    h2_t.push_back(k2 * k2 * mag * mag);
  }
  const double lhs = pairwise_sum(lhs_t);
  const double A = std::sqrt(pairwise_sum(a_t)), B = std::sqrt(pairwise_sum(b_t));
  const double h1 = std::sqrt(pairwise_sum(h1_t)), h2 = std::sqrt(pairwise_sum(h2_t));
  const double rhs = A * h1 + B * h2;
  std::ostringstream tag;
  tag << "certify/kappa-split/kappa-" << kappa;
  CheckReport r = make_report(tag.str(), "weighted Wiener bound split at |k| = 1 (lattice Cauchy-Schwarz)", lhs, rhs,
                              excess(lhs, rhs), kRounding);
  r.grid = v.grid().describe();
  r.note = "A_kappa = " + fmt(A) + ", B_kappa = " + fmt(B) + "; continuum constants 2 sqrt(pi)/sqrt(1+2kappa) = " +
           fmt(2.0 * std::sqrt(kPi) / std::sqrt(1.0 + 2.0 * kappa)) +
           ", 2 sqrt(pi)/sqrt(1-2kappa) = " + fmt(2.0 * std::sqrt(kPi) / std::sqrt(1.0 - 2.0 * kappa)) +
           " (not asserted)";
  return r;
}

CheckReport wiener_split_certify(const SpectralField& v) {
  require_nonzero(v, "wiener_split_certify");
  const auto modes = nonzero_modes(v);
  // Group the grid modes by |k|² (exact integer |m|² keys).
  const double unit = std::pow(2.0 * kPi / v.grid().length(), 2);
  std::map<long long, std::pair<double, double>> shells;  // |m|² -> (Σ|k|^-2, Σ|k|^-4)
  std::vector<double> lhs_t, h1_t, h2_t;
  for (const auto& [k2, mag] : modes) {
    auto& s = shells[std::llround(k2 / unit)];
    s.first += 1.0 / k2;
    s.second += 1.0 / (k2 * k2);
    lhs_t.push_back(mag);
    h1_t.push_back(k2 * mag * mag);
    h2_t.push_back(k2 * k2 * mag * mag);
  }
  const double lhs = pairwise_sum(lhs_t);
  const double h1 = std::sqrt(pairwise_sum(h1_t)), h2 = std::sqrt(pairwise_sum(h2_t));
  double b2 = 0.0;
  for (const auto& [key, s] : shells) b2 += s.second;
  // ρ below the first shell, then at each shell radius.
  double best = std::sqrt(b2) * h2, best_rho = 0.0, a2 = 0.0;
  for (const auto& [key, s] : shells) {
    a2 += s.first;
    b2 = std::max(0.0, b2 - s.second);
    const double bound = std::sqrt(a2) * h1 + std::sqrt(b2) * h2;
    if (bound < best) {
      best = bound;
      best_rho = std::sqrt(key * unit);
    }
  }
  CheckReport r = make_report("certify/wiener-split", "Wiener norm bound minimized over the split radius", lhs, best,
                              excess(lhs, best), kRounding);
  r.grid = v.grid().describe();
  r.note = "minimizing lattice radius rho = " + fmt(best_rho) + "; continuum form 4 sqrt(pi) (|Cv| |C^2 v|)^1/2 = " +
           fmt(4.0 * std::sqrt(kPi) * std::sqrt(h1 * h2)) + " in coefficient units (not asserted)";
  return r;
}

CheckReport chebyshev_tail_certify(const SpectralField& v) {
  const auto modes = nonzero_modes(v);
  std::vector<double> h2_t;
  for (const auto& [k2, mag] : modes) h2_t.push_back(k2 * k2 * mag * mag);
  const double h2 = pairwise_sum(h2_t);
  double worst = -std::numeric_limits<double>::infinity(), wl = 0.0, wr = 0.0;
  for (double rho : {1.0, 2.0, 4.0}) {
    std::vector<double> tail;
    for (const auto& [k2, mag] : modes)
      if (k2 >= rho * rho) tail.push_back(mag * mag);
    const double lhs = pairwise_sum(tail), rhs = h2 / std::pow(rho, 4);
    const double e = excess(lhs, rhs);
    if (e > worst || std::isnan(e)) {
      worst = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
      wl = lhs;
      wr = rhs;
    }
  }
  CheckReport r = make_report("certify/chebyshev-tail",
                              "spectral tail: sum_{|k|>=rho} |c_k|^2 <= rho^-4 sum |k|^4 |c_k|^2", wl, wr, worst,
                              kRounding);
  r.grid = v.grid().describe();
  r.note = "rho in {1, 2, 4}; worst case shown";
  return r;
}

std::vector<CheckReport> lattice_split_campaign(std::uint64_t seed, std::size_t instances) {
  const double lengths[] = {2.0 * kPi, 1.0, 4.0 * kPi, 3.7};
  const double kappas[] = {-0.4, 0.0, 0.4};
  std::mt19937_64 rng(seed);
  Tally kt("certify/kappa-split", "weighted Wiener bound split at |k| = 1 (lattice Cauchy-Schwarz)");
  Tally wt("certify/wiener-split", "Wiener norm bound minimized over the split radius");
  Tally ct("certify/chebyshev-tail", "spectral tail: sum_{|k|>=rho} |c_k|^2 <= rho^-4 sum |k|^4 |c_k|^2");
  for (std::size_t i = 0; i < instances; ++i) {
    const GridSpec g(8, lengths[i % 4], 2);
    const int band = 1 + static_cast<int>(rng() % 3);
    const SpectralField v = random_field(g, Rank::Vector, band, rng);
    kt.add(kappa_split_certify(v, kappas[i % 3]));
    wt.add(wiener_split_certify(v));
    ct.add(chebyshev_tail_certify(v));
  }
  return {kt.report("kappa cycles through -0.4, 0, 0.4"), wt.report(), ct.report()};
}

std::vector<CheckReport> submultiplicativity_certify(const std::vector<double>& s_values, std::uint64_t seed,
                                                     std::size_t pairs) {
  std::vector<Tally> tallies;
  for (double s : s_values) {
    if (!(s >= 0.0)) throw InvalidInput("submultiplicativity_certify: s must be >= 0");
    std::ostringstream id;
    id << "certify/submultiplicativity/s-" << s;
    tallies.emplace_back(id.str(), "Banach algebra bound: |fg|_V(s) <= |f|_V(s) |g|_V(s)");
  }
  const double lengths[] = {2.0 * kPi, 1.0, 5.0};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    // Bands of 2 on a grid with dealias limit 4: the product is exact.
    const GridSpec g(16, lengths[i % 3], 4);
    const SpectralField f = random_field(g, Rank::Scalar, 2, rng);
    const SpectralField h = random_field(g, Rank::Scalar, 2, rng);
    const SpectralField fh = product(f, h);
    for (std::size_t j = 0; j < s_values.size(); ++j) {
      const double s = s_values[j];
      tallies[j].add(vsw_norm(fh, s).value, vsw_norm(f, s).value * vsw_norm(h, s).value);
    }
  }
  std::vector<CheckReport> out;
  for (const Tally& t : tallies) out.push_back(t.report("scalar fields band-limited to |m_i| <= 2"));
  return out;
}

namespace {

std::pair<double, double> profile(Bump::Profile p, double u) {
  const double w = 1.0 - u;
  switch (p) {
    case Bump::Profile::Cubic:
      return {w * w * w, -3.0 * w * w};
    case Bump::Profile::Quadratic:
      return {w * w, -2.0 * w};
    case Bump::Profile::Exponential: {
      const double f = std::exp(1.0 - 1.0 / w);
      return {f, -f / (w * w)};
    }
  }
  return {0.0, 0.0};
}

}  // namespace

GnRatio gn_ratio(const Bump& b, double length, int n) {
  if (n < 2 || !(length > 0.0)) throw InvalidInput("gn_ratio: bad grid");
  for (int i = 0; i < 3; ++i)
    if (!(b.radii[i] > 0.0) || !(b.center[i] - b.radii[i] > 0.0) || !(b.center[i] + b.radii[i] < length))
      throw InvalidInput("gn_ratio: bump support must lie strictly inside the box");
  const double h = length / n;
  std::vector<double> grad_t, f_t;
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const Vec3 d = Vec3{i * h, j * h, l * h} - b.center;
        double u = 0.0;
        for (int c = 0; c < 3; ++c) u += d[c] * d[c] / (b.radii[c] * b.radii[c]);
        if (u >= 1.0) continue;
        const auto [psi, dpsi] = profile(b.profile, u);
        Vec3 grad{};
        for (int c = 0; c < 3; ++c) grad[c] = b.amplitude * dpsi * 2.0 * d[c] / (b.radii[c] * b.radii[c]);
        grad_t.push_back(norm(grad));
        f_t.push_back(std::pow(std::abs(b.amplitude * psi), 1.5));
      }
  GnRatio r;
  const double cell = h * h * h;
  r.gradient_l1 = pairwise_sum(grad_t) * cell;
  r.f_l32 = std::pow(pairwise_sum(f_t) * cell, 2.0 / 3.0);
  const double constant = 3.0 * std::cbrt(4.0 * kPi / 3.0);
  r.ratio = r.f_l32 > 0.0 ? r.gradient_l1 / (constant * r.f_l32) : std::numeric_limits<double>::quiet_NaN();
  return r;
}

CheckReport gn_isoperimetric_diagnostic(const Bump& b, double length, int n) {
  const std::string id = "certify/gn-isoperimetric/" + b.name;
  const std::string anchor = "Gagliardo-Nirenberg isoperimetric ratio |grad f|_1 / (3 |B|^(1/3) |f|_3/2) >= 1";
  const GnRatio fine = gn_ratio(b, length, n);
  CheckReport r;
  if (std::isnan(fine.ratio)) {
    r = make_report(id, anchor, 0.0, 1.0, 0.0, 0.0);
    r.note = "skipped: zero field";
  } else {
    const GnRatio coarse = gn_ratio(b, length, n / 2);
    const double delta = std::abs(fine.ratio - coarse.ratio);
    r = make_report(id, anchor, fine.ratio, 1.0 - delta, (1.0 - delta) - fine.ratio, 0.0);
    r.note = "ratio " + fmt(fine.ratio) + " at n = " + std::to_string(n) + ", " + fmt(coarse.ratio) +
             " at n = " + std::to_string(n / 2) + "; delta(h) = " + fmt(delta);
  }
  r.diagnostic = true;
  r.grid = "n=" + std::to_string(n) + " L=" + fmt(length);
  r.field_id = b.name;
  return r;
}

std::vector<Bump> gn_bump_fixtures(double length) {
  const double L = length;
  const Vec3 c{L / 2, L / 2, L / 2};
  return {
      {"radial-cubic", Bump::Profile::Cubic, c, {L / 4, L / 4, L / 4}, 1.0},
      {"radial-exponential", Bump::Profile::Exponential, c, {L / 4, L / 4, L / 4}, 1.0},
      {"ellipsoid-cubic", Bump::Profile::Cubic, c, {L / 4, L / 6, L / 8}, 2.0},
      {"radial-quadratic", Bump::Profile::Quadratic, c, {L / 5, L / 5, L / 5}, 0.5},
      {"ellipsoid-exponential", Bump::Profile::Exponential, {0.45 * L, 0.55 * L, 0.5 * L}, {L / 5, L / 4, L / 7}, 1.0},
  };
}

std::vector<CheckReport> certify_suite(std::uint64_t seed) {
  std::vector<CheckReport> out;
  const PeetreSearchResult peetre = peetre_certify(seed);
  out.push_back(peetre.bracket);
  out.push_back(peetre.tau2);
  out.push_back(hadamard_cross_certify(seed));
  out.push_back(holder_cross_certify(seed));
  out.push_back(young_star_campaign(seed));
  out.push_back(power_inequality_certify());
  for (auto& r : lattice_split_campaign(seed)) out.push_back(std::move(r));
  for (auto& r : submultiplicativity_certify({0.0, 0.5, 1.0, 2.5}, seed)) out.push_back(std::move(r));
  for (const Bump& b : gn_bump_fixtures(2.0 * kPi)) out.push_back(gn_isoperimetric_diagnostic(b, 2.0 * kPi));
  return out;
}

}  // namespace wiener
