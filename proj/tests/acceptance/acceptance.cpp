// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wiener/certify.hpp"
#include "wiener/nse.hpp"
#include "wiener/solutions.hpp"
#include "wiener/suite.hpp"
#include "wiener/transform.hpp"
#include "wiener/units.hpp"

using namespace wiener;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Counts reports and remembers the first failure.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void add(const CheckReport& r, bool ok) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) {
      std::ostringstream os;
      os << r.check_id << " [" << r.field_id << "] residual " << r.residual << " tol " << r.tolerance;
      first_failure = os.str();
    }
  }
  void add(const CheckReport& r) { add(r, r.pass); }
  void add_all(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

int failed_criteria = 0;

void line(int id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failed_criteria;
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string summary(const Outcome& o, double secs) {
  std::ostringstream os;
  os << o.checks << " checks, " << o.failures << " failures, " << secs << " s";
  if (!o.first_failure.empty()) os << "; first failure " << o.first_failure;
  return os.str();
}

void run(int id, const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    line(id, pass, what, detail);
  } catch (const std::exception& e) {
    line(id, false, what, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  const SuiteManifest manifest = default_manifest();
  const auto built = Clock::now();
  const std::vector<NseState> states = build_corpus_states(manifest);
  const double build_secs = seconds_since(built);
  const auto harmonics = harmonic_gradient_fixtures();
  const auto points = sample_points(0, 1000);
  const double nu = manifest.nu;

  run(1, "unconditional identity suite at relative 1e-10, n=32 corpus, < 30 s", [&] {
    const auto t = Clock::now();
    Outcome o;
    for (const NseState& s : states)
      for (const auto& r : unconditional_identity_suite(s.v, s.field_id)) o.add(r, r.pass && r.tolerance <= 1e-10);
    for (std::size_t i = 0; i < harmonics.size(); ++i)
      for (const auto& r : harmonic_identity_suite(harmonics[i], nu, points, "harmonic-" + std::to_string(i)))
        if (r.check_id.find("/conditional/") == std::string::npos) o.add(r, r.pass && r.tolerance <= 1e-10);
    const double secs = seconds_since(t) + build_secs;
    return std::pair{o.ok() && secs < 30.0, summary(o, secs) + " including corpus construction"};
  });

  run(2, "conditional identity suite with manufactured forcing at 1e-9", [&] {
    const auto t = Clock::now();
    Outcome o;
    for (const NseState& s : states)
      for (const auto& r : conditional_identity_suite(s)) o.add(r, r.pass && r.tolerance <= 1e-9);
    for (std::size_t i = 0; i < harmonics.size(); ++i)
      for (const auto& r : harmonic_identity_suite(harmonics[i], nu, points, "harmonic-" + std::to_string(i)))
        if (r.check_id.find("/conditional/") != std::string::npos) o.add(r, r.pass && r.tolerance <= 1e-9);
    return std::pair{o.ok(), summary(o, seconds_since(t))};
  });

  run(3, "Peetre bracket contains 4/3 within 1e-6 for 10 seeds; tau = 2 has no violations over 1e5 pairs; < 5 s", [&] {
    const auto t = Clock::now();
    Outcome o;
    double lo = 0.0, hi = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PeetreSearchResult p = peetre_certify(seed, 100000, 1e-6);
      o.add(p.bracket, p.bracket.pass && p.bracket_low <= 4.0 / 3.0 && 4.0 / 3.0 <= p.bracket_high &&
                           p.bracket_high - p.bracket_low <= 1e-6);
      o.add(p.tau2, p.tau2.pass && p.tau2_violations == 0 && p.samples >= 100000);
      lo = p.bracket_low;
      hi = p.bracket_high;
    }
    const double secs = seconds_since(t);
    std::ostringstream os;
    os.precision(10);
    os << "last bracket [" << lo << ", " << hi << "]; " << summary(o, secs);
    return std::pair{o.ok() && secs < 5.0, os.str()};
  });

  run(4, "lattice-exact certificates, >= 1e3 instances each, rounding tolerance 1e-12", [&] {
    const auto t = Clock::now();
    Outcome o;
    auto instances_ok = [](const CheckReport& r) {
      const auto pos = r.note.find("instances = ");
      return pos != std::string::npos && std::stoul(r.note.substr(pos + 12)) >= 1000;
    };
    std::vector<CheckReport> rs = submultiplicativity_certify({0.0, 0.5, 1.0, 2.5}, 0, 1000);
    rs.push_back(hadamard_cross_certify(0, 10000));
    rs.push_back(holder_cross_certify(0, 1000));
    for (auto& r : lattice_split_campaign(0, 1000)) rs.push_back(r);
    rs.push_back(power_inequality_certify());
    for (const auto& r : rs) o.add(r, r.pass && r.tolerance <= 1e-12 && instances_ok(r));
    return std::pair{o.ok() && o.checks == 10, summary(o, seconds_since(t))};
  });

  run(5, "bootstrap spectral residual <= 1e-10 and cascade for kappa in {0, 0.4, 1}", [&] {
    const auto t = Clock::now();
    Outcome o;
    for (const NseState& s : states) {
      for (double kappa : {0.0, 0.4, 1.0}) {
        const BootstrapAudit a = bootstrap_spectral_audit(s, kappa);
        o.add(a.spectral_equation, a.spectral_equation.pass && a.spectral_equation.residual <= 1e-10);
        o.add(a.cascade);
      }
    }
    return std::pair{o.ok(), summary(o, seconds_since(t))};
  });

  run(6, "kernel commutator agrees with the direct one to 1e-3 at order 8, monotone over orders 2, 4, 8, < 120 s", [&] {
    const auto t = Clock::now();
    const auto rs = commutator_convergence_checks(0);
    Outcome o;
    std::ostringstream os;
    for (const auto& r : rs) {
      const bool order8 = r.check_id.find("order-8") != std::string::npos;
      const bool mono = r.check_id.find("monotone") != std::string::npos;
      if (order8) o.add(r, r.pass && r.residual <= 1e-3);
      if (mono) o.add(r);
      if (!mono) os << r.check_id.substr(r.check_id.rfind('/') + 1) << " error " << r.residual << "; ";
    }
    const double secs = seconds_since(t);
    return std::pair{o.ok() && o.checks == 2 && secs < 120.0, os.str() + summary(o, secs)};
  });

  run(7, "scaling covariance with lambda = 2 on 5 corpus states to 1e-10", [&] {
    const auto t = Clock::now();
    Outcome o;
    for (std::size_t i = 0; i < 5 && i < states.size(); ++i) {
      const CheckReport r = scaling_covariance_check(states[i], 2, 1e-10);
      o.add(r, r.pass && r.tolerance <= 1e-10);
    }
    return std::pair{o.ok() && o.checks == 5, summary(o, seconds_since(t))};
  });

  run(8, "units checker reproduces the bracketed unit computations exactly", [&] {
    const auto t = Clock::now();
    Outcome o;
    for (const auto& r : standard_unit_audits()) o.add(r, r.pass && r.tolerance == 0.0);
    return std::pair{o.ok() && o.checks >= 12, summary(o, seconds_since(t))};
  });

  run(9, "sublevel energy discrepancy decays at least first order from n=32 to n=64, sign-indefinite Q", [&] {
    const auto t = Clock::now();
    const double L = 2.0 * std::numbers::pi;
    const std::uint64_t seed = 0;
    const double r_lo = 1.0, r_hi = 1.8, visc = 0.1;
    // Q must take both signs.
    const GridSpec g(32, L, 10);
    const NseState s = make_manufactured_state(random_divfree_field(g, seed, r_lo, r_hi, 1.0), visc, "random-0");
    const auto q = inverse(s.q).samples();
    const auto [qmin, qmax] = std::minmax_element(q.begin(), q.end());
    const SublevelSweep sw = random_field_sublevel_sweep(seed, r_lo, r_hi, visc, L, {32, 64}, 0);
    std::ostringstream os;
    os << "min Q " << *qmin << ", max Q " << *qmax << "; rms discrepancy " << sw.rms_discrepancy[0] << " -> "
       << sw.rms_discrepancy[1] << ", order " << sw.observed_order[0] << ", " << seconds_since(t) << " s";
    return std::pair{sw.report.pass && sw.observed_order[0] >= 1.0 && *qmin < 0.0 && *qmax > 0.0, os.str()};
  });

  run(10, "GN isoperimetric ratio >= 1 for 5 bump shapes at n=64 (diagnostic)", [&] {
    const auto t = Clock::now();
    const double L = 2.0 * std::numbers::pi;
    Outcome o;
    double worst = 1e300;
    for (const Bump& b : gn_bump_fixtures(L)) {
      const CheckReport r = gn_isoperimetric_diagnostic(b, L, 64);
      o.add(r, r.pass && r.lhs >= 1.0);
      worst = std::min(worst, r.lhs);
    }
    std::ostringstream os;
    os << "smallest ratio " << worst << "; " << summary(o, seconds_since(t));
    return std::pair{o.ok() && o.checks == 5, os.str()};
  });

  std::printf("%d of 10 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
