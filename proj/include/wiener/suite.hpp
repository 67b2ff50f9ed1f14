#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wiener/check_report.hpp"
#include "wiener/nse.hpp"
#include "wiener/solutions.hpp"

namespace wiener {

/// Schema violations, one message per offending JSON path.
class ManifestError : public std::runtime_error {
 public:
  explicit ManifestError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct ShearProfile {
  std::vector<ShearMode> modes;
  int component = 0;
  int variable = 1;
};

struct CorpusEntry {
  enum class Generator { RandomDivfree, Shear, Harmonic };
  Generator generator = Generator::RandomDivfree;
  /// Random fields: explicit seeds, or `count` seeds starting at the master seed.
  std::vector<std::uint64_t> seeds;
  int count = 20;
  double radius_low = 2.0;
  double radius_high = 5.0;
  double amplitude = 1.0;
  /// Shear profiles.
  std::vector<ShearProfile> profiles;
  /// Harmonic gradients: sample points per fixture.
  int points = 1000;
  /// Overrides the manifest viscosity when set (> 0).
  double nu = 0.0;
};

struct SuiteManifest {
  int n = 32;
  double box_length = 6.283185307179586;
  /// <= 0 means n / 3.
  int dealias_limit = 0;
  std::uint64_t seed = 0;
  double nu = 0.1;
  /// Any of identity, certify, bands, bootstrap, units, all.
  std::vector<std::string> suites{"all"};
  std::vector<CorpusEntry> corpus;
  /// Tolerance overrides by family: identity, pointwise, conditional,
  /// bootstrap, bands, scaling, sublevel.
  std::map<std::string, double> tolerances;
  std::string out_dir = "wiener-out";
  int jobs = 1;
  bool strict = false;

  GridSpec grid() const;
  bool selects(const std::string& suite) const;
  double tolerance(const std::string& family, double fallback) const;
};

/// n = 32 on a 2π box: 20 random divergence-free fields with band (2, 5), a
/// three-member shear family and the five harmonic gradients, full suite.
SuiteManifest default_manifest();

/// Throws ManifestError listing every violation; unknown keys are rejected.
SuiteManifest parse_manifest(const nlohmann::json& j);
nlohmann::json manifest_to_json(const SuiteManifest& m);

/// Grid states of the corpus in manifest order (harmonic fixtures excluded).
std::vector<NseState> build_corpus_states(const SuiteManifest& m);

struct SuiteResult {
  std::vector<CheckReport> reports;
  std::size_t hard_failures = 0;
  std::size_t diagnostic_failures = 0;
  /// 0 iff every hard assertion passes; diagnostics count only under strict.
  int exit_code = 0;
};

/// Runs the selected checks on a pool of m.jobs workers; reports are sorted
/// by (check_id, field_id, grid) so the output does not depend on scheduling.
SuiteResult run_suite(const SuiteManifest& m);

/// reports.jsonl (one CheckReport per line) and summary.csv
/// (checks, pass, fail and diagnostic counts per anchor) under dir.
void write_suite_outputs(const SuiteResult& r, const std::filesystem::path& dir);

/// Kernel commutator against the direct one on 16³ (2π box, β = 1 − α with α
/// low-pass (1, 7), w and u random with |m_i| <= 3) at θ-orders 2, 4, 8, plus
/// a monotone-decay report. Orders 2 and 4 are diagnostics.
std::vector<CheckReport> commutator_convergence_checks(std::uint64_t seed = 0);

/// Sublevel resolution sweep for random_divfree_field(seed, band, amplitude 1)
/// on boxes of side L at the resolutions ns (dealias limit n/3), with
/// ε = 0.3 (−min Q) taken from the unshifted state on the first grid.
SublevelSweep random_field_sublevel_sweep(std::uint64_t seed, double radius_low, double radius_high, double nu,
                                          double box_length, const std::vector<int>& ns, std::uint64_t shift_seed = 0);

/// Physical samples of a corpus field: CSV with header x1,x2,x3,v1,v2,v3 and
/// n³ rows, or the raw binary pair. Throws InvalidInput for unknown ids.
void dump_field(const SuiteManifest& m, const std::string& field_id, const std::string& format,
                const std::filesystem::path& out);

/// Plot-ready rows parameter,lhs,rhs,residual for a check family:
/// "commutator" (quadrature orders 2..16), "sublevel" (grids 32 and 64) or
/// "gn" (resolutions 16..128 for the radial cubic bump).
void plot_data(const SuiteManifest& m, const std::string& family, std::ostream& os);

}  // namespace wiener
