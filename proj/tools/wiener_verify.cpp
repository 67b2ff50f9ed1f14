#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "wiener/error.hpp"
#include "wiener/suite.hpp"

namespace {

using namespace wiener;

struct Common {
  std::string manifest_path;
  std::optional<int> grid;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--manifest", c.manifest_path, "Suite manifest (JSON)")->check(CLI::ExistingFile);
  app->add_option("--grid", c.grid, "Nodes per axis (overrides the manifest)");
  app->add_option("--seed", c.seed, "Master seed (overrides the manifest)");
}

/// Manifest from file (or the default) with the flag overrides applied.
SuiteManifest load(const Common& c) {
  SuiteManifest m = default_manifest();
  if (!c.manifest_path.empty()) {
    std::ifstream is(c.manifest_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
      throw ManifestError({std::string("parse error: ") + e.what()});
    }
    m = parse_manifest(j);
  }
  if (c.grid) m.n = *c.grid;
  if (c.seed) m.seed = *c.seed;
  try {
    (void)m.grid();
  } catch (const Error& e) {
    throw ManifestError({std::string("/grid: ") + e.what()});
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for stationary Navier-Stokes identities and Wiener-algebra estimates"};
  app.require_subcommand(1);

  Common run_opts;
  std::vector<std::string> suites;
  std::string out_dir;
  std::optional<int> jobs;
  bool strict = false;
  auto* run = app.add_subcommand("run", "Run the selected suites and write reports.jsonl and summary.csv");
  add_common(run, run_opts);
  run->add_option("--suite", suites, "identity, certify, bands, bootstrap, units or all (repeatable)");
  run->add_option("--out", out_dir, "Output directory (overrides the manifest)");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
  run->add_flag("--strict", strict, "Treat diagnostic failures as failures");

  Common dump_opts;
  std::string field_id, format = "csv", dump_out;
  auto* dump = app.add_subcommand("dump", "Write the physical samples of a corpus field");
  add_common(dump, dump_opts);
  dump->add_option("--field", field_id, "Field id, e.g. random-3 or shear-0")->required();
  dump->add_option("--format", format, "csv or raw")->check(CLI::IsMember({"csv", "raw"}));
  dump->add_option("--out", dump_out, "Output file (raw: path stem)")->required();

  Common plot_opts;
  std::string family, plot_out;
  auto* plot = app.add_subcommand("plot", "Write parameter,lhs,rhs,residual rows for a check family");
  add_common(plot, plot_opts);
  plot->add_option("--family", family, "commutator, sublevel or gn")
      ->required()
      ->check(CLI::IsMember({"commutator", "sublevel", "gn"}));
  plot->add_option("--out", plot_out, "Output CSV (default stdout)");

  Common manifest_opts;
  std::string manifest_out;
  auto* manifest = app.add_subcommand("manifest", "Print the effective manifest as JSON");
  add_common(manifest, manifest_opts);
  manifest->add_option("--out", manifest_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      SuiteManifest m = load(run_opts);
      if (!suites.empty()) {
        nlohmann::json j = manifest_to_json(m);
        j["suite"] = suites;
        m = parse_manifest(j);
      }
      if (!out_dir.empty()) m.out_dir = out_dir;
      if (jobs) m.jobs = *jobs;
      if (strict) m.strict = true;
      const SuiteResult r = run_suite(m);
      write_suite_outputs(r, m.out_dir);
      for (const auto& rep : r.reports)
        if (!rep.pass) std::cerr << (rep.diagnostic ? "WARN " : "FAIL ") << rep.check_id << " [" << rep.field_id << "] " << rep.note << '\n';
      std::cout << r.reports.size() << " checks, " << r.hard_failures << " failed, " << r.diagnostic_failures
                << " diagnostic warnings; reports in " << m.out_dir << '\n';
      return r.exit_code;
    }
    if (*dump) {
      dump_field(load(dump_opts), field_id, format, dump_out);
      return 0;
    }
    if (*plot) {
      const SuiteManifest m = load(plot_opts);
      if (plot_out.empty()) {
        plot_data(m, family, std::cout);
      } else {
        std::ofstream os(plot_out, std::ios::binary);
        if (!os) throw Error("cannot write " + plot_out);
        plot_data(m, family, os);
      }
      return 0;
    }
    if (*manifest) {
      const std::string text = manifest_to_json(load(manifest_opts)).dump(2) + "\n";
      if (manifest_out.empty()) std::cout << text;
      else std::ofstream(manifest_out, std::ios::binary) << text;
      return 0;
    }
  } catch (const ManifestError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
