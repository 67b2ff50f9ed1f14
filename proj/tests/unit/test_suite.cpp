#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wiener/error.hpp"
#include "wiener/suite.hpp"

using namespace wiener;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("wiener-test-" + name);
  std::filesystem::remove_all(p);
  return p;
}

SuiteManifest small_manifest() {
  return parse_manifest(json::parse(R"({
    "grid": {"n": 16},
    "suite": ["identity", "bootstrap"],
    "corpus": [
      {"generator": "random-divfree", "seeds": [3, 4], "radius_low": 1, "radius_high": 2.5},
      {"generator": "shear", "profiles": [{"modes": [{"m": 1, "sin": 1}]}]},
      {"generator": "harmonic", "points": 50}
    ]
  })"));
}

}  // namespace

TEST_CASE("default manifest round-trips through JSON") {
  const SuiteManifest m = default_manifest();
  CHECK(m.n == 32);
  CHECK(m.grid().dealias_limit() == 10);
  const json j = manifest_to_json(m);
  CHECK(manifest_to_json(parse_manifest(j)) == j);
}

TEST_CASE("manifest validation reports every offending path") {
  try {
    parse_manifest(json::parse(R"({"grid": {"n": 32, "bogus": 1}, "colour": 3, "suite": "nope",
                                   "corpus": [{"generator": "spiral"}], "tolerances": {"identity": -1}})"));
    FAIL("expected ManifestError");
  } catch (const ManifestError& e) {
    const auto& d = e.diagnostics();
    auto has = [&](const std::string& s) {
      for (const auto& x : d)
        if (x.find(s) != std::string::npos) return true;
      return false;
    };
    CHECK(has("/grid/bogus: unknown key"));
    CHECK(has("/colour: unknown key"));
    CHECK(has("unknown suite 'nope'"));
    CHECK(has("/corpus/0/generator"));
    CHECK(has("/tolerances/identity"));
  }
  CHECK_THROWS_AS(parse_manifest(json::parse(R"({"grid": {"n": 12}})")), ManifestError);
  CHECK_THROWS_AS(parse_manifest(json::parse(R"([1, 2])")), ManifestError);
}

TEST_CASE("units-only run") {
  SuiteManifest m = default_manifest();
  m.suites = {"units"};
  const SuiteResult r = run_suite(m);
  CHECK(r.exit_code == 0);
  CHECK(r.reports.size() == 12);
}

TEST_CASE("small corpus passes and is scheduling independent") {
  SuiteManifest m = small_manifest();
  const SuiteResult one = run_suite(m);
  CHECK(one.exit_code == 0);
  for (const auto& r : one.reports) CHECK_MESSAGE((r.pass || r.diagnostic), r.check_id << " " << r.field_id << " " << r.note);
  m.jobs = 3;
  const SuiteResult three = run_suite(m);
  REQUIRE(one.reports.size() == three.reports.size());
  const auto d1 = scratch("jobs1"), d3 = scratch("jobs3");
  write_suite_outputs(one, d1);
  write_suite_outputs(three, d3);
  CHECK(slurp(d1 / "reports.jsonl") == slurp(d3 / "reports.jsonl"));
  CHECK(slurp(d1 / "summary.csv") == slurp(d3 / "summary.csv"));
  // Canonical order.
  for (std::size_t i = 1; i < one.reports.size(); ++i) CHECK(one.reports[i - 1].check_id <= one.reports[i].check_id);
}

TEST_CASE("impossible tolerance fails the run") {
  SuiteManifest m = small_manifest();
  m.suites = {"identity"};
  m.tolerances["identity"] = 0.0;
  const SuiteResult r = run_suite(m);
  CHECK(r.exit_code == 1);
  CHECK(r.hard_failures > 0);
}

TEST_CASE("dump and plot are deterministic") {
  const SuiteManifest m = small_manifest();
  const auto dir = scratch("dump");
  std::filesystem::create_directories(dir);
  dump_field(m, "shear-0", "csv", dir / "a.csv");
  dump_field(m, "shear-0", "csv", dir / "b.csv");
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.rfind("x1,x2,x3,v1,v2,v3\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 16 * 16 * 16 + 1);
  dump_field(m, "random-3", "raw", dir / "r");
  CHECK(std::filesystem::file_size(dir / "r.bin") == 3 * 16 * 16 * 16 * 8);
  CHECK_THROWS_AS(dump_field(m, "random-99", "csv", dir / "c.csv"), InvalidInput);
  CHECK_THROWS_AS(dump_field(m, "shear-0", "xml", dir / "c.csv"), InvalidInput);

  std::ostringstream p1, p2;
  plot_data(m, "commutator", p1);
  plot_data(m, "commutator", p2);
  CHECK(p1.str() == p2.str());
  // Residual column decays with the quadrature order.
  std::istringstream is(p1.str());
  std::string line;
  std::getline(is, line);
  double prev = 1e300;
  while (std::getline(is, line)) {
    const double res = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(res < prev);
    prev = res;
  }
  CHECK_THROWS_AS(plot_data(m, "nope", p1), InvalidInput);
}
