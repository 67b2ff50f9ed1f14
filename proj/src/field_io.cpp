#include "wiener/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wiener/error.hpp"

namespace wiener {

void write_spectral_csv(std::ostream& os, const SpectralField& c) {
  const GridSpec& g = c.grid();
  os << "k1,k2,k3,component,re,im\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Wavevector m = g.mode_at(k);
    for (int comp = 0; comp < components(c.rank()); ++comp) {
      line.str("");
      const Complex z = c.at(comp, k);
      line << m.m1 << ',' << m.m2 << ',' << m.m3 << ',' << comp << ',' << z.real() << ',' << z.imag() << '\n';
      os << line.str();
    }
  }
}

SpectralField read_spectral_csv(std::istream& is, const GridSpec& grid, Rank rank) {
  std::string line;
  if (!std::getline(is, line) || line != "k1,k2,k3,component,re,im") {
    throw InvalidInput("read_spectral_csv: missing or unexpected header");
  }
  SpectralField out(grid, rank);
  const int half = grid.n() / 2;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream in(line);
    Wavevector m;
    int comp = 0;
    double re = 0.0, im = 0.0;
    char sep[5];
    if (!(in >> m.m1 >> sep[0] >> m.m2 >> sep[1] >> m.m3 >> sep[2] >> comp >> sep[3] >> re >> sep[4] >> im)) {
      throw InvalidInput("read_spectral_csv: malformed row " + std::to_string(row));
    }
    for (int v : {m.m1, m.m2, m.m3}) {
      if (v <= -half || v > half) throw InvalidInput("read_spectral_csv: wave index out of range at row " +
                                                     std::to_string(row));
    }
    if (comp < 0 || comp >= components(rank)) {
      throw InvalidInput("read_spectral_csv: component out of range at row " + std::to_string(row));
    }
    out.at(comp, m) = Complex(re, im);
  }
  return out;
}

namespace {

std::uint64_t to_little_endian(std::uint64_t x) {
  if constexpr (std::endian::native == std::endian::little) return x;
  return __builtin_bswap64(x);
}

}  // namespace

void write_raw(const std::filesystem::path& stem, const PhysicalField& v) {
  const GridSpec& g = v.grid();
  nlohmann::json header = {{"n_per_axis", g.n()},
                           {"box_length", g.length()},
                           {"dealias_limit", g.dealias_limit()},
                           {"rank", rank_name(v.rank())},
                           {"components", components(v.rank())},
                           {"dtype", "float64-le"},
                           {"order", "component-major, x1-fastest"},
                           {"units", v.units().str()}};
  std::filesystem::path json_path = stem, bin_path = stem;
  json_path += ".json";
  bin_path += ".bin";
  std::ofstream(json_path) << header.dump(2) << '\n';
  std::ofstream bin(bin_path, std::ios::binary);
  for (double x : v.samples()) {
    const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(x));
    bin.write(reinterpret_cast<const char*>(&bits), sizeof bits);
  }
  if (!bin) throw Error("write_raw: failed writing " + bin_path.string());
}

PhysicalField read_raw(const std::filesystem::path& stem) {
  std::filesystem::path json_path = stem, bin_path = stem;
  json_path += ".json";
  bin_path += ".bin";
  std::ifstream hj(json_path);
  if (!hj) throw InvalidInput("read_raw: cannot open " + json_path.string());
  const auto header = nlohmann::json::parse(hj);
  const GridSpec g(header.at("n_per_axis").get<int>(), header.at("box_length").get<double>(),
                   header.at("dealias_limit").get<int>());
  const int nc = header.at("components").get<int>();
  const Rank rank = nc == 1 ? Rank::Scalar : nc == 3 ? Rank::Vector : Rank::Tensor;
  std::vector<double> data(g.size() * nc);
  std::ifstream bin(bin_path, std::ios::binary);
  for (auto& x : data) {
    std::uint64_t bits = 0;
    if (!bin.read(reinterpret_cast<char*>(&bits), sizeof bits)) throw InvalidInput("read_raw: truncated data");
    x = std::bit_cast<double>(to_little_endian(bits));
  }
  return PhysicalField(g, rank, std::move(data));
}

}  // namespace wiener
