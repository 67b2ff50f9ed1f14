#include "wiener/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wiener/error.hpp"

namespace wiener {

int Wavevector::max_abs() const { return std::max({std::abs(m1), std::abs(m2), std::abs(m3)}); }

GridSpec::GridSpec(int n_per_axis, double box_length, int dealias_limit)
    : n_(n_per_axis), length_(box_length), dealias_limit_(dealias_limit) {
  if (n_ < 4 || n_ % 2 != 0 || (n_ & (n_ - 1)) != 0) {
    throw InvalidInput("GridSpec: n_per_axis must be a power of two >= 4, got " + std::to_string(n_));
  }
  if (!(std::isfinite(length_) && length_ > 0.0)) {
    throw InvalidInput("GridSpec: box_length must be positive and finite");
  }
  if (dealias_limit_ < 1 || dealias_limit_ > n_ / 2 - 1) {
    throw InvalidInput("GridSpec: dealias_limit must lie in [1, n/2 - 1], got " + std::to_string(dealias_limit_));
  }
}

GridSpec GridSpec::desk_scale() { return GridSpec(32, 2.0 * std::numbers::pi, 10); }

GridSpec GridSpec::with_max_dealias(int n_per_axis, double box_length) {
  return GridSpec(n_per_axis, box_length, n_per_axis / 2 - 1);
}

double GridSpec::cell_volume() const {
  const double h = spacing();
  return h * h * h;
}

double GridSpec::wavenumber_unit() const { return 2.0 * std::numbers::pi / length_; }

Wavevector GridSpec::mode_at(std::size_t linear_index) const {
  const auto n = static_cast<std::size_t>(n_);
  const int i = static_cast<int>(linear_index % n);
  const int j = static_cast<int>((linear_index / n) % n);
  const int l = static_cast<int>(linear_index / (n * n));
  return {wave_index(i), wave_index(j), wave_index(l)};
}

Vec3 GridSpec::node(std::size_t linear_index) const {
  const auto n = static_cast<std::size_t>(n_);
  const double h = spacing();
  return {h * static_cast<double>(linear_index % n), h * static_cast<double>((linear_index / n) % n),
          h * static_cast<double>(linear_index / (n * n))};
}

Vec3 GridSpec::wavevector(const Wavevector& m) const {
  const double u = wavenumber_unit();
  return {u * m.m1, u * m.m2, u * m.m3};
}

bool GridSpec::on_nyquist_plane(const Wavevector& m) const {
  const int half = n_ / 2;
  return m.m1 == half || m.m2 == half || m.m3 == half;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << n_ << " L=" << length_ << " dealias=" << dealias_limit_;
  return os.str();
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) {
    throw GridMismatch(std::string(what) + ": operands live on different grids (" + a.describe() + " vs " +
                       b.describe() + ")");
  }
}

}  // namespace wiener
