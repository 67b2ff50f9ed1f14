#pragma once

#include <cstddef>
#include <string>

#include "wiener/vec3.hpp"

namespace wiener {

/// Integer lattice coordinates of a Fourier mode; the physical wavevector is
/// (2π/L)·(m1, m2, m3).
struct Wavevector {
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;

  friend bool operator==(const Wavevector&, const Wavevector&) = default;
  friend auto operator<=>(const Wavevector&, const Wavevector&) = default;

  Wavevector operator-() const { return {-m1, -m2, -m3}; }
  int max_abs() const;
  int norm2() const { return m1 * m1 + m2 * m2 + m3 * m3; }
};

/// Uniform discretisation of the periodic box [0, L)^3 with n nodes per axis.
///
/// Storage order is x1-fastest: node (i, j, l) lives at i + n (j + n l). FFT
/// slot s carries the integer wave index s for s <= n/2 and s - n otherwise,
/// so every index lies in (-n/2, n/2]. Modes with some |index| above the
/// dealias limit are dropped by every product.
class GridSpec {
 public:
  GridSpec(int n_per_axis, double box_length, int dealias_limit);

  /// n = 32, L = 2π, dealias limit 10.
  static GridSpec desk_scale();
  /// Largest admissible dealias limit, n/2 - 1.
  static GridSpec with_max_dealias(int n_per_axis, double box_length);

  int n() const { return n_; }
  double length() const { return length_; }
  int dealias_limit() const { return dealias_limit_; }

  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  double spacing() const { return length_ / n_; }
  double cell_volume() const;
  double volume() const { return length_ * length_ * length_; }
  double wavenumber_unit() const;

  int wave_index(int slot) const { return slot <= n_ / 2 ? slot : slot - n_; }
  int slot(int wave_index) const { return ((wave_index % n_) + n_) % n_; }

  std::size_t linear(int i, int j, int l) const {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(n_) * (j + static_cast<std::size_t>(n_) * l);
  }
  std::size_t linear(const Wavevector& m) const { return linear(slot(m.m1), slot(m.m2), slot(m.m3)); }
  Wavevector mode_at(std::size_t linear_index) const;
  Vec3 node(std::size_t linear_index) const;
  Vec3 wavevector(const Wavevector& m) const;

  bool retained(const Wavevector& m) const { return m.max_abs() <= dealias_limit_; }
  /// True when the mode has an index equal to n/2 (its own reality partner).
  bool on_nyquist_plane(const Wavevector& m) const;

  std::string describe() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int n_;
  double length_;
  int dealias_limit_;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace wiener
