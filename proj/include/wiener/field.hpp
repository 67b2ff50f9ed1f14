#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wiener/grid.hpp"
#include "wiener/units.hpp"
#include "wiener/vec3.hpp"

namespace wiener {

/// Number of components: 1 (scalar), 3 (vector) or 9 (rank-2 tensor, row-major
/// T_ij at index 3 i + j).
enum class Rank { Scalar = 1, Vector = 3, Tensor = 9 };

inline int components(Rank r) { return static_cast<int>(r); }
std::string rank_name(Rank r);

/// Real samples at the n^3 nodes, component-major: component c of node x is
/// at c * n^3 + x.
class PhysicalField {
 public:
  PhysicalField(GridSpec grid, Rank rank, Dimension units = {});
  PhysicalField(GridSpec grid, Rank rank, std::vector<double> samples, Dimension units = {});

  const GridSpec& grid() const { return grid_; }
  Rank rank() const { return rank_; }
  const Dimension& units() const { return units_; }
  void set_units(Dimension d) { units_ = d; }

  std::span<double> component(int c);
  std::span<const double> component(int c) const;
  double& at(int c, std::size_t node) { return data_[c * grid_.size() + node]; }
  double at(int c, std::size_t node) const { return data_[c * grid_.size() + node]; }
  Vec3 vec(std::size_t node) const;
  void set_vec(std::size_t node, const Vec3& v);

  const std::vector<double>& samples() const { return data_; }
  std::vector<double>& samples() { return data_; }

  /// Largest pointwise magnitude (Euclidean over components).
  double max_magnitude() const;
  bool all_finite() const;

 private:
  GridSpec grid_;
  Rank rank_;
  Dimension units_;
  std::vector<double> data_;
};

/// Fourier-series coefficients c_k with v(x) = Σ c_k e^{ik·x}, stored in FFT
/// slot order with the same component-major layout as PhysicalField.
class SpectralField {
 public:
  SpectralField(GridSpec grid, Rank rank, Dimension units = {});

  const GridSpec& grid() const { return grid_; }
  Rank rank() const { return rank_; }
  const Dimension& units() const { return units_; }
  void set_units(Dimension d) { units_ = d; }
  /// Flag asserting c_{-k} = conj(c_k); inverse transforms check it.
  bool real() const { return real_; }
  void set_real(bool r) { real_ = r; }
  /// Flag for the divergence-free invariant (vector fields only).
  bool divergence_free() const { return div_free_; }
  void set_divergence_free(bool d) { div_free_ = d; }

  std::span<Complex> component(int c);
  std::span<const Complex> component(int c) const;
  Complex& at(int c, std::size_t slot) { return data_[c * grid_.size() + slot]; }
  Complex at(int c, std::size_t slot) const { return data_[c * grid_.size() + slot]; }
  Complex& at(int c, const Wavevector& m) { return at(c, grid_.linear(m)); }
  Complex at(int c, const Wavevector& m) const { return at(c, grid_.linear(m)); }
  CVec3 vec(std::size_t slot) const;
  void set_vec(std::size_t slot, const CVec3& v);

  const std::vector<Complex>& coefficients() const { return data_; }
  std::vector<Complex>& coefficients() { return data_; }

  /// Euclidean magnitude of the coefficient (over components) at a slot.
  double magnitude(std::size_t slot) const;
  double max_magnitude() const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);

 private:
  GridSpec grid_;
  Rank rank_;
  Dimension units_;
  bool real_ = true;
  bool div_free_ = false;
  std::vector<Complex> data_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Largest coefficientwise difference relative to the larger operand magnitude.
double relative_max_difference(const SpectralField& a, const SpectralField& b);
/// Largest pointwise difference relative to the larger operand magnitude.
double relative_max_difference(const PhysicalField& a, const PhysicalField& b);

void require_rank(Rank got, Rank want, const char* what);

}  // namespace wiener
