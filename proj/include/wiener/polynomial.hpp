#pragma once

#include <array>
#include <map>
#include <string>

#include "wiener/vec3.hpp"

namespace wiener {

/// Real polynomial in x1, x2, x3 with exact symbolic differentiation.
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class Polynomial3 {
 public:
  using Exponent = std::array<int, 3>;

  Polynomial3() = default;
  static Polynomial3 constant(double c);
  /// x_{axis+1}.
  static Polynomial3 variable(int axis);
  static Polynomial3 monomial(double c, Exponent e);

  Polynomial3& add_term(double c, Exponent e);

  double operator()(const Vec3& x) const;
  Polynomial3 derivative(int axis) const;
  Polynomial3 laplacian() const;

  Polynomial3& operator+=(const Polynomial3& o);
  Polynomial3& operator-=(const Polynomial3& o);
  friend Polynomial3 operator+(Polynomial3 a, const Polynomial3& b) { return a += b; }
  friend Polynomial3 operator-(Polynomial3 a, const Polynomial3& b) { return a -= b; }
  friend Polynomial3 operator*(const Polynomial3& a, const Polynomial3& b);
  friend Polynomial3 operator*(double s, const Polynomial3& a);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<Exponent, double>& terms() const { return terms_; }
  /// e.g. "x1^2 - x2^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  std::map<Exponent, double> terms_;
};

}  // namespace wiener
