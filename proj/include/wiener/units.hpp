#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wiener {

struct CheckReport;

using Rational = boost::rational<std::int64_t>;

/// Physical dimension L^a T^b with exact rational exponents.
struct Dimension {
  Rational length{0};
  Rational time{0};

  static Dimension none() { return {}; }
  static Dimension length_only(Rational a) { return {a, 0}; }
  /// [v] = L T^-1
  static Dimension velocity() { return {1, -1}; }
  /// [ν] = L^2 T^-1 (the stokes)
  static Dimension viscosity() { return {2, -1}; }
  /// kinematic pressure, L^2 T^-2
  static Dimension pressure() { return {2, -2}; }

  Dimension operator*(const Dimension& o) const { return {length + o.length, time + o.time}; }
  Dimension operator/(const Dimension& o) const { return {length - o.length, time - o.time}; }
  Dimension pow(Rational e) const { return {length * e, time * e}; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

  std::string str() const;
};

/// Expression over dimensioned quantities. Sums demand equal dimensions;
/// derivatives contribute L^-1, an L^p norm over R^d contributes L^{d/p},
/// and a Fourier transform over R^d contributes L^d.
class UnitExpr {
 public:
  /// Integration variable of a norm or integral: x (dimension L) or ξ (L^-1).
  enum class Space { Physical, Frequency };

  static UnitExpr quantity(std::string symbol, Dimension dim);
  /// Dimensionless numeric constant (universal constants such as σ₀).
  static UnitExpr constant(std::string symbol);
  static UnitExpr sum(std::vector<UnitExpr> terms);
  static UnitExpr product(std::vector<UnitExpr> factors);

  UnitExpr operator*(const UnitExpr& o) const;
  UnitExpr operator+(const UnitExpr& o) const;
  UnitExpr pow(Rational exponent) const;
  UnitExpr derivative(int order = 1) const;
  /// p = nullopt means L^∞.
  UnitExpr lp_norm(std::optional<Rational> p, int dim = 3, Space space = Space::Physical) const;
  UnitExpr fourier(int dim = 3) const;
  UnitExpr integral(int dim = 3, Space space = Space::Physical) const;

  /// Throws UnitsError when a sum mixes dimensions.
  Dimension dimension() const;
  std::string str() const;

  struct Node;

 private:
  explicit UnitExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Passes iff both sides evaluate to the same Dimension exactly.
CheckReport units_check(const std::string& check_id, const std::string& anchor, const UnitExpr& lhs,
                        const UnitExpr& rhs);

/// The bracketed unit computations used to audit the stationary Navier-Stokes
/// estimates: viscous vs convective term, curl norms, Fourier data, and the
/// Wiener-tail inequality.
std::vector<CheckReport> standard_unit_audits();

}  // namespace wiener
