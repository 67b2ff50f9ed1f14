#include "wiener/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "wiener/error.hpp"

namespace wiener {

Polynomial3 Polynomial3::constant(double c) { return monomial(c, {0, 0, 0}); }

Polynomial3 Polynomial3::variable(int axis) {
  if (axis < 0 || axis > 2) throw InvalidInput("Polynomial3::variable: axis must be 0, 1 or 2");
  Exponent e{0, 0, 0};
  e[axis] = 1;
  return monomial(1.0, e);
}

Polynomial3 Polynomial3::monomial(double c, Exponent e) {
  Polynomial3 p;
  p.add_term(c, e);
  return p;
}

Polynomial3& Polynomial3::add_term(double c, Exponent e) {
  for (int a : e)
    if (a < 0) throw InvalidInput("Polynomial3: negative exponent");
  const double sum = terms_[e] + c;
  if (sum == 0.0) terms_.erase(e);
  else terms_[e] = sum;
  return *this;
}

double Polynomial3::operator()(const Vec3& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < e[a]; ++k) t *= x[a];
    s += t;
  }
  return s;
}

Polynomial3 Polynomial3::derivative(int axis) const {
  Polynomial3 out;
  for (const auto& [key, c] : terms_) {
    if (key[axis] == 0) continue;
    Exponent e = key;
    const double f = c * e[axis];
    --e[axis];
    out.add_term(f, e);
  }
  return out;
}

Polynomial3 Polynomial3::laplacian() const {
  Polynomial3 out;
  for (int a = 0; a < 3; ++a) out += derivative(a).derivative(a);
  return out;
}

Polynomial3& Polynomial3::operator+=(const Polynomial3& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

Polynomial3& Polynomial3::operator-=(const Polynomial3& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

Polynomial3 operator*(const Polynomial3& a, const Polynomial3& b) {
  Polynomial3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
  return out;
}

Polynomial3 operator*(double s, const Polynomial3& a) {
  Polynomial3 out;
  for (const auto& [e, c] : a.terms_) out.add_term(s * c, e);
  return out;
}

int Polynomial3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

std::string Polynomial3::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = e[0] + e[1] + e[2] == 0;
    double mag = std::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1.0 || constant_term) {
      os << mag;
      if (!constant_term) os << " ";
    }
    bool any = false;
    for (int a = 0; a < 3; ++a) {
      if (e[a] == 0) continue;
      if (any) os << " ";
      os << "x" << (a + 1);
      if (e[a] > 1) os << "^" << e[a];
      any = true;
    }
  }
  return os.str();
}

}  // namespace wiener
