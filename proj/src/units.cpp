#include "wiener/units.hpp"

#include <sstream>
#include <variant>

#include "wiener/check_report.hpp"
#include "wiener/error.hpp"

namespace wiener {

namespace {

Rational variable_exponent(UnitExpr::Space space) { return space == UnitExpr::Space::Physical ? 1 : -1; }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace

std::string Dimension::str() const {
  // Compare against Rational operands: mixed rational/int comparisons recurse
  // under C++20 rewritten operators in some Boost releases.
  const Rational zero(0), one(1);
  if (length == zero && time == zero) return "1";
  std::string out;
  if (length != zero) out += length == one ? "L" : "L^" + rational_str(length);
  if (time != zero) {
    if (!out.empty()) out += " ";
    out += time == one ? "T" : "T^" + rational_str(time);
  }
  return out;
}

struct UnitExpr::Node {
  struct Leaf {
    std::string symbol;
    Dimension dim;
  };
  struct Sum {
    std::vector<UnitExpr> terms;
  };
  struct Product {
    std::vector<UnitExpr> factors;
  };
  struct Power {
    UnitExpr base;
    Rational exponent;
  };
  struct Derivative {
    UnitExpr arg;
    int order;
  };
  struct Norm {
    UnitExpr arg;
    std::optional<Rational> p;
    int dim;
    Space space;
  };
  struct Fourier {
    UnitExpr arg;
    int dim;
  };
  struct Integral {
    UnitExpr arg;
    int dim;
    Space space;
  };
  std::variant<Leaf, Sum, Product, Power, Derivative, Norm, Fourier, Integral> v;
};

UnitExpr UnitExpr::quantity(std::string symbol, Dimension dim) {
  return UnitExpr(std::make_shared<const Node>(Node{Node::Leaf{std::move(symbol), dim}}));
}

UnitExpr UnitExpr::constant(std::string symbol) { return quantity(std::move(symbol), Dimension::none()); }

UnitExpr UnitExpr::sum(std::vector<UnitExpr> terms) {
  if (terms.empty()) throw InvalidInput("UnitExpr::sum needs at least one term");
  return UnitExpr(std::make_shared<const Node>(Node{Node::Sum{std::move(terms)}}));
}

UnitExpr UnitExpr::product(std::vector<UnitExpr> factors) {
  if (factors.empty()) throw InvalidInput("UnitExpr::product needs at least one factor");
  return UnitExpr(std::make_shared<const Node>(Node{Node::Product{std::move(factors)}}));
}

UnitExpr UnitExpr::operator*(const UnitExpr& o) const { return product({*this, o}); }
UnitExpr UnitExpr::operator+(const UnitExpr& o) const { return sum({*this, o}); }

UnitExpr UnitExpr::pow(Rational exponent) const {
  return UnitExpr(std::make_shared<const Node>(Node{Node::Power{*this, exponent}}));
}

UnitExpr UnitExpr::derivative(int order) const {
  return UnitExpr(std::make_shared<const Node>(Node{Node::Derivative{*this, order}}));
}

UnitExpr UnitExpr::lp_norm(std::optional<Rational> p, int dim, Space space) const {
  if (p && *p < Rational(1)) throw InvalidInput("UnitExpr::lp_norm requires p >= 1");
  return UnitExpr(std::make_shared<const Node>(Node{Node::Norm{*this, p, dim, space}}));
}

UnitExpr UnitExpr::fourier(int dim) const {
  return UnitExpr(std::make_shared<const Node>(Node{Node::Fourier{*this, dim}}));
}

UnitExpr UnitExpr::integral(int dim, Space space) const {
  return UnitExpr(std::make_shared<const Node>(Node{Node::Integral{*this, dim, space}}));
}

Dimension UnitExpr::dimension() const {
  struct Visitor {
    Dimension operator()(const Node::Leaf& x) const { return x.dim; }
    Dimension operator()(const Node::Sum& x) const {
      const Dimension first = x.terms.front().dimension();
      for (const auto& t : x.terms) {
        const Dimension d = t.dimension();
        if (!(d == first)) {
          throw UnitsError("cannot add " + first.str() + " and " + d.str() + " in " + x.terms.front().str() +
                           " + " + t.str());
        }
      }
      return first;
    }
    Dimension operator()(const Node::Product& x) const {
      Dimension d;
      for (const auto& f : x.factors) d = d * f.dimension();
      return d;
    }
    Dimension operator()(const Node::Power& x) const { return x.base.dimension().pow(x.exponent); }
    Dimension operator()(const Node::Derivative& x) const {
      return x.arg.dimension() * Dimension::length_only(-x.order);
    }
    Dimension operator()(const Node::Norm& x) const {
      const Dimension inner = x.arg.dimension();
      if (!x.p) return inner;
      return inner * Dimension::length_only(variable_exponent(x.space) * Rational(x.dim) / *x.p);
    }
    Dimension operator()(const Node::Fourier& x) const { return x.arg.dimension() * Dimension::length_only(x.dim); }
    Dimension operator()(const Node::Integral& x) const {
      return x.arg.dimension() * Dimension::length_only(variable_exponent(x.space) * x.dim);
    }
  };
  return std::visit(Visitor{}, node_->v);
}

std::string UnitExpr::str() const {
  struct Visitor {
    std::string operator()(const Node::Leaf& x) const { return x.symbol; }
    std::string operator()(const Node::Sum& x) const {
      std::string s = "(";
      for (std::size_t i = 0; i < x.terms.size(); ++i) s += (i ? " + " : "") + x.terms[i].str();
      return s + ")";
    }
    std::string operator()(const Node::Product& x) const {
      std::string s;
      for (std::size_t i = 0; i < x.factors.size(); ++i) s += (i ? " " : "") + x.factors[i].str();
      return s;
    }
    std::string operator()(const Node::Power& x) const {
      return "(" + x.base.str() + ")^" + rational_str(x.exponent);
    }
    std::string operator()(const Node::Derivative& x) const {
      return "D" + (x.order == 1 ? std::string() : "^" + std::to_string(x.order)) + "(" + x.arg.str() + ")";
    }
    std::string operator()(const Node::Norm& x) const {
      return "|" + x.arg.str() + "|_L" + (x.p ? rational_str(*x.p) : std::string("inf"));
    }
    std::string operator()(const Node::Fourier& x) const { return "F(" + x.arg.str() + ")"; }
    std::string operator()(const Node::Integral& x) const { return "int(" + x.arg.str() + ")"; }
  };
  return std::visit(Visitor{}, node_->v);
}

CheckReport units_check(const std::string& check_id, const std::string& anchor, const UnitExpr& lhs,
                        const UnitExpr& rhs) {
  CheckReport r;
  r.check_id = check_id;
  r.anchor = anchor;
  r.tolerance = 0.0;
  try {
    const Dimension a = lhs.dimension();
    const Dimension b = rhs.dimension();
    r.residual = a == b ? 0.0 : 1.0;
    r.note = "[" + lhs.str() + "] = " + a.str() + " ; [" + rhs.str() + "] = " + b.str();
  } catch (const UnitsError& e) {
    r.residual = 1.0;
    r.note = e.what();
  }
  return r.decide();
}

std::vector<CheckReport> standard_unit_audits() {
  using Space = UnitExpr::Space;
  const auto nu = UnitExpr::quantity("nu", Dimension::viscosity());
  const auto v = UnitExpr::quantity("v", Dimension::velocity());
  const auto p = UnitExpr::quantity("p", Dimension::pressure());
  const auto rho = UnitExpr::quantity("rho", Dimension::length_only(-1));
  const auto sigma = UnitExpr::constant("sigma");
  const auto accel = UnitExpr::quantity("L T^-2", {1, -2});

  const auto curl_v_l2 = v.derivative().lp_norm(Rational(2));
  const auto curl2_v_l2 = v.derivative(2).lp_norm(Rational(2));
  const auto v_hat = v.fourier();
  const auto v_hat_l1 = v_hat.lp_norm(Rational(1), 3, Space::Frequency);

  std::vector<CheckReport> out;
  out.push_back(units_check("units/viscous-vs-convective", "viscous vs convective: [nu Lap v] = [d_j(v_j v)]",
                            nu * v.derivative(2), (v * v).derivative()));
  out.push_back(units_check("units/viscous-term", "viscous term: [nu Lap v] = L T^-2", nu * v.derivative(2), accel));
  out.push_back(units_check("units/pressure-gradient", "pressure gradient: [grad p] = L T^-2", p.derivative(),
                            accel));
  out.push_back(units_check("units/stationary-system", "stationary system: every term has the same dimension",
                            UnitExpr::sum({nu * v.derivative(2), (v * v).derivative(), p.derivative()}), accel));
  out.push_back(units_check("units/curl-l2", "curl norm: [|Cv|_L2] = L^3/2 T^-1", curl_v_l2,
                            UnitExpr::quantity("L^3/2 T^-1", {Rational(3, 2), -1})));
  out.push_back(units_check("units/curl2-l2", "second curl norm: [|C^2 v|_L2] = L^1/2 T^-1", curl2_v_l2,
                            UnitExpr::quantity("L^1/2 T^-1", {Rational(1, 2), -1})));
  out.push_back(units_check("units/nonlinear-bound", "nonlinear bound: [nu^-2 |Cv|^3] = L^1/2 T^-1",
                            sigma * nu.pow(-2) * curl_v_l2.pow(3),
                            UnitExpr::quantity("L^1/2 T^-1", {Rational(1, 2), -1})));
  out.push_back(units_check("units/fourier-data", "Fourier data: [v_hat] = L^4 T^-1", v_hat,
                            UnitExpr::quantity("L^4 T^-1", {4, -1})));
  out.push_back(units_check("units/curl2-bound", "second curl bound: [|C^2 v|_L2] = [nu^-2 |Cv|_L2^3]", curl2_v_l2,
                            sigma * nu.pow(-2) * curl_v_l2.pow(3)));
  out.push_back(units_check("units/wiener-linf", "Wiener control of sup norm: [|v|_Linf] = [|v_hat|_L1]", v.lp_norm(std::nullopt),
                            v_hat_l1));
  out.push_back(units_check("units/wiener-bound", "Wiener bound: [|v_hat|_L1] = [nu^-1 |Cv|_L2^2]", v_hat_l1,
                            sigma * nu.pow(-1) * curl_v_l2.pow(2)));
  out.push_back(units_check("units/wiener-tail", "spectral tail: [int_{|xi|>=rho} |W|^2] = [nu^-4 rho^-4 |Cv|_L2^6]",
                            v_hat.pow(2).integral(3, Space::Frequency),
                            nu.pow(-4) * rho.pow(-4) * curl_v_l2.pow(6)));
  return out;
}

}  // namespace wiener
