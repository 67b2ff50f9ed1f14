#include "wiener/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wiener/error.hpp"
#include "wiener/transform.hpp"

namespace wiener {

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::RealEvenSymmetric:
      return "real-even-symmetric";
    case Parity::ImaginaryOddAntisymmetric:
      return "imaginary-odd-antisymmetric";
    case Parity::Other:
      return "other";
  }
  return "?";
}

MultiplierSpec MultiplierSpec::scalar(std::string name, std::function<Complex(const Vec3&)> s, Complex zero,
                                      Parity parity, int order) {
  MultiplierSpec m;
  m.name = std::move(name);
  m.componentwise = true;
  m.symbol = [s = std::move(s)](const Vec3& k) {
    Matrix out{};
    out[0] = s(k);
    return out;
  };
  m.zero_mode[0] = zero;
  m.parity = parity;
  m.order = order;
  return m;
}

Vec3 effective_wavevector(const GridSpec& g, const Wavevector& m) {
  const int half = g.n() / 2;
  const Wavevector e{m.m1 == half ? 0 : m.m1, m.m2 == half ? 0 : m.m2, m.m3 == half ? 0 : m.m3};
  return g.wavevector(e);
}

namespace {

bool is_zero(const Vec3& k) { return k[0] == 0.0 && k[1] == 0.0 && k[2] == 0.0; }

}  // namespace

SpectralField apply_multiplier(const MultiplierSpec& m, const SpectralField& v) {
  const GridSpec& g = v.grid();
  const Rank in_rank = m.componentwise ? v.rank() : m.in_rank;
  const Rank out_rank = m.componentwise ? v.rank() : m.out_rank;
  require_rank(v.rank(), in_rank, m.name.c_str());
  const int nin = components(in_rank), nout = components(out_rank);
  SpectralField out(g, out_rank, v.units() * Dimension::length_only(-m.order));
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    const Wavevector mode = g.mode_at(slot);
    const Vec3 k = m.coordinate_even ? g.wavevector(mode) : effective_wavevector(g, mode);
    const MultiplierSpec::Matrix s = is_zero(k) ? m.zero_mode : m.symbol(k);
    if (m.componentwise) {
      for (int c = 0; c < nin; ++c) out.at(c, slot) = s[0] * v.at(c, slot);
      continue;
    }
    for (int r = 0; r < nout; ++r) {
      Complex acc = 0.0;
      for (int c = 0; c < nin; ++c) acc += s[r * nin + c] * v.at(c, slot);
      out.at(r, slot) = acc;
    }
  }
  out.set_real(v.real() && m.parity != Parity::Other);
  return out;
}

double operator_norm(const MultiplierSpec::Matrix& a, int rows, int cols) {
  // Power iteration on A^H A from a fixed start vector with all entries set.
  std::array<Complex, 9> x{};
  for (int c = 0; c < cols; ++c) x[c] = Complex(1.0 + 0.1 * c, 0.05 * c);
  double sigma = 0.0;
  for (int it = 0; it < 200; ++it) {
    std::array<Complex, 27> y{};
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) y[r] += a[r * cols + c] * x[c];
    std::array<Complex, 9> z{};
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) z[c] += std::conj(a[r * cols + c]) * y[r];
    double nz = 0.0, nx = 0.0;
    for (int c = 0; c < cols; ++c) {
      nz += std::norm(z[c]);
      nx += std::norm(x[c]);
    }
    nz = std::sqrt(nz);
    if (nz == 0.0) return 0.0;
    const double next = std::sqrt(nz / std::sqrt(nx));
    for (int c = 0; c < cols; ++c) x[c] = z[c] / nz;
    if (std::abs(next - sigma) <= 1e-15 * next) return next;
    sigma = next;
  }
  return sigma;
}

CheckReport check_multiplier(const MultiplierSpec& m, const GridSpec& g) {
  const int rows = m.componentwise ? 1 : components(m.out_rank);
  const int cols = m.componentwise ? 1 : components(m.in_rank);
  const bool square = rows == cols;
  double sup = 0.0, defect = 0.0;
  const int lim = g.dealias_limit();
  for (int l = -lim; l <= lim; ++l)
    for (int j = -lim; j <= lim; ++j)
      for (int i = -lim; i <= lim; ++i) {
        const Vec3 k = g.wavevector({i, j, l});
        if (is_zero(k)) continue;
        const auto s = m.symbol(k);
        const auto t = m.symbol(-1.0 * k);
        double size = 0.0;
        for (int e = 0; e < rows * cols; ++e) size = std::max(size, std::abs(s[e]));
        sup = std::max(sup, operator_norm(s, rows, cols));
        double bad = 0.0;
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) {
            const Complex a = s[r * cols + c], b = t[r * cols + c];
            if (m.parity == Parity::RealEvenSymmetric) {
              bad = std::max({bad, std::abs(a - b), std::abs(a.imag())});
              if (square) bad = std::max(bad, std::abs(a - s[c * cols + r]));
            } else if (m.parity == Parity::ImaginaryOddAntisymmetric) {
              bad = std::max({bad, std::abs(a + b), std::abs(a.real())});
              if (square) bad = std::max(bad, std::abs(a + s[c * cols + r]));
            }
          }
        defect = std::max(defect, size > 0.0 ? bad / size : bad);
      }
  CheckReport r = make_report("operators/symbol/" + m.name, "parity class and boundedness of the symbol", sup, 0.0,
                              std::isfinite(sup) ? defect : std::numeric_limits<double>::infinity(), 1e-14);
  r.grid = g.describe();
  r.note = "parity " + parity_name(m.parity) + ", sup operator norm over retained band " + std::to_string(sup);
  return r;
}

namespace {

using Matrix = MultiplierSpec::Matrix;
const Complex I(0.0, 1.0);

Matrix curl_symbol(const Vec3& k) {
  Matrix s{};
  s[1] = -I * k[2];
  s[2] = I * k[1];
  s[3] = I * k[2];
  s[5] = -I * k[0];
  s[6] = -I * k[1];
  s[7] = I * k[0];
  return s;
}

Matrix projector_symbol(const Vec3& k, bool complement) {
  Matrix s{};
  const double k2 = dot(k, k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double kk = k[i] * k[j] / k2;
      s[3 * i + j] = complement ? kk : (i == j ? 1.0 : 0.0) - kk;
    }
  return s;
}

MultiplierSpec matrix_spec(std::string name, Rank in, Rank out, std::function<Matrix(const Vec3&)> sym,
                           Matrix zero, Parity parity, int order) {
  MultiplierSpec m;
  m.name = std::move(name);
  m.in_rank = in;
  m.out_rank = out;
  m.symbol = std::move(sym);
  m.zero_mode = zero;
  m.parity = parity;
  m.order = order;
  return m;
}

Matrix identity_matrix() {
  Matrix s{};
  s[0] = s[4] = s[8] = 1.0;
  return s;
}

}  // namespace

MultiplierSpec curl_multiplier() {
  return matrix_spec("curl", Rank::Vector, Rank::Vector, curl_symbol, {}, Parity::ImaginaryOddAntisymmetric, 1);
}

MultiplierSpec curl2_multiplier() {
  return matrix_spec(
      "curl2", Rank::Vector, Rank::Vector,
      [](const Vec3& k) {
        Matrix s{};
        const double k2 = dot(k, k);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) s[3 * i + j] = (i == j ? k2 : 0.0) - k[i] * k[j];
        return s;
      },
      {}, Parity::RealEvenSymmetric, 2);
}

MultiplierSpec grad_multiplier() {
  return matrix_spec(
      "grad", Rank::Scalar, Rank::Vector,
      [](const Vec3& k) {
        Matrix s{};
        for (int i = 0; i < 3; ++i) s[i] = I * k[i];
        return s;
      },
      {}, Parity::ImaginaryOddAntisymmetric, 1);
}

MultiplierSpec div_multiplier() {
  return matrix_spec(
      "div", Rank::Vector, Rank::Scalar,
      [](const Vec3& k) {
        Matrix s{};
        for (int i = 0; i < 3; ++i) s[i] = I * k[i];
        return s;
      },
      {}, Parity::ImaginaryOddAntisymmetric, 1);
}

MultiplierSpec laplacian_multiplier() {
  return MultiplierSpec::scalar(
      "laplacian", [](const Vec3& k) { return Complex(-dot(k, k)); }, 0.0, Parity::RealEvenSymmetric, 2);
}

MultiplierSpec inv_neg_laplacian_multiplier() {
  return MultiplierSpec::scalar(
      "inv_neg_laplacian", [](const Vec3& k) { return Complex(1.0 / dot(k, k)); }, 0.0, Parity::RealEvenSymmetric,
      -2);
}

MultiplierSpec leray_multiplier() {
  return matrix_spec(
      "leray", Rank::Vector, Rank::Vector, [](const Vec3& k) { return projector_symbol(k, false); },
      identity_matrix(), Parity::RealEvenSymmetric, 0);
}

MultiplierSpec leray_complement_multiplier() {
  return matrix_spec(
      "leray_complement", Rank::Vector, Rank::Vector, [](const Vec3& k) { return projector_symbol(k, true); }, {},
      Parity::RealEvenSymmetric, 0);
}

MultiplierSpec leray_via_curl_multiplier() {
  return matrix_spec(
      "leray_via_curl", Rank::Vector, Rank::Vector,
      [](const Vec3& k) {
        const Matrix c = curl_symbol(k);
        Matrix s{};
        const double k2 = dot(k, k);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            Complex acc = 0.0;
            for (int l = 0; l < 3; ++l) acc += c[3 * i + l] * c[3 * l + j];
            s[3 * i + j] = acc / k2;
          }
        return s;
      },
      {}, Parity::RealEvenSymmetric, 0);
}

MultiplierSpec riesz_r0_multiplier() {
  return matrix_spec(
      "riesz_r0", Rank::Tensor, Rank::Scalar,
      [](const Vec3& k) {
        Matrix s{};
        const double k2 = dot(k, k);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) s[3 * i + j] = -k[i] * k[j] / k2;
        return s;
      },
      {}, Parity::RealEvenSymmetric, 0);
}

SpectralField curl(const SpectralField& v) {
  SpectralField out = apply_multiplier(curl_multiplier(), v);
  out.set_divergence_free(true);
  return out;
}

SpectralField curl2(const SpectralField& v) {
  SpectralField out = apply_multiplier(curl2_multiplier(), v);
  out.set_divergence_free(true);
  return out;
}

SpectralField grad(const SpectralField& s) { return apply_multiplier(grad_multiplier(), s); }
SpectralField div(const SpectralField& v) { return apply_multiplier(div_multiplier(), v); }
SpectralField laplacian(const SpectralField& f) { return apply_multiplier(laplacian_multiplier(), f); }
SpectralField inv_neg_laplacian(const SpectralField& f) {
  return apply_multiplier(inv_neg_laplacian_multiplier(), f);
}

SpectralField leray_project(const SpectralField& v) {
  SpectralField out = apply_multiplier(leray_multiplier(), v);
  out.set_divergence_free(true);
  return out;
}

SpectralField leray_complement(const SpectralField& v) { return apply_multiplier(leray_complement_multiplier(), v); }

SpectralField leray_project_via_curl(const SpectralField& v) {
  SpectralField out = apply_multiplier(leray_via_curl_multiplier(), v);
  out.set_divergence_free(true);
  return out;
}

SpectralField riesz_r0(const SpectralField& t) { return apply_multiplier(riesz_r0_multiplier(), t); }

SpectralField tensor_column(const SpectralField& t, int l) {
  require_rank(t.rank(), Rank::Tensor, "tensor_column");
  SpectralField out(t.grid(), Rank::Vector, t.units());
  out.set_real(t.real());
  for (int i = 0; i < 3; ++i) {
    auto src = t.component(3 * i + l);
    std::copy(src.begin(), src.end(), out.component(i).begin());
  }
  return out;
}

SpectralField s0_bilinear(const SpectralField& a, const SpectralField& b) {
  require_rank(a.rank(), Rank::Vector, "s0_bilinear");
  require_rank(b.rank(), Rank::Vector, "s0_bilinear");
  require_same_grid(a.grid(), b.grid(), "s0_bilinear");
  const GridSpec& g = a.grid();
  const SpectralField ab = outer(a, b);
  const SpectralField half_dot = 0.5 * dot(a, b);
  SpectralField out(g, Rank::Tensor, a.units() * b.units());
  out.set_real(ab.real());
  for (int l = 0; l < 3; ++l) {
    // Column l of a ⊗ b is a_l b, stored at rows 3 l + i.
    SpectralField w(g, Rank::Vector, ab.units());
    for (int i = 0; i < 3; ++i) {
      auto src = ab.component(3 * l + i);
      std::copy(src.begin(), src.end(), w.component(i).begin());
    }
    w.set_real(ab.real());
    auto diag = w.component(l);
    auto h = half_dot.component(0);
    for (std::size_t k = 0; k < g.size(); ++k) diag[k] -= h[k];
    SpectralField u = leray_project(w);
    for (int i = 0; i < 3; ++i) {
      u.at(i, 0) = 0.0;
      auto src = u.component(i);
      std::copy(src.begin(), src.end(), out.component(3 * i + l).begin());
    }
  }
  return out;
}

SpectralField s0_map(const SpectralField& v) {
  require_rank(v.rank(), Rank::Vector, "s0_map");
  return s0_bilinear(v, v);
}

SpectralField column_divergence(const SpectralField& u) {
  require_rank(u.rank(), Rank::Tensor, "column_divergence");
  const GridSpec& g = u.grid();
  SpectralField out(g, Rank::Vector, u.units() * Dimension::length_only(-1));
  out.set_real(u.real());
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    const Vec3 k = effective_wavevector(g, g.mode_at(slot));
    for (int i = 0; i < 3; ++i) {
      Complex acc = 0.0;
      for (int l = 0; l < 3; ++l) acc += I * k[l] * u.at(3 * i + l, slot);
      out.at(i, slot) = acc;
    }
  }
  return out;
}

double divergence_defect(const SpectralField& v) {
  require_rank(v.rank(), Rank::Vector, "divergence_defect");
  const GridSpec& g = v.grid();
  double num = 0.0, den = 0.0;
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    const Vec3 k = effective_wavevector(g, g.mode_at(slot));
    const CVec3 c = v.vec(slot);
    num = std::max(num, std::abs(k[0] * c[0] + k[1] * c[1] + k[2] * c[2]));
    den = std::max(den, norm(k) * norm(c));
  }
  return relative_discrepancy(num, den);
}

}  // namespace wiener
