#include "wiener/transform.hpp"

#include <algorithm>
#include <cmath>

#include "wiener/error.hpp"
#include "wiener/fft.hpp"

namespace wiener {

SpectralField forward(const PhysicalField& v) {
  if (!v.all_finite()) throw InvalidInput("forward: samples contain non-finite values");
  const GridSpec& g = v.grid();
  SpectralField out(g, v.rank(), v.units());
  const double scale = 1.0 / static_cast<double>(g.size());
  for (int c = 0; c < components(v.rank()); ++c) {
    auto dst = out.component(c);
    auto src = v.component(c);
    std::copy(src.begin(), src.end(), dst.begin());
    fft::transform(dst, g.n(), -1);
    for (auto& z : dst) z *= scale;
  }
  out.set_real(true);
  return out;
}

namespace {

// Σ_k |c_k| bounds every sample, so it is the natural scale for rounding in
// the synthesis sum.
double coefficient_l1(const SpectralField& c) {
  double s = 0.0;
  for (const auto& z : c.coefficients()) s += std::abs(z);
  return s;
}

}  // namespace

PhysicalField inverse(const SpectralField& c) {
  const GridSpec& g = c.grid();
  PhysicalField out(g, c.rank(), c.units());
  std::vector<Complex> buf(g.size());
  double residue = 0.0;
  for (int comp = 0; comp < components(c.rank()); ++comp) {
    auto src = c.component(comp);
    std::copy(src.begin(), src.end(), buf.begin());
    fft::transform(buf, g.n(), +1);
    auto dst = out.component(comp);
    for (std::size_t x = 0; x < g.size(); ++x) {
      dst[x] = buf[x].real();
      residue = std::max(residue, std::abs(buf[x].imag()));
    }
  }
  const double scale = std::max(out.max_magnitude(), coefficient_l1(c) * 1e-3);
  if (residue > 1e-12 * scale) {
    throw InvalidInput("inverse: imaginary residue " + std::to_string(residue) +
                       " exceeds 1e-12 of the field magnitude; coefficients are not those of a real field");
  }
  return out;
}

CheckReport check_reality(const SpectralField& c, double tol) {
  const GridSpec& g = c.grid();
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const std::size_t partner = g.linear(-g.mode_at(k));
    for (int comp = 0; comp < components(c.rank()); ++comp) {
      worst = std::max(worst, std::abs(c.at(comp, partner) - std::conj(c.at(comp, k))));
    }
  }
  const double scale = c.max_magnitude();
  CheckReport r = make_report("field/reality", "c_{-k} = conj(c_k)", worst, 0.0, relative_discrepancy(worst, scale),
                              tol);
  r.grid = g.describe();
  r.note = "max |c_{-k} - conj(c_k)| = " + std::to_string(worst) + ", max |c_k| = " + std::to_string(scale);
  return r;
}

std::vector<Wavevector> spectrum_support(const SpectralField& c, double threshold) {
  if (threshold < 0.0) throw InvalidInput("spectrum_support: threshold must be >= 0");
  std::vector<Wavevector> out;
  for (std::size_t k = 0; k < c.grid().size(); ++k) {
    if (c.magnitude(k) > threshold) out.push_back(c.grid().mode_at(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void truncate_to_dealias(SpectralField& c) {
  const GridSpec& g = c.grid();
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g.retained(g.mode_at(k))) continue;
    for (int comp = 0; comp < components(c.rank()); ++comp) c.at(comp, k) = 0.0;
  }
}

namespace {

GridSpec padded_grid(const GridSpec& g) { return GridSpec(2 * g.n(), g.length(), g.dealias_limit()); }

struct Split {
  int index[2];
  double weight[2];
  int count;
};

Split split_axis(int m, int n) {
  if (m == n / 2) return {{n / 2, -n / 2}, {0.5, 0.5}, 2};
  return {{m, 0}, {1.0, 0.0}, 1};
}

}  // namespace

namespace {

/// Writes the 2n-grid embedding of component `comp` of c into buf, scaled by
/// `weight` (1 or i), accumulating.
void embed(const SpectralField& c, int comp, const GridSpec& big, std::vector<Complex>& buf, Complex weight) {
  const GridSpec& g = c.grid();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Complex z = c.at(comp, k);
    if (z == 0.0) continue;
    const Wavevector m = g.mode_at(k);
    const Split s1 = split_axis(m.m1, g.n()), s2 = split_axis(m.m2, g.n()), s3 = split_axis(m.m3, g.n());
    for (int a = 0; a < s1.count; ++a)
      for (int b = 0; b < s2.count; ++b)
        for (int d = 0; d < s3.count; ++d) {
          buf[big.linear(Wavevector{s1.index[a], s2.index[b], s3.index[d]})] +=
              weight * z * (s1.weight[a] * s2.weight[b] * s3.weight[d]);
        }
  }
}

}  // namespace

// Two real components share one complex transform: the synthesis of
// c_a + i c_b is a + i b when both coefficient sets are Hermitian.
PhysicalField padded_samples(const SpectralField& c) {
  const GridSpec big = padded_grid(c.grid());
  PhysicalField out(big, c.rank(), c.units());
  std::vector<Complex> buf(big.size());
  const int nc = components(c.rank());
  for (int comp = 0; comp < nc; comp += 2) {
    const bool pair = comp + 1 < nc;
    std::fill(buf.begin(), buf.end(), Complex(0.0));
    embed(c, comp, big, buf, 1.0);
    if (pair) embed(c, comp + 1, big, buf, Complex(0.0, 1.0));
    fft::transform(buf, big.n(), +1);
    auto re = out.component(comp);
    for (std::size_t x = 0; x < big.size(); ++x) re[x] = buf[x].real();
    if (pair) {
      auto im = out.component(comp + 1);
      for (std::size_t x = 0; x < big.size(); ++x) im[x] = buf[x].imag();
    }
  }
  return out;
}

SpectralField pointwise_dealiased(std::span<const SpectralField* const> inputs, Rank out_rank,
                                  const NodeKernel& kernel, Dimension units) {
  if (inputs.empty()) throw InvalidInput("pointwise_dealiased: no inputs");
  const GridSpec& g = inputs.front()->grid();
  bool real = true;
  std::vector<PhysicalField> padded;
  padded.reserve(inputs.size());
  std::vector<std::size_t> source;
  int total = 0;
  for (const SpectralField* in : inputs) {
    require_same_grid(g, in->grid(), "pointwise_dealiased");
    real = real && in->real();
    // Repeated inputs, as in outer(v, v), are synthesized once.
    const auto first = std::find(inputs.begin(), inputs.end(), in);
    const auto f = static_cast<std::size_t>(first - inputs.begin());
    if (f == source.size()) {
      source.push_back(padded.size());
      padded.push_back(padded_samples(*in));
    } else {
      source.push_back(source[f]);
    }
    total += components(in->rank());
  }
  const GridSpec big = padded.front().grid();
  const int nout = components(out_rank);
  PhysicalField nodal(big, out_rank);
  std::vector<double> in_vals(total), out_vals(nout);
  for (std::size_t x = 0; x < big.size(); ++x) {
    int idx = 0;
    for (std::size_t a = 0; a < source.size(); ++a) {
      const PhysicalField& p = padded[source[a]];
      for (int c = 0; c < components(p.rank()); ++c) in_vals[idx++] = p.at(c, x);
    }
    kernel(in_vals, out_vals);
    for (int c = 0; c < nout; ++c) nodal.at(c, x) = out_vals[c];
  }
  padded.clear();
  SpectralField out(g, out_rank, units);
  const double scale = 1.0 / static_cast<double>(big.size());
  const int lim = g.dealias_limit();
  std::vector<Complex> buf(big.size());
  for (int c = 0; c < nout; c += 2) {
    const bool pair = c + 1 < nout;
    auto re = nodal.component(c);
    if (pair) {
      auto im = nodal.component(c + 1);
      for (std::size_t x = 0; x < big.size(); ++x) buf[x] = Complex(re[x], im[x]);
    } else {
      for (std::size_t x = 0; x < big.size(); ++x) buf[x] = re[x];
    }
    fft::transform(buf, big.n(), -1);
    // Z = A + i B with A, B the transforms of real data:
    // A(k) = (Z(k) + conj Z(-k)) / 2, B(k) = (Z(k) - conj Z(-k)) / 2i.
    for (int l = -lim; l <= lim; ++l)
      for (int j = -lim; j <= lim; ++j)
        for (int i = -lim; i <= lim; ++i) {
          const Wavevector m{i, j, l};
          const Complex z = buf[big.linear(m)];
          if (!pair) {
            out.at(c, m) = z * scale;
            continue;
          }
          const Complex zc = std::conj(buf[big.linear(-m)]);
          out.at(c, m) = 0.5 * (z + zc) * scale;
          out.at(c + 1, m) = Complex(0.0, -0.5) * (z - zc) * scale;
        }
  }
  out.set_real(real);
  return out;
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
  require_rank(a.rank(), Rank::Scalar, "product");
  const SpectralField* in[] = {&a, &b};
  const int nb = components(b.rank());
  return pointwise_dealiased(
      in, b.rank(),
      [nb](std::span<const double> x, std::span<double> y) {
        for (int c = 0; c < nb; ++c) y[c] = x[0] * x[1 + c];
      },
      a.units() * b.units());
}

SpectralField dot(const SpectralField& a, const SpectralField& b) {
  require_rank(a.rank(), Rank::Vector, "dot");
  require_rank(b.rank(), Rank::Vector, "dot");
  const SpectralField* in[] = {&a, &b};
  return pointwise_dealiased(
      in, Rank::Scalar,
      [](std::span<const double> x, std::span<double> y) { y[0] = x[0] * x[3] + x[1] * x[4] + x[2] * x[5]; },
      a.units() * b.units());
}

SpectralField cross(const SpectralField& a, const SpectralField& b) {
  require_rank(a.rank(), Rank::Vector, "cross");
  require_rank(b.rank(), Rank::Vector, "cross");
  const SpectralField* in[] = {&a, &b};
  return pointwise_dealiased(
      in, Rank::Vector,
      [](std::span<const double> x, std::span<double> y) {
        y[0] = x[1] * x[5] - x[2] * x[4];
        y[1] = x[2] * x[3] - x[0] * x[5];
        y[2] = x[0] * x[4] - x[1] * x[3];
      },
      a.units() * b.units());
}

SpectralField outer(const SpectralField& a, const SpectralField& b) {
  require_rank(a.rank(), Rank::Vector, "outer");
  require_rank(b.rank(), Rank::Vector, "outer");
  const SpectralField* in[] = {&a, &b};
  return pointwise_dealiased(
      in, Rank::Tensor,
      [](std::span<const double> x, std::span<double> y) {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) y[3 * i + j] = x[i] * x[3 + j];
      },
      a.units() * b.units());
}

SpectralField norm2(const SpectralField& a) {
  const SpectralField* in[] = {&a};
  const int na = components(a.rank());
  return pointwise_dealiased(
      in, Rank::Scalar,
      [na](std::span<const double> x, std::span<double> y) {
        double s = 0.0;
        for (int c = 0; c < na; ++c) s += x[c] * x[c];
        y[0] = s;
      },
      a.units() * a.units());
}

SpectralField resample(const SpectralField& c, const GridSpec& target, const Vec3& shift) {
  const GridSpec& g = c.grid();
  if (g.length() != target.length()) throw GridMismatch("resample: box lengths differ");
  SpectralField out(target, c.rank(), c.units());
  out.set_real(c.real());
  out.set_divergence_free(c.divergence_free());
  const int keep = std::min(g.n(), target.n()) / 2 - 1;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Wavevector m = g.mode_at(k);
    if (m.max_abs() > keep) continue;
    const Complex phase = std::polar(1.0, dot(g.wavevector(m), shift));
    const std::size_t t = target.linear(m);
    for (int comp = 0; comp < components(c.rank()); ++comp) out.at(comp, t) = c.at(comp, k) * phase;
  }
  return out;
}

PhysicalField sample_scalar(const GridSpec& g, const std::function<double(const Vec3&)>& f, Dimension units) {
  PhysicalField out(g, Rank::Scalar, units);
  for (std::size_t x = 0; x < g.size(); ++x) out.at(0, x) = f(g.node(x));
  return out;
}

PhysicalField sample_vector(const GridSpec& g, const std::function<Vec3(const Vec3&)>& f, Dimension units) {
  PhysicalField out(g, Rank::Vector, units);
  for (std::size_t x = 0; x < g.size(); ++x) out.set_vec(x, f(g.node(x)));
  return out;
}

}  // namespace wiener
