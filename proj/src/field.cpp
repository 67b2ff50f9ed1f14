#include "wiener/field.hpp"

#include <algorithm>
#include <cmath>

#include "wiener/check_report.hpp"
#include "wiener/error.hpp"

namespace wiener {

std::string rank_name(Rank r) {
  switch (r) {
    case Rank::Scalar:
      return "scalar";
    case Rank::Vector:
      return "vector";
    case Rank::Tensor:
      return "tensor";
  }
  return "?";
}

void require_rank(Rank got, Rank want, const char* what) {
  if (got != want) {
    throw RankMismatch(std::string(what) + ": expected a " + rank_name(want) + " field, got " + rank_name(got));
  }
}

PhysicalField::PhysicalField(GridSpec grid, Rank rank, Dimension units)
    : grid_(grid), rank_(rank), units_(units), data_(grid.size() * components(rank), 0.0) {}

PhysicalField::PhysicalField(GridSpec grid, Rank rank, std::vector<double> samples, Dimension units)
    : grid_(grid), rank_(rank), units_(units), data_(std::move(samples)) {
  if (data_.size() != grid_.size() * components(rank_)) {
    throw InvalidInput("PhysicalField: sample count does not match grid and rank");
  }
}

std::span<double> PhysicalField::component(int c) {
  return {data_.data() + c * grid_.size(), grid_.size()};
}

std::span<const double> PhysicalField::component(int c) const {
  return {data_.data() + c * grid_.size(), grid_.size()};
}

Vec3 PhysicalField::vec(std::size_t node) const {
  require_rank(rank_, Rank::Vector, "PhysicalField::vec");
  return {at(0, node), at(1, node), at(2, node)};
}

void PhysicalField::set_vec(std::size_t node, const Vec3& v) {
  require_rank(rank_, Rank::Vector, "PhysicalField::set_vec");
  for (int c = 0; c < 3; ++c) at(c, node) = v[c];
}

double PhysicalField::max_magnitude() const {
  double best = 0.0;
  const int nc = components(rank_);
  for (std::size_t x = 0; x < grid_.size(); ++x) {
    double s = 0.0;
    for (int c = 0; c < nc; ++c) s += at(c, x) * at(c, x);
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

bool PhysicalField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SpectralField::SpectralField(GridSpec grid, Rank rank, Dimension units)
    : grid_(grid), rank_(rank), units_(units), data_(grid.size() * components(rank)) {}

std::span<Complex> SpectralField::component(int c) {
  return {data_.data() + c * grid_.size(), grid_.size()};
}

std::span<const Complex> SpectralField::component(int c) const {
  return {data_.data() + c * grid_.size(), grid_.size()};
}

CVec3 SpectralField::vec(std::size_t slot) const {
  require_rank(rank_, Rank::Vector, "SpectralField::vec");
  return {at(0, slot), at(1, slot), at(2, slot)};
}

void SpectralField::set_vec(std::size_t slot, const CVec3& v) {
  require_rank(rank_, Rank::Vector, "SpectralField::set_vec");
  for (int c = 0; c < 3; ++c) at(c, slot) = v[c];
}

double SpectralField::magnitude(std::size_t slot) const {
  double s = 0.0;
  for (int c = 0; c < components(rank_); ++c) s += std::norm(at(c, slot));
  return std::sqrt(s);
}

double SpectralField::max_magnitude() const {
  double best = 0.0;
  for (std::size_t k = 0; k < grid_.size(); ++k) best = std::max(best, magnitude(k));
  return best;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "SpectralField::+=");
  require_rank(o.rank_, rank_, "SpectralField::+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  real_ = real_ && o.real_;
  div_free_ = div_free_ && o.div_free_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "SpectralField::-=");
  require_rank(o.rank_, rank_, "SpectralField::-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  real_ = real_ && o.real_;
  div_free_ = div_free_ && o.div_free_;
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : data_) c *= s;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

double relative_max_difference(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "relative_max_difference");
  require_rank(b.rank(), a.rank(), "relative_max_difference");
  SpectralField d = a - b;
  return relative_discrepancy(d.max_magnitude(), std::max(a.max_magnitude(), b.max_magnitude()));
}

double relative_max_difference(const PhysicalField& a, const PhysicalField& b) {
  require_same_grid(a.grid(), b.grid(), "relative_max_difference");
  require_rank(b.rank(), a.rank(), "relative_max_difference");
  double diff = 0.0;
  const int nc = components(a.rank());
  for (std::size_t x = 0; x < a.grid().size(); ++x) {
    double s = 0.0;
    for (int c = 0; c < nc; ++c) s += (a.at(c, x) - b.at(c, x)) * (a.at(c, x) - b.at(c, x));
    diff = std::max(diff, s);
  }
  return relative_discrepancy(std::sqrt(diff), std::max(a.max_magnitude(), b.max_magnitude()));
}

}  // namespace wiener
