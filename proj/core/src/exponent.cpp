#include "ideals/exponent.hpp"

#include "ideals/errors.hpp"

namespace ideals {

Exponent::Exponent(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("Exponent: dimension must be >= 1");
  for (std::int64_t c : coords_)
    if (c < 0) throw DomainError("Exponent: coordinates must be naturals");
}

Exponent Exponent::zero(int dim) {
  return Exponent(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
}

std::int64_t Exponent::total_degree() const {
  std::int64_t s = 0;
  for (std::int64_t c : coords_) s += c;
  return s;
}

bool Exponent::divides(const Exponent& other) const {
  if (dim() != other.dim()) throw DimensionMismatch(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (dim() != other.dim()) throw DimensionMismatch(dim(), other.dim());
  std::vector<std::int64_t> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return Exponent(std::move(out));
}

Exponent Exponent::join(const Exponent& other) const {
  if (dim() != other.dim()) throw DimensionMismatch(dim(), other.dim());
  std::vector<std::int64_t> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (other.coords_[i] > out[i]) out[i] = other.coords_[i];
  return Exponent(std::move(out));
}

Exponent Exponent::minus_clamped(const Exponent& other) const {
  if (dim() != other.dim()) throw DimensionMismatch(dim(), other.dim());
  std::vector<std::int64_t> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= other.coords_[i];
    if (out[i] < 0) out[i] = 0;
  }
  return Exponent(std::move(out));
}

}  // namespace ideals
