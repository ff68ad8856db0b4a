#ifndef IDEALS_EXPONENT_HPP
#define IDEALS_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace ideals {

/// Exponent vector of a monomial: a length-n tuple of naturals. The ambient
/// dimension travels with the value and is checked on every binary operation.
class Exponent {
 public:
  explicit Exponent(std::vector<std::int64_t> coords);
  static Exponent zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t total_degree() const;

  /// Componentwise <=, i.e. the monomial X^this divides X^other.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;
  /// Componentwise maximum (exponent of the lcm of the two monomials).
  Exponent join(const Exponent& other) const;
  /// Componentwise max(this - other, 0) (exponent of X^this : X^other).
  Exponent minus_clamped(const Exponent& other) const;

  bool operator==(const Exponent& other) const = default;
  std::strong_ordering operator<=>(const Exponent& other) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

}  // namespace ideals

#endif
