#ifndef IDEALS_MONOMIAL_IDEAL_HPP
#define IDEALS_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <vector>

#include "ideals/exponent.hpp"
#include "ideals/rational.hpp"

namespace ideals {

/// Monomial ideal in n variables, stored as the antichain of its minimal
/// generator exponents, sorted lexicographically. The representation is
/// canonical: two ideals are equal iff their generator lists are equal.
///
/// Encodings: an empty generator list is the zero ideal; the single generator
/// (0,...,0) is the unit ideal R.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(int dim);
  static MonomialIdeal unit(int dim);
  /// Discards dominated exponents and returns the ideal generated by `raw`.
  static MonomialIdeal minimalize(int dim, std::vector<Exponent> raw);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  /// Membership of the monomial X^u: some generator divides u.
  bool contains(const Exponent& u) const;
  /// Ideal containment: other is a subset of this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  MonomialIdeal(int dim, std::vector<Exponent> gens)
      : dim_(dim), gens_(std::move(gens)) {}

  int dim_;
  std::vector<Exponent> gens_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// (a : b), computed as the intersection over generators X^g of b of the
/// single-monomial colons (a : X^g). Requires b nonzero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// k-fold product; power(a, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, std::int64_t k);

/// True iff every variable appears as a pure power among the generators
/// (equivalently, R/a has finite length). The unit ideal qualifies.
bool is_zero_dimensional(const MonomialIdeal& a);

/// Smallest exponent p such that x_i^p lies in a, for each axis i.
/// Requires a zero-dimensional.
std::vector<std::int64_t> pure_power_exponents(const MonomialIdeal& a);

/// Number of standard monomials of a (the length of R/a).
/// Requires a zero-dimensional.
Int colength(const MonomialIdeal& a);

/// max{p : a is contained in m^p}, i.e. the smallest total degree of a
/// generator. Requires a nonzero.
std::int64_t order_at_max_ideal(const MonomialIdeal& a);

}  // namespace ideals

#endif
