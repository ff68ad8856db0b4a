#ifndef IDEALS_GROEBNER_HPP
#define IDEALS_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ideals/graded_sequence.hpp"
#include "ideals/monomial_ideal.hpp"
#include "ideals/polynomial.hpp"

namespace ideals {

/// Default cap on processed S-pairs; the CLI overrides it via AI_WORK_LIMIT.
inline constexpr std::int64_t kDefaultWorkLimit = 50000;

/// Remainder of f on division by `basis`: no term of the result is divisible
/// by any basis leading exponent, and f - result lies in the ideal generated
/// by the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Reduced Groebner basis (monic, pairwise tail-reduced, sorted by leading
/// exponent). Deterministic for a given order. Throws WorkLimitExceeded when
/// more than work_limit S-pairs are processed.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order,
                                   std::int64_t work_limit = kDefaultWorkLimit);

/// Polynomial ideal with a per-order cache of reduced Groebner bases.
/// Immutable after construction; the cache is internally synchronized and
/// shared between copies.
class PolynomialIdeal {
 public:
  PolynomialIdeal(int dim, std::vector<Polynomial> generators);

  int dim() const { return dim_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order, std::int64_t work_limit = kDefaultWorkLimit) const;

 private:
  struct Cache;

  int dim_;
  std::vector<Polynomial> generators_;  // nonzero, deterministic order
  std::shared_ptr<Cache> cache_;
};

/// Monomial ideal of leading exponents of the reduced basis.
MonomialIdeal initial_ideal(const PolynomialIdeal& ideal, const MonomialOrder& order,
                            std::int64_t work_limit = kDefaultWorkLimit);

/// I^m, generated by all m-fold products of the generators. Throws
/// WorkLimitExceeded when the product count would exceed `cap`.
PolynomialIdeal ideal_power(const PolynomialIdeal& ideal, int m,
                            std::int64_t cap = 20000);

/// Length of R/I via the initial ideal. Throws DomainError("infinite
/// colength") when the initial ideal is not zero-dimensional.
Int colength_poly(const PolynomialIdeal& ideal, const MonomialOrder& order,
                  std::int64_t work_limit = kDefaultWorkLimit);

/// Samples e(in(I^m))/m^n for m <= M (Direction Upper; the limit is e(I)).
LimitEstimate samuel_multiplicity(const PolynomialIdeal& ideal,
                                  const MonomialOrder& order, int M,
                                  std::int64_t work_limit = kDefaultWorkLimit);

}  // namespace ideals

#endif
