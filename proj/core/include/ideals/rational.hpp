#ifndef IDEALS_RATIONAL_HPP
#define IDEALS_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace ideals {

// Exact scalar field used throughout the geometry layer. GMP keeps fractions
// canonical: denominator positive, lowest terms.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Int denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Largest integer <= r.
Int rational_floor(const Rational& r);
/// Smallest integer >= r.
Int rational_ceil(const Rational& r);

/// r^k for integer k (k may be negative when r != 0).
Rational rational_pow(const Rational& r, long k);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization).
Rational parse_rational(std::string_view text);

/// Canonical exact rendering: "p" or "p/q".
std::string to_string(const Rational& r);

/// Decimal rendering with the given number of significant digits,
/// round-half-even. Presentation only; never used in comparisons.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

/// floor(x^(1/n)) for x >= 0, n >= 1.
Int nth_root_floor(const Int& x, int n);

/// Outward rational bounds on x^(1/n): lower <= x^(1/n) <= upper with
/// upper - lower <= 1/denom, and exact == true when lower is the root itself.
struct RootBounds {
  Rational lower;
  Rational upper;
  bool exact;
};
RootBounds nth_root_bounds(const Rational& x, int n,
                           const Int& denom = Int("1000000000000"));

/// Directed-rounding verdict on lhs^(1/n) <= a^(1/n) + b^(1/n). The
/// inequality is asserted (or refuted) only when the outward bounds are
/// conclusive; near-equality cases report Inconclusive, never a false
/// failure.
enum class BoundVerdict { ConclusiveTrue, ConclusiveFalse, Inconclusive };
BoundVerdict verify_root_inequality(const Rational& lhs, const Rational& a,
                                    const Rational& b, int n,
                                    const Int& denom = Int("1000000000000"));

}  // namespace ideals

#endif
