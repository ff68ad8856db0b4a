#include "ideals/rational.hpp"

#include <stdexcept>

#include "ideals/errors.hpp"

namespace ideals {

Int rational_floor(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Int rational_ceil(const Rational& r) { return -rational_floor(-r); }

Rational rational_pow(const Rational& r, long k) {
  if (k == 0) return Rational(1);
  if (k < 0) {
    if (r == 0) throw DomainError("rational_pow: zero to a negative power");
    return Rational(1) / rational_pow(r, -k);
  }
  Rational acc(1);
  Rational base = r;
  long e = k;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty rational", b);

  auto is_int = [](std::string_view v) {
    if (v.empty()) return false;
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };

  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) throw ParseError("malformed integer", b);
    Int v{std::string(s)};
    return Rational(v);
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!is_int(num)) throw ParseError("malformed numerator", b);
  if (!is_int(den)) throw ParseError("malformed denominator", b + slash + 1);
  Int d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator", b + slash + 1);
  Int n{std::string(num)};
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  Int den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

Int pow10(long e) {
  Int t(1);
  for (long i = 0; i < e; ++i) t *= 10;
  return t;
}

// floor(log10(p/q)) for p, q > 0.
long floor_log10(const Int& p, const Int& q) {
  long e = static_cast<long>(p.str().size()) - static_cast<long>(q.str().size());
  while (q * pow10(e > 0 ? e : 0) > p * pow10(e < 0 ? -e : 0)) --e;
  while (q * pow10(e + 1 > 0 ? e + 1 : 0) <= p * pow10(e + 1 < 0 ? -(e + 1) : 0)) ++e;
  return e;
}

// round-half-even of p/q for p, q > 0.
Int round_half_even(const Int& p, const Int& q) {
  Int t = p / q;
  Int r = p - t * q;
  Int twice = 2 * r;
  if (twice > q) return t + 1;
  if (twice < q) return t;
  return (t % 2 == 0) ? t : t + 1;
}

}  // namespace

std::string to_decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (r == 0) return "0";
  bool negative = r < 0;
  Int p = numerator(r);
  if (negative) p = -p;
  Int q = denominator(r);

  long e = floor_log10(p, q);
  long shift = significant_digits - 1 - e;
  Int t = (shift >= 0) ? round_half_even(p * pow10(shift), q)
                       : round_half_even(p, q * pow10(-shift));
  Int bound = pow10(significant_digits);
  if (t >= bound) {  // rounding carried into one more digit
    t /= 10;
    ++e;
  }
  std::string digits = t.str();
  // pad on the left in case rounding lost leading positions
  while (static_cast<int>(digits.size()) < significant_digits)
    digits.insert(digits.begin(), '0');

  std::string out;
  long point = e + 1;  // digits before the decimal point
  if (point <= 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits;
    out.append(static_cast<std::size_t>(point - digits.size()), '0');
  } else {
    out = digits.substr(0, point) + "." + digits.substr(point);
  }
  return negative ? "-" + out : out;
}

Int nth_root_floor(const Int& x, int n) {
  if (x < 0) throw DomainError("nth_root_floor: negative radicand");
  if (n < 1) throw DomainError("nth_root_floor: n must be >= 1");
  if (x == 0 || x == 1 || n == 1) return x;
  // initial bracket from bit length
  unsigned long bits = boost::multiprecision::msb(x) + 1;
  Int hi = Int(1) << static_cast<unsigned>((bits + n - 1) / n);
  Int lo(1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    Int powv = boost::multiprecision::pow(mid, static_cast<unsigned>(n));
    if (powv <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

BoundVerdict verify_root_inequality(const Rational& lhs, const Rational& a,
                                    const Rational& b, int n, const Int& denom) {
  RootBounds l = nth_root_bounds(lhs, n, denom);
  RootBounds ra = nth_root_bounds(a, n, denom);
  RootBounds rb = nth_root_bounds(b, n, denom);
  if (l.exact && ra.exact && rb.exact)
    return l.lower <= ra.lower + rb.lower ? BoundVerdict::ConclusiveTrue
                                          : BoundVerdict::ConclusiveFalse;
  if (l.upper <= ra.lower + rb.lower) return BoundVerdict::ConclusiveTrue;
  if (l.lower > ra.upper + rb.upper) return BoundVerdict::ConclusiveFalse;
  return BoundVerdict::Inconclusive;
}

RootBounds nth_root_bounds(const Rational& x, int n, const Int& denom) {
  if (x < 0) throw DomainError("nth_root_bounds: negative radicand");
  if (n < 1) throw DomainError("nth_root_bounds: n must be >= 1");
  Int p = numerator(x);
  Int q = denominator(x);
  Int dn = boost::multiprecision::pow(denom, static_cast<unsigned>(n));
  // largest t with t^n * q <= p * denom^n
  Int t = nth_root_floor(p * dn / q, n);
  while (boost::multiprecision::pow(t + 1, static_cast<unsigned>(n)) * q <= p * dn) ++t;
  while (t > 0 && boost::multiprecision::pow(t, static_cast<unsigned>(n)) * q > p * dn) --t;
  bool exact = boost::multiprecision::pow(t, static_cast<unsigned>(n)) * q == p * dn;
  Rational lower(t, denom);
  Rational upper = exact ? lower : Rational(t + 1, denom);
  return {lower, upper, exact};
}

}  // namespace ideals
