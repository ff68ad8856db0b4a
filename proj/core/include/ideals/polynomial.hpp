#ifndef IDEALS_POLYNOMIAL_HPP
#define IDEALS_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "ideals/exponent.hpp"
#include "ideals/rational.hpp"

namespace ideals {

/// Total multiplicative well-order on exponents. The permutation lists
/// variable indices by decreasing priority; identity when empty.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrLex, GRevLex };

  explicit MonomialOrder(Kind kind, std::vector<int> permutation = {});
  static MonomialOrder lex(std::vector<int> permutation = {});
  static MonomialOrder grlex(std::vector<int> permutation = {});
  static MonomialOrder grevlex(std::vector<int> permutation = {});

  Kind kind() const { return kind_; }
  const std::vector<int>& permutation() const { return permutation_; }

  /// Negative, zero or positive as u <, ==, > v.
  int compare(const Exponent& u, const Exponent& v) const;
  bool less(const Exponent& u, const Exponent& v) const { return compare(u, v) < 0; }

  std::string name() const;

 private:
  Kind kind_;
  std::vector<int> permutation_;
};

/// Multivariate polynomial with exact rational coefficients. Terms are held
/// in a canonical order-independent map; no zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  static Polynomial zero(int dim);
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1));
  static Polynomial from_terms(int dim, TermMap terms);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  /// Multiplication by the term c * X^shift.
  Polynomial term_multiplied(const Exponent& shift, const Rational& c) const;

  const Exponent& leading_exponent(const MonomialOrder& order) const;
  const Rational& leading_coefficient(const MonomialOrder& order) const;
  /// Scales so the leading coefficient is 1.
  Polynomial monic(const MonomialOrder& order) const;

  std::int64_t min_total_degree() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  Polynomial(int dim, TermMap terms) : dim_(dim), terms_(std::move(terms)) {}

  int dim_;
  TermMap terms_;
};

/// Sum of the terms of smallest total degree (the form l(f)).
Polynomial lowest_degree_part(const Polynomial& f);

}  // namespace ideals

#endif
