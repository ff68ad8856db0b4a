#include "ideals/polynomial.hpp"

#include <algorithm>

#include "ideals/errors.hpp"

namespace ideals {

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> permutation)
    : kind_(kind), permutation_(std::move(permutation)) {
  std::vector<int> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i))
      throw DomainError("MonomialOrder: permutation must reorder 0..n-1");
}

MonomialOrder MonomialOrder::lex(std::vector<int> p) { return MonomialOrder(Kind::Lex, std::move(p)); }
MonomialOrder MonomialOrder::grlex(std::vector<int> p) { return MonomialOrder(Kind::GrLex, std::move(p)); }
MonomialOrder MonomialOrder::grevlex(std::vector<int> p) { return MonomialOrder(Kind::GRevLex, std::move(p)); }

int MonomialOrder::compare(const Exponent& u, const Exponent& v) const {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  int n = u.dim();
  if (!permutation_.empty() && static_cast<int>(permutation_.size()) != n)
    throw DimensionMismatch(static_cast<int>(permutation_.size()), n);
  auto at = [&](int i) {
    int idx = permutation_.empty() ? i : permutation_[static_cast<std::size_t>(i)];
    return u[idx] - v[idx];
  };
  if (kind_ != Kind::Lex) {
    std::int64_t d = u.total_degree() - v.total_degree();
    if (d != 0) return d > 0 ? 1 : -1;
  }
  if (kind_ == Kind::GRevLex) {
    for (int i = n - 1; i >= 0; --i) {
      std::int64_t d = at(i);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < n; ++i) {
    std::int64_t d = at(i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string base;
  switch (kind_) {
    case Kind::Lex: base = "lex"; break;
    case Kind::GrLex: base = "grlex"; break;
    case Kind::GRevLex: base = "grevlex"; break;
  }
  if (!permutation_.empty()) {
    base += "(";
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
      if (i) base += ",";
      base += std::to_string(permutation_[i]);
    }
    base += ")";
  }
  return base;
}

Polynomial Polynomial::zero(int dim) {
  if (dim < 1) throw DomainError("Polynomial: dimension must be >= 1");
  return Polynomial(dim, {});
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  if (c == 0) return zero(dim);
  TermMap t;
  t.emplace(Exponent::zero(dim), c);
  return Polynomial(dim, std::move(t));
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  if (c == 0) return zero(e.dim());
  TermMap t;
  t.emplace(e, c);
  return Polynomial(e.dim(), std::move(t));
}

Polynomial Polynomial::from_terms(int dim, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.dim() != dim) throw DimensionMismatch(dim, it->first.dim());
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  return Polynomial(dim, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  TermMap t = terms_;
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return Polynomial(dim_, std::move(t));
}

Polynomial Polynomial::operator-() const {
  TermMap t = terms_;
  for (auto& [e, c] : t) c = -c;
  return Polynomial(dim_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(dim_);
  TermMap t = terms_;
  for (auto& [e, coeff] : t) coeff *= c;
  return Polynomial(dim_, std::move(t));
}

Polynomial Polynomial::term_multiplied(const Exponent& shift, const Rational& c) const {
  if (c == 0) return zero(dim_);
  TermMap t;
  for (const auto& [e, coeff] : terms_) t.emplace(e + shift, coeff * c);
  return Polynomial(dim_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  TermMap t;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponent e = e1 + e2;
      auto [it, inserted] = t.emplace(e, c1 * c2);
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) t.erase(it);
      }
    }
  }
  return Polynomial(dim_, std::move(t));
}

const Exponent& Polynomial::leading_exponent(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading_exponent: zero polynomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : terms_)
    if (!best || order.less(*best, e)) best = &e;
  return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_exponent(order));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / leading_coefficient(order));
}

std::int64_t Polynomial::min_total_degree() const {
  if (terms_.empty()) throw DomainError("min_total_degree: zero polynomial");
  std::int64_t best = -1;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = e.total_degree();
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Polynomial lowest_degree_part(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("lowest_degree_part: zero polynomial");
  std::int64_t d = f.min_total_degree();
  Polynomial::TermMap t;
  for (const auto& [e, c] : f.terms())
    if (e.total_degree() == d) t.emplace(e, c);
  return Polynomial::from_terms(f.dim(), std::move(t));
}

}  // namespace ideals
