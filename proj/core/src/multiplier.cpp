#include "ideals/multiplier.hpp"

#include <algorithm>
#include <set>

#include "ideals/errors.hpp"
#include "ideals/graded_sequence.hpp"
#include "ideals/newton_polyhedron.hpp"

namespace ideals {

namespace {

// Enumerates the box [0, side]^n, invoking fn on every exponent.
template <typename Fn>
void for_each_box_point(int n, std::int64_t side, Fn&& fn) {
  std::vector<std::int64_t> u(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(u);
    int i = 0;
    while (i < n) {
      if (++u[static_cast<std::size_t>(i)] <= side) break;
      u[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

std::vector<Rational> shifted_point(const std::vector<std::int64_t>& u) {
  std::vector<Rational> p;
  p.reserve(u.size());
  for (std::int64_t c : u) p.emplace_back(c + 1);  // u + e
  return p;
}

MonomialIdeal multiplier_ideal_from(const NewtonPolyhedron& poly,
                                    const Rational& lambda) {
  int n = poly.dim();
  std::int64_t side =
      static_cast<std::int64_t>(rational_ceil(lambda * Rational(poly.box_bound())));
  std::vector<Exponent> gens;
  for_each_box_point(n, side, [&](const std::vector<std::int64_t>& u) {
    if (poly.locate(shifted_point(u), lambda) == Location::Interior)
      gens.push_back(Exponent(u));
  });
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& lambda) {
  if (lambda <= 0) throw DomainError("multiplier_ideal: lambda must be positive");
  if (a.is_zero()) throw DomainError("multiplier_ideal: zero ideal");
  if (!is_zero_dimensional(a))
    throw DomainError("multiplier_ideal: ideal is not zero-dimensional");
  if (a.is_unit()) return a;
  NewtonPolyhedron poly(a);
  return multiplier_ideal_from(poly, lambda);
}

std::vector<std::pair<Rational, MonomialIdeal>> jumping_scan(
    const MonomialIdeal& a, const Rational& lambda_max) {
  if (lambda_max <= 0) throw DomainError("jumping_scan: lambda_max must be positive");
  if (a.is_zero()) throw DomainError("jumping_scan: zero ideal");
  if (!is_zero_dimensional(a))
    throw DomainError("jumping_scan: ideal is not zero-dimensional");
  std::vector<std::pair<Rational, MonomialIdeal>> jumps;
  if (a.is_unit()) return jumps;

  NewtonPolyhedron poly(a);
  int n = a.dim();
  std::int64_t side =
      static_cast<std::int64_t>(rational_ceil(lambda_max * Rational(poly.box_bound())));

  // A monomial X^u belongs to I(lambda a) iff lambda < min over facets of
  // <w, u+e>/c, so the scan only changes at these ratios.
  std::set<Rational> candidates;
  for_each_box_point(n, side, [&](const std::vector<std::int64_t>& u) {
    std::vector<Rational> p = shifted_point(u);
    for (const Facet& f : poly.facets()) {
      if (f.coordinate) continue;
      Rational s(0);
      for (int i = 0; i < n; ++i) s += Rational(f.normal[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(i)];
      Rational ratio = s / Rational(f.offset);
      if (ratio > 0 && ratio <= lambda_max) candidates.insert(ratio);
    }
  });

  MonomialIdeal previous = MonomialIdeal::unit(n);
  for (const Rational& lambda : candidates) {
    MonomialIdeal current = multiplier_ideal_from(poly, lambda);
    if (current != previous) {
      jumps.emplace_back(lambda, current);
      previous = current;
    }
  }
  return jumps;
}

AsymptoticResult asymptotic_multiplier(const GradedSequence& seq, int m,
                                       int p_budget) {
  if (m < 1) throw DomainError("asymptotic_multiplier: index must be >= 1");
  if (p_budget < 1) throw DomainError("asymptotic_multiplier: budget must be >= 1");

  AsymptoticResult result{MonomialIdeal::unit(seq.dim()), 1, false, {}};
  for (int p = 1; p <= p_budget; p *= 2) {
    MonomialIdeal ap = seq.at(p);
    if (!is_zero_dimensional(ap))
      throw DomainError("asymptotic_multiplier: sequence entry is not zero-dimensional");
    MonomialIdeal jp = multiplier_ideal(ap, Rational(m, p));
    if (!result.chain.empty() && !jp.contains(result.chain.back().second))
      throw std::logic_error(
          "asymptotic_multiplier: chain is not monotone along divisibility");
    result.chain.emplace_back(p, jp);
  }
  result.ideal = result.chain.back().second;
  std::size_t k = result.chain.size();
  result.stabilized =
      k >= 2 && result.chain[k - 1].second == result.chain[k - 2].second;
  result.witness_p = result.chain.back().first;
  for (const auto& [p, ideal] : result.chain) {
    if (ideal == result.ideal) {
      result.witness_p = p;
      break;
    }
  }
  return result;
}

}  // namespace ideals
