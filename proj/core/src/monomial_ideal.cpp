#include "ideals/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "ideals/errors.hpp"

namespace ideals {

namespace {

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int dim) {
  if (dim < 1) throw DomainError("MonomialIdeal: dimension must be >= 1");
  return MonomialIdeal(dim, {});
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return minimalize(dim, {Exponent::zero(dim)});
}

MonomialIdeal MonomialIdeal::minimalize(int dim, std::vector<Exponent> raw) {
  if (dim < 1) throw DomainError("MonomialIdeal: dimension must be >= 1");
  for (const Exponent& e : raw)
    if (e.dim() != dim) throw DimensionMismatch(dim, e.dim());

  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // An exponent of strictly smaller total degree may dominate; equal-degree
  // distinct exponents are always incomparable.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Exponent& x, const Exponent& y) {
                     return x.total_degree() < y.total_degree();
                   });
  std::vector<Exponent> kept;
  kept.reserve(raw.size());
  for (const Exponent& cand : raw) {
    bool dominated = false;
    for (const Exponent& g : kept) {
      if (g.total_degree() >= cand.total_degree()) break;
      if (g.divides(cand)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(cand);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(dim, std::move(kept));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].total_degree() == 0;
}

bool MonomialIdeal::contains(const Exponent& u) const {
  if (u.dim() != dim_) throw DimensionMismatch(dim_, u.dim());
  for (const Exponent& g : gens_)
    if (g.divides(u)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_dim(*this, other);
  for (const Exponent& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<Exponent> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const Exponent& g : a.generators())
    for (const Exponent& h : b.generators()) sums.push_back(g + h);
  return MonomialIdeal::minimalize(a.dim(), std::move(sums));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<Exponent> joins;
  joins.reserve(a.generators().size() * b.generators().size());
  for (const Exponent& g : a.generators())
    for (const Exponent& h : b.generators()) joins.push_back(g.join(h));
  return MonomialIdeal::minimalize(a.dim(), std::move(joins));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (b.is_zero()) throw DomainError("colon: divisor ideal is zero");
  if (a.is_zero()) return MonomialIdeal::zero(a.dim());

  bool first = true;
  MonomialIdeal acc = MonomialIdeal::unit(a.dim());
  for (const Exponent& g : b.generators()) {
    std::vector<Exponent> shifted;
    shifted.reserve(a.generators().size());
    for (const Exponent& h : a.generators())
      shifted.push_back(h.minus_clamped(g));
    MonomialIdeal single = MonomialIdeal::minimalize(a.dim(), std::move(shifted));
    acc = first ? single : intersection(acc, single);
    first = false;
  }
  return acc;
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t k) {
  if (k < 0) throw DomainError("power: exponent must be >= 0");
  if (k == 0) return MonomialIdeal::unit(a.dim());
  if (a.is_zero()) return a;
  MonomialIdeal acc = a;
  for (std::int64_t i = 1; i < k; ++i) acc = product(acc, a);
  return acc;
}

bool is_zero_dimensional(const MonomialIdeal& a) {
  if (a.is_unit()) return true;  // empty variety
  if (a.is_zero()) return false;
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (const Exponent& g : a.generators()) {
      bool pure = g[i] > 0;
      for (int j = 0; pure && j < n; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::int64_t> pure_power_exponents(const MonomialIdeal& a) {
  if (!is_zero_dimensional(a))
    throw DomainError("pure_power_exponents: ideal is not zero-dimensional");
  int n = a.dim();
  std::vector<std::int64_t> p(static_cast<std::size_t>(n),
                              std::numeric_limits<std::int64_t>::max());
  if (a.is_unit()) return std::vector<std::int64_t>(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (const Exponent& g : a.generators()) {
      bool pure = g[i] > 0;
      for (int j = 0; pure && j < n; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure && g[i] < p[static_cast<std::size_t>(i)])
        p[static_cast<std::size_t>(i)] = g[i];
    }
  }
  return p;
}

Int colength(const MonomialIdeal& a) {
  if (!is_zero_dimensional(a))
    throw DomainError("colength: ideal is not zero-dimensional");
  if (a.is_unit()) return 0;
  std::vector<std::int64_t> bound = pure_power_exponents(a);
  int n = a.dim();
  // Standard monomials all satisfy u_i < bound[i].
  Int count = 0;
  std::vector<std::int64_t> u(static_cast<std::size_t>(n), 0);
  while (true) {
    if (!a.contains(Exponent(u))) ++count;
    int i = 0;
    while (i < n) {
      if (++u[static_cast<std::size_t>(i)] < bound[static_cast<std::size_t>(i)]) break;
      u[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

std::int64_t order_at_max_ideal(const MonomialIdeal& a) {
  if (a.is_zero()) throw DomainError("order_at_max_ideal: zero ideal");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Exponent& g : a.generators())
    best = std::min(best, g.total_degree());
  return best;
}

}  // namespace ideals
