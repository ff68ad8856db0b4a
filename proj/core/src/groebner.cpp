#include "ideals/groebner.hpp"

#include <algorithm>
#include <set>

#include "ideals/errors.hpp"
#include "ideals/newton_polyhedron.hpp"

namespace ideals {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  for (const Polynomial& g : basis)
    if (g.is_zero()) throw DomainError("normal_form: zero basis element");

  Polynomial h = f;
  Polynomial remainder = Polynomial::zero(f.dim());
  while (!h.is_zero()) {
    Exponent lt = h.leading_exponent(order);
    Rational lc = h.leading_coefficient(order);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      const Exponent& gl = g.leading_exponent(order);
      if (!gl.divides(lt)) continue;
      Rational factor = lc / g.leading_coefficient(order);
      h = h - g.term_multiplied(lt.minus_clamped(gl), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder = remainder + Polynomial::monomial(lt, lc);
      h = h - Polynomial::monomial(lt, lc);
    }
  }
  return remainder;
}

namespace {

struct Pair {
  int i, j;
  Exponent lcm;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_exponent(order), b.leading_exponent(order));
  });
  // keep only elements whose leading exponent is not divisible by an earlier one
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : minimal) {
      if (h.leading_exponent(order).divides(g.leading_exponent(order))) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  // tail-reduce each element against the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
    reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_exponent(order), b.leading_exponent(order));
  });
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order,
                                   std::int64_t work_limit) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(order));
  if (basis.empty()) throw DomainError("buchberger: all generators are zero");

  auto lcm_of = [&](int i, int j) {
    return basis[static_cast<std::size_t>(i)].leading_exponent(order).join(
        basis[static_cast<std::size_t>(j)].leading_exponent(order));
  };

  // pending pairs, processed by increasing lcm under the order (normal strategy)
  auto cmp = [&](const Pair& a, const Pair& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  std::set<std::pair<int, int>> done;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j)
      queue.push_back({i, j, lcm_of(i, j)});

  std::int64_t processed = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), cmp);
    Pair pair = *it;
    queue.erase(it);
    done.insert({pair.i, pair.j});

    if (++processed > work_limit)
      throw WorkLimitExceeded("buchberger: S-pair limit of " +
                              std::to_string(work_limit) + " exceeded");

    const Exponent lti = basis[static_cast<std::size_t>(pair.i)].leading_exponent(order);
    const Exponent ltj = basis[static_cast<std::size_t>(pair.j)].leading_exponent(order);

    // first Buchberger criterion: coprime leading terms
    if (pair.lcm == lti + ltj) continue;

    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[static_cast<std::size_t>(k)].leading_exponent(order).divides(pair.lcm))
        continue;
      auto key_ik = std::minmax(pair.i, k);
      auto key_jk = std::minmax(pair.j, k);
      if (done.count({key_ik.first, key_ik.second}) &&
          done.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    const Polynomial& fi = basis[static_cast<std::size_t>(pair.i)];
    const Polynomial& fj = basis[static_cast<std::size_t>(pair.j)];
    Polynomial spoly = fi.term_multiplied(pair.lcm.minus_clamped(lti), Rational(1)) -
                       fj.term_multiplied(pair.lcm.minus_clamped(ltj), Rational(1));
    Polynomial r = normal_form(spoly, basis, order);
    if (r.is_zero()) continue;

    basis.push_back(r.monic(order));
    int t = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < t; ++i) queue.push_back({i, t, lcm_of(i, t)});
  }

  return interreduce(std::move(basis), order);
}

struct PolynomialIdeal::Cache {
  std::mutex mutex;
  std::map<std::string, std::vector<Polynomial>> bases;
};

PolynomialIdeal::PolynomialIdeal(int dim, std::vector<Polynomial> generators)
    : dim_(dim), cache_(std::make_shared<Cache>()) {
  if (dim < 1) throw DomainError("PolynomialIdeal: dimension must be >= 1");
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (g.dim() != dim) throw DimensionMismatch(dim, g.dim());
    generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& PolynomialIdeal::groebner_basis(
    const MonomialOrder& order, std::int64_t work_limit) const {
  if (is_zero()) throw DomainError("groebner_basis: zero ideal");
  std::string key = order.name();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  std::vector<Polynomial> basis = buchberger(generators_, order, work_limit);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

MonomialIdeal initial_ideal(const PolynomialIdeal& ideal, const MonomialOrder& order,
                            std::int64_t work_limit) {
  if (ideal.is_zero()) throw DomainError("initial_ideal: zero ideal");
  const std::vector<Polynomial>& basis = ideal.groebner_basis(order, work_limit);
  std::vector<Exponent> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) lts.push_back(g.leading_exponent(order));
  return MonomialIdeal::minimalize(ideal.dim(), std::move(lts));
}

PolynomialIdeal ideal_power(const PolynomialIdeal& ideal, int m, std::int64_t cap) {
  if (m < 1) throw DomainError("ideal_power: exponent must be >= 1");
  if (ideal.is_zero()) return ideal;
  std::size_t g = ideal.generators().size();
  // number of degree-m monomials in g symbols
  Int count(1);
  for (int i = 1; i <= m; ++i) count = count * Int(g + static_cast<std::size_t>(i) - 1) / i;
  if (count > cap)
    throw WorkLimitExceeded("ideal_power: " + count.str() +
                            " generator products exceed cap " + std::to_string(cap));

  std::vector<Polynomial> out;
  std::vector<int> pick(static_cast<std::size_t>(m), 0);  // nondecreasing indices
  while (true) {
    Polynomial p = ideal.generators()[static_cast<std::size_t>(pick[0])];
    for (int i = 1; i < m; ++i)
      p = p * ideal.generators()[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    out.push_back(std::move(p));
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(g) - 1) --i;
    if (i < 0) break;
    int next = pick[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < m; ++j) pick[static_cast<std::size_t>(j)] = next;
  }
  return PolynomialIdeal(ideal.dim(), std::move(out));
}

Int colength_poly(const PolynomialIdeal& ideal, const MonomialOrder& order,
                  std::int64_t work_limit) {
  MonomialIdeal in = initial_ideal(ideal, order, work_limit);
  if (!is_zero_dimensional(in)) throw DomainError("colength_poly: infinite colength");
  return colength(in);
}

LimitEstimate samuel_multiplicity(const PolynomialIdeal& ideal,
                                  const MonomialOrder& order, int M,
                                  std::int64_t work_limit) {
  if (M < 1) throw DomainError("samuel_multiplicity: M must be >= 1");
  MonomialIdeal in1 = initial_ideal(ideal, order, work_limit);
  if (!is_zero_dimensional(in1))
    throw DomainError("samuel_multiplicity: initial ideal is not zero-dimensional");

  LimitEstimate est;
  est.direction = Direction::Upper;
  for (int m = 1; m <= M; ++m) {
    MonomialIdeal in_m =
        (m == 1) ? in1 : initial_ideal(ideal_power(ideal, m), order, work_limit);
    Rational v = Rational(multiplicity(in_m)) / rational_pow(Rational(m), ideal.dim());
    est.samples.emplace_back(m, v);
    if (m == 1 || v < est.best_bound) est.best_bound = v;
  }
  return est;
}

}  // namespace ideals
