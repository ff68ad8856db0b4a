#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ideals/errors.hpp"
#include "ideals/newton_polyhedron.hpp"
#include "test_support.hpp"

using namespace ideals;
using namespace testsupport;

namespace {

bool has_facet(const NewtonPolyhedron& p, std::vector<std::int64_t> normal,
               std::int64_t offset) {
  for (const Facet& f : p.facets()) {
    if (f.offset != offset) continue;
    if (f.normal.size() != normal.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < normal.size(); ++i)
      if (f.normal[i] != normal[i]) same = false;
    if (same) return true;
  }
  return false;
}

std::vector<Rational> pt(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("build_polyhedron on x^2, y^3") {
  NewtonPolyhedron p = build_polyhedron(mi("x^2, y^3"));
  CHECK(p.facets().size() == 3);
  CHECK(has_facet(p, {1, 0}, 0));
  CHECK(has_facet(p, {0, 1}, 0));
  CHECK(has_facet(p, {3, 2}, 6));
  CHECK(p.box_bound() == 3);

  std::vector<std::vector<Rational>> expected = {
      {Rational(0), Rational(3)},
      {Rational(2), Rational(0)},
      {Rational(3), Rational(0)},
      {Rational(3), Rational(3)},
  };
  std::vector<std::vector<Rational>> got = p.vertices();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  CHECK_THROWS_AS(build_polyhedron(MonomialIdeal::zero(2)), DomainError);
  CHECK_THROWS_AS(build_polyhedron(mi("x*y")), DomainError);
}

TEST_CASE("build_polyhedron on the maximal ideal") {
  NewtonPolyhedron p = build_polyhedron(mi("x, y"));
  CHECK(p.facets().size() == 3);
  CHECK(has_facet(p, {1, 1}, 1));
}

TEST_CASE("build_polyhedron on x^4, x^2 y, y^3") {
  NewtonPolyhedron p = build_polyhedron(mi("x^4, x^2*y, y^3"));
  CHECK(p.facets().size() == 4);
  CHECK(has_facet(p, {1, 2}, 4));
  CHECK(has_facet(p, {1, 1}, 3));
}

TEST_CASE("a three-dimensional staircase with a hand-computed volume") {
  // facets: u+v+2w >= 2 and 2u+v+3w >= 3; vol(Q) = 1/3 + 1/2 = 5/6
  MonomialIdeal a = mi("x^2, y^3, z, x*y");
  NewtonPolyhedron p = build_polyhedron(a);
  CHECK(p.facets().size() == 5);
  CHECK(has_facet(p, {1, 1, 2}, 2));
  CHECK(has_facet(p, {2, 1, 3}, 3));
  CHECK(p.complement_volume() == Rational(5, 6));
  CHECK(multiplicity(a) == 5);
}

TEST_CASE("locate") {
  NewtonPolyhedron p = build_polyhedron(mi("x^2, y^3"));
  CHECK(p.locate(pt({Rational(1), Rational(1)}), Rational(5, 6)) == Location::Boundary);
  CHECK(p.locate(pt({Rational(1), Rational(1)}), Rational(1)) == Location::Outside);
  CHECK(p.locate(pt({Rational(3), Rational(3)}), Rational(1)) == Location::Interior);
  CHECK_THROWS_AS(p.locate(pt({Rational(1), Rational(1)}), Rational(0)), DomainError);

  NewtonPolyhedron simplex = build_polyhedron(mi("x, y"));
  CHECK(simplex.locate(pt({Rational(1), Rational(1)}), Rational(1)) == Location::Interior);

  // points with a zero coordinate are never interior
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal a = random_zero_dim_ideal(rng, 2);
    if (a.is_unit()) continue;
    NewtonPolyhedron q = build_polyhedron(a);
    std::vector<Rational> x = {Rational(0), Rational(rand_int(rng, 0, 10))};
    CHECK(q.locate(x, Rational(1)) != Location::Interior);
  }
}

TEST_CASE("complement_volume examples") {
  CHECK(build_polyhedron(mi("x^2, y^3")).complement_volume() == Rational(3));
  CHECK(build_polyhedron(mi("x^4, x^2*y, y^3")).complement_volume() == Rational(5));
  // unit simplex complement in each dimension: 1/n!
  Int factorial = 1;
  for (int n = 1; n <= 4; ++n) {
    factorial *= n;
    std::vector<Exponent> gens;
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal maximal = MonomialIdeal::minimalize(n, std::move(gens));
    CHECK(build_polyhedron(maximal).complement_volume() == Rational(1, factorial));
  }
}

TEST_CASE("complement_volume agrees with the 2D shoelace oracle") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal a = random_zero_dim_ideal(rng, 2, 8, 5);
    if (a.is_unit()) continue;
    CAPTURE(ideals::to_string(a));
    CHECK(build_polyhedron(a).complement_volume() == complement_area_2d(a));
  }
}

TEST_CASE("multiplicity examples") {
  CHECK(multiplicity(mi("x^2, y^3")) == 6);
  CHECK(multiplicity(mi("x, y, z")) == 1);
  CHECK(multiplicity(mi("x^4, x^2*y, y^3")) == 10);
  CHECK(multiplicity(MonomialIdeal::unit(2)) == 0);
  CHECK_THROWS_AS(multiplicity(MonomialIdeal::zero(2)), DomainError);
  CHECK_THROWS_AS(multiplicity(mi("x*y")), DomainError);
}

TEST_CASE("multiplicity agrees with the finite-difference colength oracle") {
  std::mt19937 rng(23);
  int committed = 0;
  for (int trial = 0; trial < 12; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n, 3, 3);
    if (a.is_unit()) continue;
    std::optional<Int> oracle = finite_difference_multiplicity(a);
    if (!oracle) continue;
    ++committed;
    CAPTURE(ideals::to_string(a));
    CHECK(multiplicity(a) == *oracle);
  }
  CHECK(committed >= 8);
}

TEST_CASE("multiplicity is integral, positive, monotone, and scales in powers") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rand_int(rng, 1, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n, 5);
    if (a.is_unit()) continue;
    Int e = multiplicity(a);
    CHECK(e > 0);

    // adding a generator shrinks the complement
    MonomialIdeal b = random_zero_dim_ideal(rng, n, 5);
    std::vector<Exponent> widened = a.generators();
    widened.insert(widened.end(), b.generators().begin(), b.generators().end());
    MonomialIdeal bigger = MonomialIdeal::minimalize(n, std::move(widened));
    CHECK(multiplicity(a) >= multiplicity(bigger));

    // e(a^k) = k^n e(a)
    int k = static_cast<int>(rand_int(rng, 2, 3));
    Int scale = 1;
    for (int i = 0; i < n; ++i) scale *= k;
    CHECK(multiplicity(power(a, k)) == scale * e);
  }
}

TEST_CASE("multiplicity of a complete intersection equals its colength") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 15; ++trial) {
    int n = static_cast<int>(rand_int(rng, 1, 4));
    std::vector<Exponent> gens;
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = rand_int(rng, 1, 5);
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal a = MonomialIdeal::minimalize(n, std::move(gens));
    CHECK(multiplicity(a) == colength(a));
  }
}

TEST_CASE("lct examples") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      MonomialIdeal ideal = MonomialIdeal::minimalize(2, {ex({a, 0}), ex({0, b})});
      CHECK(lct(ideal) == Rational(1, a) + Rational(1, b));
    }
  CHECK(lct(mi("x, y, z")) == 3);
  for (int k = 1; k <= 5; ++k) CHECK(lct(power(mi("x, y"), k)) == Rational(2, k));
  CHECK(lct(mi("x*y")) == 1);  // non-zero-dimensional but proper
  CHECK_THROWS_AS(lct(MonomialIdeal::unit(2)), DomainError);
  CHECK_THROWS_AS(lct(MonomialIdeal::zero(2)), DomainError);

  std::mt19937 rng(26);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal a = random_zero_dim_ideal(rng, static_cast<int>(rand_int(rng, 2, 3)));
    if (a.is_unit()) continue;
    int k = static_cast<int>(rand_int(rng, 2, 4));
    CHECK(lct(power(a, k)) == lct(a) / k);
  }
}

TEST_CASE("ord_weight") {
  MonomialIdeal a = mi("x^2, y^3");
  CHECK(ord_weight(a, WeightVector({Rational(1), Rational(1)})) == 2);
  CHECK(ord_weight(a, WeightVector({Rational(3), Rational(2)})) == 6);
  CHECK(ord_weight(MonomialIdeal::unit(2), WeightVector::ones(2)) == 0);
  CHECK_THROWS_AS(ord_weight(MonomialIdeal::zero(2), WeightVector::ones(2)), DomainError);
  CHECK_THROWS_AS(WeightVector({Rational(0), Rational(0)}), DomainError);
  CHECK_THROWS_AS(WeightVector({Rational(-1), Rational(2)}), DomainError);

  std::mt19937 rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rand_int(rng, 1, 3));
    MonomialIdeal b = random_zero_dim_ideal(rng, n);
    CHECK(ord_weight(b, WeightVector::ones(n)) == Rational(order_at_max_ideal(b)));
  }
}

TEST_CASE("Teissier inequality with directed rounding") {
  std::mt19937 rng(28);
  int conclusive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n);
    MonomialIdeal b = random_zero_dim_ideal(rng, n);
    if (a.is_unit() || b.is_unit()) continue;
    BoundVerdict v = verify_root_inequality(Rational(multiplicity(product(a, b))),
                                            Rational(multiplicity(a)),
                                            Rational(multiplicity(b)), n);
    CHECK(v != BoundVerdict::ConclusiveFalse);
    if (v == BoundVerdict::ConclusiveTrue) ++conclusive;
  }
  CHECK(conclusive >= 30);
}

TEST_CASE("exact inequalities: lct subadditivity, AM-GM bound, Lelong bound") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n);
    MonomialIdeal b = random_zero_dim_ideal(rng, n);
    if (a.is_unit() || b.is_unit()) continue;

    // 1/lct(ab) <= 1/lct(a) + 1/lct(b), exactly
    CHECK(Rational(1) / lct(product(a, b)) <= Rational(1) / lct(a) + Rational(1) / lct(b));

    // e(a) >= n^n / lct(a)^n, exactly
    Rational nn = rational_pow(Rational(n), n);
    CHECK(Rational(multiplicity(a)) * rational_pow(lct(a), n) >= nn);

    // e(a) >= ord_m(a)^n
    CHECK(Rational(multiplicity(a)) >=
          rational_pow(Rational(order_at_max_ideal(a)), n));
  }
}
