#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ideals/errors.hpp"
#include "ideals/multiplier.hpp"
#include "ideals/newton_polyhedron.hpp"
#include "ideals/sequence_descriptors.hpp"
#include "test_support.hpp"

using namespace ideals;
using namespace testsupport;

TEST_CASE("multiplier_ideal examples") {
  MonomialIdeal a = mi("x^2, y^3");
  CHECK(multiplier_ideal(a, Rational(1)) == mi("x, y"));
  CHECK(multiplier_ideal(a, Rational(1, 2)).is_unit());
  CHECK(multiplier_ideal(a, Rational(4, 5)).is_unit());
  CHECK(multiplier_ideal(a, lct(a) - Rational(1, 1000)).is_unit());
  CHECK(multiplier_ideal(a, Rational(5, 6)) == mi("x, y"));

  CHECK_THROWS_AS(multiplier_ideal(a, Rational(0)), DomainError);
  CHECK_THROWS_AS(multiplier_ideal(a, Rational(-1)), DomainError);
  CHECK_THROWS_AS(multiplier_ideal(MonomialIdeal::zero(2), Rational(1)), DomainError);
  CHECK_THROWS_AS(multiplier_ideal(mi("x*y"), Rational(1)), DomainError);
}

TEST_CASE("multiplier ideals of the x^mp, y^mp family") {
  for (int m = 1; m <= 5; ++m) {
    for (int p = 1; p <= 4; ++p) {
      MonomialIdeal a = MonomialIdeal::minimalize(
          2, {ex({static_cast<std::int64_t>(m) * p, 0}),
              ex({0, static_cast<std::int64_t>(m) * p})});
      CHECK(multiplier_ideal(a, Rational(1, p)) == power(mi("x, y"), m - 1));
    }
  }
}

TEST_CASE("multiplier_ideal agrees with the 2D hull-facet oracle") {
  std::mt19937 rng(31);
  const Rational lambdas[] = {Rational(1, 2), Rational(1), Rational(3, 2)};
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal a = random_zero_dim_ideal(rng, 2, 6);
    if (a.is_unit()) continue;
    for (const Rational& lambda : lambdas) {
      MonomialIdeal got = multiplier_ideal(a, lambda);
      CAPTURE(ideals::to_string(a));
      CAPTURE(ideals::to_string(lambda));
      CHECK(same_members_up_to(
          2, 12, [&](const Exponent& u) { return got.contains(u); },
          [&](const Exponent& u) { return multiplier_member_2d(a, u, lambda); }));
    }
  }
}

TEST_CASE("multiplier_ideal is monotone in lambda and contains the ideal at 1") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n, 4);
    if (a.is_unit()) continue;
    Rational lambda(rand_int(rng, 1, 6), rand_int(rng, 1, 4));
    Rational mu = lambda + Rational(rand_int(rng, 1, 5), 3);
    CHECK(multiplier_ideal(a, lambda).contains(multiplier_ideal(a, mu)));
    CHECK(multiplier_ideal(a, Rational(1)).contains(a));
  }
}

TEST_CASE("subadditivity of monomial multiplier ideals") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n, 4);
    MonomialIdeal b = random_zero_dim_ideal(rng, n, 4);
    Rational lambda(rand_int(rng, 1, 4), rand_int(rng, 1, 3));
    MonomialIdeal lhs = multiplier_ideal(product(a, b), lambda);
    MonomialIdeal rhs = product(multiplier_ideal(a, lambda), multiplier_ideal(b, lambda));
    CAPTURE(ideals::to_string(a));
    CAPTURE(ideals::to_string(b));
    CHECK(rhs.contains(lhs));
  }
}

TEST_CASE("threshold drop under multiplier ideals") {
  // 1/lct(I(lambda a)) >= lambda/lct(a) - 1 whenever I(lambda a) is proper
  std::mt19937 rng(34);
  const Rational lambdas[] = {Rational(1), Rational(3, 2), Rational(2)};
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rand_int(rng, 2, 3));
    MonomialIdeal a = random_zero_dim_ideal(rng, n, 5);
    if (a.is_unit()) continue;
    for (const Rational& lambda : lambdas) {
      MonomialIdeal j = multiplier_ideal(a, lambda);
      if (j.is_unit()) continue;
      CHECK(Rational(1) / lct(j) >= lambda / lct(a) - 1);
    }
  }
}

TEST_CASE("jumping_scan") {
  using Jump = std::pair<Rational, MonomialIdeal>;
  std::vector<Jump> jumps = jumping_scan(mi("x^2, y^3"), Rational(1));
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0].first == Rational(5, 6));
  CHECK(jumps[0].second == mi("x, y"));

  std::vector<Jump> simplex = jumping_scan(mi("x, y"), Rational(2));
  REQUIRE(simplex.size() == 1);
  CHECK(simplex[0].first == Rational(2));
  CHECK(simplex[0].second == mi("x, y"));

  CHECK(jumping_scan(mi("x^2, y^3"), Rational(4, 5)).empty());

  std::mt19937 rng(35);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal a = random_zero_dim_ideal(rng, 2, 5);
    if (a.is_unit()) continue;
    std::vector<Jump> js = jumping_scan(a, Rational(2));
    REQUIRE_FALSE(js.empty());
    CHECK(js[0].first == lct(a));  // smallest jumping number is the threshold
    for (std::size_t i = 0; i + 1 < js.size(); ++i) {
      CHECK(js[i].first < js[i + 1].first);
      CHECK(js[i].second.contains(js[i + 1].second));  // ideals shrink
    }
  }
}

TEST_CASE("asymptotic_multiplier stabilizes immediately on powers") {
  GradedSequence seq = powers_sequence(mi("x^2, y^3"));
  AsymptoticResult r = asymptotic_multiplier(seq, 3, 8);
  CHECK(r.stabilized);
  CHECK(r.witness_p == 1);
  CHECK(r.ideal == multiplier_ideal(mi("x^2, y^3"), Rational(3)));
  for (const auto& [p, ideal] : r.chain) CHECK(ideal == r.ideal);
  CHECK(r.ideal == r.chain.back().second);
}

TEST_CASE("asymptotic_multiplier on the x^m, y^m family") {
  // not graded; used as a plain indexed family
  GradedSequence family(
      2,
      [](int m) {
        return MonomialIdeal::minimalize(
            2, {Exponent({static_cast<std::int64_t>(m), 0}),
                Exponent({0, static_cast<std::int64_t>(m)})});
      },
      "family x^m, y^m");
  for (int m = 1; m <= 8; ++m) {
    AsymptoticResult r = asymptotic_multiplier(family, m, 8);
    CHECK(r.ideal == power(mi("x, y"), m - 1));
    CHECK(r.stabilized);
  }
}

TEST_CASE("asymptotic_multiplier on the weighted 5,7 sequence") {
  GradedSequence seq = weighted_sequence({5, 7}, 5);
  AsymptoticResult r1 = asymptotic_multiplier(seq, 1, 16);
  CHECK(r1.stabilized);
  CHECK(r1.ideal.is_unit());
  AsymptoticResult r3 = asymptotic_multiplier(seq, 3, 16);
  CHECK(r3.stabilized);
  CHECK(r3.ideal.is_proper());
}

TEST_CASE("asymptotic multiplier ideals form a reverse-graded sequence") {
  for (const GradedSequence& seq :
       {powers_sequence(mi("x^2, x*y, y^4")), weighted_sequence({5, 7}, 5)}) {
    std::vector<MonomialIdeal> b;
    b.push_back(MonomialIdeal::unit(2));  // placeholder for index 0
    for (int m = 1; m <= 6; ++m) b.push_back(asymptotic_multiplier(seq, m, 8).ideal);
    for (int p = 1; p <= 6; ++p) {
      for (int q = p; q <= 6; ++q) {
        if (p < q) CHECK(b[static_cast<std::size_t>(p)].contains(b[static_cast<std::size_t>(q)]));
        if (p + q <= 6)
          CHECK(product(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(q)])
                    .contains(b[static_cast<std::size_t>(p + q)]));
      }
    }
  }
}

TEST_CASE("asymptotic_multiplier argument validation") {
  GradedSequence seq = powers_sequence(mi("x, y"));
  CHECK_THROWS_AS(asymptotic_multiplier(seq, 0, 4), DomainError);
  CHECK_THROWS_AS(asymptotic_multiplier(seq, 1, 0), DomainError);
  GradedSequence bad(2, [](int) { return mi("x*y"); }, "not zero-dimensional");
  CHECK_THROWS_AS(asymptotic_multiplier(bad, 1, 2), DomainError);
}
