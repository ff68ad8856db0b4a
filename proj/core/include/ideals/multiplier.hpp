#ifndef IDEALS_MULTIPLIER_HPP
#define IDEALS_MULTIPLIER_HPP

#include <utility>
#include <vector>

#include "ideals/monomial_ideal.hpp"
#include "ideals/rational.hpp"

namespace ideals {

class GradedSequence;

/// Multiplier ideal of a zero-dimensional monomial ideal: generated by the
/// monomials X^u with u + (1,...,1) in the interior of lambda * P_a.
/// Requires a nonzero zero-dimensional, lambda > 0.
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& lambda);

/// Breakpoint scan of lambda -> multiplier_ideal(a, lambda) on (0, lambda_max].
/// Returns each distinct proper value with the smallest lambda at which it
/// appears; the first entry's lambda equals lct(a).
std::vector<std::pair<Rational, MonomialIdeal>> jumping_scan(
    const MonomialIdeal& a, const Rational& lambda_max);

/// Result of the budgeted asymptotic multiplier ideal search along the
/// doubling chain p = 1, 2, 4, ... <= p_budget. `chain` is nondecreasing in
/// containment, `ideal` equals the last chain entry, and `witness_p` is the
/// first p attaining it. `stabilized` records whether the last two chain
/// ideals coincide; the true asymptotic ideal is only certified by an
/// effective bound the theory does not provide, so the flag is honest
/// evidence rather than proof.
struct AsymptoticResult {
  MonomialIdeal ideal;
  int witness_p;
  bool stabilized;
  std::vector<std::pair<int, MonomialIdeal>> chain;
};

/// I(m/p * a_p) maximized along the doubling chain. Requires m >= 1,
/// p_budget >= 1 and a sequence of zero-dimensional ideals.
AsymptoticResult asymptotic_multiplier(const GradedSequence& seq, int m,
                                       int p_budget);

}  // namespace ideals

#endif
