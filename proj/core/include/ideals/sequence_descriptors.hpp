#ifndef IDEALS_SEQUENCE_DESCRIPTORS_HPP
#define IDEALS_SEQUENCE_DESCRIPTORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ideals/graded_sequence.hpp"
#include "ideals/monomial_ideal.hpp"

namespace ideals {

/// a_m = I^m.
GradedSequence powers_sequence(const MonomialIdeal& ideal);

/// a_m = (X^u : <w, u> >= c * m) for positive integer weights w and c >= 1.
GradedSequence weighted_sequence(std::vector<std::int64_t> weights, std::int64_t c);

/// a_m = m^(k*m) where m is the maximal ideal of K[x_1..x_dim].
GradedSequence maxpow_sequence(int dim, std::int64_t k);

/// Explicit table: ideals[i] is a_{i+1}; querying past the table is an error.
GradedSequence table_sequence(std::vector<MonomialIdeal> ideals, std::string label);

}  // namespace ideals

#endif
