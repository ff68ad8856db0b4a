// Internal exact linear algebra helpers for the polyhedral layer.
#ifndef IDEALS_SRC_LINALG_HPP
#define IDEALS_SRC_LINALG_HPP

#include <optional>
#include <vector>

#include "ideals/rational.hpp"

namespace ideals::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

int rank(Mat m);

Rational det(Mat m);

/// Unique solution of the square system a * x = b, or nullopt if singular.
std::optional<Vec> solve_square(Mat a, Vec b);

/// One-dimensional nullspace of the row span: returns w != 0 with
/// row . w == 0 for every row, provided rank(rows) == cols - 1.
std::optional<Vec> hyperplane_normal(const Mat& rows, int cols);

}  // namespace ideals::linalg

#endif
