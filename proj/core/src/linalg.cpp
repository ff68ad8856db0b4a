#include "linalg.hpp"

namespace ideals::linalg {

namespace {

// Row-reduces m in place, returns pivot column per pivot row.
std::vector<int> eliminate(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
    Rational inv = Rational(1) / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(eliminate(m).size()); }

Rational det(Mat m) {
  int n = static_cast<int>(m.size());
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
      d = -d;
    }
    Rational pv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    d *= pv;
    for (int i = c + 1; i < n; ++i) {
      Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / pv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  return d;
}

std::optional<Vec> solve_square(Mat a, Vec b) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    a[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
  std::vector<int> pivots = eliminate(a);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (pivots[static_cast<std::size_t>(i)] >= n) return std::nullopt;
  Vec x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  return x;
}

std::optional<Vec> hyperplane_normal(const Mat& rows, int cols) {
  Mat m = rows;
  std::vector<int> pivots = eliminate(m);
  if (static_cast<int>(pivots.size()) != cols - 1) return std::nullopt;
  // the single free column determines the nullspace vector
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  Vec w(static_cast<std::size_t>(cols), Rational(0));
  w[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    w[static_cast<std::size_t>(pivots[i])] =
        -m[i][static_cast<std::size_t>(free_col)];
  return w;
}

}  // namespace ideals::linalg
