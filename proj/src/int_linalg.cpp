#include "qspace/int_linalg.hpp"

#include <utility>

#include "qspace/error.hpp"

namespace qspace {

namespace {

void require_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size())
      fail(ErrorCode::NonSquare, "matrix is not square");
}

Integer int_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    m[i].assign(rows[i].begin(), rows[i].end());
  return m;
}

Integer int_det(const IntMatrix& input) {
  require_square(input);
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity: prev divides the product.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

std::vector<Integer> solve_unimodular(const IntMatrix& a,
                                      const std::vector<Integer>& rhs) {
  require_square(a);
  const std::size_t n = a.size();
  if (rhs.size() != n) fail(ErrorCode::RankMismatch, "right-hand side has wrong length");
  Integer det = int_det(a);
  if (det != 1 && det != -1)
    throw InternalError("solve_unimodular on a matrix with determinant " + det.str());
  std::vector<Integer> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    IntMatrix replaced = a;
    for (std::size_t row = 0; row < n; ++row) replaced[row][col] = rhs[row];
    // Cramer: det is ±1, so the quotient is the integer solution component.
    x[col] = int_det(replaced) / det;
  }
  return x;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) fail(ErrorCode::RankMismatch, "ragged matrix");

  // Exact Gauss-Jordan over the rationals with deterministic pivoting.
  std::vector<std::vector<Rational>> r(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = Rational(m[i][j]);

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t pr = pivot_row;
    while (pr < rows && r[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(r[pivot_row], r[pr]);
    Rational inv = Rational(1) / r[pivot_row][col];
    for (std::size_t j = col; j < cols; ++j) r[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || r[i][col] == 0) continue;
      Rational factor = r[i][col];
      for (std::size_t j = col; j < cols; ++j) r[i][j] -= factor * r[pivot_row][j];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  std::vector<std::vector<Integer>> kernel;
  std::size_t next_pivot = 0;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free_col) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p)
      v[pivot_cols[p]] = -r[p][free_col];

    Integer lcm = 1;
    for (const auto& entry : v) {
      const Integer& den = denominator(entry);
      lcm = lcm / int_gcd(lcm, den) * den;
    }
    std::vector<Integer> w(cols);
    Integer gcd = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      w[j] = numerator(v[j]) * (lcm / denominator(v[j]));
      gcd = int_gcd(gcd, w[j]);
    }
    if (gcd > 1)
      for (auto& entry : w) entry /= gcd;
    for (const auto& entry : w) {
      if (entry == 0) continue;
      if (entry < 0)
        for (auto& e : w) e = -e;
      break;
    }
    kernel.push_back(std::move(w));
  }
  return kernel;
}

}  // namespace qspace
