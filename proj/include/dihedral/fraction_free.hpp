#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dihedral {

/**
 * @brief Fraction-free (Bareiss) elimination over an integral domain.
 *
 * `R` needs +, -, *, an exact division functor and a zero test. The
 * matrix is consumed; rows are swapped to find pivots.
 */
template <class R>
struct BareissResult {
  R determinant;
  std::size_t rank;
};

template <class R, class Div, class IsZero>
BareissResult<R> bareiss(std::vector<std::vector<R>> m, const R& one, Div exact_div, IsZero is_zero) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  R prev = one;
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      negate = !negate;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        R t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][c] = m[i][c] - m[i][c];
    }
    prev = m[r][c];
    ++r;
  }
  R det = one - one;
  if (rows == cols && r == rows) {
    det = rows == 0 ? one : m[rows - 1][cols - 1];
    if (negate) det = (one - one) - det;
  } else if (rows == 0 && cols == 0) {
    det = one;
  }
  return {det, r};
}

/// Division-free determinant by expansion over column subsets.
/// Cost O(n 2^n); meant for small matrices over rings without exact division.
template <class R>
R subset_determinant(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  std::vector<R> cur(std::size_t(1) << n, zero);
  cur[0] = one;
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<R> next(std::size_t(1) << n, zero);
    for (std::size_t mask = 0; mask < cur.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != row) continue;
      int sign_flip = 0;
      for (std::size_t c = n; c-- > 0;) {
        if (mask & (std::size_t(1) << c)) {
          ++sign_flip;
          continue;
        }
        R term = cur[mask] * m[row][c];
        std::size_t nm = mask | (std::size_t(1) << c);
        if (sign_flip % 2 == 0)
          next[nm] = next[nm] + term;
        else
          next[nm] = next[nm] - term;
      }
    }
    cur.swap(next);
  }
  return cur[(std::size_t(1) << n) - 1];
}

}  // namespace dihedral
