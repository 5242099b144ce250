#include "encdepth/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace encdepth {

Rational det(Matrix m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("det: matrix not square");

  if (k == 0) return Rational(1);
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (k == 3) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Rational result(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

std::vector<Rational> kernel_cofactor(const Matrix& a) {
  const std::size_t d = a.size();
  const std::size_t cols = d + 1;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("kernel_cofactor: need d x (d+1)");

  std::vector<Rational> kappa(cols);
  Matrix minor(d, std::vector<Rational>(d));
  for (std::size_t skip = 0; skip < cols; ++skip) {
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == skip) continue;
        minor[r][cc++] = a[r][c];
      }
    }
    Rational m = det(minor);
    kappa[skip] = (skip % 2 == 0) ? m : Rational(-m);
  }
  return kappa;
}

std::optional<std::vector<Rational>> solve_full_pivot(Matrix m, std::vector<Rational> rhs) {
  const std::size_t k = m.size();
  if (rhs.size() != k) throw std::invalid_argument("solve_full_pivot: size mismatch");
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("solve_full_pivot: matrix not square");

  // col_of[j] = original column sitting at position j after column swaps.
  std::vector<std::size_t> col_of(k);
  for (std::size_t i = 0; i < k; ++i) col_of[i] = i;

  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pr = k, pc = k;
    for (std::size_t r = step; r < k && pr == k; ++r)
      for (std::size_t c = step; c < k; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == k) return std::nullopt;  // remaining submatrix all zero
    if (pr != step) {
      std::swap(m[pr], m[step]);
      std::swap(rhs[pr], rhs[step]);
    }
    if (pc != step) {
      for (std::size_t r = 0; r < k; ++r) std::swap(m[r][pc], m[r][step]);
      std::swap(col_of[pc], col_of[step]);
    }
    for (std::size_t r = step + 1; r < k; ++r) {
      if (m[r][step] == 0) continue;
      Rational f = m[r][step] / m[step][step];
      for (std::size_t c = step; c < k; ++c) m[r][c] -= f * m[step][c];
      rhs[r] -= f * rhs[step];
    }
  }

  std::vector<Rational> y(k);
  for (std::size_t i = k; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t c = i + 1; c < k; ++c) acc -= m[i][c] * y[c];
    y[i] = acc / m[i][i];
  }

  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[col_of[i]] = y[i];
  return x;
}

}  // namespace encdepth
