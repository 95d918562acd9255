#include "qm/linalg.hpp"

namespace qm::linalg {

Mat identity(std::size_t n) {
  Mat I(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

Mat multiply(const Mat& A, const Mat& B) {
  std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  Mat C(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(A[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(B[l][j]) != 0) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

Vec apply(const Mat& A, const Vec& x) {
  Vec y(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(x[j]) != 0 && sgn(A[i][j]) != 0) y[i] += A[i][j] * x[j];
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& A) {
  std::vector<std::size_t> pivots;
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(A[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    Rational piv = A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(A[i][c]) == 0) continue;
      Rational f = A[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(A[r][j]) != 0) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve(Mat A, Vec b) {
  std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  auto piv = rref(A);
  if (piv.size() != n || piv.back() >= n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
  return x;
}

std::optional<Mat> inverse(Mat A) {
  std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) {
    A[i].resize(2 * n, 0);
    A[i][n + i] = 1;
  }
  auto piv = rref(A);
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = A[i][n + j];
  return inv;
}

std::size_t rank(Mat A) { return rref(A).size(); }

std::vector<Vec> kernel(Mat A) {
  std::size_t cols = A.empty() ? 0 : A[0].size();
  auto piv = rref(A);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qm::linalg
