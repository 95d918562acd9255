#pragma once

#include <optional>
#include <vector>

#include "qm/arith.hpp"

namespace qm::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

Mat identity(std::size_t n);
Mat multiply(const Mat& A, const Mat& B);
Vec apply(const Mat& A, const Vec& x);

std::optional<Vec> solve(Mat A, Vec b);  // unique solution of a square system
std::optional<Mat> inverse(Mat A);
std::size_t rank(Mat A);
// Basis of {x : A x = 0}.
std::vector<Vec> kernel(Mat A);

}  // namespace qm::linalg
