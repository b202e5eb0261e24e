#pragma once

#include <Eigen/Dense>
#include <complex>

namespace wick {

// Permanent of a square matrix by Ryser's inclusion-exclusion with Gray-code
// subset updates, O(2^n * n). The empty matrix has permanent 1.
// Throws ShapeError for non-square input or n > 20.
std::complex<double> permanent(const Eigen::MatrixXcd& matrix);

std::complex<double> determinant(const Eigen::MatrixXcd& matrix);

}  // namespace wick
