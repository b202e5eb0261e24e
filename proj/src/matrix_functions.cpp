#include "wick/matrix_functions.hpp"

#include <bit>
#include <cstdint>

#include "wick/errors.hpp"

namespace wick {

std::complex<double> permanent(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) throw ShapeError("permanent: matrix must be square");
  const int n = static_cast<int>(matrix.rows());
  if (n > 20) throw ShapeError("permanent: supported up to 20 x 20");
  if (n == 0) return {1.0, 0.0};

  // Ryser: perm(A) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} a_ij,
  // visiting subsets in Gray-code order so each step updates one column.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  std::complex<double> total{0.0, 0.0};
  std::uint64_t prev_gray = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ prev_gray;
    const int j = std::countr_zero(flipped);
    if (gray & flipped) {
      row_sums += matrix.col(j);
    } else {
      row_sums -= matrix.col(j);
    }
    prev_gray = gray;
    const std::complex<double> prod = row_sums.prod();
    total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

std::complex<double> determinant(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) throw ShapeError("determinant: matrix must be square");
  if (matrix.rows() == 0) return {1.0, 0.0};
  return matrix.determinant();
}

}  // namespace wick
