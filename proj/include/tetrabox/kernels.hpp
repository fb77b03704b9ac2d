#pragma once

#include <cstddef>

#include "tetrabox/matrix.hpp"

// Data-parallel kernels behind Matrix arithmetic and elimination. The
// default versions use OpenMP; the serial namespace keeps the plain loops
// as the reference the parallel versions are tested against.
namespace tetrabox::kernels {

/// Work (in entry operations) below which the OpenMP kernels stay serial.
inline constexpr std::size_t kParallelCutoff = 4096;

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// In-place reduced row-echelon form; returns the rank.
std::size_t row_reduce(Matrix& m);

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::size_t row_reduce(Matrix& m);
}  // namespace serial

}  // namespace tetrabox::kernels
