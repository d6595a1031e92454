#pragma once

#include <Eigen/Core>

namespace gamma2 {

/// Largest ambient dimension supported. Vectors and matrices keep their
/// storage inline so per-node evaluation never touches the heap.
inline constexpr int kMaxDim = 12;

using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

}  // namespace gamma2
