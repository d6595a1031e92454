#pragma once

// Data-parallel building blocks. Every integral in the library is a
// per-node map followed by a weighted reduction; the map runs either serially
// or under OpenMP, and the reduction is a pairwise sum whose order depends
// only on the number of nodes. Serial and parallel runs are therefore
// bitwise identical.

#include <cstddef>
#include <functional>
#include <span>

namespace gamma2 {

enum class Execution { serial, parallel };

/// Calls fn(i) for i in [0, n). In parallel mode the first exception thrown
/// by any iteration is rethrown after the loop completes.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& fn);

/// Pairwise (cascade) summation with a fixed split order.
double pairwise_sum(std::span<const double> values);

/// pairwise_sum of weights[i] * values[i].
double weighted_sum(std::span<const double> weights, std::span<const double> values);

/// Number of OpenMP threads available to parallel loops (1 without OpenMP).
int available_threads();

}  // namespace gamma2
