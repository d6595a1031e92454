#include "gamma2/kernels.hpp"

#include <exception>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gamma2 {
namespace {

constexpr std::size_t kPairwiseBlock = 8;

double pairwise_range(const double* v, std::size_t n) {
  if (n <= kPairwiseBlock) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_range(v, half) + pairwise_range(v + half, n - half);
}

}  // namespace

void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gamma2_for_each_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

double pairwise_sum(std::span<const double> values) {
  return pairwise_range(values.data(), values.size());
}

double weighted_sum(std::span<const double> weights, std::span<const double> values) {
  if (weights.size() != values.size()) {
    throw std::invalid_argument("weighted_sum: size mismatch");
  }
  std::vector<double> products(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) products[i] = weights[i] * values[i];
  return pairwise_sum(products);
}

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gamma2
