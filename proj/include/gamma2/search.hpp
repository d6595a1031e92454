#pragma once

// Seeded random search for small Gamma_2 ratios over even polynomial test
// functions on S^2. Sample k uses log-density mode for even k and
// squared-quadratic density mode for odd k, with its amplitude drawn from
// [amplitude / 200, amplitude].

#include <cstdint>
#include <optional>

#include "gamma2/families.hpp"
#include "gamma2/kernels.hpp"

namespace gamma2 {

struct SearchOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  double amplitude = 2.0;
  /// Samples whose ratio moves by more than this (relative) between the
  /// default product rule and the coarse check rule are set aside as unresolved.
  double resolution_tolerance = 1e-6;
};

struct SearchSummary {
  std::size_t count = 0;
  std::size_t evaluated = 0;
  std::size_t rejected = 0;    // positivity failure or undefined ratio
  std::size_t unresolved = 0;  // failed the coarse-rule self-check
  std::size_t below_six = 0;
  std::optional<double> min_ratio;
  std::optional<double> max_ratio;
  std::optional<FamilyDescriptor> argmin;
};

/// Descriptor of sample k; build_family(descriptor) reproduces it.
FamilyDescriptor search_sample(const SearchOptions& options, std::size_t k);

/// Samples are evaluated independently; the reduction runs in index order, so
/// serial and parallel runs give identical summaries.
SearchSummary random_search(const SearchOptions& options, Execution exec = Execution::parallel);

}  // namespace gamma2
