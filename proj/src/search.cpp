#include "gamma2/search.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gamma2/errors.hpp"
#include "gamma2/rng.hpp"

namespace gamma2 {

namespace {

constexpr int kCheckZNodes = 32;
constexpr int kCheckAzimuthNodes = 64;

enum class Outcome { ok, rejected, unresolved };

struct SampleResult {
  Outcome outcome = Outcome::rejected;
  double ratio = 0.0;
};

}  // namespace

FamilyDescriptor search_sample(const SearchOptions& options, std::size_t k) {
  const CounterRng rng = CounterRng(options.seed).split(0x5ea4c4);
  FamilyDescriptor desc;
  desc.family = "even_poly";
  desc.sample.seed = rng.bits(0, k);
  desc.sample.amplitude = rng.uniform(1, k, options.amplitude / 200.0, options.amplitude);
  desc.sample.mode = k % 2 == 0 ? SampleMode::log_density : SampleMode::density;
  desc.sample.dim = 3;
  desc.sample.max_degree = 4;
  return desc;
}

SearchSummary random_search(const SearchOptions& options, Execution exec) {
  if (!(options.amplitude > 0.0) || !std::isfinite(options.amplitude)) {
    throw std::invalid_argument("random_search: amplitude must be positive and finite");
  }
  if (!(options.resolution_tolerance > 0.0)) {
    throw std::invalid_argument("random_search: resolution tolerance must be positive");
  }
  const SphereQuadrature& fine = default_sphere_rule();
  const SphereQuadrature coarse = product_sphere_rule(kCheckZNodes, kCheckAzimuthNodes);

  std::vector<SampleResult> results(options.count);
  for_each_index(options.count, exec, [&](std::size_t k) {
    SampleResult& r = results[k];
    try {
      const SymmetricPositiveFunction f = build_family(search_sample(options, k));
      const double ratio = gamma2_ratio(f, fine);
      const double check = gamma2_ratio(f, coarse);
      r.ratio = ratio;
      r.outcome = std::abs(ratio - check) <= options.resolution_tolerance * ratio
                      ? Outcome::ok
                      : Outcome::unresolved;
    } catch (const PositivityError&) {
      r.outcome = Outcome::rejected;
    } catch (const UndefinedRatio&) {
      r.outcome = Outcome::rejected;
    }
  });

  SearchSummary s;
  s.count = options.count;
  std::size_t best = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const SampleResult& r = results[k];
    if (r.outcome == Outcome::rejected) {
      ++s.rejected;
      continue;
    }
    if (r.outcome == Outcome::unresolved) {
      ++s.unresolved;
      continue;
    }
    ++s.evaluated;
    if (r.ratio < 6.0) ++s.below_six;
    if (!s.min_ratio || r.ratio < *s.min_ratio) {
      s.min_ratio = r.ratio;
      best = k;
    }
    if (!s.max_ratio || r.ratio > *s.max_ratio) s.max_ratio = r.ratio;
  }
  if (s.min_ratio) s.argmin = search_sample(options, best);
  return s;
}

}  // namespace gamma2
