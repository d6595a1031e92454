#include <doctest.h>

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gamma2/kernels.hpp"
#include "gamma2/rng.hpp"

using namespace gamma2;

TEST_CASE("for_each_index visits every index once in both modes") {
  for (Execution exec : {Execution::serial, Execution::parallel}) {
    for (std::size_t n : {0u, 1u, 7u, 1000u}) {
      std::vector<std::atomic<int>> hits(n);
      for_each_index(n, exec, [&](std::size_t i) { hits[i]++; });
      for (auto& h : hits) CHECK(h.load() == 1);
    }
  }
}

TEST_CASE("for_each_index rethrows a worker exception") {
  for (Execution exec : {Execution::serial, Execution::parallel}) {
    CHECK_THROWS_AS(for_each_index(100, exec,
                                   [](std::size_t i) {
                                     if (i == 37) throw std::domain_error("boom");
                                   }),
                    std::domain_error);
  }
}

TEST_CASE("pairwise summation") {
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{2.5}) == 2.5);
  const CounterRng rng(3);
  std::vector<double> v(100001);
  long double exact = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = rng.uniform(0, i, 0.0, 1.0);
    exact += v[i];
  }
  CHECK(std::abs(pairwise_sum(v) - static_cast<double>(exact)) < 1e-10);
  const std::vector<double> w(v.size(), 0.5);
  CHECK(weighted_sum(w, v) == 0.5 * pairwise_sum(v));
  CHECK_THROWS_AS(weighted_sum(std::vector<double>(3), std::vector<double>(4)),
                  std::invalid_argument);
}

TEST_CASE("counter generator is a pure function of its key") {
  const CounterRng a(99);
  const CounterRng b(99);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(a.bits(3, i) == b.bits(3, i));
    const double u = a.uniform(1, i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(a.bits(0, 0) != a.bits(1, 0));
  CHECK(a.split(1).seed() != a.split(2).seed());
  CHECK(available_threads() >= 1);
}
