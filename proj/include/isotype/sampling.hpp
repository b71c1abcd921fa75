#pragma once

#include <cstdint>
#include <vector>

namespace isotype {

// SplitMix64. This exact generator is part of the CLI contract: sampled
// verification reports must be reproducible from the seed alone, including
// by reimplementations in other languages.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // index draw: next() reduced mod dim (documented modulo bias accepted)
  std::size_t index(std::size_t dim) { return (std::size_t)(next() % dim); }
};

// Exhaustive or seeded-sample sweep over basis tuples. A sampled k-tuple is
// k consecutive index draws; the full list is generated up front so parallel
// workers see identical tuples regardless of partitioning.
struct SweepPlan {
  bool sampled = false;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;

  static SweepPlan exhaustive() { return SweepPlan{}; }
  static SweepPlan sample(std::uint64_t count, std::uint64_t seed) {
    return SweepPlan{true, count, seed};
  }

  // number of tuples a sweep over `total` would run under this plan
  unsigned long long effective(unsigned long long total) const {
    if (!sampled || total <= sample_count)
      return total;
    return sample_count;
  }

  bool samples(unsigned long long total) const {
    return sampled && total > sample_count;
  }

  std::vector<std::vector<std::size_t>> tuples(std::size_t arity,
                                               std::size_t dim) const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve((std::size_t)sample_count);
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
      std::vector<std::size_t> t(arity);
      for (std::size_t j = 0; j < arity; ++j)
        t[j] = rng.index(dim);
      out.push_back(std::move(t));
    }
    return out;
  }
};

} // namespace isotype
