#pragma once

// Seeded generation of small sets, maps and spans for sampled audits.
// Everything is driven by a single mt19937_64 so a seed pins the whole run.

#include <random>

#include "fibpoly/fibspan.hpp"

namespace fibpoly {

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int below(int n) {  // uniform in [0, n)
    return static_cast<int>(engine() % static_cast<std::uint64_t>(n));
  }
};

inline FinSet random_finset(Rng& rng, int max_size) {
  return FinSet(rng.below(max_size + 1));
}

/// Uniform random map A -> B; requires |B| > 0 unless |A| = 0.
inline FinMap random_finmap(Rng& rng, const FinSet& a, const FinSet& b) {
  std::vector<int> t(a.size);
  for (int i = 0; i < a.size; ++i) t[i] = rng.below(b.size);
  return {a, b, std::move(t)};
}

inline Span random_span(Rng& rng, const FinSet& left_base, int max_size) {
  FinSet k = random_finset(rng, max_size);
  int apex_max = (left_base.size == 0 || k.size == 0) ? 0 : max_size;
  FinSet m = random_finset(rng, apex_max);
  return {left_base, m, k, random_finmap(rng, m, left_base), random_finmap(rng, m, k)};
}

inline SliceObj random_slice_obj(Rng& rng, const FinSet& base, int max_total) {
  FinSet total = random_finset(rng, base.size == 0 ? 0 : max_total);
  return {base, total, random_finmap(rng, total, base)};
}

}  // namespace fibpoly
