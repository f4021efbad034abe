#pragma once

// Independent oracles for the unit tests: brute-force enumerations and
// counting formulas that deliberately avoid the library's own composite
// constructions.

#include <cstdint>
#include <vector>

#include "fibpoly/fibspan.hpp"
#include "fibpoly/poly.hpp"

namespace oracles {

using namespace fibpoly;

/// Slice-hom count by brute force over all underlying tables.
inline std::int64_t slice_homs_brute(const SliceObj& x, const SliceObj& y) {
  std::int64_t n = 0;
  for (const FinMap& f : all_maps(x.total, y.total))
    if (compose(y.proj, f) == x.proj) ++n;
  return n;
}

/// Fiber sizes of a polynomial evaluation straight from the definition:
/// over j, sum over b in t^-1(j) of the product over e in p^-1(b) of the
/// x-fiber over s(e).  Independent loop structure from the library formula.
inline std::vector<std::int64_t> poly_sizes_brute(const Polynomial& p,
                                                  const SliceObj& x) {
  std::vector<std::int64_t> xf(p.I.size, 0);
  for (int m = 0; m < x.total.size; ++m) ++xf[x.proj(m)];
  std::vector<std::int64_t> out(p.J.size, 0);
  for (int b = 0; b < p.B.size; ++b) {
    std::int64_t prod = 1;
    for (int e = 0; e < p.E.size; ++e)
      if (p.p(e) == b) prod *= xf[p.s(e)];
    out[p.t(b)] += prod;
  }
  return out;
}

/// Span-hom count from the definition: independent choice per apex element
/// of a compatible target element, times compatible w-components; here for
/// fixed w.
inline std::int64_t span_homs_with_w_brute(const Span& a, const Span& x, const FinMap& w) {
  std::int64_t n = 1;
  for (int m = 0; m < a.apex.size && n != 0; ++m) {
    int matches = 0;
    for (int k = 0; k < x.apex.size; ++k)
      if (x.p(k) == a.p(m) && x.q(k) == w(a.q(m))) ++matches;
    n *= matches;
  }
  return n;
}

/// Pullback universal property by brute force: every commuting cone from a
/// one-point set factors uniquely.
inline bool is_pullback_brute(const FinMap& f, const FinMap& g, const Pullback& pb) {
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b) {
      int count = 0;
      for (int c = 0; c < pb.carrier.size; ++c)
        if (pb.pr1(c) == a && pb.pr2(c) == b) ++count;
      int expected = (f(a) == g(b)) ? 1 : 0;
      if (count != expected) return false;
    }
  return true;
}

/// Seeded random polynomial with all four sets of size <= bound and valid maps
/// (empty middle sets whenever a codomain would be empty).
inline Polynomial random_polynomial(Rng& rng, int bound) {
  FinSet i = random_finset(rng, bound);
  FinSet j(1 + rng.below(bound));
  FinSet b = random_finset(rng, bound);
  FinSet e((i.size == 0 || b.size == 0) ? 0 : rng.below(bound + 1));
  if (b.size == 0) b = FinSet(0);
  return {i, e, b, j, random_finmap(rng, e, i), random_finmap(rng, e, b),
          random_finmap(rng, b, j)};
}

}  // namespace oracles
