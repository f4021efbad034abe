#pragma once

// Evaluation-at-delta and its explicit pseudo-inverse h: from an object X in
// the I-fiber of E|J, h(X) is the bifibered functor sending a span
// I <-p- M -q-> K to q_! p^* X, and every sum-preserving fibered functor L is
// recovered (up to canonical comparison isomorphisms, which are constructed
// here, not assumed) from its value L(delta).

#include <optional>

#include "fibpoly/fibspan.hpp"
#include "fibpoly/rng.hpp"

namespace fibpoly {

/// q_! p^* X for X over J x I (the I-fiber of E|J) and a span S in E|I.
/// Result lives over J x K for K the fiber base of S.
SliceObj h_apply(const FinSet& j, const FinSet& i, const SliceObj& x, const Span& s);

/// Action of h(X) on a span morphism; the vertical, cartesian and opcartesian
/// cases collapse to a single elementwise formula.
SpanMap h_on_morphisms(const FinSet& j, const FinSet& i, const SliceObj& x, const SpanMap& f);

/// h(X) packaged as a black-box fibered functor E|I -> E|J.
class HBox final : public FiberedFunctorBox {
 public:
  HBox(FinSet j, FinSet i, SliceObj x);

  const FinSet& dom_base() const override { return i_; }
  const FinSet& cod_base() const override { return j_; }
  Span eval_obj(const Span& s) const override;
  SpanMap eval_map(const SpanMap& f) const override;

 private:
  FinSet j_, i_;
  SliceObj x_;  // over J x I
};

struct ExtractSpanResult {
  std::optional<Span> span;  // I <-p- M -q-> J
  Report report;
};

/// Reads off L(delta) as a span and certifies, within budget, that the
/// comparison maps of the pseudo-inverse realize a natural isomorphism
/// h(L(delta)) ~ L.  Requires L to pass the E-indexed-sums audit.
ExtractSpanResult extract_span(const FiberedFunctorBox& l, const AuditBudget& budget = {});

struct ExtractBaseChangeResult {
  std::optional<FinMap> map;  // a : J -> I with L naturally isomorphic to a^*
  Report report;
};

/// For sum- and terminal-preserving L, the extracted span has invertible
/// right leg; returns p o q^-1 : J -> I.
ExtractBaseChangeResult extract_basechange(const FiberedFunctorBox& l,
                                           const AuditBudget& budget = {});

/// Pool of test spans over a base: canonical small ones plus seeded samples.
std::vector<Span> sample_spans(Rng& rng, const FinSet& base, int max_size, int count);

}  // namespace fibpoly
