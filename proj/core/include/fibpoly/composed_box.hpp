#pragma once

// Fibered functors between fibered slices assembled from the three basic
// fiberwise operations: base change, dependent sum, dependent product.
// At fiber K an op with arrow f acts as (f x id_K)^* / (f x id_K)_! /
// (f x id_K)_* under the identification (E|I)^K ~ E/(I x K).
//
// Morphism action factors an arbitrary span morphism as a vertical arrow
// followed by a cartesian lift; the cartesian part is transported through
// the canonical base-change comparison cells of each op, so the resulting
// box is honestly fibered (and auditable) rather than fiberwise-only.

#include <vector>

#include "fibpoly/fibspan.hpp"

namespace fibpoly {

enum class OpKind { base_change, dep_sum, dep_prod };

/// One step of a composite.  base_change with f : A -> B maps E|B -> E|A;
/// dep_sum / dep_prod with f : A -> B map E|A -> E|B.
struct PolyOp {
  OpKind kind;
  FinMap f;
};

class ComposedBox final : public FiberedFunctorBox {
 public:
  ComposedBox(FinSet dom, FinSet cod, std::vector<PolyOp> ops);

  const FinSet& dom_base() const override { return dom_; }
  const FinSet& cod_base() const override { return cod_; }

  Span eval_obj(const Span& s) const override;
  SpanMap eval_map(const SpanMap& f) const override;

  const std::vector<PolyOp>& ops() const { return ops_; }

 private:
  SliceObj apply_ops_obj(const FinSet& k, SliceObj x) const;
  SliceMap apply_ops_map(const FinSet& k, SliceMap f) const;

  FinSet dom_;
  FinSet cod_;
  std::vector<PolyOp> ops_;
};

/// The identity fibered functor E|I -> E|I.
ComposedBox identity_box(const FinSet& i);

/// Base change a^* : E|I -> E|J for a : J -> I.
ComposedBox base_change_box(const FinMap& a);

/// The span functor q_! p^* : E|I -> E|K for a span I <-p- M -q-> K.
ComposedBox span_box(const Span& s);

}  // namespace fibpoly
