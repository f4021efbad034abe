#pragma once

// The fibered slice E|I as spans I <- M -> K, fibered over the ambient
// category by the K-leg.  Cartesian lifts pull the apex back along the
// fiber leg; opcartesian lifts postcompose it.  The K-fiber is identified
// with E/(I x K) via to_fiber/from_fiber.  Fibered functors between fibered
// slices enter as black boxes and are audited, never trusted.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fibpoly/report.hpp"
#include "fibpoly/slice.hpp"

namespace fibpoly {

/// A span  left_base <-p- apex -q-> fiber_base, an object of E|left_base
/// in the fiber over fiber_base.
struct Span {
  FinSet left_base;
  FinSet apex;
  FinSet fiber_base;
  FinMap p;  // apex -> left_base
  FinMap q;  // apex -> fiber_base

  Span() = default;
  Span(FinSet i, FinSet m, FinSet k, FinMap p_, FinMap q_);

  bool operator==(const Span&) const = default;
};

/// A span morphism src -> dst: v between apexes, w between fiber bases,
/// with dst.p o v = src.p and dst.q o v = w o src.q.
struct SpanMap {
  Span src;
  Span dst;
  FinMap v;
  FinMap w;

  bool operator==(const SpanMap&) const = default;

  /// Validating factory; the plain aggregate is kept open so that audits can
  /// hold deliberately ill-formed values produced by broken boxes.
  static SpanMap make(Span src, Span dst, FinMap v, FinMap w);
};

bool is_valid(const SpanMap& f);
void validate(const SpanMap& f);  // throws structure_error with a witness

SpanMap identity_span_map(const Span& s);
SpanMap compose(const SpanMap& g, const SpanMap& f);

/// The diagonal object delta in the I-fiber of E|I: the identity span.
Span delta_span(const FinSet& i);

/// The terminal object 1_I of E|I (in the 1-fiber): I <-id- I -> 1.
Span terminal_span(const FinSet& i);

/// The unique map S -> 1_{left_base} in E|left_base.
SpanMap to_terminal_span(const Span& s);

// ---- fiber identification (E|I)^K ~ E/(I x K) ----------------------------

SliceObj to_fiber(const Span& s);
Span from_fiber(const FinSet& i, const FinSet& k, const SliceObj& x);
/// Vertical span morphism from a slice map over I x K.
SpanMap from_fiber_map(const FinSet& i, const FinSet& k, const SliceMap& f);

// ---- cartesian / opcartesian structure -----------------------------------

struct CartesianLift {
  Span lifted;    // over a.dom
  SpanMap to_src; // lifted -> s, cartesian, with w = a
  Pullback pb;    // of (s.q, a); lifted.apex enumerates pairs (m, k')
};

CartesianLift cartesian_lift(const FinMap& a, const Span& s);

struct OpcartesianLift {
  Span pushed;      // over w.cod, same apex
  SpanMap from_src; // s -> pushed, opcartesian, with v = id
};

OpcartesianLift opcartesian_lift(const FinMap& w, const Span& s);

bool is_vertical(const SpanMap& f);
bool is_cartesian(const SpanMap& f);
bool is_opcartesian(const SpanMap& f);

// ---- hom-sets and isomorphism --------------------------------------------

/// All span morphisms src -> dst (exponential; desk scale only).
std::vector<SpanMap> span_homs(const Span& src, const Span& dst);
/// All vertical span morphisms (w = id; requires equal fiber bases).
std::vector<SpanMap> vertical_span_homs(const Span& src, const Span& dst);
/// A span isomorphism (v, w both invertible), if one exists.
std::optional<SpanMap> find_span_iso(const Span& src, const Span& dst);

// ---- black-box fibered functors ------------------------------------------

/// A fibered functor E|dom_base -> E|cod_base, evaluated span by span.
/// Implementations must preserve the fiber base and the w-component of
/// morphisms; whether they actually do, and whether they preserve cartesian
/// arrows, is checked by audit_fibered, never assumed.
class FiberedFunctorBox {
 public:
  virtual ~FiberedFunctorBox() = default;

  virtual const FinSet& dom_base() const = 0;
  virtual const FinSet& cod_base() const = 0;

  virtual Span eval_obj(const Span& s) const = 0;
  virtual SpanMap eval_map(const SpanMap& f) const = 0;

  /// Boxes that are not safe for concurrent evaluation declare it here;
  /// the audit honors the declaration.
  virtual bool safe_for_concurrent_eval() const { return true; }
};

using BoxPtr = std::shared_ptr<const FiberedFunctorBox>;

struct AuditBudget {
  int max_size = 3;       // all generated sets have size <= max_size
  int max_samples = 200;  // sampled morphism checks
  std::uint64_t seed = 0xf1b0f1b0ULL;
};

/// Checks that a box behaves as a fibered functor: preserves fiber bases and
/// w-components, identities and composition, and sends cartesian lifts to
/// cartesian arrows.  Reports the first violation as a witness.
Report audit_fibered(const FiberedFunctorBox& box, const AuditBudget& budget = {});

/// audit_fibered plus preservation of opcartesian lifts; for a fibered
/// functor between fibered slices this is exactly preservation of E-indexed
/// sums (the Beck-Chevalley cells of E|I itself always hold).
Report audit_sums(const FiberedFunctorBox& box, const AuditBudget& budget = {});

/// Additionally checks that fiberwise terminal objects go to terminal objects.
Report audit_terminal(const FiberedFunctorBox& box, const AuditBudget& budget = {});

// ---- tensorial strength --------------------------------------------------

/// S (x) xi in E/I: carrier S x total(xi) (s-major), projecting through xi.
SliceObj tensor(const FinSet& s, const SliceObj& xi);
SliceMap tensor_map(const FinSet& s, const SliceMap& f);

struct StrengthResult {
  bool defined = false;     // false if the box broke the construction
  std::string failure;
  SliceMap map;             // tensor(S, F1(xi)) -> F1(tensor(S, xi))
};

/// The canonical strength component of the 1-fiber of a fibered functor,
/// built from a cartesian lift along S -> 1, the box itself, and the mate
/// of its cobase-change cell.
StrengthResult strength(const FiberedFunctorBox& box, const FinSet& s, const SliceObj& xi);

/// The 1-fiber of a box, on objects and slice maps over its bases.
SliceObj box_plain_obj(const FiberedFunctorBox& box, const SliceObj& xi);
SliceMap box_plain_map(const FiberedFunctorBox& box, const SliceMap& f);

}  // namespace fibpoly
