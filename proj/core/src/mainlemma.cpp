#include "fibpoly/mainlemma.hpp"

#include <algorithm>

#include "fibpoly/json_io.hpp"

namespace fibpoly {

namespace {

using nlohmann::json;

}  // namespace

SliceObj h_apply(const FinSet& j, const FinSet& i, const SliceObj& x, const Span& s) {
  Product ji = product(j, i);
  if (s.left_base != i) throw structure_error("h_apply: span not over I");
  if (x.base != ji.carrier) throw structure_error("h_apply: object not over J x I");
  FinMap wp = product_map(identity(j), s.p);  // J x M -> J x I
  FinMap wq = product_map(identity(j), s.q);  // J x M -> J x K
  return dep_sum(wq, base_change(wp, x).obj);
}

HBox::HBox(FinSet j, FinSet i, SliceObj x) : j_(std::move(j)), i_(std::move(i)), x_(std::move(x)) {
  if (x_.base != product(j_, i_).carrier) throw structure_error("HBox: object not over J x I");
}

Span HBox::eval_obj(const Span& s) const {
  return from_fiber(j_, s.fiber_base, h_apply(j_, i_, x_, s));
}

SpanMap HBox::eval_map(const SpanMap& f) const {
  validate(f);
  if (f.src.left_base != i_) throw structure_error("HBox: morphism not over the domain base");
  BaseChangeData bs = base_change(product_map(identity(j_), f.src.p), x_);
  BaseChangeData bd = base_change(product_map(identity(j_), f.dst.p), x_);
  SliceObj hs = dep_sum(product_map(identity(j_), f.src.q), bs.obj);
  SliceObj hd = dep_sum(product_map(identity(j_), f.dst.q), bd.obj);
  Product pdst = product(j_, f.dst.apex);

  // (x, (j, m')) |-> (x, (j, v(m'))); well defined because the morphism
  // commutes with the left legs.
  std::vector<int> t(hs.total.size);
  for (int e = 0; e < hs.total.size; ++e) {
    int x_el = bs.back(e);
    int jm = bs.obj.proj(e);
    int jv = jm / f.src.apex.size;
    int m = jm % f.src.apex.size;
    t[e] = bd.index(x_el, pdst.index(jv, f.v(m)));
  }
  Span fsrc = from_fiber(j_, f.src.fiber_base, hs);
  Span fdst = from_fiber(j_, f.dst.fiber_base, hd);
  return SpanMap::make(fsrc, fdst, FinMap{fsrc.apex, fdst.apex, std::move(t)}, f.w);
}

SpanMap h_on_morphisms(const FinSet& j, const FinSet& i, const SliceObj& x, const SpanMap& f) {
  return HBox(j, i, x).eval_map(f);
}

std::vector<Span> sample_spans(Rng& rng, const FinSet& base, int max_size, int count) {
  std::vector<Span> pool;
  pool.push_back(terminal_span(base));
  pool.push_back(delta_span(base));
  pool.push_back(Span{base, FinSet(0), FinSet(1),
                      FinMap{FinSet(0), base, {}}, FinMap{FinSet(0), FinSet(1), {}}});
  pool.push_back(Span{base, FinSet(0), FinSet(0),
                      FinMap{FinSet(0), base, {}}, FinMap{FinSet(0), FinSet(0), {}}});
  for (int n = 0; n < count; ++n) pool.push_back(random_span(rng, base, max_size));
  return pool;
}

namespace {

struct Comparison {
  std::optional<SpanMap> nu;  // h(X)(S) -> L(S), vertical iso
  Report report;
};

// The canonical comparison at S, built from L's images of the cartesian and
// opcartesian factorization of S through delta.  Every step that the theorem
// guarantees is checked, because the box may lie.
Comparison comparison_at(const FiberedFunctorBox& l, const Span& ldelta, const SliceObj& x,
                         const Span& s) {
  const FinSet& i = l.dom_base();
  const FinSet& j = l.cod_base();

  CartesianLift cl = cartesian_lift(s.p, delta_span(i));  // pairs (i, m), i = p(m)
  OpcartesianLift oc = opcartesian_lift(s.q, cl.lifted);
  SpanMap iso_s = SpanMap::make(oc.pushed, s, cl.pb.pr2, identity(s.fiber_base));

  SpanMap lcart = l.eval_map(cl.to_src);     // L(lifted) -> L(delta), w = s.p
  SpanMap locart = l.eval_map(oc.from_src);  // L(lifted) -> L(pushed), w = s.q
  SpanMap liso = l.eval_map(iso_s);          // L(pushed) -> L(S),      w = id
  if (!is_valid(lcart) || !is_valid(locart) || !is_valid(liso))
    return {std::nullopt, Report::fail("image of a factorization arrow is not a span morphism",
                                       json(s))};
  if (!is_iso(liso.v))
    return {std::nullopt,
            Report::fail("image of a span isomorphism is not an isomorphism", json(s))};

  // alpha: factor L(cartesian lift) through the chosen cartesian lift of s.p
  // over L(delta); bijective exactly when L preserved this cartesian arrow.
  CartesianLift cll = cartesian_lift(s.p, ldelta);  // pairs (x-element, m)
  std::vector<int> alpha_inv(std::max(1, cll.pb.carrier.size), -1);
  if (lcart.src.apex.size != cll.pb.carrier.size)
    return {std::nullopt, Report::fail("cartesian factor is not invertible", json(s))};
  for (int a = 0; a < lcart.src.apex.size; ++a) {
    int idx = cll.pb.index(lcart.v(a), lcart.src.q(a));
    if (idx < 0 || alpha_inv[idx] >= 0)
      return {std::nullopt, Report::fail("cartesian factor is not invertible", json(s))};
    alpha_inv[idx] = a;
  }

  // h(X)(S) elements are (x-element, (j, m)); the (x-element, m) part matches
  // the chosen cartesian lift's pairs, so transport along alpha^-1 and the
  // opcartesian/iso images.
  BaseChangeData bcp = base_change(product_map(identity(j), s.p), x);
  SliceObj hs = dep_sum(product_map(identity(j), s.q), bcp.obj);
  Span hspan = from_fiber(j, s.fiber_base, hs);
  Span ls = l.eval_obj(s);
  std::vector<int> t(hs.total.size);
  for (int e = 0; e < hs.total.size; ++e) {
    int x_el = bcp.back(e);
    int m = bcp.obj.proj(e) % s.apex.size;
    int a = alpha_inv[cll.pb.index(x_el, m)];
    t[e] = liso.v(locart.v(a));
  }
  try {
    SpanMap nu =
        SpanMap::make(hspan, ls, FinMap{hspan.apex, ls.apex, std::move(t)}, identity(s.fiber_base));
    if (!is_iso(nu.v))
      return {std::nullopt, Report::fail("comparison map is not an isomorphism", json(s))};
    return {std::move(nu), Report::pass()};
  } catch (const structure_error& e) {
    return {std::nullopt,
            Report::fail(std::string("comparison map is malformed: ") + e.what(), json(s))};
  }
}

}  // namespace

ExtractSpanResult extract_span(const FiberedFunctorBox& l, const AuditBudget& budget) {
  Report audit = audit_sums(l, budget);
  if (!audit.ok()) {
    audit.details["stage"] = "sums-audit";
    return {std::nullopt, std::move(audit)};
  }

  const FinSet& i = l.dom_base();
  const FinSet& j = l.cod_base();
  try {
    Span ldelta = l.eval_obj(delta_span(i));                  // J <- M -> I
    Span extracted{i, ldelta.apex, j, ldelta.q, ldelta.p};    // I <- M -> J
    SliceObj x = to_fiber(ldelta);                            // over J x I

    Rng rng(budget.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Span> pool =
        sample_spans(rng, i, budget.max_size, std::max(8, budget.max_samples / 8));
    std::vector<SpanMap> nu;
    nu.reserve(pool.size());
    for (const Span& s : pool) {
      Comparison c = comparison_at(l, ldelta, x, s);
      if (!c.nu) {
        c.report.details["stage"] = "comparison";
        return {std::nullopt, std::move(c.report)};
      }
      nu.push_back(std::move(*c.nu));
    }

    HBox h(j, i, x);
    for (int n = 0; n < budget.max_samples; ++n) {
      int i1 = rng.below(static_cast<int>(pool.size()));
      int i2 = rng.below(static_cast<int>(pool.size()));
      std::vector<SpanMap> homs = span_homs(pool[i1], pool[i2]);
      if (homs.empty()) continue;
      const SpanMap& f = homs[rng.below(static_cast<int>(homs.size()))];
      if (compose(l.eval_map(f), nu[i1]) != compose(nu[i2], h.eval_map(f)))
        return {std::nullopt,
                Report::fail("comparison maps are not natural", json{{"arrow", f}})};
    }

    json details{{"span", extracted},
                 {"spans_checked", pool.size()},
                 {"bounds", json{{"max_size", budget.max_size},
                                 {"max_samples", budget.max_samples},
                                 {"seed", budget.seed}}}};
    return {std::move(extracted), Report::pass(std::move(details))};
  } catch (const structure_error& e) {
    return {std::nullopt, Report::fail(std::string("box raised a structural error: ") + e.what())};
  }
}

ExtractBaseChangeResult extract_basechange(const FiberedFunctorBox& l, const AuditBudget& budget) {
  Report audit = audit_terminal(l, budget);
  if (!audit.ok()) {
    audit.details["stage"] = "terminal-audit";
    return {std::nullopt, std::move(audit)};
  }
  ExtractSpanResult es = extract_span(l, budget);
  if (!es.span) return {std::nullopt, std::move(es.report)};
  if (!is_iso(es.span->q))
    return {std::nullopt,
            Report::fail("extracted span has non-invertible right leg", json(*es.span))};
  FinMap a = compose(es.span->p, inverse(es.span->q));  // J -> I
  es.report.details["map"] = a;
  return {std::move(a), std::move(es.report)};
}

}  // namespace fibpoly
