#include "fibpoly/fibspan.hpp"

namespace fibpoly {

Span::Span(FinSet i, FinSet m, FinSet k, FinMap p_, FinMap q_)
    : left_base(std::move(i)), apex(std::move(m)), fiber_base(std::move(k)),
      p(std::move(p_)), q(std::move(q_)) {
  if (p.dom != apex || p.cod != left_base)
    throw structure_error("Span: left leg " + describe(p) + " does not match apex/left_base");
  if (q.dom != apex || q.cod != fiber_base)
    throw structure_error("Span: right leg " + describe(q) + " does not match apex/fiber_base");
}

SpanMap SpanMap::make(Span src, Span dst, FinMap v, FinMap w) {
  SpanMap f{std::move(src), std::move(dst), std::move(v), std::move(w)};
  validate(f);
  return f;
}

void validate(const SpanMap& f) {
  if (f.src.left_base != f.dst.left_base)
    throw structure_error("SpanMap: spans over different left bases");
  if (f.v.dom != f.src.apex || f.v.cod != f.dst.apex)
    throw structure_error("SpanMap: v does not match the apexes");
  if (f.w.dom != f.src.fiber_base || f.w.cod != f.dst.fiber_base)
    throw structure_error("SpanMap: w does not match the fiber bases");
  if (compose(f.dst.p, f.v) != f.src.p)
    throw structure_error("SpanMap: triangle over the left base does not commute");
  if (compose(f.dst.q, f.v) != compose(f.w, f.src.q))
    throw structure_error("SpanMap: square over the fiber bases does not commute");
}

bool is_valid(const SpanMap& f) {
  try {
    validate(f);
    return true;
  } catch (const structure_error&) {
    return false;
  }
}

SpanMap identity_span_map(const Span& s) {
  return {s, s, identity(s.apex), identity(s.fiber_base)};
}

SpanMap compose(const SpanMap& g, const SpanMap& f) {
  if (f.dst != g.src) throw structure_error("compose(SpanMap): middle spans differ");
  return {f.src, g.dst, compose(g.v, f.v), compose(g.w, f.w)};
}

Span delta_span(const FinSet& i) { return {i, i, i, identity(i), identity(i)}; }

Span terminal_span(const FinSet& i) {
  return {i, i, terminal(), identity(i), unique_to_terminal(i)};
}

SpanMap to_terminal_span(const Span& s) {
  return SpanMap::make(s, terminal_span(s.left_base), s.p,
                       unique_to_terminal(s.fiber_base));
}

// ---- fiber identification ------------------------------------------------

SliceObj to_fiber(const Span& s) {
  Product pr = product(s.left_base, s.fiber_base);
  return {pr.carrier, s.apex, pair_into_product(pr, s.p, s.q)};
}

Span from_fiber(const FinSet& i, const FinSet& k, const SliceObj& x) {
  Product pr = product(i, k);
  if (x.base != pr.carrier)
    throw structure_error("from_fiber: object is not over the product " + describe(pr.carrier));
  return {i, x.total, k, compose(pr.pr1, x.proj), compose(pr.pr2, x.proj)};
}

SpanMap from_fiber_map(const FinSet& i, const FinSet& k, const SliceMap& f) {
  return SpanMap::make(from_fiber(i, k, f.src), from_fiber(i, k, f.dst),
                       FinMap{f.src.total, f.dst.total, f.map.table}, identity(k));
}

// ---- cartesian / opcartesian structure -----------------------------------

CartesianLift cartesian_lift(const FinMap& a, const Span& s) {
  if (a.cod != s.fiber_base)
    throw structure_error("cartesian_lift: arrow " + describe(a) +
                          " does not target the fiber base");
  CartesianLift out;
  out.pb = pullback(s.q, a);
  out.lifted = Span{s.left_base, out.pb.carrier, a.dom,
                    compose(s.p, out.pb.pr1), out.pb.pr2};
  out.to_src = SpanMap{out.lifted, s, out.pb.pr1, a};
  return out;
}

OpcartesianLift opcartesian_lift(const FinMap& w, const Span& s) {
  if (w.dom != s.fiber_base)
    throw structure_error("opcartesian_lift: arrow " + describe(w) +
                          " does not start at the fiber base");
  OpcartesianLift out;
  out.pushed = Span{s.left_base, s.apex, w.cod, s.p, compose(w, s.q)};
  out.from_src = SpanMap{s, out.pushed, identity(s.apex), w};
  return out;
}

bool is_vertical(const SpanMap& f) {
  return f.src.fiber_base == f.dst.fiber_base && f.w == identity(f.src.fiber_base);
}

bool is_cartesian(const SpanMap& f) {
  if (!is_valid(f)) return false;
  Pullback pb = pullback(f.dst.q, f.w);
  if (pb.carrier.size != f.src.apex.size) return false;
  std::vector<char> hit(pb.carrier.size, 0);
  for (int m = 0; m < f.src.apex.size; ++m) {
    int idx = pb.index(f.v(m), f.src.q(m));
    if (idx < 0 || hit[idx]) return false;
    hit[idx] = 1;
  }
  return true;
}

bool is_opcartesian(const SpanMap& f) { return is_valid(f) && is_iso(f.v); }

// ---- hom-sets and isomorphism --------------------------------------------

std::vector<SpanMap> span_homs(const Span& src, const Span& dst) {
  std::vector<SpanMap> out;
  if (src.left_base != dst.left_base) return out;
  for (const FinMap& w : all_maps(src.fiber_base, dst.fiber_base))
    for (const FinMap& v : all_maps(src.apex, dst.apex)) {
      SpanMap f{src, dst, v, w};
      if (is_valid(f)) out.push_back(std::move(f));
    }
  return out;
}

std::vector<SpanMap> vertical_span_homs(const Span& src, const Span& dst) {
  std::vector<SpanMap> out;
  if (src.left_base != dst.left_base || src.fiber_base != dst.fiber_base) return out;
  FinMap w = identity(src.fiber_base);
  for (const FinMap& v : all_maps(src.apex, dst.apex)) {
    SpanMap f{src, dst, v, w};
    if (is_valid(f)) out.push_back(std::move(f));
  }
  return out;
}

std::optional<SpanMap> find_span_iso(const Span& src, const Span& dst) {
  if (src.left_base != dst.left_base || src.apex.size != dst.apex.size ||
      src.fiber_base.size != dst.fiber_base.size)
    return std::nullopt;
  for (const SpanMap& f : span_homs(src, dst))
    if (is_iso(f.v) && is_iso(f.w)) return f;
  return std::nullopt;
}

// ---- plain (1-fiber) view of a box ---------------------------------------

SliceObj box_plain_obj(const FiberedFunctorBox& box, const SliceObj& xi) {
  if (xi.base != box.dom_base())
    throw structure_error("box_plain_obj: object not over the box domain base");
  Span s{xi.base, xi.total, terminal(), xi.proj, unique_to_terminal(xi.total)};
  Span r = box.eval_obj(s);
  return {r.left_base, r.apex, r.p};
}

SliceMap box_plain_map(const FiberedFunctorBox& box, const SliceMap& f) {
  Span s0{f.src.base, f.src.total, terminal(), f.src.proj, unique_to_terminal(f.src.total)};
  Span s1{f.dst.base, f.dst.total, terminal(), f.dst.proj, unique_to_terminal(f.dst.total)};
  SpanMap m = box.eval_map(SpanMap::make(s0, s1, f.map, identity(terminal())));
  return {box_plain_obj(box, f.src), box_plain_obj(box, f.dst),
          FinMap{m.src.apex, m.dst.apex, m.v.table}};
}

}  // namespace fibpoly
