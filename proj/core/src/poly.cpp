#include "fibpoly/poly.hpp"

#include <algorithm>

namespace fibpoly {

Polynomial::Polynomial(FinSet i, FinSet e, FinSet b, FinSet j, FinMap s_, FinMap p_, FinMap t_)
    : I(std::move(i)), E(std::move(e)), B(std::move(b)), J(std::move(j)),
      s(std::move(s_)), p(std::move(p_)), t(std::move(t_)) {
  if (s.dom != E || s.cod != I) throw structure_error("Polynomial: s is not E -> I");
  if (p.dom != E || p.cod != B) throw structure_error("Polynomial: p is not E -> B");
  if (t.dom != B || t.cod != J) throw structure_error("Polynomial: t is not B -> J");
}

Polynomial Polynomial::identity_poly(const FinSet& i) {
  return {i, i, i, i, identity(i), identity(i), identity(i)};
}

SliceObj eval_plain(const Polynomial& poly, const SliceObj& x) {
  if (x.base != poly.I) throw structure_error("eval_plain: object not over I");
  return dep_sum(poly.t, dep_prod(poly.p, base_change(poly.s, x).obj).obj);
}

SliceMap eval_plain_map(const Polynomial& poly, const SliceMap& f) {
  return dep_sum_map(poly.t, dep_prod_map(poly.p, base_change_map(poly.s, f)));
}

std::vector<std::int64_t> eval_fiber_sizes_formula(const Polynomial& poly,
                                                   const std::vector<std::int64_t>& x_sizes) {
  if (static_cast<int>(x_sizes.size()) != poly.I.size)
    throw structure_error("eval_fiber_sizes_formula: wrong number of fiber sizes");
  std::vector<std::int64_t> out(poly.J.size, 0);
  for (int b = 0; b < poly.B.size; ++b) {
    std::int64_t prod = 1;
    for (int e = 0; e < poly.E.size; ++e)
      if (poly.p(e) == b) prod *= x_sizes[poly.s(e)];
    out[poly.t(b)] += prod;
  }
  return out;
}

ComposedBox eval_fibered(const Polynomial& poly) {
  return {poly.I, poly.J,
          {PolyOp{OpKind::base_change, poly.s}, PolyOp{OpKind::dep_prod, poly.p},
           PolyOp{OpKind::dep_sum, poly.t}}};
}

ComposedBox left_part_box(const FinMap& s, const FinMap& p) {
  if (s.dom != p.dom) throw structure_error("left_part_box: legs have different domains");
  return {p.cod, s.cod, {PolyOp{OpKind::base_change, p}, PolyOp{OpKind::dep_sum, s}}};
}

ComposedBox middle_part_box(const FinMap& s, const FinMap& p) {
  if (s.dom != p.dom) throw structure_error("middle_part_box: legs have different domains");
  return {s.cod, p.cod, {PolyOp{OpKind::base_change, s}, PolyOp{OpKind::dep_prod, p}}};
}

namespace {

// Backtracking search for a bijection on B commuting with t, then on E
// commuting with s and the p-square.
struct BridgeSearch {
  const Polynomial& a;
  const Polynomial& b;
  std::vector<int> on_b;
  std::vector<char> used_b;
  std::vector<int> on_e;
  std::vector<char> used_e;

  bool match_e(int e) {
    if (e == a.E.size) return true;
    for (int e2 = 0; e2 < b.E.size; ++e2) {
      if (used_e[e2] || b.s(e2) != a.s(e) || b.p(e2) != on_b[a.p(e)]) continue;
      used_e[e2] = 1;
      on_e[e] = e2;
      if (match_e(e + 1)) return true;
      used_e[e2] = 0;
    }
    return false;
  }

  bool match_b(int bb) {
    if (bb == a.B.size) {
      std::fill(used_e.begin(), used_e.end(), 0);
      return match_e(0);
    }
    for (int b2 = 0; b2 < b.B.size; ++b2) {
      if (used_b[b2] || b.t(b2) != a.t(bb)) continue;
      used_b[b2] = 1;
      on_b[bb] = b2;
      if (match_b(bb + 1)) return true;
      used_b[b2] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<BridgeWitness> bridge_equivalent(const Polynomial& a, const Polynomial& b) {
  if (a.I != b.I || a.J != b.J)
    throw structure_error("bridge_equivalent: endpoints I/J differ");
  if (a.E.size != b.E.size || a.B.size != b.B.size) return std::nullopt;
  BridgeSearch search{a, b,
                      std::vector<int>(a.B.size), std::vector<char>(b.B.size, 0),
                      std::vector<int>(a.E.size), std::vector<char>(b.E.size, 0)};
  if (!search.match_b(0)) return std::nullopt;
  return BridgeWitness{FinMap{a.E, b.E, search.on_e}, FinMap{a.B, b.B, search.on_b}};
}

}  // namespace fibpoly
