#include "fibpoly/composed_box.hpp"

namespace fibpoly {

namespace {

// The slice-level incarnation of an op at fiber K.
FinMap at_fiber(const PolyOp& op, const FinSet& k) { return product_map(op.f, identity(k)); }

SliceObj op_obj(const PolyOp& op, const FinSet& k, const SliceObj& x) {
  switch (op.kind) {
    case OpKind::base_change: return base_change(at_fiber(op, k), x).obj;
    case OpKind::dep_sum: return dep_sum(at_fiber(op, k), x);
    case OpKind::dep_prod: return dep_prod(at_fiber(op, k), x).obj;
  }
  throw structure_error("op_obj: bad kind");
}

SliceMap op_map(const PolyOp& op, const FinSet& k, const SliceMap& f) {
  switch (op.kind) {
    case OpKind::base_change: return base_change_map(at_fiber(op, k), f);
    case OpKind::dep_sum: return dep_sum_map(at_fiber(op, k), f);
    case OpKind::dep_prod: return dep_prod_map(at_fiber(op, k), f);
  }
  throw structure_error("op_map: bad kind");
}

// Canonical base-change comparison of one op along w : K' -> K, for cur over
// (input base of op) x K:
//
//    op_{K'}( (id x w)^* cur )  -->  (id x w)^* ( op_K cur )
//
// an isomorphism built by matching underlying elements, not by cardinality.
SliceMap op_cmp(const PolyOp& op, const FinMap& w, const SliceObj& cur) {
  const FinSet& kp = w.dom;  // K'
  const FinSet& kk = w.cod;  // K
  const FinSet& a = (op.kind == OpKind::base_change) ? op.f.dom : op.f.cod;
  const FinSet& in_base = (op.kind == OpKind::base_change) ? op.f.cod : op.f.dom;

  FinMap w_in = product_map(identity(in_base), w);  // in_base x K' -> in_base x K
  FinMap w_out = product_map(identity(a), w);       // out  x K' -> out x K
  BaseChangeData bcw = base_change(w_in, cur);      // (id x w)^* cur

  Product p_out_kp = product(a, kp);
  Product p_out_kk = product(a, kk);

  switch (op.kind) {
    case OpKind::base_change: {
      BaseChangeData lhs = base_change(at_fiber(op, kp), bcw.obj);
      BaseChangeData inner = base_change(at_fiber(op, kk), cur);
      BaseChangeData rhs = base_change(w_out, inner.obj);
      std::vector<int> t(lhs.obj.total.size);
      for (int e = 0; e < lhs.obj.total.size; ++e) {
        int x = bcw.back(lhs.back(e));
        int base = lhs.obj.proj(e);
        int av = base / kp.size, kv = base % kp.size;
        t[e] = rhs.index(inner.index(x, p_out_kk.index(av, w(kv))), base);
      }
      return {lhs.obj, rhs.obj, FinMap{lhs.obj.total, rhs.obj.total, std::move(t)}};
    }
    case OpKind::dep_sum: {
      SliceObj lhs = dep_sum(at_fiber(op, kp), bcw.obj);
      BaseChangeData rhs = base_change(w_out, dep_sum(at_fiber(op, kk), cur));
      std::vector<int> t(lhs.total.size);
      for (int e = 0; e < lhs.total.size; ++e) {
        int x = bcw.back(e);
        int base = bcw.obj.proj(e);
        int av = base / kp.size, kv = base % kp.size;
        t[e] = rhs.index(x, p_out_kp.index(op.f(av), kv));
      }
      return {lhs, rhs.obj, FinMap{lhs.total, rhs.obj.total, std::move(t)}};
    }
    case OpKind::dep_prod: {
      DepProdData lhs = dep_prod(at_fiber(op, kp), bcw.obj);
      DepProdData dpk = dep_prod(at_fiber(op, kk), cur);
      BaseChangeData rhs = base_change(w_out, dpk.obj);
      std::vector<int> t(lhs.obj.total.size);
      for (int e = 0; e < lhs.obj.total.size; ++e) {
        int base = lhs.base_of(e);
        int bv = base / kp.size, kv = base % kp.size;
        std::vector<int> sec = lhs.section(e);
        for (int& entry : sec) entry = bcw.back(entry);
        int y = dpk.encode(p_out_kk.index(bv, w(kv)), sec);
        t[e] = rhs.index(y, base);
      }
      return {lhs.obj, rhs.obj, FinMap{lhs.obj.total, rhs.obj.total, std::move(t)}};
    }
  }
  throw structure_error("op_cmp: bad kind");
}

}  // namespace

ComposedBox::ComposedBox(FinSet dom, FinSet cod, std::vector<PolyOp> ops)
    : dom_(std::move(dom)), cod_(std::move(cod)), ops_(std::move(ops)) {
  FinSet cur = dom_;
  for (const PolyOp& op : ops_) {
    if (op.kind == OpKind::base_change) {
      if (op.f.cod != cur) throw structure_error("ComposedBox: base_change does not chain");
      cur = op.f.dom;
    } else {
      if (op.f.dom != cur) throw structure_error("ComposedBox: op does not chain");
      cur = op.f.cod;
    }
  }
  if (cur != cod_) throw structure_error("ComposedBox: chain does not end at the codomain base");
}

SliceObj ComposedBox::apply_ops_obj(const FinSet& k, SliceObj x) const {
  for (const PolyOp& op : ops_) x = op_obj(op, k, x);
  return x;
}

SliceMap ComposedBox::apply_ops_map(const FinSet& k, SliceMap f) const {
  for (const PolyOp& op : ops_) f = op_map(op, k, f);
  return f;
}

Span ComposedBox::eval_obj(const Span& s) const {
  if (s.left_base != dom_)
    throw structure_error("ComposedBox: span not over the domain base");
  return from_fiber(cod_, s.fiber_base, apply_ops_obj(s.fiber_base, to_fiber(s)));
}

SpanMap ComposedBox::eval_map(const SpanMap& f) const {
  validate(f);
  if (f.src.left_base != dom_)
    throw structure_error("ComposedBox: morphism not over the domain base");
  const FinSet& kp = f.src.fiber_base;  // K'
  const FinSet& kk = f.dst.fiber_base;  // K

  // Vertical factor through the cartesian lift of w over the target.
  CartesianLift cl = cartesian_lift(f.w, f.dst);
  std::vector<int> vt(f.src.apex.size);
  for (int m = 0; m < f.src.apex.size; ++m) vt[m] = cl.pb.index(f.v(m), f.src.q(m));
  SliceObj src_fib = to_fiber(f.src);
  SliceObj lift_fib = to_fiber(cl.lifted);
  SliceMap ffv = apply_ops_map(
      kp, SliceMap{src_fib, lift_fib, FinMap{src_fib.total, lift_fib.total, vt}});

  // Comparison chain: iso  ops_{K'}(fiber(cl.lifted)) -> (id x w)^* ops_K(fiber(f.dst)).
  SliceObj cur = to_fiber(f.dst);
  FinMap w_cur = product_map(identity(dom_), f.w);
  BaseChangeData bc = base_change(w_cur, cur);
  Product pdom = product(dom_, kp);
  std::vector<int> iota(lift_fib.total.size);
  for (int e = 0; e < lift_fib.total.size; ++e) {
    int m = cl.pb.pr1(e), kv = cl.pb.pr2(e);
    iota[e] = bc.index(m, pdom.index(f.dst.p(m), kv));
  }
  SliceObj lifted = lift_fib;
  for (const PolyOp& op : ops_) {
    SliceMap iota_map{lifted, bc.obj, FinMap{lifted.total, bc.obj.total, iota}};
    SliceMap op_iota = op_map(op, kp, iota_map);
    SliceMap cmp = op_cmp(op, f.w, cur);
    SliceMap next = compose(cmp, op_iota);
    lifted = next.src;
    iota = next.map.table;
    cur = op_obj(op, kk, cur);
    const FinSet& out = (op.kind == OpKind::base_change) ? op.f.dom : op.f.cod;
    bc = base_change(product_map(identity(out), f.w), cur);
  }

  // v = (first pullback projection) o iota o F(vertical part).
  std::vector<int> t(ffv.src.total.size);
  for (int m = 0; m < ffv.src.total.size; ++m) t[m] = bc.back(iota[ffv.map(m)]);
  Span fsrc = from_fiber(cod_, kp, ffv.src);
  Span fdst = from_fiber(cod_, kk, cur);
  return SpanMap::make(fsrc, fdst, FinMap{fsrc.apex, fdst.apex, std::move(t)}, f.w);
}

ComposedBox identity_box(const FinSet& i) { return {i, i, {}}; }

ComposedBox base_change_box(const FinMap& a) {
  return {a.cod, a.dom, {PolyOp{OpKind::base_change, a}}};
}

ComposedBox span_box(const Span& s) {
  return {s.left_base, s.fiber_base,
          {PolyOp{OpKind::base_change, s.p}, PolyOp{OpKind::dep_sum, s.q}}};
}

}  // namespace fibpoly
