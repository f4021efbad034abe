#include "fibpoly/fibspan.hpp"

namespace fibpoly {

SliceObj tensor(const FinSet& s, const SliceObj& xi) {
  Product pr = product(s, xi.total);
  return {xi.base, pr.carrier, compose(xi.proj, pr.pr2)};
}

SliceMap tensor_map(const FinSet& s, const SliceMap& f) {
  SliceObj src = tensor(s, f.src);
  SliceObj dst = tensor(s, f.dst);
  int m = f.src.total.size, m2 = f.dst.total.size;
  std::vector<int> t(src.total.size);
  for (int i = 0; i < s.size; ++i)
    for (int x = 0; x < m; ++x) t[i * m + x] = i * m2 + f.map(x);
  return {src, dst, FinMap{src.total, dst.total, std::move(t)}};
}

// The strength component at (S, xi) is pr_! F^S pr* xi rewritten into
// F^1(S (x) xi) through the mate of the cobase-change cell:
//   S (x) F^1(xi)  ~  pr_!(F^S(pr* xi))  ->  F^1(pr_!(pr* xi))  ~  F^1(S (x) xi)
// where pr* is realized by a cartesian lift along S -> 1 and pr_! by an
// opcartesian lift back down.
StrengthResult strength(const FiberedFunctorBox& box, const FinSet& s, const SliceObj& xi) {
  StrengthResult out;
  if (xi.base != box.dom_base()) {
    out.failure = "object not over the box domain base";
    return out;
  }
  try {
    SliceObj eta = box_plain_obj(box, xi);  // F^1(xi), over J
    SliceObj dom = tensor(s, eta);          // pairs (s, n), s-major

    Span xi_span{xi.base, xi.total, terminal(), xi.proj, unique_to_terminal(xi.total)};
    FinMap u = unique_to_terminal(s);
    CartesianLift cl = cartesian_lift(u, xi_span);  // apex: pairs (m, s)
    Span fs = box.eval_obj(cl.lifted);
    SpanMap fcart = box.eval_map(cl.to_src);        // fs -> F(xi_span)

    // Invert the cartesian comparison: an element of fs.apex is determined
    // by (v(a), q(a)) in N x S when the box preserves cartesian lifts.
    int n_sz = eta.total.size;
    std::vector<int> inv(static_cast<size_t>(n_sz) * std::max(1, s.size), -1);
    for (int a = 0; a < fs.apex.size; ++a) {
      int key = fcart.v(a) * s.size + fs.q(a);
      if (inv[key] != -1) {
        out.failure = "cartesian comparison cell is not injective";
        return out;
      }
      inv[key] = a;
    }

    OpcartesianLift oc = opcartesian_lift(u, cl.lifted);
    SpanMap fo = box.eval_map(oc.from_src);  // fs -> F(pushed)

    // Reindex the pushed apex (m, s) into the canonical tensor carrier (s, m).
    SliceObj txi = tensor(s, xi);
    Span txi_span{xi.base, txi.total, terminal(), txi.proj,
                  unique_to_terminal(txi.total)};
    std::vector<int> rt(oc.pushed.apex.size);
    for (int e = 0; e < oc.pushed.apex.size; ++e) {
      int m = cl.pb.pr1(e), sv = cl.pb.pr2(e);
      rt[e] = sv * xi.total.size + m;
    }
    SpanMap reindex = SpanMap::make(
        oc.pushed, txi_span, FinMap{oc.pushed.apex, txi_span.apex, std::move(rt)},
        identity(terminal()));
    SpanMap freindex = box.eval_map(reindex);
    Span ftxi = box.eval_obj(txi_span);
    SliceObj cod{ftxi.left_base, ftxi.apex, ftxi.p};  // F^1(S (x) xi)

    std::vector<int> t(dom.total.size);
    for (int sv = 0; sv < s.size; ++sv)
      for (int n = 0; n < n_sz; ++n) {
        int a = inv[n * s.size + sv];
        if (a < 0) {
          out.failure = "cartesian comparison cell is not surjective";
          return out;
        }
        t[sv * n_sz + n] = freindex.v(fo.v(a));
      }
    out.map = SliceMap{dom, cod, FinMap{dom.total, cod.total, std::move(t)}};
    out.defined = true;
  } catch (const structure_error& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace fibpoly
