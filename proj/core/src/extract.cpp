#include "fibpoly/extract.hpp"

#include <algorithm>
#include <map>

#include "fibpoly/json_io.hpp"

namespace fibpoly {

namespace {

using nlohmann::json;

// R-bar: the factor of R through t_!, computed fiberwise by re-reading R(S)
// with its canonical map to R(1_I) as the new left leg.
class RBarBox final : public FiberedFunctorBox {
 public:
  explicit RBarBox(BoxPtr r) : r_(std::move(r)), q_(r_->eval_obj(terminal_span(r_->dom_base()))) {
    if (q_.fiber_base != terminal())
      throw structure_error("factor: image of the terminal object is not in the 1-fiber");
  }

  const FinSet& dom_base() const override { return r_->dom_base(); }
  const FinSet& cod_base() const override { return q_.apex; }
  bool safe_for_concurrent_eval() const override { return r_->safe_for_concurrent_eval(); }

  const Span& terminal_image() const { return q_; }

  Span eval_obj(const Span& s) const override {
    Span rs = r_->eval_obj(s);
    SpanMap tt = r_->eval_map(to_terminal_span(s));  // R(S) -> R(1_I)
    return {q_.apex, rs.apex, s.fiber_base, tt.v, rs.q};
  }

  SpanMap eval_map(const SpanMap& f) const override {
    SpanMap rf = r_->eval_map(f);
    return SpanMap::make(eval_obj(f.src), eval_obj(f.dst), rf.v, f.w);
  }

 private:
  BoxPtr r_;
  Span q_;  // R(1_I) = J <- B -> 1
};

/// Slice objects over `base` up to iso: nondecreasing structure tables, by
/// increasing total then lexicographically.
std::vector<SliceObj> slice_objs_up_to_iso(const FinSet& base, int max_total) {
  std::vector<SliceObj> out;
  for (int total = 0; total <= max_total; ++total)
    for (const auto& t : nondecreasing_tables(total, base.size))
      out.emplace_back(base, FinSet(total), FinMap{FinSet(total), base, t});
  return out;
}

/// Spans over `base` up to iso of the apex, for every fiber base size and
/// apex size up to `bound`.
std::vector<Span> spans_up_to_iso(const FinSet& base, int bound) {
  std::vector<Span> out;
  for (int k = 0; k <= bound; ++k) {
    FinSet kk(k);
    for (int m = 0; m <= bound; ++m)
      for (const auto& t : nondecreasing_tables(m, base.size * k)) {
        std::vector<int> pt(m), qt(m);
        for (int e = 0; e < m; ++e) {
          pt[e] = t[e] / k;
          qt[e] = t[e] % k;
        }
        out.push_back(Span{base, FinSet(m), kk, FinMap{FinSet(m), base, std::move(pt)},
                           FinMap{FinSet(m), kk, std::move(qt)}});
      }
  }
  return out;
}

/// Memoized rbar images of test objects Z over I x B, keyed by structure table.
struct RbarMemo {
  const FiberedFunctorBox& rbar;
  FinSet i, b;
  std::map<std::vector<int>, Span> cache;

  const Span& get(const SliceObj& z) {
    auto it = cache.find(z.proj.table);
    if (it == cache.end())
      it = cache.emplace(z.proj.table, rbar.eval_obj(from_fiber(i, b, z))).first;
    return it->second;
  }
};

}  // namespace

Factorization factor(BoxPtr r) {
  auto rbar = std::make_shared<RBarBox>(std::move(r));
  FinSet b = rbar->terminal_image().apex;
  FinMap t = rbar->terminal_image().p;
  return {std::move(b), std::move(t), std::move(rbar)};
}

std::int64_t vertical_hom_count(const Span& a, const Span& x) {
  if (a.left_base != x.left_base || a.fiber_base != x.fiber_base)
    throw structure_error("vertical_hom_count: spans over different bases");
  std::int64_t count = 1;
  for (int m = 0; m < a.apex.size && count != 0; ++m) {
    int matches = 0;
    for (int n = 0; n < x.apex.size; ++n)
      if (x.p(n) == a.p(m) && x.q(n) == a.q(m)) ++matches;
    count *= matches;
  }
  return count;
}

namespace {

/// Unit-independent half of the universal property: hom-count agreement
/// |Vert(delta_B, rbar(Z))| = |Vert(W, Z)| for all Z up to test_bound.
Report counts_ok(RbarMemo& memo, const Span& delta_b, const SliceObj& w,
                 const std::vector<SliceObj>& tests) {
  for (const SliceObj& z : tests) {
    std::vector<int> zfib = fiber_sizes(z);
    std::int64_t lhs = 1;
    for (int e = 0; e < w.total.size && lhs != 0; ++e) lhs *= zfib[w.proj(e)];
    std::int64_t rhs = vertical_hom_count(delta_b, memo.get(z));
    if (lhs != rhs)
      return Report::fail("hom-count mismatch against a test object",
                          json{{"z", z}, {"candidate_homs", lhs}, {"unit_homs", rhs}});
  }
  return Report::pass();
}

/// Full universal property for one unit: every delta_B -> rbar(Z) factors
/// through the unit by exactly one W -> Z, for Z up to factor_bound.
Report unit_ok(RbarMemo& memo, const Span& delta_b, const Span& w_span, const SpanMap& unit,
               const std::vector<SliceObj>& tests, int factor_bound) {
  for (const SliceObj& z : tests) {
    if (z.total.size > factor_bound) continue;
    const Span& rz = memo.get(z);
    Span z_span = from_fiber(memo.i, memo.b, z);
    std::vector<SpanMap> homdelta = vertical_span_homs(delta_b, rz);
    std::vector<int> hits(homdelta.size(), 0);
    for (const SpanMap& psi : vertical_span_homs(w_span, z_span)) {
      SpanMap g = compose(memo.rbar.eval_map(psi), unit);
      auto it = std::find_if(homdelta.begin(), homdelta.end(),
                             [&](const SpanMap& h) { return h.v == g.v; });
      if (it == homdelta.end())
        return Report::fail("factorization lands outside the hom-set", json{{"z", z}});
      int idx = static_cast<int>(it - homdelta.begin());
      if (hits[idx]++)
        return Report::fail("uniqueness violated: two factorizations of the same arrow",
                            json{{"z", z}, {"uniqueness", true}});
    }
    for (size_t k = 0; k < hits.size(); ++k)
      if (!hits[k])
        return Report::fail("existence violated: an arrow does not factor through the unit",
                            json{{"z", z}});
  }
  return Report::pass();
}

}  // namespace

AdjointSearchResult adjoint_search(const FiberedFunctorBox& rbar, const SearchOptions& opts,
                                   int skip) {
  const FinSet& i = rbar.dom_base();
  const FinSet& b = rbar.cod_base();
  Product ib = product(i, b);
  Span delta_b = delta_span(b);
  RbarMemo memo{rbar, i, b, {}};
  std::vector<SliceObj> tests =
      slice_objs_up_to_iso(ib.carrier, std::max(opts.test_bound, opts.factor_bound));

  std::int64_t candidates = 0, units_tried = 0;
  bool uniqueness_violation = false;
  int certified = 0;
  try {
    for (const SliceObj& w : slice_objs_up_to_iso(ib.carrier, opts.size_bound)) {
      ++candidates;
      if (!counts_ok(memo, delta_b, w, tests).ok()) continue;
      Span w_span = from_fiber(i, b, w);
      Span rw = rbar.eval_obj(w_span);
      for (const SpanMap& unit : vertical_span_homs(delta_b, rw)) {
        ++units_tried;
        Report u = unit_ok(memo, delta_b, w_span, unit, tests, opts.factor_bound);
        if (!u.ok()) {
          if (u.details["witness"].value("uniqueness", false)) uniqueness_violation = true;
          continue;
        }
        if (certified++ < skip) break;  // certified, but resuming past it
        json details{{"w", w},
                     {"unit_v", unit.v},
                     {"candidates_tried", candidates},
                     {"units_tried", units_tried},
                     {"bounds", json{{"size_bound", opts.size_bound},
                                     {"test_bound", opts.test_bound},
                                     {"factor_bound", opts.factor_bound}}},
                     {"note", "certified up to the stated bounds, not unconditionally"}};
        return {AdjointCertificate{w, unit, opts}, Report::pass(std::move(details))};
      }
    }
  } catch (const structure_error& e) {
    return {std::nullopt,
            Report::fail(std::string("box raised a structural error: ") + e.what())};
  }
  return {std::nullopt,
          Report::exhausted("no certified candidate within bounds",
                            json{{"candidates_tried", candidates},
                                 {"units_tried", units_tried},
                                 {"uniqueness_violation_seen", uniqueness_violation},
                                 {"size_bound", opts.size_bound}})};
}

Report recheck_certificate(const FiberedFunctorBox& rbar, const AdjointCertificate& cert) {
  const FinSet& i = rbar.dom_base();
  const FinSet& b = rbar.cod_base();
  Product ib = product(i, b);
  if (cert.w.base != ib.carrier)
    return Report::fail("certificate object is not over I x B");
  Span delta_b = delta_span(b);
  RbarMemo memo{rbar, i, b, {}};
  try {
    Span w_span = from_fiber(i, b, cert.w);
    Span rw = rbar.eval_obj(w_span);
    if (cert.unit.src != delta_b || cert.unit.dst != rw || !is_vertical(cert.unit) ||
        !is_valid(cert.unit))
      return Report::fail("certificate unit is not a vertical arrow delta_B -> rbar(W)");
    std::vector<SliceObj> tests = slice_objs_up_to_iso(
        ib.carrier, std::max(cert.bounds.test_bound, cert.bounds.factor_bound));
    Report c = counts_ok(memo, delta_b, cert.w, tests);
    if (!c.ok()) return c;
    return unit_ok(memo, delta_b, w_span, cert.unit, tests, cert.bounds.factor_bound);
  } catch (const structure_error& e) {
    return Report::fail(std::string("box raised a structural error: ") + e.what());
  }
}

Report boxes_agree_on_spans(const FiberedFunctorBox& a, const FiberedFunctorBox& b, int bound) {
  if (a.dom_base() != b.dom_base() || a.cod_base() != b.cod_base())
    return Report::fail("boxes have different declared bases");
  std::int64_t checked = 0;
  try {
    for (const Span& s : spans_up_to_iso(a.dom_base(), bound)) {
      Span ia = a.eval_obj(s);
      Span ib = b.eval_obj(s);
      ++checked;
      if (!fiberwise_iso(to_fiber(ia), to_fiber(ib)))
        return Report::fail("object images disagree on a test span",
                            json{{"span", s},
                                 {"first", fiber_sizes(to_fiber(ia))},
                                 {"second", fiber_sizes(to_fiber(ib))}});
    }
  } catch (const structure_error& e) {
    return Report::fail(std::string("box raised a structural error: ") + e.what());
  }
  return Report::pass(json{{"spans_checked", checked}, {"bound", bound}});
}

ExtractPolynomialResult extract_polynomial(BoxPtr r, const FiberedFunctorBox* l,
                                           const ExtractBounds& bounds) {
  Report audit = audit_fibered(*r, bounds.audit);
  if (!audit.ok()) {
    audit.details["stage"] = "audit";
    return {std::nullopt, std::move(audit)};
  }
  const FinSet i = r->dom_base();
  const FinSet j = r->cod_base();

  try {
    Factorization fac = factor(r);

    auto finish = [&](FinMap s, FinMap p, json how) -> ExtractPolynomialResult {
      FinSet e = s.dom;
      Polynomial cand{i, std::move(e), fac.b, j, std::move(s), std::move(p), fac.t};
      Report verify = boxes_agree_on_spans(eval_fibered(cand), *r, bounds.span_bound);
      if (!verify.ok()) {
        verify.details["stage"] = "verification";
        verify.details["candidate"] = cand;
        return {std::nullopt, std::move(verify)};
      }
      json details{{"polynomial", cand},
                   {"verification", verify.details},
                   {"how", std::move(how)}};
      return {std::move(cand), Report::pass(std::move(details))};
    };

    if (l != nullptr) {
      if (l->dom_base() != fac.b || l->cod_base() != i)
        return {std::nullopt, Report::fail("supplied left adjoint has wrong bases")};
      Span w = l->eval_obj(delta_span(fac.b));  // I <-s- E' -p-> B
      return finish(w.p, w.q, json{{"left_adjoint", "supplied"}});
    }

    int skip = 0;
    while (true) {
      AdjointSearchResult found = adjoint_search(*fac.rbar, bounds.search, skip);
      if (!found.cert) {
        found.report.details["stage"] = "adjoint-search";
        found.report.details["resumed_past"] = skip;
        return {std::nullopt, std::move(found.report)};
      }
      const SliceObj& w = found.cert->w;
      std::vector<int> st(w.total.size), pt(w.total.size);
      for (int e = 0; e < w.total.size; ++e) {
        st[e] = w.proj(e) / fac.b.size;
        pt[e] = w.proj(e) % fac.b.size;
      }
      ExtractPolynomialResult res =
          finish(FinMap{w.total, i, std::move(st)}, FinMap{w.total, fac.b, std::move(pt)},
                 json{{"left_adjoint", "searched"}, {"certificate", found.report.details}});
      if (res.poly) return res;
      ++skip;  // this certificate did not survive verification; resume the search
    }
  } catch (const structure_error& e) {
    return {std::nullopt,
            Report::fail(std::string("box raised a structural error: ") + e.what())};
  }
}

Report fibered_adjunction_check(const FiberedFunctorBox& l, const FiberedFunctorBox& r,
                                int max_size) {
  if (l.dom_base() != r.cod_base() || l.cod_base() != r.dom_base())
    return Report::fail("boxes do not have opposite bases");
  std::int64_t checked = 0;
  try {
    for (int k = 0; k <= 2; ++k) {
      std::vector<Span> zs, xs;
      for (const Span& s : spans_up_to_iso(l.dom_base(), max_size))
        if (s.fiber_base.size == k) zs.push_back(s);
      for (const Span& s : spans_up_to_iso(l.cod_base(), max_size))
        if (s.fiber_base.size == k) xs.push_back(s);
      std::vector<Span> rx;
      rx.reserve(xs.size());
      for (const Span& x : xs) rx.push_back(r.eval_obj(x));
      for (const Span& z : zs) {
        Span lz = l.eval_obj(z);
        for (size_t xi = 0; xi < xs.size(); ++xi) {
          ++checked;
          if (vertical_hom_count(lz, xs[xi]) != vertical_hom_count(z, rx[xi]))
            return Report::fail("adjunction hom-count mismatch",
                                json{{"z", z}, {"x", xs[xi]}});
        }
      }
    }
  } catch (const structure_error& e) {
    return Report::fail(std::string("box raised a structural error: ") + e.what());
  }
  return Report::pass(json{{"pairs_checked", checked}, {"max_size", max_size}});
}

Report converse_check(const Polynomial& p, int max_size) {
  ComposedBox left = left_part_box(p.s, p.p);
  ComposedBox rbar = middle_part_box(p.s, p.p);
  Report rep = fibered_adjunction_check(left, rbar, max_size);
  rep.details["polynomial"] = p;
  return rep;
}

}  // namespace fibpoly
