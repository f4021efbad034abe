// End-to-end acceptance checks: one line of output per criterion, nonzero
// exit if any fails.  Everything is exhaustive or seeded, never flaky.

#include <cstdio>
#include <string>
#include <vector>

#include "fibpoly/counterexamples.hpp"
#include "fibpoly/extract.hpp"
#include "fibpoly/json_io.hpp"
#include "fibpoly/registry.hpp"
#include "fibpoly/suites.hpp"
#include "oracles.hpp"

using namespace fibpoly;

namespace {

int failures = 0;

void report_line(int n, const std::string& what, bool ok, const std::string& extra = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
              extra.empty() ? "" : " -- ", extra.c_str());
  if (!ok) ++failures;
}

// All slice objects over `base` with total <= max_total, one per iso class.
std::vector<SliceObj> objs_up_to_iso(const FinSet& base, int max_total) {
  std::vector<SliceObj> out;
  for (int t = 0; t <= max_total; ++t)
    for (const auto& tab : nondecreasing_tables(t, base.size))
      out.push_back({base, FinSet(t), FinMap{FinSet(t), base, tab}});
  return out;
}

// All spans with the given bases and apex <= max_apex, one per apex relabeling.
std::vector<Span> spans_up_to_iso(const FinSet& i, const FinSet& k, int max_apex) {
  std::vector<Span> out;
  for (int m = 0; m <= max_apex; ++m)
    for (const auto& tab : nondecreasing_tables(m, i.size * k.size)) {
      std::vector<int> pt(m), qt(m);
      for (int e = 0; e < m; ++e) {
        pt[e] = tab[e] / k.size;
        qt[e] = tab[e] % k.size;
      }
      out.push_back({i, FinSet(m), k, FinMap{FinSet(m), i, pt}, FinMap{FinSet(m), k, qt}});
    }
  return out;
}

void criterion1() {
  Report r = adjunction_suite(3, 4);
  report_line(1, "sum/pullback/product adjoint triple, exhaustive at bound 3/4", r.ok(),
              r.ok() ? "" : r.to_json().dump());
}

void criterion2() {
  Report r = beck_chevalley_suite(3);
  report_line(2, "base-change comparison iso on pullback squares, control rejected", r.ok(),
              r.ok() ? "" : r.to_json().dump());
}

void criterion3() {
  std::string detail;
  bool ok = true;
  // evaluating the pseudo-inverse at the diagonal recovers the object
  for (int js = 0; ok && js <= 3; ++js)
    for (int is = 0; ok && is <= 3; ++is) {
      FinSet j(js), i(is);
      for (const SliceObj& x : objs_up_to_iso(product(j, i).carrier, 4))
        if (!fiberwise_iso(h_apply(j, i, x, delta_span(i)), x)) {
          ok = false;
          detail = "h at diagonal failed for bases " + std::to_string(js) + "," +
                   std::to_string(is);
          break;
        }
    }
  // extracting from a known span functor returns the span
  AuditBudget budget{2, 40, 0xf1b0f1b0ULL};
  for (int is = 1; ok && is <= 2; ++is)
    for (int ks = 1; ok && ks <= 2; ++ks)
      for (const Span& s : spans_up_to_iso(FinSet(is), FinSet(ks), 3)) {
        ExtractSpanResult res = extract_span(span_box(s), budget);
        if (!res.span || !find_span_iso(*res.span, s)) {
          ok = false;
          detail = "span recovery failed: " + res.report.to_json().dump();
          break;
        }
      }
  report_line(3, "diagonal evaluation inverts, spans are recovered up to iso", ok, detail);
}

std::vector<Polynomial> seeded_polynomials(int count) {
  Rng rng(0xf1b0f1b0ULL);
  std::vector<Polynomial> out;
  for (int n = 0; n < count; ++n) out.push_back(oracles::random_polynomial(rng, 3));
  return out;
}

void criterion4(const std::vector<Polynomial>& pool) {
  std::string detail;
  bool ok = true;
  ExtractBounds bounds;  // candidate totals to 9, agreement on spans to size 3
  bounds.audit = AuditBudget{2, 40, 0xf1b0f1b0ULL};
  for (size_t n = 0; n < pool.size(); ++n) {
    auto r = std::make_shared<ComposedBox>(eval_fibered(pool[n]));
    ExtractPolynomialResult res = extract_polynomial(r, nullptr, bounds);
    if (!res.poly || !bridge_equivalent(pool[n], *res.poly)) {
      ok = false;
      detail = "polynomial " + std::to_string(n) + ": " + res.report.to_json().dump();
      break;
    }
  }
  report_line(4, "round trip over 200 seeded polynomials, recovered up to equivalence", ok,
              detail);
}

void criterion5(const std::vector<Polynomial>& pool) {
  std::string detail;
  bool ok = true;
  for (size_t n = 0; n < pool.size(); ++n) {
    Report r = converse_check(pool[n], 3);
    if (!r.ok()) {
      ok = false;
      detail = "polynomial " + std::to_string(n) + ": " + r.to_json().dump();
      break;
    }
  }
  report_line(5, "factor of each of the 200 polynomials has the expected left adjoint", ok,
              detail);
}

void criterion6() {
  Report suite = mono_preservation_suite(3);
  WeberWitness w = weber_mono_failure();
  bool ok = suite.ok() && w.report.ok() && is_mono(w.mono) && !is_mono(w.image);
  report_line(6, "sum-after-pullback preserves monos; subdivision does not", ok,
              ok ? "" : suite.to_json().dump() + w.report.to_json().dump());
}

std::vector<GSet> all_z2_sets(int max_carrier) {
  Group z2 = cyclic_group(2);
  std::vector<GSet> out;
  for (int n = 0; n <= max_carrier; ++n) {
    FinSet carrier(n);
    for (const FinMap& a : all_maps(FinSet(2 * n), carrier)) {
      try {
        out.push_back(GSet(z2, carrier, a));
      } catch (const structure_error&) {
      }
    }
    if (n == 0) out.push_back(trivial_gset(z2, carrier));
  }
  return out;
}

void criterion7() {
  Group z2 = cyclic_group(2);
  GSet reg = regular_representation(z2);
  Report imp = strength_impossible(reg);
  bool ok = gset_fixed_points(reg).carrier.size == 0 && imp.ok() &&
            imp.details["I_times_R1"] == 2;
  std::string detail = ok ? "" : imp.to_json().dump();
  if (ok) {
    std::vector<GSet> sets = all_z2_sets(3);
    for (const GSet& x : sets) {
      for (const GSet& y : sets)
        if (equivariant_hom_count(gset_orbits(x), y) !=
            equivariant_hom_count(x, gset_fixed_points(y))) {
          ok = false;
          detail = "orbit/fixed-point hom counts disagree";
          break;
        }
      if (!ok) break;
    }
  }
  report_line(7, "fixed points of Z/2 admit no strength; orbits adjunction holds", ok, detail);
}

void criterion8() {
  std::string detail;
  bool ok = true;
  Rng rng(0xf1b0f1b0ULL);

  FinSet i(2), b(2), e(3);
  FinMap sm{e, i, {0, 1, 1}}, pm{e, b, {0, 0, 1}};
  std::vector<BoxPtr> left_adjoints = {
      make_box({{"family", "identity"}, {"base", i}}),
      make_box({{"family", "base-change"},
                {"a", FinMap{FinSet(1), i, {1}}}}),
      make_box({{"family", "span"},
                {"span", Span{i, e, b, sm, pm}}}),
      make_box({{"family", "left-part"}, {"s", sm}, {"p", pm}}),
  };
  for (const BoxPtr& box : left_adjoints) {
    for (int n = 0; ok && n < 20; ++n) {
      FinSet s(rng.below(4));
      SliceObj xi = random_slice_obj(rng, box->dom_base(), 3);
      StrengthResult st = strength(*box, s, xi);
      if (!st.defined || !is_iso(st.map)) {
        ok = false;
        detail = "strength not invertible for a left-adjoint functor";
      }
    }
    if (!ok) break;
  }

  if (ok) {
    Rng prng(7);
    for (int n = 0; ok && n < 10; ++n) {
      Polynomial p = oracles::random_polynomial(prng, 3);
      ComposedBox box = eval_fibered(p);
      FinSet s(rng.below(4));
      SliceObj xi = random_slice_obj(rng, p.I, 3);
      SliceObj xi2 = random_slice_obj(rng, p.I, 3);
      StrengthResult st = strength(box, s, xi);
      if (!st.defined) {
        ok = false;
        detail = "strength undefined for a polynomial functor: " + st.failure;
        break;
      }
      auto homs = slice_homs(xi, xi2);
      for (size_t hi = 0; hi < homs.size() && hi < 8; ++hi) {
        const SliceMap& f = homs[hi];
        StrengthResult st2 = strength(box, s, xi2);
        bool natural = compose(box_plain_map(box, tensor_map(s, f)), st.map) ==
                       compose(st2.map, tensor_map(s, box_plain_map(box, f)));
        if (!natural) {
          ok = false;
          detail = "strength naturality square failed";
          break;
        }
      }
    }
  }
  report_line(8, "strength is iso for left adjoints, exists and is natural for polynomials",
              ok, detail);
}

std::string seeded_report_dump(std::uint64_t seed) {
  nlohmann::json out;
  out["bifibration"] = bifibration_suite(2, seed).to_json();
  Rng rng(seed);
  Polynomial p = oracles::random_polynomial(rng, 3);
  ExtractBounds bounds;
  bounds.span_bound = 2;
  bounds.audit = AuditBudget{2, 30, seed};
  auto r = std::make_shared<ComposedBox>(eval_fibered(p));
  out["extract"] = extract_polynomial(r, nullptr, bounds).report.to_json();
  return out.dump();
}

void criterion9() {
  std::string a = seeded_report_dump(0xf1b0f1b0ULL);
  std::string b = seeded_report_dump(0xf1b0f1b0ULL);
  bool ok = (a == b) && !a.empty();
  report_line(9, "identical seeds give byte-identical reports", ok, ok ? "" : "dumps differ");
}

}  // namespace

int main() {
  std::vector<Polynomial> pool = seeded_polynomials(200);
  criterion1();
  criterion2();
  criterion3();
  criterion4(pool);
  criterion5(pool);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::printf("all 9 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
