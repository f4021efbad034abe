#include <doctest.h>

#include "fibpoly/extract.hpp"
#include "fibpoly/registry.hpp"
#include "oracles.hpp"

using namespace fibpoly;

TEST_CASE("factorization through the value at the terminal object") {
  Rng rng(83);
  for (int n = 0; n < 5; ++n) {
    Polynomial p = oracles::random_polynomial(rng, 2);
    BoxPtr r = std::make_shared<ComposedBox>(eval_fibered(p));
    Factorization fac = factor(r);
    // the middle object and its map to J match the polynomial's own t
    CHECK(fiberwise_iso(SliceObj{p.J, fac.b, fac.t},
                        SliceObj{p.J, p.B, p.t}));
    // t_! o rbar agrees with r on sample spans
    Rng srng(n);
    for (const Span& s : sample_spans(srng, p.I, 2, 4)) {
      Span rs = r->eval_obj(s);
      Span bs = fac.rbar->eval_obj(s);
      CHECK(bs.apex.size == rs.apex.size);
      CHECK(compose(fac.t, bs.p).table == rs.p.table);
      CHECK(bs.q.table == rs.q.table);
    }
  }
}

TEST_CASE("adjoint search certifies the canonical factor and rechecks") {
  FinSet i(2), b(2), e(3);
  FinMap s{e, i, {0, 1, 1}}, p{e, b, {0, 0, 1}};
  ComposedBox rbar = middle_part_box(s, p);
  AdjointSearchResult res = adjoint_search(rbar, SearchOptions{6, 3, 3});
  REQUIRE_MESSAGE(res.cert.has_value(), res.report.to_json().dump());
  // the certified value at the diagonal is s_! p^* delta, i.e. <s,p> over IxB
  Product ixb = product(i, b);
  std::vector<int> expect(ixb.carrier.size, 0);
  for (int ee = 0; ee < e.size; ++ee) ++expect[ixb.index(s(ee), p(ee))];
  CHECK(fiber_sizes(res.cert->w) == expect);
  CHECK(recheck_certificate(rbar, *res.cert).ok());

  AdjointCertificate broken = *res.cert;
  broken.w.proj.table[0] = (broken.w.proj.table[0] + 1) % ixb.carrier.size;
  CHECK(!recheck_certificate(rbar, broken).ok());
}

TEST_CASE("search reports exhaustion for a functor with no left adjoint") {
  BoxPtr support = make_support_box(FinSet(2));
  AdjointSearchResult res = adjoint_search(*support, SearchOptions{4, 3, 3});
  CHECK(!res.cert.has_value());
  CHECK(res.report.verdict == "exhausted");
}

TEST_CASE("extract_polynomial round trip, searched and supplied adjoint") {
  Rng rng(89);
  ExtractBounds bounds;
  bounds.span_bound = 2;
  bounds.audit = AuditBudget{2, 40, 7};
  int done = 0;
  for (int n = 0; done < 4 && n < 20; ++n) {
    Polynomial p = oracles::random_polynomial(rng, 2);
    if (p.E.size > 4) continue;
    ++done;
    BoxPtr r = std::make_shared<ComposedBox>(eval_fibered(p));

    ExtractPolynomialResult searched = extract_polynomial(r, nullptr, bounds);
    REQUIRE_MESSAGE(searched.poly.has_value(), searched.report.to_json().dump());
    CHECK(bridge_equivalent(p, *searched.poly).has_value());

    ComposedBox l = left_part_box(p.s, p.p);
    ExtractPolynomialResult supplied = extract_polynomial(r, &l, bounds);
    REQUIRE_MESSAGE(supplied.poly.has_value(), supplied.report.to_json().dump());
    CHECK(bridge_equivalent(p, *supplied.poly).has_value());
  }
  CHECK(done == 4);
}

TEST_CASE("extract_polynomial rejects a non-fibered box at the audit stage") {
  ExtractBounds bounds;
  bounds.audit = AuditBudget{2, 40, 7};
  ExtractPolynomialResult res =
      extract_polynomial(make_broken_w_box(FinSet(2)), nullptr, bounds);
  CHECK(!res.poly.has_value());
  CHECK(!res.report.ok());
}

TEST_CASE("vertical hom counts match enumeration") {
  Rng rng(97);
  for (int n = 0; n < 25; ++n) {
    FinSet i(1 + rng.below(2)), k(1 + rng.below(2));
    FinSet ma(rng.below(3)), mx(rng.below(3));
    Span a{i, ma, k, random_finmap(rng, ma, i), random_finmap(rng, ma, k)};
    Span x{i, mx, k, random_finmap(rng, mx, i), random_finmap(rng, mx, k)};
    CHECK(vertical_hom_count(a, x) ==
          static_cast<std::int64_t>(vertical_span_homs(a, x).size()));
  }
}

TEST_CASE("fibered adjunction check: positive and negative controls") {
  FinSet i(2), b(2), e(3);
  FinMap s{e, i, {0, 1, 1}}, p{e, b, {0, 0, 1}};
  ComposedBox l = left_part_box(s, p);
  ComposedBox r = middle_part_box(s, p);
  CHECK(fibered_adjunction_check(l, r, 2).ok());

  // a* is not left adjoint to a* unless a is invertible
  FinMap a{FinSet(1), i, {0}};
  ComposedBox bc = base_change_box(a);
  CHECK(!fibered_adjunction_check(bc, bc, 2).ok());
}

TEST_CASE("every polynomial factor has the expected left adjoint") {
  Rng rng(101);
  for (int n = 0; n < 3; ++n) {
    Polynomial p = oracles::random_polynomial(rng, 2);
    CHECK(converse_check(p, 2).ok());
  }
}

TEST_CASE("boxes_agree_on_spans distinguishes functors") {
  FinSet i(2);
  CHECK(boxes_agree_on_spans(identity_box(i), identity_box(i), 2).ok());
  CHECK(!boxes_agree_on_spans(identity_box(i), *make_support_box(i), 2).ok());
}
