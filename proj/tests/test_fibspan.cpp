#include <doctest.h>

#include "fibpoly/composed_box.hpp"
#include "fibpoly/registry.hpp"
#include "fibpoly/rng.hpp"
#include "oracles.hpp"

using namespace fibpoly;

TEST_CASE("span and span-map validation") {
  FinSet i(2), m(3), k(2);
  FinMap p{m, i, {0, 1, 1}}, q{m, k, {0, 0, 1}};
  FinMap wrong{m, FinSet(3), {0, 1, 2}};
  CHECK_THROWS_AS(Span(i, m, k, wrong, q), structure_error);  // p has wrong codomain
  Span s{i, m, k, p, q};
  CHECK_THROWS_AS(SpanMap::make(s, s, FinMap{m, m, {1, 0, 2}}, identity(k)),
                  structure_error);  // breaks the p-triangle
  SpanMap id = identity_span_map(s);
  CHECK(is_valid(id));
  CHECK(is_vertical(id));
  CHECK(is_cartesian(id));
  CHECK(is_opcartesian(id));
  SpanMap broken = id;
  broken.w = FinMap{k, k, {1, 0}};
  CHECK(!is_valid(broken));
  CHECK_THROWS_AS(validate(broken), structure_error);
}

TEST_CASE("fiber identification round-trips") {
  Rng rng(7);
  for (int n = 0; n < 30; ++n) {
    Span s = random_span(rng, FinSet(1 + rng.below(3)), 3);
    SliceObj x = to_fiber(s);
    CHECK(x.base.size == s.left_base.size * s.fiber_base.size);
    CHECK(from_fiber(s.left_base, s.fiber_base, x) == s);
  }
  // from_fiber_map produces vertical morphisms
  FinSet i(2), k(2);
  Rng rng2(8);
  SliceObj x = random_slice_obj(rng2, product(i, k).carrier, 4);
  for (const SliceMap& f : slice_homs(x, x)) {
    SpanMap g = from_fiber_map(i, k, f);
    CHECK(is_valid(g));
    CHECK(is_vertical(g));
  }
}

TEST_CASE("chosen lifts are cartesian / opcartesian") {
  Rng rng(11);
  for (int n = 0; n < 30; ++n) {
    FinSet i(1 + rng.below(3)), k(1 + rng.below(3)), m(rng.below(4));
    Span s{i, m, k, random_finmap(rng, m, i), random_finmap(rng, m, k)};
    FinSet k2(1 + rng.below(3));
    FinMap a = random_finmap(rng, k2, s.fiber_base);
    CartesianLift cl = cartesian_lift(a, s);
    CHECK(cl.to_src.w == a);
    CHECK(is_cartesian(cl.to_src));
    FinMap w = random_finmap(rng, s.fiber_base, k2);
    OpcartesianLift oc = opcartesian_lift(w, s);
    CHECK(oc.from_src.v == identity(s.apex));
    CHECK(is_opcartesian(oc.from_src));
  }
}

TEST_CASE("span hom enumeration matches per-w brute count") {
  Rng rng(13);
  for (int n = 0; n < 25; ++n) {
    FinSet i(1 + rng.below(2));
    Span a = random_span(rng, i, 2), x = random_span(rng, i, 2);
    std::int64_t total = 0;
    for (const FinMap& w : all_maps(a.fiber_base, x.fiber_base))
      total += oracles::span_homs_with_w_brute(a, x, w);
    auto homs = span_homs(a, x);
    CHECK(static_cast<std::int64_t>(homs.size()) == total);
    for (const SpanMap& f : homs) CHECK(is_valid(f));
    if (a.fiber_base == x.fiber_base) {
      std::int64_t vert = oracles::span_homs_with_w_brute(a, x, identity(a.fiber_base));
      CHECK(static_cast<std::int64_t>(vertical_span_homs(a, x).size()) == vert);
    }
  }
}

TEST_CASE("span isomorphism search") {
  FinSet i(2), k(2), m(2);
  Span a{i, m, k, FinMap{m, i, {0, 1}}, FinMap{m, k, {0, 1}}};
  Span b{i, m, k, FinMap{m, i, {1, 0}}, FinMap{m, k, {1, 0}}};  // relabeled apex
  auto iso = find_span_iso(a, b);
  REQUIRE(iso.has_value());
  CHECK(is_iso(iso->v));
  CHECK(is_iso(iso->w));
  Span c{i, FinSet(1), k, FinMap{FinSet(1), i, {0}}, FinMap{FinSet(1), k, {0}}};
  CHECK(!find_span_iso(a, c).has_value());
}

TEST_CASE("audits accept honest boxes and reject broken ones") {
  FinSet two(2);
  AuditBudget small{2, 60, 99};
  CHECK(audit_fibered(identity_box(two), small).ok());
  CHECK(audit_sums(identity_box(two), small).ok());
  CHECK(audit_terminal(identity_box(two), small).ok());

  FinMap a{FinSet(3), two, {0, 1, 1}};
  ComposedBox bc = base_change_box(a);
  CHECK(audit_fibered(bc, small).ok());
  CHECK(audit_sums(bc, small).ok());
  CHECK(audit_terminal(bc, small).ok());

  // support functor: fibered but does not preserve indexed sums; the default
  // budget samples enough opcartesian pushes to hit a witness
  BoxPtr support = make_support_box(two);
  CHECK(audit_fibered(*support, small).ok());
  Report sums = audit_sums(*support, AuditBudget{});
  CHECK(!sums.ok());
  CHECK(sums.details.contains("witness"));

  // w-corrupting box is not even fibered
  Report fib = audit_fibered(*make_broken_w_box(two), small);
  CHECK(!fib.ok());
}

TEST_CASE("strength of the plain fiber") {
  FinSet two(2), s(3);
  Rng rng(17);
  ComposedBox id = identity_box(two);
  SliceObj xi = random_slice_obj(rng, two, 3);
  SliceObj txi = tensor(s, xi);
  CHECK(txi.total.size == s.size * xi.total.size);
  StrengthResult st = strength(id, s, xi);
  REQUIRE(st.defined);
  CHECK(is_iso(st.map));  // the identity functor's strength is invertible

  // naturality in xi
  SliceObj xi2 = random_slice_obj(rng, two, 3);
  auto homs = slice_homs(xi, xi2);
  if (!homs.empty()) {
    const SliceMap& f = homs.front();
    StrengthResult st2 = strength(id, s, xi2);
    REQUIRE(st2.defined);
    CHECK(compose(box_plain_map(id, tensor_map(s, f)), st.map) ==
          compose(st2.map, tensor_map(s, box_plain_map(id, f))));
  }
}
