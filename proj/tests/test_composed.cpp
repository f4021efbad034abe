#include <doctest.h>

#include "fibpoly/composed_box.hpp"
#include "fibpoly/poly.hpp"
#include "fibpoly/rng.hpp"
#include "oracles.hpp"

using namespace fibpoly;

TEST_CASE("composed boxes pass the fibered audit") {
  FinSet i(2), b(2), m(3), k(2);
  FinMap s{m, i, {0, 1, 1}}, q{m, k, {0, 0, 1}};
  AuditBudget small{2, 60, 3};
  CHECK(audit_fibered(span_box(Span{i, m, k, s, q}), small).ok());
  FinMap p{m, b, {0, 1, 1}};
  CHECK(audit_fibered(left_part_box(s, p), small).ok());
  CHECK(audit_fibered(middle_part_box(s, p), small).ok());
}

TEST_CASE("1-fiber of a base-change box is base change") {
  Rng rng(23);
  for (int n = 0; n < 20; ++n) {
    FinSet i(1 + rng.below(3)), j(1 + rng.below(3));
    FinMap a = random_finmap(rng, j, i);
    ComposedBox box = base_change_box(a);
    SliceObj x = random_slice_obj(rng, i, 4);
    CHECK(fiberwise_iso(box_plain_obj(box, x), base_change(a, x).obj));
  }
}

TEST_CASE("a span functor evaluated at the diagonal returns the span, reversed") {
  Rng rng(29);
  for (int n = 0; n < 20; ++n) {
    FinSet i(1 + rng.below(3));
    Span s = random_span(rng, i, 3);
    ComposedBox box = span_box(s);
    Span at_delta = box.eval_obj(delta_span(i));
    Span reversed{s.fiber_base, s.apex, s.left_base, s.q, s.p};
    CHECK(find_span_iso(at_delta, reversed).has_value());
  }
}

TEST_CASE("morphism action is functorial on sampled homs") {
  FinSet i(2), m(3), k(2);
  Span sp{i, m, k, FinMap{m, i, {0, 1, 1}}, FinMap{m, k, {0, 0, 1}}};
  ComposedBox box = span_box(sp);
  Rng rng(31);
  Span a = random_span(rng, i, 2), b = random_span(rng, i, 2), c = random_span(rng, i, 2);
  CHECK(box.eval_map(identity_span_map(a)) == identity_span_map(box.eval_obj(a)));
  auto fs = span_homs(a, b), gs = span_homs(b, c);
  int checked = 0;
  for (const SpanMap& f : fs) {
    for (const SpanMap& g : gs) {
      CHECK(box.eval_map(compose(g, f)) == compose(box.eval_map(g), box.eval_map(f)));
      if (++checked >= 40) return;
    }
  }
}
