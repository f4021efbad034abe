#include "fibpoly/suites.hpp"

#include "fibpoly/json_io.hpp"
#include "fibpoly/mainlemma.hpp"
#include "fibpoly/rng.hpp"

namespace fibpoly {

namespace {

using nlohmann::json;

std::vector<SliceObj> objs_up_to_iso(const FinSet& base, int max_total) {
  std::vector<SliceObj> out;
  for (int total = 0; total <= max_total; ++total)
    for (const auto& t : nondecreasing_tables(total, base.size))
      out.emplace_back(base, FinSet(total), FinMap{FinSet(total), base, t});
  return out;
}

}  // namespace

Report adjunction_suite(int base_bound, int total_bound) {
  std::int64_t hom_pairs = 0, triangles = 0;
  for (int ji = 0; ji <= base_bound; ++ji)
    for (int ii = 0; ii <= base_bound; ++ii) {
      FinSet j(ji), i(ii);
      std::vector<SliceObj> xs = objs_up_to_iso(i, total_bound);
      std::vector<SliceObj> ys = objs_up_to_iso(j, total_bound);
      for (const FinMap& a : all_maps(j, i)) {
        for (const SliceObj& y : ys) {
          // triangle identities of a_! -| a* and a* -| a_* on the Y side
          SliceObj sy = dep_sum(a, y);
          if (compose(sum_counit(a, sy), dep_sum_map(a, sum_unit(a, y))) !=
              identity_slice_map(sy))
            return Report::fail("dependent-sum triangle identity fails",
                                json{{"a", a}, {"y", y}});
          SliceObj py = dep_prod(a, y).obj;
          if (compose(dep_prod_map(a, prod_counit(a, y)), prod_unit(a, py)) !=
              identity_slice_map(py))
            return Report::fail("dependent-product triangle identity fails",
                                json{{"a", a}, {"y", y}});
          triangles += 2;
        }
        for (const SliceObj& x : xs) {
          SliceObj bx = base_change(a, x).obj;
          if (compose(base_change_map(a, sum_counit(a, x)), sum_unit(a, bx)) !=
              identity_slice_map(bx))
            return Report::fail("base-change triangle identity (sum side) fails",
                                json{{"a", a}, {"x", x}});
          if (compose(prod_counit(a, bx), base_change_map(a, prod_unit(a, x))) !=
              identity_slice_map(bx))
            return Report::fail("base-change triangle identity (product side) fails",
                                json{{"a", a}, {"x", x}});
          triangles += 2;
          for (const SliceObj& y : ys) {
            ++hom_pairs;
            if (slice_hom_count(dep_sum(a, y), x) != slice_hom_count(y, bx))
              return Report::fail("left-adjunction hom counts disagree",
                                  json{{"a", a}, {"x", x}, {"y", y}});
            if (slice_hom_count(bx, y) != slice_hom_count(x, dep_prod(a, y).obj))
              return Report::fail("right-adjunction hom counts disagree",
                                  json{{"a", a}, {"x", x}, {"y", y}});
          }
        }
      }
    }
  return Report::pass(json{{"base_bound", base_bound},
                           {"total_bound", total_bound},
                           {"hom_pairs", hom_pairs},
                           {"triangles", triangles}});
}

Report beck_chevalley_suite(int bound) {
  std::int64_t squares = 0;
  for (int ii = 0; ii <= bound; ++ii)
    for (int ji = 0; ji <= bound; ++ji)
      for (int xi = 0; xi <= bound; ++xi) {
        FinSet i(ii), j(ji), x(xi);
        for (const FinMap& a : all_maps(j, i))
          for (const FinMap& v : all_maps(x, i)) {
            Pullback pb = pullback(a, v);
            PullbackSquare sq{pb.pr1, pb.pr2, v, a};
            if (!is_pullback_square(sq))
              return Report::fail("chosen pullback rejected by the pullback check",
                                  json{{"square", sq}});
            for (const SliceObj& y : objs_up_to_iso(x, bound)) {
              ++squares;
              BeckChevalleyResult bc = beck_chevalley(sq, y);
              if (!bc.iso)
                return Report::fail("comparison map is not an isomorphism",
                                    json{{"square", sq}, {"y", y}});
            }
          }
      }

  // Control: a commuting square that is not a pullback must be rejected.
  FinSet one(1), two(2);
  PullbackSquare control{constant_map(two, one, 0), constant_map(two, one, 0), identity(one),
                         identity(one)};
  if (!commutes(control) || is_pullback_square(control))
    return Report::fail("non-pullback control square was not rejected");
  bool threw = false;
  try {
    beck_chevalley(control, SliceObj{one, one, identity(one)});
  } catch (const structure_error&) {
    threw = true;
  }
  if (!threw) return Report::fail("comparison was built over a non-pullback square");

  return Report::pass(json{{"bound", bound}, {"squares", squares}, {"control", "rejected"}});
}

Report bifibration_suite(int bound, std::uint64_t seed) {
  Rng rng(seed);
  std::int64_t lifts = 0, factored = 0, round_trips = 0;
  for (int ii = 0; ii <= bound; ++ii) {
    FinSet i(ii);
    std::vector<Span> pool = sample_spans(rng, i, bound, 8);
    for (const Span& s : pool) {
      ++round_trips;
      if (from_fiber(i, s.fiber_base, to_fiber(s)) != s)
        return Report::fail("fiber identification does not round-trip", json(s));

      FinSet k2 = random_finset(rng, s.fiber_base.size == 0 ? 0 : bound);
      FinMap a = random_finmap(rng, k2, s.fiber_base);
      CartesianLift cl = cartesian_lift(a, s);
      if (!is_cartesian(cl.to_src))
        return Report::fail("chosen cartesian lift is not cartesian", json(s));
      FinSet k3(s.fiber_base.size == 0 ? 0 : 1 + rng.below(bound));
      FinMap w = random_finmap(rng, s.fiber_base, k3);
      if (!is_opcartesian(opcartesian_lift(w, s).from_src))
        return Report::fail("chosen opcartesian lift is not opcartesian", json(s));
      lifts += 2;
    }
    for (int n = 0; n < 64; ++n) {
      const Span& s1 = pool[rng.below(static_cast<int>(pool.size()))];
      const Span& s2 = pool[rng.below(static_cast<int>(pool.size()))];
      std::vector<SpanMap> homs = span_homs(s1, s2);
      if (homs.empty()) continue;
      const SpanMap& f = homs[rng.below(static_cast<int>(homs.size()))];
      CartesianLift cl = cartesian_lift(f.w, f.dst);
      std::vector<int> vt(f.src.apex.size);
      for (int m = 0; m < f.src.apex.size; ++m) vt[m] = cl.pb.index(f.v(m), f.src.q(m));
      SpanMap vertical = SpanMap::make(f.src, cl.lifted,
                                       FinMap{f.src.apex, cl.lifted.apex, std::move(vt)},
                                       identity(f.src.fiber_base));
      ++factored;
      if (!is_vertical(vertical) || compose(cl.to_src, vertical) != f)
        return Report::fail("vertical-then-cartesian factorization fails", json(f));
    }
  }
  return Report::pass(json{{"bound", bound},
                           {"seed", seed},
                           {"lifts", lifts},
                           {"factorizations", factored},
                           {"round_trips", round_trips}});
}

}  // namespace fibpoly
