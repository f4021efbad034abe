#include <functional>

#include "fibpoly/fibspan.hpp"
#include "fibpoly/json_io.hpp"
#include "fibpoly/rng.hpp"

namespace fibpoly {

namespace {

using nlohmann::json;

std::vector<Span> span_pool(Rng& rng, const FinSet& base, const AuditBudget& budget) {
  std::vector<Span> pool;
  pool.push_back(terminal_span(base));
  pool.push_back(delta_span(base));
  // empty apex over a nonempty fiber base
  pool.push_back(Span{base, FinSet(0), FinSet(1),
                      FinMap{FinSet(0), base, {}}, FinMap{FinSet(0), FinSet(1), {}}});
  // empty fiber base
  pool.push_back(Span{base, FinSet(0), FinSet(0),
                      FinMap{FinSet(0), base, {}}, FinMap{FinSet(0), FinSet(0), {}}});
  int want = std::max(8, budget.max_samples / 8);
  for (int i = 0; i < want; ++i) pool.push_back(random_span(rng, base, budget.max_size));
  return pool;
}

struct Auditor {
  const FiberedFunctorBox& box;
  AuditBudget budget;
  bool check_opcartesian = false;
  bool check_terminal = false;

  Report run() const {
    Rng rng(budget.seed);
    const FinSet& base = box.dom_base();
    std::vector<Span> pool = span_pool(rng, base, budget);

    try {
      for (const Span& s : pool) {
        Span r = box.eval_obj(s);
        if (r.left_base != box.cod_base())
          return Report::fail("object image not over the declared codomain base", json(s));
        if (r.fiber_base != s.fiber_base)
          return Report::fail("object image changed the fiber base", json(s));
        SpanMap id_img = box.eval_map(identity_span_map(s));
        if (!is_valid(id_img) || id_img.src != r || id_img.dst != r ||
            id_img.v != identity(r.apex) || id_img.w != identity(r.fiber_base))
          return Report::fail("identity arrow not sent to identity", json(s));
      }

      for (int n = 0; n < budget.max_samples; ++n) {
        const Span& s1 = pool[rng.below(static_cast<int>(pool.size()))];
        const Span& s2 = pool[rng.below(static_cast<int>(pool.size()))];
        std::vector<SpanMap> homs = span_homs(s1, s2);
        if (homs.empty()) continue;
        const SpanMap& f = homs[rng.below(static_cast<int>(homs.size()))];
        SpanMap fi = box.eval_map(f);
        if (!is_valid(fi))
          return Report::fail("morphism image is not a span morphism", json(f));
        if (fi.w != f.w)
          return Report::fail("morphism image does not preserve the w-component", json(f));
        if (fi.src != box.eval_obj(s1) || fi.dst != box.eval_obj(s2))
          return Report::fail("morphism image endpoints disagree with object images", json(f));

        const Span& s3 = pool[rng.below(static_cast<int>(pool.size()))];
        std::vector<SpanMap> homs2 = span_homs(s2, s3);
        if (!homs2.empty()) {
          const SpanMap& g = homs2[rng.below(static_cast<int>(homs2.size()))];
          if (box.eval_map(compose(g, f)) != compose(box.eval_map(g), fi))
            return Report::fail("composition not preserved",
                                json{{"f", f}, {"g", g}});
        }
      }

      for (int n = 0; n < std::max(8, budget.max_samples / 2); ++n) {
        const Span& s = pool[rng.below(static_cast<int>(pool.size()))];
        FinSet k2 = random_finset(rng, budget.max_size);
        if (s.fiber_base.size == 0 && k2.size > 0) k2 = FinSet(0);
        FinMap a = random_finmap(rng, k2, s.fiber_base);
        SpanMap cart = cartesian_lift(a, s).to_src;
        if (!is_cartesian(box.eval_map(cart)))
          return Report::fail("cartesian lift not sent to a cartesian arrow", json(cart));

        if (check_opcartesian) {
          FinSet k3 = random_finset(rng, budget.max_size);
          if (k3.size == 0 && s.fiber_base.size > 0) k3 = FinSet(1);
          FinMap w = random_finmap(rng, s.fiber_base, k3);
          SpanMap opcart = opcartesian_lift(w, s).from_src;
          if (!is_opcartesian(box.eval_map(opcart)))
            return Report::fail("opcartesian lift not sent to an opcartesian arrow",
                                json(opcart));
        }
      }

      if (check_terminal) {
        for (int k = 0; k <= budget.max_size; ++k) {
          FinSet ks(k);
          Span term_k =
              cartesian_lift(unique_to_terminal(ks), terminal_span(base)).lifted;
          Span img = box.eval_obj(term_k);
          std::vector<int> sizes = fiber_sizes(to_fiber(img));
          for (int sz : sizes)
            if (sz != 1)
              return Report::fail("fiberwise terminal object not sent to a terminal object",
                                  json(term_k));
        }
      }
    } catch (const structure_error& e) {
      return Report::fail(std::string("box raised a structural error: ") + e.what());
    }

    json bounds{{"max_size", budget.max_size},
                {"max_samples", budget.max_samples},
                {"seed", budget.seed}};
    return Report::pass(json{{"bounds", bounds}});
  }
};

}  // namespace

Report audit_fibered(const FiberedFunctorBox& box, const AuditBudget& budget) {
  return Auditor{box, budget, false, false}.run();
}

Report audit_sums(const FiberedFunctorBox& box, const AuditBudget& budget) {
  return Auditor{box, budget, true, false}.run();
}

Report audit_terminal(const FiberedFunctorBox& box, const AuditBudget& budget) {
  return Auditor{box, budget, true, true}.run();
}

}  // namespace fibpoly
