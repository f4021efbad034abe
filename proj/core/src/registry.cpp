#include "fibpoly/registry.hpp"

#include <algorithm>

#include "fibpoly/json_io.hpp"
#include "fibpoly/poly.hpp"

namespace fibpoly {

namespace {

class SupportBox final : public FiberedFunctorBox {
 public:
  explicit SupportBox(FinSet base) : base_(std::move(base)) {}

  const FinSet& dom_base() const override { return base_; }
  const FinSet& cod_base() const override { return base_; }

  Span eval_obj(const Span& s) const override {
    if (s.left_base != base_) throw structure_error("SupportBox: span not over the base");
    std::vector<int> pt, qt;
    for (int i = 0; i < base_.size; ++i)
      for (int k = 0; k < s.fiber_base.size; ++k)
        if (occupied(s, i, k)) {
          pt.push_back(i);
          qt.push_back(k);
        }
    FinSet apex(static_cast<int>(pt.size()));
    return {base_, apex, s.fiber_base, FinMap{apex, base_, std::move(pt)},
            FinMap{apex, s.fiber_base, std::move(qt)}};
  }

  SpanMap eval_map(const SpanMap& f) const override {
    validate(f);
    Span src = eval_obj(f.src);
    Span dst = eval_obj(f.dst);
    std::vector<int> v(src.apex.size);
    for (int m = 0; m < src.apex.size; ++m) {
      int target = index_of(dst, src.p(m), f.w(src.q(m)));
      if (target < 0) throw structure_error("SupportBox: image pair missing");  // unreachable
      v[m] = target;
    }
    return SpanMap::make(src, dst, FinMap{src.apex, dst.apex, std::move(v)}, f.w);
  }

 private:
  static bool occupied(const Span& s, int i, int k) {
    for (int m = 0; m < s.apex.size; ++m)
      if (s.p(m) == i && s.q(m) == k) return true;
    return false;
  }
  static int index_of(const Span& s, int i, int k) {
    for (int m = 0; m < s.apex.size; ++m)
      if (s.p(m) == i && s.q(m) == k) return m;
    return -1;
  }

  FinSet base_;
};

class BrokenWBox final : public FiberedFunctorBox {
 public:
  explicit BrokenWBox(FinSet base) : base_(std::move(base)) {}

  const FinSet& dom_base() const override { return base_; }
  const FinSet& cod_base() const override { return base_; }

  Span eval_obj(const Span& s) const override { return s; }

  SpanMap eval_map(const SpanMap& f) const override {
    SpanMap out = f;  // deliberately unvalidated: the w-component is scrambled
    std::reverse(out.w.table.begin(), out.w.table.end());
    return out;
  }

 private:
  FinSet base_;
};

}  // namespace

BoxPtr make_support_box(FinSet base) { return std::make_shared<SupportBox>(std::move(base)); }

BoxPtr make_broken_w_box(FinSet base) { return std::make_shared<BrokenWBox>(std::move(base)); }

BoxPtr make_box(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("family"))
    throw structure_error("make_box: spec must be an object with a \"family\" key");
  std::string family = spec.at("family").get<std::string>();
  if (family == "identity")
    return std::make_shared<ComposedBox>(identity_box(spec.at("base").get<FinSet>()));
  if (family == "base-change")
    return std::make_shared<ComposedBox>(base_change_box(spec.at("a").get<FinMap>()));
  if (family == "span")
    return std::make_shared<ComposedBox>(span_box(spec.at("span").get<Span>()));
  if (family == "left-part")
    return std::make_shared<ComposedBox>(
        left_part_box(spec.at("s").get<FinMap>(), spec.at("p").get<FinMap>()));
  if (family == "polynomial")
    return std::make_shared<ComposedBox>(eval_fibered(spec.at("polynomial").get<Polynomial>()));
  if (family == "broken-nonlocal") return make_support_box(spec.at("base").get<FinSet>());
  if (family == "broken-dropw") return make_broken_w_box(spec.at("base").get<FinSet>());
  throw structure_error("make_box: unknown family \"" + family + "\"");
}

}  // namespace fibpoly
