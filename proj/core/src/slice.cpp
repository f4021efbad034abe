#include "fibpoly/slice.hpp"

#include <algorithm>

namespace fibpoly {

SliceObj::SliceObj(FinSet b, FinSet t, FinMap p)
    : base(std::move(b)), total(std::move(t)), proj(std::move(p)) {
  if (proj.dom != total || proj.cod != base)
    throw structure_error("SliceObj: structure map " + describe(proj) +
                          " does not match total/base");
}

SliceMap::SliceMap(SliceObj s, SliceObj d, FinMap m)
    : src(std::move(s)), dst(std::move(d)), map(std::move(m)) {
  if (src.base != dst.base) throw structure_error("SliceMap: objects over different bases");
  if (map.dom != src.total || map.cod != dst.total)
    throw structure_error("SliceMap: underlying map does not match totals");
  if (compose(dst.proj, map) != src.proj)
    throw structure_error("SliceMap: triangle over the base does not commute");
}

SliceMap identity_slice_map(const SliceObj& x) { return {x, x, identity(x.total)}; }

SliceMap compose(const SliceMap& g, const SliceMap& f) {
  if (f.dst != g.src) throw structure_error("compose(SliceMap): middle objects differ");
  return {f.src, g.dst, compose(g.map, f.map)};
}

std::vector<int> fiber_elements(const SliceObj& x, int i) {
  std::vector<int> out;
  for (int m = 0; m < x.total.size; ++m)
    if (x.proj(m) == i) out.push_back(m);
  return out;
}

std::vector<int> fiber_sizes(const SliceObj& x) {
  std::vector<int> out(x.base.size, 0);
  for (int m = 0; m < x.total.size; ++m) ++out[x.proj(m)];
  return out;
}

bool fiberwise_iso(const SliceObj& x, const SliceObj& y) {
  return x.base == y.base && fiber_sizes(x) == fiber_sizes(y);
}

bool is_mono(const SliceMap& f) { return is_mono(f.map); }
bool is_iso(const SliceMap& f) { return is_iso(f.map); }

// ---- base change ---------------------------------------------------------

BaseChangeData base_change(const FinMap& a, const SliceObj& x) {
  if (a.cod != x.base)
    throw structure_error("base_change: arrow " + describe(a) + " does not target base of " +
                          describe(x.proj));
  BaseChangeData out;
  out.pb = pullback(x.proj, a);
  out.obj = SliceObj{a.dom, out.pb.carrier, out.pb.pr2};
  out.back = out.pb.pr1;
  return out;
}

SliceMap base_change_map(const FinMap& a, const SliceMap& f) {
  BaseChangeData src = base_change(a, f.src);
  BaseChangeData dst = base_change(a, f.dst);
  std::vector<int> t(src.obj.total.size);
  for (int e = 0; e < src.obj.total.size; ++e)
    t[e] = dst.index(f.map(src.back(e)), src.obj.proj(e));
  return {src.obj, dst.obj, FinMap{src.obj.total, dst.obj.total, std::move(t)}};
}

// ---- dependent sum -------------------------------------------------------

SliceObj dep_sum(const FinMap& a, const SliceObj& x) {
  if (a.dom != x.base)
    throw structure_error("dep_sum: arrow " + describe(a) + " does not start at base");
  return {a.cod, x.total, compose(a, x.proj)};
}

SliceMap dep_sum_map(const FinMap& a, const SliceMap& f) {
  return {dep_sum(a, f.src), dep_sum(a, f.dst),
          FinMap{f.src.total, f.dst.total, f.map.table}};
}

// ---- dependent product ---------------------------------------------------

DepProdData dep_prod(const FinMap& a, const SliceObj& x) {
  if (a.dom != x.base)
    throw structure_error("dep_prod: arrow " + describe(a) + " does not start at base");
  DepProdData out;
  out.fiber_dom.assign(a.cod.size, {});
  for (int j = 0; j < a.dom.size; ++j) out.fiber_dom[a.table[j]].push_back(j);
  out.fiber_elems.assign(a.dom.size, {});
  for (int m = 0; m < x.total.size; ++m) out.fiber_elems[x.proj(m)].push_back(m);

  out.offset.assign(a.cod.size + 1, 0);
  for (int i = 0; i < a.cod.size; ++i) {
    long long count = 1;
    for (int j : out.fiber_dom[i]) count *= out.fiber_elems[j].size();
    out.offset[i + 1] = out.offset[i] + static_cast<int>(count);
  }
  int total = out.offset[a.cod.size];
  std::vector<int> proj(total);
  for (int i = 0; i < a.cod.size; ++i)
    for (int e = out.offset[i]; e < out.offset[i + 1]; ++e) proj[e] = i;
  out.obj = SliceObj{a.cod, FinSet(total), FinMap{FinSet(total), a.cod, std::move(proj)}};
  return out;
}

std::vector<int> DepProdData::section(int elem) const {
  int i = base_of(elem);
  int idx = elem - offset[i];
  const auto& dom = fiber_dom[i];
  std::vector<int> sec(dom.size());
  for (int k = static_cast<int>(dom.size()) - 1; k >= 0; --k) {
    const auto& opts = fiber_elems[dom[k]];
    int r = static_cast<int>(opts.size());
    sec[k] = opts[idx % r];
    idx /= r;
  }
  return sec;
}

int DepProdData::encode(int i, const std::vector<int>& sec) const {
  const auto& dom = fiber_dom[i];
  if (sec.size() != dom.size()) throw structure_error("DepProdData::encode: arity mismatch");
  int idx = 0;
  for (size_t k = 0; k < dom.size(); ++k) {
    const auto& opts = fiber_elems[dom[k]];
    auto it = std::find(opts.begin(), opts.end(), sec[k]);
    if (it == opts.end()) throw structure_error("DepProdData::encode: entry not in fiber");
    idx = idx * static_cast<int>(opts.size()) + static_cast<int>(it - opts.begin());
  }
  return offset[i] + idx;
}

SliceMap dep_prod_map(const FinMap& a, const SliceMap& f) {
  DepProdData src = dep_prod(a, f.src);
  DepProdData dst = dep_prod(a, f.dst);
  std::vector<int> t(src.obj.total.size);
  for (int e = 0; e < src.obj.total.size; ++e) {
    std::vector<int> sec = src.section(e);
    for (int& v : sec) v = f.map(v);
    t[e] = dst.encode(src.base_of(e), sec);
  }
  return {src.obj, dst.obj, FinMap{src.obj.total, dst.obj.total, std::move(t)}};
}

// ---- units and counits ---------------------------------------------------

SliceMap sum_unit(const FinMap& a, const SliceObj& y) {
  SliceObj sy = dep_sum(a, y);
  BaseChangeData bc = base_change(a, sy);
  std::vector<int> t(y.total.size);
  for (int m = 0; m < y.total.size; ++m) t[m] = bc.index(m, y.proj(m));
  return {y, bc.obj, FinMap{y.total, bc.obj.total, std::move(t)}};
}

SliceMap sum_counit(const FinMap& a, const SliceObj& x) {
  BaseChangeData bc = base_change(a, x);
  SliceObj sb = dep_sum(a, bc.obj);
  return {sb, x, FinMap{sb.total, x.total, bc.back.table}};
}

SliceMap prod_unit(const FinMap& a, const SliceObj& x) {
  BaseChangeData bc = base_change(a, x);
  DepProdData dp = dep_prod(a, bc.obj);
  std::vector<int> t(x.total.size);
  for (int m = 0; m < x.total.size; ++m) {
    int i = x.proj(m);
    std::vector<int> sec;
    sec.reserve(dp.fiber_dom[i].size());
    for (int j : dp.fiber_dom[i]) sec.push_back(bc.index(m, j));
    t[m] = dp.encode(i, sec);
  }
  return {x, dp.obj, FinMap{x.total, dp.obj.total, std::move(t)}};
}

SliceMap prod_counit(const FinMap& a, const SliceObj& y) {
  DepProdData dp = dep_prod(a, y);
  BaseChangeData bc = base_change(a, dp.obj);
  std::vector<int> t(bc.obj.total.size);
  for (int e = 0; e < bc.obj.total.size; ++e) {
    int sigma = bc.back(e);
    int j = bc.obj.proj(e);
    int i = dp.base_of(sigma);
    const auto& dom = dp.fiber_dom[i];
    auto it = std::find(dom.begin(), dom.end(), j);
    std::vector<int> sec = dp.section(sigma);
    t[e] = sec[it - dom.begin()];
  }
  return {bc.obj, y, FinMap{bc.obj.total, y.total, std::move(t)}};
}

// ---- hom-sets ------------------------------------------------------------

std::int64_t slice_hom_count(const SliceObj& x, const SliceObj& y) {
  if (x.base != y.base) throw structure_error("slice_hom_count: base mismatch");
  std::vector<int> ysz = fiber_sizes(y);
  std::int64_t count = 1;
  for (int m = 0; m < x.total.size; ++m) {
    count *= ysz[x.proj(m)];
    if (count == 0) return 0;
  }
  return count;
}

std::vector<SliceMap> slice_homs(const SliceObj& x, const SliceObj& y) {
  if (x.base != y.base) throw structure_error("slice_homs: base mismatch");
  std::vector<std::vector<int>> opts(x.total.size);
  for (int m = 0; m < x.total.size; ++m) {
    opts[m] = fiber_elements(y, x.proj(m));
    if (opts[m].empty()) return {};
  }
  std::vector<SliceMap> out;
  std::vector<int> pick(x.total.size, 0);
  while (true) {
    std::vector<int> t(x.total.size);
    for (int m = 0; m < x.total.size; ++m) t[m] = opts[m][pick[m]];
    out.emplace_back(x, y, FinMap{x.total, y.total, std::move(t)});
    int i = x.total.size - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(opts[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

// ---- Beck-Chevalley ------------------------------------------------------

bool commutes(const PullbackSquare& sq) {
  if (sq.u.dom != sq.b.dom || sq.a.dom != sq.u.cod || sq.v.dom != sq.b.cod ||
      sq.a.cod != sq.v.cod)
    return false;
  return compose(sq.a, sq.u) == compose(sq.v, sq.b);
}

bool is_pullback_square(const PullbackSquare& sq) {
  if (!commutes(sq)) return false;
  Pullback chosen = pullback(sq.a, sq.v);
  if (chosen.carrier.size != sq.u.dom.size) return false;
  std::vector<char> hit(chosen.carrier.size, 0);
  for (int p = 0; p < sq.u.dom.size; ++p) {
    int idx = chosen.index(sq.u(p), sq.b(p));
    if (idx < 0 || hit[idx]) return false;
    hit[idx] = 1;
  }
  return true;
}

BeckChevalleyResult beck_chevalley(const PullbackSquare& sq, const SliceObj& y) {
  if (!commutes(sq)) throw structure_error("beck_chevalley: square does not commute");
  if (!is_pullback_square(sq)) throw structure_error("beck_chevalley: square is not a pullback");
  if (y.base != sq.b.cod) throw structure_error("beck_chevalley: object not over cod(b)");

  BaseChangeData bcb = base_change(sq.b, y);
  SliceObj lhs = dep_sum(sq.u, bcb.obj);
  BaseChangeData bca = base_change(sq.a, dep_sum(sq.v, y));
  std::vector<int> t(lhs.total.size);
  for (int e = 0; e < lhs.total.size; ++e) {
    int pt = bcb.pb.pr2(e);
    t[e] = bca.index(bcb.back(e), sq.u(pt));
  }
  SliceMap cmp{lhs, bca.obj, FinMap{lhs.total, bca.obj.total, std::move(t)}};
  bool iso = is_iso(cmp.map);
  return {std::move(cmp), iso};
}

}  // namespace fibpoly
