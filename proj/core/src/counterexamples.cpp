#include "fibpoly/counterexamples.hpp"

#include <algorithm>
#include <numeric>

#include "fibpoly/json_io.hpp"

namespace fibpoly {

namespace {

using nlohmann::json;

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  /// Class indices ordered by least member; returns element -> class.
  std::vector<int> classes(int& count) {
    std::vector<int> cls(parent.size(), -1);
    count = 0;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
      int r = find(v);
      if (cls[r] < 0) cls[r] = count++;
      cls[v] = cls[r];
    }
    return cls;
  }
};

}  // namespace

// ---- directed graphs -----------------------------------------------------

FinGraph::FinGraph(FinSet v, FinSet e, FinMap s, FinMap t)
    : vertices(std::move(v)), edges(std::move(e)), src(std::move(s)), tgt(std::move(t)) {
  if (src.dom != edges || src.cod != vertices || tgt.dom != edges || tgt.cod != vertices)
    throw structure_error("FinGraph: src/tgt are not edges -> vertices");
}

GraphMap::GraphMap(FinGraph s, FinGraph d, FinMap v, FinMap e)
    : src(std::move(s)), dst(std::move(d)), on_vertices(std::move(v)), on_edges(std::move(e)) {
  if (on_vertices.dom != src.vertices || on_vertices.cod != dst.vertices ||
      on_edges.dom != src.edges || on_edges.cod != dst.edges)
    throw structure_error("GraphMap: components do not match the graphs");
  if (compose(on_vertices, src.src) != compose(dst.src, on_edges) ||
      compose(on_vertices, src.tgt) != compose(dst.tgt, on_edges))
    throw structure_error("GraphMap: does not commute with src/tgt");
}

bool is_mono(const GraphMap& f) { return is_mono(f.on_vertices) && is_mono(f.on_edges); }

SubdivideResult subdivide(const FinGraph& g, const std::vector<int>& length) {
  if (static_cast<int>(length.size()) != g.edges.size)
    throw structure_error("subdivide: one length per edge required");
  for (int l : length)
    if (l < 0) throw structure_error("subdivide: negative length");

  UnionFind uf(g.vertices.size);
  for (int e = 0; e < g.edges.size; ++e)
    if (length[e] == 0) uf.unite(g.src(e), g.tgt(e));
  int n_classes = 0;
  std::vector<int> cls = uf.classes(n_classes);

  int n_interior = 0, n_edges = 0;
  for (int e = 0; e < g.edges.size; ++e) {
    n_interior += std::max(0, length[e] - 1);
    n_edges += length[e];
  }
  FinSet nv(n_classes + n_interior);
  FinSet ne(n_edges);

  std::vector<int> es(n_edges), et(n_edges);
  int interior = n_classes, edge = 0;
  for (int e = 0; e < g.edges.size; ++e) {
    int l = length[e];
    if (l == 0) continue;
    int prev = cls[g.src(e)];
    for (int i = 1; i < l; ++i) {
      es[edge] = prev;
      et[edge] = interior;
      prev = interior++;
      ++edge;
    }
    es[edge] = prev;
    et[edge] = cls[g.tgt(e)];
    ++edge;
  }

  FinGraph out{nv, ne, FinMap{ne, nv, std::move(es)}, FinMap{ne, nv, std::move(et)}};
  return {std::move(out), FinMap{g.vertices, nv, std::move(cls)}};
}

GraphMap subdivide_map(const GraphMap& f, const std::vector<int>& length_on_dst) {
  std::vector<int> length_on_src(f.src.edges.size);
  for (int e = 0; e < f.src.edges.size; ++e) length_on_src[e] = length_on_dst[f.on_edges(e)];
  SubdivideResult ss = subdivide(f.src, length_on_src);
  SubdivideResult sd = subdivide(f.dst, length_on_dst);

  // Offsets of interior vertices / path edges per original edge.
  auto offsets = [](const std::vector<int>& len, int n_classes) {
    std::vector<int> vi(len.size() + 1), eo(len.size() + 1);
    vi[0] = n_classes;
    eo[0] = 0;
    for (size_t e = 0; e < len.size(); ++e) {
      vi[e + 1] = vi[e] + std::max(0, len[e] - 1);
      eo[e + 1] = eo[e] + len[e];
    }
    return std::pair(vi, eo);
  };
  int ncs = ss.graph.vertices.size, ncd = sd.graph.vertices.size;
  for (int l : length_on_src) ncs -= std::max(0, l - 1);
  for (int l : length_on_dst) ncd -= std::max(0, l - 1);
  auto [vis, eos] = offsets(length_on_src, ncs);
  auto [vid, eod] = offsets(length_on_dst, ncd);

  std::vector<int> vt(ss.graph.vertices.size, -1);
  for (int v = 0; v < f.src.vertices.size; ++v)  // merge classes, via any member
    vt[ss.vertex_map(v)] = sd.vertex_map(f.on_vertices(v));
  for (int e = 0; e < f.src.edges.size; ++e)     // interior vertices, position by position
    for (int i = 0; i < std::max(0, length_on_src[e] - 1); ++i)
      vt[vis[e] + i] = vid[f.on_edges(e)] + i;

  std::vector<int> et(ss.graph.edges.size);
  for (int e = 0; e < f.src.edges.size; ++e)
    for (int i = 0; i < length_on_src[e]; ++i) et[eos[e] + i] = eod[f.on_edges(e)] + i;

  return {ss.graph, sd.graph, FinMap{ss.graph.vertices, sd.graph.vertices, std::move(vt)},
          FinMap{ss.graph.edges, sd.graph.edges, std::move(et)}};
}

WeberWitness weber_mono_failure() {
  FinSet two(2);
  FinSet none(0), one_e(1);
  FinGraph discrete{two, none, FinMap{none, two, {}}, FinMap{none, two, {}}};
  FinGraph loopy{two, one_e, FinMap{one_e, two, {0}}, FinMap{one_e, two, {1}}};
  GraphMap mono{discrete, loopy, identity(two), FinMap{none, one_e, {}}};
  GraphMap image = subdivide_map(mono, {0});

  Report report;
  if (!is_mono(mono))
    report = Report::fail("inclusion is unexpectedly not a mono");
  else if (is_mono(image.on_vertices))
    report = Report::fail("subdivision image is unexpectedly still a mono");
  else
    report = Report::pass(json{
        {"source", json{{"graph", discrete}, {"note", "discrete two-vertex graph"}}},
        {"target", json{{"graph", loopy}, {"note", "two vertices, one edge of length 0"}}},
        {"image_vertex_map", image.on_vertices},
        {"conclusion",
         "a mono whose subdivision image identifies both vertices; subdivision is a left "
         "adjoint that does not preserve monos, so it is not of the form s_! p^*"}});
  return {std::move(mono), std::move(image), std::move(report)};
}

Report mono_preservation_suite(int bound) {
  std::int64_t checked = 0;
  for (int bi = 0; bi <= bound; ++bi)
    for (int ii = 0; ii <= bound; ++ii)
      for (int ei = 0; ei <= bound; ++ei) {
        FinSet b(bi), i(ii), e(ei);
        // spans B <-p- E -s-> I up to relabeling of E: nondecreasing tables
        // of pairs (p(x), s(x)).
        std::vector<SliceObj> ys;
        for (int ty = 0; ty <= bound; ++ty)
          for (const auto& t : nondecreasing_tables(ty, bi))
            ys.emplace_back(b, FinSet(ty), FinMap{FinSet(ty), b, t});
        for (const auto& ps : nondecreasing_tables(ei, bi * ii)) {
          std::vector<int> pt(ei), st(ei);
          for (int x = 0; x < ei; ++x) {
            pt[x] = ps[x] / ii;
            st[x] = ps[x] % ii;
          }
          FinMap p{e, b, pt}, s{e, i, st};
          for (const SliceObj& y : ys)
            for (const SliceObj& y2 : ys)
              for (const SliceMap& f : slice_homs(y, y2)) {
                if (!is_mono(f)) continue;
                SliceMap g = dep_sum_map(s, base_change_map(p, f));
                ++checked;
                if (!is_mono(g))
                  return Report::fail("s_! p^* failed to preserve a mono",
                                      json{{"s", s}, {"p", p}, {"mono", f}});
              }
        }
      }

  WeberWitness weber = weber_mono_failure();
  if (!weber.report.ok()) return weber.report;
  return Report::pass(json{{"bound", bound},
                           {"monos_checked", checked},
                           {"subdivision_witness", weber.report.details}});
}

// ---- group actions -------------------------------------------------------

Group::Group(FinSet e, std::vector<std::vector<int>> t) : elems(std::move(e)), table(std::move(t)) {
  int n = elems.size;
  if (n == 0) throw structure_error("Group: empty carrier");
  if (static_cast<int>(table.size()) != n) throw structure_error("Group: table has wrong size");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw structure_error("Group: table row has wrong size");
    for (int v : row)
      if (v < 0 || v >= n) throw structure_error("Group: table entry out of range");
  }
  unit = -1;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int g = 0; g < n; ++g) ok = ok && table[u][g] == g && table[g][u] == g;
    if (ok) {
      unit = u;
      break;
    }
  }
  if (unit < 0) throw structure_error("Group: no identity element");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          throw structure_error("Group: multiplication not associative");
  for (int g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < n; ++h) has_inverse = has_inverse || (table[g][h] == unit && table[h][g] == unit);
    if (!has_inverse) throw structure_error("Group: element without inverse");
  }
}

Group cyclic_group(int n) {
  if (n <= 0) throw structure_error("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  return {FinSet(n), std::move(t)};
}

GSet::GSet(Group g, FinSet c, FinMap a)
    : group(std::move(g)), carrier(std::move(c)), action(std::move(a)) {
  if (action.dom.size != group.elems.size * carrier.size || action.cod != carrier)
    throw structure_error("GSet: action is not (G x carrier) -> carrier");
  for (int x = 0; x < carrier.size; ++x)
    if (act(group.unit, x) != x) throw structure_error("GSet: identity does not act trivially");
  for (int g1 = 0; g1 < group.elems.size; ++g1)
    for (int g2 = 0; g2 < group.elems.size; ++g2)
      for (int x = 0; x < carrier.size; ++x)
        if (act(g1, act(g2, x)) != act(group.mult(g1, g2), x))
          throw structure_error("GSet: action not compatible with multiplication");
}

GSet trivial_gset(const Group& g, const FinSet& carrier) {
  std::vector<int> t(g.elems.size * carrier.size);
  for (int gg = 0; gg < g.elems.size; ++gg)
    for (int x = 0; x < carrier.size; ++x) t[gg * carrier.size + x] = x;
  return {g, carrier, FinMap{FinSet(g.elems.size * carrier.size), carrier, std::move(t)}};
}

GSet regular_representation(const Group& g) {
  FinSet carrier(g.elems.size);
  std::vector<int> t(g.elems.size * carrier.size);
  for (int gg = 0; gg < g.elems.size; ++gg)
    for (int x = 0; x < carrier.size; ++x) t[gg * carrier.size + x] = g.table[gg][x];
  return {g, carrier, FinMap{FinSet(g.elems.size * carrier.size), carrier, std::move(t)}};
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.group != y.group) throw structure_error("disjoint_union: different groups");
  int nx = x.carrier.size, n = nx + y.carrier.size;
  FinSet carrier(n);
  std::vector<int> t(x.group.elems.size * n);
  for (int g = 0; g < x.group.elems.size; ++g) {
    for (int a = 0; a < nx; ++a) t[g * n + a] = x.act(g, a);
    for (int a = nx; a < n; ++a) t[g * n + a] = nx + y.act(g, a - nx);
  }
  return {x.group, carrier, FinMap{FinSet(x.group.elems.size * n), carrier, std::move(t)}};
}

GSet gset_fixed_points(const GSet& x) {
  int count = 0;
  for (int a = 0; a < x.carrier.size; ++a) {
    bool fixed = true;
    for (int g = 0; g < x.group.elems.size; ++g) fixed = fixed && x.act(g, a) == a;
    if (fixed) ++count;
  }
  return trivial_gset(x.group, FinSet(count));
}

GSet gset_orbits(const GSet& x) {
  UnionFind uf(x.carrier.size);
  for (int g = 0; g < x.group.elems.size; ++g)
    for (int a = 0; a < x.carrier.size; ++a) uf.unite(a, x.act(g, a));
  int count = 0;
  uf.classes(count);
  return trivial_gset(x.group, FinSet(count));
}

std::vector<FinMap> equivariant_homs(const GSet& x, const GSet& y) {
  if (x.group != y.group) throw structure_error("equivariant_homs: different groups");
  std::vector<FinMap> out;
  for (FinMap f : all_maps(x.carrier, y.carrier)) {
    bool ok = true;
    for (int g = 0; g < x.group.elems.size && ok; ++g)
      for (int a = 0; a < x.carrier.size && ok; ++a)
        ok = f(x.act(g, a)) == y.act(g, f(a));
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

std::int64_t equivariant_hom_count(const GSet& x, const GSet& y) {
  return static_cast<std::int64_t>(equivariant_homs(x, y).size());
}

Report strength_impossible(const GSet& i) {
  if (i.carrier.size == 0)
    return Report::fail("precondition: the acted set is empty");
  GSet fixed = gset_fixed_points(i);
  if (fixed.carrier.size > 0)
    return Report::fail("precondition: the action has a fixed point, so a strength component "
                        "exists (positive control)",
                        json{{"fixed_points", fixed.carrier.size}});
  // R = fixed points.  R(1) is a point, so |I x R(1)| = |I| > 0, yet R(I) = 0.
  GSet one = trivial_gset(i.group, FinSet(1));
  int r1 = gset_fixed_points(one).carrier.size;
  return Report::pass(json{
      {"I_times_R1", i.carrier.size * r1},
      {"R_I", 0},
      {"conclusion", "no strength component at X = 1: the required map I x R(1) -> R(I) "
                     "would have nonempty domain and empty codomain"}});
}

}  // namespace fibpoly
