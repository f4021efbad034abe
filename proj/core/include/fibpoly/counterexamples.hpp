#pragma once

// Two boundary examples that separate plain right adjoints from fibered ones:
// edge subdivision on directed graphs (a left adjoint that fails to preserve
// monos, unlike any q_! p^*), and fixed points of a group action (a right
// adjoint with a left adjoint but no strength).

#include <vector>

#include "fibpoly/report.hpp"
#include "fibpoly/slice.hpp"

namespace fibpoly {

// ---- directed graphs -----------------------------------------------------

struct FinGraph {
  FinSet vertices;
  FinSet edges;
  FinMap src;  // edges -> vertices
  FinMap tgt;  // edges -> vertices

  FinGraph() = default;
  FinGraph(FinSet v, FinSet e, FinMap s, FinMap t);

  bool operator==(const FinGraph&) const = default;
};

struct GraphMap {
  FinGraph src;
  FinGraph dst;
  FinMap on_vertices;
  FinMap on_edges;

  GraphMap() = default;
  GraphMap(FinGraph s, FinGraph d, FinMap v, FinMap e);

  bool operator==(const GraphMap&) const = default;
};

bool is_mono(const GraphMap& f);

struct SubdivideResult {
  FinGraph graph;
  FinMap vertex_map;  // old vertices -> new vertices (quotient + inclusion)
};

/// Replace each edge of length l >= 1 by a path of l fresh edges through
/// l - 1 fresh vertices; each edge of length 0 merges its endpoints.
/// New vertices: the merge classes first (ordered by least member), then the
/// interior path vertices edge by edge.
SubdivideResult subdivide(const FinGraph& g, const std::vector<int>& length);

/// Functorial action: lengths live on the codomain and pull back along f.
GraphMap subdivide_map(const GraphMap& f, const std::vector<int>& length_on_dst);

struct WeberWitness {
  GraphMap mono;        // discrete two-vertex graph into two vertices + one edge
  GraphMap image;       // its subdivision image: vertex component 2 -> 1
  Report report;
};

/// The mono-preservation failure: a graph mono whose subdivision image
/// identifies the two vertices.
WeberWitness weber_mono_failure();

/// (a) exhaustively: for all spans B <-p- E -s-> I with sizes <= bound (up to
/// relabeling of E) and all injective slice maps over B with totals <= bound
/// (up to iso), s_! p^* preserves injectivity.  (b) the subdivision witness.
/// Concludes that subdivision is not of the form s_! p^*.
Report mono_preservation_suite(int bound);

// ---- group actions -------------------------------------------------------

struct Group {
  FinSet elems;
  std::vector<std::vector<int>> table;  // table[g][h] = g * h
  int unit = 0;

  Group() = default;
  Group(FinSet e, std::vector<std::vector<int>> t);  // verifies the group laws

  int mult(int g, int h) const { return table[g][h]; }
  bool operator==(const Group&) const = default;
};

Group cyclic_group(int n);

struct GSet {
  Group group;
  FinSet carrier;
  FinMap action;  // (G x carrier) -> carrier, index g * |carrier| + x

  GSet() = default;
  GSet(Group g, FinSet c, FinMap a);  // verifies the action laws

  int act(int g, int x) const { return action(g * carrier.size + x); }
  bool operator==(const GSet&) const = default;
};

GSet trivial_gset(const Group& g, const FinSet& carrier);
GSet regular_representation(const Group& g);
GSet disjoint_union(const GSet& x, const GSet& y);

/// Fixed points of the action, as a trivially-acted G-set.
GSet gset_fixed_points(const GSet& x);

/// Orbits of the action (the left adjoint side), as a trivially-acted G-set.
GSet gset_orbits(const GSet& x);

std::int64_t equivariant_hom_count(const GSet& x, const GSet& y);
std::vector<FinMap> equivariant_homs(const GSet& x, const GSet& y);

/// For nonempty I without fixed points: |I x R(1)| = |I| > 0 yet |R(I)| = 0,
/// so no strength component I x R(1) -> R(I) can exist.  Reports a
/// precondition failure (positive control) when I has a fixed point.
Report strength_impossible(const GSet& i);

}  // namespace fibpoly
