#pragma once

// Plain slice categories E/I and, for each a : J -> I, the adjoint triple
//
//     dep_sum(a)  -|  base_change(a)  -|  dep_prod(a)
//
// together with units/counits, the Beck-Chevalley comparison, and hom-set
// enumeration.  Encodings are canonical: base change uses the chosen
// pullback, dependent products enumerate sections lexicographically with the
// last coordinate varying fastest.

#include <cstdint>
#include <vector>

#include "fibpoly/finset.hpp"

namespace fibpoly {

/// An object of E/I: a total set with a structure map to the base.
struct SliceObj {
  FinSet base;
  FinSet total;
  FinMap proj;  // total -> base

  SliceObj() = default;
  SliceObj(FinSet b, FinSet t, FinMap p);

  bool operator==(const SliceObj&) const = default;
};

/// A commuting triangle over a common base.
struct SliceMap {
  SliceObj src;
  SliceObj dst;
  FinMap map;  // src.total -> dst.total

  SliceMap() = default;
  SliceMap(SliceObj s, SliceObj d, FinMap m);

  bool operator==(const SliceMap&) const = default;
};

SliceMap identity_slice_map(const SliceObj& x);
SliceMap compose(const SliceMap& g, const SliceMap& f);

/// Elements of the fiber over base point i, in increasing order.
std::vector<int> fiber_elements(const SliceObj& x, int i);
std::vector<int> fiber_sizes(const SliceObj& x);

/// Fiberwise-cardinality equality; sound and complete for isomorphism over a
/// strict common base in slices of finite sets.
bool fiberwise_iso(const SliceObj& x, const SliceObj& y);

bool is_mono(const SliceMap& f);
bool is_iso(const SliceMap& f);

// ---- base change a* ------------------------------------------------------

struct BaseChangeData {
  SliceObj obj;  // over a.dom
  FinMap back;   // obj.total -> X.total (the first pullback projection)
  Pullback pb;   // of (X.proj, a); obj.total = pb.carrier, elements (x, j)

  int index(int x, int j) const { return pb.index(x, j); }
};

BaseChangeData base_change(const FinMap& a, const SliceObj& x);
SliceMap base_change_map(const FinMap& a, const SliceMap& f);

// ---- dependent sum a_! ---------------------------------------------------

SliceObj dep_sum(const FinMap& a, const SliceObj& x);
SliceMap dep_sum_map(const FinMap& a, const SliceMap& f);

// ---- dependent product a_* -----------------------------------------------

struct DepProdData {
  SliceObj obj;  // over a.cod; fiber over i = sections of x over a^-1(i)

  // Decoding layout.  fiber over base point i occupies indices
  // [offset[i], offset[i+1]); a section is a tuple indexed by fiber_dom[i]
  // (the j with a(j)=i, increasing), each entry an element of x over j,
  // enumerated lexicographically with the last coordinate fastest.
  std::vector<int> offset;                    // size |cod|+1
  std::vector<std::vector<int>> fiber_dom;    // per i
  std::vector<std::vector<int>> fiber_elems;  // per j in a.dom: x-elements over j

  int base_of(int elem) const { return obj.proj(elem); }
  /// The section encoded by `elem`, as x-total elements aligned with
  /// fiber_dom[base_of(elem)].
  std::vector<int> section(int elem) const;
  /// Inverse of `section` at base point i.
  int encode(int i, const std::vector<int>& sec) const;
};

DepProdData dep_prod(const FinMap& a, const SliceObj& x);
SliceMap dep_prod_map(const FinMap& a, const SliceMap& f);

// ---- units and counits ---------------------------------------------------

/// eta_Y : Y -> a* a_! Y   (unit of a_! -| a*)
SliceMap sum_unit(const FinMap& a, const SliceObj& y);
/// eps_X : a_! a* X -> X   (counit of a_! -| a*)
SliceMap sum_counit(const FinMap& a, const SliceObj& x);
/// eta_X : X -> a_* a* X   (unit of a* -| a_*)
SliceMap prod_unit(const FinMap& a, const SliceObj& x);
/// eps_Y : a* a_* Y -> Y   (counit of a* -| a_*)
SliceMap prod_counit(const FinMap& a, const SliceObj& y);

// ---- hom-sets ------------------------------------------------------------

std::int64_t slice_hom_count(const SliceObj& x, const SliceObj& y);
std::vector<SliceMap> slice_homs(const SliceObj& x, const SliceObj& y);

// ---- Beck-Chevalley ------------------------------------------------------

/// A commuting square
///        b
///    P -----> X
///    |u       |v
///    J -----> I
///        a
/// claimed to be a pullback.
struct PullbackSquare {
  FinMap u, b, v, a;
};

bool commutes(const PullbackSquare& sq);
bool is_pullback_square(const PullbackSquare& sq);

struct BeckChevalleyResult {
  SliceMap cmp;  // u_! b* Y -> a* v_! Y
  bool iso;
};

/// The canonical comparison u_! b* Y -> a* v_! Y for Y over cod(b).
/// Throws structure_error unless the square is a genuine pullback.
BeckChevalleyResult beck_chevalley(const PullbackSquare& sq, const SliceObj& y);

}  // namespace fibpoly
