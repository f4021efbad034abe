#pragma once

// Finite sets {0..n-1} with optional display labels, total functions between
// them, and the chosen finite-limit structure (terminal, products, pullbacks)
// of the ambient category.  Every construction here returns a canonical
// encoding so that downstream computations are deterministic.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibpoly {

/// Structural precondition violation (domain/codomain mismatch etc).
struct structure_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FinSet {
  int size = 0;
  // When present: pairwise distinct, exactly `size` entries.  Display only.
  std::optional<std::vector<std::string>> labels;

  FinSet() = default;
  explicit FinSet(int n) : size(n) {
    if (n < 0) throw structure_error("FinSet: negative size");
  }
  FinSet(int n, std::vector<std::string> names);

  bool operator==(const FinSet&) const = default;
};

std::string describe(const FinSet& s);

/// A total function between finite sets, as a lookup table of codomain indices.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::vector<int> t);

  int operator()(int i) const { return table[i]; }
  bool operator==(const FinMap&) const = default;
};

std::string describe(const FinMap& f);

FinMap identity(const FinSet& a);
FinMap compose(const FinMap& g, const FinMap& f);  // g after f

FinSet terminal();
FinMap unique_to_terminal(const FinSet& a);
FinMap constant_map(const FinSet& a, const FinSet& b, int value);

bool is_mono(const FinMap& f);
bool is_epi(const FinMap& f);
bool is_iso(const FinMap& f);
FinMap inverse(const FinMap& f);  // requires is_iso

/// Binary product A x B, elements in lexicographic first-factor-major order:
/// (a,b) sits at index a*|B| + b.
struct Product {
  FinSet carrier;
  FinMap pr1;  // carrier -> A
  FinMap pr2;  // carrier -> B

  int index(int a, int b) const { return a * pr2.cod.size + b; }
};

Product product(const FinSet& a, const FinSet& b);

/// Pairing <f,g> : X -> A x B for f : X -> A and g : X -> B.
FinMap pair_into_product(const Product& p, const FinMap& f, const FinMap& g);

/// f x g : A x B -> A' x B'.
FinMap product_map(const FinMap& f, const FinMap& g);

/// Chosen pullback of f : A -> C and g : B -> C.  Carrier enumerates the
/// pairs (a,b) with f(a) = g(b) in lexicographic a-major order.
struct Pullback {
  FinSet carrier;
  FinMap pr1;  // carrier -> A
  FinMap pr2;  // carrier -> B
  std::vector<std::pair<int, int>> elems;

  /// Index of the pair (a,b) in the carrier, or -1 if f(a) != g(b).
  int index(int a, int b) const;

 private:
  friend Pullback pullback(const FinMap&, const FinMap&);
  std::vector<int> lookup_;  // a*|B|+b -> carrier index or -1
};

Pullback pullback(const FinMap& f, const FinMap& g);

/// Every table of maps A -> B in lexicographic order.  Exponential in |A|;
/// intended for desk-scale exhaustive checks only.
std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b);

/// Nondecreasing tables of the given length with entries < cod, in
/// lexicographic order: one representative per relabeling class of the
/// domain.  Used to enumerate objects up to isomorphism.
std::vector<std::vector<int>> nondecreasing_tables(int length, int cod);

}  // namespace fibpoly
