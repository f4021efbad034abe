#pragma once

// Polynomial data I <-s- E -p-> B -t-> J and its evaluation, both as the
// composite t_! o p_* o s^* on plain slices and as a fibered functor box.
// The direct Sigma/Pi cardinality formula is kept as a separate evaluation
// path; the two are cross-validated in tests, never merged.

#include <cstdint>
#include <optional>

#include "fibpoly/composed_box.hpp"

namespace fibpoly {

struct Polynomial {
  FinSet I, E, B, J;
  FinMap s;  // E -> I
  FinMap p;  // E -> B
  FinMap t;  // B -> J

  Polynomial() = default;
  Polynomial(FinSet i, FinSet e, FinSet b, FinSet j, FinMap s_, FinMap p_, FinMap t_);

  bool operator==(const Polynomial&) const = default;

  static Polynomial identity_poly(const FinSet& i);
};

/// t_! p_* s^* X, by composing the three slice functors.
SliceObj eval_plain(const Polynomial& poly, const SliceObj& x);
SliceMap eval_plain_map(const Polynomial& poly, const SliceMap& f);

/// Direct formula: fiber over j has size  Sum_{b in t^-1(j)} Prod_{e in p^-1(b)}
/// x_sizes[s(e)].  Independent of the composite path above.
std::vector<std::int64_t> eval_fiber_sizes_formula(const Polynomial& poly,
                                                   const std::vector<std::int64_t>& x_sizes);

/// The fibered polynomial functor E|I -> E|J whose K-fiber is
/// (t x id_K)_! (p x id_K)_* (s x id_K)^*; its 1-fiber is eval_plain.
ComposedBox eval_fibered(const Polynomial& poly);

/// The fibered left adjoint s_! p^* : E|B -> E|I of the middle-plus-left part.
ComposedBox left_part_box(const FinMap& s, const FinMap& p);

/// The factorization part p_* s^* : E|I -> E|B (the canonical R-bar of a
/// polynomial functor).
ComposedBox middle_part_box(const FinMap& s, const FinMap& p);

/// Isomorphism of bridges: bijections on E and B commuting with s, p, t.
struct BridgeWitness {
  FinMap on_e;  // P.E -> Q.E
  FinMap on_b;  // P.B -> Q.B
};

std::optional<BridgeWitness> bridge_equivalent(const Polynomial& a, const Polynomial& b);

}  // namespace fibpoly
