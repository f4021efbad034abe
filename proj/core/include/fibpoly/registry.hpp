#pragma once

// Named box families for the CLI and the test suites.  Black boxes cannot
// cross a process boundary, so the CLI names a family plus parameters and the
// registry builds the functor in-process.  The broken-* families are honest
// negative controls: one is genuinely fibered but has no left adjoint, the
// other is not even fibered.

#include <json.hpp>

#include "fibpoly/fibspan.hpp"

namespace fibpoly {

/// spec: {"family": name, ...parameters}.  Families:
///   "identity"        {"base": FinSet}
///   "base-change"     {"a": FinMap}            (a : J -> I gives a* : E|I -> E|J)
///   "span"            {"span": Span}           (q_! p^*)
///   "left-part"       {"s": FinMap, "p": FinMap}
///   "polynomial"      {"polynomial": Polynomial}
///   "broken-nonlocal" {"base": FinSet}
///   "broken-dropw"    {"base": FinSet}
/// Throws structure_error on unknown family or ill-formed parameters.
BoxPtr make_box(const nlohmann::json& spec);

/// Sends a span to its support: the image of <p,q> in I x K.  A genuine
/// fibered functor (preserves cartesian arrows) that does not preserve
/// opcartesian arrows, hence has no fibered left adjoint.
BoxPtr make_support_box(FinSet base);

/// Behaves like the identity functor but corrupts the w-component of
/// morphism images; audit_fibered rejects it.
BoxPtr make_broken_w_box(FinSet base);

}  // namespace fibpoly
