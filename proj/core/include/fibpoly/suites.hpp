#pragma once

// Law suites shared by the CLI and the acceptance tests.  Each returns a
// Report whose JSON serialization is byte-stable for fixed parameters.

#include <cstdint>

#include "fibpoly/report.hpp"

namespace fibpoly {

/// For every a : J -> I with |I|, |J| <= base_bound and objects with totals
/// <= total_bound (up to iso): hom-set counts realize a_! -| a* -| a_* and
/// all four triangle identities hold on the nose.
Report adjunction_suite(int base_bound = 3, int total_bound = 4);

/// The comparison u_! b* => a* v_! is an isomorphism on every chosen pullback
/// square with all sets <= bound, and a commuting non-pullback control square
/// is rejected.
Report beck_chevalley_suite(int bound = 3);

/// Fibered-slice structure: chosen lifts are (op)cartesian, the fiber
/// identification round-trips, and every sampled morphism factors as a
/// vertical arrow followed by a cartesian lift.
Report bifibration_suite(int bound = 3, std::uint64_t seed = 0xf1b0f1b0ULL);

}  // namespace fibpoly
