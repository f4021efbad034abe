#pragma once

// End-to-end extraction: factor a fibered functor R : E|I -> E|J through its
// value at the fiberwise terminal object, search (or accept) the fibered left
// adjoint of the factor R-bar, and read off the representing span/polynomial.
// Everything is bounded and certified within declared bounds, never proved.

#include <optional>

#include "fibpoly/mainlemma.hpp"
#include "fibpoly/poly.hpp"

namespace fibpoly {

// ---- factorization through the value at the terminal object --------------

struct Factorization {
  FinSet b;     // apex of R(1_I)
  FinMap t;     // B -> J, left leg of R(1_I)
  BoxPtr rbar;  // E|I -> E|B with t_! o rbar = R (extensionally)
};

/// R(1_I) = (J <-t- B -> 1); rbar sends S to R(S) with its canonical map to
/// R(1_I) as the new left leg.  Shares ownership of r.
Factorization factor(BoxPtr r);

// ---- bounded search for the left adjoint's value at delta ----------------

struct SearchOptions {
  int size_bound = 9;    // max candidate total |W|
  int test_bound = 3;    // hom-count certification: all Z with total <= this
  int factor_bound = 3;  // full unique-factorization check: Z up to this
};

/// A certified candidate for L(delta_B), L the fibered left adjoint of rbar.
struct AdjointCertificate {
  SliceObj w;    // over I x B
  SpanMap unit;  // delta_B -> rbar(span of w), vertical
  SearchOptions bounds;
};

struct AdjointSearchResult {
  std::optional<AdjointCertificate> cert;
  Report report;
};

/// Enumerates candidates W over I x B up to isomorphism, by increasing total
/// then lexicographic structure map, and units in enumeration order; the
/// first candidate whose unit satisfies the universal property against every
/// test object within bounds wins.  `skip` ignores that many certified
/// candidates first (used to resume after a downstream verification failure).
AdjointSearchResult adjoint_search(const FiberedFunctorBox& rbar, const SearchOptions& opts = {},
                                   int skip = 0);

/// Independent re-verification of an emitted certificate.
Report recheck_certificate(const FiberedFunctorBox& rbar, const AdjointCertificate& cert);

// ---- the main round trip -------------------------------------------------

struct ExtractBounds {
  int span_bound = 3;  // verification: all test spans with sizes <= this, up to iso
  SearchOptions search;
  AuditBudget audit;
};

struct ExtractPolynomialResult {
  std::optional<Polynomial> poly;
  Report report;
};

/// Extracts the polynomial representing r: t from the factorization, s and p
/// from L(delta_B), with L either supplied or searched.  The returned report
/// certifies that evaluating the polynomial agrees with r (fiberwise
/// cardinalities) on every test span within bounds; on disagreement the
/// search resumes with the next certified candidate.
ExtractPolynomialResult extract_polynomial(BoxPtr r, const FiberedFunctorBox* l = nullptr,
                                           const ExtractBounds& bounds = {});

// ---- converse and generic adjunction checking ----------------------------

/// Number of vertical span morphisms a -> x (same left and fiber base).
std::int64_t vertical_hom_count(const Span& a, const Span& x);

/// Checks |Vert(L(Z), X)| = |Vert(Z, R(X))| for all Z, X up to iso with
/// totals <= max_size, over fiber bases of size 0..2.
Report fibered_adjunction_check(const FiberedFunctorBox& l, const FiberedFunctorBox& r,
                                int max_size = 3);

/// Every polynomial's factor p_* s^* has fibered left adjoint s_! p^*.
Report converse_check(const Polynomial& p, int max_size = 3);

/// Object-level agreement of two boxes on every span up to iso within bound
/// (fiberwise cardinalities over the common codomain base).
Report boxes_agree_on_spans(const FiberedFunctorBox& a, const FiberedFunctorBox& b, int bound);

}  // namespace fibpoly
