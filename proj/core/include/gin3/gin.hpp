#pragma once

#include <map>
#include <vector>

#include "gin3/hilbert.hpp"
#include "gin3/ideal.hpp"
#include "gin3/monomial.hpp"

namespace gin3 {

enum class GinMethod { greedy, closed_form };

/// Which transcription of the closed-form generator templates to expand.
/// `raw` follows the catalogued formulas verbatim; `corrected` applies the
/// corrections from the committed catalogue (each one forced by the greedy
/// construction and the strong-stability requirement).
enum class TemplateForm { raw, corrected };

struct GinResult {
  DegreeTriple degrees;
  CaseTag case_tag;
  GinMethod method;
  MonomialIdeal ideal;
  /// Minimal generators grouped by degree: exactly the monomials added
  /// beyond the shadow of the previous slice.
  std::map<int, std::vector<Monomial>> new_by_degree;

  std::size_t mu() const { return ideal.generator_count(); }
};

/// The unique almost-revlex monomial ideal whose slice sizes follow the
/// given counts (counts[k] = |J_k|): degree by degree, the slice is the
/// shadow of the previous one plus the revlex-greatest missing monomials.
/// Throws std::logic_error when a shadow already exceeds its target count.
MonomialIdeal almost_revlex_from_counts(const std::vector<long long>& counts);

/// Predicted generic initial ideal via the greedy construction driven by
/// the complete-intersection Hilbert series.
GinResult construct_gin_greedy(const DegreeTriple& degrees);

/// Predicted generic initial ideal by expanding the case-appropriate
/// generator template.
GinResult construct_gin_closed_form(const DegreeTriple& degrees,
                                    TemplateForm form = TemplateForm::corrected);

/// Number of minimal generators according to the case- and parity-
/// appropriate closed-form count.
long long generator_count(const DegreeTriple& degrees);

/// mu(J) <= d1*(d2+1) + 1.
bool mu_bound_check(const DegreeTriple& degrees, const MonomialIdeal& J);

}  // namespace gin3
