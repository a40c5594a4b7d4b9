#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "schubert/tpolynomial.hpp"

namespace schubert {

/// Polynomial JSON encoding:
///   {"terms":[{"coeff":"<integer as string>","exps":{"<var index>":<exp>,...}},...]}
/// with terms sorted by graded-lexicographic order of exponent vectors.
/// When a y-decomposition is supplied, a second field "y_terms" carries
/// it in the same format over y-indices.
std::string polynomial_to_json(const TPolynomial& p,
                               const std::optional<TPolynomial>& y_decomposition = std::nullopt);

/// Inverse of polynomial_to_json (ignores "y_terms").  Throws
/// invalid_input on malformed documents.
TPolynomial polynomial_from_json(std::string_view json_text);

} // namespace schubert
