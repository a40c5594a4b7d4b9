#pragma once

#include <string>
#include <string_view>

#include "schubert/index_set.hpp"
#include "schubert/partition.hpp"
#include "schubert/spectrum.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

/// Parses "4,2,1"; the empty string is the empty partition.  Throws
/// invalid_input on non-integers or a sequence that is not weakly
/// decreasing (trailing zeros are accepted and trimmed).
Partition parse_partition(std::string_view text);

/// Comma-separated weakly decreasing rationals, e.g. "3/2,1,0,-2".
/// Throws invalid_input on parse failure or non-monotone input.
Spectrum parse_spectrum(std::string_view text);

/// Comma-separated strictly increasing elements; "" is the empty set.
IndexSet parse_index_set(std::string_view text, int ambient);

/// Canonical text rendering of a tableau, stable across versions (golden
/// tests depend on it).  Grammar, one token row per line, columns
/// separated by " | ":
///
///   shape: <outer> / <inner> rows=<r>
///   R<i>: box tokens for columns 1..outer_i   ("." = inner box, integer = skew box label)
///   G<i>: gap tokens for columns 1..outer_i   ("." = not labelable, "-" = empty,
///                                              "a,b,c" = the gap's label set)
///
/// R and G lines alternate for i = 1..length(outer); both are omitted
/// when the outer shape is empty.
std::string render_tableau(const EdgeLabeledTableau& t);

} // namespace schubert
