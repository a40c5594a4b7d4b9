#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "schubert/tableau.hpp"

namespace schubert {

struct EnumerateOptions {
  /// When false, only box fillings are produced (the classical rule).
  bool allow_edge_labels = true;
  /// Column iteration bound; 0 means the outer shape's width.  Any value
  /// >= the width yields the identical sequence — coefficients do not
  /// depend on the ambient rectangle width once the shapes fit, and the
  /// stability tests exercise this knob.
  int width = 0;
};

/// Visits every semistandard lattice tableau of the given shape and
/// content with no label too high, each exactly once, in a canonical
/// deterministic order.  Returns early (and returns false) when the
/// visitor returns false.
///
/// Canonical order: depth-first assignment in reading-word order
/// (columns rightmost first; within a column top to bottom, a box before
/// the gap below it).  At a box the candidate labels are tried in
/// increasing order; at a gap, "no further label" is tried before each
/// candidate next label in increasing order.  Two runs yield identical
/// sequences.
bool enumerate_witnesses(const SkewShape& shape, const Partition& content,
                         const std::function<bool(const EdgeLabeledTableau&)>& visit,
                         const EnumerateOptions& options = {});

/// First tableau of the canonical order, if any.
std::optional<EdgeLabeledTableau> first_witness(const SkewShape& shape, const Partition& content,
                                               const EnumerateOptions& options = {});

/// All tableaux in canonical order.
std::vector<EdgeLabeledTableau> all_witnesses(const SkewShape& shape, const Partition& content,
                                              const EnumerateOptions& options = {});

} // namespace schubert
