#pragma once

#include <utility>
#include <vector>

#include "schubert/tableau.hpp"

namespace schubert {

/// Adds a single edge label `letter` to a witnessing tableau of content
/// mu, in the leftmost column that has no `letter` and where the forced
/// placement is not too high.  The result witnesses content mu plus one
/// box in row `letter`.
///
/// Preconditions (checked, invalid_input): t is a witness; mu plus a box
/// in row `letter` is again a partition and is contained in the outer
/// shape.  Under these, a column always exists; failure to find one is an
/// internal_error, not a user error.
EdgeLabeledTableau add_edge_label(const EdgeLabeledTableau& t, int letter);

/// One box-label replacement performed while repairing the word after an
/// edge label removal.
struct CascadeStep {
  int position = 0; ///< index into the post-removal word, 0-based
  int from = 0;     ///< letter replaced (always a box label)
  int to = 0;       ///< the replacement, from - 1
  EdgeLabeledTableau state; ///< tableau after this replacement
};

struct RemovalTrace {
  int removed_letter = 0;
  GapPosition removed_from;
  int removed_position = 0; ///< index into the original reading word
  EdgeLabeledTableau after_removal; ///< before any repair
  std::vector<CascadeStep> steps;
  EdgeLabeledTableau result;
  Partition content; ///< content of result
};

/// Removes the last edge label in reading-word order and repairs the
/// lattice property: scanning left to right with a current letter l
/// (initially the removed letter), the first position where the count of
/// (l+1) exceeds the count of l is replaced by l — that position is
/// always a box label — and l advances; repeat to the end of the word.
/// The result is again a witness with content one box smaller.
///
/// Requires a witnessing tableau with at least one edge label
/// (invalid_input otherwise).
RemovalTrace remove_last_edge_label_traced(const EdgeLabeledTableau& t);

std::pair<EdgeLabeledTableau, Partition> remove_last_edge_label(const EdgeLabeledTableau& t);

/// Applies remove_last_edge_label until the content has the given size.
/// Requires box_count <= target_size <= |content(t)|.  At
/// target_size == box_count the result carries no edge labels and
/// witnesses a classical coefficient.
EdgeLabeledTableau reduce_content(const EdgeLabeledTableau& t, long long target_size);

} // namespace schubert
