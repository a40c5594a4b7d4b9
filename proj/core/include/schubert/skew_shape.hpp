#pragma once

#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// A labelable horizontal edge, identified by the box directly above it:
/// gap (i, j) is the lower edge of box (i, j) in matrix coordinates.
/// Row 0 positions (top edges of columns right of the inner shape) are
/// excluded: any label there would automatically be too high.
struct GapPosition {
  int row = 0;
  int col = 0;
  bool operator==(const GapPosition&) const = default;
  bool operator<(const GapPosition& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

/// A skew shape outer/inner together with the ambient row count r used
/// for distance computations (r >= length(outer)).
class SkewShape {
public:
  /// Validates inner contained in outer and rows >= length(outer);
  /// rows == 0 means "use length(outer)".
  SkewShape(Partition outer, Partition inner, int rows = 0);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return rows_; }

  /// Number of skew boxes |outer| - |inner|.
  long long box_count() const { return outer_.size() - inner_.size(); }

  bool in_outer(int i, int j) const;
  bool in_inner(int i, int j) const;
  /// Box of the skew shape outer/inner.
  bool is_skew_box(int i, int j) const { return in_outer(i, j) && !in_inner(i, j); }

  /// A gap (i, j) can carry labels iff inner'_j <= i <= outer'_j with
  /// i >= 1: the edge lies on the lower edge of a skew box or on the
  /// southern border of the inner shape.
  bool gap_labelable(GapPosition g) const;

  /// Exactly the labelable gap positions, sorted by (col, row).
  std::vector<GapPosition> legal_gaps() const;

  bool operator==(const SkewShape&) const = default;

private:
  Partition outer_;
  Partition inner_;
  int rows_ = 0;
};

} // namespace schubert
