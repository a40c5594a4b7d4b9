#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace schubert {

/// An integer partition: a weakly decreasing sequence of nonnegative
/// integers, kept in canonical form (trailing zeros trimmed).  Two
/// partitions are equal iff their canonical forms are.
///
/// A partition carries no intrinsic ambient rectangle; operations that
/// need one (select, tau_inverse, dual_partition) take it explicitly and
/// pad with zeros.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Validates weak decrease and nonnegativity, trims trailing zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda|, the number of boxes.
  long long size() const;
  /// i-th part, 1-based; 0 for i beyond the length.
  int part(int i) const;
  /// Column length lambda'_j (conjugate part), 1-based; 0 beyond lambda_1.
  int col_length(int j) const;
  /// Largest part; 0 for the empty partition.
  int width() const { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const Partition&) const = default;
  /// Lexicographic order on the canonical part vectors; total, used for
  /// map keys and for "lexicographically greatest" tie-breaking.
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  /// Comma-separated parts, "" for the empty partition.
  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// Containment of Young diagrams: inner_i <= outer_i for every i.
bool contains(const Partition& inner, const Partition& outer);

/// Every part multiplied by n (n >= 1).
Partition stretch(const Partition& p, int n);

/// Multiset union of the parts of the two partitions, sorted decreasingly.
Partition phi(const Partition& a, const Partition& b);

/// Complement of p in the d x (r-d) rectangle, rotated by 180 degrees:
/// result_i = (r-d) - p_{d+1-i}.  Requires p to fit in the rectangle.
/// An involution: dual_partition(dual_partition(p, d, r), d, r) == p.
Partition dual_partition(const Partition& p, int d, int r);

/// True iff p fits in a rows x cols rectangle.
bool fits_in_box(const Partition& p, int rows, int cols);

/// All partitions inside a rows x cols rectangle, sorted by (size, lex).
/// Deterministic; used by the verification scans.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// All sub-diagrams mu of outer (mu contained in outer), sorted by
/// (size, lex).
std::vector<Partition> sub_partitions(const Partition& outer);

/// All mu contained in outer with |mu| == size, lexicographically
/// descending.  Used by the Horn containment search.
std::vector<Partition> sub_partitions_of_size(const Partition& outer, long long size);

} // namespace schubert
