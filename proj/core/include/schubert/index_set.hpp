#pragma once

#include <string>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// A subset of [1, r] with its ambient r, elements kept strictly
/// increasing.  These are the I, J, K of Horn triples.
class IndexSet {
public:
  /// Empty subset of [1, ambient].
  explicit IndexSet(int ambient);
  /// Validates: elements strictly increasing, each within [1, ambient].
  IndexSet(int ambient, std::vector<int> elements);

  static IndexSet full(int r);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  const std::vector<int>& elements() const { return elements_; }
  /// k-th smallest element, 1-based.
  int element(int k) const;

  bool operator==(const IndexSet&) const = default;
  bool operator<(const IndexSet& other) const;

  std::string to_string() const;

private:
  int ambient_ = 0;
  std::vector<int> elements_;
};

/// The bijection tau between d-subsets of [r] and partitions inside the
/// d x (r-d) rectangle: tau(I) = (i_d - d >= ... >= i_2 - 2 >= i_1 - 1).
Partition tau(const IndexSet& I);

/// Inverse of tau: the d-subset of [r] whose tau is p.  Requires p to fit
/// in d x (r-d).
IndexSet tau_inverse(const Partition& p, int d, int r);

/// I^v = { r+1-i : i in I }.  Satisfies
/// tau(dual_set(I)) == dual_partition(tau(I), |I|, r).
IndexSet dual_set(const IndexSet& I);

/// [r] \ I.
IndexSet complement_set(const IndexSet& I);

/// I_F = { i_f : f in F }.  F must have ambient |I|.  The ambient of I is
/// preserved.
IndexSet restrict_set(const IndexSet& I, const IndexSet& F);

/// I_F^+ = I union (I^c)_F.  F must have ambient r - |I|.
IndexSet extend_set(const IndexSet& I, const IndexSet& F);

/// Subsequence of p, zero-padded to length I.ambient(), at the positions
/// of I.  Still weakly decreasing.
Partition select(const Partition& p, const IndexSet& I);

/// All d-subsets of [1, r] in lexicographic order of their element
/// vectors.  This is the canonical subset order used for Horn tables.
std::vector<IndexSet> subsets_of_size(int r, int d);

} // namespace schubert
