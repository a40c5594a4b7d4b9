#pragma once

#include <string>
#include <vector>

#include "schubert/index_set.hpp"
#include "schubert/ints.hpp"
#include "schubert/partition.hpp"

namespace schubert {

/// A weakly decreasing vector of exact rationals of fixed length r
/// (zeros are significant).  Holds eigenvalue vectors for the
/// feasibility deciders.
class Spectrum {
public:
  Spectrum() = default;
  /// Validates weak decrease.
  explicit Spectrum(std::vector<Rational> entries);
  /// Zero-pads the parts of p to the given length (length >= number of
  /// nonzero parts).
  static Spectrum from_partition(const Partition& p, int length);

  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  /// k-th entry, 1-based.
  const Rational& entry(int k) const;
  Rational sum() const;

  bool operator==(const Spectrum&) const = default;

  std::string to_string() const;

private:
  std::vector<Rational> entries_;
};

/// Subsequence at the positions of I; I.ambient() must equal the length.
Spectrum select(const Spectrum& s, const IndexSet& I);

/// Sum of the entries of s at the positions of I.
Rational partial_sum(const Spectrum& s, const IndexSet& I);

} // namespace schubert
