#pragma once

#include <string>
#include <vector>

#include "schubert/oracle.hpp"
#include "schubert/partition.hpp"

namespace schubert {

/// Result of one exhaustive verification scan.  A violation is a theorem
/// failure and should never appear; the suites exist to demonstrate that
/// at desk scale.
struct VerifySummary {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// Saturation: for every nu inside the box, every lambda, mu inside nu
/// with |lambda| + |mu| >= |nu|, and every N in `stretches`,
/// eq_nonzero(N lambda, N mu, N nu) must match the N = 1 verdict.
VerifySummary verify_saturation(int box_rows, int box_cols, const std::vector<int>& stretches);

/// Equivariant Horn equivalence: for all partitions with at most `rows`
/// rows and parts <= max_part satisfying the degree and containment
/// conditions, eq_nonzero must agree with eq_nonzero_via_horn.
VerifySummary verify_horn_equivalence(int rows, int max_part);

/// Classical Horn: for all partitions with at most `rows` rows and parts
/// <= max_part with |lambda| + |mu| = |nu|, lr_coef != 0 iff
/// classical_feasible on the zero-padded triple.
VerifySummary verify_classical_horn(int rows, int max_part);

/// Oracle agreement: cross_check for every (lambda, mu) inside the
/// box_rows x box_cols rectangle, with r = box_rows and
/// n = box_rows + box_cols, over `trials` seeded grids.
VerifySummary verify_oracle(int box_rows, int box_cols, int trials,
                            unsigned long long seed = kDefaultOracleSeed);

/// Oracle agreement on a deterministic sample of `count` triples
/// (lambda, mu, nu) inside the box, one grid per pair.
VerifySummary verify_oracle_sampled(int box_rows, int box_cols, int count,
                                    unsigned long long seed = kDefaultOracleSeed);

} // namespace schubert
