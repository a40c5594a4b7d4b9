#pragma once

#include <map>
#include <random>
#include <vector>

#include "schubert/ints.hpp"
#include "schubert/partition.hpp"
#include "schubert/tpolynomial.hpp"

namespace schubert {

/// Evaluation points for the factorial Schur oracle: strictly increasing
/// rationals a_1 < ... < a_n.  Distinctness guarantees the nonvanishing
/// of every pivot in the triangular solve.
class EvaluationGrid {
public:
  EvaluationGrid(int r, int n, std::vector<Rational> a_values);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::vector<Rational>& a() const { return a_; }
  /// a_k, 1-based.
  const Rational& a(int k) const;

private:
  int r_ = 0;
  int n_ = 0;
  std::vector<Rational> a_;
};

/// The substitution identifying a-indices with t-indices.  Calibrated by
/// cross_check (see docs/weight-convention.md); `negate` (a_i = -t_i,
/// i.e. t_k evaluates to -a_k) is the map that agrees with the tableau
/// rule, independently of n.
enum class VariableMap { negate, reverse, identity, reverse_negate };

/// The frozen calibration result.
inline constexpr VariableMap kCalibratedVariableMap = VariableMap::negate;

/// Value substituted for t_k under the map.
Rational map_t_value(const EvaluationGrid& grid, int t_index, VariableMap map);

/// Factorial Schur polynomial s_lambda(x | a): the sum over semistandard
/// fillings of lambda with entries <= r of the products
/// (x_entry - a_{entry + col - row}).  Exact; 1 for the empty shape.
/// Requires length(lambda) <= r and all needed a-indices within [1, n]
/// (enlarge n otherwise).
Rational factorial_schur_value(const Partition& lambda, const std::vector<Rational>& x,
                               const EvaluationGrid& grid);

/// The evaluation point x(nu) = (a_{nu_i + r + 1 - i})_{i=1..r}.
std::vector<Rational> grid_point(const Partition& nu, const EvaluationGrid& grid);

/// Structure constants of the factorial Schur basis by triangular solve:
/// s_lambda * s_mu = sum_nu C^nu s_nu, evaluated at the points x(nu) in
/// increasing order of |nu|, peeling previously determined terms.  The
/// report covers every nu with at most r rows and |nu| <= |lambda| + |mu|
/// that fits the grid (nu_1 <= n - r); the top-degree layer
/// |nu| = |lambda| + |mu| falls back to the classical Schur oracle when
/// it does not fit, so those integer entries are always present.  Zero
/// values are omitted.  Requires lambda, mu inside r x (n-r).
std::map<Partition, Rational> oracle_structure_constants(const Partition& lambda,
                                                         const Partition& mu,
                                                         const EvaluationGrid& grid);

/// Deterministic pseudo-random grid: n distinct small rationals, sorted
/// increasing.
EvaluationGrid random_grid(int r, int n, std::mt19937_64& rng);

struct CrossCheckFailure {
  Partition nu;
  int trial = 0;
  std::vector<Rational> a_values;
  Rational oracle_value;
  Rational rule_value;
};

struct CrossCheckReport {
  bool pass = false;
  long long compared = 0;
  unsigned long long seed = 0;
  std::vector<CrossCheckFailure> failures;
};

inline constexpr unsigned long long kDefaultOracleSeed = 20130402ull;

/// For `trials` seeded random grids, compares oracle_structure_constants
/// against the evaluation of eq_coef under the variable map, for every
/// nu the oracle reports (and checks vanishing for the reported-zero
/// ones).  Passes iff every comparison agrees exactly.
CrossCheckReport cross_check(const Partition& lambda, const Partition& mu, int r, int n,
                             int trials, unsigned long long seed = kDefaultOracleSeed,
                             VariableMap map = kCalibratedVariableMap);

/// Classical oracle for lr_coef, fully independent of the tableau path:
/// Schur polynomials in r variables via Jacobi-Trudi determinants in the
/// complete homogeneous basis, product expansion, and coefficient
/// extraction by peeling lexicographically leading monomials.  Requires
/// length(lambda), length(mu), length(nu) <= r.
Int classical_oracle_lr(const Partition& lambda, const Partition& mu, const Partition& nu,
                        int r);

} // namespace schubert
