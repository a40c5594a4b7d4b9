#pragma once

#include <optional>
#include <vector>

#include "schubert/enumerate.hpp"
#include "schubert/ints.hpp"
#include "schubert/partition.hpp"
#include "schubert/tableau.hpp"
#include "schubert/tpolynomial.hpp"

namespace schubert {

/// Classical Littlewood-Richardson coefficient: the number of lattice
/// semistandard fillings of nu/lambda of content mu (no edge labels).
/// Zero when |lambda| + |mu| != |nu| or the shapes do not nest.
Int lr_coef(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Short-circuiting nonvanishing test for lr_coef.
bool lr_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Equivariant structure coefficient by the edge-labeled tableau rule:
/// the sum of weight(T) over every witness of shape nu/lambda and
/// content mu.  `rows` is the ambient row count the weights live in
/// (>= length(nu)); 0 means length(nu).  Returns the zero polynomial in
/// every vanishing case (lambda or mu not contained in nu, or
/// |nu| > |lambda| + |mu|).  Nonzero results are homogeneous of degree
/// |lambda| + |mu| - |nu|; degree 0 collapses to lr_coef.
TPolynomial eq_coef(const Partition& lambda, const Partition& mu, const Partition& nu,
                    int rows = 0);

/// Like eq_coef but with an explicit enumeration width (ambient
/// rectangle columns).  The result never depends on it; exposed for the
/// stability tests.
TPolynomial eq_coef_with_width(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int rows, int width);

struct WitnessReport {
  bool nonzero = false;
  std::optional<EdgeLabeledTableau> witness;
  std::optional<TPolynomial> witness_weight;
};

/// Stops at the first witness.  The witness, when present, is
/// semistandard, lattice and has no label too high.
WitnessReport eq_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu,
                         int rows = 0);

/// Rewrites a translation-invariant polynomial in the variables
/// y_i = t_i - t_{i+1} via the substitution t_1 = 0,
/// t_i = -(y_1 + ... + y_{i-1}); the result is a polynomial in the y's
/// (variable index i means y_i).  Throws invalid_input when the input is
/// not invariant under t_i -> t_i + c (checked by an exact round-trip).
TPolynomial graham_decompose(const TPolynomial& p);

struct SaturationEntry {
  int factor = 0;
  bool nonzero = false;
};

struct SaturationReport {
  bool base_nonzero = false;          ///< verdict at N = 1
  std::vector<SaturationEntry> entries;
  std::vector<int> flagged;           ///< factors whose verdict differs from N = 1
};

/// Records eq_nonzero(N*lambda, N*mu, N*nu) for each factor, flagging any
/// factor whose verdict differs from the N = 1 baseline.  A flag is a
/// saturation failure and must never occur.
SaturationReport saturation_scan(const Partition& lambda, const Partition& mu,
                                 const Partition& nu, const std::vector<int>& factors);

} // namespace schubert
