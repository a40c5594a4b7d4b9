#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/index_set.hpp"
#include "schubert/ints.hpp"
#include "schubert/partition.hpp"
#include "schubert/spectrum.hpp"

namespace schubert {

enum class TripleFamily {
  lr_positive, ///< c_{tau(I),tau(J)}^{tau(K)} != 0
  sdr,         ///< sigma_I sigma_J sigma_{K^v} != 0 in H*(Gr_d(C^r))
};

std::string to_string(TripleFamily family);

struct HornTriple {
  IndexSet I;
  IndexSet J;
  IndexSet K;
  TripleFamily kind = TripleFamily::lr_positive;
  bool operator==(const HornTriple&) const = default;
};

/// All triples (I, J, K) of d-subsets of [r] with
/// lr_coef(tau(I), tau(J), tau(K)) != 0, in canonical order (lexicographic
/// in I, then J, then K).  Memoized per (d, r); the computation bottoms
/// out in tableau enumeration, so there is no circular dependency on the
/// Horn recursion itself.  Requires 1 <= d < r.
const std::vector<HornTriple>& horn_triples(int d, int r);

/// The larger family S_d^r: triples whose Schubert triple product is
/// nonzero in ordinary cohomology.  Memoized per (d, r).
const std::vector<HornTriple>& sdr_triples(int d, int r);

/// Triple-product nonvanishing via the containment characterization:
/// there is gamma~ inside tau(K) with |gamma~| = |tau(I)| + |tau(J)| and
/// lr_coef(tau(I), tau(J), gamma~) != 0.
bool in_sdr(const IndexSet& I, const IndexSet& J, const IndexSet& K);

/// Some gamma~ inside gamma with |gamma~| = |alpha| + |beta| and
/// lr_coef(alpha, beta, gamma~) != 0; the lexicographically greatest such
/// when several exist.  Shapes must fit in d x (r-d).
std::optional<Partition> find_contained_target(const Partition& alpha, const Partition& beta,
                                               const Partition& gamma, int d, int r);

struct ViolationCertificate {
  HornTriple triple;
  Rational sum_x; ///< sum of x over I
  Rational sum_y; ///< sum of y over J
  Rational sum_z; ///< sum of z over K
};

enum class FailureKind { none, trace, inequality };

struct FeasibilityReport {
  bool feasible = false;
  FailureKind failure = FailureKind::none;
  std::optional<ViolationCertificate> violated;
  long long checked_count = 0; ///< inequalities tested
};

/// Evaluates sum_I x + sum_J y >= sum_K z for every triple of the chosen
/// family, for every d < r, in deterministic scan order (increasing d,
/// canonical triple order); reports the first violation.
FeasibilityReport check_horn(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                             TripleFamily family = TripleFamily::lr_positive);

/// The A + B = C eigenvalue problem: feasible iff the traces balance
/// exactly and every Horn inequality holds.
FeasibilityReport classical_feasible(const Spectrum& x, const Spectrum& y, const Spectrum& z);

/// The majorized problem A + B >= C: feasible iff
/// sum x + sum y >= sum z and every Horn inequality holds.  No
/// containment condition is imposed; this decides the eigenvalue
/// problem, not coefficient nonvanishing.
FeasibilityReport majorized_feasible(const Spectrum& x, const Spectrum& y, const Spectrum& z);

/// Nonvanishing of the equivariant coefficient decided purely by
/// inequalities: |lambda| + |mu| >= |nu|, both contained in nu, and the
/// Horn inequalities on the zero-padded triple.  Agrees with eq_nonzero
/// for all partition inputs.
bool eq_nonzero_via_horn(const Partition& lambda, const Partition& mu, const Partition& nu);

struct TripleTable {
  int d = 0;
  int r = 0;
  TripleFamily family = TripleFamily::lr_positive;
  std::vector<HornTriple> triples;
};

/// Canonical text serialization of a triple table: one line per triple
/// "d r | I | J | K | kind" with comma-separated sets, preceded by a
/// checksum header.  Tables are regenerable; the checksum guards loads.
std::string serialize_triple_table(int d, int r, TripleFamily family);
void save_triple_table(const std::string& path, int d, int r, TripleFamily family);
/// Parses and verifies the checksum; throws invalid_input on mismatch or
/// malformed content.
TripleTable load_triple_table(const std::string& path);

} // namespace schubert
