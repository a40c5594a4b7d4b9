#include "schubert/coefficients.hpp"

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool trivially_zero(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return !contains(lambda, nu) || !contains(mu, nu) ||
         nu.size() > lambda.size() + mu.size();
}

} // namespace

Int lr_coef(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (trivially_zero(lambda, mu, nu)) return 0;
  Int count = 0;
  enumerate_witnesses(
      SkewShape(nu, lambda), mu,
      [&](const EdgeLabeledTableau&) {
        ++count;
        return true;
      },
      {.allow_edge_labels = false});
  return count;
}

bool lr_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return false;
  if (trivially_zero(lambda, mu, nu)) return false;
  return first_witness(SkewShape(nu, lambda), mu, {.allow_edge_labels = false}).has_value();
}

TPolynomial eq_coef_with_width(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int rows, int width) {
  if (rows == 0) rows = nu.length();
  if (rows < nu.length())
    throw invalid_input("eq_coef rows must be at least length(nu)");
  if (trivially_zero(lambda, mu, nu)) return {};
  TPolynomial total;
  enumerate_witnesses(
      SkewShape(nu, lambda, rows), mu,
      [&](const EdgeLabeledTableau& t) {
        total += weight(t);
        return true;
      },
      {.width = width});
  return total;
}

TPolynomial eq_coef(const Partition& lambda, const Partition& mu, const Partition& nu,
                    int rows) {
  return eq_coef_with_width(lambda, mu, nu, rows, 0);
}

WitnessReport eq_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu,
                         int rows) {
  if (rows == 0) rows = nu.length();
  if (rows < nu.length())
    throw invalid_input("eq_nonzero rows must be at least length(nu)");
  WitnessReport report;
  if (trivially_zero(lambda, mu, nu)) return report;
  auto found = first_witness(SkewShape(nu, lambda, rows), mu);
  if (found) {
    report.nonzero = true;
    report.witness_weight = weight(*found);
    report.witness = std::move(found);
  }
  return report;
}

TPolynomial graham_decompose(const TPolynomial& p) {
  // t_1 = 0, t_i = -(y_1 + ... + y_{i-1}).
  TPolynomial in_y = p.substitute([](int i) {
    TPolynomial prefix;
    for (int k = 1; k < i; ++k) prefix += TPolynomial::variable(k);
    return -prefix;
  });
  // Round trip through y_i = t_i - t_{i+1}; equality with the input is
  // exactly invariance under the simultaneous shift t_i -> t_i + c.
  TPolynomial back = in_y.substitute(
      [](int i) { return TPolynomial::binomial_difference(i, i + 1); });
  if (back != p)
    throw invalid_input("graham_decompose requires a translation-invariant polynomial");
  return in_y;
}

SaturationReport saturation_scan(const Partition& lambda, const Partition& mu,
                                 const Partition& nu, const std::vector<int>& factors) {
  SaturationReport report;
  report.base_nonzero = eq_nonzero(lambda, mu, nu).nonzero;
  for (int n : factors) {
    const bool nz = eq_nonzero(stretch(lambda, n), stretch(mu, n), stretch(nu, n)).nonzero;
    report.entries.push_back({n, nz});
    if (nz != report.base_nonzero) report.flagged.push_back(n);
  }
  return report;
}

} // namespace schubert
