#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schubert/ints.hpp"

namespace schubert {

/// Exponent vector of a monomial: entry k is the exponent of variable
/// index k+1 (variables are 1-based: t_1, t_2, ...), trailing zeros
/// trimmed.
using Exponents = std::vector<int>;

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographic comparison of exponent vectors padded with zeros.
/// This is the term order used by the JSON encoding.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact sparse polynomial in the variables t_1, t_2, ... with
/// arbitrary-precision integer coefficients.  Canonical: no zero
/// coefficients stored; equality is term-map equality.  Immutable in
/// spirit — all operations return new values.
class TPolynomial {
public:
  using TermMap = std::map<Exponents, Int, GrlexLess>;

  /// The zero polynomial.
  TPolynomial() = default;

  static TPolynomial constant(Int c);
  static TPolynomial constant(long long c) { return constant(Int(c)); }
  /// The variable t_index (index >= 1).
  static TPolynomial variable(int index);
  /// t_p - t_q.
  static TPolynomial binomial_difference(int p, int q);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Coefficient of the given monomial (0 if absent).
  Int coeff(const Exponents& e) const;
  /// Constant term.
  Int constant_term() const { return coeff({}); }
  /// True iff the polynomial is a constant (including zero).
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  long long degree() const;
  /// True iff all terms share the same total degree.  The zero
  /// polynomial counts as homogeneous of every degree.
  bool is_homogeneous() const;
  /// Largest variable index appearing; 0 for constants.
  int max_variable() const;

  TPolynomial operator-() const;
  TPolynomial operator+(const TPolynomial& o) const;
  TPolynomial operator-(const TPolynomial& o) const;
  TPolynomial operator*(const TPolynomial& o) const;
  TPolynomial& operator+=(const TPolynomial& o);
  TPolynomial& operator-=(const TPolynomial& o);
  TPolynomial& operator*=(const TPolynomial& o);
  bool operator==(const TPolynomial&) const = default;

  /// Exact evaluation; values[k] is substituted for t_{k+1} and must
  /// cover every variable that appears.
  Rational evaluate(const std::vector<Rational>& values) const;

  /// Substitutes image(i) for t_i.  The images may be polynomials in a
  /// different variable family (used by the Graham decomposition).
  TPolynomial substitute(const std::function<TPolynomial(int)>& image) const;

  /// Human-readable rendering such as "t_1*t_2^2 - 3*t_4"; "0" when zero.
  /// The variable letter is configurable so y-polynomials print as y_i.
  std::string to_string(char letter = 't') const;

private:
  TermMap terms_;

  void add_term(const Exponents& e, const Int& c);
  friend TPolynomial multiply(const TPolynomial&, const TPolynomial&);
};

} // namespace schubert
