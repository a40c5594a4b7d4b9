#include "schubert/tpolynomial.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

long long total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0LL);
}

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

} // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    const int ea = k < a.size() ? a[k] : 0;
    const int eb = k < b.size() ? b[k] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

TPolynomial TPolynomial::constant(Int c) {
  TPolynomial p;
  if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

TPolynomial TPolynomial::variable(int index) {
  if (index < 1) throw invalid_input("variable indices are 1-based");
  TPolynomial p;
  Exponents e(index, 0);
  e[index - 1] = 1;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

TPolynomial TPolynomial::binomial_difference(int p, int q) {
  return variable(p) - variable(q);
}

Int TPolynomial::coeff(const Exponents& e) const {
  Exponents key = e;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

bool TPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

long long TPolynomial::degree() const {
  long long best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
  return best;
}

bool TPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long long d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

int TPolynomial::max_variable() const {
  std::size_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.size());
  return static_cast<int>(best);
}

void TPolynomial::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TPolynomial TPolynomial::operator-() const {
  TPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TPolynomial TPolynomial::operator+(const TPolynomial& o) const {
  TPolynomial out = *this;
  out += o;
  return out;
}

TPolynomial TPolynomial::operator-(const TPolynomial& o) const {
  TPolynomial out = *this;
  out -= o;
  return out;
}

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
  TPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TPolynomial& TPolynomial::operator*=(const TPolynomial& o) {
  *this = *this * o;
  return *this;
}

Rational TPolynomial::evaluate(const std::vector<Rational>& values) const {
  if (max_variable() > static_cast<int>(values.size()))
    throw invalid_input("evaluate: not enough values for the variables present");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int rep = 0; rep < e[k]; ++rep) term *= values[k];
    total += term;
  }
  return total;
}

TPolynomial TPolynomial::substitute(const std::function<TPolynomial(int)>& image) const {
  TPolynomial total;
  for (const auto& [e, c] : terms_) {
    TPolynomial term = TPolynomial::constant(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      const TPolynomial img = image(static_cast<int>(k) + 1);
      for (int rep = 0; rep < e[k]; ++rep) term *= img;
    }
    total += term;
  }
  return total;
}

std::string TPolynomial::to_string(char letter) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print leading (highest) terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Int abs_c = negative ? Int(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += letter;
      monomial += '_' + std::to_string(k + 1);
      if (e[k] > 1) monomial += '^' + std::to_string(e[k]);
    }
    if (monomial.empty()) {
      out += abs_c.str();
    } else {
      if (abs_c != 1) {
        out += abs_c.str();
        out += '*';
      }
      out += monomial;
    }
  }
  return out;
}

} // namespace schubert
