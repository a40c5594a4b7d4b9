#include "schubert/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "schubert/coefficients.hpp"
#include "schubert/errors.hpp"

namespace schubert {

EvaluationGrid::EvaluationGrid(int r, int n, std::vector<Rational> a_values)
    : r_(r), n_(n), a_(std::move(a_values)) {
  if (r < 0 || n < r) throw invalid_input("evaluation grid requires 0 <= r <= n");
  if (static_cast<int>(a_.size()) != n)
    throw invalid_input("evaluation grid requires exactly n values");
  for (int k = 0; k + 1 < n; ++k)
    if (a_[k] >= a_[k + 1])
      throw invalid_input("evaluation grid values must be strictly increasing");
}

const Rational& EvaluationGrid::a(int k) const {
  if (k < 1 || k > n_) throw invalid_input("grid index out of [1, n]; enlarge n");
  return a_[k - 1];
}

Rational map_t_value(const EvaluationGrid& grid, int t_index, VariableMap map) {
  switch (map) {
    case VariableMap::negate: return -grid.a(t_index);
    case VariableMap::reverse: return grid.a(grid.n() + 1 - t_index);
    case VariableMap::identity: return grid.a(t_index);
    case VariableMap::reverse_negate: return -grid.a(grid.n() + 1 - t_index);
  }
  throw invalid_input("unknown variable map");
}

Rational factorial_schur_value(const Partition& lambda, const std::vector<Rational>& x,
                               const EvaluationGrid& grid) {
  const int r = grid.r();
  if (static_cast<int>(x.size()) != r)
    throw invalid_input("factorial_schur_value needs exactly r point coordinates");
  if (lambda.length() > r) throw invalid_input("factorial_schur_value needs length(lambda) <= r");
  if (lambda.empty()) return 1;
  if (r + lambda.width() - 1 > grid.n())
    throw invalid_input("grid too small for this shape; enlarge n");

  // Cells row-major; entry(i,j) >= entry(i,j-1) and > entry(i-1,j).
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> entry(lambda.length() + 1,
                                      std::vector<int>(lambda.width() + 1, 0));
  Rational total = 0;
  auto rec = [&](auto&& self, std::size_t k, Rational product) -> void {
    if (k == cells.size()) {
      total += product;
      return;
    }
    const auto [i, j] = cells[k];
    const int lo = std::max({1, j > 1 ? entry[i][j - 1] : 1, i > 1 ? entry[i - 1][j] + 1 : 1});
    for (int v = lo; v <= r; ++v) {
      entry[i][j] = v;
      self(self, k + 1, product * (x[v - 1] - grid.a(v + j - i)));
      entry[i][j] = 0;
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

std::vector<Rational> grid_point(const Partition& nu, const EvaluationGrid& grid) {
  if (nu.length() > grid.r()) throw invalid_input("grid_point needs length(nu) <= r");
  if (nu.width() + grid.r() > grid.n())
    throw invalid_input("grid too small for this evaluation point; enlarge n");
  std::vector<Rational> x(grid.r());
  for (int i = 1; i <= grid.r(); ++i) x[i - 1] = grid.a(nu.part(i) + grid.r() + 1 - i);
  return x;
}

namespace {

// Partitions of the exact size with at most `rows` rows, any width.
std::vector<Partition> partitions_of_size(long long size, int rows) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, long long remaining, int row) -> void {
    if (remaining == 0) {
      out.emplace_back(std::vector<int>(current));
      return;
    }
    if (row > rows) return;
    const long long upper = row == 1 ? remaining : std::min<long long>(remaining, current[row - 2]);
    for (long long p = upper; p >= 1; --p) {
      current.push_back(static_cast<int>(p));
      self(self, remaining - p, row + 1);
      current.pop_back();
    }
  };
  rec(rec, size, 1);
  return out;
}

} // namespace

std::map<Partition, Rational> oracle_structure_constants(const Partition& lambda,
                                                         const Partition& mu,
                                                         const EvaluationGrid& grid) {
  const int r = grid.r();
  const int cols = grid.n() - r;
  if (!fits_in_box(lambda, r, cols) || !fits_in_box(mu, r, cols))
    throw invalid_input("oracle_structure_constants: shapes must fit in r x (n-r)");
  const long long total = lambda.size() + mu.size();

  std::map<Partition, Rational> result;

  // Triangular solve over the grid-evaluable layer (nu_1 <= n-r), in
  // increasing order of |nu|: previously determined terms are peeled off
  // and the pivot s_nu(x(nu)) is nonzero because the a's are distinct.
  std::vector<Partition> evaluable;
  for (const Partition& nu : partitions_in_box(r, cols))
    if (nu.size() <= total) evaluable.push_back(nu);
  for (const Partition& nu : evaluable) {
    const std::vector<Rational> x = grid_point(nu, grid);
    Rational value = factorial_schur_value(lambda, x, grid) * factorial_schur_value(mu, x, grid);
    for (const auto& [kappa, c] : result)
      if (contains(kappa, nu)) value -= c * factorial_schur_value(kappa, x, grid);
    const Rational pivot = factorial_schur_value(nu, x, grid);
    if (pivot == 0) throw internal_error("oracle pivot vanished on a valid grid");
    const Rational coefficient = value / pivot;
    if (coefficient != 0) result.emplace(nu, coefficient);
  }

  // Top layer |nu| = |lambda| + |mu| that does not fit the grid: these are
  // degree-zero coefficients, supplied by the classical Schur oracle.
  for (const Partition& nu : partitions_of_size(total, r)) {
    if (nu.width() <= cols) continue;
    const Int c = classical_oracle_lr(lambda, mu, nu, r);
    if (c != 0) result.emplace(nu, Rational(c));
  }
  return result;
}

EvaluationGrid random_grid(int r, int n, std::mt19937_64& rng) {
  // Small distinct rationals; raw rng output is reduced explicitly so the
  // sequence does not depend on the standard library's distributions.
  std::set<Rational> values;
  const long long span = 6LL * n + 1;
  while (static_cast<int>(values.size()) < n) {
    const long long numerator = static_cast<long long>(rng() % span) - 3LL * n;
    const long long denominator = 1 + static_cast<long long>(rng() % 3);
    values.insert(Rational(numerator, denominator));
  }
  std::vector<Rational> sorted(values.begin(), values.end());
  return EvaluationGrid(r, n, std::move(sorted));
}

CrossCheckReport cross_check(const Partition& lambda, const Partition& mu, int r, int n,
                             int trials, unsigned long long seed, VariableMap map) {
  const int cols = n - r;
  if (!fits_in_box(lambda, r, cols) || !fits_in_box(mu, r, cols))
    throw invalid_input("cross_check: shapes must fit in r x (n-r)");
  CrossCheckReport report;
  report.seed = seed;

  // The rule side does not depend on the grid; compute once.
  const long long total = lambda.size() + mu.size();
  std::vector<std::pair<Partition, TPolynomial>> rule_values;
  for (const Partition& nu : partitions_in_box(r, cols))
    if (nu.size() <= total) rule_values.emplace_back(nu, eq_coef(lambda, mu, nu, r));
  for (const Partition& nu : partitions_of_size(total, r))
    if (nu.width() > cols) rule_values.emplace_back(nu, eq_coef(lambda, mu, nu, r));

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<unsigned long long>(trial));
    const EvaluationGrid grid = random_grid(r, n, rng);
    const std::map<Partition, Rational> oracle = oracle_structure_constants(lambda, mu, grid);
    for (const auto& [nu, poly] : rule_values) {
      auto it = oracle.find(nu);
      const Rational expected = it == oracle.end() ? Rational(0) : it->second;
      std::vector<Rational> values(poly.max_variable());
      for (int k = 1; k <= poly.max_variable(); ++k) values[k - 1] = map_t_value(grid, k, map);
      const Rational actual = poly.evaluate(values);
      ++report.compared;
      if (actual != expected)
        report.failures.push_back({nu, trial, grid.a(), expected, actual});
    }
  }
  report.pass = report.failures.empty();
  return report;
}

namespace {

// Complete homogeneous symmetric polynomial h_k in `vars` variables,
// cached.  Basis for the Jacobi-Trudi determinants.
const TPolynomial& homogeneous_h(int k, int vars) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, TPolynomial> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(k, vars);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  TPolynomial sum;
  Exponents exps(vars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == vars) {
      exps[vars - 1] = remaining;
      TPolynomial monomial = TPolynomial::constant(1);
      Exponents trimmed = exps;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      TPolynomial term;
      term += TPolynomial::constant(1);
      for (std::size_t v = 0; v < trimmed.size(); ++v)
        for (int rep = 0; rep < trimmed[v]; ++rep)
          term *= TPolynomial::variable(static_cast<int>(v) + 1);
      sum += term;
      exps[vars - 1] = 0;
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      exps[var - 1] = take;
      self(self, var + 1, remaining - take);
      exps[var - 1] = 0;
    }
  };
  if (k == 0) {
    sum = TPolynomial::constant(1);
  } else if (k > 0 && vars > 0) {
    rec(rec, 1, k);
  } // k < 0 or no variables: zero
  return cache.emplace(key, std::move(sum)).first->second;
}

TPolynomial schur_polynomial(const Partition& kappa, int vars) {
  const int d = kappa.length();
  if (d == 0) return TPolynomial::constant(1);
  if (d > vars) return {};
  // det(h_{kappa_i - i + j}) by minor expansion along the first column.
  std::vector<std::vector<TPolynomial>> m(d, std::vector<TPolynomial>(d));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) m[i - 1][j - 1] = homogeneous_h(kappa.part(i) - i + j, vars);
  std::vector<int> rows(d);
  for (int i = 0; i < d; ++i) rows[i] = i;
  auto det = [&](auto&& self, std::vector<int>& live, int col) -> TPolynomial {
    if (col == d) return TPolynomial::constant(1);
    TPolynomial out;
    for (std::size_t k = 0; k < live.size(); ++k) {
      const int row = live[k];
      if (m[row][col].is_zero()) continue;
      std::vector<int> next = live;
      next.erase(next.begin() + k);
      TPolynomial minor = self(self, next, col + 1);
      if (k % 2 == 0) out += m[row][col] * minor;
      else out -= m[row][col] * minor;
    }
    return out;
  };
  return det(det, rows, 0);
}

} // namespace

Int classical_oracle_lr(const Partition& lambda, const Partition& mu, const Partition& nu,
                        int r) {
  if (lambda.length() > r || mu.length() > r || nu.length() > r)
    throw invalid_input("classical_oracle_lr: lengths must be at most r");
  if (lambda.size() + mu.size() != nu.size()) return 0;
  TPolynomial product = schur_polynomial(lambda, r) * schur_polynomial(mu, r);
  // Peel lexicographically leading monomials; for a symmetric polynomial
  // the leading exponent vector is always a partition.
  Int answer = 0;
  while (!product.is_zero()) {
    const auto& [exps, coefficient] = *product.terms().rbegin();
    std::vector<int> parts = exps;
    Partition head;
    try {
      head = Partition(std::move(parts));
    } catch (const invalid_input&) {
      throw internal_error("classical oracle: leading monomial is not a partition");
    }
    if (coefficient < 0) throw internal_error("classical oracle: negative Schur coefficient");
    if (head == nu) {
      answer = coefficient;
      break;
    }
    product -= TPolynomial::constant(coefficient) * schur_polynomial(head, r);
  }
  return answer;
}

} // namespace schubert
