#include "schubert/horn.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "schubert/coefficients.hpp"
#include "schubert/errors.hpp"

namespace schubert {

std::string to_string(TripleFamily family) {
  return family == TripleFamily::lr_positive ? "lr-positive" : "sdr";
}

namespace {

std::vector<HornTriple> build_table(int d, int r, TripleFamily family) {
  std::vector<HornTriple> out;
  const std::vector<IndexSet> subsets = subsets_of_size(r, d);
  for (const IndexSet& I : subsets) {
    const Partition tI = tau(I);
    for (const IndexSet& J : subsets) {
      const Partition tJ = tau(J);
      for (const IndexSet& K : subsets) {
        const Partition tK = tau(K);
        bool keep = false;
        if (family == TripleFamily::lr_positive) {
          keep = lr_nonzero(tI, tJ, tK);
        } else {
          keep = find_contained_target(tI, tJ, tK, d, r).has_value();
        }
        if (keep) out.push_back({I, J, K, family});
      }
    }
  }
  return out;
}

// Tables are built once per (d, r) and immutable afterwards; a missing
// table is constructed under the lock (single writer).
const std::vector<HornTriple>& cached_table(int d, int r, TripleFamily family) {
  if (d < 1 || d >= r) throw invalid_input("triple tables require 1 <= d < r");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, TripleFamily>, std::vector<HornTriple>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(d, r, family);
  auto it = tables.find(key);
  if (it == tables.end()) it = tables.emplace(key, build_table(d, r, family)).first;
  return it->second;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : text) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string trim_copy(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::string trimmed = trim_copy(text);
  if (trimmed.empty()) return out;
  std::stringstream ss(trimmed);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(trim_copy(item)));
    } catch (const std::exception&) {
      throw invalid_input("triple table: malformed integer list '" + text + "'");
    }
  }
  return out;
}

} // namespace

const std::vector<HornTriple>& horn_triples(int d, int r) {
  return cached_table(d, r, TripleFamily::lr_positive);
}

const std::vector<HornTriple>& sdr_triples(int d, int r) {
  return cached_table(d, r, TripleFamily::sdr);
}

bool in_sdr(const IndexSet& I, const IndexSet& J, const IndexSet& K) {
  if (I.ambient() != J.ambient() || I.ambient() != K.ambient())
    throw invalid_input("in_sdr requires a common ambient");
  if (I.size() != J.size() || I.size() != K.size())
    throw invalid_input("in_sdr requires equal cardinalities");
  return find_contained_target(tau(I), tau(J), tau(K), I.size(), I.ambient()).has_value();
}

std::optional<Partition> find_contained_target(const Partition& alpha, const Partition& beta,
                                               const Partition& gamma, int d, int r) {
  if (!fits_in_box(alpha, d, r - d) || !fits_in_box(beta, d, r - d) ||
      !fits_in_box(gamma, d, r - d))
    throw invalid_input("find_contained_target: shapes must fit in d x (r-d)");
  const long long target_size = alpha.size() + beta.size();
  for (const Partition& candidate : sub_partitions_of_size(gamma, target_size))
    if (lr_nonzero(alpha, beta, candidate)) return candidate;
  return std::nullopt;
}

FeasibilityReport check_horn(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                             TripleFamily family) {
  if (x.length() != y.length() || x.length() != z.length())
    throw invalid_input("check_horn requires spectra of a common length");
  const int r = x.length();
  FeasibilityReport report;
  for (int d = 1; d < r; ++d) {
    const auto& table = family == TripleFamily::lr_positive ? horn_triples(d, r)
                                                            : sdr_triples(d, r);
    for (const HornTriple& triple : table) {
      ++report.checked_count;
      const Rational sum_x = partial_sum(x, triple.I);
      const Rational sum_y = partial_sum(y, triple.J);
      const Rational sum_z = partial_sum(z, triple.K);
      if (sum_x + sum_y < sum_z) {
        report.feasible = false;
        report.failure = FailureKind::inequality;
        report.violated = ViolationCertificate{triple, sum_x, sum_y, sum_z};
        return report;
      }
    }
  }
  report.feasible = true;
  return report;
}

FeasibilityReport classical_feasible(const Spectrum& x, const Spectrum& y, const Spectrum& z) {
  if (x.length() != y.length() || x.length() != z.length())
    throw invalid_input("classical_feasible requires spectra of a common length");
  if (x.sum() + y.sum() != z.sum()) {
    FeasibilityReport report;
    report.feasible = false;
    report.failure = FailureKind::trace;
    return report;
  }
  return check_horn(x, y, z, TripleFamily::lr_positive);
}

FeasibilityReport majorized_feasible(const Spectrum& x, const Spectrum& y, const Spectrum& z) {
  if (x.length() != y.length() || x.length() != z.length())
    throw invalid_input("majorized_feasible requires spectra of a common length");
  if (x.sum() + y.sum() < z.sum()) {
    FeasibilityReport report;
    report.feasible = false;
    report.failure = FailureKind::trace;
    return report;
  }
  return check_horn(x, y, z, TripleFamily::lr_positive);
}

bool eq_nonzero_via_horn(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() < nu.size()) return false;
  if (!contains(lambda, nu) || !contains(mu, nu)) return false;
  const int r = nu.length();
  if (r == 0) return true; // all empty: the coefficient is 1
  return check_horn(Spectrum::from_partition(lambda, r), Spectrum::from_partition(mu, r),
                    Spectrum::from_partition(nu, r), TripleFamily::lr_positive)
      .feasible;
}

std::string serialize_triple_table(int d, int r, TripleFamily family) {
  const auto& table = cached_table(d, r, family);
  std::string body;
  for (const HornTriple& t : table) {
    body += std::to_string(d) + " " + std::to_string(r) + " | " + t.I.to_string() + " | " +
            t.J.to_string() + " | " + t.K.to_string() + " | " + to_string(t.kind) + "\n";
  }
  return "# schubert triple table\n# checksum: " + hex64(fnv1a(body)) + "\n" + body;
}

void save_triple_table(const std::string& path, int d, int r, TripleFamily family) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot open triple table file for writing: " + path);
  out << serialize_triple_table(d, r, family);
  if (!out) throw invalid_input("failed writing triple table file: " + path);
}

TripleTable load_triple_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open triple table file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::stringstream lines(text);
  std::string line;
  if (!std::getline(lines, line) || line != "# schubert triple table")
    throw invalid_input("triple table: missing header");
  if (!std::getline(lines, line) || line.rfind("# checksum: ", 0) != 0)
    throw invalid_input("triple table: missing checksum line");
  const std::string stored = trim_copy(line.substr(std::string("# checksum: ").size()));

  std::string body;
  std::string rest;
  while (std::getline(lines, rest)) body += rest + "\n";
  if (hex64(fnv1a(body)) != stored)
    throw invalid_input("triple table: checksum mismatch; regenerate the file");

  TripleTable table;
  bool first = true;
  std::stringstream body_lines(body);
  while (std::getline(body_lines, line)) {
    if (trim_copy(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream fs(line);
    std::string field;
    while (std::getline(fs, field, '|')) fields.push_back(field);
    if (fields.size() != 5) throw invalid_input("triple table: malformed line '" + line + "'");
    std::stringstream head(fields[0]);
    int d = 0, r = 0;
    if (!(head >> d >> r)) throw invalid_input("triple table: malformed d r prefix");
    const std::string kind_text = trim_copy(fields[4]);
    TripleFamily kind;
    if (kind_text == "lr-positive") kind = TripleFamily::lr_positive;
    else if (kind_text == "sdr") kind = TripleFamily::sdr;
    else throw invalid_input("triple table: unknown kind '" + kind_text + "'");
    if (first) {
      table.d = d;
      table.r = r;
      table.family = kind;
      first = false;
    } else if (d != table.d || r != table.r || kind != table.family) {
      throw invalid_input("triple table: inconsistent d/r/kind across lines");
    }
    table.triples.push_back({IndexSet(r, parse_csv_ints(fields[1])),
                             IndexSet(r, parse_csv_ints(fields[2])),
                             IndexSet(r, parse_csv_ints(fields[3])), kind});
  }
  return table;
}

} // namespace schubert
