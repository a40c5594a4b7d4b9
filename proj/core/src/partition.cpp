#include "schubert/partition.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void validate_and_trim(std::vector<int>& parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0)
      throw invalid_input("partition parts must be nonnegative");
    if (k + 1 < parts.size() && parts[k] < parts[k + 1])
      throw invalid_input("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  validate_and_trim(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_and_trim(parts_);
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  if (i < 1) throw invalid_input("partition parts are 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

int Partition::col_length(int j) const {
  if (j < 1) throw invalid_input("partition columns are 1-based");
  int count = 0;
  for (int p : parts_) {
    if (p >= j) ++count;
    else break;
  }
  return count;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

Partition stretch(const Partition& p, int n) {
  if (n < 1) throw invalid_input("stretch factor must be positive");
  std::vector<int> parts = p.parts();
  for (int& x : parts) x *= n;
  return Partition(std::move(parts));
}

Partition phi(const Partition& a, const Partition& b) {
  std::vector<int> merged;
  merged.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

bool fits_in_box(const Partition& p, int rows, int cols) {
  return p.length() <= rows && p.width() <= cols;
}

Partition dual_partition(const Partition& p, int d, int r) {
  if (d < 0 || r < d) throw invalid_input("dual_partition needs 0 <= d <= r");
  if (!fits_in_box(p, d, r - d))
    throw invalid_input("partition does not fit in the d x (r-d) rectangle");
  std::vector<int> parts(d);
  for (int i = 1; i <= d; ++i) parts[i - 1] = (r - d) - p.part(d + 1 - i);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  // Parts are chosen weakly decreasing; depth == rows stops the recursion.
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(std::vector<int>(current));
    if (static_cast<int>(current.size()) == rows) return;
    for (int p = 1; p <= max_part; ++p) {
      current.push_back(p);
      self(self, p);
      current.pop_back();
    }
  };
  if (rows >= 0 && cols >= 0) rec(rec, cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Partition> sub_partitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int row) -> void {
    if (row > outer.length()) {
      out.emplace_back(std::vector<int>(current));
      return;
    }
    int upper = std::min(outer.part(row), row == 1 ? outer.part(1) : current[row - 2]);
    for (int p = 0; p <= upper; ++p) {
      current.push_back(p);
      self(self, row + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> sub_partitions_of_size(const Partition& outer, long long size) {
  std::vector<Partition> out;
  if (size < 0 || size > outer.size()) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int row, long long remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(std::vector<int>(current));
      return;
    }
    if (row > outer.length()) return;
    int upper = std::min<long long>(outer.part(row), row == 1 ? remaining : current[row - 2]);
    upper = std::min<long long>(upper, remaining);
    for (int p = upper; p >= 1; --p) {
      current.push_back(p);
      self(self, row + 1, remaining - p);
      current.pop_back();
    }
  };
  rec(rec, 1, size);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace schubert
