#include "schubert/index_set.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

IndexSet::IndexSet(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw invalid_input("index set ambient must be nonnegative");
}

IndexSet::IndexSet(int ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  if (ambient < 0) throw invalid_input("index set ambient must be nonnegative");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 1 || elements_[k] > ambient_)
      throw invalid_input("index set element out of [1, ambient]");
    if (k + 1 < elements_.size() && elements_[k] >= elements_[k + 1])
      throw invalid_input("index set elements must be strictly increasing");
  }
}

IndexSet IndexSet::full(int r) {
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i + 1;
  return IndexSet(r, std::move(all));
}

int IndexSet::element(int k) const {
  if (k < 1 || k > size()) throw invalid_input("index set elements are 1-based");
  return elements_[k - 1];
}

bool IndexSet::operator<(const IndexSet& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  return elements_ < other.elements_;
}

std::string IndexSet::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(elements_[k]);
  }
  return out;
}

Partition tau(const IndexSet& I) {
  const int d = I.size();
  std::vector<int> parts(d);
  for (int k = 1; k <= d; ++k) parts[k - 1] = I.element(d + 1 - k) - (d + 1 - k);
  return Partition(std::move(parts));
}

IndexSet tau_inverse(const Partition& p, int d, int r) {
  if (d < 0 || r < d) throw invalid_input("tau_inverse needs 0 <= d <= r");
  if (!fits_in_box(p, d, r - d))
    throw invalid_input("partition does not fit in the d x (r-d) rectangle");
  std::vector<int> elements(d);
  for (int k = 1; k <= d; ++k) elements[k - 1] = p.part(d + 1 - k) + k;
  return IndexSet(r, std::move(elements));
}

IndexSet dual_set(const IndexSet& I) {
  const int r = I.ambient();
  std::vector<int> elements;
  elements.reserve(I.size());
  for (int k = I.size(); k >= 1; --k) elements.push_back(r + 1 - I.element(k));
  return IndexSet(r, std::move(elements));
}

IndexSet complement_set(const IndexSet& I) {
  std::vector<int> elements;
  elements.reserve(I.ambient() - I.size());
  std::size_t pos = 0;
  for (int v = 1; v <= I.ambient(); ++v) {
    if (pos < I.elements().size() && I.elements()[pos] == v) {
      ++pos;
    } else {
      elements.push_back(v);
    }
  }
  return IndexSet(I.ambient(), std::move(elements));
}

IndexSet restrict_set(const IndexSet& I, const IndexSet& F) {
  if (F.ambient() != I.size())
    throw invalid_input("restrict_set: F must have ambient |I|");
  std::vector<int> elements;
  elements.reserve(F.size());
  for (int f : F.elements()) elements.push_back(I.element(f));
  return IndexSet(I.ambient(), std::move(elements));
}

IndexSet extend_set(const IndexSet& I, const IndexSet& F) {
  if (F.ambient() != I.ambient() - I.size())
    throw invalid_input("extend_set: F must have ambient r - |I|");
  const IndexSet chosen = restrict_set(complement_set(I), F);
  std::vector<int> merged;
  merged.reserve(I.size() + chosen.size());
  std::merge(I.elements().begin(), I.elements().end(), chosen.elements().begin(),
             chosen.elements().end(), std::back_inserter(merged));
  return IndexSet(I.ambient(), std::move(merged));
}

Partition select(const Partition& p, const IndexSet& I) {
  if (p.length() > I.ambient())
    throw invalid_input("select: partition is longer than the ambient");
  std::vector<int> parts;
  parts.reserve(I.size());
  for (int i : I.elements()) parts.push_back(p.part(i));
  return Partition(std::move(parts));
}

std::vector<IndexSet> subsets_of_size(int r, int d) {
  if (d < 0 || d > r) throw invalid_input("subsets_of_size needs 0 <= d <= r");
  std::vector<IndexSet> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == d) {
      out.emplace_back(r, std::vector<int>(current));
      return;
    }
    int needed = d - static_cast<int>(current.size());
    for (int v = next; v + needed - 1 <= r; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

} // namespace schubert
