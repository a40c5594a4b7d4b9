#include "schubert/spectrum.hpp"

#include "schubert/errors.hpp"

namespace schubert {

Spectrum::Spectrum(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k + 1 < entries_.size(); ++k)
    if (entries_[k] < entries_[k + 1])
      throw invalid_input("spectrum entries must be weakly decreasing");
}

Spectrum Spectrum::from_partition(const Partition& p, int length) {
  if (p.length() > length)
    throw invalid_input("partition is longer than the requested spectrum length");
  std::vector<Rational> entries(length);
  for (int i = 1; i <= length; ++i) entries[i - 1] = p.part(i);
  return Spectrum(std::move(entries));
}

const Rational& Spectrum::entry(int k) const {
  if (k < 1 || k > length()) throw invalid_input("spectrum entries are 1-based");
  return entries_[k - 1];
}

Rational Spectrum::sum() const {
  Rational total = 0;
  for (const Rational& e : entries_) total += e;
  return total;
}

std::string Spectrum::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += entries_[k].str();
  }
  return out;
}

Spectrum select(const Spectrum& s, const IndexSet& I) {
  if (I.ambient() != s.length())
    throw invalid_input("select: ambient of the index set must equal the spectrum length");
  std::vector<Rational> entries;
  entries.reserve(I.size());
  for (int i : I.elements()) entries.push_back(s.entry(i));
  return Spectrum(std::move(entries));
}

Rational partial_sum(const Spectrum& s, const IndexSet& I) {
  if (I.ambient() != s.length())
    throw invalid_input("partial_sum: ambient of the index set must equal the spectrum length");
  Rational total = 0;
  for (int i : I.elements()) total += s.entry(i);
  return total;
}

} // namespace schubert
