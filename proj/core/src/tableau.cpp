#include "schubert/tableau.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

EdgeLabeledTableau::EdgeLabeledTableau(SkewShape shape, BoxMap box_labels, EdgeMap edge_labels)
    : shape_(std::move(shape)), boxes_(std::move(box_labels)), edges_(std::move(edge_labels)) {
  // Box labels: total on the skew boxes, positive, and nothing else.
  long long labeled = 0;
  for (const auto& [cell, label] : boxes_) {
    if (!shape_.is_skew_box(cell.first, cell.second))
      throw invalid_input("box label outside the skew shape");
    if (label < 1) throw invalid_input("box labels must be positive");
    ++labeled;
  }
  if (labeled != shape_.box_count())
    throw invalid_input("box labels must cover every skew box");
  // Edge labels: on labelable gaps, strictly increasing nonempty sets.
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->second.empty()) {
      it = edges_.erase(it); // absent key == empty set
      continue;
    }
    if (!shape_.gap_labelable(it->first))
      throw invalid_input("edge label on a non-labelable gap");
    const auto& set = it->second;
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (set[k] < 1) throw invalid_input("edge labels must be positive");
      if (k + 1 < set.size() && set[k] >= set[k + 1])
        throw invalid_input("edge label sets must be strictly increasing");
    }
    ++it;
  }
}

int EdgeLabeledTableau::box_label(int i, int j) const {
  auto it = boxes_.find({i, j});
  if (it == boxes_.end()) throw invalid_input("no box label at this cell");
  return it->second;
}

const std::vector<int>& EdgeLabeledTableau::edge_labels(GapPosition g) const {
  static const std::vector<int> kEmpty;
  auto it = edges_.find(g);
  return it == edges_.end() ? kEmpty : it->second;
}

int EdgeLabeledTableau::edge_label_count() const {
  int count = 0;
  for (const auto& [g, set] : edges_) count += static_cast<int>(set.size());
  return count;
}

long long EdgeLabeledTableau::label_count() const {
  return shape_.box_count() + edge_label_count();
}

Word reading_word(const EdgeLabeledTableau& t) {
  const SkewShape& s = t.shape();
  Word w;
  w.reserve(static_cast<std::size_t>(t.label_count()));
  for (int j = s.outer().width(); j >= 1; --j) {
    for (int i = 1; i <= s.outer().col_length(j); ++i) {
      if (s.is_skew_box(i, j)) w.push_back({t.box_label(i, j), false, i, j});
      for (int letter : t.edge_labels({i, j})) w.push_back({letter, true, i, j});
    }
  }
  return w;
}

std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const WordLetter& l : w) out.push_back(l.letter);
  return out;
}

EdgeLabeledTableau tableau_from_word(const SkewShape& shape, const Word& w) {
  EdgeLabeledTableau::BoxMap boxes;
  EdgeLabeledTableau::EdgeMap edges;
  for (const WordLetter& l : w) {
    if (l.from_edge) {
      edges[{l.row, l.col}].push_back(l.letter);
    } else {
      if (!boxes.emplace(std::make_pair(l.row, l.col), l.letter).second)
        throw invalid_input("word assigns two labels to one box");
    }
  }
  for (auto& [g, set] : edges) std::sort(set.begin(), set.end());
  return EdgeLabeledTableau(shape, std::move(boxes), std::move(edges));
}

bool is_semistandard(const EdgeLabeledTableau& t) {
  const SkewShape& s = t.shape();
  for (int i = 1; i <= s.outer().length(); ++i) {
    for (int j = 1; j <= s.outer().part(i); ++j) {
      if (!s.is_skew_box(i, j)) continue;
      const int label = t.box_label(i, j);
      // Weak increase along the row.
      if (s.is_skew_box(i, j + 1) && label > t.box_label(i, j + 1)) return false;
      // Strict increase down the column (also implied by the gap chain
      // when the gap between is empty; checked directly).
      if (s.is_skew_box(i + 1, j) && label >= t.box_label(i + 1, j)) return false;
    }
  }
  // Gap chain: box above < labels < box below, labels strictly increasing.
  for (const auto& [g, set] : t.edges()) {
    for (std::size_t k = 0; k + 1 < set.size(); ++k)
      if (set[k] >= set[k + 1]) return false;
    if (s.is_skew_box(g.row, g.col) && set.front() <= t.box_label(g.row, g.col)) return false;
    if (s.is_skew_box(g.row + 1, g.col) && set.back() >= t.box_label(g.row + 1, g.col))
      return false;
  }
  return true;
}

bool is_lattice_word(const std::vector<int>& letters) {
  int max_letter = 0;
  for (int l : letters) max_letter = std::max(max_letter, l);
  std::vector<long long> count(static_cast<std::size_t>(max_letter) + 2, 0);
  for (int l : letters) {
    ++count[l];
    if (l >= 2 && count[l] > count[l - 1]) return false;
  }
  return true;
}

bool is_lattice(const EdgeLabeledTableau& t) {
  return is_lattice_word(word_letters(reading_word(t)));
}

std::vector<TooHighLabel> too_high_labels(const EdgeLabeledTableau& t) {
  std::vector<TooHighLabel> out;
  for (const WordLetter& l : reading_word(t))
    if (l.row < l.letter) out.push_back({l.letter, l.from_edge, l.row, l.col});
  return out;
}

std::vector<int> content(const EdgeLabeledTableau& t) {
  std::vector<int> counts;
  for (const WordLetter& l : reading_word(t)) {
    if (static_cast<int>(counts.size()) < l.letter) counts.resize(l.letter, 0);
    ++counts[l.letter - 1];
  }
  return counts;
}

Partition content_partition(const EdgeLabeledTableau& t) {
  return Partition(content(t));
}

bool is_witness(const EdgeLabeledTableau& t) {
  return is_semistandard(t) && is_lattice(t) && too_high_labels(t).empty();
}

TPolynomial edge_factor(const EdgeLabeledTableau& t, GapPosition g, int letter) {
  const SkewShape& s = t.shape();
  if (!s.gap_labelable(g)) throw invalid_input("edge_factor: gap is not labelable");
  // rho: occurrences of the letter, box or edge, strictly to the right.
  int rho = 0;
  for (const WordLetter& l : reading_word(t))
    if (l.col > g.col && l.letter == letter) ++rho;
  const int p = s.rows() + g.col - g.row;
  const int q = p + (g.row - letter + 1 + rho);
  if (p < 1 || p >= q)
    throw internal_error("edge factor convention produced t_" + std::to_string(p) + " - t_" +
                         std::to_string(q) + "; factors must satisfy 1 <= p < q");
  return TPolynomial::binomial_difference(p, q);
}

TPolynomial weight(const EdgeLabeledTableau& t) {
  if (!is_witness(t))
    throw invalid_input("weight requires a semistandard lattice tableau with no label too high");
  TPolynomial result = TPolynomial::constant(1);
  for (const auto& [g, set] : t.edges())
    for (int letter : set) result *= edge_factor(t, g, letter);
  return result;
}

} // namespace schubert
