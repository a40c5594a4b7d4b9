#include "schubert/procedures.hpp"

#include <algorithm>
#include <limits>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool column_has_letter(const EdgeLabeledTableau& t, int col, int letter) {
  const SkewShape& s = t.shape();
  for (int i = 1; i <= s.outer().col_length(col); ++i) {
    if (s.is_skew_box(i, col) && t.box_label(i, col) == letter) return true;
    const auto& set = t.edge_labels({i, col});
    if (std::find(set.begin(), set.end(), letter) != set.end()) return true;
  }
  return false;
}

void check_witness_input(const EdgeLabeledTableau& t, const char* op) {
  if (!is_witness(t))
    throw invalid_input(std::string(op) + " requires a witnessing tableau (semistandard, "
                                          "lattice, no label too high)");
}

} // namespace

EdgeLabeledTableau add_edge_label(const EdgeLabeledTableau& t, int letter) {
  if (letter < 1) throw invalid_input("edge labels are positive");
  check_witness_input(t, "add_edge_label");
  const SkewShape& s = t.shape();
  const Partition mu = content_partition(t);

  // mu plus one box in row `letter` must again be a partition inside the
  // outer shape.
  if (letter > mu.length() + 1)
    throw invalid_input("adding a box in this row does not yield a partition");
  if (letter > 1 && mu.part(letter - 1) == mu.part(letter))
    throw invalid_input("adding a box in this row does not yield a partition");
  std::vector<int> up_parts = mu.parts();
  if (letter == mu.length() + 1) up_parts.push_back(1);
  else ++up_parts[letter - 1];
  const Partition mu_up(up_parts);
  if (!contains(mu_up, s.outer()))
    throw invalid_input("grown content does not fit inside the outer shape");

  for (int c = 1; c <= s.outer().width(); ++c) {
    if (column_has_letter(t, c, letter)) continue;
    // The placement within the column is forced by semistandardness:
    // the unique gap whose neighboring box labels admit the letter.
    int slot = -1;
    const int lo = std::max(1, s.inner().col_length(c));
    for (int i = lo; i <= s.outer().col_length(c); ++i) {
      const int above = s.is_skew_box(i, c) ? t.box_label(i, c) : 0;
      const int below = s.is_skew_box(i + 1, c) ? t.box_label(i + 1, c)
                                                : std::numeric_limits<int>::max();
      if (above < letter && letter < below) {
        slot = i;
        break;
      }
    }
    if (slot == -1) continue;     // forced position lies above the column: too high
    if (slot < letter) continue;  // placement would be too high
    EdgeLabeledTableau::EdgeMap edges = t.edges();
    auto& set = edges[{slot, c}];
    set.insert(std::upper_bound(set.begin(), set.end(), letter), letter);
    EdgeLabeledTableau grown(s, t.boxes(), std::move(edges));
    if (!is_witness(grown) || content_partition(grown) != mu_up)
      throw internal_error("add_edge_label produced a non-witness; the placement lemma failed");
    return grown;
  }
  throw internal_error("add_edge_label found no admissible column; one is guaranteed to exist");
}

RemovalTrace remove_last_edge_label_traced(const EdgeLabeledTableau& t) {
  check_witness_input(t, "remove_last_edge_label");
  if (t.edge_label_count() == 0)
    throw invalid_input("remove_last_edge_label requires at least one edge label");
  const SkewShape& s = t.shape();
  const Word original = reading_word(t);
  const long long before_size = t.label_count();

  int removed_pos = -1;
  for (int k = static_cast<int>(original.size()) - 1; k >= 0; --k) {
    if (original[k].from_edge) {
      removed_pos = k;
      break;
    }
  }
  const WordLetter removed = original[removed_pos];

  Word word = original;
  word.erase(word.begin() + removed_pos);

  RemovalTrace trace{removed.letter,
                     {removed.row, removed.col},
                     removed_pos,
                     tableau_from_word(s, word),
                     {},
                     tableau_from_word(s, word),
                     Partition{}};

  int max_letter = 0;
  for (const WordLetter& l : word) max_letter = std::max(max_letter, l.letter);
  std::vector<long long> count(static_cast<std::size_t>(max_letter) + 2, 0);
  int current = removed.letter;
  for (std::size_t q = 0; q < word.size(); ++q) {
    const int v = word[q].letter;
    if (v >= 2 && count[v] + 1 > count[v - 1]) {
      // The first violation is always the letter current+1, at a box.
      if (v != current + 1)
        throw internal_error("removal cascade hit a violation for an unexpected letter");
      if (word[q].from_edge)
        throw internal_error("removal cascade selected an edge label");
      word[q].letter = v - 1;
      ++count[v - 1];
      if (v - 1 >= 2 && count[v - 1] > count[v - 2])
        throw internal_error("removal cascade introduced a new violation");
      current = v;
      trace.steps.push_back({static_cast<int>(q), v, v - 1, tableau_from_word(s, word)});
    } else {
      ++count[v];
    }
  }

  trace.result = tableau_from_word(s, word);
  if (!is_witness(trace.result))
    throw internal_error("removal produced a non-witness");
  trace.content = content_partition(trace.result);
  if (trace.result.label_count() != before_size - 1 ||
      trace.result.edge_label_count() != t.edge_label_count() - 1)
    throw internal_error("removal changed the label count by more than one");
  return trace;
}

std::pair<EdgeLabeledTableau, Partition> remove_last_edge_label(const EdgeLabeledTableau& t) {
  RemovalTrace trace = remove_last_edge_label_traced(t);
  return {std::move(trace.result), std::move(trace.content)};
}

EdgeLabeledTableau reduce_content(const EdgeLabeledTableau& t, long long target_size) {
  check_witness_input(t, "reduce_content");
  const long long current = t.label_count();
  if (target_size < t.shape().box_count() || target_size > current)
    throw invalid_input("reduce_content target size out of range");
  EdgeLabeledTableau out = t;
  for (long long size = current; size > target_size; --size)
    out = remove_last_edge_label(out).first;
  return out;
}

} // namespace schubert
