#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/skew_shape.hpp"
#include "schubert/tpolynomial.hpp"

namespace schubert {

/// An edge-labeled tableau: a total filling of the skew boxes by positive
/// integers plus label sets (strictly increasing, no repeats) on some of
/// the labelable gaps.
///
/// The constructor checks structure only (labels positive, box labels
/// total on the skew boxes, gap sets strictly increasing on labelable
/// positions).  Semistandardness, latticeness and the too-high condition
/// are separate predicates, because the enumeration and the procedures
/// need to talk about tableaux that fail them.
class EdgeLabeledTableau {
public:
  using Cell = std::pair<int, int>; // (row, col), 1-based matrix coordinates
  using BoxMap = std::map<Cell, int>;
  using EdgeMap = std::map<GapPosition, std::vector<int>>;

  EdgeLabeledTableau(SkewShape shape, BoxMap box_labels, EdgeMap edge_labels);

  const SkewShape& shape() const { return shape_; }
  const BoxMap& boxes() const { return boxes_; }
  const EdgeMap& edges() const { return edges_; }

  /// Label of the skew box (i, j); throws if (i, j) is not a skew box.
  int box_label(int i, int j) const;
  /// Labels at the gap (empty vector when unlabeled).
  const std::vector<int>& edge_labels(GapPosition g) const;

  int edge_label_count() const;
  /// Box labels plus edge labels.
  long long label_count() const;

  bool operator==(const EdgeLabeledTableau&) const = default;

private:
  SkewShape shape_;
  BoxMap boxes_;
  EdgeMap edges_;
};

/// One letter of a reading word, annotated with its source so the word
/// determines the tableau.
struct WordLetter {
  int letter = 0;
  bool from_edge = false;
  int row = 0;
  int col = 0;
  bool operator==(const WordLetter&) const = default;
};
using Word = std::vector<WordLetter>;

/// Column reading word: columns right to left; within a column, top to
/// bottom: box (1,j), then the gap (1,j) labels in increasing order,
/// then box (2,j), and so on.
Word reading_word(const EdgeLabeledTableau& t);

/// Just the letters of the reading word.
std::vector<int> word_letters(const Word& w);

/// Rebuilds the tableau from an annotated word on the given shape.
/// Inverse of reading_word; used by the removal procedure and by the
/// injectivity property test.
EdgeLabeledTableau tableau_from_word(const SkewShape& shape, const Word& w);

/// The semistandard contract: box labels weakly increase along rows,
/// strictly increase down columns, and in each column the chain
/// box(i,j) < gap(i,j) labels < box(i+1,j) is strict.
bool is_semistandard(const EdgeLabeledTableau& t);

/// True iff every prefix of the reading word has at least as many l's as
/// (l+1)'s, for every l.
bool is_lattice(const EdgeLabeledTableau& t);
bool is_lattice_word(const std::vector<int>& letters);

/// A label l is too high iff it sits weakly above the upper edge of a
/// box in row l: a box label in row i < l, or an edge label at gap (i,j)
/// with i < l.
struct TooHighLabel {
  int letter = 0;
  bool from_edge = false;
  int row = 0;
  int col = 0;
  bool operator==(const TooHighLabel&) const = default;
};
std::vector<TooHighLabel> too_high_labels(const EdgeLabeledTableau& t);

/// Count of each label value over boxes and edges combined; entry k is
/// the number of letters k+1.  Trailing zeros trimmed.
std::vector<int> content(const EdgeLabeledTableau& t);

/// content() as a Partition; throws invalid_input if the counts are not
/// weakly decreasing.
Partition content_partition(const EdgeLabeledTableau& t);

/// Semistandard, lattice and nothing too high: the tableaux of the rule.
bool is_witness(const EdgeLabeledTableau& t);

/// The factor contributed by one edge label l at gap (i, j):
///
///   t_p - t_q  with  p = r + j - i,  q = p + (i - l + 1 + rho),
///
/// where r is the shape's ambient row count, the hosting box of the gap
/// is the box (i, j) directly above the edge, and rho counts the
/// occurrences of l (box or edge) strictly to the right, i.e. in columns
/// > j.  See docs/weight-convention.md for the calibration of this
/// convention.  Throws internal_error if the factor fails p < q, which
/// cannot happen for labels that are not too high.
TPolynomial edge_factor(const EdgeLabeledTableau& t, GapPosition g, int letter);

/// Product of edge_factor over all edge labels; boxes contribute 1.
/// Requires a witnessing tableau (semistandard, lattice, nothing too
/// high); throws invalid_input otherwise.
TPolynomial weight(const EdgeLabeledTableau& t);

} // namespace schubert
