#include "schubert/skew_shape.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

SkewShape::SkewShape(Partition outer, Partition inner, int rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(rows) {
  if (!contains(inner_, outer_))
    throw invalid_input("skew shape requires inner contained in outer");
  if (rows_ == 0) rows_ = outer_.length();
  if (rows_ < outer_.length())
    throw invalid_input("skew shape rows must be at least length(outer)");
}

bool SkewShape::in_outer(int i, int j) const {
  return i >= 1 && j >= 1 && j <= outer_.part(i);
}

bool SkewShape::in_inner(int i, int j) const {
  return i >= 1 && j >= 1 && j <= inner_.part(i);
}

bool SkewShape::gap_labelable(GapPosition g) const {
  if (g.row < 1 || g.col < 1) return false;
  return inner_.col_length(g.col) <= g.row && g.row <= outer_.col_length(g.col);
}

std::vector<GapPosition> SkewShape::legal_gaps() const {
  std::vector<GapPosition> out;
  for (int j = 1; j <= outer_.width(); ++j) {
    const int lo = std::max(1, inner_.col_length(j));
    const int hi = outer_.col_length(j);
    for (int i = lo; i <= hi; ++i) out.push_back({i, j});
  }
  return out;
}

} // namespace schubert
