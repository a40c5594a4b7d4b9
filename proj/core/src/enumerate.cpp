#include "schubert/enumerate.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

struct Site {
  bool is_box = false;
  int row = 0;
  int col = 0;
  bool new_column = false;
  int capacity = 0; // max letters this site can host
};

struct Dfs {
  const SkewShape& shape;
  std::function<bool(const EdgeLabeledTableau&)> const& visit;
  std::vector<Site> sites;
  std::vector<long long> cap_suffix;  // total capacity of sites k..end
  std::vector<int> boxes_suffix;      // box sites among k..end
  std::vector<int> target;            // target[l-1] = multiplicity of letter l
  std::vector<int> used;
  long long remaining = 0;
  int max_letter = 0;
  std::vector<std::vector<int>> box_label;    // [row][col], 0 = unset
  std::vector<std::vector<int>> gap_letters;  // per gap site index
  std::vector<int> gap_site_of;               // site index -> gap storage index

  bool stopped = false;

  bool letter_allowed(int v) const {
    if (v > max_letter || used[v - 1] >= target[v - 1]) return false;
    // Lattice prefix: after appending, #v must not exceed #(v-1).
    if (v >= 2 && used[v - 1] + 1 > used[v - 2]) return false;
    return true;
  }

  void place(int v) {
    ++used[v - 1];
    --remaining;
  }
  void unplace(int v) {
    --used[v - 1];
    ++remaining;
  }

  bool emit() {
    EdgeLabeledTableau::BoxMap boxes;
    EdgeLabeledTableau::EdgeMap edges;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const Site& s = sites[k];
      if (s.is_box) {
        boxes[{s.row, s.col}] = box_label[s.row][s.col];
      } else if (!gap_letters[gap_site_of[k]].empty()) {
        edges[{s.row, s.col}] = gap_letters[gap_site_of[k]];
      }
    }
    EdgeLabeledTableau t(shape, std::move(boxes), std::move(edges));
    if (!visit(t)) {
      stopped = true;
      return false;
    }
    return true;
  }

  // chain = largest label already placed above in the current column.
  bool run(std::size_t k, int chain) {
    if (k == sites.size()) {
      if (remaining == 0) return emit();
      return true;
    }
    if (remaining > cap_suffix[k]) return true;
    if (remaining < boxes_suffix[k]) return true;
    const Site& s = sites[k];
    if (s.new_column) chain = 0;
    if (s.is_box) {
      int hi = std::min(s.row, max_letter);
      if (shape.is_skew_box(s.row, s.col + 1))
        hi = std::min(hi, box_label[s.row][s.col + 1]);
      for (int v = chain + 1; v <= hi; ++v) {
        if (!letter_allowed(v)) continue;
        place(v);
        box_label[s.row][s.col] = v;
        const bool keep_going = run(k + 1, v);
        box_label[s.row][s.col] = 0;
        unplace(v);
        if (!keep_going) return false;
      }
      return true;
    }
    return run_gap(k, chain, chain + 1);
  }

  // Chooses the (possibly empty) ascending label set of the gap site k.
  // "No further label" is tried before each candidate next letter.
  bool run_gap(std::size_t k, int chain, int next_min) {
    if (!run(k + 1, chain)) return false;
    const Site& s = sites[k];
    const int hi = std::min(s.row, max_letter);
    for (int v = std::max(next_min, chain + 1); v <= hi; ++v) {
      if (!letter_allowed(v)) continue;
      place(v);
      gap_letters[gap_site_of[k]].push_back(v);
      const bool keep_going = run_gap(k, v, v + 1);
      gap_letters[gap_site_of[k]].pop_back();
      unplace(v);
      if (!keep_going) return false;
    }
    return true;
  }
};

} // namespace

bool enumerate_witnesses(const SkewShape& shape, const Partition& content,
                         const std::function<bool(const EdgeLabeledTableau&)>& visit,
                         const EnumerateOptions& options) {
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  const long long total = content.size();
  if (total < shape.box_count()) return true;
  if (!options.allow_edge_labels && total != shape.box_count()) return true;

  Dfs dfs{shape, visit, {}, {}, {}, {}, {}, 0, 0, {}, {}, {}};
  dfs.max_letter = content.length();
  dfs.target = content.parts();
  dfs.used.assign(dfs.target.size(), 0);
  dfs.remaining = total;
  dfs.box_label.assign(outer.length() + 2, std::vector<int>(outer.width() + 2, 0));

  const int width = std::max(options.width, outer.width());
  int last_col = -1;
  for (int j = width; j >= 1; --j) {
    for (int i = 1; i <= outer.col_length(j); ++i) {
      if (shape.is_skew_box(i, j)) {
        dfs.sites.push_back({true, i, j, j != last_col, 1});
        last_col = j;
      }
      if (options.allow_edge_labels && inner.col_length(j) <= i) {
        dfs.sites.push_back(
            {false, i, j, j != last_col, std::min(i, dfs.max_letter)});
        last_col = j;
      }
    }
  }
  const std::size_t count = dfs.sites.size();
  dfs.cap_suffix.assign(count + 1, 0);
  dfs.boxes_suffix.assign(count + 1, 0);
  for (std::size_t k = count; k-- > 0;) {
    dfs.cap_suffix[k] = dfs.cap_suffix[k + 1] + dfs.sites[k].capacity;
    dfs.boxes_suffix[k] = dfs.boxes_suffix[k + 1] + (dfs.sites[k].is_box ? 1 : 0);
  }
  dfs.gap_site_of.assign(count, -1);
  int gap_count = 0;
  for (std::size_t k = 0; k < count; ++k)
    if (!dfs.sites[k].is_box) dfs.gap_site_of[k] = gap_count++;
  dfs.gap_letters.assign(gap_count, {});

  dfs.run(0, 0);
  return !dfs.stopped;
}

std::optional<EdgeLabeledTableau> first_witness(const SkewShape& shape, const Partition& content,
                                                const EnumerateOptions& options) {
  std::optional<EdgeLabeledTableau> found;
  enumerate_witnesses(
      shape, content,
      [&](const EdgeLabeledTableau& t) {
        found = t;
        return false;
      },
      options);
  return found;
}

std::vector<EdgeLabeledTableau> all_witnesses(const SkewShape& shape, const Partition& content,
                                              const EnumerateOptions& options) {
  std::vector<EdgeLabeledTableau> out;
  enumerate_witnesses(
      shape, content,
      [&](const EdgeLabeledTableau& t) {
        out.push_back(t);
        return true;
      },
      options);
  return out;
}

} // namespace schubert
