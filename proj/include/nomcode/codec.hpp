#pragma once

// The bijection phi: F_n -> S_n, phi(f) = (1,f_1)(2,f_2)...(n,f_n), and its
// inverse (the nom code). Three decoders and two encoders are provided; they
// are independent algorithms and are tested against each other.

#include <string>
#include <utility>
#include <vector>

#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

namespace nomcode {

/// Applies the transpositions (1,f_1), ..., (n,f_n) in turn to every point.
Permutation decode_transpositions(const SubexceedantFunction& f);

/// Starts from "1"; at step i replaces the letter f_i by i and appends f_i.
Permutation decode_insertion(const SubexceedantFunction& f);
/// The words after each insertion step (n words, the last is phi(f)).
std::vector<std::vector<int>> insertion_trace(const SubexceedantFunction& f);

/// Builds the cycles of phi(f): f_i = i opens a singleton cycle (i), and
/// f_i < i inserts i right before f_i in its cycle. The returned cycles are in
/// construction order, not canonical form.
CycleDecomposition decode_cycle_insertion_cycles(const SubexceedantFunction& f);
Permutation decode_cycle_insertion(const SubexceedantFunction& f);

/// phi(f), via the insertion method.
inline Permutation phi(const SubexceedantFunction& f) {
  return decode_insertion(f);
}

/// One iteration of the selection-sort encoder.
struct SelectionStep {
  int i;                  // loop index, n down to 1
  std::vector<int> word;  // working permutation at the start of the step
  int code_value;         // f_i = word(i)
};

/// For i = n..1: f_i = sigma(i), then swap the values i and sigma(i).
SubexceedantFunction encode_selection_sort(const Permutation& p);
std::vector<SelectionStep> selection_sort_trace(const Permutation& p);

/// f_i = nom(p, i).
SubexceedantFunction encode_nom(const Permutation& p);

/// The nom code of p, via the nearest orbital minorant.
inline SubexceedantFunction phi_inverse(const Permutation& p) {
  return encode_nom(p);
}

/// A point set on [n]x[n] with exactly one point per column x; stored as the
/// height of each column.
class GridPointSet {
 public:
  explicit GridPointSet(std::vector<int> heights);

  static GridPointSet graph_of(const Permutation& p);
  static GridPointSet graph_of(const SubexceedantFunction& f);

  int size() const noexcept { return static_cast<int>(heights_.size()); }
  /// y coordinate of the point in column x (1-based).
  int height(int x) const { return heights_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& heights() const noexcept { return heights_; }
  std::vector<std::pair<int, int>> points() const;

  /// One point per row as well.
  bool is_permutation_graph() const;
  /// Every point on or below the diagonal.
  bool is_subexceedant_graph() const;

  /// Leftmost column whose point lies on row y, or 0 if there is none.
  int leftmost_on_row(int y, int skip_column = 0) const;
  void set_height(int x, int y);

  bool operator==(const GridPointSet&) const = default;

 private:
  std::vector<int> heights_;
};

/// "(1,5)(2,4)..." sorted by x.
std::string to_string(const GridPointSet& g);

/// For i = n..1: if the leftmost point on row i lies above the diagonal, lower
/// it to the height of the point in column i. Maps the graph of p to the graph
/// of its nom code. Throws unless the input is a permutation graph.
GridPointSet grid_encode(const GridPointSet& permutation_graph);
/// States after each step i = n, ..., 1 (n entries).
std::vector<GridPointSet> grid_encode_trace(const GridPointSet& permutation_graph);

/// For i = 1..n: move the leftmost point on row f_i other than (i, f_i) up to
/// row i. Maps the graph of f to the graph of phi(f). Throws unless the input
/// is a subexceedant graph.
GridPointSet grid_decode(const GridPointSet& code_graph);
std::vector<GridPointSet> grid_decode_trace(const GridPointSet& code_graph);

}  // namespace nomcode
