#include "nomcode/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace nomcode {

Permutation decode_transpositions(const SubexceedantFunction& f) {
  const int n = f.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (int i = 1; i <= n; ++i) {
      if (y == i)
        y = f(i);
      else if (y == f(i))
        y = i;
    }
    w[x - 1] = y;
  }
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> insertion_trace(const SubexceedantFunction& f) {
  const int n = f.size();
  std::vector<std::vector<int>> trace;
  std::vector<int> word;
  // position_of[v] is the 0-based index of letter v in word.
  std::vector<std::size_t> position_of(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int v = f(i);
    if (v == i) {
      position_of[i] = word.size();
      word.push_back(i);
    } else {
      const std::size_t at = position_of[v];
      word[at] = i;
      position_of[i] = at;
      position_of[v] = word.size();
      word.push_back(v);
    }
    trace.push_back(word);
  }
  return trace;
}

Permutation decode_insertion(const SubexceedantFunction& f) {
  if (f.empty()) return Permutation();
  return Permutation(insertion_trace(f).back());
}

CycleDecomposition decode_cycle_insertion_cycles(const SubexceedantFunction& f) {
  const int n = f.size();
  CycleDecomposition c;
  std::vector<std::size_t> cycle_of(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int v = f(i);
    if (v == i) {
      cycle_of[i] = c.cycles.size();
      c.cycles.push_back({i});
      continue;
    }
    auto& cycle = c.cycles[cycle_of[v]];
    cycle.insert(std::find(cycle.begin(), cycle.end(), v), i);
    cycle_of[i] = cycle_of[v];
  }
  return c;
}

Permutation decode_cycle_insertion(const SubexceedantFunction& f) {
  return from_cycles(decode_cycle_insertion_cycles(f));
}

std::vector<SelectionStep> selection_sort_trace(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w = p.word();
  std::vector<int> position_of(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) position_of[w[x - 1]] = x;
  std::vector<SelectionStep> steps;
  for (int i = n; i >= 1; --i) {
    const int v = w[i - 1];
    steps.push_back({i, w, v});
    // sigma . (i, sigma(i)): exchange the letters i and v.
    const int pos_i = position_of[i];
    std::swap(w[pos_i - 1], w[i - 1]);
    position_of[v] = pos_i;
    position_of[i] = i;
  }
  return steps;
}

SubexceedantFunction encode_selection_sort(const Permutation& p) {
  std::vector<int> f(static_cast<std::size_t>(p.size()));
  for (const auto& step : selection_sort_trace(p))
    f[step.i - 1] = step.code_value;
  return SubexceedantFunction(std::move(f));
}

SubexceedantFunction encode_nom(const Permutation& p) {
  std::vector<int> f(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) f[i - 1] = nom(p, i);
  return SubexceedantFunction(std::move(f));
}

GridPointSet::GridPointSet(std::vector<int> heights)
    : heights_(std::move(heights)) {
  for (int y : heights_)
    if (y < 1 || y > size())
      throw std::invalid_argument("GridPointSet: point outside [n]x[n]");
}

GridPointSet GridPointSet::graph_of(const Permutation& p) {
  return GridPointSet(p.word());
}

GridPointSet GridPointSet::graph_of(const SubexceedantFunction& f) {
  return GridPointSet(f.word());
}

std::vector<std::pair<int, int>> GridPointSet::points() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= size(); ++x) out.emplace_back(x, height(x));
  return out;
}

bool GridPointSet::is_permutation_graph() const {
  std::vector<bool> seen(static_cast<std::size_t>(size()) + 1, false);
  for (int y : heights_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool GridPointSet::is_subexceedant_graph() const {
  for (int x = 1; x <= size(); ++x)
    if (height(x) > x) return false;
  return true;
}

int GridPointSet::leftmost_on_row(int y, int skip_column) const {
  for (int x = 1; x <= size(); ++x)
    if (x != skip_column && height(x) == y) return x;
  return 0;
}

void GridPointSet::set_height(int x, int y) {
  if (x < 1 || x > size() || y < 1 || y > size())
    throw std::out_of_range("GridPointSet::set_height: outside [n]x[n]");
  heights_[x - 1] = y;
}

std::string to_string(const GridPointSet& g) {
  std::string out;
  for (auto [x, y] : g.points())
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  return out;
}

std::vector<GridPointSet> grid_encode_trace(const GridPointSet& permutation_graph) {
  if (!permutation_graph.is_permutation_graph())
    throw std::invalid_argument("grid_encode: not a permutation graph");
  GridPointSet g = permutation_graph;
  std::vector<GridPointSet> trace;
  for (int i = g.size(); i >= 1; --i) {
    const int x = g.leftmost_on_row(i);
    if (x == 0) throw std::logic_error("grid_encode: empty row");
    if (i > x) g.set_height(x, g.height(i));
    trace.push_back(g);
  }
  return trace;
}

GridPointSet grid_encode(const GridPointSet& permutation_graph) {
  auto trace = grid_encode_trace(permutation_graph);
  return trace.empty() ? permutation_graph : trace.back();
}

std::vector<GridPointSet> grid_decode_trace(const GridPointSet& code_graph) {
  if (!code_graph.is_subexceedant_graph())
    throw std::invalid_argument("grid_decode: not a subexceedant graph");
  GridPointSet g = code_graph;
  std::vector<GridPointSet> trace;
  for (int i = 1; i <= g.size(); ++i) {
    const int level = code_graph.height(i);
    const int x = g.leftmost_on_row(level, i);
    // A fixed point f_i = i has nothing to its left on row i; any point to
    // its right already sits at level i, so the move is the identity.
    if (x != 0) g.set_height(x, i);
    trace.push_back(g);
  }
  return trace;
}

GridPointSet grid_decode(const GridPointSet& code_graph) {
  auto trace = grid_decode_trace(code_graph);
  return trace.empty() ? code_graph : trace.back();
}

}  // namespace nomcode
