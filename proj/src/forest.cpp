#include "nomcode/forest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nomcode/codec.hpp"

namespace nomcode {

namespace {

TreeNode build(int label, const std::vector<std::vector<int>>& children) {
  TreeNode node{label, {}};
  for (int c : children[static_cast<std::size_t>(label)])
    node.children.push_back(build(c, children));
  return node;
}

std::size_t count_nodes(const TreeNode& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += count_nodes(c);
  return n;
}

void postorder_into(const TreeNode& t, std::vector<int>& out) {
  for (const auto& c : t.children) postorder_into(c, out);
  out.push_back(t.label);
}

TreeNode* find_node(TreeNode& t, int label) {
  if (t.label == label) return &t;
  for (auto& c : t.children)
    if (auto* hit = find_node(c, label)) return hit;
  return nullptr;
}

void shift_labels(TreeNode& t, int delta) {
  t.label += delta;
  for (auto& c : t.children) shift_labels(c, delta);
}

int subtree_min(const TreeNode& t) {
  int m = t.label;
  for (const auto& c : t.children) m = std::min(m, subtree_min(c));
  return m;
}

void count_kinds(const TreeNode& t, bool is_root, int& leaves, int& internal) {
  if (t.children.empty()) {
    if (!is_root) ++leaves;
    return;
  }
  ++internal;
  for (const auto& c : t.children) count_kinds(c, false, leaves, internal);
}

template <class Pred>
Count count_over_permutations(int n, int max_n, bool cyclic_only, Pred pred) {
  check_bound("forest counts", n, max_n);
  Count total = 0;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (cyclic_only && !is_cyclic(p)) return;
        if (pred(forest_from_permutation(p))) ++total;
      },
      max_n);
  return total;
}

}  // namespace

std::size_t IncreasingForest::node_count() const {
  std::size_t n = 0;
  for (const auto& t : trees) n += count_nodes(t);
  return n;
}

IncreasingForest forest_from_parents(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  std::vector<int> roots;
  for (int i = 1; i <= n; ++i) {
    const int p = parent[i - 1];
    if (p == i)
      roots.push_back(i);
    else if (p >= 1 && p < i)
      children[p].push_back(i);  // i increases, so siblings stay sorted
    else
      throw std::invalid_argument("forest_from_parents: parent(" +
                                  std::to_string(i) + ") not in [1, i]");
  }
  IncreasingForest forest;
  for (int r : roots) forest.trees.push_back(build(r, children));
  return forest;
}

IncreasingForest forest_from_permutation(const Permutation& p) {
  return forest_from_parents(encode_nom(p).word());
}

IncreasingForest forest_from_code(const SubexceedantFunction& f) {
  return forest_from_parents(f.word());
}

std::vector<std::vector<int>> postorder_by_tree(const IncreasingForest& forest) {
  std::vector<std::vector<int>> out;
  for (const auto& t : forest.trees) {
    out.emplace_back();
    postorder_into(t, out.back());
  }
  return out;
}

std::vector<int> postorder(const IncreasingForest& forest) {
  std::vector<int> out;
  for (const auto& t : forest.trees) postorder_into(t, out);
  return out;
}

IncreasingForest extend_with_max(const IncreasingForest& forest, int i) {
  const int n = static_cast<int>(forest.node_count()) + 1;
  if (i < 1 || i >= n)
    throw std::out_of_range("extend_with_max: node " + std::to_string(i) +
                            " not in the forest");
  IncreasingForest out = forest;
  for (auto& t : out.trees) {
    if (auto* node = find_node(t, i)) {
      node->children.push_back(TreeNode{n, {}});
      return out;
    }
  }
  throw std::out_of_range("extend_with_max: node " + std::to_string(i) +
                          " not in the forest");
}

TreeNode stanley_tree(const Permutation& w) {
  const int n = w.size();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int i = w(pos);
    for (int q = pos - 1; q >= 1; --q) {
      if (w(q) < i) {
        parent[i] = w(q);
        break;
      }
    }
  }
  for (int i = 1; i <= n; ++i) children[parent[i]].push_back(i);
  return build(0, children);
}

TreeNode nom_tree_of_reversed_cycle(const Permutation& w) {
  const int n = w.size();
  std::vector<int> cycle{1};
  for (int pos = n; pos >= 1; --pos) cycle.push_back(w(pos) + 1);
  auto forest = forest_from_permutation(from_cycles(CycleDecomposition{{cycle}}));
  TreeNode root = std::move(forest.trees.front());
  shift_labels(root, -1);
  return root;
}

std::string canonical_form(const TreeNode& tree) {
  std::vector<const TreeNode*> kids;
  for (const auto& c : tree.children) kids.push_back(&c);
  std::sort(kids.begin(), kids.end(), [](const TreeNode* a, const TreeNode* b) {
    const int ma = subtree_min(*a), mb = subtree_min(*b);
    return ma != mb ? ma < mb : a->label < b->label;
  });
  std::string s = std::to_string(tree.label);
  if (kids.empty()) return s;
  s += "(";
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (k) s += ",";
    s += canonical_form(*kids[k]);
  }
  return s + ")";
}

int leaf_count(const IncreasingForest& forest) {
  int leaves = 0, internal = 0;
  for (const auto& t : forest.trees) count_kinds(t, true, leaves, internal);
  return leaves;
}

int internal_count(const IncreasingForest& forest) {
  int leaves = 0, internal = 0;
  for (const auto& t : forest.trees) count_kinds(t, true, leaves, internal);
  return internal;
}

int internal_or_singleton_root_count(const IncreasingForest& forest) {
  int singletons = 0;
  for (const auto& t : forest.trees)
    if (t.children.empty()) ++singletons;
  return internal_count(forest) + singletons;
}

std::string to_dot(const IncreasingForest& forest) {
  std::vector<int> labels = postorder(forest);
  std::sort(labels.begin(), labels.end());
  std::string out = "digraph forest {\n";
  for (int v : labels) out += "  " + std::to_string(v) + ";\n";
  std::function<void(const TreeNode&)> edges = [&](const TreeNode& t) {
    for (std::size_t k = 0; k < t.children.size(); ++k)
      out += "  " + std::to_string(t.label) + " -> " +
             std::to_string(t.children[k].label) +
             " [order=" + std::to_string(k + 1) + "];\n";
    for (const auto& c : t.children) edges(c);
  };
  for (const auto& t : forest.trees) edges(t);
  return out + "}\n";
}

EulerianTable::EulerianTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("EulerianTable: negative size");
  rows_.push_back({Count(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    auto get = [&](int k) -> Count {
      return k >= 0 && k < static_cast<int>(prev.size()) ? prev[k] : Count(0);
    };
    std::vector<Count> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) row[k] = (k + 1) * get(k) + (n - k) * get(k - 1);
    rows_.push_back(std::move(row));
  }
}

const Count& EulerianTable::at(int n, int k) const {
  if (n < 0 || n > max_n())
    throw std::out_of_range("EulerianTable::at: n outside the table");
  if (k < 0 || k >= std::max(n, 1))
    throw std::out_of_range("EulerianTable::at: k outside [0, max(n,1))");
  return rows_[n][k];
}

Count eulerian(int n, int k) {
  if (n < 0) throw std::invalid_argument("eulerian: negative n");
  if (k < 0 || k >= std::max(n, 1))
    throw std::out_of_range("eulerian: k outside [0, max(n,1))");
  return EulerianTable(n).at(n, k);
}

Count count_trees_by_internal_nodes(int n_plus_1, int k, int max_n) {
  return count_over_permutations(n_plus_1, max_n, true,
                                 [k](const IncreasingForest& forest) {
                                   return internal_count(forest) == k;
                                 });
}

Count count_forests_by_leaves(int n, int k, int max_n) {
  return count_over_permutations(n, max_n, false,
                                 [k](const IncreasingForest& forest) {
                                   return leaf_count(forest) == k;
                                 });
}

Count count_forests_by_internal_or_singleton_roots(int n, int k, int max_n) {
  return count_over_permutations(
      n, max_n, false, [k](const IncreasingForest& forest) {
        return internal_or_singleton_root_count(forest) == k;
      });
}

}  // namespace nomcode
