#pragma once

// Increasing ordered forests of permutations (parent(i) = nom(i)), Stanley's
// increasing tree of a word, and the Eulerian numbers that count them.

#include <string>
#include <vector>

#include "nomcode/count.hpp"
#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

namespace nomcode {

struct TreeNode {
  int label = 0;
  std::vector<TreeNode> children;  // left to right

  bool operator==(const TreeNode&) const = default;
};

/// Ordered forest, trees sorted by root label, siblings in increasing order.
struct IncreasingForest {
  std::vector<TreeNode> trees;

  std::size_t node_count() const;
  bool operator==(const IncreasingForest&) const = default;
};

/// Forest of the parent function: i is a root iff parent[i-1] == i, otherwise
/// a child of parent[i-1] < i. Sibling order is increasing.
IncreasingForest forest_from_parents(const std::vector<int>& parent);

/// parent(i) = nom(i); one tree per cycle, rooted at the cycle minimum.
IncreasingForest forest_from_permutation(const Permutation& p);
/// parent(i) = f_i; the same forest as forest_from_permutation(phi(f)).
IncreasingForest forest_from_code(const SubexceedantFunction& f);

/// Postorder of each tree, in root order. For the tree of a cyclic
/// permutation the word, read as a cycle, is the permutation.
std::vector<std::vector<int>> postorder_by_tree(const IncreasingForest& forest);
/// Concatenated per-tree postorders. Multi-tree forests are an extension of
/// the single-cycle case: each tree contributes the cycle it came from.
std::vector<int> postorder(const IncreasingForest& forest);

/// Adds node n = node_count() + 1 as the last child of i. For the tree of a
/// cyclic sigma on [n-1] this is the tree of sigma . (i, n).
IncreasingForest extend_with_max(const IncreasingForest& forest, int i);

/// Stanley's tree on {0, 1, ..., n}: node i hangs below the rightmost letter
/// j < i preceding i in w, or below the root 0. Returned rooted at label 0.
TreeNode stanley_tree(const Permutation& w);

/// The nom tree of the cycle (0, w_n, w_{n-1}, ..., w_1). The cycle is
/// built on [n+1] with every label shifted up by one, then shifted back.
TreeNode nom_tree_of_reversed_cycle(const Permutation& w);

/// Serialization of the unordered tree: children sorted by (smallest label in
/// their subtree, label). Equal strings mean equal unordered trees.
std::string canonical_form(const TreeNode& tree);

int leaf_count(const IncreasingForest& forest);      // childless non-roots
int internal_count(const IncreasingForest& forest);  // nodes with children
/// Internal nodes plus roots of singleton trees.
int internal_or_singleton_root_count(const IncreasingForest& forest);

/// Nodes, parent -> child edges with sibling index `order=k` (1-based).
std::string to_dot(const IncreasingForest& forest);

/// A(n, k): permutations of [n] with k descents.
class EulerianTable {
 public:
  explicit EulerianTable(int max_n);

  int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  /// Requires 0 <= n <= max_n and 0 <= k < max(n, 1).
  const Count& at(int n, int k) const;

 private:
  std::vector<std::vector<Count>> rows_;
};

/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
Count eulerian(int n, int k);

inline constexpr int kForestCountBound = 8;

/// Increasing trees on n_plus_1 nodes with k internal nodes, counted over the
/// trees of all cyclic permutations of [n_plus_1].
Count count_trees_by_internal_nodes(int n_plus_1, int k,
                                    int max_n = kForestCountBound);
/// Forests on n nodes with k leaves, over the forests of all of S_n.
Count count_forests_by_leaves(int n, int k, int max_n = kForestCountBound);
/// Forests on n nodes with k nodes that are internal or singleton roots.
Count count_forests_by_internal_or_singleton_roots(
    int n, int k, int max_n = kForestCountBound);

}  // namespace nomcode
