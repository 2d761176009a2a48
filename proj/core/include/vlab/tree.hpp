#pragma once

// Increasing ordered trees on labels 0..n (root 0, each child larger than its
// parent), the increasing-leaves predicate, Janson's walk-around bijection to
// Stirling permutations, pruning, and the (a, h) code shared with
// valley-marked Dyck paths.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlab/stirges.hpp"

namespace vlab {

class IncOrderedTree {
 public:
  /// The size-0 tree (root only).
  IncOrderedTree() : children_(1) {}

  /// children[v] lists the children of vertex v left to right. Throws
  /// DomainError unless the lists describe a tree rooted at 0 covering labels
  /// 0..children.size()-1 with every child larger than its parent.
  explicit IncOrderedTree(std::vector<std::vector<int>> children);

  /// Number of edges.
  std::size_t size() const { return children_.size() - 1; }
  const std::vector<int>& children(int v) const { return children_.at(v); }
  const std::vector<std::vector<int>>& child_lists() const { return children_; }
  int parent(int v) const;

  /// Vertices in preorder (parent before children, children left to right).
  std::vector<int> preorder() const;

  auto operator<=>(const IncOrderedTree&) const = default;

 private:
  std::vector<std::vector<int>> children_;
};

/// Visits every size-n increasing ordered tree once ((2n-1)!! of them).
/// Vertex m is inserted as a leaf into one of the 2m-1 corners of the tree on
/// 0..m-1; corners are ordered by vertex preorder, then slot left to right.
void for_each_tree(std::size_t n, const std::function<void(const IncOrderedTree&)>& visit);

/// Resumable stream over the same sequence as for_each_tree.
class TreeStream {
 public:
  explicit TreeStream(std::size_t n);
  std::optional<IncOrderedTree> next();

 private:
  std::size_t n_;
  std::vector<std::size_t> choices_;  // choices_[m-1] in [0, 2m-1)
  bool exhausted_ = false;
};

std::vector<IncOrderedTree> enumerate_trees(std::size_t n);

/// Bracket text, "0(2(3 4) 6 1(7 5(8) 9))".
std::string tree_to_string(const IncOrderedTree& t);

bool has_increasing_leaves(const IncOrderedTree& t);
std::size_t root_degree(const IncOrderedTree& t);

/// Clockwise walk recording each edge label on the way down and on the way
/// back up.
MultisetPermutation janson(const IncOrderedTree& t);

/// Throws DomainError("not a Stirling permutation") on invalid input.
IncOrderedTree janson_inverse(const MultisetPermutation& s);

/// Child lists keyed by label, root 0. Pruning leaves gaps in the label set,
/// so pruned trees use this looser form.
using ChildMap = std::map<int, std::vector<int>>;

ChildMap as_child_map(const IncOrderedTree& t);

/// Deletes v and its parent edge and splices v's children, in order, into
/// v's former slot among its siblings. Throws DomainError for v == 0 or an
/// absent label.
ChildMap prune(const ChildMap& tree, int v);
ChildMap prune(const IncOrderedTree& t, int v);

/// The (a, h) code: a[i] = outdegree of vertex i (0 <= i < n); h[i] = the
/// 1-based position of i among the root's children after pruning 1..i-1,
/// recorded for 1 <= i < n with a[i] >= 1.
struct TreeCode {
  std::vector<std::size_t> a;
  std::map<std::size_t, std::size_t> h;

  auto operator<=>(const TreeCode&) const = default;
};

/// Throws DomainError("invalid code: ...") naming the first failing
/// inequality.
void validate_code(const TreeCode& c);

TreeCode tree_code(const IncOrderedTree& t);
IncOrderedTree tree_from_code(const TreeCode& c);

}  // namespace vlab
