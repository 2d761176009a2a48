#include "vlab/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vlab/error.hpp"

namespace vlab {

namespace {

using ChildLists = std::vector<std::vector<int>>;

std::vector<int> preorder_of(const ChildLists& children) {
  std::vector<int> order;
  order.reserve(children.size());
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& kids = children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

// Inserts leaf `label` into corner `corner` (preorder vertex, then slot).
void insert_at_corner(ChildLists& children, int label, std::size_t corner) {
  for (int v : preorder_of(children)) {
    const std::size_t slots = children[v].size() + 1;
    if (corner < slots) {
      children[v].insert(children[v].begin() + static_cast<std::ptrdiff_t>(corner), label);
      return;
    }
    corner -= slots;
  }
  throw DomainError("corner index out of range");
}

void visit_trees(ChildLists& children, int next_label, int n,
                 const std::function<void(const IncOrderedTree&)>& visit) {
  if (next_label > n) {
    visit(IncOrderedTree(children));
    return;
  }
  children.emplace_back();
  for (int v : preorder_of(children)) {
    if (v == next_label) continue;
    for (std::size_t slot = 0; slot <= children[v].size(); ++slot) {
      children[v].insert(children[v].begin() + static_cast<std::ptrdiff_t>(slot), next_label);
      visit_trees(children, next_label + 1, n, visit);
      children[v].erase(children[v].begin() + static_cast<std::ptrdiff_t>(slot));
    }
  }
  children.pop_back();
}

void walk(const IncOrderedTree& t, int v, MultisetPermutation& out) {
  for (int c : t.children(v)) {
    out.push_back(c);
    walk(t, c, out);
    out.push_back(c);
  }
}

}  // namespace

IncOrderedTree::IncOrderedTree(std::vector<std::vector<int>> children) : children_(std::move(children)) {
  if (children_.empty()) throw DomainError("tree needs a root");
  const int n = static_cast<int>(children_.size()) - 1;
  std::vector<int> parent_count(children_.size(), 0);
  for (int v = 0; v <= n; ++v) {
    for (int c : children_[v]) {
      if (c < 1 || c > n) throw DomainError("tree label out of range: " + std::to_string(c));
      if (c <= v) throw DomainError("child " + std::to_string(c) + " does not exceed parent " + std::to_string(v));
      if (++parent_count[c] > 1) throw DomainError("label " + std::to_string(c) + " has two parents");
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (parent_count[v] == 0) throw DomainError("label " + std::to_string(v) + " is missing");
  }
}

int IncOrderedTree::parent(int v) const {
  for (std::size_t u = 0; u < children_.size(); ++u) {
    if (std::find(children_[u].begin(), children_[u].end(), v) != children_[u].end()) {
      return static_cast<int>(u);
    }
  }
  throw DomainError("vertex " + std::to_string(v) + " has no parent");
}

std::vector<int> IncOrderedTree::preorder() const { return preorder_of(children_); }

void for_each_tree(std::size_t n, const std::function<void(const IncOrderedTree&)>& visit) {
  ChildLists children(1);
  visit_trees(children, 1, static_cast<int>(n), visit);
}

TreeStream::TreeStream(std::size_t n) : n_(n), choices_(n, 0) {}

std::optional<IncOrderedTree> TreeStream::next() {
  if (exhausted_) return std::nullopt;
  ChildLists children(1);
  for (std::size_t m = 1; m <= n_; ++m) {
    children.emplace_back();
    insert_at_corner(children, static_cast<int>(m), choices_[m - 1]);
  }
  std::size_t digit = n_;
  while (digit > 0) {
    --digit;
    if (++choices_[digit] < 2 * (digit + 1) - 1) break;
    choices_[digit] = 0;
    if (digit == 0) exhausted_ = true;
  }
  if (n_ == 0) exhausted_ = true;
  return IncOrderedTree(std::move(children));
}

std::vector<IncOrderedTree> enumerate_trees(std::size_t n) {
  std::vector<IncOrderedTree> out;
  for_each_tree(n, [&out](const IncOrderedTree& t) { out.push_back(t); });
  return out;
}

namespace {

void bracket(const IncOrderedTree& t, int v, std::string& out) {
  out += std::to_string(v);
  const auto& kids = t.children(v);
  if (kids.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ' ';
    bracket(t, kids[i], out);
  }
  out += ')';
}

}  // namespace

std::string tree_to_string(const IncOrderedTree& t) {
  std::string out;
  bracket(t, 0, out);
  return out;
}

bool has_increasing_leaves(const IncOrderedTree& t) {
  int last_leaf = 0;
  for (int v : t.preorder()) {
    if (v == 0 || !t.children(v).empty()) continue;
    if (v < last_leaf) return false;
    last_leaf = v;
  }
  return true;
}

std::size_t root_degree(const IncOrderedTree& t) { return t.children(0).size(); }

MultisetPermutation janson(const IncOrderedTree& t) {
  MultisetPermutation out;
  out.reserve(2 * t.size());
  walk(t, 0, out);
  return out;
}

IncOrderedTree janson_inverse(const MultisetPermutation& s) {
  if (!is_stirling(s)) throw DomainError("not a Stirling permutation");
  ChildLists children(s.size() / 2 + 1);
  std::vector<int> path{0};
  for (int v : s) {
    if (path.back() == v) {
      path.pop_back();
    } else {
      children[path.back()].push_back(v);
      path.push_back(v);
    }
  }
  return IncOrderedTree(std::move(children));
}

ChildMap as_child_map(const IncOrderedTree& t) {
  ChildMap out;
  for (std::size_t v = 0; v <= t.size(); ++v) out[static_cast<int>(v)] = t.children(static_cast<int>(v));
  return out;
}

ChildMap prune(const ChildMap& tree, int v) {
  if (v == 0) throw DomainError("cannot prune the root");
  auto self = tree.find(v);
  if (self == tree.end()) throw DomainError("vertex " + std::to_string(v) + " is not in the tree");
  ChildMap out = tree;
  for (auto& [u, kids] : out) {
    auto it = std::find(kids.begin(), kids.end(), v);
    if (it == kids.end()) continue;
    it = kids.erase(it);
    kids.insert(it, self->second.begin(), self->second.end());
    break;
  }
  out.erase(v);
  return out;
}

ChildMap prune(const IncOrderedTree& t, int v) { return prune(as_child_map(t), v); }

void validate_code(const TreeCode& c) {
  const std::size_t n = c.a.size();
  if (n == 0) {
    if (!c.h.empty()) throw DomainError("invalid code: h must be empty when a is empty");
    return;
  }
  std::size_t partial = 0;
  for (std::size_t m = 0; m < n; ++m) {
    partial += c.a[m];
    if (partial < m + 1) {
      throw DomainError("invalid code: a_0 + ... + a_" + std::to_string(m) + " = " + std::to_string(partial) +
                        " < " + std::to_string(m + 1));
    }
  }
  if (partial != n) {
    throw DomainError("invalid code: a_0 + ... + a_" + std::to_string(n - 1) + " = " + std::to_string(partial) +
                      " != " + std::to_string(n));
  }
  std::size_t before = c.a[0];  // a_0 + ... + a_{i-1}
  for (std::size_t i = 1; i < n; ++i) {
    const auto it = c.h.find(i);
    if (c.a[i] >= 1) {
      if (it == c.h.end()) throw DomainError("invalid code: h_" + std::to_string(i) + " is missing");
      const std::size_t bound = before - (i - 1);
      if (it->second < 1 || it->second > bound) {
        throw DomainError("invalid code: h_" + std::to_string(i) + " = " + std::to_string(it->second) +
                          " outside [1, " + std::to_string(bound) + "]");
      }
    } else if (it != c.h.end()) {
      throw DomainError("invalid code: h_" + std::to_string(i) + " given but a_" + std::to_string(i) + " = 0");
    }
    before += c.a[i];
  }
  for (const auto& [i, value] : c.h) {
    if (i == 0 || i >= n) throw DomainError("invalid code: h_" + std::to_string(i) + " out of index range");
  }
}

TreeCode tree_code(const IncOrderedTree& t) {
  const std::size_t n = t.size();
  TreeCode code;
  code.a.resize(n);
  for (std::size_t i = 0; i < n; ++i) code.a[i] = t.children(static_cast<int>(i)).size();
  std::vector<int> roots = t.children(0);
  for (std::size_t i = 1; i < n; ++i) {
    const int v = static_cast<int>(i);
    auto it = std::find(roots.begin(), roots.end(), v);
    const auto position = static_cast<std::size_t>(it - roots.begin());
    const auto& kids = t.children(v);
    if (!kids.empty()) code.h[i] = position + 1;
    it = roots.erase(it);
    roots.insert(it, kids.begin(), kids.end());
  }
  return code;
}

IncOrderedTree tree_from_code(const TreeCode& c) {
  validate_code(c);
  const std::size_t n = c.a.size();
  ChildLists children(n + 1);
  if (n == 0) return IncOrderedTree(std::move(children));
  std::vector<int> roots{static_cast<int>(n)};
  for (std::size_t i = n - 1; i >= 1; --i) {
    const int v = static_cast<int>(i);
    if (c.a[i] == 0) {
      roots.insert(roots.begin(), v);
      continue;
    }
    const auto start = roots.begin() + static_cast<std::ptrdiff_t>(c.h.at(i) - 1);
    const auto stop = start + static_cast<std::ptrdiff_t>(c.a[i]);
    children[i].assign(start, stop);
    roots.insert(roots.erase(start, stop), v);
  }
  children[0] = std::move(roots);
  return IncOrderedTree(std::move(children));
}

}  // namespace vlab
