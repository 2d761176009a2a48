#pragma once

// Valley-marked Dyck paths and their (a, h) code, which coincides with the
// code of increasing-leaf trees.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/tree.hpp"

namespace vlab {

/// A Dyck path over {U, D} with one mark per valley. A valley is keyed by the
/// 1-based index i of its D step; its mark h is the height of the marked
/// point above y = -1, so 1 <= h <= (valley height) + 1.
class VMDyckPath {
 public:
  /// The empty path.
  VMDyckPath() = default;
  /// Throws DomainError on a non-Dyck word or a missing, extra or
  /// out-of-range mark.
  VMDyckPath(std::string steps, std::map<std::size_t, std::size_t> marks);

  /// Parses "UUDD" or "UDUD 1:1" (marks as i:h, space separated).
  static VMDyckPath parse(std::string_view text);

  std::size_t semilength() const { return steps_.size() / 2; }
  const std::string& steps() const { return steps_; }
  const std::map<std::size_t, std::size_t>& marks() const { return marks_; }

  /// D-indices of the valleys, increasing.
  std::vector<std::size_t> valleys() const;
  /// Height of the path just after its i-th D step.
  std::size_t height_after_down(std::size_t i) const;

  std::string to_string() const;

  auto operator<=>(const VMDyckPath&) const = default;

 private:
  std::string steps_;
  std::map<std::size_t, std::size_t> marks_;
};

/// Dyck words in lexicographic order (U < D), marks varying fastest with the
/// last valley changing first.
void for_each_path(std::size_t n, const std::function<void(const VMDyckPath&)>& visit);
std::vector<VMDyckPath> enumerate_paths(std::size_t n);

/// Number of leading U steps; 0 for the empty path.
std::size_t first_ascent(const VMDyckPath& p);

TreeCode path_code(const VMDyckPath& p);
VMDyckPath path_from_code(const TreeCode& c);

IncOrderedTree path_to_tree(const VMDyckPath& p);
VMDyckPath tree_to_path(const IncOrderedTree& t);

}  // namespace vlab
