#pragma once

// The chain of bijections between (1-23-4)-avoiders, avoider configurations,
// Stirling configurations, increasing-plateau Stirling permutations and
// increasing-leaf trees, with every stage exposed for tracing and testing.

#include <string>
#include <utility>
#include <vector>

#include "vlab/config.hpp"
#include "vlab/perm.hpp"
#include "vlab/stirges.hpp"
#include "vlab/tree.hpp"

namespace vlab {

/// (stage, text) pairs in the order they were produced.
struct ChainTrace {
  std::vector<std::pair<std::string, std::string>> stages;

  void add(std::string stage, std::string value) { stages.emplace_back(std::move(stage), std::move(value)); }
  /// Text of the first stage with this label; throws DomainError if absent.
  const std::string& at(const std::string& stage) const;
};

/// Blocks grouped by LRMin segment.
using Segments = std::vector<Blocks>;

/// "23 / 4 21 5 | 6 25 24 13 7 / ..." (blocks by " | ", segments by " / ").
std::string segments_to_string(const Segments& s);

/// Half-open span of positions [start, stop) in the permutation.
struct Overline {
  std::size_t start = 0;
  std::size_t stop = 0;
};

namespace chain {

/// Step 1: overlines in creation order (left to right).
std::vector<Overline> overlines(const Permutation& p);
/// Bracketed text of the overline structure, "[23] / [4 21 [6 ...] 5] / ...".
std::string overlines_to_string(const Permutation& p);

Segments extract_blocks(const Permutation& p);     // Step 2
Permutation coalesce(const Segments& s);           // Step 2 inverse
Segments swap_first_third(Segments s);              // Step 3, self-inverse
Segments sort_blocks_decreasing(Segments s);        // Step 4
Segments unsort_blocks(Segments s);                 // Step 4 inverse
Segments order_by_first_entry(Segments s);          // Step 5
Segments restore_block_order(Segments s);           // Step 5 inverse
Segments link(Segments s);                          // Step 6
Segments unlink(Segments s);                        // Step 6 inverse
TwoConfig merge(const Segments& s, int n);          // Step 7
Segments split(const TwoConfig& c);                 // Step 7 inverse

}  // namespace chain

/// Requires a (1-23-4)-avoider with n >= 1.
TwoConfig p_to_a(const Permutation& p, ChainTrace* trace = nullptr);
Permutation a_to_p(const TwoConfig& c);

/// Increasing-plateau Stirling permutation to Stirling configuration.
TwoConfig j_to_s(const MultisetPermutation& s);
MultisetPermutation s_to_j(const TwoConfig& c);

/// True iff s is a Stirling permutation whose plateaus increase left to right.
bool is_increasing_plateau(const MultisetPermutation& s);

TwoConfig a_to_s(const TwoConfig& c, ChainTrace* trace = nullptr);
TwoConfig s_to_a(const TwoConfig& c);

IncOrderedTree perm_to_tree(const Permutation& p, ChainTrace* trace = nullptr);
Permutation tree_to_perm(const IncOrderedTree& t);

}  // namespace vlab
