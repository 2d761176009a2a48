#pragma once

// Permutations of [n], dashed (vincular) pattern containment, left-to-right
// minimum segments and the short/long segment and free ascent statistics.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vlab {

/// A permutation of {1,...,n}. Values are 1-based; storage is 0-indexed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `values` is a permutation of 1..size.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// A dashed pattern such as 1-23-4: letters within a block must be adjacent
/// in the host permutation.
class DashedPattern {
 public:
  /// Throws DomainError if blocks are empty or do not concatenate to a
  /// permutation of 1..m.
  explicit DashedPattern(std::vector<std::vector<int>> blocks);

  /// Parses the text form ("1-23-4"). Letters are single digits 1..9.
  static DashedPattern parse(std::string_view text);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t length() const { return length_; }
  std::string to_string() const;

  bool operator==(const DashedPattern&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::size_t length_ = 0;
};

/// The pattern 1-23-4.
const DashedPattern& pattern_1_23_4();

bool contains_dashed(const Permutation& p, const DashedPattern& q);

/// Lazily yields the permutations of [n] that avoid `q`, in lexicographic
/// order.
class AvoiderStream {
 public:
  AvoiderStream(std::size_t n, DashedPattern q);

  std::optional<Permutation> next();

 private:
  DashedPattern pattern_;
  std::vector<int> current_;
  bool exhausted_ = false;
};

std::vector<Permutation> enumerate_avoiders(std::size_t n, const DashedPattern& q);
std::size_t count_avoiders(std::size_t n, const DashedPattern& q);

/// Splits p at its left-to-right minima. The empty permutation has no
/// segments.
std::vector<std::vector<int>> lrmin_segments(const Permutation& p);

struct AscentStats {
  std::size_t short_segments = 0;
  std::size_t long_segments = 0;
  std::size_t free_ascents = 0;

  auto operator<=>(const AscentStats&) const = default;
};

/// Throws DomainError for the empty permutation.
AscentStats ascent_stats(const Permutation& p);

/// True iff every free ascent of p terminates at a right-to-left maximum.
bool free_ascents_end_at_rl_maxima(const Permutation& p);

}  // namespace vlab
