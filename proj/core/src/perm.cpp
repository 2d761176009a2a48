#include "vlab/perm.hpp"

#include <algorithm>
#include <numeric>

#include "vlab/error.hpp"

namespace vlab {

namespace {

bool is_permutation_of_1_to_n(std::span<const int> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Backtracking matcher. `letter` is the index into the flattened pattern;
// positions[] holds the host positions chosen so far.
class DashedMatcher {
 public:
  DashedMatcher(std::span<const int> host, const DashedPattern& q) : host_(host) {
    for (const auto& block : q.blocks()) {
      for (std::size_t t = 0; t < block.size(); ++t) {
        letters_.push_back(block[t]);
        starts_block_.push_back(t == 0);
      }
    }
    positions_.resize(letters_.size());
  }

  bool run() { return letters_.size() <= host_.size() && place(0, 0); }

 private:
  bool place(std::size_t letter, std::size_t min_pos) {
    if (letter == letters_.size()) return true;
    const std::size_t remaining = letters_.size() - letter;
    if (!starts_block_[letter]) {
      // Adjacent to the previous letter.
      const std::size_t pos = positions_[letter - 1] + 1;
      if (pos >= host_.size() || !consistent(letter, pos)) return false;
      positions_[letter] = pos;
      return place(letter + 1, pos + 1);
    }
    for (std::size_t pos = min_pos; pos + remaining <= host_.size(); ++pos) {
      if (!consistent(letter, pos)) continue;
      positions_[letter] = pos;
      if (place(letter + 1, pos + 1)) return true;
    }
    return false;
  }

  bool consistent(std::size_t letter, std::size_t pos) const {
    for (std::size_t prev = 0; prev < letter; ++prev) {
      const bool pattern_less = letters_[prev] < letters_[letter];
      const bool host_less = host_[positions_[prev]] < host_[pos];
      if (pattern_less != host_less) return false;
    }
    return true;
  }

  std::span<const int> host_;
  std::vector<int> letters_;
  std::vector<bool> starts_block_;
  std::vector<std::size_t> positions_;
};

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_permutation_of_1_to_n(values_)) {
    throw DomainError("not a permutation of 1.." + std::to_string(values_.size()));
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

DashedPattern::DashedPattern(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> flat;
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("dashed pattern has an empty block");
    flat.insert(flat.end(), b.begin(), b.end());
  }
  if (flat.empty() || !is_permutation_of_1_to_n(flat)) {
    throw DomainError("dashed pattern letters must form a permutation of 1..m");
  }
  length_ = flat.size();
}

DashedPattern DashedPattern::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  for (char c : text) {
    if (c == '-') {
      blocks.emplace_back();
    } else if (c >= '1' && c <= '9') {
      blocks.back().push_back(c - '0');
    } else {
      throw DomainError("invalid character in dashed pattern: '" + std::string(1, c) + "'");
    }
  }
  return DashedPattern(std::move(blocks));
}

std::string DashedPattern::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '-';
    for (int v : blocks_[b]) out += std::to_string(v);
  }
  return out;
}

const DashedPattern& pattern_1_23_4() {
  static const DashedPattern q({{1}, {2, 3}, {4}});
  return q;
}

bool contains_dashed(const Permutation& p, const DashedPattern& q) {
  return DashedMatcher(p.values(), q).run();
}

AvoiderStream::AvoiderStream(std::size_t n, DashedPattern q) : pattern_(std::move(q)), current_(n) {
  std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> AvoiderStream::next() {
  while (!exhausted_) {
    Permutation candidate(current_);
    exhausted_ = !std::next_permutation(current_.begin(), current_.end());
    if (!contains_dashed(candidate, pattern_)) return candidate;
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, const DashedPattern& q) {
  std::vector<Permutation> out;
  AvoiderStream stream(n, q);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::size_t count_avoiders(std::size_t n, const DashedPattern& q) {
  std::size_t count = 0;
  AvoiderStream stream(n, q);
  while (stream.next()) ++count;
  return count;
}

std::vector<std::vector<int>> lrmin_segments(const Permutation& p) {
  std::vector<std::vector<int>> segments;
  int running_min = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (segments.empty() || p[i] < running_min) {
      running_min = p[i];
      segments.emplace_back();
    }
    segments.back().push_back(p[i]);
  }
  return segments;
}

AscentStats ascent_stats(const Permutation& p) {
  if (p.empty()) throw DomainError("ascent statistics require n >= 1");
  AscentStats stats;
  for (const auto& seg : lrmin_segments(p)) {
    if (seg.size() == 1) {
      ++stats.short_segments;
      continue;
    }
    ++stats.long_segments;
    // seg[0] < seg[1] is the LRMin ascent; later ascents are free.
    for (std::size_t t = 1; t + 1 < seg.size(); ++t) {
      if (seg[t] < seg[t + 1]) ++stats.free_ascents;
    }
  }
  return stats;
}

bool free_ascents_end_at_rl_maxima(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> suffix_max(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix_max[i] = std::max(suffix_max[i + 1], p[i]);

  int running_min = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool initiator_is_lrmin = p[i] < running_min;
    running_min = std::min(running_min, p[i]);
    if (p[i] < p[i + 1] && !initiator_is_lrmin && p[i + 1] < suffix_max[i + 2]) return false;
  }
  return true;
}

}  // namespace vlab
