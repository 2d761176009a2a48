#include "vlab/chain.hpp"

#include <algorithm>

#include "vlab/error.hpp"

namespace vlab {

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

// [start, stop) position ranges of the LRMin segments.
std::vector<std::pair<std::size_t, std::size_t>> segment_spans(const Permutation& p) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  int low = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (q == 0 || p[q] < low) {
      if (!spans.empty()) spans.back().second = q;
      spans.emplace_back(q, p.size());
      low = p[q];
    }
  }
  return spans;
}

void insert_decreasing(Block& block, int v) {
  block.insert(std::upper_bound(block.begin(), block.end(), v, std::greater<>()), v);
}

void record(ChainTrace* trace, const char* stage, std::string value) {
  if (trace) trace->add(stage, std::move(value));
}

}  // namespace

const std::string& ChainTrace::at(const std::string& stage) const {
  for (const auto& [name, value] : stages) {
    if (name == stage) return value;
  }
  throw DomainError("trace has no stage '" + stage + "'");
}

std::string segments_to_string(const Segments& s) {
  std::string out;
  for (std::size_t g = 0; g < s.size(); ++g) {
    if (g) out += " / ";
    for (std::size_t b = 0; b < s[g].size(); ++b) {
      if (b) out += " | ";
      out += join_ints(s[g][b]);
    }
  }
  return out;
}

namespace chain {

std::vector<Overline> overlines(const Permutation& p) {
  std::vector<Overline> out;
  for (auto [begin, end] : segment_spans(p)) {
    if (end - begin == 1) {
      out.push_back({begin, end});
      continue;
    }
    for (std::size_t q = begin; q + 1 < end; ++q) {
      if (p[q] > p[q + 1]) continue;
      std::size_t stop = q + 1;
      while (stop < end && p[stop] > p[q]) ++stop;
      out.push_back({q, stop});
    }
  }
  return out;
}

std::string overlines_to_string(const Permutation& p) {
  const auto lines = overlines(p);
  const auto spans = segment_spans(p);
  std::string out;
  for (std::size_t g = 0; g < spans.size(); ++g) {
    if (g) out += " / ";
    for (std::size_t q = spans[g].first; q < spans[g].second; ++q) {
      if (q != spans[g].first) out += ' ';
      for (const auto& o : lines) {
        if (o.start == q) out += '[';
      }
      out += std::to_string(p[q]);
      for (const auto& o : lines) {
        if (o.stop == q + 1) out += ']';
      }
    }
  }
  return out;
}

Segments extract_blocks(const Permutation& p) {
  const auto lines = overlines(p);
  Segments out;
  for (auto [begin, end] : segment_spans(p)) {
    std::vector<std::size_t> ids;
    for (std::size_t o = 0; o < lines.size(); ++o) {
      if (lines[o].start >= begin && lines[o].stop <= end) ids.push_back(o);
    }
    Blocks blocks(ids.size());
    for (std::size_t q = begin; q < end; ++q) {
      // Nested overlines: the innermost cover is the latest-starting one.
      std::size_t cover = ids.size();
      for (std::size_t t = 0; t < ids.size(); ++t) {
        const auto& o = lines[ids[t]];
        if (o.start <= q && q < o.stop && (cover == ids.size() || o.start > lines[ids[cover]].start)) cover = t;
      }
      blocks[cover].push_back(p[q]);
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

Permutation coalesce(const Segments& s) {
  std::vector<int> values;
  for (const auto& segment : s) {
    std::vector<int> run;
    for (const auto& block : segment) {
      std::size_t pos = run.size();
      while (pos > 1 && run[pos - 1] < block.front()) --pos;
      run.insert(run.begin() + static_cast<std::ptrdiff_t>(pos), block.begin(), block.end());
    }
    values.insert(values.end(), run.begin(), run.end());
  }
  return Permutation(std::move(values));
}

Segments swap_first_third(Segments s) {
  for (auto& segment : s) {
    if (segment.size() < 2 || segment[0].size() != 1) continue;
    int* third = segment[1].size() >= 2 ? &segment[1][1] : &segment[2][0];
    std::swap(segment[0][0], *third);
  }
  return s;
}

Segments sort_blocks_decreasing(Segments s) {
  for (auto& segment : s) {
    for (auto& block : segment) std::sort(block.begin(), block.end(), std::greater<>());
  }
  return s;
}

Segments unsort_blocks(Segments s) {
  for (auto& segment : s) {
    const bool telltale = segment.size() > 1 && segment[0].size() == 1;
    for (std::size_t b = 0; b < segment.size(); ++b) {
      auto& block = segment[b];
      const std::size_t shift = telltale && b == 1 ? 2 : 1;
      if (block.size() < shift) throw DomainError("a_to_p: block too short to restore");
      std::rotate(block.rbegin(), block.rbegin() + static_cast<std::ptrdiff_t>(shift), block.rend());
    }
  }
  return s;
}

Segments order_by_first_entry(Segments s) {
  for (auto& segment : s) {
    std::stable_sort(segment.begin(), segment.end(),
                     [](const Block& a, const Block& b) { return a.front() < b.front(); });
  }
  return s;
}

Segments restore_block_order(Segments s) {
  const auto by_first_desc = [](const Block& a, const Block& b) { return a.front() > b.front(); };
  for (auto& segment : s) {
    // A singleton among several blocks holds the swapped-in maximum and goes
    // first; the block now holding the minimum follows it.
    std::size_t fixed = 0;
    auto singleton = std::find_if(segment.begin(), segment.end(), [](const Block& b) { return b.size() == 1; });
    if (segment.size() >= 2 && singleton != segment.end()) {
      std::rotate(segment.begin(), singleton, singleton + 1);
      fixed = 1;
    }
    auto holds_min = std::min_element(segment.begin() + fixed, segment.end(),
                                      [](const Block& a, const Block& b) { return a.back() < b.back(); });
    std::rotate(segment.begin() + fixed, holds_min, holds_min + 1);
    std::sort(segment.begin() + fixed + 1, segment.end(), by_first_desc);
  }
  return s;
}

Segments link(Segments s) {
  for (auto& segment : s) {
    std::vector<int> lasts;
    for (const auto& block : segment) lasts.push_back(block.back());
    for (std::size_t b = 1; b < segment.size(); ++b) insert_decreasing(segment[b], lasts[b - 1]);
  }
  return s;
}

Segments unlink(Segments s) {
  for (auto& segment : s) {
    for (std::size_t b = 1; b < segment.size(); ++b) {
      const int copy = segment[b - 1].back();
      auto it = std::find(segment[b].begin(), segment[b].end(), copy);
      if (it == segment[b].end()) throw DomainError("a_to_p: missing link entry " + std::to_string(copy));
      segment[b].erase(it);
    }
  }
  return s;
}

TwoConfig merge(const Segments& s, int n) {
  Blocks blocks;
  for (const auto& segment : s) blocks.insert(blocks.end(), segment.begin(), segment.end());
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return TwoConfig::make(std::move(blocks), n);
}

Segments split(const TwoConfig& c) {
  const auto view = components(c);
  Segments out;
  for (auto it = view.components.rbegin(); it != view.components.rend(); ++it) {
    Blocks segment;
    for (std::size_t b : it->blocks) segment.push_back(c.blocks()[b]);
    out.push_back(std::move(segment));
  }
  return out;
}

}  // namespace chain

TwoConfig p_to_a(const Permutation& p, ChainTrace* trace) {
  if (p.empty()) throw DomainError("p_to_a: empty permutation");
  if (contains_dashed(p, pattern_1_23_4())) throw DomainError("p_to_a: permutation contains 1-23-4");
  record(trace, "overlines", chain::overlines_to_string(p));
  auto s = chain::extract_blocks(p);
  record(trace, "step2", segments_to_string(s));
  s = chain::swap_first_third(std::move(s));
  record(trace, "step3", segments_to_string(s));
  s = chain::sort_blocks_decreasing(std::move(s));
  record(trace, "step4", segments_to_string(s));
  s = chain::order_by_first_entry(std::move(s));
  record(trace, "step5", segments_to_string(s));
  s = chain::link(std::move(s));
  record(trace, "step6", segments_to_string(s));
  auto c = chain::merge(s, static_cast<int>(p.size()));
  record(trace, "step7", c.to_string());
  return c;
}

Permutation a_to_p(const TwoConfig& c) {
  if (!in_family(c, ConfigFamily::A)) throw DomainError("a_to_p: input is not an avoider configuration");
  auto s = chain::split(c);
  s = chain::unlink(std::move(s));
  s = chain::restore_block_order(std::move(s));
  s = chain::unsort_blocks(std::move(s));
  s = chain::swap_first_third(std::move(s));
  return chain::coalesce(s);
}

bool is_increasing_plateau(const MultisetPermutation& s) {
  if (!is_stirling(s)) return false;
  int last = 0;
  for (std::size_t q = 0; q + 1 < s.size(); ++q) {
    if (s[q] != s[q + 1]) continue;
    if (s[q] <= last) return false;
    last = s[q];
  }
  return true;
}

TwoConfig j_to_s(const MultisetPermutation& s) {
  if (!is_increasing_plateau(s)) throw DomainError("j_to_s: not an increasing-plateau Stirling permutation");
  Blocks blocks;
  for (std::size_t q = 0; q + 1 < s.size(); ++q) {
    if (s[q] != s[q + 1]) continue;
    Block run{s[q + 1]};
    for (std::size_t t = q + 2; t < s.size() && s[t] < run.back(); ++t) run.push_back(s[t]);
    blocks.push_back(std::move(run));
  }
  return TwoConfig::make(std::move(blocks), static_cast<int>(s.size() / 2));
}

MultisetPermutation s_to_j(const TwoConfig& c) {
  if (!in_family(c, ConfigFamily::S)) throw DomainError("s_to_j: input is not a Stirling configuration");
  MultisetPermutation out = c.flat();
  for (int i = 1; i <= c.n(); ++i) {
    if (c.is_repeater(i)) continue;
    auto pos = static_cast<std::size_t>(std::find(out.begin(), out.end(), i) - out.begin());
    while (pos > 0 && out[pos - 1] > i) --pos;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), i);
  }
  return out;
}

TwoConfig a_to_s(const TwoConfig& c, ChainTrace* trace) {
  if (!in_family(c, ConfigFamily::A)) throw DomainError("a_to_s: input is not an avoider configuration");
  auto x = w_to_x(c);
  record(trace, "wx", x.to_string());
  auto y = x_to_y(x);
  record(trace, "xy", y.to_string());
  auto z = y_to_z(y);
  record(trace, "yz", z.to_string());
  return z;
}

TwoConfig s_to_a(const TwoConfig& c) {
  if (!in_family(c, ConfigFamily::S)) throw DomainError("s_to_a: input is not a Stirling configuration");
  return x_to_w(y_to_x(z_to_y(c)));
}

IncOrderedTree perm_to_tree(const Permutation& p, ChainTrace* trace) {
  if (p.empty()) return IncOrderedTree();
  const auto a = p_to_a(p, trace);
  const auto s = a_to_s(a, trace);
  record(trace, "stirling_config", s.to_string());
  const auto j = s_to_j(s);
  record(trace, "stirling_perm", join_ints(j));
  auto t = janson_inverse(j);
  record(trace, "tree", tree_to_string(t));
  return t;
}

Permutation tree_to_perm(const IncOrderedTree& t) {
  if (t.size() == 0) return Permutation();
  if (!has_increasing_leaves(t)) throw DomainError("tree_to_perm: leaves are not increasing");
  return a_to_p(s_to_a(j_to_s(janson(t))));
}

}  // namespace vlab
