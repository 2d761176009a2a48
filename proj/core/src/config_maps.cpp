#include <algorithm>
#include <functional>
#include <set>

#include "vlab/config.hpp"
#include "vlab/error.hpp"

namespace vlab {

namespace {

void insert_decreasing(Block& block, int v) {
  block.insert(std::upper_bound(block.begin(), block.end(), v, std::greater<>()), v);
}

void erase_at(Block& block, std::size_t index) { block.erase(block.begin() + static_cast<std::ptrdiff_t>(index)); }

void require(const TwoConfig& c, ConfigFamily f, const char* op) {
  if (!in_family(c, f)) {
    throw DomainError(std::string(op) + ": input is not in " + family_name(f));
  }
}

using TypePredicate = bool (*)(const BadRepeater&);

const BadRepeater* largest_bad(const BadRepeaterReport& report, TypePredicate pick) {
  const BadRepeater* best = nullptr;
  for (const auto& b : report.bad) {
    if (pick(b) && (!best || b.value > best->value)) best = &b;
  }
  return best;
}

bool is_type1(const BadRepeater& b) { return b.type1; }
bool is_type2(const BadRepeater& b) { return b.type2; }
bool is_type3(const BadRepeater& b) { return b.type3; }

// Each step returns nullopt when no eligible bad repeater remains.

std::optional<TwoConfig> w_step(const TwoConfig& c) {
  const auto report = bad_repeaters(c);
  const auto* bad = largest_bad(report, is_type1);
  if (!bad) return std::nullopt;
  const int r = bad->value;
  Blocks blocks = c.blocks();
  auto& from = blocks[c.first(r).block];
  const int moved = from.back();
  from.pop_back();
  insert_decreasing(blocks[c.second(r).block], moved);
  return TwoConfig::make(std::move(blocks), c.n());
}

std::optional<TwoConfig> x_step(const TwoConfig& c) {
  const auto report = bad_repeaters(c);
  const auto* bad = largest_bad(report, is_type2);
  if (!bad) return std::nullopt;
  const int r = bad->value;
  std::size_t target = 0;
  for (std::size_t pos = c.first(r).flat + 1; pos < c.second(r).flat; ++pos) {
    if (c.flat()[pos] < r) {
      target = c.block_of_flat(pos);
      break;
    }
  }
  Blocks blocks = c.blocks();
  erase_at(blocks[c.second(r).block], c.second(r).index);
  insert_decreasing(blocks[target], r);
  return TwoConfig::make(std::move(blocks), c.n());
}

std::optional<TwoConfig> y_step(const TwoConfig& c) {
  const auto report = bad_repeaters(c);
  const auto* bad = largest_bad(report, is_type3);
  if (!bad) return std::nullopt;
  const int r = bad->value;
  // A_1..A_k hold delinquents; A_{k+1} is the second block of r.
  std::vector<std::size_t> a;
  std::vector<Block> moving;
  for (std::size_t pos = c.first(r).flat + 1; pos < c.second(r).flat; ++pos) {
    if (c.flat()[pos] >= r) continue;
    const std::size_t b = c.block_of_flat(pos);
    if (a.empty() || a.back() != b) {
      a.push_back(b);
      moving.emplace_back();
    }
    moving.back().push_back(c.flat()[pos]);
  }
  a.push_back(c.second(r).block);
  Blocks blocks = c.blocks();
  erase_at(blocks[a.back()], c.second(r).index);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    auto& block = blocks[a[i]];
    std::erase_if(block, [r](int v) { return v < r; });
  }
  insert_decreasing(blocks[a.front()], r);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (int v : moving[i]) insert_decreasing(blocks[a[i + 1]], v);
  }
  return TwoConfig::make(std::move(blocks), c.n());
}

using Step = std::optional<TwoConfig> (*)(const TwoConfig&);

TwoConfig iterate(TwoConfig c, Step step) {
  while (auto next = step(c)) c = std::move(*next);
  return c;
}

// Candidate predecessors under one forward step; each is verified by the caller.

std::vector<TwoConfig> w_step_candidates(const TwoConfig& c) {
  std::vector<TwoConfig> out;
  for (int r : c.repeaters()) {
    const auto& f = c.first(r);
    const auto& s = c.second(r);
    if (f.block == s.block) continue;
    const int last = c.blocks()[f.block].back();
    const auto& second_block = c.blocks()[s.block];
    for (std::size_t i = s.index + 1; i < second_block.size(); ++i) {
      if (second_block[i] >= last) continue;
      Blocks blocks = c.blocks();
      erase_at(blocks[s.block], i);
      if (blocks[s.block].empty()) continue;
      blocks[f.block].push_back(second_block[i]);
      if (auto cand = TwoConfig::try_make(std::move(blocks), c.n())) out.push_back(std::move(*cand));
    }
  }
  return out;
}

std::vector<TwoConfig> x_step_candidates(const TwoConfig& c) {
  std::vector<TwoConfig> out;
  for (int r : c.repeaters()) {
    const auto& s = c.second(r);
    for (std::size_t b = s.block + 1; b < c.block_count(); ++b) {
      const auto& block = c.blocks()[b];
      if (std::find(block.begin(), block.end(), r) != block.end()) continue;
      if (block.back() >= r) continue;
      Blocks blocks = c.blocks();
      erase_at(blocks[s.block], s.index);
      if (blocks[s.block].empty()) continue;
      insert_decreasing(blocks[b], r);
      if (auto cand = TwoConfig::try_make(std::move(blocks), c.n())) out.push_back(std::move(*cand));
    }
  }
  return out;
}

std::vector<TwoConfig> y_step_candidates(const TwoConfig& c) {
  std::vector<TwoConfig> out;
  for (int r : c.repeaters()) {
    const auto& s = c.second(r);
    const std::size_t a1 = s.block;
    if (s.index + 1 != c.blocks()[a1].size()) continue;
    std::vector<std::size_t> g{a1};
    for (std::size_t b = a1 + 1; b < c.block_count(); ++b) {
      if (c.blocks()[b].back() < r) g.push_back(b);
    }
    for (std::size_t m = 1; m < g.size(); ++m) {
      Blocks blocks = c.blocks();
      blocks[a1].pop_back();
      std::vector<Block> small(m + 1);
      for (std::size_t t = 1; t <= m; ++t) {
        for (int v : c.blocks()[g[t]]) {
          if (v < r) small[t].push_back(v);
        }
        std::erase_if(blocks[g[t]], [r](int v) { return v < r; });
      }
      for (std::size_t t = 1; t <= m; ++t) {
        for (int v : small[t]) insert_decreasing(blocks[g[t - 1]], v);
      }
      insert_decreasing(blocks[g[m]], r);
      if (std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); })) continue;
      if (auto cand = TwoConfig::try_make(std::move(blocks), c.n())) out.push_back(std::move(*cand));
    }
  }
  return out;
}

// Finds the unique configuration in `domain` whose full forward image under
// `step` is `target`, walking backwards through verified predecessors.
TwoConfig inverse_search(const TwoConfig& target, ConfigFamily domain, Step step,
                         std::vector<TwoConfig> (*candidates)(const TwoConfig&), const char* op) {
  std::set<TwoConfig> visited;
  std::vector<TwoConfig> found;
  std::vector<std::pair<TwoConfig, int>> stack{{target, 0}};
  const int depth_cap = 4 * target.n() * target.n() + 8;
  while (!stack.empty()) {
    auto [node, depth] = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(node).second) continue;
    if (in_family(node, domain) && iterate(node, step) == target) found.push_back(node);
    if (depth >= depth_cap) continue;
    for (auto& cand : candidates(node)) {
      if (visited.count(cand)) continue;
      auto forward = step(cand);
      if (forward && *forward == node) stack.emplace_back(std::move(cand), depth + 1);
    }
  }
  if (found.size() != 1) {
    throw DomainError(std::string(op) + ": inverse step failed (" + std::to_string(found.size()) + " preimages)");
  }
  return found.front();
}

}  // namespace

TwoConfig w_to_x(const TwoConfig& c) {
  require(c, ConfigFamily::W, "w_to_x");
  return iterate(c, w_step);
}

TwoConfig x_to_y(const TwoConfig& c) {
  require(c, ConfigFamily::X, "x_to_y");
  return iterate(c, x_step);
}

TwoConfig y_to_z(const TwoConfig& c) {
  require(c, ConfigFamily::Y, "y_to_z");
  return iterate(c, y_step);
}

std::vector<TwoConfig> y_to_z_steps(const TwoConfig& c) {
  require(c, ConfigFamily::Y, "y_to_z");
  std::vector<TwoConfig> out{c};
  while (auto next = y_step(out.back())) out.push_back(std::move(*next));
  return out;
}

std::vector<int> w_vector(const TwoConfig& c) {
  std::vector<int> w(c.n() + 1, 0);
  for (int i = 1; i <= c.n(); ++i) {
    const std::size_t last = c.first(i).block;
    for (std::size_t b = 0; b <= last; ++b) {
      if (c.blocks()[b].back() <= i) ++w[i];
    }
  }
  return w;
}

DirectPlacement y_to_z_direct_trace(const TwoConfig& c) {
  require(c, ConfigFamily::Y, "y_to_z_direct");
  const int n = c.n();
  std::vector<int> w = w_vector(c);
  std::vector<bool> ender(n + 1, false);
  for (const auto& block : c.blocks()) ender[block.back()] = true;
  std::vector<int> enders, non_enders;
  for (int i = 1; i <= n; ++i) (ender[i] ? enders : non_enders).push_back(i);
  auto ends_block = [&c](const Occurrence& o) { return o.index + 1 == c.blocks()[o.block].size(); };

  Blocks blocks(c.block_count());
  std::vector<Blocks> rows;
  auto nth_empty = [&blocks](int k) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty() && --k == 0) return b;
    }
    throw DomainError("y_to_z_direct: not enough empty blocks");
  };
  // Repeaters whose second copy is not a block end: value and block of the first copy.
  std::vector<std::pair<int, std::size_t>> pending;
  for (auto it = enders.rbegin(); it != enders.rend(); ++it) {
    const int i = *it;
    const std::size_t b = nth_empty(w[i]);
    blocks[b].push_back(i);
    if (c.is_repeater(i)) {
      if (ends_block(c.second(i))) {
        blocks[nth_empty(w[i])].push_back(i);
      } else {
        pending.emplace_back(i, b);
      }
    }
    rows.push_back(blocks);
  }
  // Each block now holds exactly its ender, in position 0.
  const Blocks enders_only = blocks;
  auto available = [&enders_only](std::size_t b, int i) { return enders_only[b].front() <= i; };
  for (int i : non_enders) {
    if (c.is_repeater(i)) throw DomainError("y_to_z_direct: repeated non-ender");
    int k = w[i];
    std::size_t chosen = blocks.size();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (available(b, i) && --k == 0) {
        chosen = b;
        break;
      }
    }
    if (chosen == blocks.size()) throw DomainError("y_to_z_direct: not enough available blocks");
    insert_decreasing(blocks[chosen], i);
  }
  for (auto [i, first_block] : pending) {
    std::size_t b = first_block + 1;
    while (b < blocks.size() && !available(b, i)) ++b;
    if (b == blocks.size()) throw DomainError("y_to_z_direct: no available block for a second copy");
    insert_decreasing(blocks[b], i);
  }
  auto result = TwoConfig::make(std::move(blocks), n);
  return DirectPlacement{std::move(w), std::move(enders), std::move(non_enders), std::move(rows), std::move(result)};
}

TwoConfig y_to_z_direct(const TwoConfig& c) { return y_to_z_direct_trace(c).result; }

TwoConfig w_to_x_direct(const TwoConfig& c) {
  require(c, ConfigFamily::W, "w_to_x_direct");
  const auto view = components(c);
  const auto report = bad_repeaters(c);
  // Outgoing arc start of each block: its first-occurrence repeater, if any.
  std::vector<int> outgoing(c.block_count(), 0);
  for (int r : c.repeaters()) outgoing[c.first(r).block] = r;

  Blocks blocks = c.blocks();
  for (const auto& bad : report.bad) {
    if (!bad.type1) continue;
    const auto& f = c.first(bad.value);
    const auto& comp = view.components[view.component_of_block[f.block]];
    const auto& source = c.blocks()[f.block];
    for (std::size_t idx = f.index + 1; idx < source.size(); ++idx) {
      const int e = source[idx];
      std::size_t dest = comp.blocks.back();
      for (std::size_t b : comp.blocks) {
        if (b > f.block && outgoing[b] != 0 && outgoing[b] < e) {
          dest = b;
          break;
        }
      }
      std::erase(blocks[f.block], e);
      insert_decreasing(blocks[dest], e);
    }
  }
  return TwoConfig::make(std::move(blocks), c.n());
}

TwoConfig x_to_w(const TwoConfig& c) {
  require(c, ConfigFamily::X, "x_to_w");
  TwoConfig cur = c;
  for (;;) {
    int best_r = 0;
    int best_e = 0;
    for (int r : cur.repeaters()) {
      const auto& s = cur.second(r);
      const auto& block = cur.blocks()[s.block];
      for (std::size_t i = s.index + 1; i < block.size(); ++i) {
        const int e = block[i];
        if (e < r && cur.is_repeater(e) && cur.second(e).block == s.block && cur.second(e).index == i) {
          best_e = std::max(best_e, e);
        }
      }
      if (best_e != 0) {
        best_r = r;
        break;
      }
    }
    if (best_r == 0) return cur;
    Blocks blocks = cur.blocks();
    const auto& s = cur.second(best_r);
    std::erase(blocks[s.block], best_e);
    blocks[cur.first(best_r).block].push_back(best_e);
    cur = TwoConfig::make(std::move(blocks), cur.n());
  }
}

TwoConfig y_to_x(const TwoConfig& c) {
  require(c, ConfigFamily::Y, "y_to_x");
  return inverse_search(c, ConfigFamily::X, x_step, x_step_candidates, "y_to_x");
}

TwoConfig z_to_y(const TwoConfig& c) {
  require(c, ConfigFamily::Z, "z_to_y");
  return inverse_search(c, ConfigFamily::Y, y_step, y_step_candidates, "z_to_y");
}

TwoConfig x_to_w_by_search(const TwoConfig& c) {
  require(c, ConfigFamily::X, "x_to_w");
  return inverse_search(c, ConfigFamily::W, w_step, w_step_candidates, "x_to_w");
}

}  // namespace vlab
