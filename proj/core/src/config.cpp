#include "vlab/config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vlab/error.hpp"

namespace vlab {

namespace {

std::string at_block(std::size_t b) { return " at block " + std::to_string(b + 1); }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string TwoConfig::check(const Blocks& blocks, int n) {
  if (n < 1) return "size must be at least 1";
  std::vector<int> count(n + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.empty()) return "empty block" + at_block(b);
    for (int v : block) {
      if (v < 1 || v > n) return "entry " + std::to_string(v) + " outside 1.." + std::to_string(n) + at_block(b);
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (block[i] == block[j]) return "condition 1 violated" + at_block(b);
      }
    }
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      if (block[i] < block[i + 1]) return "block is not decreasing" + at_block(b);
    }
    for (int v : block) ++count[v];
  }
  for (int v = 1; v <= n; ++v) {
    if (count[v] == 0) return "value " + std::to_string(v) + " is missing from the multiset";
    if (count[v] > 2) return "value " + std::to_string(v) + " occurs " + std::to_string(count[v]) + " times";
  }
  std::vector<int> seen(n + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    bool after_first_occurrence = false;
    for (int v : blocks[b]) {
      const bool repeater = count[v] == 2;
      const bool first_occurrence = repeater && seen[v] == 0;
      const bool second_occurrence = repeater && seen[v] == 1;
      ++seen[v];
      if (first_occurrence && after_first_occurrence) return "condition 2 violated" + at_block(b);
      if (after_first_occurrence && !second_occurrence) return "condition 3 violated" + at_block(b);
      after_first_occurrence = after_first_occurrence || first_occurrence;
    }
  }
  return {};
}

std::optional<TwoConfig> TwoConfig::try_make(Blocks blocks, std::optional<int> n) {
  int size = n.value_or(0);
  if (!n) {
    for (const auto& b : blocks) {
      for (int v : b) size = std::max(size, v);
    }
  }
  if (!check(blocks, size).empty()) return std::nullopt;
  TwoConfig c;
  c.n_ = size;
  c.blocks_ = std::move(blocks);
  c.first_.assign(size + 1, Occurrence{});
  c.second_.assign(size + 1, std::nullopt);
  std::vector<bool> seen(size + 1, false);
  for (std::size_t b = 0; b < c.blocks_.size(); ++b) {
    for (std::size_t i = 0; i < c.blocks_[b].size(); ++i) {
      const int v = c.blocks_[b][i];
      const Occurrence occ{b, i, c.flat_.size()};
      if (seen[v]) {
        c.second_[v] = occ;
      } else {
        c.first_[v] = occ;
        seen[v] = true;
      }
      c.flat_.push_back(v);
      c.block_of_flat_.push_back(b);
    }
  }
  return c;
}

TwoConfig TwoConfig::make(Blocks blocks, std::optional<int> n) {
  int size = n.value_or(0);
  if (!n) {
    for (const auto& b : blocks) {
      for (int v : b) size = std::max(size, v);
    }
  }
  if (auto problem = check(blocks, size); !problem.empty()) {
    throw DomainError("invalid 2-configuration: " + problem);
  }
  return *try_make(std::move(blocks), size);
}

TwoConfig TwoConfig::parse(std::string_view text) {
  Blocks blocks(1);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "|") {
      blocks.emplace_back();
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      blocks.back().push_back(v);
    } catch (const std::exception&) {
      throw DomainError("invalid token in configuration text: '" + token + "'");
    }
  }
  return make(std::move(blocks));
}

std::vector<int> TwoConfig::repeaters() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (is_repeater(v)) out.push_back(v);
  }
  return out;
}

std::string TwoConfig::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += " | ";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

ComponentView components(const TwoConfig& c) {
  const std::size_t blocks = c.block_count();
  DisjointSets sets(blocks);
  for (int r : c.repeaters()) sets.unite(c.first(r).block, c.second(r).block);

  std::vector<std::size_t> root_to_component(blocks, blocks);
  std::vector<Component> comps;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t root = sets.find(b);
    if (root_to_component[root] == blocks) {
      root_to_component[root] = comps.size();
      comps.push_back(Component{{}, c.blocks()[b].back(), std::nullopt});
    }
    auto& comp = comps[root_to_component[root]];
    comp.blocks.push_back(b);
    comp.min_entry = std::min(comp.min_entry, c.blocks()[b].back());
  }
  for (auto& comp : comps) {
    if (comp.blocks.size() < 2) continue;
    const auto& first_block = c.blocks()[comp.blocks[0]];
    const bool min_in_first = first_block.back() == comp.min_entry;
    comp.critical = min_in_first ? comp.blocks[1] : comp.blocks[0];
  }
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.min_entry < b.min_entry; });

  ComponentView view{std::move(comps), std::vector<std::size_t>(blocks, 0)};
  for (std::size_t i = 0; i < view.components.size(); ++i) {
    for (std::size_t b : view.components[i].blocks) view.component_of_block[b] = i;
  }
  return view;
}

const BadRepeater* BadRepeaterReport::find(int value) const {
  for (const auto& b : bad) {
    if (b.value == value) return &b;
  }
  return nullptr;
}

BadRepeaterReport bad_repeaters(const TwoConfig& c) {
  std::vector<int> order = c.repeaters();
  std::sort(order.begin(), order.end(), [&c](int a, int b) { return c.first(a).flat < c.first(b).flat; });
  BadRepeaterReport report;
  for (int r : order) {
    BadRepeater entry{r, false, false, false, {}};
    for (std::size_t pos = c.first(r).flat + 1; pos < c.second(r).flat; ++pos) {
      if (c.flat()[pos] < r) entry.delinquents.push_back(c.flat()[pos]);
    }
    if (entry.delinquents.empty()) continue;
    const auto& f = c.first(r);
    const auto& s = c.second(r);
    entry.type1 = f.index + 1 != c.blocks()[f.block].size();
    entry.type2 = s.index + 1 != c.blocks()[s.block].size();
    entry.type3 = !entry.type1 && !entry.type2;
    report.bad.push_back(std::move(entry));
  }
  return report;
}

PropertySet PropertySet::parse(std::string_view names) {
  PropertySet out;
  std::string all(names);
  std::replace(all.begin(), all.end(), ',', ' ');
  std::istringstream in(all);
  std::string name;
  while (in >> name) {
    std::replace(name.begin(), name.end(), '-', '_');
    if (name == "good_component") {
      out.set(Property::good_component);
    } else if (name == "single_incoming_arc") {
      out.set(Property::single_incoming_arc);
    } else if (name == "no_crossing_in_component") {
      out.set(Property::no_crossing_in_component);
    } else if (name == "gessel") {
      out.set(Property::gessel);
    } else if (name == "stirling") {
      out.set(Property::stirling);
    } else if (name == "restricted_first_entry") {
      out.set(Property::restricted_first_entry);
    } else {
      throw DomainError("unknown property '" + name + "'");
    }
  }
  return out;
}

PropertySet Properties::as_set() const {
  PropertySet s;
  if (good_component) s.set(Property::good_component);
  if (single_incoming_arc) s.set(Property::single_incoming_arc);
  if (no_crossing_in_component) s.set(Property::no_crossing_in_component);
  if (gessel) s.set(Property::gessel);
  if (stirling) s.set(Property::stirling);
  if (restricted_first_entry) s.set(Property::restricted_first_entry);
  return s;
}

Properties properties(const TwoConfig& c) {
  Properties p;
  const auto view = components(c);
  const auto report = bad_repeaters(c);
  const auto& blocks = c.blocks();

  p.good_component = true;
  std::size_t last_block_so_far = 0;
  bool any_before = false;
  for (const auto& comp : view.components) {
    if (comp.critical && any_before && last_block_so_far > *comp.critical) {
      p.good_component = false;
      break;
    }
    last_block_so_far = any_before ? std::max(last_block_so_far, comp.blocks.back()) : comp.blocks.back();
    any_before = true;
  }

  std::vector<int> incoming(blocks.size(), 0);
  const auto reps = c.repeaters();
  for (int r : reps) ++incoming[c.second(r).block];
  p.single_incoming_arc = std::all_of(incoming.begin(), incoming.end(), [](int k) { return k <= 1; });

  p.no_crossing_in_component = true;
  for (std::size_t a = 0; a < reps.size() && p.no_crossing_in_component; ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const int r = reps[a];
      const int s = reps[b];
      if (view.component_of_block[c.first(r).block] != view.component_of_block[c.first(s).block]) continue;
      const auto p1 = c.first(r).flat, p2 = c.second(r).flat;
      const auto q1 = c.first(s).flat, q2 = c.second(s).flat;
      if (p1 < q1 && q1 < p2 && p2 < q2) {
        p.no_crossing_in_component = false;
        break;
      }
    }
  }

  p.stirling = report.bad.empty();

  p.gessel = std::none_of(report.bad.begin(), report.bad.end(), [](const BadRepeater& b) { return b.type2; });
  if (p.gessel) {
    const auto& flat = c.flat();
    for (int r : reps) {
      const auto& s = c.second(r);
      if (s.index + 1 != blocks[s.block].size()) continue;
      for (std::size_t pos = s.flat + 1; pos < flat.size(); ++pos) {
        if (flat[pos] < r) {
          p.gessel = false;
          break;
        }
      }
      if (!p.gessel) break;
    }
  }

  p.restricted_first_entry = true;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int head = blocks[b].front();
    if (c.is_repeater(head) || (b > 0 && blocks[b - 1].front() >= head)) {
      p.restricted_first_entry = false;
      break;
    }
  }
  return p;
}

PropertySet family_properties(ConfigFamily f) {
  switch (f) {
    case ConfigFamily::W:
      return {Property::single_incoming_arc, Property::good_component};
    case ConfigFamily::X:
      return {Property::good_component, Property::no_crossing_in_component};
    case ConfigFamily::Y:
      return {Property::no_crossing_in_component, Property::gessel};
    case ConfigFamily::Z:
      return {Property::stirling};
    case ConfigFamily::A:
      return {Property::restricted_first_entry, Property::single_incoming_arc, Property::good_component};
    case ConfigFamily::S:
      return {Property::restricted_first_entry, Property::stirling};
  }
  return {};
}

bool in_family(const TwoConfig& c, ConfigFamily f) {
  return properties(c).as_set().contains(family_properties(f));
}

const char* family_name(ConfigFamily f) {
  switch (f) {
    case ConfigFamily::W:
      return "W";
    case ConfigFamily::X:
      return "X";
    case ConfigFamily::Y:
      return "Y";
    case ConfigFamily::Z:
      return "Z";
    case ConfigFamily::A:
      return "A";
    case ConfigFamily::S:
      return "S";
  }
  return "?";
}

namespace {

class ConfigGenerator {
 public:
  ConfigGenerator(int n, PropertySet filter, const std::function<void(const TwoConfig&)>& visit)
      : n_(n), filter_(filter), visit_(visit), remaining_(n + 1, 0) {}

  void run() {
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
      repeater_mask_ = mask;
      for (int v = 1; v <= n_; ++v) remaining_[v] = (mask >> (v - 1) & 1u) ? 2 : 1;
      left_ = n_ + std::popcount(mask);
      extend();
    }
  }

 private:
  bool repeater(int v) const { return repeater_mask_ >> (v - 1) & 1u; }

  void extend() {
    if (left_ == 0) {
      auto c = TwoConfig::try_make(blocks_, n_);
      if (c && properties(*c).as_set().contains(filter_)) visit_(*c);
      return;
    }
    std::vector<int> available;
    for (int v = n_; v >= 1; --v) {
      if (remaining_[v] > 0) available.push_back(v);
    }
    // Bit t of `pick` selects available[available.size()-1-t] (smallest first).
    const std::uint32_t limit = 1u << available.size();
    for (std::uint32_t pick = 1; pick < limit; ++pick) {
      Block block;
      for (std::size_t t = 0; t < available.size(); ++t) {
        if (pick >> (available.size() - 1 - t) & 1u) block.push_back(available[t]);
      }
      if (!block_allowed(block)) continue;
      for (int v : block) --remaining_[v];
      left_ -= static_cast<int>(block.size());
      blocks_.push_back(std::move(block));
      extend();
      block = std::move(blocks_.back());
      blocks_.pop_back();
      for (int v : block) ++remaining_[v];
      left_ += static_cast<int>(block.size());
    }
  }

  bool block_allowed(const Block& block) const {
    bool after_first = false;
    int incoming = 0;
    for (int v : block) {
      const bool first_occurrence = repeater(v) && remaining_[v] == 2;
      const bool second_occurrence = repeater(v) && remaining_[v] == 1;
      if (after_first && !second_occurrence) return false;
      after_first = after_first || first_occurrence;
      incoming += second_occurrence;
    }
    // Block-local filters prune whole subtrees.
    if (filter_.has(Property::single_incoming_arc) && incoming > 1) return false;
    if (filter_.has(Property::restricted_first_entry)) {
      if (repeater(block.front())) return false;
      if (!blocks_.empty() && blocks_.back().front() >= block.front()) return false;
    }
    return true;
  }

  int n_;
  PropertySet filter_;
  const std::function<void(const TwoConfig&)>& visit_;
  std::vector<int> remaining_;
  std::uint32_t repeater_mask_ = 0;
  int left_ = 0;
  Blocks blocks_;
};

}  // namespace

void for_each_config(int n, PropertySet filter, const std::function<void(const TwoConfig&)>& visit) {
  if (n < 1) throw DomainError("configuration enumeration requires n >= 1");
  if (n > 16) throw DomainError("configuration enumeration is limited to n <= 16");
  ConfigGenerator(n, filter, visit).run();
}

std::vector<TwoConfig> enumerate_configs(int n, PropertySet filter) {
  std::vector<TwoConfig> out;
  for_each_config(n, filter, [&out](const TwoConfig& c) { out.push_back(c); });
  return out;
}

}  // namespace vlab
