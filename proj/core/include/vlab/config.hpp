#pragma once

// 2-configurations: ordered lists of strictly decreasing blocks partitioning
// [n] plus a subset of [n] (the repeaters), together with arcs, components,
// bad repeaters, the six structural properties, and the bijections between
// the property-defined sets W, X, Y, Z.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlab {

using Block = std::vector<int>;
using Blocks = std::vector<Block>;

/// Position of one occurrence of a value.
struct Occurrence {
  std::size_t block = 0;
  std::size_t index = 0;  // within the block
  std::size_t flat = 0;   // within the flattened configuration
};

class TwoConfig {
 public:
  /// Validates `blocks` against the 2-configuration conditions. When `n` is
  /// not given it is the largest entry. Throws DomainError naming the first
  /// violated condition ("condition k violated at block b", 1-based b).
  static TwoConfig make(Blocks blocks, std::optional<int> n = std::nullopt);
  /// Non-throwing variant.
  static std::optional<TwoConfig> try_make(Blocks blocks, std::optional<int> n = std::nullopt);

  /// Parses "10 5 | 9 2 | 8 7 5".
  static TwoConfig parse(std::string_view text);

  int n() const { return n_; }
  const Blocks& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<int>& flat() const { return flat_; }
  std::size_t block_of_flat(std::size_t pos) const { return block_of_flat_[pos]; }

  bool is_repeater(int v) const { return second_[v].has_value(); }
  std::vector<int> repeaters() const;
  const Occurrence& first(int v) const { return first_[v]; }
  /// Second occurrence; only valid for repeaters.
  const Occurrence& second(int v) const { return *second_[v]; }

  std::string to_string() const;

  bool operator==(const TwoConfig& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  auto operator<=>(const TwoConfig& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return blocks_ <=> o.blocks_;
  }

 private:
  TwoConfig() = default;
  static std::string check(const Blocks& blocks, int n);

  int n_ = 0;
  Blocks blocks_;
  std::vector<int> flat_;
  std::vector<std::size_t> block_of_flat_;
  std::vector<Occurrence> first_;                  // indexed by value
  std::vector<std::optional<Occurrence>> second_;  // indexed by value
};

struct Component {
  std::vector<std::size_t> blocks;  // left to right
  int min_entry = 0;
  std::optional<std::size_t> critical;  // absent for singletons
};

/// Components ordered by increasing minimum entry.
struct ComponentView {
  std::vector<Component> components;
  /// component index of each block
  std::vector<std::size_t> component_of_block;
};

ComponentView components(const TwoConfig& c);

struct BadRepeater {
  int value = 0;
  bool type1 = false;  // first occurrence not last in its block
  bool type2 = false;  // second occurrence not last in its block
  bool type3 = false;  // neither
  std::vector<int> delinquents;  // flattened order
};

/// Bad repeaters in order of first occurrence.
struct BadRepeaterReport {
  std::vector<BadRepeater> bad;

  const BadRepeater* find(int value) const;
};

BadRepeaterReport bad_repeaters(const TwoConfig& c);

enum class Property : std::uint8_t {
  good_component = 1 << 0,
  single_incoming_arc = 1 << 1,
  no_crossing_in_component = 1 << 2,
  gessel = 1 << 3,
  stirling = 1 << 4,
  restricted_first_entry = 1 << 5,
};

/// Bit set of Property values.
class PropertySet {
 public:
  constexpr PropertySet() = default;
  constexpr PropertySet(std::initializer_list<Property> props) {
    for (auto p : props) bits_ |= static_cast<std::uint8_t>(p);
  }
  constexpr bool has(Property p) const { return bits_ & static_cast<std::uint8_t>(p); }
  constexpr void set(Property p) { bits_ |= static_cast<std::uint8_t>(p); }
  constexpr bool contains(PropertySet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool operator==(const PropertySet&) const = default;

  /// Parses comma-separated names such as "stirling,restricted_first_entry".
  static PropertySet parse(std::string_view names);

 private:
  std::uint8_t bits_ = 0;
};

struct Properties {
  bool good_component = false;
  bool single_incoming_arc = false;
  bool no_crossing_in_component = false;
  bool gessel = false;
  bool stirling = false;
  bool restricted_first_entry = false;

  PropertySet as_set() const;
};

Properties properties(const TwoConfig& c);

/// The property-defined families.
enum class ConfigFamily { W, X, Y, Z, A, S };

PropertySet family_properties(ConfigFamily f);
bool in_family(const TwoConfig& c, ConfigFamily f);
const char* family_name(ConfigFamily f);

/// Visits every valid size-n 2-configuration whose properties include
/// `filter`. Order: repeater subsets by increasing bitmask, then blocks left
/// to right by increasing entry bitmask.
void for_each_config(int n, PropertySet filter, const std::function<void(const TwoConfig&)>& visit);
std::vector<TwoConfig> enumerate_configs(int n, PropertySet filter = {});

// Bijections W -> X -> Y -> Z and inverses.

TwoConfig w_to_x(const TwoConfig& c);
TwoConfig x_to_y(const TwoConfig& c);
TwoConfig y_to_z(const TwoConfig& c);

/// Intermediate configurations of y_to_z, starting with the input.
std::vector<TwoConfig> y_to_z_steps(const TwoConfig& c);

/// w_i (indexed 1..n, entry 0 unused): blocks weakly preceding the first i
/// that contain an entry <= i.
std::vector<int> w_vector(const TwoConfig& c);

struct DirectPlacement {
  std::vector<int> w;           // w_vector of the input
  std::vector<int> enders;      // increasing
  std::vector<int> non_enders;  // increasing
  /// Block contents after each ender is placed (largest ender first).
  std::vector<Blocks> ender_rows;
  TwoConfig result;
};

/// Y -> Z through the ender/non-ender placement construction.
DirectPlacement y_to_z_direct_trace(const TwoConfig& c);
TwoConfig y_to_z_direct(const TwoConfig& c);

/// Literal per-component reading of the direct W -> X description, used only
/// as a cross-check against w_to_x.
TwoConfig w_to_x_direct(const TwoConfig& c);

TwoConfig x_to_w(const TwoConfig& c);
TwoConfig y_to_x(const TwoConfig& c);
TwoConfig z_to_y(const TwoConfig& c);

/// x_to_w computed by predecessor search instead of the local rule.
TwoConfig x_to_w_by_search(const TwoConfig& c);

}  // namespace vlab
