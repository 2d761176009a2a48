#include "vlab/serialize.hpp"

#include <limits>
#include <sstream>

#include "vlab/error.hpp"

namespace vlab {

namespace {

nlohmann::json tree_node(const IncOrderedTree& t, int v) {
  auto kids = nlohmann::json::array();
  for (int c : t.children(v)) kids.push_back(tree_node(t, c));
  return {{"label", v}, {"children", std::move(kids)}};
}

void read_tree_node(const nlohmann::json& j, std::vector<std::vector<int>>& children) {
  const int v = j.at("label").get<int>();
  if (v < 0) throw DomainError("negative tree label");
  if (static_cast<std::size_t>(v) >= children.size()) children.resize(v + 1);
  for (const auto& kid : j.at("children")) {
    const int c = kid.at("label").get<int>();
    if (c < 0) throw DomainError("negative tree label");
    if (static_cast<std::size_t>(c) >= children.size()) children.resize(c + 1);
    children[v].push_back(c);
    read_tree_node(kid, children);
  }
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

}  // namespace

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("big integer must be a number or a decimal string");
}

nlohmann::json to_json(const Permutation& p) { return std::vector<int>(p.values().begin(), p.values().end()); }

nlohmann::json to_json(const MultisetPermutation& m) { return nlohmann::json(std::vector<int>(m)); }

nlohmann::json to_json(const TwoConfig& c) { return c.blocks(); }

nlohmann::json to_json(const IncOrderedTree& t) { return tree_node(t, 0); }

nlohmann::json to_json(const TreeCode& c) {
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [i, v] : c.h) h[std::to_string(i)] = v;
  return {{"a", c.a}, {"h", std::move(h)}};
}

nlohmann::json to_json(const VMDyckPath& p) {
  nlohmann::json marks = nlohmann::json::object();
  for (const auto& [i, h] : p.marks()) marks[std::to_string(i)] = h;
  return {{"steps", p.steps()}, {"marks", std::move(marks)}};
}

nlohmann::json to_json(const ChainTrace& t) {
  auto out = nlohmann::json::array();
  for (const auto& [stage, value] : t.stages) out.push_back({{"stage", stage}, {"value", value}});
  return out;
}

Permutation permutation_from_json(const nlohmann::json& j) {
  return guarded("permutation", [&] { return Permutation(j.get<std::vector<int>>()); });
}

TwoConfig config_from_json(const nlohmann::json& j) {
  return guarded("configuration", [&] { return TwoConfig::make(j.get<Blocks>()); });
}

IncOrderedTree tree_from_json(const nlohmann::json& j) {
  return guarded("tree", [&] {
    if (j.at("label").get<int>() != 0) throw DomainError("tree root must have label 0");
    std::vector<std::vector<int>> children(1);
    read_tree_node(j, children);
    return IncOrderedTree(std::move(children));
  });
}

TreeCode code_from_json(const nlohmann::json& j) {
  return guarded("code", [&] {
    TreeCode c;
    c.a = j.at("a").get<std::vector<std::size_t>>();
    if (j.contains("h")) {
      for (const auto& [key, value] : j.at("h").items()) c.h[std::stoul(key)] = value.get<std::size_t>();
    }
    validate_code(c);
    return c;
  });
}

VMDyckPath path_from_json(const nlohmann::json& j) {
  return guarded("path", [&] {
    std::map<std::size_t, std::size_t> marks;
    if (j.contains("marks")) {
      for (const auto& [key, value] : j.at("marks").items()) marks[std::stoul(key)] = value.get<std::size_t>();
    }
    return VMDyckPath(j.at("steps").get<std::string>(), std::move(marks));
  });
}

std::string to_text(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> ints_from_text(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw DomainError("invalid integer '" + token + "'");
    }
  }
  return out;
}

}  // namespace vlab
