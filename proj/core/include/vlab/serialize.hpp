#pragma once

// JSON and text forms of the library's objects, shared by the CLI and tests.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vlab/bigint.hpp"
#include "vlab/chain.hpp"
#include "vlab/config.hpp"
#include "vlab/dyck.hpp"
#include "vlab/perm.hpp"
#include "vlab/stirges.hpp"
#include "vlab/tree.hpp"

namespace vlab {

/// A JSON number when the value fits in uint64, else a decimal string.
nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const MultisetPermutation& m);
nlohmann::json to_json(const TwoConfig& c);
/// {"label":0,"children":[...]}
nlohmann::json to_json(const IncOrderedTree& t);
/// {"a":[...],"h":{"1":3}}
nlohmann::json to_json(const TreeCode& c);
/// {"steps":"UUDD","marks":{"1":3}}
nlohmann::json to_json(const VMDyckPath& p);
/// [{"stage":"step3","value":"..."},...]
nlohmann::json to_json(const ChainTrace& t);

Permutation permutation_from_json(const nlohmann::json& j);
TwoConfig config_from_json(const nlohmann::json& j);
IncOrderedTree tree_from_json(const nlohmann::json& j);
TreeCode code_from_json(const nlohmann::json& j);
VMDyckPath path_from_json(const nlohmann::json& j);

/// Text forms: "2 1" or "2,1" for sequences.
std::string to_text(const std::vector<int>& values);
std::vector<int> ints_from_text(std::string_view text);

}  // namespace vlab
