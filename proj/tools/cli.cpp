#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vlab/chain.hpp"
#include "vlab/config.hpp"
#include "vlab/dyck.hpp"
#include "vlab/error.hpp"
#include "vlab/oeis.hpp"
#include "vlab/perm.hpp"
#include "vlab/rec.hpp"
#include "vlab/serialize.hpp"
#include "vlab/stirges.hpp"
#include "vlab/tree.hpp"

namespace vlab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

struct Common {
  Format format = Format::json;
  bool unsafe = false;
};

void add_common(CLI::App* cmd, Common& common) {
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  cmd->add_option("--format", common.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_flag("--unsafe", common.unsafe, "Lift the size bounds on exhaustive work");
}

void check_bound(std::size_t n, std::size_t bound, const std::string& what, bool unsafe) {
  if (n > bound && !unsafe) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound) + " for " + what +
                     "; pass --unsafe to override");
  }
}

bool looks_like_json(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\n");
  return pos != std::string::npos && (s[pos] == '[' || s[pos] == '{');
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("input is not valid JSON: ") + e.what());
  }
}

Permutation read_permutation(const std::string& s) {
  if (looks_like_json(s)) return permutation_from_json(parse_json(s));
  return Permutation(ints_from_text(s));
}

MultisetPermutation read_multiset(const std::string& s) {
  if (looks_like_json(s)) return parse_json(s).get<std::vector<int>>();
  return ints_from_text(s);
}

TwoConfig read_config(const std::string& s) {
  if (looks_like_json(s)) return config_from_json(parse_json(s));
  return TwoConfig::parse(s);
}

VMDyckPath read_path(const std::string& s) {
  if (looks_like_json(s)) return path_from_json(parse_json(s));
  return VMDyckPath::parse(s);
}

// Bracket text "0(2 1(3))".
IncOrderedTree read_tree_text(const std::string& s) {
  std::vector<std::vector<int>> children;
  std::vector<int> stack;
  int last = -1;
  std::size_t pos = 0;
  auto ensure = [&children](int v) {
    if (v < 0) throw DomainError("negative tree label");
    if (static_cast<std::size_t>(v) >= children.size()) children.resize(v + 1);
  };
  while (pos < s.size()) {
    const char ch = s[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t used = 0;
      const int v = std::stoi(s.substr(pos), &used);
      pos += used;
      ensure(v);
      if (stack.empty()) {
        if (last != -1) throw DomainError("tree text has more than one root");
      } else {
        children[stack.back()].push_back(v);
      }
      last = v;
    } else if (ch == '(') {
      if (last == -1) throw DomainError("'(' without a parent label");
      stack.push_back(last);
      ++pos;
    } else if (ch == ')') {
      if (stack.empty()) throw DomainError("unbalanced ')'");
      stack.pop_back();
      ++pos;
    } else {
      throw DomainError(std::string("unexpected character '") + ch + "' in tree text");
    }
  }
  if (!stack.empty()) throw DomainError("unbalanced '('");
  if (children.empty()) throw DomainError("empty tree text");
  return IncOrderedTree(std::move(children));
}

IncOrderedTree read_tree(const std::string& s) {
  if (looks_like_json(s)) return tree_from_json(parse_json(s));
  return read_tree_text(s);
}

std::string perm_text(const Permutation& p) { return to_text({p.values().begin(), p.values().end()}); }

std::string big_text(const BigInt& v) { return v.str(); }

// Emits a single result in the requested format.
void emit(std::ostream& out, Format f, const json& as_json, const std::string& as_text) {
  if (f == Format::json) {
    out << as_json.dump() << '\n';
  } else {
    out << as_text << '\n';
  }
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::size_t n = 0;
  std::string method = "recurrence";
  bool by_k = false;
};

std::vector<BigInt> count_by_k(const CountArgs& a, bool unsafe) {
  std::vector<BigInt> by_k(a.n + 1, 0);
  if (a.method == "recurrence") {
    return u_triangle(a.n).row(a.n);
  }
  if (a.method == "trees") {
    check_bound(a.n, 8, "tree enumeration", unsafe);
    for_each_tree(a.n, [&by_k](const IncOrderedTree& t) {
      if (has_increasing_leaves(t)) by_k[root_degree(t)] += 1;
    });
    return by_k;
  }
  if (a.method == "dyck") {
    check_bound(a.n, 9, "path enumeration", unsafe);
    for_each_path(a.n, [&by_k](const VMDyckPath& p) { by_k[first_ascent(p)] += 1; });
    return by_k;
  }
  throw UsageError("method '" + a.method + "' does not refine by k; use recurrence, trees or dyck");
}

BigInt count_total(const CountArgs& a, bool unsafe) {
  if (a.method == "brute") {
    check_bound(a.n, 9, "brute force", unsafe);
    return BigInt(count_avoiders(a.n, pattern_1_23_4()));
  }
  if (a.method == "configs") {
    check_bound(a.n, 6, "configuration enumeration", unsafe);
    if (a.n == 0) return 1;
    std::size_t count = 0;
    for_each_config(static_cast<int>(a.n), family_properties(ConfigFamily::A), [&count](const TwoConfig&) { ++count; });
    return BigInt(count);
  }
  BigInt total = 0;
  for (const auto& v : count_by_k(a, unsafe)) total += v;
  return total;
}

int cmd_count(const CountArgs& a, const Common& c, std::ostream& out) {
  if (a.by_k) {
    const auto row = count_by_k(a, c.unsafe);
    if (c.format == Format::csv) {
      out << "n,k,u\n";
      for (std::size_t k = 0; k < row.size(); ++k) out << a.n << ',' << k << ',' << row[k] << '\n';
      return ok;
    }
    json arr = json::array();
    std::string text;
    for (std::size_t k = 0; k < row.size(); ++k) {
      arr.push_back(big_to_json(row[k]));
      text += (k ? " " : "") + big_text(row[k]);
    }
    emit(out, c.format, arr, text);
    return ok;
  }
  const BigInt total = count_total(a, c.unsafe);
  if (c.format == Format::csv) {
    out << "n,u\n" << a.n << ',' << total << '\n';
  } else {
    emit(out, c.format, big_to_json(total), big_text(total));
  }
  return ok;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::string object;
  std::size_t n = 0;
  std::string family;
  std::string filter;
  std::size_t limit = 0;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& c, std::ostream& out) {
  std::vector<std::pair<json, std::string>> items;
  auto add = [&](json j, std::string t) { items.emplace_back(std::move(j), std::move(t)); };
  if (a.object == "avoiders") {
    check_bound(a.n, 9, "brute force", c.unsafe);
    AvoiderStream stream(a.n, pattern_1_23_4());
    while (auto p = stream.next()) add(to_json(*p), perm_text(*p));
  } else if (a.object == "trees" || a.object == "all-trees") {
    check_bound(a.n, 8, "tree enumeration", c.unsafe);
    const bool only_increasing = a.object == "trees";
    for_each_tree(a.n, [&](const IncOrderedTree& t) {
      if (!only_increasing || has_increasing_leaves(t)) add(to_json(t), tree_to_string(t));
    });
  } else if (a.object == "paths") {
    check_bound(a.n, 9, "path enumeration", c.unsafe);
    for_each_path(a.n, [&](const VMDyckPath& p) { add(to_json(p), p.to_string()); });
  } else if (a.object == "stirling" || a.object == "gessel") {
    check_bound(a.n, 7, "multiset enumeration", c.unsafe);
    if (a.n == 0) throw UsageError("multiset enumeration requires n >= 1");
    MultisetStream stream(a.n, a.object == "stirling" ? Flavor::stirling : Flavor::gessel);
    while (auto m = stream.next()) add(to_json(*m), to_text(*m));
  } else if (a.object == "configs") {
    check_bound(a.n, 6, "configuration enumeration", c.unsafe);
    PropertySet filter = PropertySet::parse(a.filter);
    if (!a.family.empty()) {
      static const std::map<std::string, ConfigFamily> families{
          {"W", ConfigFamily::W}, {"X", ConfigFamily::X}, {"Y", ConfigFamily::Y},
          {"Z", ConfigFamily::Z}, {"A", ConfigFamily::A}, {"S", ConfigFamily::S}};
      auto it = families.find(a.family);
      if (it == families.end()) throw UsageError("unknown family '" + a.family + "'");
      const auto extra = family_properties(it->second);
      for (auto p : {Property::good_component, Property::single_incoming_arc, Property::no_crossing_in_component,
                     Property::gessel, Property::stirling, Property::restricted_first_entry}) {
        if (extra.has(p)) filter.set(p);
      }
    }
    for_each_config(static_cast<int>(a.n), filter, [&](const TwoConfig& cfg) { add(to_json(cfg), cfg.to_string()); });
  } else {
    throw UsageError("unknown object '" + a.object + "'");
  }
  if (a.limit && items.size() > a.limit) items.resize(a.limit);
  if (c.format == Format::json) {
    json arr = json::array();
    for (auto& [j, t] : items) arr.push_back(std::move(j));
    out << arr.dump() << '\n';
  } else {
    for (auto& [j, t] : items) out << t << '\n';
  }
  return ok;
}

// ---- map ------------------------------------------------------------------

struct MapArgs {
  std::string route;
  std::string input;
  bool trace = false;
};

std::string code_text(const TreeCode& code) {
  std::string out = "a=" + to_text({code.a.begin(), code.a.end()}) + " h=";
  bool first = true;
  for (auto [i, h] : code.h) {
    out += (first ? "" : " ") + std::to_string(i) + ":" + std::to_string(h);
    first = false;
  }
  return out;
}

std::string trace_text(const ChainTrace& trace) {
  std::string out;
  for (const auto& [stage, value] : trace.stages) out += (out.empty() ? "" : "\n") + stage + ": " + value;
  return out;
}

// Starts at the earliest of W, X, Y that contains the input.
void config_stages(TwoConfig cfg, ChainTrace& trace) {
  const int stage = in_family(cfg, ConfigFamily::W)   ? 0
                    : in_family(cfg, ConfigFamily::X) ? 1
                    : in_family(cfg, ConfigFamily::Y) ? 2
                                                      : -1;
  if (stage < 0) throw DomainError("config-wxyz: input lies in none of W, X, Y");
  if (stage == 0) {
    trace.add("w", cfg.to_string());
    cfg = w_to_x(cfg);
  }
  if (stage <= 1) {
    trace.add("x", cfg.to_string());
    cfg = x_to_y(cfg);
  }
  const auto steps = y_to_z_steps(cfg);
  trace.add("y", cfg.to_string());
  for (std::size_t k = 1; k + 1 < steps.size(); ++k) trace.add("y_step" + std::to_string(k), steps[k].to_string());
  trace.add("z", steps.back().to_string());
}

int cmd_map(const MapArgs& a, const Common& c, std::ostream& out) {
  // Every route records its input, intermediates and output; --trace prints
  // them all, otherwise only the final object is printed.
  ChainTrace trace;
  json result;
  std::string text;
  const std::string& r = a.route;
  if (r == "perm-tree") {
    const auto t = perm_to_tree(read_permutation(a.input), &trace);
    result = to_json(t), text = tree_to_string(t);
  } else if (r == "perm-config") {
    const auto cfg = p_to_a(read_permutation(a.input), &trace);
    result = to_json(cfg), text = cfg.to_string();
  } else if (r == "tree-perm") {
    const auto t = read_tree(a.input);
    trace.add("tree", tree_to_string(t));
    const auto j = janson(t);
    trace.add("stirling_perm", to_text(j));
    const auto s = j_to_s(j);
    trace.add("stirling_config", s.to_string());
    const auto cfg = s_to_a(s);
    trace.add("avoider_config", cfg.to_string());
    const auto p = a_to_p(cfg);
    trace.add("perm", perm_text(p));
    result = to_json(p), text = perm_text(p);
  } else if (r == "config-perm") {
    const auto cfg = read_config(a.input);
    trace.add("avoider_config", cfg.to_string());
    const auto p = a_to_p(cfg);
    trace.add("perm", perm_text(p));
    result = to_json(p), text = perm_text(p);
  } else if (r == "gessel-stirling") {
    const auto g = read_multiset(a.input);
    const auto s = phi_direct(g);
    trace.add("gessel", to_text(g));
    trace.add("trapezoidal_word", to_text(trap_encode(g, Flavor::gessel)));
    trace.add("stirling", to_text(s));
    result = to_json(s), text = to_text(s);
  } else if (r == "stirling-gessel") {
    const auto s = read_multiset(a.input);
    const auto g = phi_inverse(s);
    trace.add("stirling", to_text(s));
    trace.add("trapezoidal_word", to_text(trap_encode(s, Flavor::stirling)));
    trace.add("gessel", to_text(g));
    result = to_json(g), text = to_text(g);
  } else if (r == "tree-stirling") {
    const auto t = read_tree(a.input);
    const auto s = janson(t);
    trace.add("tree", tree_to_string(t));
    trace.add("stirling_perm", to_text(s));
    if (is_increasing_plateau(s)) trace.add("stirling_config", j_to_s(s).to_string());
    result = to_json(s), text = to_text(s);
  } else if (r == "stirling-tree") {
    const auto s = read_multiset(a.input);
    trace.add("stirling_perm", to_text(s));
    if (is_increasing_plateau(s)) trace.add("stirling_config", j_to_s(s).to_string());
    const auto t = janson_inverse(s);
    trace.add("tree", tree_to_string(t));
    result = to_json(t), text = tree_to_string(t);
  } else if (r == "path-tree") {
    const auto p = read_path(a.input);
    trace.add("path", p.to_string());
    trace.add("code", code_text(path_code(p)));
    const auto t = path_to_tree(p);
    trace.add("tree", tree_to_string(t));
    result = to_json(t), text = tree_to_string(t);
  } else if (r == "tree-path") {
    const auto t = read_tree(a.input);
    trace.add("tree", tree_to_string(t));
    trace.add("code", code_text(tree_code(t)));
    const auto p = tree_to_path(t);
    trace.add("path", p.to_string());
    result = to_json(p), text = p.to_string();
  } else if (r == "config-wxyz") {
    config_stages(read_config(a.input), trace);
    result = to_json(trace), text = trace_text(trace);
  } else {
    throw UsageError("unknown route '" + r + "'");
  }
  if (a.trace) {
    emit(out, c.format, to_json(trace), trace_text(trace));
  } else {
    emit(out, c.format, result, text);
  }
  return ok;
}

// ---- verify ---------------------------------------------------------------

struct Tally {
  std::size_t n = 0;
  std::size_t passed = 0;
  std::size_t total = 0;
};

using Suite = std::function<Tally(std::size_t)>;

Tally phi_suite(std::size_t n) {
  Tally t{n, 0, 0};
  std::set<MultisetPermutation> images;
  MultisetStream stream(n, Flavor::gessel);
  while (auto g = stream.next()) {
    ++t.total;
    const auto s = phi_direct(*g);
    const bool agree = phi_recursive(*g) == s && trap_decode(trap_encode(*g, Flavor::gessel), Flavor::stirling) == s;
    const bool round = phi_inverse(s) == *g && trap_decode(trap_encode(*g, Flavor::gessel), Flavor::gessel) == *g &&
                       trap_decode(trap_encode(s, Flavor::stirling), Flavor::stirling) == s;
    if (agree && round && is_stirling(s) && images.insert(s).second) ++t.passed;
  }
  return t;
}

Tally chain_suite(std::size_t n) {
  Tally t{n, 0, 0};
  AvoiderStream stream(n, pattern_1_23_4());
  while (auto p = stream.next()) {
    ++t.total;
    try {
      const auto a = p_to_a(*p);
      const auto s = a_to_s(a);
      const auto tree = janson_inverse(s_to_j(s));
      if (a_to_p(a) == *p && s_to_a(s) == a && j_to_s(s_to_j(s)) == s && has_increasing_leaves(tree) &&
          tree_to_perm(tree) == *p) {
        ++t.passed;
      }
    } catch (const DomainError&) {
    }
  }
  return t;
}

Tally configs_suite(std::size_t n) {
  Tally t{n, 0, 0};
  for_each_config(static_cast<int>(n), family_properties(ConfigFamily::W), [&t](const TwoConfig& w) {
    ++t.total;
    try {
      const auto x = w_to_x(w);
      const auto y = x_to_y(x);
      const auto z = y_to_z(y);
      if (in_family(z, ConfigFamily::Z) && y_to_z_direct(y) == z && z_to_y(z) == y && y_to_x(y) == x &&
          x_to_w(x) == w) {
        ++t.passed;
      }
    } catch (const DomainError&) {
    }
  });
  return t;
}

Tally codes_suite(std::size_t n) {
  Tally t{n, 0, 0};
  for_each_tree(n, [&t](const IncOrderedTree& tree) {
    if (!has_increasing_leaves(tree)) return;
    ++t.total;
    const auto code = tree_code(tree);
    if (tree_from_code(code) == tree && path_code(path_from_code(code)) == code) ++t.passed;
  });
  return t;
}

Tally stats_suite(std::size_t n) {
  std::map<StatKey, std::size_t> brute;
  Tally t{n, 0, 0};
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    const auto s = ascent_stats(Permutation(v));
    ++brute[StatKey{n, s.short_segments, s.long_segments, s.free_ascents}];
  } while (std::next_permutation(v.begin(), v.end()));
  const auto tensor = stat_tensor(n);
  std::set<StatKey> keys;
  for (const auto& [key, count] : brute) keys.insert(key);
  for (const auto& [key, value] : tensor.cells()) {
    if (key.n == n) keys.insert(key);
  }
  for (const auto& key : keys) {
    ++t.total;
    const auto it = brute.find(key);
    if (tensor.at(key) == BigInt(it == brute.end() ? 0 : it->second)) ++t.passed;
  }
  return t;
}

Tally recurrence_suite(std::size_t n) {
  return Tally{n, u_total(n) == count_avoiders(n, pattern_1_23_4()) ? 1u : 0u, 1};
}

int cmd_verify(const std::string& suite, std::size_t max_n, const Common& c, std::ostream& out) {
  struct SuiteInfo {
    Suite run;
    std::size_t first;
    std::size_t bound;
    const char* what;
    const char* noun;
  };
  static const std::map<std::string, SuiteInfo> suites{
      {"phi", {phi_suite, 1, 7, "multiset enumeration", "round trips"}},
      {"chain", {chain_suite, 1, 8, "brute force", "round trips"}},
      {"configs", {configs_suite, 1, 5, "configuration enumeration", "round trips"}},
      {"codes", {codes_suite, 0, 8, "tree enumeration", "round trips"}},
      {"recurrence", {recurrence_suite, 0, 9, "brute force", "counts"}},
      {"stats", {stats_suite, 1, 8, "brute force", "cells"}},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw UsageError("unknown suite '" + suite + "'");
  const auto& info = it->second;
  check_bound(max_n, info.bound, info.what, c.unsafe);
  bool all = true;
  json results = json::array();
  for (std::size_t n = info.first; n <= max_n; ++n) {
    const Tally t = info.run(n);
    const bool pass = t.passed == t.total;
    all = all && pass;
    const std::string report = std::to_string(t.passed) + "/" + std::to_string(t.total) + " " + info.noun + " " +
                               (pass ? "ok" : "FAILED");
    if (c.format == Format::json) {
      results.push_back({{"n", n}, {"passed", t.passed}, {"total", t.total}, {"report", report}});
    } else if (c.format == Format::csv) {
      if (n == info.first) out << "n,passed,total\n";
      out << n << ',' << t.passed << ',' << t.total << '\n';
    } else {
      out << "n=" << n << ": " << report << '\n';
    }
  }
  if (c.format == Format::json) out << json{{"suite", suite}, {"ok", all}, {"results", results}}.dump() << '\n';
  return all ? ok : verification_failed;
}

// ---- gf -------------------------------------------------------------------

struct GfArgs {
  std::size_t order = 20;
  double x = 0.1, y = 1, z = 1, w = 0.5;
  double tolerance = 1e-9;
};

int cmd_gf(const GfArgs& a, const Common& c, std::ostream& out) {
  check_bound(a.order, 40, "series order", c.unsafe);
  const auto r = gf_check(a.order, a.x, a.y, a.z, a.w);
  const bool pass = r.within(a.tolerance);
  if (c.format == Format::json) {
    out << json{{"order", a.order},
                {"x", a.x},
                {"y", a.y},
                {"z", a.z},
                {"w", a.w},
                {"series", static_cast<double>(r.series_value)},
                {"closed_form", static_cast<double>(r.closed_value)},
                {"abs_diff", static_cast<double>(r.abs_diff)},
                {"tolerance", a.tolerance},
                {"within", pass}}
               .dump()
        << '\n';
  } else {
    std::ostringstream s;
    s << std::setprecision(18) << "series " << r.series_value << " closed " << r.closed_value << " diff "
      << r.abs_diff << (pass ? " ok" : " FAILED");
    out << s.str() << '\n';
  }
  return pass ? ok : verification_failed;
}

// ---- oeis -----------------------------------------------------------------

struct OeisArgs {
  std::string id;
  std::size_t max_n = 10;
  bool offline = false;
  std::string cache_dir;
};

int cmd_oeis(const OeisArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (!valid_sequence_id(a.id)) throw UsageError("malformed sequence id '" + a.id + "'");
  FetchOptions options = FetchOptions::from_env();
  if (a.offline) options.offline = true;
  if (!a.cache_dir.empty()) options.cache_dir = a.cache_dir;
  SequenceRecord record;
  try {
    record = fetch(a.id, options);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return verification_failed;
  }
  std::vector<BigInt> computed;
  if (a.id == "A113227") {
    for (std::size_t n = 0; n <= a.max_n; ++n) computed.push_back(u_total(n));
  } else if (a.id == "A113226") {
    check_bound(a.max_n, 9, "brute force", c.unsafe);
    const auto pattern = DashedPattern::parse("12-34");
    for (std::size_t n = 0; n <= a.max_n; ++n) computed.emplace_back(count_avoiders(n, pattern));
  }
  if (computed.empty()) {
    json terms = json::array();
    for (const auto& t : record.terms) terms.push_back(big_to_json(t));
    emit(out, c.format, json{{"id", record.id}, {"source", source_name(record.source)}, {"terms", terms}},
         record.id + " (" + source_name(record.source) + "): " + std::to_string(record.terms.size()) + " terms");
    return ok;
  }
  const auto report = compare(record, computed, 0);
  json j{{"id", record.id}, {"source", source_name(record.source)}, {"compared", report.compared},
         {"agree", report.agree()}};
  std::string text = record.id + " (" + source_name(record.source) + "): ";
  if (report.first_mismatch) {
    j["first_mismatch"] = *report.first_mismatch;
    j["expected"] = big_to_json(report.expected);
    j["actual"] = big_to_json(report.actual);
    text += "first mismatch at index " + std::to_string(*report.first_mismatch) + " (expected " +
            report.expected.str() + ", computed " + report.actual.str() + ")";
  } else {
    text += std::to_string(report.compared) + " terms agree";
  }
  emit(out, c.format, j, text);
  return report.agree() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoidance bijections toolkit"};
  app.name("vlab");
  app.require_subcommand(1);

  Common common;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count (1-23-4)-avoiders of size n");
  count->add_option("--n", count_args.n, "Size")->required();
  count->add_option("--method", count_args.method, "recurrence, brute, trees, dyck or configs")
      ->check(CLI::IsMember({"recurrence", "brute", "trees", "dyck", "configs"}));
  count->add_flag("--by-k", count_args.by_k, "Refine by root degree / first ascent k");
  add_common(count, common);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects of size n");
  enumerate->add_option("--object", enum_args.object, "avoiders, trees, all-trees, paths, stirling, gessel, configs")
      ->required();
  enumerate->add_option("--n", enum_args.n, "Size")->required();
  enumerate->add_option("--family", enum_args.family, "Configuration family W, X, Y, Z, A or S");
  enumerate->add_option("--filter", enum_args.filter, "Comma-separated configuration properties");
  enumerate->add_option("--limit", enum_args.limit, "Print at most this many objects");
  add_common(enumerate, common);

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--route", map_args.route, "perm-tree, tree-perm, perm-config, config-perm, gessel-stirling, "
                                             "stirling-gessel, tree-stirling, stirling-tree, path-tree, tree-path, "
                                             "config-wxyz")
      ->required();
  map->add_option("--input", map_args.input, "Input object (text or JSON)")->required();
  map->add_flag("--trace", map_args.trace, "Emit every intermediate stage");
  add_common(map, common);

  std::string suite;
  std::size_t max_n = 5;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("--suite", suite, "phi, chain, configs, codes, recurrence or stats")->required();
  verify->add_option("--max-n", max_n, "Largest size checked");
  add_common(verify, common);

  GfArgs gf_args;
  auto* gf = app.add_subcommand("gf", "Compare the truncated series with the closed form");
  gf->add_option("--order", gf_args.order, "Truncation order");
  gf->add_option("--x", gf_args.x);
  gf->add_option("--y", gf_args.y);
  gf->add_option("--z", gf_args.z);
  gf->add_option("--w", gf_args.w);
  gf->add_option("--tol", gf_args.tolerance, "Absolute tolerance");
  add_common(gf, common);

  OeisArgs oeis_args;
  auto* oeis = app.add_subcommand("oeis", "Diff computed counts against an OEIS b-file");
  oeis->add_option("--id", oeis_args.id, "Sequence id such as A113227")->required();
  oeis->add_option("--max-n", oeis_args.max_n, "Largest n computed");
  oeis->add_flag("--offline", oeis_args.offline, "Skip the network");
  oeis->add_option("--cache-dir", oeis_args.cache_dir, "Cache directory");
  add_common(oeis, common);

  std::vector<std::string> storage{"vlab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (*count) return cmd_count(count_args, common, out);
    if (*enumerate) return cmd_enumerate(enum_args, common, out);
    if (*map) return cmd_map(map_args, common, out);
    if (*verify) return cmd_verify(suite, max_n, common, out);
    if (*gf) return cmd_gf(gf_args, common, out);
    if (*oeis) return cmd_oeis(oeis_args, common, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace vlab::cli
