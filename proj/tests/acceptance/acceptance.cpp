// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "vlab/chain.hpp"
#include "vlab/config.hpp"
#include "vlab/dyck.hpp"
#include "vlab/oeis.hpp"
#include "vlab/rec.hpp"
#include "vlab/serialize.hpp"
#include "vlab/stirges.hpp"
#include "vlab/tree.hpp"

namespace {

using vlab::BigInt;
using vlab::ConfigFamily;
using vlab::TwoConfig;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(VLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trace_text(const vlab::ChainTrace& t) {
  std::string out;
  for (const auto& [stage, value] : t.stages) out += stage + ": " + value + "\n";
  return out;
}

Check recurrence_vs_oracle() {
  Check c;
  const std::vector<int> stated{1, 1, 2, 6, 23, 105, 549, 3207};
  std::vector<BigInt> totals;
  for (int n = 0; n <= 9; ++n) {
    const auto u = vlab::u_total(n);
    totals.push_back(u);
    c.require(u == BigInt(oracle::count_1_23_4_avoiders(n)), "recurrence differs from brute force at n=" + std::to_string(n));
    if (n < static_cast<int>(stated.size())) c.require(u == stated[n], "stated value differs at n=" + std::to_string(n));
  }
  const auto bundled = vlab::bundled_sequence("A113227");
  c.require(bundled && vlab::compare(*bundled, totals, 0).agree(), "A113227 snapshot disagrees");
  return c;
}

Check triangle_refinement() {
  Check c;
  const auto tri = vlab::u_triangle(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<BigInt> by_k(n + 1);
    std::uint64_t pool = 0;
    vlab::for_each_tree(n, [&](const vlab::IncOrderedTree& t) {
      ++pool;
      if (vlab::has_increasing_leaves(t)) by_k[vlab::root_degree(t)] += 1;
    });
    c.require(pool == oracle::odd_double_factorial(static_cast<int>(n)), "tree pool size at n=" + std::to_string(n));
    for (std::size_t k = 0; k <= n; ++k) {
      c.require(by_k[k] == tri.at(n, k), "trees by root degree differ at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return c;
}

Check dyck_refinement() {
  Check c;
  const auto tri = vlab::u_triangle(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<BigInt> by_k(n + 1);
    vlab::for_each_path(n, [&](const vlab::VMDyckPath& p) {
      const auto k = vlab::first_ascent(p);
      by_k[k] += 1;
      if (n >= 1) c.require(vlab::root_degree(vlab::path_to_tree(p)) == k, "first ascent differs from root degree: " + p.to_string());
    });
    const auto independent = oracle::dyck_by_first_ascent(static_cast<int>(n));
    for (std::size_t k = 0; k <= n; ++k) {
      c.require(by_k[k] == tri.at(n, k), "paths by first ascent differ at n=" + std::to_string(n));
      c.require(by_k[k] == BigInt(independent[k]), "paths differ from bitmask oracle at n=" + std::to_string(n));
    }
  }
  return c;
}

Check phi_suite() {
  Check c;
  using vlab::Flavor;
  for (int n = 1; n <= 6; ++n) {
    std::set<vlab::MultisetPermutation> images;
    std::size_t count = 0;
    vlab::MultisetStream stream(n, Flavor::gessel);
    while (auto g = stream.next()) {
      ++count;
      const auto s = vlab::phi_direct(*g);
      const auto word = vlab::trap_encode(*g, Flavor::gessel);
      c.require(vlab::phi_recursive(*g) == s, "recursive and direct differ");
      c.require(vlab::trap_decode(word, Flavor::stirling) == s, "trapezoidal description differs");
      c.require(oracle::is_stirling(s), "image is not Stirling");
      c.require(vlab::phi_inverse(s) == *g, "phi inverse fails");
      c.require(vlab::trap_decode(word, Flavor::gessel) == *g, "Gessel trapezoidal round trip");
      c.require(vlab::trap_encode(s, Flavor::stirling) == word, "Stirling trapezoidal round trip");
      images.insert(s);
    }
    c.require(count == oracle::odd_double_factorial(n), "Gessel count at n=" + std::to_string(n));
    c.require(images.size() == oracle::odd_double_factorial(n), "phi is not onto at n=" + std::to_string(n));
  }
  const vlab::MultisetPermutation g{2, 3, 1, 5, 4, 1, 2, 3, 4, 6, 5, 6};
  const vlab::MultisetPermutation s{2, 3, 3, 5, 5, 4, 4, 2, 1, 6, 6, 1};
  c.require(vlab::phi_direct(g) == s && vlab::phi_recursive(g) == s, "worked example image");
  c.require(vlab::trap_encode(g, Flavor::gessel) == vlab::TrapezoidalWord{1, 1, 2, 4, 4, 10}, "worked example word");
  return c;
}

std::vector<std::multiset<int>> supports(const TwoConfig& cfg) {
  std::vector<std::multiset<int>> out;
  for (const auto& comp : vlab::components(cfg).components) {
    std::multiset<int> s;
    for (auto b : comp.blocks) s.insert(cfg.blocks()[b].begin(), cfg.blocks()[b].end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Check configuration_suite() {
  Check c;
  const std::vector<std::uint64_t> all_counts{1, 2, 22, 554, 25606, 1891082};
  for (int n = 1; n <= 5; ++n) {
    std::map<ConfigFamily, std::vector<TwoConfig>> fam;
    std::uint64_t total = 0;
    vlab::for_each_config(n, {}, [&](const TwoConfig& cfg) {
      ++total;
      const auto props = vlab::properties(cfg).as_set();
      for (auto f : {ConfigFamily::W, ConfigFamily::X, ConfigFamily::Y, ConfigFamily::Z}) {
        if (props.contains(vlab::family_properties(f))) fam[f].push_back(cfg);
      }
    });
    const std::string at = " at n=" + std::to_string(n);
    c.require(total == all_counts[n], "2-configuration count" + at);
    const auto size = fam[ConfigFamily::W].size();
    for (auto f : {ConfigFamily::X, ConfigFamily::Y, ConfigFamily::Z}) {
      c.require(fam[f].size() == size, std::string("family ") + vlab::family_name(f) + " size" + at);
    }
    const std::set<TwoConfig> xs(fam[ConfigFamily::X].begin(), fam[ConfigFamily::X].end());
    const std::set<TwoConfig> ys(fam[ConfigFamily::Y].begin(), fam[ConfigFamily::Y].end());
    const std::set<TwoConfig> zs(fam[ConfigFamily::Z].begin(), fam[ConfigFamily::Z].end());
    std::set<TwoConfig> img_x, img_y, img_z;
    bool xy_support_moves = false, yz_support_moves = false;
    for (const auto& w : fam[ConfigFamily::W]) {
      const auto x = vlab::w_to_x(w);
      c.require(xs.count(x) == 1, "W->X leaves X" + at);
      c.require(vlab::x_to_w(x) == w, "X->W inverse" + at);
      c.require(vlab::components(x).components.size() == vlab::components(w).components.size(), "W->X components" + at);
      c.require(supports(x) == supports(w), "W->X supports" + at);
      img_x.insert(x);
    }
    for (const auto& x : fam[ConfigFamily::X]) {
      const auto y = vlab::x_to_y(x);
      c.require(ys.count(y) == 1, "X->Y leaves Y" + at);
      c.require(vlab::y_to_x(y) == x, "Y->X inverse" + at);
      c.require(vlab::components(y).components.size() == vlab::components(x).components.size(), "X->Y components" + at);
      xy_support_moves |= supports(y) != supports(x);
      img_y.insert(y);
    }
    for (const auto& y : fam[ConfigFamily::Y]) {
      const auto z = vlab::y_to_z(y);
      c.require(zs.count(z) == 1, "Y->Z leaves Z" + at);
      c.require(vlab::y_to_z_direct(y) == z, "direct Y->Z differs" + at);
      c.require(vlab::z_to_y(z) == y, "Z->Y inverse" + at);
      c.require(vlab::components(z).components.size() == vlab::components(y).components.size(), "Y->Z components" + at);
      yz_support_moves |= supports(z) != supports(y);
      img_z.insert(z);
    }
    c.require(img_x == xs && img_y == ys && img_z == zs, "a forward map is not onto" + at);
    if (n == 5) c.require(xy_support_moves && yz_support_moves, "X->Y or Y->Z never changes a support");
  }
  const auto cfg = [](const char* s) { return TwoConfig::parse(s); };
  c.require(vlab::w_to_x(cfg("1 | 13 5 | 8 5 | 8 3 | 11 4 3 | 9 4 | 9 6 | 6 2 | 2 | 7 | 10 | 12")) ==
                cfg("1 | 13 5 | 8 | 8 5 3 | 11 4 | 9 | 9 6 | 6 4 3 2 | 2 | 7 | 10 | 12"),
            "W->X figure");
  c.require(vlab::x_to_y(cfg("4 | 13 3 | 2 | 10 | 4 1 | 8 | 6 | 11 | 12 | 11 9 | 7 | 9 8 5 | 12")) ==
                cfg("4 | 13 4 3 | 2 | 10 | 1 | 8 | 8 6 | 11 | 12 | 11 9 | 9 7 | 5 | 12"),
            "X->Y figure");
  const auto y = cfg("3 | 7 | 8 5 | 9 4 2 | 1 | 6 3 | 7");
  const auto z = cfg("3 | 7 | 8 7 | 9 5 | 4 3 | 2 | 6 1");
  c.require(vlab::y_to_z(y) == z && vlab::y_to_z_direct(y) == z, "Y->Z figure");
  return c;
}

Check chain_suite() {
  Check c;
  const auto avoiders = vlab::enumerate_avoiders(7, vlab::pattern_1_23_4());
  c.require(avoiders.size() == 3207, "avoider count at n=7");
  std::set<vlab::IncOrderedTree> images;
  for (const auto& p : avoiders) {
    const auto a = vlab::p_to_a(p);
    c.require(vlab::a_to_p(a) == p, "a_to_p(p_to_a(p)) != p");
    const auto s = vlab::a_to_s(a);
    c.require(vlab::s_to_a(s) == a, "s_to_a(a_to_s(a)) != a");
    const auto j = vlab::s_to_j(s);
    c.require(vlab::j_to_s(j) == s, "j_to_s(s_to_j(s)) != s");
    const auto t = vlab::perm_to_tree(p);
    c.require(vlab::tree_to_perm(t) == p, "tree_to_perm(perm_to_tree(p)) != p");
    images.insert(t);
  }
  std::size_t trees = 0;
  vlab::for_each_tree(7, [&](const vlab::IncOrderedTree& t) {
    if (!vlab::has_increasing_leaves(t)) return;
    ++trees;
    const auto p = vlab::tree_to_perm(t);
    c.require(vlab::perm_to_tree(p) == t, "perm_to_tree(tree_to_perm(t)) != t");
    const auto s = vlab::j_to_s(vlab::janson(t));
    c.require(vlab::a_to_s(vlab::s_to_a(s)) == s, "a_to_s(s_to_a(s)) != s");
    c.require(vlab::p_to_a(vlab::a_to_p(vlab::s_to_a(s))) == vlab::s_to_a(s), "p_to_a(a_to_p(a)) != a");
    c.require(images.count(t) == 1, "tree missed by perm_to_tree");
  });
  c.require(trees == 3207, "increasing-leaf tree count at n=7");

  vlab::ChainTrace trace;
  vlab::perm_to_tree(vlab::Permutation({23, 4, 21, 6, 25, 24, 14, 22, 18, 20, 16, 13, 11, 19, 7, 5, 2, 8, 17, 12, 10, 1, 15, 3, 9}),
                     &trace);
  c.require(trace_text(trace) == slurp("chain_working_example.txt"), "working example trace differs from golden");
  c.require(trace.at("step3").find("17 | 8 2 12 10") != std::string::npos, "Step 3 display");
  c.require(trace.at("step7") ==
                "9 3 | 12 10 8 2 | 15 3 1 | 17 2 | 19 11 | 20 18 11 | 21 18 5 4 | 22 16 14 4 | 23 | 25 24 14 13 7 6",
            "Step 7 display");

  const vlab::MultisetPermutation j{1, 3, 5, 5, 3, 1, 2, 6, 7, 7, 6, 4, 8, 9, 9, 8, 4, 2, 10, 10};
  const auto s = vlab::j_to_s(j);
  vlab::ChainTrace st;
  st.add("stirling_perm", vlab::to_text(j));
  st.add("stirling_config", s.to_string());
  st.add("tree", vlab::tree_to_string(vlab::janson_inverse(j)));
  c.require(s.to_string() == "5 3 1 | 7 6 4 | 9 8 4 2 | 10", "Stirling configuration display");
  c.require(trace_text(st) == slurp("stirling_to_config.txt"), "Stirling display differs from golden");
  return c;
}

Check statistics() {
  Check c;
  const auto tensor = vlab::stat_tensor(8);
  const auto bell = oracle::bell_numbers(8);
  const std::vector<std::uint64_t> stated_bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  c.require(bell == stated_bell, "Bell oracle");
  // The tensor starts at n = 1; the empty permutation alone accounts for Bell(0).
  c.require(oracle::all_permutations(0).size() == stated_bell[0], "empty permutation");
  for (int n = 1; n <= 8; ++n) {
    std::map<vlab::StatKey, BigInt> brute;
    for (const auto& p : oracle::all_permutations(n)) {
      const auto s = oracle::ascent_stats(p);
      const auto u = [](int v) { return static_cast<std::size_t>(v); };
      brute[{u(n), u(s.i), u(s.j), u(s.k)}] += 1;
    }
    BigInt k0 = 0;
    for (const auto& [key, v] : tensor.cells()) {
      if (key.n != static_cast<std::size_t>(n) || v == 0) continue;
      const auto it = brute.find(key);
      c.require(it != brute.end() && it->second == v, "tensor cell differs at n=" + std::to_string(n));
      if (key.k == 0) k0 += v;
    }
    for (const auto& [key, v] : brute) c.require(tensor.at(key) == v, "brute cell missing at n=" + std::to_string(n));
    c.require(tensor.row_sum(n) == BigInt(oracle::factorial(n)), "row sum differs from n! at n=" + std::to_string(n));
    c.require(k0 == BigInt(stated_bell[n]), "k=0 marginal differs from Bell at n=" + std::to_string(n));
  }
  return c;
}

Check generating_function() {
  Check c;
  for (auto [y, z, w] : {std::tuple{1.0L, 1.0L, 0.5L}, std::tuple{2.0L, 0.7L, 0.3L}}) {
    const auto at20 = vlab::gf_check(20, 0.1L, y, z, w);
    const auto at40 = vlab::gf_check(40, 0.1L, y, z, w);
    std::ostringstream d;
    d << "y=" << static_cast<double>(y) << " gap " << static_cast<double>(at20.abs_diff) << " / "
      << static_cast<double>(at40.abs_diff);
    c.require(at20.within(1e-9L), "order 20 outside 1e-9: " + d.str());
    c.require(at40.within(1e-12L), "order 40 outside 1e-12: " + d.str());
  }
  return c;
}

Check codes() {
  Check c;
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<vlab::TreeCode> from_trees, from_paths;
    vlab::for_each_tree(n, [&](const vlab::IncOrderedTree& t) {
      if (!vlab::has_increasing_leaves(t)) return;
      const auto code = vlab::tree_code(t);
      c.require(vlab::tree_from_code(code) == t, "tree code round trip");
      c.require(vlab::path_to_tree(vlab::tree_to_path(t)) == t, "tree -> path -> tree");
      from_trees.insert(code);
    });
    vlab::for_each_path(n, [&](const vlab::VMDyckPath& p) {
      const auto code = vlab::path_code(p);
      c.require(vlab::path_from_code(code) == p, "path code round trip");
      c.require(vlab::tree_to_path(vlab::path_to_tree(p)) == p, "path -> tree -> path");
      from_paths.insert(code);
    });
    c.require(from_trees == from_paths, "code sets differ at n=" + std::to_string(n));
    c.require(BigInt(from_trees.size()) == vlab::u_total(n), "code count at n=" + std::to_string(n));
  }
  const vlab::TreeCode figure{{4, 2, 0, 0, 0, 1, 0, 1}, {{1, 3}, {5, 2}, {7, 1}}};
  const auto tree = vlab::path_to_tree(vlab::VMDyckPath::parse("UUUUDUUDDDDUDDUD 1:3 5:2 7:1"));
  c.require(vlab::tree_to_string(tree) == "0(2 3 1(4 6) 5(7(8)))", "figure tree");
  c.require(vlab::tree_code(tree) == figure, "figure code from tree");
  c.require(vlab::path_code(vlab::VMDyckPath::parse("UUUUDUUDDDDUDDUD 1:3 5:2 7:1")) == figure, "figure code from path");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"recurrence totals equal brute force, n <= 9", recurrence_vs_oracle},
      {"trees by root degree equal u(n,k), n <= 8", triangle_refinement},
      {"paths by first ascent equal u(n,k), n <= 8", dyck_refinement},
      {"phi descriptions agree and biject, n <= 6", phi_suite},
      {"configuration families and maps, n <= 5", configuration_suite},
      {"chain round trips at n = 7 and worked displays", chain_suite},
      {"statistics tensor equals brute force, n <= 8", statistics},
      {"generating function within tolerance", generating_function},
      {"tree and path codes, n <= 7", codes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!result.ok) std::cout << " (" << result.detail << ")";
    std::cout << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
    failures += !result.ok;
  }
  std::cout << (failures ? "FAILED: " : "all criteria passed") << (failures ? std::to_string(failures) : "") << std::endl;
  return failures ? 1 : 0;
}
