#pragma once

// Exact recurrence tables: the triangle u(n,k) counting (1-23-4)-avoiders by
// root degree of the corresponding tree, and the four-index table u(n,i,j,k)
// of permutations by short segments, long segments and free ascents.

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "vlab/bigint.hpp"

namespace vlab {

class CountTriangle {
 public:
  /// rows[n] holds u(n,0..n).
  explicit CountTriangle(std::vector<std::vector<BigInt>> rows);

  std::size_t n_max() const { return rows_.size() - 1; }
  /// u(n,k); zero outside 0 <= k <= n <= n_max.
  const BigInt& at(std::size_t n, std::size_t k) const;
  BigInt row_total(std::size_t n) const;
  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// u(n,k) = u(n-1,k-1) + k * sum_{j>=k} u(n-1,j), u(0,0) = 1.
CountTriangle u_triangle(std::size_t n_max);

/// u(n) = sum_k u(n,k).
BigInt u_total(std::size_t n);

struct StatKey {
  std::size_t n = 0;
  std::size_t i = 0;  // short segments
  std::size_t j = 0;  // long segments
  std::size_t k = 0;  // free ascents

  auto operator<=>(const StatKey&) const = default;
};

/// Sparse table of u(n,i,j,k). Missing cells are zero.
class StatTensor {
 public:
  using Map = std::map<StatKey, BigInt>;

  explicit StatTensor(std::size_t n_max, Map cells) : n_max_(n_max), cells_(std::move(cells)) {}

  std::size_t n_max() const { return n_max_; }
  BigInt at(const StatKey& key) const;
  BigInt row_sum(std::size_t n) const;
  const Map& cells() const { return cells_; }

 private:
  std::size_t n_max_;
  Map cells_;
};

/// Fills u(n,i,j,k) from u(1,1,0,0) = 1 for every cell reachable by the
/// insertion recurrence, including cells with i = 0.
StatTensor stat_tensor(std::size_t n_max);

struct GfCheck {
  long double series_value = 0;
  long double closed_value = 0;
  long double abs_diff = 0;

  bool within(long double tolerance) const { return abs_diff < tolerance; }
};

/// Compares the truncated series of F(x,y,z,w) built from stat_tensor(order)
/// with the closed form e^{x(y-z)} ((1-w)/(1-w e^{x(1-w)}))^{z/w}.
/// Throws DomainError for w == 0, |w| >= 1, or |w e^{x(1-w)}| >= 1.
GfCheck gf_check(std::size_t order, long double x, long double y, long double z, long double w);

/// Closed form alone (same domain restrictions as gf_check).
long double gf_closed_form(long double x, long double y, long double z, long double w);

void write_csv(std::ostream& out, const CountTriangle& t);
void write_csv(std::ostream& out, const StatTensor& t);
nlohmann::json to_json(const CountTriangle& t);
nlohmann::json to_json(const StatTensor& t);

}  // namespace vlab
