#include "vlab/rec.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vlab/error.hpp"
#include "vlab/serialize.hpp"

namespace vlab {

namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

CountTriangle::CountTriangle(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("count triangle needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw DomainError("count triangle row " + std::to_string(n) + " has wrong length");
  }
}

const BigInt& CountTriangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size() || k > n) return zero();
  return rows_[n][k];
}

BigInt CountTriangle::row_total(std::size_t n) const {
  BigInt total = 0;
  for (const auto& v : rows_.at(n)) total += v;
  return total;
}

CountTriangle u_triangle(std::size_t n_max) {
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  rows[0] = {BigInt(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = rows[n - 1];
    auto& cur = rows[n];
    cur.assign(n + 1, BigInt(0));
    // tail[k] = sum_{j >= k} u(n-1, j)
    std::vector<BigInt> tail(n + 1, BigInt(0));
    for (std::size_t k = n; k-- > 0;) tail[k] = tail[k + 1] + prev[k];
    for (std::size_t k = 1; k <= n; ++k) cur[k] = prev[k - 1] + BigInt(k) * tail[k];
  }
  return CountTriangle(std::move(rows));
}

BigInt u_total(std::size_t n) { return u_triangle(n).row_total(n); }

BigInt StatTensor::at(const StatKey& key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? BigInt(0) : it->second;
}

BigInt StatTensor::row_sum(std::size_t n) const {
  BigInt total = 0;
  for (auto it = cells_.lower_bound(StatKey{n, 0, 0, 0}); it != cells_.end() && it->first.n == n; ++it) {
    total += it->second;
  }
  return total;
}

StatTensor stat_tensor(std::size_t n_max) {
  if (n_max < 1) throw DomainError("stat_tensor requires n_max >= 1");
  StatTensor::Map cells;
  cells[StatKey{1, 1, 0, 0}] = 1;
  auto get = [&cells](std::size_t n, long i, long j, long k) -> BigInt {
    if (i < 0 || j < 0 || k < 0) return 0;
    auto it = cells.find(StatKey{n, std::size_t(i), std::size_t(j), std::size_t(k)});
    return it == cells.end() ? BigInt(0) : it->second;
  };
  for (std::size_t n = 2; n <= n_max; ++n) {
    const long N = static_cast<long>(n);
    for (long i = 0; i <= N; ++i) {
      for (long j = 0; i + 2 * j <= N; ++j) {
        if (i + j < 1) continue;
        for (long k = 0; k <= N - i - j; ++k) {
          BigInt v = get(n - 1, i - 1, j, k) + BigInt(j + k) * get(n - 1, i, j, k) +
                     BigInt(i + 1) * get(n - 1, i + 1, j - 1, k) +
                     BigInt(N - i - j - k) * get(n - 1, i, j, k - 1);
          if (v != 0) cells[StatKey{n, std::size_t(i), std::size_t(j), std::size_t(k)}] = std::move(v);
        }
      }
    }
  }
  return StatTensor(n_max, std::move(cells));
}

long double gf_closed_form(long double x, long double y, long double z, long double w) {
  if (w == 0) {
    throw DomainError("w = 0: the z/w exponent is a removable singularity; specialize analytically");
  }
  if (std::fabs(w) >= 1) throw DomainError("gf_check requires |w| < 1");
  const long double ratio_den = 1 - w * std::exp(x * (1 - w));
  if (std::fabs(w * std::exp(x * (1 - w))) >= 1) {
    throw DomainError("gf_check requires |w e^{x(1-w)}| < 1");
  }
  return std::exp(x * (y - z)) * std::pow((1 - w) / ratio_den, z / w);
}

GfCheck gf_check(std::size_t order, long double x, long double y, long double z, long double w) {
  if (order < 1) throw DomainError("gf_check requires order >= 1");
  GfCheck result;
  result.closed_value = gf_closed_form(x, y, z, w);

  const StatTensor tensor = stat_tensor(order);
  std::vector<long double> inner(order + 1, 0.0L);
  for (const auto& [key, count] : tensor.cells()) {
    inner[key.n] += count.convert_to<long double>() * std::pow(y, static_cast<long double>(key.i)) *
                    std::pow(z, static_cast<long double>(key.j)) *
                    std::pow(w, static_cast<long double>(key.k));
  }
  long double series = 1;
  long double weight = 1;  // x^n / n!
  for (std::size_t n = 1; n <= order; ++n) {
    weight *= x / static_cast<long double>(n);
    series += weight * inner[n];
  }
  result.series_value = series;
  result.abs_diff = std::fabs(result.series_value - result.closed_value);
  return result;
}

void write_csv(std::ostream& out, const CountTriangle& t) {
  out << "n,k,u\n";
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << t.at(n, k) << '\n';
  }
}

void write_csv(std::ostream& out, const StatTensor& t) {
  out << "n,i,j,k,u\n";
  for (const auto& [key, v] : t.cells()) {
    out << key.n << ',' << key.i << ',' << key.j << ',' << key.k << ',' << v << '\n';
  }
}

nlohmann::json to_json(const CountTriangle& t) {
  auto rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      rows.push_back({{"n", n}, {"k", k}, {"u", big_to_json(t.at(n, k))}});
    }
  }
  return rows;
}

nlohmann::json to_json(const StatTensor& t) {
  auto rows = nlohmann::json::array();
  for (const auto& [key, v] : t.cells()) {
    rows.push_back({{"n", key.n}, {"i", key.i}, {"j", key.j}, {"k", key.k}, {"u", big_to_json(v)}});
  }
  return rows;
}

}  // namespace vlab
