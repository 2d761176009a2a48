#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "vlab/error.hpp"
#include "vlab/perm.hpp"
#include "vlab/rec.hpp"

namespace {

using vlab::BigInt;
using vlab::StatKey;

TEST(Triangle, RowFourAndInitialConditions) {
  const auto t = vlab::u_triangle(10);
  EXPECT_EQ(t.row(4), (std::vector<BigInt>{0, 6, 10, 6, 1}));
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(1, 1), 1);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.at(n, 0), 0);
    EXPECT_EQ(t.at(n, n), 1);
  }
  EXPECT_EQ(t.at(3, 7), 0);
  EXPECT_EQ(t.at(11, 1), 0);
}

TEST(Triangle, SatisfiesRecurrence) {
  const auto t = vlab::u_triangle(15);
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt tail = 0;
      for (std::size_t j = k; j < n; ++j) tail += t.at(n - 1, j);
      ASSERT_EQ(t.at(n, k), t.at(n - 1, k - 1) + BigInt(k) * tail);
    }
  }
}

TEST(Totals, KnownPrefix) {
  const std::vector<int> expected{1, 1, 2, 6, 23, 105, 549, 3207};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(vlab::u_total(n), expected[n]) << n;
  EXPECT_EQ(vlab::u_triangle(5).row_total(5), 105);
}

TEST(Totals, EqualBruteForceThroughNine) {
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(vlab::u_total(n), BigInt(oracle::count_1_23_4_avoiders(n))) << n;
}

TEST(Totals, ExactBeyondMachineWords) {
  // u(40) is far past 2^64; the triangle must still satisfy its recurrence
  // and the total must equal the row sum.
  const auto t = vlab::u_triangle(40);
  BigInt sum = 0;
  for (const auto& v : t.row(40)) sum += v;
  EXPECT_EQ(sum, vlab::u_total(40));
  EXPECT_GT(sum, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(StatTensor, SmallRows) {
  const auto t = vlab::stat_tensor(3);
  EXPECT_EQ(t.at({1, 1, 0, 0}), 1);
  EXPECT_EQ(t.at({2, 0, 1, 0}), 1);
  EXPECT_EQ(t.at({2, 2, 0, 0}), 1);
  EXPECT_EQ(t.row_sum(2), 2);
  EXPECT_EQ(t.at({3, 0, 1, 1}), 1);
  EXPECT_EQ(t.at({3, 0, 1, 0}), 1);
  EXPECT_EQ(t.at({3, 1, 1, 0}), 3);
  EXPECT_EQ(t.at({3, 3, 0, 0}), 1);
  EXPECT_EQ(t.row_sum(3), 6);
}

TEST(StatTensor, MatchesBruteForceCellwise) {
  const auto t = vlab::stat_tensor(8);
  for (int n = 1; n <= 8; ++n) {
    std::map<StatKey, std::uint64_t> brute;
    for (const auto& p : oracle::all_permutations(n)) {
      const auto s = oracle::ascent_stats(p);
      ++brute[StatKey{static_cast<std::size_t>(n), static_cast<std::size_t>(s.i), static_cast<std::size_t>(s.j),
                      static_cast<std::size_t>(s.k)}];
    }
    for (const auto& [key, count] : brute) ASSERT_EQ(t.at(key), count) << n;
    for (const auto& [key, value] : t.cells()) {
      if (key.n != static_cast<std::size_t>(n)) continue;
      ASSERT_TRUE(brute.count(key)) << "spurious cell at n=" << n;
      // Support bounds of the tensor.
      ASSERT_GE(key.i + key.j, 1u);
      ASSERT_LE(key.i + 2 * key.j, key.n);
      ASSERT_LE(key.k, key.n - key.i - key.j);
    }
    EXPECT_EQ(t.row_sum(n), oracle::factorial(n));
  }
}

TEST(GeneratingFunction, Examples) {
  const auto a = vlab::gf_check(20, 0.1L, 1, 1, 0.5L);
  EXPECT_LT(a.abs_diff, 1e-9L);
  const auto b = vlab::gf_check(20, 0.1L, 2, 0.7L, 0.3L);
  EXPECT_LT(b.abs_diff, 1e-9L);
  const auto zero = vlab::gf_check(20, 0, 1.3L, 0.4L, 0.2L);
  EXPECT_EQ(zero.series_value, 1);
  EXPECT_EQ(zero.closed_value, 1);
}

TEST(GeneratingFunction, DoublingOrderShrinksTheGap) {
  for (auto [y, z, w] : {std::tuple{1.0L, 1.0L, 0.5L}, std::tuple{2.0L, 0.7L, 0.3L}}) {
    EXPECT_LT(vlab::gf_check(40, 0.1L, y, z, w).abs_diff, 1e-12L);
  }
}

TEST(GeneratingFunction, ClosedFormByHand) {
  // At y = z the exponential prefactor is 1; w = 1/2, x = 0.1:
  // ((1/2) / (1 - e^{0.05}/2))^2.
  const long double expected = std::pow(0.5L / (1 - 0.5L * std::exp(0.05L)), 2.0L);
  EXPECT_NEAR(static_cast<double>(vlab::gf_closed_form(0.1L, 1, 1, 0.5L)), static_cast<double>(expected), 1e-15);
}

TEST(GeneratingFunction, DomainErrors) {
  EXPECT_THROW(vlab::gf_check(20, 0.1L, 1, 1, 0), vlab::DomainError);
  EXPECT_THROW(vlab::gf_check(20, 0.1L, 1, 1, 1), vlab::DomainError);
  EXPECT_THROW(vlab::gf_check(20, 0.1L, 1, 1, -1.5L), vlab::DomainError);
}

TEST(Export, CsvAndJson) {
  std::ostringstream csv;
  vlab::write_csv(csv, vlab::u_triangle(2));
  EXPECT_EQ(csv.str(), "n,k,u\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
  const auto j = vlab::to_json(vlab::u_triangle(1));
  ASSERT_TRUE(j.is_array());
  std::ostringstream tensor;
  vlab::write_csv(tensor, vlab::stat_tensor(2));
  EXPECT_EQ(tensor.str().substr(0, 10), "n,i,j,k,u\n");
}

}  // namespace
