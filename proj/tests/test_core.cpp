#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "setcodes/combinatorics.hpp"
#include "setcodes/sequence.hpp"

using namespace setcodes;

TEST_CASE("binom_exact basics") {
  CHECK(binom_exact(16, 3) == 560);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(1000, 0) == 1);
  CHECK(binom_exact(5, 7) == 0);
  CHECK(binom_exact(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binom_exact(BigInt(-1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("multinom_exact") {
  CHECK(multinom_exact(3, 0, 1) == 3);
  CHECK(multinom_exact(4, 1, 1) == 12);
  CHECK(multinom_exact(17, 0, 0) == 1);
  CHECK_THROWS_AS(multinom_exact(3, 2, 2), std::invalid_argument);
  for (int n = 0; n <= 12; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = 0; s + t <= n; ++t)
        CHECK(multinom_exact(n, s, t) == binom_exact(n, s) * binom_exact(n - s, t));
}

TEST_CASE("log2_binom") {
  CHECK(log2_binom(16, 3) == doctest::Approx(9.129283016945).epsilon(1e-9));
  CHECK(log2_binom(1000000, 0) == 0.0);
  CHECK_THROWS_AS(log2_binom(3, 4), std::invalid_argument);

  // series path vs. exact big-integer log above the exact-path threshold
  {
    const BigInt n = BigInt(1) << 25;
    const double series = log2_binom(n, 1000);
    const double exact = log2_bigint(binom_exact(n, BigInt(1000)));
    CHECK(std::abs(series - exact) / exact < 1e-9);
  }
  // agreement with the exact path across the sampled overlap region
  for (std::uint64_t n : {1000ull, 65536ull, 1048576ull})
    for (std::uint64_t k : {1ull, 2ull, 17ull, 500ull}) {
      const double a = log2_binom(n, k);
      const double b = log2_bigint(binom_exact(n, k));
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, b));
    }
  // Table-I scale value stays inside the Stirling sandwich
  {
    const BigInt n = BigInt(1) << 152;
    const std::uint64_t k = 72000;
    const double v = log2_binom(n, k);
    const double lo = k * (152.0 - std::log2(static_cast<double>(k)));
    const double hi = lo + k * std::log2(std::exp(1.0));
    CHECK(v > lo);
    CHECK(v < hi);
  }
}

TEST_CASE("subset rank/unrank colex") {
  CHECK(subset_unrank(0, 9, 4) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(subset_rank({1, 3}) == 4);
  for (std::uint64_t r = 0; r < 20; ++r)
    CHECK(subset_rank(subset_unrank(r, 6, 3)) == r);
  // bijection, exhaustive over small shapes
  for (std::uint64_t n = 0; n <= 16; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) {
      const BigInt total = binom_exact(n, k);
      for (BigInt r = 0; r < total; ++r) {
        const auto sub = subset_unrank(r, n, k);
        REQUIRE(sub.size() == k);
        REQUIRE(subset_rank(sub) == r);
      }
    }
  // a large-n spot check
  const auto sub = subset_unrank(BigInt("123456789"), 1u << 20, 5);
  CHECK(subset_rank(sub) == BigInt("123456789"));
  CHECK_THROWS_AS(subset_unrank(20, 6, 3), std::out_of_range);
}

TEST_CASE("runs") {
  CHECK(runs(parse_sequence("0000", 2)) == 1);
  CHECK(runs(parse_sequence("0101", 2)) == 4);
  CHECK(runs(parse_sequence("ACCA", 4)) == 3);
}

TEST_CASE("run-count distribution 2*binom(L-1,i-1)") {
  for (int L = 1; L <= 14; ++L) {
    std::vector<std::uint64_t> count(L + 1, 0);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w)
      ++count[runs(index_to_seq(w, L, 2))];
    for (int i = 1; i <= L; ++i)
      CHECK(BigInt(count[i]) == 2 * binom_exact(L - 1, i - 1));
  }
}

TEST_CASE("sequence parsing and indexing") {
  const Sequence x = parse_sequence("ACGT", 4);
  CHECK(x.sym == std::vector<std::uint8_t>{0, 1, 2, 3});
  CHECK(seq_to_string(x) == "ACGT");
  CHECK(seq_to_index(x) == 0 * 64 + 1 * 16 + 2 * 4 + 3);
  CHECK(index_to_seq(seq_to_index(x), 4, 4) == x);
  CHECK(seq_to_string(index_to_seq(5, 4, 2)) == "0101");
  CHECK_THROWS_AS(parse_sequence("012", 2), std::invalid_argument);
  CHECK_THROWS_AS(make_dataset({x, x}), std::invalid_argument);
}
