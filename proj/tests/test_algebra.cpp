#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "setcodes/bch.hpp"
#include "setcodes/channel.hpp"
#include "setcodes/gf2m.hpp"
#include "setcodes/rs.hpp"
#include "setcodes/vt.hpp"

using namespace setcodes;

TEST_CASE("GF(2^m) field axioms") {
  for (int m = 1; m <= 8; ++m) {
    const GF2m gf(m);
    for (GFElem a = 0; a < gf.size(); ++a) {
      CHECK(gf.add(a, a) == 0);
      CHECK(gf.mul(1, a) == a);
      if (a != 0) CHECK(gf.mul(a, gf.inv(a)) == 1);
    }
  }
  // exhaustive associativity/distributivity for small m
  for (int m = 1; m <= 4; ++m) {
    const GF2m gf(m);
    for (GFElem a = 0; a < gf.size(); ++a)
      for (GFElem b = 0; b < gf.size(); ++b)
        for (GFElem c = 0; c < gf.size(); ++c) {
          CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
          CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
        }
  }
  // randomized for the larger degrees
  std::mt19937_64 rng(5);
  for (int m = 9; m <= 16; ++m) {
    const GF2m gf(m);
    for (int trial = 0; trial < 200; ++trial) {
      const GFElem a = rng() % gf.size(), b = rng() % gf.size(),
                          c = rng() % gf.size();
      CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
      CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      if (a) CHECK(gf.mul(a, gf.inv(a)) == 1);
    }
    CHECK(gf.exp(gf.size() - 1) == 1);
  }
  // large-degree mode (no log/exp tables)
  for (int m : {17, 35, 48}) {
    const GF2m gf(m);
    for (int trial = 0; trial < 200; ++trial) {
      const GFElem a = rng() % gf.size(), b = rng() % gf.size(),
                          c = rng() % gf.size();
      CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
      CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      if (a) CHECK(gf.mul(a, gf.inv(a)) == 1);
    }
  }
}

namespace {

std::vector<std::optional<GFElem>> as_received(
    const std::vector<GFElem>& word) {
  return {word.begin(), word.end()};
}

}  // namespace

TEST_CASE("RS roundtrip and erasure decoding") {
  {
    const RsCode rs(8, 10, 10);  // delta = 0
    std::vector<GFElem> info(10);
    for (int i = 0; i < 10; ++i) info[i] = (i * 37 + 5) % 256;
    CHECK(rs.decode(as_received(rs.encode(info))) == info);
  }
  {
    const RsCode rs(8, 8, 6);  // delta = 2
    std::vector<GFElem> info{3, 141, 59, 26, 53, 200};
    const auto cw = rs.encode(info);
    CHECK(rs.is_codeword(cw));
    for (int pos = 0; pos < 8; ++pos) {
      auto rx = as_received(cw);
      rx[pos] = std::nullopt;
      CHECK(rs.decode(rx) == info);
    }
  }
}

TEST_CASE("RS errors-and-erasures guarantee, delta = 4") {
  const RsCode rs(8, 12, 8);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<GFElem> info(8);
    for (auto& v : info) v = rng() % 256;
    const auto cw = rs.encode(info);
    // pick s' erasures and t' errors with s' + 2t' <= 4
    const int tPrime = static_cast<int>(rng() % 3);
    const int sPrime = static_cast<int>(rng() % (5 - 2 * tPrime));
    std::vector<int> idx(12);
    for (int i = 0; i < 12; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    auto rx = as_received(cw);
    for (int i = 0; i < sPrime; ++i) rx[idx[i]] = std::nullopt;
    for (int i = sPrime; i < sPrime + tPrime; ++i) {
      GFElem wrong = rng() % 256;
      while (wrong == cw[idx[i]]) wrong = rng() % 256;
      rx[idx[i]] = wrong;
    }
    REQUIRE(rs.decode(rx) == info);
  }
  // beyond the budget: failure signal or a wrong candidate are both permitted
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GFElem> info(8);
    for (auto& v : info) v = rng() % 256;
    const auto cw = rs.encode(info);
    auto rx = as_received(cw);
    std::vector<int> idx(12);
    for (int i = 0; i < 12; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    rx[idx[0]] = std::nullopt;
    for (int i = 1; i <= 2; ++i) {
      GFElem wrong = rng() % 256;
      while (wrong == cw[idx[i]]) wrong = rng() % 256;
      rx[idx[i]] = wrong;
    }
    (void)rs.decode(rx);  // must terminate without throwing
  }
}

TEST_CASE("MDS Singleton property: any k coordinates determine the codeword") {
  const RsCode rs(4, 9, 5);
  std::vector<GFElem> info{7, 0, 12, 3, 9};
  const auto cw = rs.encode(info);
  for (GFElem mask = 0; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) != 4) continue;  // erase exactly n-k positions
    auto rx = as_received(cw);
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1) rx[i] = std::nullopt;
    CHECK(rs.decode(rx) == info);
  }
}

TEST_CASE("VT checksum") {
  CHECK(vt_checksum(parse_sequence("0000", 2)) == 0);
  CHECK(vt_checksum(parse_sequence("1011", 2)) == 3);
  CHECK(vt_checksum(parse_sequence("1111", 2)) == 0);
  CHECK_THROWS_AS(vt_checksum(parse_sequence("ACGT", 4)), std::invalid_argument);
}

TEST_CASE("VT decode") {
  CHECK(vt_decode(parse_sequence("111", 2), 4, 3) == parse_sequence("1011", 2));
  CHECK(vt_decode(parse_sequence("1011", 2), 4, 3) == parse_sequence("1011", 2));
  CHECK(vt_decode(parse_sequence("1010", 2), 4, 3) == std::nullopt);
  // exhaustive single-deletion and single-insertion recovery
  for (int L = 2; L <= 10; ++L)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w) {
      const Sequence x = index_to_seq(w, L, 2);
      if (vt_checksum(x) != 0) continue;
      for (const Sequence& y : enumerate_sphere(x, 1, ErrorType::Del))
        CHECK(vt_decode(y, L, 0) == x);
      for (const Sequence& y : enumerate_sphere(x, 1, ErrorType::Ins))
        CHECK(vt_decode(y, L, 0) == x);
    }
}

TEST_CASE("VT codes: size bound and deletion-ball disjointness") {
  for (int L = 1; L <= 16; ++L) {
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w)
      count += vt_checksum(index_to_seq(w, L, 2)) == 0;
    CHECK(count * static_cast<std::uint64_t>(L + 1) >= (std::uint64_t{1} << L));
  }
  for (int L = 2; L <= 10; ++L)
    for (int a : {0, L}) {
      std::vector<SeqSet> balls;
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w) {
        const Sequence x = index_to_seq(w, L, 2);
        if (vt_checksum(x) == a)
          balls.push_back(enumerate_sphere(x, 1, ErrorType::Del));
      }
      for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
          SeqSet common;
          std::set_intersection(balls[i].begin(), balls[i].end(),
                                balls[j].begin(), balls[j].end(),
                                std::back_inserter(common));
          CHECK(common.empty());
        }
    }
}

TEST_CASE("VT systematic encoder") {
  CHECK(vt_systematic_encode(std::vector<std::uint8_t>(vt_info_bits(7), 0), 7, 0) ==
        parse_sequence("0000000", 2));
  // exhaustive roundtrip at L = 6 over every info and residue
  for (GFElem bits = 0; bits < (1u << vt_info_bits(6)); ++bits)
    for (int a = 0; a <= 6; ++a) {
      std::vector<std::uint8_t> info(vt_info_bits(6));
      for (std::size_t i = 0; i < info.size(); ++i) info[i] = bits >> i & 1;
      const Sequence x = vt_systematic_encode(info, 6, a);
      CHECK(vt_checksum(x) == a);
      CHECK(vt_extract_info(x) == info);
    }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const int L = 3 + static_cast<int>(rng() % 30);
    const int a = static_cast<int>(rng() % (L + 1));
    std::vector<std::uint8_t> info(vt_info_bits(L));
    for (auto& b : info) b = rng() & 1;
    const Sequence x = vt_systematic_encode(info, L, a);
    CHECK(vt_checksum(x) == a);
    CHECK(vt_extract_info(x) == info);
  }
}

TEST_CASE("BCH encode/decode") {
  {
    const BchCode bch(8, 255, 2);
    CHECK(bch.redundancy() <= 16);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::uint8_t> info(bch.k());
      for (auto& b : info) b = rng() & 1;
      auto cw = bch.encode(info);
      CHECK(bch.is_codeword(cw));
      std::vector<int> idx(bch.n());
      for (int i = 0; i < bch.n(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      const int errs = static_cast<int>(rng() % 3);
      for (int i = 0; i < errs; ++i) cw[idx[i]] ^= 1;
      REQUIRE(bch.decode(cw) == info);
    }
  }
  {
    // shortened code
    const BchCode bch(6, 40, 2);
    std::vector<std::uint8_t> info(bch.k(), 0);
    info[0] = info[3] = 1;
    auto cw = bch.encode(info);
    CHECK(bch.is_codeword(cw));
    for (GFElem s : bch.syndromes(cw)) CHECK(s == 0);
    cw[1] ^= 1;
    cw[39] ^= 1;
    CHECK(!bch.is_codeword(cw));
    CHECK(bch.decode(cw) == info);
  }
  {
    // radius-exhaustive check at toy size: unique decoding inside the ball
    const BchCode bch(4, 15, 2);
    std::vector<std::uint8_t> info(bch.k(), 1);
    const auto cw = bch.encode(info);
    for (int i = 0; i < 15; ++i)
      for (int j = i; j < 15; ++j) {
        auto word = cw;
        word[i] ^= 1;
        word[j] ^= 1;
        CHECK(bch.decode(word) == info);
      }
  }
}
