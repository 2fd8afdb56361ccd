#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <random>

#include "doctest.h"
#include "setcodes/channel.hpp"
#include "setcodes/constructions.hpp"

using namespace setcodes;

namespace {

Sequence random_word(int len, std::mt19937_64& rng) {
  Sequence x;
  x.q = 2;
  x.sym.resize(len);
  for (auto& b : x.sym) b = rng() & 1;
  return x;
}

// replace the chosen sequences by arbitrary random words (lengths around L)
SeqSet corrupt(const SeqSet& S, const std::vector<int>& lost,
               const std::vector<int>& err, std::mt19937_64& rng, int minLen,
               int maxLen) {
  SeqSet out;
  for (int i = 0; i < static_cast<int>(S.size()); ++i) {
    if (std::find(lost.begin(), lost.end(), i) != lost.end()) continue;
    if (std::find(err.begin(), err.end(), i) != err.end()) {
      const int len = minLen + static_cast<int>(rng() % (maxLen - minLen + 1));
      out.push_back(random_word(len, rng));
    } else {
      out.push_back(S[i]);
    }
  }
  normalize(out);
  return out;
}

void for_each_subset_pair(int n, int s, int t,
                          const std::function<void(const std::vector<int>&,
                                                   const std::vector<int>&)>& fn) {
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != s) continue;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (std::popcount(b) != t || (a & b)) continue;
      std::vector<int> lost, err;
      for (int i = 0; i < n; ++i) {
        if (a >> i & 1) lost.push_back(i);
        if (b >> i & 1) err.push_back(i);
      }
      fn(lost, err);
    }
  }
}

}  // namespace

TEST_CASE("bit helpers") {
  const std::vector<std::uint8_t> bits{1, 0, 1, 1, 0};
  CHECK(bits_to_bigint(bits) == 22);
  CHECK(bigint_to_bits(BigInt(22), 5) == bits);
  CHECK_THROWS_AS(bigint_to_bits(BigInt(32), 5), std::invalid_argument);
  CHECK(parse_decode_mode("L") == DecodeMode::All);
  CHECK(parse_decode_mode("I") == DecodeMode::InsOnly);
  CHECK(parse_decode_mode("D") == DecodeMode::DelOnly);
  CHECK_THROWS_AS(parse_decode_mode("x"), std::invalid_argument);
}

TEST_CASE("C1: clean roundtrip and indexed layout") {
  std::mt19937_64 rng(31);
  const C1Code code(8, 10, 0);
  CHECK(code.index_bits() == 3);
  CHECK(code.payload_bits() == 7);
  CHECK(code.info_bits() == 56);
  for (int trial = 0; trial < 20; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    CHECK(S.M() == 8);
    CHECK(S.L() == 10);
    // indices cover 0..7
    std::vector<int> seen;
    for (const Sequence& x : S.seqs)
      seen.push_back(x.sym[0] << 2 | x.sym[1] << 1 | x.sym[2]);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < 8; ++i) CHECK(seen[i] == i);
    CHECK(code.decode(S.seqs) == info);
  }
}

TEST_CASE("C1: s + 2t <= delta recovery, exhaustive loss/error partitions") {
  std::mt19937_64 rng(32);
  const C1Code code(8, 10, 4);
  for (int rep = 0; rep < 5; ++rep) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    for (int s = 0; s <= 4; ++s)
      for (int t = 0; 2 * t <= 4 - s; ++t)
        for_each_subset_pair(8, s, t,
                             [&](const std::vector<int>& lost,
                                 const std::vector<int>& err) {
                               const SeqSet rx =
                                   corrupt(S.seqs, lost, err, rng, 3, 12);
                               REQUIRE(code.decode(rx) == info);
                             });
  }
}

TEST_CASE("C1: deletion-only mode stretches the budget to s + t <= delta") {
  std::mt19937_64 rng(33);
  const C1Code code(8, 10, 4, DecodeMode::DelOnly);
  for (int trial = 0; trial < 300; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    const int s = static_cast<int>(rng() % 5);
    const int t = static_cast<int>(rng() % (5 - s));
    std::vector<int> idx(8);
    for (int i = 0; i < 8; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    SeqSet rx;
    for (int i = s; i < 8; ++i) {
      Sequence y = S.seqs[idx[i]];
      if (i < s + t) {
        const int dels = 1 + static_cast<int>(rng() % 3);
        for (int d = 0; d < dels; ++d)
          y.sym.erase(y.sym.begin() + rng() % y.sym.size());
      }
      rx.push_back(std::move(y));
    }
    normalize(rx);
    REQUIRE(code.decode(rx) == info);
  }
}

TEST_CASE("c1_redundancy") {
  // delta = 0 reduces to the indexing redundancy of Thm. 11
  CHECK(c1_redundancy(8, 10, 0) ==
        doctest::Approx(log2_binom(BigInt(1) << 10, 8) - 8 * 7).epsilon(1e-12));
  // (M=4, L=8, delta=2): r_I + 2*(8-2) = log2 C(256,4) - 4*6 + 12
  CHECK(c1_redundancy(4, 8, 2) ==
        doctest::Approx(log2_binom(BigInt(256), BigInt(4)) - 12).epsilon(1e-12));
  // measured information content matches the formula's complement exactly
  const C1Code code(4, 8, 2);
  CHECK(code.info_bits() == (4 - 2) * 6);
}

TEST_CASE("C2: Example 3 characteristic vector mapping") {
  // S = {001, 010, 110} -> v(S) = 01100010
  const C2Code code(3, 3, 0, 1);
  SeqSet S{parse_sequence("001", 2), parse_sequence("010", 2),
           parse_sequence("110", 2)};
  normalize(S);
  const C2Coset got = code.syndrome_of(S);
  const BchCode bch(3, 7, 2);
  const std::vector<std::uint8_t> v{0, 1, 1, 0, 0, 0, 1};  // first 7 of 01100010
  CHECK(got.synd == bch.syndromes(v));
  CHECK(got.parity == 1);  // weight 3
}

TEST_CASE("C2: coset code at L=6, M=4, radius 3") {
  C2Code code(6, 4, 1, 1);
  CHECK(code.tau() == 3);
  code.set_coset(code.best_coset());
  const auto& book = code.codewords();
  REQUIRE(book.size() >= 10);  // pigeonhole over C(64,4) vs 2^19 cosets
  CHECK(code.info_bits() >= 3);
  for (const DataSet& cw : book) CHECK(code.membership(cw.seqs));

  std::mt19937_64 rng(34);
  const auto info = code.sample_info(rng);
  const DataSet S = code.encode(info);
  CHECK(code.decode(S.seqs) == info);

  // every s <= 1, t <= 1 outcome with arbitrary corruption, exhaustive
  for (int lostMask = 0; lostMask < 16; ++lostMask) {
    if (std::popcount(static_cast<unsigned>(lostMask)) > 1) continue;
    for (int err = -1; err < 4; ++err) {
      if (err >= 0 && (lostMask >> err & 1)) continue;
      for (int len = 5; len <= 7 && err >= 0; ++len)
        for (std::uint32_t w = 0; w < (1u << len); ++w) {
          SeqSet rx;
          for (int i = 0; i < 4; ++i) {
            if (lostMask >> i & 1) continue;
            rx.push_back(i == err ? index_to_seq(w, len, 2) : S.seqs[i]);
          }
          normalize(rx);
          const auto corrected = code.correct(rx);
          REQUIRE(corrected.has_value());
          REQUIRE(*corrected == S);
        }
      if (err < 0) {
        SeqSet rx;
        for (int i = 0; i < 4; ++i)
          if (!(lostMask >> i & 1)) rx.push_back(S.seqs[i]);
        REQUIRE(code.correct(rx) == S);
      }
    }
  }
  // far beyond the radius: must fail or return some codeword, never crash
  SeqSet garbage;
  for (int i = 0; i < 4; ++i) garbage.push_back(index_to_seq(17 * i + 3, 6, 2));
  normalize(garbage);
  (void)code.correct(garbage);
}

TEST_CASE("C3: clean roundtrip and group layout at M=16, L=12, c=1/2") {
  std::mt19937_64 rng(35);
  const C3Code code(16, 12, 0.5, 0);
  CHECK(code.group_count() == 4);
  CHECK(code.group_size() == 4);
  CHECK(code.symbol_bits() == 35);  // floor(log2 C(1024, 4))
  for (int trial = 0; trial < 10; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    CHECK(S.M() == 16);
    CHECK(S.L() == 12);
    CHECK(code.decode(S.seqs) == info);
  }
}

TEST_CASE("C3: s + 2t <= delta recovery at M=16, L=12, c=1/2, delta=2") {
  std::mt19937_64 rng(36);
  const C3Code code(16, 12, 0.5, 2);
  for (int trial = 0; trial < 400; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    const int t = static_cast<int>(rng() % 2);
    const int s = static_cast<int>(rng() % (3 - 2 * t));
    std::vector<int> idx(16);
    for (int i = 0; i < 16; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> lost(idx.begin(), idx.begin() + s);
    std::vector<int> err(idx.begin() + s, idx.begin() + s + t);
    const SeqSet rx = corrupt(S.seqs, lost, err, rng, 10, 14);
    REQUIRE(code.decode(rx) == info);
  }
}

TEST_CASE("C3: boundary cases c = 1 and c = 0") {
  std::mt19937_64 rng(37);
  {
    // c = 1: groups of size one, per-sequence indexing as in C1
    const C3Code code(4, 6, 1.0, 1);
    CHECK(code.group_count() == 4);
    CHECK(code.group_size() == 1);
    CHECK(code.symbol_bits() == 4);  // floor(log2 C(16, 1))
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    CHECK(code.decode(S.seqs) == info);
    // one loss within delta = 1
    SeqSet rx(S.seqs.begin() + 1, S.seqs.end());
    CHECK(code.decode(rx) == info);
  }
  {
    // c = 0: a single group holding the whole set; encode = subset unranking
    const C3Code code(4, 5, 0.0, 0);
    CHECK(code.group_count() == 1);
    CHECK(code.group_size() == 4);
    CHECK(code.info_bits() == 15);  // floor(log2 C(32, 4))
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    std::vector<std::uint64_t> indices;
    for (const Sequence& x : S.seqs) indices.push_back(seq_to_index(x));
    CHECK(subset_rank(indices) == bits_to_bigint(info));
    CHECK(code.decode(S.seqs) == info);
  }
}

TEST_CASE("c3_redundancy") {
  const double exact = log2_binom(BigInt(1) << 12, 16) -
                       4 * log2_binom(BigInt(1) << 10, 4);
  CHECK(c3_redundancy(16, 12, 0.5, 0) == doctest::Approx(exact).epsilon(1e-9));
  // delta = M^c: every group redundant, nothing encodable
  CHECK(c3_redundancy(16, 12, 0.5, 4) ==
        doctest::Approx(log2_binom(BigInt(1) << 12, 16)).epsilon(1e-9));
  CHECK_THROWS_AS(c3_redundancy(12, 12, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(c3_redundancy(16, 12, 0.3, 0), std::invalid_argument);
}

TEST_CASE("C4: degenerate inner code behaves exactly as the outer code") {
  std::mt19937_64 rng(38);
  const auto outer = std::make_shared<C1Code>(4, 11, 0);
  const C4Code code(BchCode(4, 11, 0), outer, 11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto info = code.sample_info(rng);
    CHECK(code.encode(info) == outer->encode(info));
    CHECK(code.decode(code.encode(info).seqs) == info);
  }
}

TEST_CASE("C4: inner BCH absorbs per-sequence substitutions, outer absorbs losses") {
  std::mt19937_64 rng(39);
  const BchCode inner(4, 15, 1);  // k = 11
  const auto outer = std::make_shared<C1Code>(4, 11, 2);
  const C4Code code(inner, outer, 11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    CHECK(S.L() == 15);
    // s = 1 loss; every surviving sequence takes one substitution
    const int drop = static_cast<int>(rng() % 4);
    SeqSet rx;
    for (int i = 0; i < 4; ++i)
      if (i != drop) rx.push_back(S.seqs[i]);
    for (Sequence& y : rx) y.sym[rng() % 15] ^= 1;
    normalize(rx);
    REQUIRE(code.decode(rx) == info);
  }
  // inner failure (3 substitutions in one sequence) becomes an outer erasure
  const auto info = code.sample_info(rng);
  const DataSet S = code.encode(info);
  SeqSet rx = S.seqs;
  rx[2].sym[0] ^= 1;
  rx[2].sym[5] ^= 1;
  rx[2].sym[9] ^= 1;
  normalize(rx);
  CHECK(code.decode(rx) == info);
}

TEST_CASE("C5: roundtrip and exhaustive single ins/del recovery at M=3, L=8") {
  std::mt19937_64 rng(40);
  const C5Code code(3, 8, 5);
  CHECK(code.flag_position() == 7);
  CHECK(code.info_bits() == 2 * 7 + vt_info_bits(8) - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    CHECK(S.M() == 3);
    CHECK(S.L() == 8);
    CHECK(code.membership(S.seqs));
    CHECK(code.decode(S.seqs) == info);
    for (int victim = 0; victim < 3; ++victim)
      for (ErrorType type : {ErrorType::Del, ErrorType::Ins})
        for (const Sequence& y : enumerate_sphere(S.seqs[victim], 1, type)) {
          SeqSet rx = S.seqs;
          rx[victim] = y;
          normalize(rx);
          const auto corrected = code.correct(rx);
          REQUIRE(corrected == S);
          REQUIRE(code.decode(rx) == info);
        }
  }
  // non-canonical info (chunks out of order) is rejected
  std::vector<std::uint8_t> bad(code.info_bits(), 0);
  bad[0] = 1;  // first chunk 64, second chunk 0
  CHECK_THROWS_AS(code.encode(bad), std::invalid_argument);
}

TEST_CASE("c5_enumerate matches the checksum-sum membership rule") {
  for (int a = 0; a <= 4; ++a) {
    const auto book = c5_enumerate(2, 4, a);
    const C5Code code(2, 4, a);
    std::size_t direct = 0;
    for (std::uint32_t i = 0; i < 16; ++i)
      for (std::uint32_t j = i + 1; j < 16; ++j)
        direct += (vt_checksum(index_to_seq(i, 4, 2)) +
                   vt_checksum(index_to_seq(j, 4, 2))) % 5 == a;
    CHECK(book.size() == direct);
    for (const DataSet& S : book) CHECK(code.membership(S.seqs));
  }
}

TEST_CASE("C6: exhaustive (0,2,1)_ID recovery at M=2, L=7") {
  const C6Code code(2, 7, 0);
  CHECK(code.codebook_size() == 16);  // |VT_0(7)|
  CHECK(code.info_bits() == 6);       // floor(log2 C(16,2)) = floor(log2 120)
  for (std::uint32_t r = 0; r < (1u << 6); ++r) {
    const auto info = bigint_to_bits(BigInt(r), 6);
    const DataSet S = code.encode(info);
    REQUIRE(code.decode(S.seqs) == info);
    for (const SeqSet& rx : set_error_ball(S.seqs, 0, 2, 1, ErrorType::InsDel))
      REQUIRE(code.decode(rx) == info);
  }
}

TEST_CASE("C7: substitution recovery and redundancy accounting at M=4, L=15, eps=1") {
  const C7Code code(4, 15, 1);
  CHECK(code.codebook_size() == 2048);  // BCH(15, 11)
  const int bits = code.info_bits();
  CHECK(bits == 39);  // floor(log2 C(2048, 4)), C(2048,4) ~ 2^39.4
  // redundancy vs the unconstrained set code: <= M * eps * ceil(log2 L) + slack
  const double redundancy =
      log2_binom(BigInt(1) << 15, 4) - log2_binom(BigInt(2048), BigInt(4));
  CHECK(redundancy <= 4 * 1 * 4 + 0.1);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    const SeqSet rx = sample_channel(S.seqs, 0, 4, 1, ErrorType::Sub, rng);
    REQUIRE(code.decode(rx) == info);
  }
}

TEST_CASE("all constructions: clean roundtrip, distinctness, sampled channels") {
  std::mt19937_64 rng(42);
  std::vector<std::shared_ptr<Construction>> codes{
      std::make_shared<C1Code>(8, 10, 4),
      std::make_shared<C3Code>(16, 12, 0.5, 2),
      std::make_shared<C5Code>(3, 8, 0),
      std::make_shared<C6Code>(2, 7, 0),
      std::make_shared<C7Code>(4, 15, 1),
      std::make_shared<C4Code>(BchCode(4, 15, 1),
                               std::make_shared<C1Code>(4, 11, 2), 11),
  };
  {
    auto c2 = std::make_shared<C2Code>(6, 4, 1, 1);
    c2->set_coset(c2->best_coset());
    codes.push_back(std::move(c2));
  }
  for (const auto& code : codes) {
    CAPTURE(code->name());
    CHECK(code->info_bits() >= 1);
    for (int trial = 0; trial < 25; ++trial) {
      const auto info = code->sample_info(rng);
      REQUIRE(static_cast<int>(info.size()) == code->info_bits());
      const DataSet S = code->encode(info);  // make_dataset enforces validity
      REQUIRE(code->decode(S.seqs) == info);
    }
  }
}
