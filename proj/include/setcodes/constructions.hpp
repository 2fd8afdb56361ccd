#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>

#include "setcodes/bch.hpp"
#include "setcodes/combinatorics.hpp"
#include "setcodes/rs.hpp"
#include "setcodes/sequence.hpp"
#include "setcodes/vt.hpp"

namespace setcodes {

/// Which error kinds the decoder assumes; InsOnly/DelOnly let C1/C3 identify
/// erroneous sequences by length and stretch the budget to s + t <= delta.
enum class DecodeMode { All, InsOnly, DelOnly };

DecodeMode parse_decode_mode(const std::string& tag);  // L / I / D

/// Common encoder/decoder surface. Info is a bit vector (0/1 entries) of
/// exactly info_bits() bits; multi-bit fields inside are big-endian.
class Construction {
 public:
  virtual ~Construction() = default;
  virtual std::string name() const = 0;
  virtual int info_bits() const = 0;
  virtual DataSet encode(const std::vector<std::uint8_t>& info) const = 0;
  virtual std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const = 0;
  /// uniform valid info; overridden where info carries structural constraints
  virtual std::vector<std::uint8_t> sample_info(std::mt19937_64& rng) const;
};

/// Construction 1: index prefix + payload symbol, MDS over GF(2^(L-ceil(log M))).
class C1Code : public Construction {
 public:
  C1Code(int M, int L, int delta, DecodeMode mode = DecodeMode::All);

  int index_bits() const { return z_; }
  int payload_bits() const { return p_; }
  const RsCode& mds() const { return rs_; }

  DataSet encode_symbols(const std::vector<GFElem>& payloads) const;
  std::optional<std::vector<GFElem>> decode_symbols(const SeqSet& received) const;

  std::string name() const override { return "c1"; }
  int info_bits() const override { return (M_ - delta_) * p_; }
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;

 private:
  int M_, L_, delta_, z_, p_;
  DecodeMode mode_;
  RsCode rs_;
};

/// Thm. 12: r(C1) = r_indexing(M, L) + delta * (L - ceil(log2 M)).
double c1_redundancy(int M, int L, int delta);

/// Coset identifier for Construction 2's tau-substitution code of length 2^L
/// (primitive BCH of length 2^L - 1 extended by an overall parity position).
struct C2Coset {
  std::vector<GFElem> synd;  // S_1..S_2tau of the first 2^L - 1 coordinates
  int parity = 0;            // overall parity of all 2^L coordinates
  auto operator<=>(const C2Coset&) const = default;
};

/// Construction 2: constant-weight characteristic vectors in a coset.
class C2Code : public Construction {
 public:
  C2Code(int L, int M, int s, int t);

  int tau() const { return s_ + 2 * t_; }
  const C2Coset& coset() const { return coset_; }
  void set_coset(const C2Coset& coset);

  C2Coset syndrome_of(const SeqSet& S) const;
  bool membership(const SeqSet& S) const;
  /// weight restoration + coset decoding per Lemma 6; returns the codeword.
  std::optional<DataSet> correct(const SeqSet& received) const;

  /// exhaustive pigeonhole search over all weight-M vectors (desk scale).
  C2Coset best_coset() const;
  const std::vector<DataSet>& codewords() const;  // current coset, lazy

  std::string name() const override { return "c2"; }
  int info_bits() const override;
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;

 private:
  std::vector<std::uint8_t> char_vector(const SeqSet& S) const;

  int L_, M_, s_, t_, N_;
  BchCode bch_;
  C2Coset coset_;
  mutable std::optional<std::vector<DataSet>> codebook_;
};

/// Construction 3: M^c index groups, each a colex-ranked subset symbol over
/// GF(2^k), k = floor(log2 binom(2^L M^-c, M^(1-c))), MDS across groups.
class C3Code : public Construction {
 public:
  C3Code(int M, int L, double c, int delta, DecodeMode mode = DecodeMode::All);

  int group_count() const { return n_; }
  int group_size() const { return G_; }
  int symbol_bits() const { return k_; }

  DataSet encode_symbols(const std::vector<GFElem>& symbols) const;
  std::optional<std::vector<GFElem>> decode_symbols(const SeqSet& received) const;

  std::string name() const override { return "c3"; }
  int info_bits() const override { return (n_ - delta_) * k_; }
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;

 private:
  int M_, L_, delta_, z_, zi_, p_, G_, n_, k_;
  DecodeMode mode_;
  std::unique_ptr<RsCode> rs_;
};

/// Thm. 13 exact formula: log2 binom(2^L, M) - (M^c - delta) log2 binom(...).
double c3_redundancy(int M, int L, double c, int delta);

/// Construction 4: inner block code per sequence, outer set code.
class C4Code : public Construction {
 public:
  C4Code(BchCode inner, std::shared_ptr<Construction> outer, int outer_L);

  std::string name() const override { return "c4"; }
  int info_bits() const override { return outer_->info_bits(); }
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;

 private:
  BchCode inner_;
  std::shared_ptr<Construction> outer_;
  int outer_L_;
};

/// Construction 5: checksum-sum code, sum_i s_L(x_i) = a mod (L+1).
/// Encoding convention: M-1 free sequences carry a zero flag bit; the last
/// sequence is VT-systematic-encoded with flag bit one to hit the residual
/// checksum. Free payload chunks must be strictly increasing (canonical form).
class C5Code : public Construction {
 public:
  C5Code(int M, int L, int a);

  int flag_position() const { return flag_; }  // 1-based, non-dyadic
  std::optional<DataSet> correct(const SeqSet& received) const;
  bool membership(const SeqSet& S) const;  // checksum-sum test only

  std::string name() const override { return "c5"; }
  int info_bits() const override;
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;
  std::vector<std::uint8_t> sample_info(std::mt19937_64& rng) const override;

 private:
  int M_, L_, a_, flag_;
};

/// All M-subsets of Sigma_2^L with checksum sum a (the full Construction 5
/// code, membership form) -- used by the Def. 3 disjointness oracle.
std::vector<DataSet> c5_enumerate(int M, int L, int a);

/// Constructions 6 and 7: every sequence individually in a fixed codebook
/// (VT_a(L), resp. an eps-substitution BCH code); info is the colex rank of
/// the M-subset of the sorted codebook.
class SubsetOfCodebook : public Construction {
 public:
  int codebook_size() const { return static_cast<int>(book_.size()); }
  const SeqSet& codebook() const { return book_; }

  int info_bits() const override;
  DataSet encode(const std::vector<std::uint8_t>& info) const override;
  std::optional<std::vector<std::uint8_t>> decode(const SeqSet& received) const override;

 protected:
  SubsetOfCodebook(int M, int L);
  void set_codebook(SeqSet book);
  /// corrects one received sequence back to a codebook member
  virtual std::optional<Sequence> correct_sequence(const Sequence& y) const = 0;

  int M_, L_;

 private:
  SeqSet book_;
};

class C6Code : public SubsetOfCodebook {
 public:
  C6Code(int M, int L, int a);
  std::string name() const override { return "c6"; }

 protected:
  std::optional<Sequence> correct_sequence(const Sequence& y) const override;

 private:
  int a_;
};

class C7Code : public SubsetOfCodebook {
 public:
  C7Code(int M, int L, int eps);
  std::string name() const override { return "c7"; }
  const BchCode& bch() const { return bch_; }

 protected:
  std::optional<Sequence> correct_sequence(const Sequence& y) const override;

 private:
  BchCode bch_;
};

/// big-endian helpers shared by the bit interfaces
BigInt bits_to_bigint(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> bigint_to_bits(BigInt value, int width);

}  // namespace setcodes
