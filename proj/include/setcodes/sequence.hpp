#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace setcodes {

/// Fixed-length word over a q-ary alphabet, q in {2, 4}.
/// Quaternary symbols map A=0, C=1, G=2, T=3.
struct Sequence {
  int q = 2;
  std::vector<std::uint8_t> sym;

  int size() const { return static_cast<int>(sym.size()); }
  auto operator<=>(const Sequence&) const = default;
};

/// Sorted, duplicate-free list of sequences (a received or stored set).
using SeqSet = std::vector<Sequence>;

void normalize(SeqSet& set);
bool contains(const SeqSet& set, const Sequence& x);

/// Unordered set of M distinct length-L sequences (a channel input).
struct DataSet {
  SeqSet seqs;  // sorted, distinct, all of length L

  int M() const { return static_cast<int>(seqs.size()); }
  int L() const { return seqs.empty() ? 0 : seqs.front().size(); }
  int q() const { return seqs.empty() ? 2 : seqs.front().q; }
  auto operator<=>(const DataSet&) const = default;
};

/// Validates distinctness and a common length; throws std::invalid_argument.
DataSet make_dataset(SeqSet seqs);

/// Number of maximal runs, |{i : x_i != x_{i+1}}| + 1.
int runs(const Sequence& x);

Sequence parse_sequence(const std::string& text, int q);
std::string seq_to_string(const Sequence& x);

/// Big-endian radix-q value of the word (symbol 0 most significant).
std::uint64_t seq_to_index(const Sequence& x);
Sequence index_to_seq(std::uint64_t index, int L, int q);

}  // namespace setcodes
