#include "setcodes/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace setcodes {

namespace {
const char kQuat[] = "ACGT";
}

void normalize(SeqSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

bool contains(const SeqSet& set, const Sequence& x) {
  return std::binary_search(set.begin(), set.end(), x);
}

DataSet make_dataset(SeqSet seqs) {
  std::sort(seqs.begin(), seqs.end());
  if (std::adjacent_find(seqs.begin(), seqs.end()) != seqs.end())
    throw std::invalid_argument("make_dataset: duplicate sequences");
  for (const Sequence& x : seqs) {
    if (x.q != seqs.front().q || x.size() != seqs.front().size())
      throw std::invalid_argument("make_dataset: mixed lengths or alphabets");
    for (std::uint8_t v : x.sym)
      if (v >= x.q) throw std::invalid_argument("make_dataset: symbol out of range");
  }
  return DataSet{std::move(seqs)};
}

int runs(const Sequence& x) {
  if (x.sym.empty()) throw std::invalid_argument("runs: empty sequence");
  int r = 1;
  for (std::size_t i = 0; i + 1 < x.sym.size(); ++i)
    if (x.sym[i] != x.sym[i + 1]) ++r;
  return r;
}

Sequence parse_sequence(const std::string& text, int q) {
  if (q != 2 && q != 4) throw std::invalid_argument("parse_sequence: q must be 2 or 4");
  Sequence x;
  x.q = q;
  x.sym.reserve(text.size());
  for (char c : text) {
    if (q == 2) {
      if (c != '0' && c != '1') throw std::invalid_argument("parse_sequence: expected 0/1");
      x.sym.push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      const char* p = std::find(kQuat, kQuat + 4, c);
      if (p == kQuat + 4) throw std::invalid_argument("parse_sequence: expected A/C/G/T");
      x.sym.push_back(static_cast<std::uint8_t>(p - kQuat));
    }
  }
  return x;
}

std::string seq_to_string(const Sequence& x) {
  std::string out;
  out.reserve(x.sym.size());
  for (std::uint8_t v : x.sym)
    out.push_back(x.q == 2 ? static_cast<char>('0' + v) : kQuat[v]);
  return out;
}

std::uint64_t seq_to_index(const Sequence& x) {
  std::uint64_t idx = 0;
  for (std::uint8_t v : x.sym) idx = idx * x.q + v;
  return idx;
}

Sequence index_to_seq(std::uint64_t index, int L, int q) {
  Sequence x;
  x.q = q;
  x.sym.assign(L, 0);
  for (int i = L - 1; i >= 0; --i) {
    x.sym[i] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  if (index != 0) throw std::out_of_range("index_to_seq: index too large");
  return x;
}

}  // namespace setcodes
