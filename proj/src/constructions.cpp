#include "setcodes/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "setcodes/channel.hpp"

namespace setcodes {

namespace {

int ceil_log2(std::uint64_t v) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < v) ++bits;
  return bits;
}

std::uint64_t read_bits(const std::vector<std::uint8_t>& bits, std::size_t from,
                        int count) {
  std::uint64_t v = 0;
  for (int i = 0; i < count; ++i) v = v << 1 | (bits[from + i] & 1);
  return v;
}

void write_bits(std::vector<std::uint8_t>& bits, std::size_t from, int count,
                std::uint64_t v) {
  for (int i = count - 1; i >= 0; --i) {
    bits[from + i] = v & 1;
    v >>= 1;
  }
}

// next M-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DecodeMode parse_decode_mode(const std::string& tag) {
  if (tag == "L") return DecodeMode::All;
  if (tag == "I") return DecodeMode::InsOnly;
  if (tag == "D") return DecodeMode::DelOnly;
  throw std::invalid_argument("parse_decode_mode: unknown tag '" + tag + "'");
}

std::vector<std::uint8_t> Construction::sample_info(std::mt19937_64& rng) const {
  std::vector<std::uint8_t> info(info_bits());
  for (auto& b : info) b = rng() & 1;
  return info;
}

BigInt bits_to_bigint(const std::vector<std::uint8_t>& bits) {
  BigInt v = 0;
  for (std::uint8_t b : bits) v = v << 1 | (b & 1);
  return v;
}

std::vector<std::uint8_t> bigint_to_bits(BigInt value, int width) {
  std::vector<std::uint8_t> bits(width, 0);
  for (int i = width - 1; i >= 0 && value != 0; --i) {
    bits[i] = static_cast<std::uint8_t>(value & 1);
    value >>= 1;
  }
  if (value != 0) throw std::invalid_argument("bigint_to_bits: value too wide");
  return bits;
}

// ---------------------------------------------------------------- C1

C1Code::C1Code(int M, int L, int delta, DecodeMode mode)
    : M_(M),
      L_(L),
      delta_(delta),
      z_(ceil_log2(M)),
      p_(L - ceil_log2(M)),
      mode_(mode),
      rs_(p_, M, M - delta) {
  if (delta < 0 || delta > M) throw std::invalid_argument("C1Code: bad delta");
  // rs_ constructor already requires M <= 2^p - 1 (the paper's M <= sqrt(2^L)
  // feasibility footnote is implied by this)
}

DataSet C1Code::encode_symbols(const std::vector<GFElem>& payloads) const {
  const std::vector<GFElem> cw = rs_.encode(payloads);
  SeqSet seqs;
  for (int i = 0; i < M_; ++i) {
    Sequence x;
    x.q = 2;
    x.sym.assign(L_, 0);
    std::vector<std::uint8_t> tmp(L_, 0);
    write_bits(tmp, 0, z_, static_cast<std::uint64_t>(i));
    write_bits(tmp, z_, p_, cw[i]);
    x.sym = tmp;
    seqs.push_back(std::move(x));
  }
  return make_dataset(std::move(seqs));
}

std::optional<std::vector<GFElem>> C1Code::decode_symbols(const SeqSet& received) const {
  // per index: how many readable claimants, and the unique length-L payload
  std::vector<int> claims(M_, 0);
  std::vector<std::optional<GFElem>> symbol(M_);
  for (const Sequence& y : received) {
    if (mode_ != DecodeMode::All && y.size() != L_) continue;  // identified error
    if (y.size() < z_) continue;  // no readable index
    const std::uint64_t idx = read_bits(y.sym, 0, z_);
    if (idx >= static_cast<std::uint64_t>(M_)) continue;
    ++claims[idx];
    if (y.size() == L_)
      symbol[idx] = read_bits(y.sym, z_, p_);
    else
      symbol[idx] = std::nullopt;
  }
  std::vector<std::optional<GFElem>> word(M_);
  for (int i = 0; i < M_; ++i)
    word[i] = (claims[i] == 1) ? symbol[i] : std::nullopt;
  return rs_.decode(word);
}

DataSet C1Code::encode(const std::vector<std::uint8_t>& info) const {
  if (static_cast<int>(info.size()) != info_bits())
    throw std::invalid_argument("C1Code::encode: info length mismatch");
  std::vector<GFElem> payloads(M_ - delta_);
  for (std::size_t i = 0; i < payloads.size(); ++i)
    payloads[i] = read_bits(info, i * p_, p_);
  return encode_symbols(payloads);
}

std::optional<std::vector<std::uint8_t>> C1Code::decode(const SeqSet& received) const {
  const auto payloads = decode_symbols(received);
  if (!payloads) return std::nullopt;
  std::vector<std::uint8_t> info(info_bits(), 0);
  for (std::size_t i = 0; i < payloads->size(); ++i)
    write_bits(info, i * p_, p_, (*payloads)[i]);
  return info;
}

double c1_redundancy(int M, int L, int delta) {
  const int z = ceil_log2(M);
  const double indexing =
      log2_binom(BigInt(1) << L, M) - static_cast<double>(M) * (L - z);
  return indexing + static_cast<double>(delta) * (L - z);
}

// ---------------------------------------------------------------- C2

C2Code::C2Code(int L, int M, int s, int t)
    : L_(L), M_(M), s_(s), t_(t), N_(1 << L), bch_(L, (1 << L) - 1, s + 2 * t) {
  if (L < 2 || L > 10) throw std::invalid_argument("C2Code: need 2 <= L <= 10");
  if (M < 1 || M > N_) throw std::invalid_argument("C2Code: bad M");
  coset_.synd.assign(2 * tau(), 0);
  coset_.parity = M % 2;  // weight-M vectors force this parity
}

void C2Code::set_coset(const C2Coset& coset) {
  if (static_cast<int>(coset.synd.size()) != 2 * tau())
    throw std::invalid_argument("C2Code::set_coset: syndrome arity mismatch");
  if (coset.parity != M_ % 2)
    throw std::invalid_argument("C2Code::set_coset: parity inconsistent with weight M");
  coset_ = coset;
  codebook_.reset();
}

std::vector<std::uint8_t> C2Code::char_vector(const SeqSet& S) const {
  std::vector<std::uint8_t> v(N_, 0);
  for (const Sequence& x : S) {
    if (x.q != 2 || x.size() != L_)
      throw std::invalid_argument("C2Code: sequences must be binary of length L");
    v[seq_to_index(x)] = 1;
  }
  return v;
}

C2Coset C2Code::syndrome_of(const SeqSet& S) const {
  const std::vector<std::uint8_t> v = char_vector(S);
  C2Coset out;
  out.synd = bch_.syndromes({v.begin(), v.end() - 1});
  int parity = 0;
  for (std::uint8_t b : v) parity ^= b;
  out.parity = parity;
  return out;
}

bool C2Code::membership(const SeqSet& S) const {
  if (static_cast<int>(S.size()) != M_) return false;
  for (const Sequence& x : S)
    if (x.size() != L_ || x.q != 2) return false;
  return syndrome_of(S) == coset_;
}

std::optional<DataSet> C2Code::correct(const SeqSet& received) const {
  SeqSet kept;
  for (const Sequence& y : received)
    if (y.q == 2 && y.size() == L_) kept.push_back(y);
  normalize(kept);
  std::vector<std::uint8_t> v = char_vector(kept);
  int weight = static_cast<int>(kept.size());
  if (weight > M_) return std::nullopt;
  // weight restoration: bring the weight back to at least M - s
  for (int i = 0; i < N_ && weight < M_ - s_; ++i)
    if (!v[i]) {
      v[i] = 1;
      ++weight;
    }
  if (weight < M_ - s_) return std::nullopt;

  // coset decoding of radius tau: BM on the syndrome difference of the first
  // N-1 coordinates, then the parity difference settles the last coordinate
  const std::vector<GFElem> synd = bch_.syndromes({v.begin(), v.end() - 1});
  std::vector<GFElem> diff(synd.size());
  for (std::size_t j = 0; j < synd.size(); ++j) diff[j] = synd[j] ^ coset_.synd[j];
  const auto positions = bch_.error_positions(diff);
  if (!positions) return std::nullopt;
  int parity = 0;
  for (std::uint8_t b : v) parity ^= b;
  const int lastFlip = (parity ^ coset_.parity ^ (positions->size() & 1)) & 1;
  if (static_cast<int>(positions->size()) + lastFlip > tau()) return std::nullopt;
  for (int i : *positions) v[i] ^= 1;
  if (lastFlip) v[N_ - 1] ^= 1;

  SeqSet out;
  for (int i = 0; i < N_; ++i)
    if (v[i]) out.push_back(index_to_seq(i, L_, 2));
  if (static_cast<int>(out.size()) != M_) return std::nullopt;
  return make_dataset(std::move(out));
}

C2Coset C2Code::best_coset() const {
  if (binom_exact(N_, M_) > enum_cap())
    throw EnumCapExceeded("C2Code::best_coset: search space exceeds cap");
  std::map<C2Coset, int> hist;
  std::vector<int> idx(M_);
  for (int i = 0; i < M_; ++i) idx[i] = i;
  do {
    SeqSet S;
    for (int i : idx) S.push_back(index_to_seq(i, L_, 2));
    ++hist[syndrome_of(S)];
  } while (next_combination(idx, N_));
  const C2Coset* best = nullptr;
  int bestCount = -1;
  for (const auto& [key, count] : hist)
    if (count > bestCount) {
      best = &key;
      bestCount = count;
    }
  return *best;
}

const std::vector<DataSet>& C2Code::codewords() const {
  if (!codebook_) {
    if (binom_exact(N_, M_) > enum_cap())
      throw EnumCapExceeded("C2Code::codewords: search space exceeds cap");
    std::vector<DataSet> book;
    std::vector<int> idx(M_);
    for (int i = 0; i < M_; ++i) idx[i] = i;
    do {
      SeqSet S;
      for (int i : idx) S.push_back(index_to_seq(i, L_, 2));
      if (syndrome_of(S) == coset_) book.push_back(make_dataset(std::move(S)));
    } while (next_combination(idx, N_));
    std::sort(book.begin(), book.end());
    codebook_ = std::move(book);
  }
  return *codebook_;
}

int C2Code::info_bits() const {
  const std::size_t count = codewords().size();
  if (count == 0) return 0;
  int bits = 0;
  while ((std::size_t{1} << (bits + 1)) <= count) ++bits;
  return bits;
}

DataSet C2Code::encode(const std::vector<std::uint8_t>& info) const {
  const auto& book = codewords();
  if (book.empty()) throw std::invalid_argument("C2Code::encode: empty coset");
  if (static_cast<int>(info.size()) != info_bits())
    throw std::invalid_argument("C2Code::encode: info length mismatch");
  const std::uint64_t r = read_bits(info, 0, static_cast<int>(info.size()));
  return book[r];
}

std::optional<std::vector<std::uint8_t>> C2Code::decode(const SeqSet& received) const {
  const auto corrected = correct(received);
  if (!corrected) return std::nullopt;
  const auto& book = codewords();
  const auto it = std::lower_bound(book.begin(), book.end(), *corrected);
  if (it == book.end() || *it != *corrected) return std::nullopt;
  const std::uint64_t r = static_cast<std::uint64_t>(it - book.begin());
  const int bits = info_bits();
  if (bits < 64 && r >= (std::uint64_t{1} << bits)) return std::nullopt;
  std::vector<std::uint8_t> info(bits, 0);
  write_bits(info, 0, bits, r);
  return info;
}

// ---------------------------------------------------------------- C3

C3Code::C3Code(int M, int L, double c, int delta, DecodeMode mode)
    : M_(M), L_(L), delta_(delta), mode_(mode) {
  z_ = ceil_log2(M);
  if ((1 << z_) != M) throw std::invalid_argument("C3Code: M must be a power of two");
  const double cz = c * z_;
  zi_ = static_cast<int>(std::llround(cz));
  if (std::abs(cz - zi_) > 1e-9 || zi_ < 0 || zi_ > z_)
    throw std::invalid_argument("C3Code: c*log2(M) must be an integer in [0, log2 M]");
  p_ = L - zi_;
  G_ = 1 << (z_ - zi_);
  n_ = 1 << zi_;
  if (p_ < 0 || p_ > 40) throw std::invalid_argument("C3Code: payload width out of range");
  const BigInt universe = BigInt(1) << p_;
  if (universe < G_) throw std::invalid_argument("C3Code: group larger than payload space");
  const BigInt symbols = binom_exact(universe, BigInt(G_));
  k_ = static_cast<int>(boost::multiprecision::msb(symbols));  // floor(log2)
  if (k_ < 1 || k_ > 48) throw std::invalid_argument("C3Code: symbol field out of range");
  if (delta < 0 || delta > n_) throw std::invalid_argument("C3Code: bad delta");
  rs_ = std::make_unique<RsCode>(k_, n_, n_ - delta);
}

DataSet C3Code::encode_symbols(const std::vector<GFElem>& symbols) const {
  const std::vector<GFElem> cw = rs_->encode(symbols);
  SeqSet seqs;
  for (int i = 0; i < n_; ++i) {
    const auto members = subset_unrank(BigInt(cw[i]), std::uint64_t{1} << p_, G_);
    for (std::uint64_t payload : members) {
      Sequence x;
      x.q = 2;
      std::vector<std::uint8_t> tmp(L_, 0);
      write_bits(tmp, 0, zi_, static_cast<std::uint64_t>(i));
      write_bits(tmp, zi_, p_, payload);
      x.sym = std::move(tmp);
      seqs.push_back(std::move(x));
    }
  }
  return make_dataset(std::move(seqs));
}

std::optional<std::vector<GFElem>> C3Code::decode_symbols(const SeqSet& received) const {
  std::vector<std::vector<std::uint64_t>> groups(n_);
  for (const Sequence& y : received) {
    if (y.size() != L_) continue;  // off-length: readable only as a loss
    const std::uint64_t g = zi_ == 0 ? 0 : read_bits(y.sym, 0, zi_);
    if (g >= static_cast<std::uint64_t>(n_)) continue;
    groups[g].push_back(read_bits(y.sym, zi_, p_));
  }
  std::vector<std::optional<GFElem>> word(n_);
  for (int i = 0; i < n_; ++i) {
    auto& members = groups[i];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (static_cast<int>(members.size()) != G_) continue;  // erasure
    const BigInt rank = subset_rank(members);
    if (rank >> k_ != 0) continue;  // outside the field subrange: erasure
    word[i] = rank.convert_to<GFElem>();
  }
  return rs_->decode(word);
}

DataSet C3Code::encode(const std::vector<std::uint8_t>& info) const {
  if (static_cast<int>(info.size()) != info_bits())
    throw std::invalid_argument("C3Code::encode: info length mismatch");
  std::vector<GFElem> symbols(n_ - delta_);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    symbols[i] = read_bits(info, i * k_, k_);
  return encode_symbols(symbols);
}

std::optional<std::vector<std::uint8_t>> C3Code::decode(const SeqSet& received) const {
  const auto symbols = decode_symbols(received);
  if (!symbols) return std::nullopt;
  std::vector<std::uint8_t> info(info_bits(), 0);
  for (std::size_t i = 0; i < symbols->size(); ++i)
    write_bits(info, i * k_, k_, (*symbols)[i]);
  return info;
}

double c3_redundancy(int M, int L, double c, int delta) {
  const int z = ceil_log2(M);
  if ((1 << z) != M) throw std::invalid_argument("c3_redundancy: M must be a power of two");
  const double cz = c * z;
  const int zi = static_cast<int>(std::llround(cz));
  if (std::abs(cz - zi) > 1e-9 || zi < 0 || zi > z)
    throw std::invalid_argument("c3_redundancy: c*log2(M) must be an integer in [0, log2 M]");
  const int groups = 1 << zi;
  if (delta < 0 || delta > groups) throw std::invalid_argument("c3_redundancy: bad delta");
  const int groupSize = 1 << (z - zi);
  if (L - zi < 0) throw std::invalid_argument("c3_redundancy: infeasible (M, L, c)");
  const BigInt universe = BigInt(1) << (L - zi);
  if (universe < groupSize) throw std::invalid_argument("c3_redundancy: infeasible (M, L, c)");
  return log2_binom(BigInt(1) << L, M) -
         static_cast<double>(groups - delta) * log2_binom(universe, groupSize);
}

// ---------------------------------------------------------------- C4

C4Code::C4Code(BchCode inner, std::shared_ptr<Construction> outer, int outer_L)
    : inner_(std::move(inner)), outer_(std::move(outer)), outer_L_(outer_L) {
  if (inner_.k() != outer_L_)
    throw std::invalid_argument("C4Code: inner dimension must equal outer sequence length");
}

DataSet C4Code::encode(const std::vector<std::uint8_t>& info) const {
  const DataSet outerSet = outer_->encode(info);
  SeqSet seqs;
  for (const Sequence& xo : outerSet.seqs) {
    const std::vector<std::uint8_t> cw = inner_.encode(xo.sym);
    Sequence x;
    x.q = 2;
    x.sym = cw;
    seqs.push_back(std::move(x));
  }
  return make_dataset(std::move(seqs));
}

std::optional<std::vector<std::uint8_t>> C4Code::decode(const SeqSet& received) const {
  SeqSet innerDecoded;
  for (const Sequence& y : received) {
    if (y.size() != inner_.n()) continue;  // inner failure == loss
    const auto info = inner_.decode(y.sym);
    if (!info) continue;
    Sequence x;
    x.q = 2;
    x.sym = *info;
    innerDecoded.push_back(std::move(x));
  }
  normalize(innerDecoded);
  return outer_->decode(innerDecoded);
}

// ---------------------------------------------------------------- C5

C5Code::C5Code(int M, int L, int a) : M_(M), L_(L), a_(a) {
  if (L < 3) throw std::invalid_argument("C5Code: need L >= 3");
  if (a < 0 || a > L) throw std::invalid_argument("C5Code: residue out of range");
  if (M < 2) throw std::invalid_argument("C5Code: need M >= 2");
  flag_ = 0;
  for (int pos = L; pos >= 1; --pos)
    if ((pos & (pos - 1)) != 0) {
      flag_ = pos;
      break;
    }
  if (flag_ == 0) throw std::logic_error("C5Code: no non-dyadic position");
  if (BigInt(M - 1) > (BigInt(1) << (L - 1)))
    throw std::invalid_argument("C5Code: too many sequences for the payload space");
}

int C5Code::info_bits() const {
  return (M_ - 1) * (L_ - 1) + vt_info_bits(L_) - 1;
}

DataSet C5Code::encode(const std::vector<std::uint8_t>& info) const {
  if (static_cast<int>(info.size()) != info_bits())
    throw std::invalid_argument("C5Code::encode: info length mismatch");
  SeqSet seqs;
  int checksumTotal = 0;
  std::uint64_t prev = 0;
  for (int i = 0; i < M_ - 1; ++i) {
    const std::uint64_t chunk =
        read_bits(info, static_cast<std::size_t>(i) * (L_ - 1), L_ - 1);
    if (i > 0 && chunk <= prev)
      throw std::invalid_argument(
          "C5Code::encode: free payload chunks must be strictly increasing");
    prev = chunk;
    Sequence x;
    x.q = 2;
    std::vector<std::uint8_t> tmp(L_ - 1, 0);
    write_bits(tmp, 0, L_ - 1, chunk);
    tmp.insert(tmp.begin() + (flag_ - 1), 0);  // flag bit zero: free sequence
    x.sym = std::move(tmp);
    checksumTotal = (checksumTotal + vt_checksum(x)) % (L_ + 1);
    seqs.push_back(std::move(x));
  }
  const int residue = ((a_ - checksumTotal) % (L_ + 1) + (L_ + 1)) % (L_ + 1);
  // completing sequence: VT-encoded with the flag info bit set
  std::vector<std::uint8_t> vinfo(vt_info_bits(L_), 0);
  std::vector<bool> isParity(L_ + 1, false);
  for (int p : vt_parity_positions(L_)) isParity[p] = true;
  std::size_t src = static_cast<std::size_t>(M_ - 1) * (L_ - 1);
  std::size_t vi = 0;
  for (int pos = 1; pos <= L_; ++pos) {
    if (isParity[pos]) continue;
    vinfo[vi++] = (pos == flag_) ? 1 : info[src++];
  }
  seqs.push_back(vt_systematic_encode(vinfo, L_, residue));
  return make_dataset(std::move(seqs));
}

bool C5Code::membership(const SeqSet& S) const {
  if (static_cast<int>(S.size()) != M_) return false;
  int total = 0;
  for (const Sequence& x : S) {
    if (x.q != 2 || x.size() != L_) return false;
    total = (total + vt_checksum(x)) % (L_ + 1);
  }
  return total == a_;
}

std::optional<DataSet> C5Code::correct(const SeqSet& received) const {
  SeqSet good;
  std::vector<Sequence> offLength;
  for (const Sequence& y : received) {
    if (y.size() == L_)
      good.push_back(y);
    else
      offLength.push_back(y);
  }
  if (offLength.size() > 1) return std::nullopt;
  if (offLength.empty()) {
    if (static_cast<int>(good.size()) != M_) return std::nullopt;
    DataSet out = make_dataset(good);
    if (!membership(out.seqs)) return std::nullopt;
    return out;
  }
  if (static_cast<int>(good.size()) != M_ - 1) return std::nullopt;
  const Sequence& y = offLength.front();
  if (y.size() != L_ - 1 && y.size() != L_ + 1) return std::nullopt;
  int total = 0;
  for (const Sequence& x : good) total = (total + vt_checksum(x)) % (L_ + 1);
  const int deficiency = ((a_ - total) % (L_ + 1) + (L_ + 1)) % (L_ + 1);
  const auto restored = vt_decode(y, L_, deficiency);
  if (!restored || contains(good, *restored)) return std::nullopt;
  good.push_back(*restored);
  return make_dataset(std::move(good));
}

std::optional<std::vector<std::uint8_t>> C5Code::decode(const SeqSet& received) const {
  const auto corrected = correct(received);
  if (!corrected) return std::nullopt;
  SeqSet frees;
  std::optional<Sequence> completer;
  for (const Sequence& x : corrected->seqs) {
    if (x.sym[flag_ - 1]) {
      if (completer) return std::nullopt;
      completer = x;
    } else {
      frees.push_back(x);
    }
  }
  if (!completer || static_cast<int>(frees.size()) != M_ - 1) return std::nullopt;
  std::vector<std::uint8_t> info(info_bits(), 0);
  for (int i = 0; i < M_ - 1; ++i) {
    std::vector<std::uint8_t> chunk = frees[i].sym;
    chunk.erase(chunk.begin() + (flag_ - 1));
    for (int b = 0; b < L_ - 1; ++b)
      info[static_cast<std::size_t>(i) * (L_ - 1) + b] = chunk[b];
  }
  const std::vector<std::uint8_t> vinfo = vt_extract_info(*completer);
  std::vector<bool> isParity(L_ + 1, false);
  for (int p : vt_parity_positions(L_)) isParity[p] = true;
  std::size_t dst = static_cast<std::size_t>(M_ - 1) * (L_ - 1);
  std::size_t vi = 0;
  for (int pos = 1; pos <= L_; ++pos) {
    if (isParity[pos]) continue;
    if (pos == flag_) {
      if (!vinfo[vi++]) return std::nullopt;
    } else {
      info[dst++] = vinfo[vi++];
    }
  }
  return info;
}

std::vector<std::uint8_t> C5Code::sample_info(std::mt19937_64& rng) const {
  std::vector<std::uint64_t> chunks;
  while (static_cast<int>(chunks.size()) < M_ - 1) {
    chunks.push_back(rng() & ((std::uint64_t{1} << (L_ - 1)) - 1));
    std::sort(chunks.begin(), chunks.end());
    chunks.erase(std::unique(chunks.begin(), chunks.end()), chunks.end());
  }
  std::vector<std::uint8_t> info(info_bits(), 0);
  for (int i = 0; i < M_ - 1; ++i)
    write_bits(info, static_cast<std::size_t>(i) * (L_ - 1), L_ - 1, chunks[i]);
  for (std::size_t i = static_cast<std::size_t>(M_ - 1) * (L_ - 1); i < info.size(); ++i)
    info[i] = rng() & 1;
  return info;
}

std::vector<DataSet> c5_enumerate(int M, int L, int a) {
  const std::uint64_t universe = std::uint64_t{1} << L;
  if (binom_exact(universe, static_cast<std::uint64_t>(M)) > enum_cap())
    throw EnumCapExceeded("c5_enumerate: search space exceeds cap");
  std::vector<DataSet> out;
  std::vector<int> idx(M);
  for (int i = 0; i < M; ++i) idx[i] = i;
  do {
    SeqSet S;
    int total = 0;
    for (int i : idx) {
      S.push_back(index_to_seq(i, L, 2));
      total = (total + vt_checksum(S.back())) % (L + 1);
    }
    if (total == a) out.push_back(make_dataset(std::move(S)));
  } while (next_combination(idx, static_cast<int>(universe)));
  return out;
}

// ---------------------------------------------------------------- C6 / C7

SubsetOfCodebook::SubsetOfCodebook(int M, int L) : M_(M), L_(L) {
  if (M < 1) throw std::invalid_argument("SubsetOfCodebook: M >= 1");
}

void SubsetOfCodebook::set_codebook(SeqSet book) {
  normalize(book);
  if (static_cast<int>(book.size()) < M_)
    throw std::invalid_argument("SubsetOfCodebook: codebook smaller than M");
  book_ = std::move(book);
}

int SubsetOfCodebook::info_bits() const {
  const BigInt total = binom_exact(book_.size(), static_cast<std::uint64_t>(M_));
  return static_cast<int>(boost::multiprecision::msb(total));
}

DataSet SubsetOfCodebook::encode(const std::vector<std::uint8_t>& info) const {
  if (static_cast<int>(info.size()) != info_bits())
    throw std::invalid_argument("SubsetOfCodebook::encode: info length mismatch");
  const auto indices = subset_unrank(bits_to_bigint(info), book_.size(), M_);
  SeqSet seqs;
  for (std::uint64_t i : indices) seqs.push_back(book_[i]);
  return make_dataset(std::move(seqs));
}

std::optional<std::vector<std::uint8_t>> SubsetOfCodebook::decode(
    const SeqSet& received) const {
  SeqSet corrected;
  for (const Sequence& y : received) {
    const auto x = correct_sequence(y);
    if (!x) return std::nullopt;
    corrected.push_back(*x);
  }
  normalize(corrected);
  if (static_cast<int>(corrected.size()) != M_) return std::nullopt;  // merged: over budget
  std::vector<std::uint64_t> indices;
  for (const Sequence& x : corrected) {
    const auto it = std::lower_bound(book_.begin(), book_.end(), x);
    if (it == book_.end() || *it != x) return std::nullopt;
    indices.push_back(static_cast<std::uint64_t>(it - book_.begin()));
  }
  const BigInt rank = subset_rank(indices);
  if (rank >> info_bits() != 0) return std::nullopt;
  return bigint_to_bits(rank, info_bits());
}

C6Code::C6Code(int M, int L, int a) : SubsetOfCodebook(M, L), a_(a) {
  if (a < 0 || a > L) throw std::invalid_argument("C6Code: residue out of range");
  if (L > 24) throw std::invalid_argument("C6Code: L too large to enumerate");
  SeqSet book;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w) {
    Sequence x = index_to_seq(w, L, 2);
    if (vt_checksum(x) == a) book.push_back(std::move(x));
  }
  set_codebook(std::move(book));
}

std::optional<Sequence> C6Code::correct_sequence(const Sequence& y) const {
  if (y.q != 2 || std::abs(y.size() - L_) > 1) return std::nullopt;
  return vt_decode(y, L_, a_);
}

C7Code::C7Code(int M, int L, int eps)
    : SubsetOfCodebook(M, L), bch_(ceil_log2(L + 1), L, eps) {
  if (bch_.k() > 22) throw std::invalid_argument("C7Code: codebook too large to enumerate");
  SeqSet book;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << bch_.k()); ++w) {
    std::vector<std::uint8_t> info(bch_.k());
    for (int i = 0; i < bch_.k(); ++i) info[i] = w >> i & 1;
    Sequence x;
    x.q = 2;
    x.sym = bch_.encode(info);
    book.push_back(std::move(x));
  }
  set_codebook(std::move(book));
}

std::optional<Sequence> C7Code::correct_sequence(const Sequence& y) const {
  if (y.q != 2 || y.size() != L_) return std::nullopt;
  const auto info = bch_.decode(y.sym);
  if (!info) return std::nullopt;
  Sequence x;
  x.q = 2;
  x.sym = bch_.encode(*info);
  return x;
}

}  // namespace setcodes
