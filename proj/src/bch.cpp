#include "setcodes/bch.hpp"

#include <set>
#include <stdexcept>

namespace setcodes {

BchCode::BchCode(int m, int n, int eps) : gf_(m), n_(n), eps_(eps) {
  const int full = static_cast<int>(gf_.size()) - 1;
  if (n < 1 || n > full) throw std::invalid_argument("BchCode: need 1 <= n <= 2^m - 1");
  if (eps < 0) throw std::invalid_argument("BchCode: negative radius");
  // generator = lcm of minimal polynomials of alpha^1..alpha^(2 eps):
  // product of (x + alpha^j) over the union of cyclotomic cosets
  std::set<int> exponents;
  for (int j = 1; j <= 2 * eps; ++j) {
    int e = j % full;
    do {
      exponents.insert(e);
      e = (2 * e) % full;
    } while (e != j % full);
  }
  std::vector<GFElem> g{1};
  for (int e : exponents) {
    std::vector<GFElem> next(g.size() + 1, 0);
    const GFElem root = gf_.exp(e);
    for (std::size_t i = 0; i < g.size(); ++i) {
      next[i + 1] ^= g[i];
      next[i] ^= gf_.mul(g[i], root);
    }
    g = std::move(next);
  }
  gen_.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > 1) throw std::logic_error("BchCode: generator is not binary");
    gen_[i] = static_cast<std::uint8_t>(g[i]);
  }
  redundancy_ = static_cast<int>(gen_.size()) - 1;
  if (redundancy_ > n) throw std::invalid_argument("BchCode: redundancy exceeds n");
}

std::vector<std::uint8_t> BchCode::encode(const std::vector<std::uint8_t>& info) const {
  if (static_cast<int>(info.size()) != k())
    throw std::invalid_argument("BchCode::encode: info length != k");
  std::vector<std::uint8_t> rem(n_, 0);
  for (int i = 0; i < k(); ++i) rem[redundancy_ + i] = info[i] & 1;
  for (int i = n_ - 1; i >= redundancy_; --i) {
    if (!rem[i]) continue;
    for (int j = 0; j <= redundancy_; ++j)
      rem[i - redundancy_ + j] ^= gen_[j];
  }
  std::vector<std::uint8_t> cw(n_);
  for (int i = 0; i < redundancy_; ++i) cw[i] = rem[i];
  for (int i = 0; i < k(); ++i) cw[redundancy_ + i] = info[i] & 1;
  return cw;
}

std::vector<GFElem> BchCode::syndromes(const std::vector<std::uint8_t>& word) const {
  if (static_cast<int>(word.size()) != n_)
    throw std::invalid_argument("BchCode::syndromes: word length != n");
  std::vector<GFElem> synd(2 * eps_);
  for (int j = 1; j <= 2 * eps_; ++j) {
    GFElem acc = 0;
    for (int i = 0; i < n_; ++i)
      if (word[i]) acc ^= gf_.exp(static_cast<long long>(i) * j);
    synd[j - 1] = acc;
  }
  return synd;
}

bool BchCode::is_codeword(const std::vector<std::uint8_t>& word) const {
  if (static_cast<int>(word.size()) != n_) return false;
  for (GFElem s : syndromes(word))
    if (s != 0) return false;
  return true;
}

std::optional<std::vector<int>> BchCode::error_positions(
    const std::vector<GFElem>& synd) const {
  if (static_cast<int>(synd.size()) != 2 * eps_)
    throw std::invalid_argument("BchCode::error_positions: need 2*eps syndromes");
  bool allZero = true;
  for (GFElem s : synd) allZero &= s == 0;
  if (allZero) return std::vector<int>{};

  const std::vector<GFElem> lambda = berlekamp_massey(gf_, synd);
  const int nu = static_cast<int>(lambda.size()) - 1;
  if (nu > eps_) return std::nullopt;
  std::vector<int> positions;
  for (int i = 0; i < n_; ++i) {
    GFElem acc = 0;
    for (std::size_t l = 0; l < lambda.size(); ++l)
      acc ^= gf_.mul(lambda[l], gf_.exp(-static_cast<long long>(i) * l));
    if (acc == 0) positions.push_back(i);
  }
  if (static_cast<int>(positions.size()) != nu) return std::nullopt;
  // verify: binary pattern at these positions must reproduce every syndrome
  for (int j = 1; j <= 2 * eps_; ++j) {
    GFElem acc = 0;
    for (int i : positions) acc ^= gf_.exp(static_cast<long long>(i) * j);
    if (acc != synd[j - 1]) return std::nullopt;
  }
  return positions;
}

std::optional<std::vector<std::uint8_t>> BchCode::decode(
    const std::vector<std::uint8_t>& word) const {
  if (static_cast<int>(word.size()) != n_)
    throw std::invalid_argument("BchCode::decode: word length != n");
  const auto positions = error_positions(syndromes(word));
  if (!positions) return std::nullopt;
  std::vector<std::uint8_t> corrected = word;
  for (int i : *positions) corrected[i] ^= 1;
  return std::vector<std::uint8_t>(corrected.begin() + redundancy_, corrected.end());
}

}  // namespace setcodes
