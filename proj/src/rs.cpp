#include "setcodes/rs.hpp"

#include <stdexcept>

namespace setcodes {

RsCode::RsCode(int m, int n, int k) : gf_(m), n_(n), k_(k) {
  if (k < 0 || k > n) throw std::invalid_argument("RsCode: need 0 <= k <= n");
  if (static_cast<std::uint64_t>(n) > gf_.size() - 1)
    throw std::invalid_argument("RsCode: n exceeds field size - 1");
  // g(x) = prod_{j=1..delta} (x + alpha^j)
  gen_ = {1};
  for (int j = 1; j <= delta(); ++j) {
    std::vector<GFElem> next(gen_.size() + 1, 0);
    const GFElem root = gf_.exp(j);
    for (std::size_t i = 0; i < gen_.size(); ++i) {
      next[i + 1] ^= gen_[i];
      next[i] ^= gf_.mul(gen_[i], root);
    }
    gen_ = std::move(next);
  }
}

std::vector<GFElem> RsCode::encode(const std::vector<GFElem>& info) const {
  if (static_cast<int>(info.size()) != k_)
    throw std::invalid_argument("RsCode::encode: info length != k");
  for (GFElem v : info)
    if (v >= gf_.size()) throw std::invalid_argument("RsCode::encode: symbol out of field");
  // c(x) = x^delta * I(x) + (x^delta * I(x) mod g(x))
  std::vector<GFElem> rem(n_, 0);
  for (int i = 0; i < k_; ++i) rem[delta() + i] = info[i];
  for (int i = n_ - 1; i >= delta(); --i) {
    const GFElem coef = rem[i];
    if (coef == 0) continue;
    for (int j = 0; j <= delta(); ++j)
      rem[i - delta() + j] ^= gf_.mul(coef, gen_[j]);
  }
  std::vector<GFElem> cw(n_);
  for (int i = 0; i < delta(); ++i) cw[i] = rem[i];
  for (int i = 0; i < k_; ++i) cw[delta() + i] = info[i];
  return cw;
}

std::vector<GFElem> RsCode::syndromes(const std::vector<GFElem>& word) const {
  std::vector<GFElem> synd(delta());
  for (int j = 1; j <= delta(); ++j) {
    GFElem acc = 0;
    for (int i = 0; i < n_; ++i)
      acc ^= gf_.mul(word[i], gf_.exp(static_cast<long long>(i) * j));
    synd[j - 1] = acc;
  }
  return synd;
}

bool RsCode::is_codeword(const std::vector<GFElem>& word) const {
  if (static_cast<int>(word.size()) != n_) return false;
  for (GFElem v : syndromes(word))
    if (v != 0) return false;
  return true;
}

std::optional<std::vector<GFElem>> RsCode::decode(
    const std::vector<std::optional<GFElem>>& received) const {
  if (static_cast<int>(received.size()) != n_)
    throw std::invalid_argument("RsCode::decode: word length != n");
  std::vector<int> erasures;
  std::vector<GFElem> y(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (received[i]) {
      if (*received[i] >= gf_.size())
        throw std::invalid_argument("RsCode::decode: symbol out of field");
      y[i] = *received[i];
    } else {
      erasures.push_back(i);
    }
  }
  const int e = static_cast<int>(erasures.size());
  if (e > delta()) return std::nullopt;

  const std::vector<GFElem> synd = syndromes(y);

  // erasure locator Gamma(x) = prod (1 + alpha^i x)
  std::vector<GFElem> gamma{1};
  for (int i : erasures) {
    std::vector<GFElem> next(gamma.size() + 1, 0);
    const GFElem loc = gf_.exp(i);
    for (std::size_t l = 0; l < gamma.size(); ++l) {
      next[l] ^= gamma[l];
      next[l + 1] ^= gf_.mul(gamma[l], loc);
    }
    gamma = std::move(next);
  }

  // modified syndromes Xi = Gamma * S mod x^delta, fed to BM from index e
  std::vector<GFElem> xi(delta(), 0);
  for (std::size_t l = 0; l < gamma.size(); ++l)
    for (int j = 0; l + j < static_cast<std::size_t>(delta()); ++j)
      xi[l + j] ^= gf_.mul(gamma[l], synd[j]);
  const std::vector<GFElem> modified(xi.begin() + e, xi.end());
  const std::vector<GFElem> lambda = berlekamp_massey(gf_, modified);
  const int nu = static_cast<int>(lambda.size()) - 1;
  if (2 * nu > delta() - e) return std::nullopt;

  // Chien search over the n valid locators
  std::vector<int> unknowns = erasures;
  for (int i = 0; i < n_; ++i) {
    GFElem acc = 0;
    for (std::size_t l = 0; l < lambda.size(); ++l)
      acc ^= gf_.mul(lambda[l], gf_.exp(-static_cast<long long>(i) * l));
    if (acc == 0) unknowns.push_back(i);
  }
  if (static_cast<int>(unknowns.size()) != e + nu) return std::nullopt;

  // solve sum_{u} e_u alpha^{u j} = S_j for the unknown values
  const int u = static_cast<int>(unknowns.size());
  std::vector<std::vector<GFElem>> aug(delta(),
                                              std::vector<GFElem>(u + 1, 0));
  for (int j = 0; j < delta(); ++j) {
    for (int col = 0; col < u; ++col)
      aug[j][col] = gf_.exp(static_cast<long long>(unknowns[col]) * (j + 1));
    aug[j][u] = synd[j];
  }
  int row = 0;
  for (int col = 0; col < u && row < delta(); ++col) {
    int pivot = -1;
    for (int r = row; r < delta(); ++r)
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(aug[row], aug[pivot]);
    const GFElem invp = gf_.inv(aug[row][col]);
    for (int c = col; c <= u; ++c) aug[row][c] = gf_.mul(aug[row][c], invp);
    for (int r = 0; r < delta(); ++r)
      if (r != row && aug[r][col] != 0) {
        const GFElem f = aug[r][col];
        for (int c = col; c <= u; ++c)
          aug[r][c] ^= gf_.mul(f, aug[row][c]);
      }
    ++row;
  }
  if (row < u) return std::nullopt;
  for (int r = row; r < delta(); ++r)
    if (aug[r][u] != 0) return std::nullopt;  // inconsistent system

  std::vector<GFElem> corrected = y;
  for (int col = 0; col < u; ++col) corrected[unknowns[col]] ^= aug[col][u];
  if (!is_codeword(corrected)) return std::nullopt;
  return std::vector<GFElem>(corrected.begin() + delta(), corrected.end());
}

}  // namespace setcodes
