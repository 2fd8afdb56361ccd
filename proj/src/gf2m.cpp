#include "setcodes/gf2m.hpp"

#include <stdexcept>

namespace setcodes {

namespace {

// primitive polynomials, degree 1..16 (table mode)
const GFElem kPoly[17] = {0,      0x3,    0x7,    0xB,    0x13,  0x25,
                          0x43,   0x89,   0x11D,  0x211,  0x409, 0x805,
                          0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

using Poly = unsigned __int128;

int poly_deg(Poly p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

Poly poly_mod(Poly a, Poly f) {
  const int df = poly_deg(f);
  for (int d = poly_deg(a); d >= df; d = poly_deg(a)) a ^= f << (d - df);
  return a;
}

Poly poly_mulmod(Poly a, Poly b, Poly f) {
  Poly r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
  }
  return poly_mod(r, f);
}

Poly poly_gcd(Poly a, Poly b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(Poly f, int m) {
  // no factor of degree <= m/2: gcd(x^(2^d) - x, f) = 1 for all d <= m/2
  Poly r = 2;  // x
  for (int d = 1; d <= m / 2; ++d) {
    r = poly_mulmod(r, r, f);
    if (poly_gcd(r ^ 2, f) != 1) return false;
  }
  return true;
}

GFElem smallest_irreducible(int m) {
  const Poly top = Poly{1} << m;
  for (GFElem c = 1; c < (GFElem{1} << m); c += 2)
    if (is_irreducible(top | c, m)) return (GFElem{1} << m) | c;
  throw std::logic_error("smallest_irreducible: none found");
}

}  // namespace

GF2m::GF2m(int m) : m_(m) {
  if (m < 1 || m > 48) throw std::invalid_argument("GF2m: m must be in [1, 48]");
  if (m <= 16) {
    poly_ = kPoly[m];
    const std::size_t order = static_cast<std::size_t>(size() - 1);
    exp_.assign(order == 0 ? 1 : 2 * order, 1);
    log_.assign(static_cast<std::size_t>(size()), -1);
    GFElem v = 1;
    for (std::size_t i = 0; i < std::max<std::size_t>(order, 1); ++i) {
      exp_[i] = v;
      if (log_[v] == -1) log_[v] = static_cast<long long>(i);
      v <<= 1;
      if (v & size()) v ^= poly_;
    }
    for (std::size_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  } else {
    poly_ = smallest_irreducible(m);
  }
}

GFElem GF2m::mul(GFElem a, GFElem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return static_cast<GFElem>(poly_mulmod(a, b, poly_));
}

GFElem GF2m::inv(GFElem a) const {
  if (a == 0) throw std::invalid_argument("GF2m::inv: zero");
  if (order() == 0) return 1;
  if (!exp_.empty()) return exp_[order() - log_[a]];
  return pow(a, static_cast<long long>(order() - 1));
}

GFElem GF2m::div(GFElem a, GFElem b) const { return mul(a, inv(b)); }

GFElem GF2m::pow(GFElem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("GF2m::pow: zero to negative power");
    return e == 0 ? 1 : 0;
  }
  const long long ord = static_cast<long long>(order());
  long long r = ord == 0 ? 0 : e % ord;
  if (r < 0) r += ord;
  GFElem result = 1, base = a;
  while (r) {
    if (r & 1) result = mul(result, base);
    base = mul(base, base);
    r >>= 1;
  }
  return result;
}

GFElem GF2m::exp(long long i) const {
  const long long ord = static_cast<long long>(order());
  if (ord == 0) return 1;
  long long idx = i % ord;
  if (idx < 0) idx += ord;
  if (!exp_.empty()) return exp_[idx];
  return pow(2, idx);
}

long long GF2m::log(GFElem a) const {
  if (exp_.empty()) throw std::logic_error("GF2m::log: no table for this degree");
  if (a == 0 || a >= size()) throw std::invalid_argument("GF2m::log: bad element");
  return log_[a];
}

std::vector<GFElem> berlekamp_massey(const GF2m& gf, const std::vector<GFElem>& seq) {
  std::vector<GFElem> C{1}, B{1};
  int L = 0, x = 1;
  GFElem b = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    GFElem d = seq[n];
    for (int i = 1; i <= L; ++i)
      if (i < static_cast<int>(C.size()))
        d = gf.add(d, gf.mul(C[i], seq[n - i]));
    if (d == 0) {
      ++x;
    } else if (2 * L <= static_cast<int>(n)) {
      std::vector<GFElem> T = C;
      const GFElem coef = gf.div(d, b);
      C.resize(std::max(C.size(), B.size() + x), 0);
      for (std::size_t i = 0; i < B.size(); ++i)
        C[i + x] = gf.add(C[i + x], gf.mul(coef, B[i]));
      L = static_cast<int>(n) + 1 - L;
      B = std::move(T);
      b = d;
      x = 1;
    } else {
      const GFElem coef = gf.div(d, b);
      C.resize(std::max(C.size(), B.size() + x), 0);
      for (std::size_t i = 0; i < B.size(); ++i)
        C[i + x] = gf.add(C[i + x], gf.mul(coef, B[i]));
      ++x;
    }
  }
  C.resize(L + 1, 0);
  return C;
}

}  // namespace setcodes
