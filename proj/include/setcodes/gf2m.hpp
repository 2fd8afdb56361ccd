#pragma once

#include <cstdint>
#include <vector>

namespace setcodes {

using GFElem = std::uint64_t;

/// GF(2^m), 1 <= m <= 48. Degrees up to 16 use log/exp tables over a fixed
/// primitive polynomial; larger degrees use carryless multiplication over the
/// smallest irreducible polynomial of that degree (deterministic either way,
/// so encodings are bit-reproducible).
class GF2m {
 public:
  explicit GF2m(int m);

  int m() const { return m_; }
  GFElem size() const { return GFElem{1} << m_; }
  GFElem order() const { return size() - 1; }
  GFElem reduction_poly() const { return poly_; }

  GFElem add(GFElem a, GFElem b) const { return a ^ b; }
  GFElem mul(GFElem a, GFElem b) const;
  GFElem inv(GFElem a) const;
  GFElem div(GFElem a, GFElem b) const;
  GFElem pow(GFElem a, long long e) const;

  /// alpha^i with alpha = x, exponent reduced mod 2^m - 1. In table mode
  /// alpha is primitive; in generic mode its multiplicative order still
  /// exceeds m, which suffices for the short codes built on these fields.
  GFElem exp(long long i) const;
  /// discrete log base alpha (table mode only).
  long long log(GFElem a) const;

 private:
  int m_;
  GFElem poly_;
  std::vector<GFElem> exp_;
  std::vector<long long> log_;
};

/// Minimal LFSR (Berlekamp-Massey) for a syndrome sequence; returns the
/// connection polynomial Lambda with Lambda[0] = 1.
std::vector<GFElem> berlekamp_massey(const GF2m& gf, const std::vector<GFElem>& seq);

}  // namespace setcodes
