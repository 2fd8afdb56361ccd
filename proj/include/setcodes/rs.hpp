#pragma once

#include <optional>

#include "setcodes/gf2m.hpp"

namespace setcodes {

/// Reed-Solomon [n, k] code over GF(2^m), n <= 2^m - 1, systematic, with
/// errors-and-erasures decoding: recovery is guaranteed whenever
/// erasures + 2 * errors <= n - k.
class RsCode {
 public:
  RsCode(int m, int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int delta() const { return n_ - k_; }
  const GF2m& field() const { return gf_; }

  /// info (length k) -> codeword (length n); info occupies positions delta..n-1.
  std::vector<GFElem> encode(const std::vector<GFElem>& info) const;

  /// received word with erasures as nullopt; returns the info symbols or
  /// nullopt on decoding failure (inconsistent locator / syndrome).
  std::optional<std::vector<GFElem>> decode(
      const std::vector<std::optional<GFElem>>& received) const;

  bool is_codeword(const std::vector<GFElem>& word) const;

 private:
  std::vector<GFElem> syndromes(const std::vector<GFElem>& word) const;

  GF2m gf_;
  int n_, k_;
  std::vector<GFElem> gen_;  // generator polynomial, degree delta
};

}  // namespace setcodes
