#pragma once

#include <optional>

#include "setcodes/gf2m.hpp"

namespace setcodes {

/// Binary narrow-sense primitive BCH code of designed distance 2*eps + 1,
/// shortened from length 2^m - 1 to n; corrects eps substitutions.
class BchCode {
 public:
  BchCode(int m, int n, int eps);

  int n() const { return n_; }
  int k() const { return n_ - redundancy_; }
  int redundancy() const { return redundancy_; }
  int eps() const { return eps_; }
  const GF2m& field() const { return gf_; }

  /// info (k bits) -> codeword (n bits); info occupies positions r..n-1.
  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& info) const;

  /// corrects <= eps substitutions; nullopt beyond radius.
  std::optional<std::vector<std::uint8_t>> decode(
      const std::vector<std::uint8_t>& word) const;

  bool is_codeword(const std::vector<std::uint8_t>& word) const;

  /// S_j = word(alpha^j) for j = 1..2*eps.
  std::vector<GFElem> syndromes(const std::vector<std::uint8_t>& word) const;

  /// Positions (of a length-n word) of a weight-<=eps error pattern with the
  /// given syndromes; nullopt if none within radius.
  std::optional<std::vector<int>> error_positions(
      const std::vector<GFElem>& synd) const;

 private:
  GF2m gf_;
  int n_, eps_, redundancy_;
  std::vector<std::uint8_t> gen_;  // binary generator polynomial coefficients
};

}  // namespace setcodes
