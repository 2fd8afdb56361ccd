#pragma once

#include <optional>
#include <vector>

#include "setcodes/sequence.hpp"

namespace setcodes {

/// VT checksum s_L(x) = sum_i i*x_i mod (L+1), positions 1-based; binary only.
int vt_checksum(const Sequence& x);

/// Recovers the unique length-L word with checksum a from a word obtained by
/// one deletion (|y| = L-1) or one insertion (|y| = L+1); |y| = L passes
/// through when the checksum already matches. nullopt when inconsistent.
std::optional<Sequence> vt_decode(const Sequence& y, int L, int a);

/// Parity positions 2^0, ..., 2^(p-1) with p = ceil(log2(L+1)); 1-based.
std::vector<int> vt_parity_positions(int L);
int vt_info_bits(int L);

/// Places info at the non-dyadic positions and chooses the dyadic parity bits
/// greedily (highest weight first) to meet checksum a.
Sequence vt_systematic_encode(const std::vector<std::uint8_t>& info, int L, int a);

/// Info bits of a systematically encoded word, in position order.
std::vector<std::uint8_t> vt_extract_info(const Sequence& x);

}  // namespace setcodes
