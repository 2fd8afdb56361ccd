#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "setcodes/combinatorics.hpp"
#include "setcodes/sequence.hpp"

namespace setcodes {

enum class ErrorType { Sub, Ins, Del, InsDel, InsSub, DelSub, All };

/// Parses the paper's tags: S, I, D, ID, IS, DS, L.
ErrorType parse_error_type(const std::string& tag);
std::string to_string(ErrorType type);

bool allows_sub(ErrorType type);
bool allows_ins(ErrorType type);
bool allows_del(ErrorType type);

/// Unbounded per-sequence error budget (the paper's bullet).
inline constexpr int kUnboundedEps = -1;

struct EnumCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration cap; overridable via SETCODES_ENUM_CAP.
std::uint64_t enum_cap();

/// Closed-form sphere sizes; uniform cases (S, I) only.
BigInt sphere_size(int L, int eps, int q, ErrorType type);
BigInt ball_size(int L, int eps, int q, ErrorType type);

/// Exact sphere/ball enumeration around a single sequence.
SeqSet enumerate_sphere(const Sequence& x, int eps, ErrorType type);
SeqSet enumerate_ball(const Sequence& x, int eps, ErrorType type);

/// N_eps^ins(L): largest pairwise intersection of eps-insertion spheres, q=2.
BigInt max_ins_sphere_intersection(int L, int eps, int q = 2);

/// All received sets of Def. 2: lose <= s sequences, corrupt <= t with
/// <= eps errors each (identity outcomes excluded), merge duplicates.
std::vector<SeqSet> set_error_ball(const SeqSet& S, int s, int t, int eps,
                                   ErrorType type);

/// One uniformly sampled member of the set error ball; deterministic per seed.
SeqSet sample_channel(const SeqSet& S, int s, int t, int eps, ErrorType type,
                      std::mt19937_64& rng);
SeqSet sample_channel(const SeqSet& S, int s, int t, int eps, ErrorType type,
                      std::uint64_t seed);

/// (1/2^L) sum_x |S_eps^del(x)|^t over all binary words, exact.
BigRat avg_del_sphere_power(int L, int eps, int t);

}  // namespace setcodes
