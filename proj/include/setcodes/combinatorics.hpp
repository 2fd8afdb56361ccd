#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace setcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; returns 0 when k > n.
BigInt binom_exact(const BigInt& n, const BigInt& k);
BigInt binom_exact(std::uint64_t n, std::uint64_t k);

/// n! / (s! t! (n-s-t)!); rejects s + t > n.
BigInt multinom_exact(const BigInt& n, const BigInt& s, const BigInt& t);

/// log2 of an arbitrary positive big integer.
double log2_bigint(const BigInt& v);

/// log2 of binom(n, k), relative error <= 1e-9.
/// Exact big-integer path for small n, log-gamma otherwise.
double log2_binom(const BigInt& n, const BigInt& k);

/// Colexicographic rank of a sorted K-subset of {0..N-1}.
BigInt subset_rank(const std::vector<std::uint64_t>& subset);

/// Inverse of subset_rank; rank must be < binom(N, K).
std::vector<std::uint64_t> subset_unrank(const BigInt& rank, std::uint64_t n,
                                         std::uint64_t k);

}  // namespace setcodes
