#include "setcodes/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace setcodes {

namespace {

// exact big-integer path only below this n
constexpr std::uint64_t kExactThreshold = std::uint64_t{1} << 24;
// and only when min(k, n-k) stays small enough to multiply out
constexpr std::uint64_t kExactK = 100000;

const long double kLn2 = 0.69314718055994530942L;

}  // namespace

BigInt binom_exact(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0) throw std::invalid_argument("binom_exact: negative argument");
  if (k > n) return 0;
  BigInt kk = k;
  if (n - k < kk) kk = n - k;
  BigInt result = 1;
  for (BigInt i = 0; i < kk; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt binom_exact(std::uint64_t n, std::uint64_t k) {
  return binom_exact(BigInt(n), BigInt(k));
}

BigInt multinom_exact(const BigInt& n, const BigInt& s, const BigInt& t) {
  if (s < 0 || t < 0 || n < 0) throw std::invalid_argument("multinom_exact: negative argument");
  if (s + t > n) throw std::invalid_argument("multinom_exact: s + t > n");
  return binom_exact(n, s) * binom_exact(n - s, t);
}

double log2_bigint(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("log2_bigint: nonpositive argument");
  const std::size_t bits = boost::multiprecision::msb(v);  // index of top bit
  if (bits <= 62) {
    return static_cast<double>(std::log2(static_cast<long double>(v.convert_to<std::uint64_t>())));
  }
  const BigInt top = v >> (bits - 63);
  const long double mant = static_cast<long double>(top.convert_to<std::uint64_t>());
  return static_cast<double>(static_cast<long double>(bits - 63) + std::log2(mant));
}

double log2_binom(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0) throw std::invalid_argument("log2_binom: negative argument");
  if (k > n) throw std::invalid_argument("log2_binom: k > n");
  BigInt kk = k;
  if (n - k < kk) kk = n - k;
  if (kk == 0) return 0.0;

  if (n <= kExactThreshold && kk <= kExactK) {
    return log2_bigint(binom_exact(n, k));
  }

  // log2 binom(n, kk) = sum_{i<kk} log2(n - i) - log2(kk!)
  if (kk <= BigInt(20000000)) {
    const std::uint64_t kv = kk.convert_to<std::uint64_t>();
    long double acc = 0.0L;
    for (std::uint64_t i = 0; i < kv; ++i) {
      acc += static_cast<long double>(log2_bigint(n - i));
    }
    acc -= std::lgamma(static_cast<long double>(kv) + 1.0L) / kLn2;
    return static_cast<double>(acc);
  }

  // both k and n-k large: plain log-gamma, cancellation stays mild here
  const long double nf = n.convert_to<long double>();
  const long double kf = kk.convert_to<long double>();
  const long double r = std::lgamma(nf + 1.0L) - std::lgamma(kf + 1.0L) -
                        std::lgamma(nf - kf + 1.0L);
  return static_cast<double>(r / kLn2);
}

BigInt subset_rank(const std::vector<std::uint64_t>& subset) {
  BigInt r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("subset_rank: subset must be strictly increasing");
    r += binom_exact(subset[i], static_cast<std::uint64_t>(i + 1));
  }
  return r;
}

std::vector<std::uint64_t> subset_unrank(const BigInt& rank, std::uint64_t n,
                                         std::uint64_t k) {
  if (k > n) throw std::invalid_argument("subset_unrank: k > n");
  if (rank < 0 || rank >= binom_exact(n, k))
    throw std::out_of_range("subset_unrank: rank out of range");
  std::vector<std::uint64_t> subset(k);
  BigInt r = rank;
  std::uint64_t hi = n;
  for (std::uint64_t i = k; i > 0; --i) {
    // largest a < hi with binom(a, i) <= r
    std::uint64_t lo = i - 1, best = i - 1;
    std::uint64_t upper = hi;
    while (lo < upper) {
      std::uint64_t mid = lo + (upper - lo) / 2;
      if (binom_exact(mid, i) <= r) {
        best = mid;
        lo = mid + 1;
      } else {
        upper = mid;
      }
    }
    subset[i - 1] = best;
    r -= binom_exact(best, i);
    hi = best;
  }
  return subset;
}

}  // namespace setcodes
