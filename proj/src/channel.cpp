#include "setcodes/channel.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

namespace setcodes {

ErrorType parse_error_type(const std::string& tag) {
  if (tag == "S") return ErrorType::Sub;
  if (tag == "I") return ErrorType::Ins;
  if (tag == "D") return ErrorType::Del;
  if (tag == "ID") return ErrorType::InsDel;
  if (tag == "IS") return ErrorType::InsSub;
  if (tag == "DS") return ErrorType::DelSub;
  if (tag == "L") return ErrorType::All;
  throw std::invalid_argument("parse_error_type: unknown tag '" + tag + "'");
}

std::string to_string(ErrorType type) {
  switch (type) {
    case ErrorType::Sub: return "S";
    case ErrorType::Ins: return "I";
    case ErrorType::Del: return "D";
    case ErrorType::InsDel: return "ID";
    case ErrorType::InsSub: return "IS";
    case ErrorType::DelSub: return "DS";
    case ErrorType::All: return "L";
  }
  throw std::logic_error("to_string(ErrorType)");
}

bool allows_sub(ErrorType t) {
  return t == ErrorType::Sub || t == ErrorType::InsSub || t == ErrorType::DelSub ||
         t == ErrorType::All;
}
bool allows_ins(ErrorType t) {
  return t == ErrorType::Ins || t == ErrorType::InsDel || t == ErrorType::InsSub ||
         t == ErrorType::All;
}
bool allows_del(ErrorType t) {
  return t == ErrorType::Del || t == ErrorType::InsDel || t == ErrorType::DelSub ||
         t == ErrorType::All;
}

std::uint64_t enum_cap() {
  if (const char* env = std::getenv("SETCODES_ENUM_CAP")) {
    const std::uint64_t v = std::strtoull(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 10000000;  // 10^7
}

BigInt sphere_size(int L, int eps, int q, ErrorType type) {
  if (eps < 0) throw std::invalid_argument("sphere_size: negative radius");
  switch (type) {
    case ErrorType::Sub:
      if (eps > L) throw std::invalid_argument("sphere_size: eps > L for type S");
      return binom_exact(L, eps) * boost::multiprecision::pow(BigInt(q - 1), eps);
    case ErrorType::Ins: {
      BigInt total = 0;
      for (int i = 0; i <= eps; ++i)
        total += binom_exact(L + eps, i) * boost::multiprecision::pow(BigInt(q - 1), i);
      return total;
    }
    default:
      throw std::invalid_argument("sphere_size: no closed form for type " + to_string(type));
  }
}

BigInt ball_size(int L, int eps, int q, ErrorType type) {
  if (type != ErrorType::Sub && type != ErrorType::Ins)
    throw std::invalid_argument("ball_size: no closed form for type " + to_string(type));
  BigInt total = 0;
  for (int i = 0; i <= eps; ++i) total += sphere_size(L, i, q, type);
  return total;
}

namespace {

// All outcomes of one edit of an allowed kind.
SeqSet single_edits(const Sequence& x, ErrorType type) {
  SeqSet out;
  const int n = x.size();
  if (allows_sub(type)) {
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < x.q; ++v)
        if (v != x.sym[i]) {
          Sequence y = x;
          y.sym[i] = static_cast<std::uint8_t>(v);
          out.push_back(std::move(y));
        }
  }
  if (allows_ins(type)) {
    for (int i = 0; i <= n; ++i)
      for (int v = 0; v < x.q; ++v) {
        Sequence y = x;
        y.sym.insert(y.sym.begin() + i, static_cast<std::uint8_t>(v));
        out.push_back(std::move(y));
      }
  }
  if (allows_del(type) && n > 0) {
    for (int i = 0; i < n; ++i) {
      Sequence y = x;
      y.sym.erase(y.sym.begin() + i);
      out.push_back(std::move(y));
    }
  }
  normalize(out);
  return out;
}

}  // namespace

SeqSet enumerate_ball(const Sequence& x, int eps, ErrorType type) {
  if (eps == kUnboundedEps)
    throw std::invalid_argument("enumerate_ball: unbounded radius is not enumerable");
  if (eps < 0) throw std::invalid_argument("enumerate_ball: negative radius");
  const std::uint64_t cap = enum_cap();
  std::set<Sequence> seen{x};
  SeqSet frontier{x};
  for (int round = 0; round < eps; ++round) {
    SeqSet next;
    for (const Sequence& y : frontier)
      for (Sequence& z : single_edits(y, type))
        if (seen.insert(z).second) {
          if (seen.size() > cap) throw EnumCapExceeded("enumerate_ball: cap exceeded");
          next.push_back(std::move(z));
        }
    frontier = std::move(next);
  }
  return SeqSet(seen.begin(), seen.end());
}

SeqSet enumerate_sphere(const Sequence& x, int eps, ErrorType type) {
  SeqSet ball = enumerate_ball(x, eps, type);
  SeqSet out;
  switch (type) {
    case ErrorType::Sub:
      for (const Sequence& y : ball) {
        int dist = 0;
        for (int i = 0; i < x.size(); ++i) dist += y.sym[i] != x.sym[i];
        if (dist == eps) out.push_back(y);
      }
      break;
    case ErrorType::Ins:
      for (const Sequence& y : ball)
        if (y.size() == x.size() + eps) out.push_back(y);
      break;
    case ErrorType::Del:
      for (const Sequence& y : ball)
        if (y.size() == x.size() - eps) out.push_back(y);
      break;
    default: {
      // mixed kinds: sphere = ball(eps) \ ball(eps-1)
      const SeqSet inner =
          eps == 0 ? SeqSet{} : enumerate_ball(x, eps - 1, type);
      std::set_difference(ball.begin(), ball.end(), inner.begin(), inner.end(),
                          std::back_inserter(out));
      break;
    }
  }
  return out;
}

BigInt max_ins_sphere_intersection(int L, int eps, int q) {
  if (q != 2)
    throw std::invalid_argument("max_ins_sphere_intersection: formula is for q=2");
  if (eps < 1) throw std::invalid_argument("max_ins_sphere_intersection: eps >= 1");
  BigInt total = 0;
  for (int i = 0; i < eps; ++i)
    if ((eps - i) % 2 == 1) total += 2 * binom_exact(L + eps, i);
  return total;
}

std::vector<SeqSet> set_error_ball(const SeqSet& S, int s, int t, int eps,
                                   ErrorType type) {
  if (eps == kUnboundedEps)
    throw std::invalid_argument("set_error_ball: unbounded radius is not enumerable");
  const int M = static_cast<int>(S.size());
  if (s + t > M) throw std::invalid_argument("set_error_ball: s + t > M");
  const std::uint64_t cap = enum_cap();

  // punctured balls B_eps(x) \ {x} per element
  std::vector<SeqSet> punctured(M);
  for (int i = 0; i < M; ++i) {
    punctured[i] = enumerate_ball(S[i], eps, type);
    punctured[i].erase(
        std::remove(punctured[i].begin(), punctured[i].end(), S[i]),
        punctured[i].end());
  }

  std::set<SeqSet> results;
  const std::uint32_t full = (M >= 32) ? 0xffffffffu : ((1u << M) - 1);
  for (std::uint32_t lost = 0; lost <= full; ++lost) {
    if (std::popcount(lost) > s) continue;
    const std::uint32_t rest = full & ~lost;
    for (std::uint32_t err = rest;; err = (err - 1) & rest) {
      if (std::popcount(err) <= t) {
        std::vector<int> errIdx;
        SeqSet good;
        for (int i = 0; i < M; ++i) {
          if (err >> i & 1)
            errIdx.push_back(i);
          else if (!(lost >> i & 1))
            good.push_back(S[i]);
        }
        // a partition is realizable only if every erroneous element has a
        // non-identity outcome available
        bool realizable = true;
        for (int i : errIdx)
          if (punctured[i].empty()) realizable = false;
        if (!realizable) {
          if (err == 0) break;
          continue;
        }
        // cartesian product over punctured balls of the erroneous elements
        std::vector<std::size_t> pick(errIdx.size(), 0);
        bool more = true;
        while (more) {
          SeqSet received = good;
          for (std::size_t j = 0; j < errIdx.size(); ++j)
            received.push_back(punctured[errIdx[j]][pick[j]]);
          normalize(received);
          results.insert(std::move(received));
          if (results.size() > cap) throw EnumCapExceeded("set_error_ball: cap exceeded");
          more = false;
          for (std::size_t j = 0; j < pick.size(); ++j) {
            if (++pick[j] < punctured[errIdx[j]].size()) {
              more = true;
              break;
            }
            pick[j] = 0;
          }
          if (errIdx.empty()) break;
        }
      }
      if (err == 0) break;
    }
  }
  return std::vector<SeqSet>(results.begin(), results.end());
}

SeqSet sample_channel(const SeqSet& S, int s, int t, int eps, ErrorType type,
                      std::mt19937_64& rng) {
  const int M = static_cast<int>(S.size());
  if (s + t > M) throw std::invalid_argument("sample_channel: s + t > M");
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int sPrime = uniform(0, s);
  const int tPrime = (eps == 0) ? 0 : uniform(0, std::min(t, M - sPrime));

  std::vector<int> idx(M);
  for (int i = 0; i < M; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  // first sPrime indices lost, next tPrime erroneous
  SeqSet received;
  for (int j = sPrime + tPrime; j < M; ++j) received.push_back(S[idx[j]]);
  for (int j = sPrime; j < sPrime + tPrime; ++j) {
    const Sequence& x = S[idx[j]];
    Sequence y;
    do {
      if (eps == kUnboundedEps) {
        // convention: a uniform word of the original length stands in for the
        // unbounded ball
        y = x;
        for (auto& v : y.sym) v = static_cast<std::uint8_t>(uniform(0, x.q - 1));
      } else {
        y = x;
        const int radius = uniform(1, eps);
        for (int r = 0; r < radius; ++r) {
          std::vector<char> kinds;
          if (allows_sub(type) && y.size() > 0) kinds.push_back('s');
          if (allows_ins(type)) kinds.push_back('i');
          if (allows_del(type) && y.size() > 0) kinds.push_back('d');
          const char kind = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
          if (kind == 's') {
            const int pos = uniform(0, y.size() - 1);
            int v = uniform(0, y.q - 2);
            if (v >= y.sym[pos]) ++v;
            y.sym[pos] = static_cast<std::uint8_t>(v);
          } else if (kind == 'i') {
            const int pos = uniform(0, y.size());
            y.sym.insert(y.sym.begin() + pos,
                         static_cast<std::uint8_t>(uniform(0, y.q - 1)));
          } else {
            const int pos = uniform(0, y.size() - 1);
            y.sym.erase(y.sym.begin() + pos);
          }
        }
      }
    } while (y == x);  // Def. 2 excludes the identity outcome
    received.push_back(std::move(y));
  }
  normalize(received);
  return received;
}

SeqSet sample_channel(const SeqSet& S, int s, int t, int eps, ErrorType type,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_channel(S, s, t, eps, type, rng);
}

BigRat avg_del_sphere_power(int L, int eps, int t) {
  if (L > 20) throw std::invalid_argument("avg_del_sphere_power: L > 20");
  if (eps < 0 || eps > L || t < 0)
    throw std::invalid_argument("avg_del_sphere_power: bad parameters");
  BigInt total = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << L); ++w) {
    const Sequence x = index_to_seq(w, L, 2);
    // distinct subsequences of each length via the last-occurrence DP
    std::vector<std::uint64_t> dp(L + 1, 0);
    dp[0] = 1;
    std::vector<std::vector<std::uint64_t>> atLast(2);  // dp snapshot at prior occurrence
    for (int i = 0; i < L; ++i) {
      const int c = x.sym[i];
      std::vector<std::uint64_t> prev = dp;
      for (int j = L; j >= 1; --j) {
        dp[j] += dp[j - 1];
        if (!atLast[c].empty()) dp[j] -= atLast[c][j - 1];
      }
      atLast[c] = std::move(prev);
    }
    total += boost::multiprecision::pow(BigInt(dp[L - eps]), t);
  }
  return BigRat(total, BigInt(1) << L);
}

}  // namespace setcodes
