#include "setcodes/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace setcodes {

namespace {

bool next_combination(std::vector<std::uint64_t>& idx, std::uint64_t n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Counting test for the unbounded-error ball (type L): with a = |S \ S'| and
/// b = |S' \ S|, membership needs losses l and errors e with l <= s, e <= t,
/// l + e >= a, e >= b and b <= a (each new word consumes one erroneous
/// sequence; merged outcomes need a surviving target).
bool in_unbounded_ball(const SeqSet& received, const SeqSet& S, int s, int t) {
  SeqSet gone, fresh;
  std::set_difference(S.begin(), S.end(), received.begin(), received.end(),
                      std::back_inserter(gone));
  std::set_difference(received.begin(), received.end(), S.begin(), S.end(),
                      std::back_inserter(fresh));
  const int a = static_cast<int>(gone.size());
  const int b = static_cast<int>(fresh.size());
  if (received.empty()) return a <= s;
  return a <= s + t && b <= t && b <= a;
}

}  // namespace

bool in_set_error_ball(const SeqSet& received, const SeqSet& S, int s, int t,
                       int eps, ErrorType type) {
  if (eps == kUnboundedEps) {
    if (type != ErrorType::All)
      throw std::invalid_argument(
          "in_set_error_ball: unbounded eps is only defined with type L");
    return in_unbounded_ball(received, S, s, t);
  }
  const auto ball = set_error_ball(S, s, t, eps, type);
  return std::binary_search(ball.begin(), ball.end(), received);
}

std::optional<SeqSet> ball_intersection_witness(const DataSet& s1,
                                                const DataSet& s2, int s, int t,
                                                int eps, ErrorType type) {
  if (eps == kUnboundedEps) {
    if (type != ErrorType::All)
      throw std::invalid_argument(
          "ball_intersection_witness: unbounded eps is only defined with type L");
    // any witness can be pruned down to a subset of S1 union S2
    SeqSet pool = s1.seqs;
    pool.insert(pool.end(), s2.seqs.begin(), s2.seqs.end());
    normalize(pool);
    const int u = static_cast<int>(pool.size());
    if (u > 20)
      throw EnumCapExceeded("ball_intersection_witness: union too large");
    for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
      SeqSet sp;
      for (int i = 0; i < u; ++i)
        if (mask >> i & 1) sp.push_back(pool[i]);
      if (in_unbounded_ball(sp, s1.seqs, s, t) &&
          in_unbounded_ball(sp, s2.seqs, s, t))
        return sp;
    }
    return std::nullopt;
  }
  const auto b1 = set_error_ball(s1.seqs, s, t, eps, type);
  const auto b2 = set_error_ball(s2.seqs, s, t, eps, type);
  std::vector<SeqSet> common;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                        std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.front();
}

VerifyResult is_correcting_code(const std::vector<DataSet>& code, int s, int t,
                                int eps, ErrorType type) {
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const auto witness =
          ball_intersection_witness(code[i], code[j], s, t, eps, type);
      if (witness) return {false, Witness{code[i], code[j], *witness}};
    }
  return {true, std::nullopt};
}

std::vector<DataSet> greedy_code(int M, int L, int s, int t, int eps,
                                 ErrorType type) {
  const std::uint64_t universe = std::uint64_t{1} << L;
  if (binom_exact(universe, static_cast<std::uint64_t>(M)) > 1000000)
    throw EnumCapExceeded("greedy_code: state space exceeds 10^6");

  std::vector<DataSet> verts;  // ascending, so index order breaks ties
  std::vector<std::uint64_t> idx(M);
  for (int i = 0; i < M; ++i) idx[i] = i;
  do {
    SeqSet S;
    for (std::uint64_t i : idx) S.push_back(index_to_seq(i, L, 2));
    verts.push_back(make_dataset(std::move(S)));
  } while (next_combination(idx, universe));
  const int n = static_cast<int>(verts.size());

  std::vector<std::vector<int>> adj(n);
  if (eps == kUnboundedEps) {
    if (type != ErrorType::All)
      throw std::invalid_argument("greedy_code: unbounded eps needs type L");
    // balls intersect iff |S1 \ S2| <= s + 2t (equivalent to the counting rule)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int common = 0;
        for (auto a = verts[i].seqs.begin(), b = verts[j].seqs.begin();
             a != verts[i].seqs.end() && b != verts[j].seqs.end();) {
          if (*a < *b)
            ++a;
          else if (*b < *a)
            ++b;
          else
            ++common, ++a, ++b;
        }
        if (M - common <= s + 2 * t) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
  } else {
    std::map<SeqSet, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i)
      for (const SeqSet& sp : set_error_ball(verts[i].seqs, s, t, eps, type))
        buckets[sp].push_back(i);
    for (const auto& [sp, members] : buckets)
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          adj[members[x]].push_back(members[y]);
          adj[members[y]].push_back(members[x]);
        }
    for (auto& list : adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::vector<int> degree(n);
  std::vector<bool> alive(n, true);
  for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(adj[i].size());
  auto kill = [&](int v) {
    alive[v] = false;
    for (int w : adj[v])
      if (alive[w]) --degree[w];
  };

  std::vector<DataSet> code;
  int remaining = n;
  while (remaining > 0) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (alive[i] && (best < 0 || degree[i] < degree[best])) best = i;
    code.push_back(verts[best]);
    const std::vector<int> neighbors = adj[best];
    kill(best);
    --remaining;
    for (int w : neighbors)
      if (alive[w]) {
        kill(w);
        --remaining;
      }
  }
  return code;
}

MonteCarloResult monte_carlo(const Construction& code, int s, int t, int eps,
                             ErrorType type, int trials, std::uint64_t seed) {
  MonteCarloResult result;
  result.trials = trials;
  if (trials <= 0) return result;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    const auto info = code.sample_info(rng);
    const DataSet S = code.encode(info);
    const SeqSet received = sample_channel(S.seqs, s, t, eps, type, rng);
    const auto decoded = code.decode(received);
    if (decoded != info) {
      ++result.failures;
      if (static_cast<int>(result.transcripts.size()) <
          MonteCarloResult::kMaxTranscripts)
        result.transcripts.push_back({trial, info, S, received, decoded});
    }
  }
  result.success_rate =
      static_cast<double>(trials - result.failures) / trials;
  return result;
}

namespace {

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string bits_string(const std::vector<std::uint8_t>& bits) {
  std::string out;
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  return out;
}

nlohmann::ordered_json seqs_json(const SeqSet& seqs) {
  auto arr = nlohmann::ordered_json::array();
  for (const Sequence& x : seqs) arr.push_back(seq_to_string(x));
  return arr;
}

}  // namespace

std::string monte_carlo_json(const MonteCarloResult& result) {
  nlohmann::ordered_json j;
  j["schema"] = "setcodes.simulate.v1";
  j["trials"] = result.trials;
  j["failures"] = result.failures;
  if (result.success_rate)
    j["success_rate"] = round12(*result.success_rate);
  else
    j["success_rate"] = nullptr;
  j["transcripts"] = nlohmann::ordered_json::array();
  for (const MonteCarloFailure& f : result.transcripts) {
    nlohmann::ordered_json entry;
    entry["trial"] = f.trial;
    entry["info"] = bits_string(f.info);
    entry["codeword"] = seqs_json(f.codeword.seqs);
    entry["received"] = seqs_json(f.received);
    entry["decoded"] = f.decoded ? nlohmann::ordered_json(bits_string(*f.decoded))
                                 : nlohmann::ordered_json(nullptr);
    j["transcripts"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

std::vector<DataSet> counterexample_code() {
  auto make = [](std::initializer_list<const char*> words) {
    SeqSet seqs;
    for (const char* w : words) seqs.push_back(parse_sequence(w, 4));
    return make_dataset(std::move(seqs));
  };
  return {make({"AACCA", "AACAA", "GGTTG"}),
          make({"ACCAA", "GGTGG", "GTTGG"})};
}

}  // namespace setcodes
