#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setcodes/channel.hpp"
#include "setcodes/constructions.hpp"
#include "setcodes/sequence.hpp"

namespace setcodes {

struct Witness {
  DataSet s1, s2;
  SeqSet common;  // a received set in both error balls
};

struct VerifyResult {
  bool correcting;
  std::optional<Witness> witness;  // set when correcting == false
};

/// Can received set sp arise from S over the (s,t,eps)_type channel?
/// eps == kUnboundedEps uses the Def. 2 counting argument directly; finite eps
/// enumerates per-sequence balls.
bool in_set_error_ball(const SeqSet& received, const SeqSet& S, int s, int t,
                       int eps, ErrorType type);

/// Def. 3: pairwise disjointness of all codeword error balls, with witness.
VerifyResult is_correcting_code(const std::vector<DataSet>& code, int s, int t,
                                int eps, ErrorType type);

/// Do the balls of S1 and S2 intersect? (the pair test behind Def. 3)
std::optional<SeqSet> ball_intersection_witness(const DataSet& s1,
                                                const DataSet& s2, int s, int t,
                                                int eps, ErrorType type);

/// Minimum-degree greedy clique per the GV construction remark; ties broken by
/// lexicographic order of the sorted sequence lists.
std::vector<DataSet> greedy_code(int M, int L, int s, int t, int eps,
                                 ErrorType type);

struct MonteCarloFailure {
  int trial;
  std::vector<std::uint8_t> info;
  DataSet codeword;
  SeqSet received;
  std::optional<std::vector<std::uint8_t>> decoded;
};

struct MonteCarloResult {
  int trials = 0;
  int failures = 0;
  std::optional<double> success_rate;  // nullopt when trials == 0
  std::vector<MonteCarloFailure> transcripts;  // capped at kMaxTranscripts
  static constexpr int kMaxTranscripts = 16;
};

/// Deterministic per seed; trial i uses an independent substream.
MonteCarloResult monte_carlo(const Construction& code, int s, int t, int eps,
                             ErrorType type, int trials, std::uint64_t seed);
std::string monte_carlo_json(const MonteCarloResult& result);

/// The Sec. II-D two-codeword code over Sigma_4, L = 5.
std::vector<DataSet> counterexample_code();

}  // namespace setcodes
