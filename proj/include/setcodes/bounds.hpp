#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setcodes/channel.hpp"
#include "setcodes/combinatorics.hpp"

namespace setcodes {

// ------------------------------------------------------------------ exact
// Cardinality bounds as exact rationals (desk scale); log2 wrappers below.
// All throw std::domain_error on infeasible parameters.

/// Thm. 3: binom(2^L, M) / (binom(M, s+2t) binom(2^L, s+2t)).
BigRat gv_arbitrary_exact(int M, int L, int s, int t);

/// Thm. 4: binom(2^L, M) / (binom(M; s,t) binom(M+t-1, t) binom(2^L, s) B_eps^sub(L)^(2t)).
BigRat gv_sub_exact(int M, int L, int s, int t, int eps);

/// Thm. 5 with the exact average deletion-sphere power (L <= 20).
BigRat gv_del_exact(int M, int L, int s, int t, int eps);

/// Thm. 6: binom(2^L, M-s) / (binom(M, t+s) binom(2^L - M, t)).
BigRat sp_arbitrary_exact(int M, int L, int s, int t);

/// Thm. 7; nullopt when some product factor is non-positive (bound void).
std::optional<BigRat> sp_insertion_exact(int M, int L, int s, int t, int eps);

// ------------------------------------------------------------------ log2
double gv_arbitrary(int M, int L, int s, int t);
double gv_sub(int M, int L, int s, int t, int eps);

struct GvDelValue {
  double bits;
  bool bounded;  // true: analytic run-count bound replaced exact enumeration
};
/// Exact path for L <= 20; beyond, the average power is replaced by the
/// finite-L upper bound (1/eps!^t) sum_i binom(L-1, i) (i+eps)^(t eps) / 2^(L-1),
/// which only lowers the (still valid) existence bound.
GvDelValue gv_del(int M, int L, int s, int t, int eps);

double sp_arbitrary(int M, int L, int s, int t);
/// Thm. 6 closed form: (s+t) log(2^L - M - t) + t log(M - s - t) - log(t!(s+t)!).
double sp_arbitrary_redundancy_lower(int M, int L, int s, int t);
std::optional<double> sp_insertion(int M, int L, int s, int t, int eps);

/// Thm. 11 exact part: log2 binom(2^L, M) - M (L - ceil(log2 M)).
double indexing_redundancy(int M, int L);
/// Thm. 11 leading term M (ceil(log2 M) - log2 M + log2 e).
double indexing_redundancy_asymptotic(int M);

// ------------------------------------------------------- symbolic leading terms
enum class Factor {
  L,             // L
  LogM,          // log M
  LogL,          // log L
  LogHalfL,      // log(L/2)
  LMinusLogM,    // (L - log M)
  LMinusCeilLogM,// (L - ceil(log M))
  LogML,         // log(ML)
  LogE,          // log e
};

struct Term {
  std::string coeff;  // canonical coefficient token, may be empty
  Factor factor;
  auto operator<=>(const Term&) const = default;
};

using TermList = std::vector<Term>;

std::string render_term(const Term& term);
std::string render_terms(const TermList& terms);  // " + " joined, "" when empty

struct Table2Row {
  std::string channel;                  // e.g. "(s,t,*)_L"
  TermList gv;
  std::vector<TermList> constructions;  // one entry per construction line
  TermList sp;
};

/// All Table II rows in paper order.
const std::vector<Table2Row>& table2_rows();

/// Row lookup by channel tag; throws std::invalid_argument on unsupported rows.
const Table2Row& asymptotic_redundancy(const std::string& channel);

/// Canonical rendering compared byte-identically against the golden file:
/// one line per (row, construction line), fields joined by " | ".
std::string table2_text();

// ------------------------------------------------------------------ reports
struct BoundEntry {
  std::string theorem;  // e.g. "thm3"
  std::string kind;     // gv-lower | sp-upper | construction-redundancy | asymptotic-leading-term
  std::optional<double> value_bits;
  std::string term;     // rendered leading-term expression (asymptotic entries)
  bool bounded = false; // gv_del analytic-average path
  std::string note;     // e.g. "inapplicable", "via (s,t,*)_L"
};

struct BoundReport {
  int M, L, s, t, eps;  // eps == kUnboundedEps for the bullet budget
  ErrorType type;
  std::vector<BoundEntry> entries;
};

BoundReport bound_report(int M, int L, int s, int t, int eps, ErrorType type,
                         bool asymptotic);
std::string bound_report_json(const BoundReport& report);

}  // namespace setcodes
