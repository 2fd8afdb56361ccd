#include "setcodes/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace setcodes {

namespace {

BigInt pow_bigint(BigInt base, int exp) {
  BigInt out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

double log2_bigrat(const BigRat& v) {
  return log2_bigint(boost::multiprecision::numerator(v)) -
         log2_bigint(boost::multiprecision::denominator(v));
}

void check_channel_params(int M, int L, int s, int t) {
  if (M < 1 || L < 1 || s < 0 || t < 0)
    throw std::domain_error("bounds: need M, L >= 1 and s, t >= 0");
  if (s + t > M) throw std::domain_error("bounds: s + t exceeds M");
}

/// Finite-L upper bound on <S_eps^{del,t}> via |S_eps^del(x)| <= C(runs+eps-1, eps)
/// <= (runs-1+eps)^eps / eps! and the run-count distribution 2 C(L-1, i).
BigRat avg_del_power_upper(int L, int eps, int t) {
  BigInt num = 0;
  for (int i = 0; i <= L - 1; ++i)
    num += binom_exact(L - 1, i) * pow_bigint(i + eps, t * eps);
  return BigRat(num, pow_bigint(factorial(eps), t) * (BigInt(1) << (L - 1)));
}

}  // namespace

BigRat gv_arbitrary_exact(int M, int L, int s, int t) {
  check_channel_params(M, L, s, t);
  if (s + 2 * t > M) throw std::domain_error("gv_arbitrary: s + 2t exceeds M");
  const BigInt N = BigInt(1) << L;
  return BigRat(binom_exact(N, M),
                binom_exact(BigInt(M), BigInt(s + 2 * t)) * binom_exact(N, BigInt(s + 2 * t)));
}

BigRat gv_sub_exact(int M, int L, int s, int t, int eps) {
  check_channel_params(M, L, s, t);
  if (eps < 0) throw std::domain_error("gv_sub: negative eps");
  const BigInt N = BigInt(1) << L;
  const BigInt ball = ball_size(L, eps, 2, ErrorType::Sub);
  const BigInt div = multinom_exact(M, s, t) * binom_exact(BigInt(M + t - 1), BigInt(t)) *
                     binom_exact(N, BigInt(s)) * pow_bigint(ball, 2 * t);
  return BigRat(binom_exact(N, M), div);
}

BigRat gv_del_exact(int M, int L, int s, int t, int eps) {
  check_channel_params(M, L, s, t);
  if (eps < 0) throw std::domain_error("gv_del: negative eps");
  const BigInt N = BigInt(1) << L;
  const BigInt ball = ball_size(L, eps, 2, ErrorType::Sub);
  const BigRat avg = avg_del_sphere_power(L, eps, t);
  const BigRat div = BigRat(multinom_exact(M, s, t) * binom_exact(N, BigInt(s)) *
                            pow_bigint(ball, t)) *
                     avg;
  return BigRat(binom_exact(N, M)) / div;
}

BigRat sp_arbitrary_exact(int M, int L, int s, int t) {
  check_channel_params(M, L, s, t);
  const BigInt N = BigInt(1) << L;
  if (t > N - M) throw std::domain_error("sp_arbitrary: t exceeds 2^L - M");
  return BigRat(binom_exact(N, BigInt(M - s)),
                binom_exact(BigInt(M), BigInt(t + s)) * binom_exact(N - M, BigInt(t)));
}

std::optional<BigRat> sp_insertion_exact(int M, int L, int s, int t, int eps) {
  check_channel_params(M, L, s, t);
  if (eps < 0) throw std::domain_error("sp_insertion: negative eps");
  const BigInt sphere = sphere_size(L, eps, 2, ErrorType::Ins);
  const BigInt overlap = eps == 0 ? BigInt(0) : max_ins_sphere_intersection(L, eps);
  BigInt div = multinom_exact(M, s, t);
  for (int i = 0; i < t; ++i) {
    const BigInt factor = sphere - (s + i) * overlap;
    if (factor <= 0) return std::nullopt;  // counting argument void
    div *= factor;
  }
  const BigInt num = binom_exact(BigInt(1) << L, BigInt(M - s - t)) *
                     binom_exact(BigInt(1) << (L + eps), BigInt(t));
  return BigRat(num, div);
}

double gv_arbitrary(int M, int L, int s, int t) {
  return log2_bigrat(gv_arbitrary_exact(M, L, s, t));
}

double gv_sub(int M, int L, int s, int t, int eps) {
  return log2_bigrat(gv_sub_exact(M, L, s, t, eps));
}

GvDelValue gv_del(int M, int L, int s, int t, int eps) {
  if (L <= 20) return {log2_bigrat(gv_del_exact(M, L, s, t, eps)), false};
  check_channel_params(M, L, s, t);
  if (eps < 0) throw std::domain_error("gv_del: negative eps");
  const BigInt N = BigInt(1) << L;
  const BigInt ball = ball_size(L, eps, 2, ErrorType::Sub);
  const double divisor = log2_bigint(multinom_exact(M, s, t)) +
                         log2_binom(N, s) + t * log2_bigint(ball) +
                         log2_bigrat(avg_del_power_upper(L, eps, t));
  return {log2_binom(N, M) - divisor, true};
}

double sp_arbitrary(int M, int L, int s, int t) {
  return log2_bigrat(sp_arbitrary_exact(M, L, s, t));
}

double sp_arbitrary_redundancy_lower(int M, int L, int s, int t) {
  check_channel_params(M, L, s, t);
  const double pool = std::pow(2.0, L) - M - t;
  if (pool <= 0 || M - s - t <= 0)
    throw std::domain_error("sp_arbitrary_redundancy_lower: infeasible");
  return (s + t) * std::log2(pool) +
         (t > 0 ? t * std::log2(static_cast<double>(M - s - t)) : 0.0) -
         log2_bigint(factorial(t) * factorial(s + t));
}

std::optional<double> sp_insertion(int M, int L, int s, int t, int eps) {
  const auto exact = sp_insertion_exact(M, L, s, t, eps);
  if (!exact) return std::nullopt;
  return log2_bigrat(*exact);
}

double indexing_redundancy(int M, int L) {
  if (M < 1) throw std::domain_error("indexing_redundancy: M >= 1");
  int z = 0;
  while ((1LL << z) < M) ++z;
  if (z > L) throw std::domain_error("indexing_redundancy: M exceeds 2^L");
  return log2_binom(BigInt(1) << L, M) - static_cast<double>(M) * (L - z);
}

double indexing_redundancy_asymptotic(int M) {
  int z = 0;
  while ((1LL << z) < M) ++z;
  return M * (z - std::log2(static_cast<double>(M)) + std::log2(std::exp(1.0)));
}

// ------------------------------------------------------------- symbolic terms

std::string render_term(const Term& term) {
  std::string text;
  switch (term.factor) {
    case Factor::L: text = "L"; break;
    case Factor::LogM: text = "log M"; break;
    case Factor::LogL: text = "log L"; break;
    case Factor::LogHalfL: text = "log(L/2)"; break;
    case Factor::LMinusLogM: text = "(L - log M)"; break;
    case Factor::LMinusCeilLogM: text = "(L - ceil(log M))"; break;
    case Factor::LogML: text = "log(ML)"; break;
    case Factor::LogE: text = "log e"; break;
  }
  if (term.coeff.empty()) return text;
  if (text.rfind("log", 0) == 0) return term.coeff + " " + text;
  return term.coeff + text;
}

std::string render_terms(const TermList& terms) {
  std::string out;
  for (const Term& term : terms) {
    if (!out.empty()) out += " + ";
    out += render_term(term);
  }
  return out;
}

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = {
      {"(s,t,*)_L",
       {{"(s+2t)", Factor::L}, {"(s+2t)", Factor::LogM}},
       {{{"M", Factor::LogE}, {"(s+2t)", Factor::LMinusCeilLogM}},
        {{"(s+2t)", Factor::L}},
        {{"((1-c)/2)M^c", Factor::LogM}, {"(s+2t)M^(1-c)", Factor::LMinusLogM}}},
       {{"(s+t)", Factor::L}, {"t", Factor::LogM}}},
      {"(sigma M,tau M,*)_L",
       {{"(sigma+2tau)", Factor::LMinusLogM}},
       {{{"(sigma+2tau)M", Factor::LMinusLogM}}},
       {{"(sigma+tau)M", Factor::LMinusLogM}}},
      {"(s,t,eps)_S",
       {{"s", Factor::L}, {"(s+2t)", Factor::LogM}, {"2t eps", Factor::LogL}},
       {{}},
       {{"s", Factor::L}, {"t", Factor::LogM}, {"t eps", Factor::LogL}}},
      {"(s,t,eps)_D",
       {{"s", Factor::L}, {"(s+t)", Factor::LogM}, {"2t eps", Factor::LogHalfL}},
       {{{"(s+t)", Factor::L}}},
       {{"s", Factor::L}, {"t eps", Factor::LogL}}},
      {"(0,1,1)_S",
       {{"2", Factor::LogL}},
       {{{"2", Factor::L}}},
       {{"", Factor::LogML}}},
      {"(0,1,1)_D",
       {{"2", Factor::LogL}},
       {{{"", Factor::LogL}}},
       {{"", Factor::LogL}}},
      {"(0,M,eps)_S",
       {{"2M eps", Factor::LogL}},
       {{{"M eps", Factor::LogL}}},
       {{"M eps", Factor::LogL}}},
      {"(0,M,1)_D",
       {{"2M", Factor::LogL}},
       {{{"M", Factor::LogL}}},
       {{"M", Factor::LogL}}},
  };
  return rows;
}

const Table2Row& asymptotic_redundancy(const std::string& channel) {
  for (const Table2Row& row : table2_rows())
    if (row.channel == channel) return row;
  throw std::invalid_argument("asymptotic_redundancy: unsupported regime '" +
                              channel + "'");
}

std::string table2_text() {
  std::string out;
  for (const Table2Row& row : table2_rows()) {
    for (std::size_t i = 0; i < row.constructions.size(); ++i) {
      std::string line = row.channel + " | " +
                         (i == 0 ? render_terms(row.gv) : std::string{}) + " | " +
                         render_terms(row.constructions[i]) + " | " +
                         (i == 0 ? render_terms(row.sp) : std::string{});
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
  }
  return out;
}

// ------------------------------------------------------------------- reports

namespace {

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

BoundReport bound_report(int M, int L, int s, int t, int eps, ErrorType type,
                         bool asymptotic) {
  BoundReport report{M, L, s, t, eps, type, {}};
  auto push_value = [&](const std::string& theorem, const std::string& kind,
                        std::optional<double> bits, bool bounded = false,
                        const std::string& note = "") {
    report.entries.push_back({theorem, kind, bits, "", bounded, note});
  };

  const bool bullet = eps == kUnboundedEps;
  try {
    if (bullet || type == ErrorType::All) {
      push_value("thm3", "gv-lower", gv_arbitrary(M, L, s, t));
      push_value("thm6", "sp-upper", sp_arbitrary(M, L, s, t));
      push_value("thm6-redundancy", "sp-upper",
                 sp_arbitrary_redundancy_lower(M, L, s, t));
    } else if (type == ErrorType::Sub) {
      push_value("thm4", "gv-lower", gv_sub(M, L, s, t, eps));
      push_value("thm6", "sp-upper", sp_arbitrary(M, L, s, t),
                 false, "via (s,t,*)_L relaxation");
    } else if (type == ErrorType::Del) {
      const GvDelValue gv = gv_del(M, L, s, t, eps);
      push_value("thm5", "gv-lower", gv.bits, gv.bounded);
      push_value("thm6", "sp-upper", sp_arbitrary(M, L, s, t),
                 false, "via (s,t,*)_L relaxation");
    } else if (type == ErrorType::Ins) {
      push_value("thm3", "gv-lower", gv_arbitrary(M, L, s, t), false,
                 "via (s,t,*)_L");
      const auto sp = sp_insertion(M, L, s, t, eps);
      if (sp)
        push_value("thm7", "sp-upper", *sp);
      else
        push_value("thm7", "sp-upper", std::nullopt, false, "inapplicable");
    } else {
      // mixed types: only the arbitrary-error relaxations apply
      push_value("thm3", "gv-lower", gv_arbitrary(M, L, s, t), false,
                 "via (s,t,*)_L");
      push_value("thm6", "sp-upper", sp_arbitrary(M, L, s, t), false,
                 "via (s,t,*)_L relaxation");
    }
  } catch (const std::domain_error& e) {
    push_value("-", "sp-upper", std::nullopt, false,
               std::string("inapplicable: ") + e.what());
  }

  if (asymptotic) {
    const std::string channel = bullet || type == ErrorType::All
                                    ? "(s,t,*)_L"
                                    : type == ErrorType::Sub ? "(s,t,eps)_S"
                                    : type == ErrorType::Del ? "(s,t,eps)_D"
                                                             : "";
    if (!channel.empty()) {
      const Table2Row& row = asymptotic_redundancy(channel);
      report.entries.push_back({"table2:" + channel, "asymptotic-leading-term",
                                std::nullopt, render_terms(row.gv), false,
                                "gv"});
      for (const TermList& cell : row.constructions)
        if (!cell.empty())
          report.entries.push_back({"table2:" + channel,
                                    "asymptotic-leading-term", std::nullopt,
                                    render_terms(cell), false, "construction"});
      report.entries.push_back({"table2:" + channel, "asymptotic-leading-term",
                                std::nullopt, render_terms(row.sp), false,
                                "sp"});
    }
  }
  return report;
}

std::string bound_report_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "setcodes.bounds.v1";
  j["params"] = {{"M", report.M},
                 {"L", report.L},
                 {"s", report.s},
                 {"t", report.t},
                 {"eps", report.eps == kUnboundedEps ? nlohmann::ordered_json()
                                                     : nlohmann::ordered_json(report.eps)},
                 {"type", to_string(report.type)}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const BoundEntry& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["theorem"] = e.theorem;
    entry["kind"] = e.kind;
    if (e.value_bits)
      entry["value_bits"] = round12(*e.value_bits);
    else
      entry["value_bits"] = nullptr;
    if (!e.term.empty()) entry["term"] = e.term;
    if (e.bounded) entry["bounded"] = true;
    if (!e.note.empty()) entry["note"] = e.note;
    j["entries"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace setcodes
