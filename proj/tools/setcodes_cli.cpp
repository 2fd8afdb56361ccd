#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "setcodes/bounds.hpp"
#include "setcodes/channel.hpp"
#include "setcodes/constructions.hpp"
#include "setcodes/sequence.hpp"
#include "setcodes/setfile.hpp"
#include "setcodes/verify.hpp"

namespace {

using namespace setcodes;

struct ChannelSpec {
  int s = 0, t = 0, eps = kUnboundedEps;
  ErrorType type = ErrorType::All;
};

/// "s,t,eps,type" with eps "*" (or -1) for the unbounded budget.
ChannelSpec parse_channel(const std::string& text) {
  ChannelSpec ch;
  std::string eps, type;
  std::istringstream in(text);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 4)
    throw CLI::ValidationError("--channel", "expected s,t,eps,type");
  ch.s = std::stoi(fields[0]);
  ch.t = std::stoi(fields[1]);
  ch.eps = (fields[2] == "*") ? kUnboundedEps : std::stoi(fields[2]);
  ch.type = parse_error_type(fields[3]);
  if (ch.s < 0 || ch.t < 0 || (ch.eps < 0 && ch.eps != kUnboundedEps))
    throw CLI::ValidationError("--channel", "negative budget");
  return ch;
}

struct ConstructionFlags {
  std::string name;
  int M = 0, L = 0, delta = 0, s = 0, t = 0, a = 0, eps = 1, innerEps = 1;
  double c = 0.0;
  std::string mode = "L";
  bool bestCoset = false;
};

int ceil_log2_int(int v) {
  int b = 0;
  while ((1 << b) < v) ++b;
  return b;
}

std::unique_ptr<Construction> make_construction(const ConstructionFlags& f) {
  if (f.name == "c1")
    return std::make_unique<C1Code>(f.M, f.L, f.delta, parse_decode_mode(f.mode));
  if (f.name == "c2") {
    auto code = std::make_unique<C2Code>(f.L, f.M, f.s, f.t);
    if (f.bestCoset) code->set_coset(code->best_coset());
    return code;
  }
  if (f.name == "c3")
    return std::make_unique<C3Code>(f.M, f.L, f.c, f.delta, parse_decode_mode(f.mode));
  if (f.name == "c4") {
    BchCode inner(ceil_log2_int(f.L + 1), f.L, f.innerEps);
    const int outerL = inner.k();
    auto outer = std::make_shared<C1Code>(f.M, outerL, f.delta,
                                          parse_decode_mode(f.mode));
    return std::make_unique<C4Code>(std::move(inner), std::move(outer), outerL);
  }
  if (f.name == "c5") return std::make_unique<C5Code>(f.M, f.L, f.a);
  if (f.name == "c6") return std::make_unique<C6Code>(f.M, f.L, f.a);
  if (f.name == "c7") return std::make_unique<C7Code>(f.M, f.L, f.eps);
  throw CLI::ValidationError("--construction", "unknown construction " + f.name);
}

void add_construction_flags(CLI::App* cmd, ConstructionFlags& f) {
  cmd->add_option("--construction", f.name, "c1..c7")->required();
  cmd->add_option("--M", f.M, "sequences per codeword")->required();
  cmd->add_option("--L", f.L, "sequence length")->required();
  cmd->add_option("--delta", f.delta, "MDS redundancy (c1/c3/c4)");
  cmd->add_option("--s", f.s, "loss budget (c2)");
  cmd->add_option("--t", f.t, "corruption budget (c2)");
  cmd->add_option("--a", f.a, "VT / checksum residue (c5/c6)");
  cmd->add_option("--eps", f.eps, "per-sequence substitutions (c7)");
  cmd->add_option("--inner-eps", f.innerEps, "inner BCH radius (c4)");
  cmd->add_option("--c", f.c, "group exponent (c3)");
  cmd->add_option("--mode", f.mode, "decode mode L/I/D (c1/c3/c4)");
  cmd->add_flag("--best-coset", f.bestCoset, "exhaustive coset search (c2)");
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

std::string slurp(const std::string& path) {
  if (path != "-") return read_file(path);
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

/// Received sets may hold off-length sequences, which the strict set-file
/// parser rejects; take q from the header and accept any line lengths.
SeqSet parse_received(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty received file");
  int q = 2, L = 0, M = 0;
  if (std::sscanf(line.c_str(), "#q=%d L=%d M=%d", &q, &L, &M) != 3)
    throw std::invalid_argument("malformed set-file header");
  SeqSet received;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    received.push_back(parse_sequence(line, q));
  }
  normalize(received);
  return received;
}

nlohmann::ordered_json seqs_json(const SeqSet& seqs) {
  auto arr = nlohmann::ordered_json::array();
  for (const Sequence& x : seqs) arr.push_back(seq_to_string(x));
  return arr;
}

int run(int argc, char** argv) {
  CLI::App app{"error-correcting codes over unordered sets of sequences"};
  app.require_subcommand(1);
  int rc = 0;

  ConstructionFlags encFlags;
  std::string encIn, encOut = "-";
  std::uint64_t encSeed = 0;
  auto* enc = app.add_subcommand("encode", "info bits -> set-file");
  add_construction_flags(enc, encFlags);
  enc->add_option("--in", encIn, "info file (raw bytes); omit to sample");
  enc->add_option("--out", encOut, "set-file path, - for stdout");
  enc->add_option("--seed", encSeed, "sampling seed when --in is omitted");
  enc->callback([&] {
    const auto code = make_construction(encFlags);
    std::vector<std::uint8_t> info;
    if (encIn.empty()) {
      std::mt19937_64 rng(encSeed);
      info = code->sample_info(rng);
    } else {
      info = bytes_to_bits(read_file(encIn), code->info_bits());
    }
    emit(encOut, write_set_file(code->encode(info)));
  });

  ConstructionFlags decFlags;
  std::string decIn, decOut = "-";
  auto* dec = app.add_subcommand("decode", "set-file -> info bits");
  add_construction_flags(dec, decFlags);
  dec->add_option("--in", decIn, "received set-file, - for stdin")->required();
  dec->add_option("--out", decOut, "info file path, - for stdout");
  dec->callback([&] {
    const auto code = make_construction(decFlags);
    const auto info = code->decode(parse_received(slurp(decIn)));
    if (!info) {
      std::cerr << "decode failure: received set outside correction radius\n";
      rc = 3;
      return;
    }
    emit(decOut, bits_to_bytes(*info));
  });

  ConstructionFlags simFlags;
  std::string simChannel;
  int simTrials = 100;
  std::uint64_t simSeed = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo over the channel");
  add_construction_flags(sim, simFlags);
  sim->add_option("--channel", simChannel, "s,t,eps,type (eps * = unbounded)")
      ->required();
  sim->add_option("--trials", simTrials, "trial count");
  sim->add_option("--seed", simSeed, "RNG seed");
  sim->callback([&] {
    const auto code = make_construction(simFlags);
    const ChannelSpec ch = parse_channel(simChannel);
    std::cout << monte_carlo_json(
        monte_carlo(*code, ch.s, ch.t, ch.eps, ch.type, simTrials, simSeed));
  });

  int bM = 0, bL = 0, bS = 0, bT = 0;
  std::string bEps = "*", bType = "L";
  bool bAsymptotic = false;
  auto* bnd = app.add_subcommand("bounds", "GV / sphere-packing bound report");
  bnd->add_option("--M", bM)->required();
  bnd->add_option("--L", bL)->required();
  bnd->add_option("--s", bS);
  bnd->add_option("--t", bT);
  bnd->add_option("--eps", bEps, "per-sequence budget, * for unbounded");
  bnd->add_option("--type", bType, "error type S/I/D/ID/IS/DS/L");
  bnd->add_flag("--asymptotic", bAsymptotic, "append leading-term entries");
  bnd->callback([&] {
    const int eps = (bEps == "*") ? kUnboundedEps : std::stoi(bEps);
    std::cout << bound_report_json(bound_report(
        bM, bL, bS, bT, eps, parse_error_type(bType), bAsymptotic));
  });

  app.add_subcommand("table2", "asymptotic redundancy comparison table")
      ->callback([] { std::cout << table2_text(); });

  std::string verCode, verChannel;
  auto* ver = app.add_subcommand("verify", "certify a code per Def. 3");
  ver->add_option("--code", verCode, "multi-set-file, - for stdin")->required();
  ver->add_option("--channel", verChannel, "s,t,eps,type")->required();
  ver->callback([&] {
    const auto code = parse_multi_set_file(slurp(verCode));
    const ChannelSpec ch = parse_channel(verChannel);
    const VerifyResult result =
        is_correcting_code(code, ch.s, ch.t, ch.eps, ch.type);
    nlohmann::ordered_json j;
    j["schema"] = "setcodes.verify.v1";
    j["channel"] = {{"s", ch.s},
                    {"t", ch.t},
                    {"eps", ch.eps == kUnboundedEps
                                ? nlohmann::ordered_json(nullptr)
                                : nlohmann::ordered_json(ch.eps)},
                    {"type", to_string(ch.type)}};
    j["codewords"] = static_cast<int>(code.size());
    j["correcting"] = result.correcting;
    if (result.witness) {
      j["witness"] = {{"s1", seqs_json(result.witness->s1.seqs)},
                      {"s2", seqs_json(result.witness->s2.seqs)},
                      {"common", seqs_json(result.witness->common)}};
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    if (!result.correcting) rc = 3;
  });

  app.add_subcommand("counterexample",
                     "deletion/insertion non-equivalence instance")
      ->callback([&] {
        const auto code = counterexample_code();
        const bool del =
            is_correcting_code(code, 0, 3, 1, ErrorType::Del).correcting;
        const VerifyResult ins =
            is_correcting_code(code, 0, 3, 1, ErrorType::Ins);
        SeqSet witness;
        witness.push_back(parse_sequence("AACCAA", 4));
        witness.push_back(parse_sequence("GGTTGG", 4));
        normalize(witness);
        const bool witnessOk =
            !ins.correcting &&
            in_set_error_ball(witness, code[0].seqs, 0, 3, 1, ErrorType::Ins) &&
            in_set_error_ball(witness, code[1].seqs, 0, 3, 1, ErrorType::Ins);
        nlohmann::ordered_json j;
        j["schema"] = "setcodes.counterexample.v1";
        j["code"] = {seqs_json(code[0].seqs), seqs_json(code[1].seqs)};
        j["del_correcting"] = del;
        j["ins_correcting"] = ins.correcting;
        j["witness"] = witnessOk ? seqs_json(witness)
                                 : nlohmann::ordered_json(nullptr);
        std::cout << "D-correcting=" << (del ? "true" : "false") << "\n";
        std::cout << "I-correcting=" << (ins.correcting ? "true" : "false")
                  << "\n";
        std::cout << j.dump(2) << "\n";
        if (!del || !witnessOk) rc = 3;
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const setcodes::EnumCapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
