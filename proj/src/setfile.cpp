#include "setcodes/setfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace setcodes {

namespace {

struct Header {
  int q, L, M;
};

Header parse_header(const std::string& line) {
  Header h{};
  char tail = 0;
  if (std::sscanf(line.c_str(), "#q=%d L=%d M=%d%c", &h.q, &h.L, &h.M, &tail) != 3)
    throw std::invalid_argument("set-file: malformed header '" + line + "'");
  if (h.q != 2 && h.q != 4)
    throw std::invalid_argument("set-file: q must be 2 or 4");
  if (h.L < 1 || h.M < 1)
    throw std::invalid_argument("set-file: L and M must be positive");
  return h;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

DataSet block_to_dataset(const Header& h, const std::vector<std::string>& lines) {
  if (static_cast<int>(lines.size()) != h.M)
    throw std::invalid_argument("set-file: expected " + std::to_string(h.M) +
                                " sequences, got " + std::to_string(lines.size()));
  SeqSet seqs;
  for (const std::string& line : lines) {
    Sequence x = parse_sequence(line, h.q);
    if (x.size() != h.L)
      throw std::invalid_argument("set-file: sequence '" + line +
                                  "' does not have length " + std::to_string(h.L));
    seqs.push_back(std::move(x));
  }
  const std::size_t before = seqs.size();
  DataSet set = make_dataset(std::move(seqs));
  if (set.seqs.size() != before)
    throw std::invalid_argument("set-file: duplicate sequences");
  return set;
}

}  // namespace

DataSet parse_set_file(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw std::invalid_argument("set-file: empty input");
  const Header h = parse_header(lines.front());
  return block_to_dataset(h, {lines.begin() + 1, lines.end()});
}

std::string write_set_file(const DataSet& set) {
  if (set.M() == 0) throw std::invalid_argument("set-file: empty set");
  std::string out = "#q=" + std::to_string(set.q()) +
                    " L=" + std::to_string(set.L()) +
                    " M=" + std::to_string(set.M()) + "\n";
  for (const Sequence& x : set.seqs) out += seq_to_string(x) + "\n";
  return out;
}

std::vector<DataSet> parse_multi_set_file(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw std::invalid_argument("multi-set-file: empty input");
  const Header h = parse_header(lines.front());
  std::vector<DataSet> code;
  std::vector<std::string> block;
  for (std::size_t i = 1; i <= lines.size(); ++i) {
    if (i == lines.size() || lines[i].empty()) {
      if (!block.empty()) {
        code.push_back(block_to_dataset(h, block));
        block.clear();
      }
    } else {
      block.push_back(lines[i]);
    }
  }
  if (code.empty()) throw std::invalid_argument("multi-set-file: no codewords");
  return code;
}

std::string write_multi_set_file(const std::vector<DataSet>& code) {
  if (code.empty()) throw std::invalid_argument("multi-set-file: empty code");
  std::string out = "#q=" + std::to_string(code.front().q()) +
                    " L=" + std::to_string(code.front().L()) +
                    " M=" + std::to_string(code.front().M()) + "\n";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i].q() != code.front().q() || code[i].L() != code.front().L() ||
        code[i].M() != code.front().M())
      throw std::invalid_argument("multi-set-file: inconsistent parameters");
    if (i) out += "\n";
    for (const Sequence& x : code[i].seqs) out += seq_to_string(x) + "\n";
  }
  return out;
}

std::vector<std::uint8_t> bytes_to_bits(const std::string& bytes, int nbits) {
  if (nbits < 0 || static_cast<std::size_t>((nbits + 7) / 8) > bytes.size())
    throw std::invalid_argument("info file: too short for requested bit count");
  std::vector<std::uint8_t> bits(nbits);
  for (int i = 0; i < nbits; ++i)
    bits[i] = static_cast<unsigned char>(bytes[i / 8]) >> (7 - i % 8) & 1;
  return bits;
}

std::string bits_to_bytes(const std::vector<std::uint8_t>& bits) {
  std::string bytes((bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<char>(0x80 >> (i % 8));
  return bytes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace setcodes
