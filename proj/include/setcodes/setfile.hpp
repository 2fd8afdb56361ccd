#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "setcodes/sequence.hpp"

namespace setcodes {

/// Set-file format: header line "#q=<2|4> L=<int> M=<int>", then M sequences
/// one per line (binary 0/1 or quaternary ACGT), trailing newline. Input lines
/// may be in any order; the writer emits sorted order.
DataSet parse_set_file(const std::string& text);
std::string write_set_file(const DataSet& set);

/// Multi-set-file: one shared header, codeword blocks separated by blank lines.
std::vector<DataSet> parse_multi_set_file(const std::string& text);
std::string write_multi_set_file(const std::vector<DataSet>& code);

/// Info files are raw bytes, bits big-endian within each byte.
std::vector<std::uint8_t> bytes_to_bits(const std::string& bytes, int nbits);
std::string bits_to_bytes(const std::vector<std::uint8_t>& bits);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace setcodes
