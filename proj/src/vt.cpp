#include "setcodes/vt.hpp"

#include <stdexcept>

#include "setcodes/channel.hpp"

namespace setcodes {

int vt_checksum(const Sequence& x) {
  if (x.q != 2) throw std::invalid_argument("vt_checksum: binary sequences only");
  const int L = x.size();
  int acc = 0;
  for (int i = 0; i < L; ++i)
    if (x.sym[i]) acc = (acc + i + 1) % (L + 1);
  return acc;
}

std::optional<Sequence> vt_decode(const Sequence& y, int L, int a) {
  if (y.q != 2) throw std::invalid_argument("vt_decode: binary sequences only");
  if (a < 0 || a > L) throw std::invalid_argument("vt_decode: residue out of range");
  if (y.size() == L) {
    if (vt_checksum(y) == a) return y;
    return std::nullopt;
  }
  if (y.size() != L - 1 && y.size() != L + 1)
    throw std::invalid_argument("vt_decode: length must be L-1, L or L+1");
  // scan all single-edit completions; VT codes make the survivor unique
  const ErrorType kind = y.size() == L - 1 ? ErrorType::Ins : ErrorType::Del;
  std::optional<Sequence> found;
  for (const Sequence& x : enumerate_sphere(y, 1, kind)) {
    if (vt_checksum(x) != a) continue;
    if (found && *found != x) return std::nullopt;
    found = x;
  }
  return found;
}

std::vector<int> vt_parity_positions(int L) {
  std::vector<int> pos;
  for (int p = 1; p <= L; p *= 2) pos.push_back(p);
  // p = ceil(log2(L+1)) parities: weights 1..2^(p-1) cover every residue
  return pos;
}

int vt_info_bits(int L) {
  return L - static_cast<int>(vt_parity_positions(L).size());
}

Sequence vt_systematic_encode(const std::vector<std::uint8_t>& info, int L, int a) {
  if (static_cast<int>(info.size()) != vt_info_bits(L))
    throw std::invalid_argument("vt_systematic_encode: info length mismatch");
  if (a < 0 || a > L) throw std::invalid_argument("vt_systematic_encode: bad residue");
  const std::vector<int> parity = vt_parity_positions(L);
  Sequence x;
  x.q = 2;
  x.sym.assign(L, 0);
  std::size_t next = 0;
  std::vector<bool> isParity(L + 1, false);
  for (int p : parity) isParity[p] = true;
  for (int pos = 1; pos <= L; ++pos)
    if (!isParity[pos]) x.sym[pos - 1] = info[next++];
  int deficit = ((a - vt_checksum(x)) % (L + 1) + (L + 1)) % (L + 1);
  for (auto it = parity.rbegin(); it != parity.rend(); ++it)
    if (*it <= deficit) {
      x.sym[*it - 1] = 1;
      deficit -= *it;
    }
  if (deficit != 0) throw std::logic_error("vt_systematic_encode: residue unreachable");
  return x;
}

std::vector<std::uint8_t> vt_extract_info(const Sequence& x) {
  const int L = x.size();
  std::vector<bool> isParity(L + 1, false);
  for (int p : vt_parity_positions(L)) isParity[p] = true;
  std::vector<std::uint8_t> info;
  for (int pos = 1; pos <= L; ++pos)
    if (!isParity[pos]) info.push_back(x.sym[pos - 1]);
  return info;
}

}  // namespace setcodes
