#include "alice/codec.hpp"

namespace alice {

BitString e1_encode(const BitString& x) {
  BitString s;
  s.append_run(1, x.size());
  s.push_back(0);
  s.append(x);
  return s;
}

BitString e2_encode(const BitString& x) {
  BitString s = e1_encode(nat_to_bits(static_cast<Nat>(x.size())));
  s.append(x);
  return s;
}

BitString pair_encode(const BitString& x, const BitString& y) {
  BitString s = e1_encode(x);
  s.append(y);
  return s;
}

std::optional<BitString> try_e1_decode(const BitString& s, std::size_t* pos) {
  std::size_t p = *pos;
  std::size_t ones = 0;
  while (p < s.size() && s.at(p) == 1) {
    ++ones;
    ++p;
  }
  if (p >= s.size()) return std::nullopt;  // no terminating 0
  ++p;                                     // consume the 0
  if (p + ones > s.size()) return std::nullopt;
  BitString payload = s.slice(p, ones);
  *pos = p + ones;
  return payload;
}

std::optional<BitString> try_e2_decode(const BitString& s, std::size_t* pos) {
  std::size_t p = *pos;
  auto len_bits = try_e1_decode(s, &p);
  if (!len_bits) return std::nullopt;
  Nat len = 0;
  if (!try_bits_to_nat(*len_bits, &len)) return std::nullopt;
  if (p + len > s.size()) return std::nullopt;
  BitString payload = s.slice(p, static_cast<std::size_t>(len));
  *pos = p + static_cast<std::size_t>(len);
  return payload;
}

std::pair<BitString, BitString> e1_decode(const BitString& s) {
  std::size_t pos = 0;
  auto payload = try_e1_decode(s, &pos);
  if (!payload) throw MalformedCode("e1_decode: truncated codeword");
  return {*payload, s.slice(pos, s.size() - pos)};
}

std::pair<BitString, BitString> e2_decode(const BitString& s) {
  std::size_t pos = 0;
  auto payload = try_e2_decode(s, &pos);
  if (!payload) throw MalformedCode("e2_decode: truncated codeword");
  return {*payload, s.slice(pos, s.size() - pos)};
}

std::pair<BitString, BitString> unpair(const BitString& s) {
  return e1_decode(s);
}

}  // namespace alice
