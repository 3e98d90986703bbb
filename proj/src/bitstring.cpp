#include "alice/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace alice {

BitString::BitString(std::string_view zeros_and_ones) {
  bits_.reserve(zeros_and_ones.size());
  for (char c : zeros_and_ones) {
    if (c == '0') {
      bits_.push_back(0);
    } else if (c == '1') {
      bits_.push_back(1);
    } else {
      throw std::invalid_argument("BitString: expected only '0'/'1'");
    }
  }
}

BitString BitString::zeros(std::size_t n) { return run(0, n); }
BitString BitString::ones(std::size_t n) { return run(1, n); }

BitString BitString::run(int bit, std::size_t n) {
  BitString s;
  s.bits_.assign(n, static_cast<std::uint8_t>(bit & 1));
  return s;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitString::append_run(int bit, std::size_t n) {
  bits_.insert(bits_.end(), n, static_cast<std::uint8_t>(bit & 1));
}

BitString BitString::slice(std::size_t first, std::size_t count) const {
  if (first + count > bits_.size())
    throw std::out_of_range("BitString::slice");
  BitString s;
  s.bits_.assign(bits_.begin() + first, bits_.begin() + first + count);
  return s;
}

BitString BitString::operator+(const BitString& rhs) const {
  BitString s = *this;
  s.append(rhs);
  return s;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitString nat_to_bits(Nat n) {
  // Strings of length L occupy indices 2^L - 1 .. 2^(L+1) - 2.
  Nat m = n + 1;
  int len = std::bit_width(m) - 1;
  Nat offset = m - (Nat{1} << len);
  return bits_of_value(offset, static_cast<std::size_t>(len));
}

bool try_bits_to_nat(const BitString& x, Nat* out) {
  if (x.size() >= 64) return false;
  Nat v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v = (v << 1) | static_cast<Nat>(x.at(i));
  *out = (Nat{1} << x.size()) - 1 + v;
  return true;
}

Nat bits_to_nat(const BitString& x) {
  Nat out = 0;
  if (!try_bits_to_nat(x, &out))
    throw std::overflow_error("bits_to_nat: string too wide for Nat");
  return out;
}

Nat bits_value(const BitString& x) {
  if (x.size() > 63) throw std::overflow_error("bits_value: too wide");
  Nat v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v = (v << 1) | static_cast<Nat>(x.at(i));
  return v;
}

BitString bits_of_value(Nat value, std::size_t width) {
  BitString s;
  for (std::size_t i = 0; i < width; ++i) {
    std::size_t shift = width - 1 - i;
    s.push_back(shift < 64 ? static_cast<int>((value >> shift) & 1) : 0);
  }
  return s;
}

}  // namespace alice
