#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace alice {

using Nat = std::uint64_t;

// Finite binary string with an explicit length. Bits are stored one per byte
// (values 0/1); everything in this codebase is desk-scale, so clarity wins
// over packing.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view zeros_and_ones);
  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);
  static BitString run(int bit, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int at(std::size_t i) const { return bits_[i]; }

  void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }
  void append(const BitString& other);
  void append_run(int bit, std::size_t n);
  BitString slice(std::size_t first, std::size_t count) const;

  BitString operator+(const BitString& rhs) const;
  bool operator==(const BitString& rhs) const { return bits_ == rhs.bits_; }
  bool operator!=(const BitString& rhs) const { return bits_ != rhs.bits_; }
  // Lexicographic, used only between equal-length strings in canonical order.
  bool operator<(const BitString& rhs) const { return bits_ < rhs.bits_; }

  std::string str() const;

 private:
  std::vector<std::uint8_t> bits_;
};

// Bijection between naturals and bitstrings, ordered by length then
// lexicographically: 0 <-> "", 1 <-> "0", 2 <-> "1", 3 <-> "00", 4 <-> "01",
// 5 <-> "10", 6 <-> "11", 7 <-> "000", ...
BitString nat_to_bits(Nat n);

// Inverse of nat_to_bits. Only defined for strings shorter than 64 bits
// (larger values do not fit a Nat); callers that may see wider strings use
// try_bits_to_nat.
Nat bits_to_nat(const BitString& x);
bool try_bits_to_nat(const BitString& x, Nat* out);

// Plain big-endian binary value of x (no length component), used for padded
// index residuals. Requires size() <= 63.
Nat bits_value(const BitString& x);
// Big-endian binary of `value` left-padded with zeros to `width` bits.
BitString bits_of_value(Nat value, std::size_t width);

}  // namespace alice
