#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "alice/bitstring.hpp"
#include "alice/vm.hpp"

namespace alice {

// Compression power of a feature program on one string: the largest m such
// that some residual r with l(r) <= l(x) - m - 1 makes the program print x.
// Residuals are swept shortest first, lex within a length, each run fuelled
// separately; no qualifying residual gives 0.
struct PhiResult {
  Nat value = 0;
  std::optional<BitString> witness;
  Nat runs = 0;
};
PhiResult phi(const Program& feature, const BitString& x, Nat fuel,
              std::size_t max_residual_len = 20);

// Counts, over all strings of length n, how many reach each power level m.
// A feature can halve the space at most once per bit of power, so the count
// at level m must not exceed 2^(n-m).
struct PowerBoundReport {
  std::size_t n = 0;
  std::vector<Nat> count_at_least;  // index m, starting at m = 1
  bool violated = false;
};
PowerBoundReport power_bound_check(const Program& feature, std::size_t n,
                                   Nat fuel);

enum class TestKind { LeadingZeros, OddPositionOnes };

// LeadingZeros: number of zeros before the first one.
// OddPositionOnes: largest i such that positions 1, 3, ..., 2i-1 (1-based)
// all hold ones.
std::size_t test_value(TestKind kind, const BitString& x);

struct NotATest : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Host-side model of a test family at level m over strings of length n: the
// members are enumerated lex-sorted and a string is encoded as its index,
// padded big-endian to n-m bits. Construction fails with NotATest when the
// family is too large for that index width.
class HostFeature {
 public:
  HostFeature(TestKind kind, std::size_t n, std::size_t m);
  HostFeature(std::vector<BitString> members, std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t nominal_length() const { return m_ - 1; }
  std::size_t family_size() const { return members_.size(); }
  const std::vector<BitString>& members() const { return members_; }

  bool contains(const BitString& x) const;
  BitString encode(const BitString& x) const;   // throws IndexOutOfRange
  BitString decode(const BitString& residual) const;  // throws IndexOutOfRange

 private:
  void validate() const;

  std::vector<BitString> members_;
  std::size_t n_;
  std::size_t m_;
};

}  // namespace alice
