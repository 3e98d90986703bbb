#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "alice/bitstring.hpp"

namespace alice {

struct MalformedCode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-delimiting frame: e1(x) = 1^l(x) 0 x, so l(e1(x)) = 2 l(x) + 1.
BitString e1_encode(const BitString& x);

// Length-field frame: e2(x) = e1(nat_to_bits(l(x))) ++ x.
BitString e2_encode(const BitString& x);

// Pairing <x, y> = e1(x) ++ y. The first component is framed, the second is
// the free remainder.
BitString pair_encode(const BitString& x, const BitString& y);

// Cursor-based decoders. On success the payload is returned and *pos moves
// past the consumed codeword; on failure *pos is unspecified and nullopt is
// returned. Failure means the stream ended inside the codeword or the length
// field does not fit a Nat.
std::optional<BitString> try_e1_decode(const BitString& s, std::size_t* pos);
std::optional<BitString> try_e2_decode(const BitString& s, std::size_t* pos);

// Whole-string variants used at API boundaries: the codeword must start at
// bit 0; the remainder after it is returned alongside the payload. Throw
// MalformedCode on bad input.
std::pair<BitString, BitString> e1_decode(const BitString& s);
std::pair<BitString, BitString> e2_decode(const BitString& s);
std::pair<BitString, BitString> unpair(const BitString& s);

}  // namespace alice
