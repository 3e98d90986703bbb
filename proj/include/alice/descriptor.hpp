#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alice/bitstring.hpp"
#include "alice/engine.hpp"

namespace alice {

struct DescriptorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedDescription : DescriptorError {
  using DescriptorError::DescriptorError;
};
struct ChainBroken : DescriptorError {
  using DescriptorError::DescriptorError;
};
struct BadMagic : DescriptorError {
  using DescriptorError::DescriptorError;
};
struct BadVersion : DescriptorError {
  using DescriptorError::DescriptorError;
};
struct LengthMismatch : DescriptorError {
  using DescriptorError::DescriptorError;
};

// A chained description: a depth count, the final residual, and one feature
// program wire per level. features[0] is the innermost feature (the one run
// first when expanding), matching the order the wires appear on the wire.
struct Description {
  Nat depth = 0;
  std::vector<BitString> features;
  BitString residual;

  BitString wire() const;
  std::size_t wire_length() const;
};

Description trivial_description(const BitString& x);
Description description_from_chain(std::vector<BitString> features_innermost_first,
                                   BitString residual);
Description description_from_greedy(const GreedyResult& g);

// Parses a description wire. Throws MalformedDescription unless the whole
// wire is consumed exactly.
Description parse_description(const BitString& wire);

inline constexpr Nat kDefaultExpandFuel = Nat{1} << 26;

// Runs the feature chain on the residual, innermost first. Throws ChainBroken
// if any run fails or exceeds the per-feature fuel.
BitString expand_description(const Description& d,
                             Nat fuel_per_feature = kDefaultExpandFuel);

bool verify_description(const Description& d, const BitString& x,
                        Nat fuel_per_feature = kDefaultExpandFuel);

// Byte container: "ICD1" magic, a version byte, the payload bit length as an
// 8-byte big-endian count, then the payload bits packed MSB-first with zero
// padding in the final byte.
inline constexpr std::uint8_t kContainerVersion = 0x01;

std::vector<std::uint8_t> bytes_from_bits(const BitString& bits);
BitString bits_from_bytes(const std::vector<std::uint8_t>& bytes,
                          std::size_t bit_count);

std::vector<std::uint8_t> pack_container(const BitString& payload);
BitString unpack_container(const std::vector<std::uint8_t>& bytes);

void write_container_file(const std::string& path, const BitString& payload);
BitString read_container_file(const std::string& path);

}  // namespace alice
