#include "alice/descriptor.hpp"

#include <fstream>

#include "alice/codec.hpp"
#include "alice/vm.hpp"

namespace alice {

BitString Description::wire() const {
  BitString out = e2_encode(nat_to_bits(depth));
  out.append(e2_encode(residual));
  for (const BitString& f : features) out.append(f);
  return out;
}

std::size_t Description::wire_length() const { return wire().size(); }

Description trivial_description(const BitString& x) {
  Description d;
  d.depth = 0;
  d.residual = x;
  return d;
}

Description description_from_chain(std::vector<BitString> features,
                                   BitString residual) {
  Description d;
  d.depth = static_cast<Nat>(features.size());
  d.features = std::move(features);
  d.residual = std::move(residual);
  return d;
}

Description description_from_greedy(const GreedyResult& g) {
  std::vector<BitString> features;
  features.reserve(g.steps.size());
  for (auto it = g.steps.rbegin(); it != g.steps.rend(); ++it)
    features.push_back(it->step.feature_wire);
  return description_from_chain(std::move(features), g.residual);
}

Description parse_description(const BitString& wire) {
  std::size_t pos = 0;
  auto depth_bits = try_e2_decode(wire, &pos);
  if (!depth_bits) throw MalformedDescription("bad depth field");
  Nat depth = 0;
  if (!try_bits_to_nat(*depth_bits, &depth))
    throw MalformedDescription("depth field too wide");
  auto residual = try_e2_decode(wire, &pos);
  if (!residual) throw MalformedDescription("bad residual field");
  Description d;
  d.depth = depth;
  d.residual = std::move(*residual);
  for (Nat i = 0; i < d.depth; ++i) {
    auto prog = try_parse_program(wire, &pos);
    if (!prog)
      throw MalformedDescription("bad feature wire at level " +
                                 std::to_string(i + 1));
    d.features.push_back(prog->wire());
  }
  if (pos != wire.size())
    throw MalformedDescription("trailing bits after description");
  return d;
}

BitString expand_description(const Description& d, Nat fuel_per_feature) {
  if (d.features.size() != d.depth)
    throw MalformedDescription("depth does not match feature count");
  BitString cur = d.residual;
  for (std::size_t i = 0; i < d.features.size(); ++i) {
    auto [prog, rest] = parse_program(d.features[i]);
    if (!rest.empty())
      throw MalformedDescription("trailing bits in feature wire at level " +
                                 std::to_string(i + 1));
    RunOutcome out = run(prog, cur, fuel_per_feature);
    if (!out.halted())
      throw ChainBroken("feature at level " + std::to_string(i + 1) +
                        (out.kind == RunOutcome::Kind::Failed
                             ? " failed: " + std::string(fail_reason_name(out.reason))
                             : " ran out of fuel"));
    cur = std::move(out.output);
  }
  return cur;
}

bool verify_description(const Description& d, const BitString& x,
                        Nat fuel_per_feature) {
  try {
    return expand_description(d, fuel_per_feature) == x;
  } catch (const DescriptorError&) {
    return false;
  }
}

std::vector<std::uint8_t> bytes_from_bits(const BitString& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits.at(i)) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
  return out;
}

BitString bits_from_bytes(const std::vector<std::uint8_t>& bytes,
                          std::size_t bit_count) {
  BitString out;
  for (std::size_t i = 0; i < bit_count; ++i)
    out.push_back((bytes[i / 8] >> (7 - i % 8)) & 1u);
  return out;
}

std::vector<std::uint8_t> pack_container(const BitString& payload) {
  std::vector<std::uint8_t> out = {'I', 'C', 'D', '1', kContainerVersion};
  std::uint64_t n = payload.size();
  for (int s = 56; s >= 0; s -= 8)
    out.push_back(static_cast<std::uint8_t>((n >> s) & 0xff));
  auto body = bytes_from_bits(payload);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

BitString unpack_container(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 13 || bytes[0] != 'I' || bytes[1] != 'C' ||
      bytes[2] != 'D' || bytes[3] != '1')
    throw BadMagic("not an ICD1 container");
  if (bytes[4] != kContainerVersion)
    throw BadVersion("unsupported container version " +
                     std::to_string(bytes[4]));
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n = (n << 8) | bytes[5 + static_cast<std::size_t>(i)];
  if (bytes.size() != 13 + (n + 7) / 8)
    throw LengthMismatch("container body length does not match header");
  std::vector<std::uint8_t> body(bytes.begin() + 13, bytes.end());
  if (n % 8 != 0 && !body.empty()) {
    std::uint8_t pad_mask =
        static_cast<std::uint8_t>((1u << (8 - n % 8)) - 1);
    if (body.back() & pad_mask)
      throw LengthMismatch("nonzero padding bits in final byte");
  }
  return bits_from_bytes(body, static_cast<std::size_t>(n));
}

void write_container_file(const std::string& path, const BitString& payload) {
  auto bytes = pack_container(payload);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DescriptorError("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw DescriptorError("write failed for " + path);
}

BitString read_container_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DescriptorError("cannot open " + path);
  std::vector<std::uint8_t> bytes(std::istreambuf_iterator<char>(f), {});
  return unpack_container(bytes);
}

}  // namespace alice
