#include <doctest.h>

#include "alice/bitstring.hpp"

using namespace alice;

TEST_CASE("index to bitstring follows length then lex order") {
  CHECK(nat_to_bits(0).str() == "");
  CHECK(nat_to_bits(1).str() == "0");
  CHECK(nat_to_bits(2).str() == "1");
  CHECK(nat_to_bits(3).str() == "00");
  CHECK(nat_to_bits(4).str() == "01");
  CHECK(nat_to_bits(5).str() == "10");
  CHECK(nat_to_bits(6).str() == "11");
  CHECK(nat_to_bits(7).str() == "000");
  CHECK(nat_to_bits(20).str() == "0101");
}

TEST_CASE("index mapping is a bijection") {
  for (Nat n = 0; n < (Nat{1} << 16); ++n)
    CHECK(bits_to_nat(nat_to_bits(n)) == n);
}

TEST_CASE("successive indices never shrink and break ties by lex") {
  BitString prev = nat_to_bits(0);
  for (Nat n = 1; n < 2000; ++n) {
    BitString cur = nat_to_bits(n);
    bool ordered = prev.size() < cur.size() ||
                   (prev.size() == cur.size() && prev < cur);
    CHECK(ordered);
    prev = cur;
  }
}

TEST_CASE("decoding refuses strings wider than 63 bits") {
  Nat out = 0;
  CHECK(try_bits_to_nat(BitString::zeros(63), &out));
  CHECK_FALSE(try_bits_to_nat(BitString::zeros(64), &out));
  CHECK_THROWS(bits_to_nat(BitString::ones(64)));
}

TEST_CASE("fixed width values round trip") {
  for (Nat v = 0; v < 256; ++v) {
    BitString b = bits_of_value(v, 8);
    CHECK(b.size() == 8);
    CHECK(bits_value(b) == v);
  }
  CHECK(bits_of_value(5, 8).str() == "00000101");
  CHECK(bits_value(BitString("00000101")) == 5);
}

TEST_CASE("basic editing operations") {
  BitString b("1010");
  b.push_back(1);
  CHECK(b.str() == "10101");
  b.append(BitString("00"));
  CHECK(b.str() == "1010100");
  b.append_run(1, 3);
  CHECK(b.str() == "1010100111");
  CHECK(b.slice(2, 4).str() == "1010");
  CHECK((BitString("10") + BitString("01")).str() == "1001");
  CHECK(BitString::zeros(3).str() == "000");
  CHECK(BitString::ones(2).str() == "11");
  CHECK_THROWS(BitString("10x1"));
}

TEST_CASE("lex comparison on equal-length strings") {
  CHECK(BitString("0011") < BitString("0100"));
  CHECK_FALSE(BitString("1") < BitString("1"));
  CHECK(BitString("") < BitString("0"));
}
