import pytest

import alice_ic


def test_codec_roundtrip():
    assert alice_ic.nat_to_bits(20) == "0101"
    assert alice_ic.bits_to_nat("0101") == 20
    framed = alice_ic.e1_encode("0101")
    assert framed == "111100101"
    payload, rest = alice_ic.e1_decode(framed + "11")
    assert (payload, rest) == ("0101", "11")
    payload, rest = alice_ic.e2_decode(alice_ic.e2_encode("10110"))
    assert (payload, rest) == ("10110", "")


def test_run_program():
    out = alice_ic.run_program("1001110", "1" + alice_ic.e1_encode("0101"))
    assert out["status"] == "halted"
    assert out["output"] == "1" * 20
    assert out["steps"] == 1

    bad = alice_ic.run_program("1001111", "")
    assert bad["status"] == "failed"
    assert bad["reason"] == "Reserved"


def test_compress_expand_pack():
    x = "1" * 200 + "0" * 50
    res = alice_ic.compress(x)
    assert res["input_bits"] == 250
    assert res["wire_bits"] == 47
    assert res["depth"] == 1
    assert alice_ic.expand(res["wire"]) == x

    raw = alice_ic.pack(res["wire"])
    assert isinstance(raw, bytes)
    assert raw[:4] == b"ICD1"
    assert alice_ic.unpack(raw) == res["wire"]

    incompressible = "10110"
    res2 = alice_ic.compress(incompressible, budget=200000, max_a_len=12)
    assert res2["depth"] == 0
    assert alice_ic.expand(res2["wire"]) == incompressible


def test_phi_and_complexity():
    p = alice_ic.phi("1001110", "1" * 24, fuel=10000)
    assert p["value"] == 13
    assert p["witness"] == "1" + alice_ic.e1_encode(alice_ic.nat_to_bits(24))

    c = alice_ic.bounded_complexity("11")
    assert c["value"] == 9
    assert c["exact"] is True
    assert c["input"] == "11"


def test_host_feature():
    f = alice_ic.HostFeature("leading-zeros", 8, 3)
    assert f.family_size == 32
    assert f.nominal_length == 2
    assert f.encode("00010110") == "10110"
    assert f.decode("10110") == "00010110"
    assert f.contains("00010110")
    assert not f.contains("11111111")
    with pytest.raises(alice_ic.IndexOutOfRange):
        f.decode("1")
    with pytest.raises(alice_ic.IndexOutOfRange):
        f.encode("11111111")


def test_version():
    assert alice_ic.__version__ == "0.1.0"
