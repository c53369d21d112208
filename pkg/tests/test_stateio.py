"""Binary state file round-trips and header validation."""

import numpy as np
import pytest

from polyame.stateio import MAGIC, read_state, write_state
from polyame.states import ame52_table1, ghz, normalized


def test_int8_round_trip_bit_exact(tmp_path):
    sv = ame52_table1()
    path = tmp_path / "s.bin"
    enc = write_state(path, sv)
    assert enc == "int8"
    back = read_state(path)
    assert (back.n, back.d) == (5, 2)
    assert np.array_equal(back.amps, sv.amps)
    # 16-byte header + 32 signed bytes
    assert path.stat().st_size == 16 + 32


def test_float64_round_trip(tmp_path):
    rng = np.random.default_rng(13)
    sv = normalized(3, 2, rng.normal(size=8))
    path = tmp_path / "s.bin"
    assert write_state(path, sv) == "float64"
    back = read_state(path)
    assert np.array_equal(back.amps, sv.amps)


def test_auto_picks_int8_for_uniform_support(tmp_path):
    sv = ghz(4)
    path = tmp_path / "s.bin"
    assert write_state(path, sv, "auto") == "int8"
    assert np.array_equal(read_state(path).amps, sv.amps)


def test_forced_encodings(tmp_path):
    sv = ghz(3)
    path = tmp_path / "s.bin"
    assert write_state(path, sv, "float64") == "float64"
    assert np.array_equal(read_state(path).amps, sv.amps)
    bad = normalized(1, 2, [3.0, 4.0])  # 4/3 is not an integer ratio
    with pytest.raises(ValueError):
        write_state(path, bad, "int8")
    assert write_state(path, bad, "auto") == "float64"


def test_bad_magic(tmp_path):
    path = tmp_path / "s.bin"
    path.write_bytes(b"NOTMAGIC" + bytes(40))
    with pytest.raises(ValueError):
        read_state(path)


def test_bad_version(tmp_path):
    path = tmp_path / "s.bin"
    good = tmp_path / "good.bin"
    write_state(good, ghz(2))
    data = bytearray(good.read_bytes())
    data[8] = 99
    path.write_bytes(bytes(data))
    with pytest.raises(ValueError):
        read_state(path)


def test_magic_constant():
    assert MAGIC == b"POLYAME\x00" and len(MAGIC) == 8
