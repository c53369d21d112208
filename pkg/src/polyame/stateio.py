"""Binary state-vector file format.

Layout (little-endian, 16-byte header, then raw amplitudes):

    offset  size  field
    0       8     magic b"POLYAME\\0"
    8       1     format version (1)
    9       1     n  (number of sites)
    10      1     d  (local dimension)
    11      1     encoding: 1 = int8 signed integers (state = ints / norm),
                            2 = float64 raw amplitudes
    12      4     reserved (zero)
    16      -     d^n values: int8 or little-endian float64 per encoding

The int8 encoding stores the amplitudes as the smallest integer vector
proportional to the state (exact for flat +-1/sqrt(N) states and uniform
code-state supports); decoding divides by the integer vector's norm, which
reproduces the original amplitudes bit-for-bit when they were built the same
way. float64 is a verbatim dump.
"""

from __future__ import annotations

import struct

import numpy as np

from .states import StateVector

MAGIC = b"POLYAME\x00"
VERSION = 1
ENC_INT8 = 1
ENC_FLOAT64 = 2


def _as_int8_multiple(amps: np.ndarray):
    """Smallest int8 vector proportional to amps, or None."""
    scale = np.abs(amps[amps != 0]).min() if np.any(amps) else 1.0
    ratio = amps / scale
    ints = np.rint(ratio)
    if np.max(np.abs(ints)) > 127:
        return None
    if not np.allclose(ratio, ints, rtol=0, atol=1e-12):
        return None
    return ints.astype(np.int8)


def write_state(path, sv: StateVector, encoding: str = "auto") -> str:
    """Write a state; returns the encoding used ('int8' or 'float64')."""
    ints = _as_int8_multiple(sv.amps) if encoding in ("auto", "int8") else None
    if encoding == "int8" and ints is None:
        raise ValueError("amplitudes are not proportional to small integers")
    with open(path, "wb") as fh:
        enc = ENC_INT8 if ints is not None else ENC_FLOAT64
        fh.write(MAGIC)
        fh.write(struct.pack("<BBBB4x", VERSION, sv.n, sv.d, enc))
        if ints is not None:
            fh.write(ints.tobytes())
        else:
            fh.write(sv.amps.astype("<f8").tobytes())
    return "int8" if ints is not None else "float64"


def read_state(path) -> StateVector:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != MAGIC:
            raise ValueError(f"bad magic {magic!r}")
        version, n, d, enc = struct.unpack("<BBBB4x", fh.read(8))
        if version != VERSION:
            raise ValueError(f"unsupported version {version}")
        payload = fh.read()
    count = d**n
    if enc == ENC_INT8:
        ints = np.frombuffer(payload, dtype=np.int8, count=count)
        arr = ints.astype(np.float64)
        arr /= np.linalg.norm(arr)
    elif enc == ENC_FLOAT64:
        arr = np.frombuffer(payload, dtype="<f8", count=count).astype(np.float64)
    else:
        raise ValueError(f"unknown encoding {enc}")
    return StateVector(int(n), int(d), arr)
