"""Uniform-superposition linear-code states over GF(p).

A k-dimensional code C over GF(p) of length n represents the normalized state
(1/sqrt(p^k)) sum_{x in GF(p)^k} |x G>. Entanglement entropies of such states
are exact integers in dits: S_A = rank(G_A) + rank(G_B) - k, with G_A, G_B the
generator restricted to the two sides of the cut. This is the single entropy
path used for code states; it stays exact where dense vectors are infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from .errors import NotPrime, TooLarge, UnsupportedPrime
from .gf import GfMatrix, is_prime, nullspace, rank, submatrix_columns
from .states import StateVector

# Guard for codeword enumeration (p^k) and dense vectors (p^n).
ENUM_BUDGET = 2**26
DENSE_BUDGET = 2**26


@dataclass(frozen=True)
class LinearCodeState:
    p: int
    n: int
    gen: GfMatrix

    def __post_init__(self):
        assert self.gen.p == self.p and self.gen.cols == self.n
        assert rank(self.gen) == self.gen.rows, "generator rows must be independent"

    @property
    def k(self) -> int:
        return self.gen.rows


def from_parity_checks(h: GfMatrix) -> LinearCodeState:
    """Code state whose support is the solution set of h x = 0.

    The generator is a nullspace basis of h; k = cols - rank(h). A full-rank
    square h yields the valid k = 0 single-basis-state code.
    """
    return LinearCodeState(h.p, h.cols, nullspace(h))


def rs_generator(p: int) -> GfMatrix:
    """Extended Reed-Solomon generator over GF(p): k = (p+1)/2 rows, n = p+1
    columns. Column j (j = 0..p-1) is (j^0, j^1, ..., j^(k-1)) mod p with
    0^0 = 1; the final column (0, ..., 0, 1) is the point at infinity.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise UnsupportedPrime("p = 2: dimension (p+1)/2 is not an integer")
    n = p + 1
    k = n // 2
    g = np.zeros((k, n), dtype=np.int64)
    for j in range(p):
        g[0, j] = 1
        for r in range(1, k):
            g[r, j] = (g[r - 1, j] * j) % p
    g[k - 1, n - 1] = 1
    return GfMatrix(g, p)


def rs_code_state(p: int) -> LinearCodeState:
    return LinearCodeState(p, p + 1, rs_generator(p))


def _check_enum_budget(cs: LinearCodeState) -> None:
    if cs.p**cs.k > ENUM_BUDGET:
        raise TooLarge(
            f"codeword enumeration p^k = {cs.p}^{cs.k} exceeds budget {ENUM_BUDGET}"
        )


def codeword_blocks(cs: LinearCodeState, block: int = 1 << 16) -> Iterator[np.ndarray]:
    """All p^k codewords as row blocks, messages in lexicographic order.

    Encoding uses float64 matmul (BLAS) with exact small-integer values, then
    reduces mod p; entries stay far below 2^53.
    """
    _check_enum_budget(cs)
    p, k, total = cs.p, cs.k, cs.p**cs.k
    gt = cs.gen.a.astype(np.float64)
    place = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        msgs = (idx[:, None] // place[None, :]) % p
        words = np.rint(msgs.astype(np.float64) @ gt).astype(np.int64) % p
        yield words


def codewords(cs: LinearCodeState) -> Iterator[tuple[int, ...]]:
    """Stream of the p^k codewords as tuples, deterministic order."""
    for blockarr in codeword_blocks(cs):
        for row in blockarr:
            yield tuple(int(x) for x in row)


def min_hamming_distance(cs: LinearCodeState) -> int:
    """Minimum Hamming weight over nonzero codewords (= min distance, by
    linearity)."""
    _check_enum_budget(cs)
    best = cs.n + 1
    first = True
    for blockarr in codeword_blocks(cs):
        weights = np.count_nonzero(blockarr, axis=1)
        if first:
            weights = weights[1:]  # drop the zero codeword (message 0 is first)
            first = False
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def code_entropy(cs: LinearCodeState, a) -> int:
    """Entanglement entropy of the code state across the cut (a | complement),
    in dits: rank(G_A) + rank(G_B) - k. Multiply by log2(p) for bits."""
    a = sorted(set(a))
    b = [j for j in range(cs.n) if j not in a]
    ra = rank(submatrix_columns(cs.gen, a)) if a else 0
    rb = rank(submatrix_columns(cs.gen, b)) if b else 0
    return ra + rb - cs.k


@dataclass(frozen=True)
class AmeCodeResult:
    ok: bool
    reason: str = ""
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_ame_code(cs: LinearCodeState) -> AmeCodeResult:
    """True iff every balanced cut carries maximal entropy, i.e. G restricted
    to any n/2 columns has rank n/2. Requires n even and k = n/2."""
    if cs.n % 2 != 0:
        return AmeCodeResult(False, f"n = {cs.n} is odd")
    half = cs.n // 2
    if cs.k != half:
        return AmeCodeResult(False, f"k = {cs.k} != n/2 = {half}")
    for a in combinations(range(cs.n), half):
        if rank(submatrix_columns(cs.gen, a)) != half:
            return AmeCodeResult(False, "rank-deficient balanced cut", a)
    return AmeCodeResult(True)


def dense_statevector(cs: LinearCodeState) -> StateVector:
    """Dense vector with amplitude 1/sqrt(p^k) on every codeword (big-endian
    digit indexing), 0 elsewhere."""
    if cs.p**cs.n > DENSE_BUDGET:
        raise TooLarge(
            f"dense vector p^n = {cs.p}^{cs.n} exceeds budget {DENSE_BUDGET}"
        )
    amps = np.zeros(cs.p**cs.n, dtype=np.float64)
    place = cs.p ** np.arange(cs.n - 1, -1, -1, dtype=np.int64)
    scale = 1.0 / np.sqrt(float(cs.p**cs.k))
    for blockarr in codeword_blocks(cs):
        amps[blockarr @ place] = scale
    return StateVector(cs.n, cs.p, amps)
