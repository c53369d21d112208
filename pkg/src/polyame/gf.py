"""Exact linear algebra over prime fields GF(p).

Entries are machine integers kept reduced mod p; the moduli needed here are
tiny (p <= 29), so int64 arithmetic never overflows and everything is exact.
"""

from __future__ import annotations

import numpy as np

from .errors import NotPrime


def is_prime(p: int) -> bool:
    """Trial division; inputs here are tiny."""
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """Arithmetic handle for GF(p): add/sub/mul/inv/pow on integers in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"modulus {p} is not prime")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def pow(self, a: int, e: int) -> int:
        # Python's pow is already square-and-multiply.
        return pow(a % self.p, e, self.p)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        # Fermat: a^(p-2) = a^(-1) for prime p.
        return pow(a, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class GfMatrix:
    """A rows x cols matrix over GF(p), stored as an int64 numpy array.

    Values are reduced mod p at construction; instances are treated as
    immutable (the underlying array is write-protected).
    """

    def __init__(self, entries, p: int):
        if not is_prime(p):
            raise NotPrime(f"modulus {p} is not prime")
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix must be 2-dimensional")
        arr = np.mod(arr, p)
        arr.flags.writeable = False
        self.a = arr
        self.p = p

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GfMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self) -> str:
        return f"GfMatrix({self.a.tolist()}, p={self.p})"


def _rref_inplace(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of a mutable int64 array mod p.

    Returns (rref array, pivot column list). First-nonzero pivoting; the
    result is canonical regardless of input row order.
    """
    field = PrimeField(p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * field.inv(int(m[r, c]))) % p
        for j in range(rows):
            if j != r and m[j, c]:
                m[j] = (m[j] - m[j, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rref(m: GfMatrix) -> tuple[GfMatrix, list[int]]:
    """Reduced row-echelon form and pivot columns; input not mutated."""
    work = m.a.copy()
    work, pivots = _rref_inplace(work, m.p)
    return GfMatrix(work, m.p), pivots


def rank(m: GfMatrix) -> int:
    """Dimension of the row space over GF(p)."""
    work = m.a.copy()
    _, pivots = _rref_inplace(work, m.p)
    return len(pivots)


def nullspace(m: GfMatrix) -> GfMatrix:
    """Basis of {x : m xT = 0} as rows of a (cols - rank) x cols matrix.

    Standard free-variable construction from the RREF: each non-pivot column
    yields one basis vector with a 1 there and minus the pivot-column
    coefficients elsewhere.
    """
    work = m.a.copy()
    work, pivots = _rref_inplace(work, m.p)
    cols = m.cols
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-work[ri, fc]) % m.p
    return GfMatrix(basis, m.p)


def submatrix_columns(m: GfMatrix, cols) -> GfMatrix:
    """Column-selected copy; order preserved as given."""
    idx = list(cols)
    for c in idx:
        if not 0 <= c < m.cols:
            raise IndexError(f"column {c} out of range for {m.cols} columns")
    return GfMatrix(m.a[:, idx] if idx else np.zeros((m.rows, 0), dtype=np.int64), m.p)


def matmul(a: GfMatrix, b: GfMatrix) -> GfMatrix:
    """Exact product over GF(p)."""
    if a.p != b.p:
        raise ValueError("mismatched moduli")
    if a.cols != b.rows:
        raise ValueError("incompatible shapes")
    return GfMatrix((a.a @ b.a) % a.p, a.p)
