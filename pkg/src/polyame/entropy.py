"""Dense von Neumann entropies over arbitrary bipartitions, bipartition
enumeration/sampling, and the AME verifier.

Sites are numbered 1..n (site j is the j-th tensor factor, most significant
first), matching the basis convention of the states module. Entropies are in
bits (base-2 logarithm).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, log2
from typing import Iterator, Optional

import numpy as np

from .errors import TooLarge
from .polytope import Polytope, opposite_face_pair
from .states import StateVector

EIG_CUTOFF = 1e-12
INTEGER_TOL = 1e-9
EXHAUSTIVE_BUDGET = 200_000
SPARSE_SUPPORT_MAX = 4096


@dataclass(frozen=True)
class Bipartition:
    n: int
    a_sites: tuple[int, ...]

    def __post_init__(self):
        sites = tuple(sorted(self.a_sites))
        object.__setattr__(self, "a_sites", sites)
        assert 1 <= len(sites) <= self.n - 1, "block must be proper and nonempty"
        assert len(set(sites)) == len(sites), "duplicate sites"
        assert all(1 <= s <= self.n for s in sites), "sites are 1-based"

    @property
    def m(self) -> int:
        return len(self.a_sites)

    def complement(self) -> "Bipartition":
        inside = set(self.a_sites)
        return Bipartition(self.n, tuple(s for s in range(1, self.n + 1) if s not in inside))


def _spectrum_dense(sv: StateVector, bp: Bipartition) -> np.ndarray:
    """Nonzero Schmidt spectrum via the Gram matrix on the smaller side."""
    n, d = sv.n, sv.d
    a_axes = tuple(s - 1 for s in bp.a_sites)
    b_axes = tuple(j for j in range(n) if j not in a_axes)
    m = len(a_axes)
    mat = (
        sv.amps.reshape((d,) * n)
        .transpose(a_axes + b_axes)
        .reshape(d**m, d ** (n - m))
    )
    if mat.shape[0] <= mat.shape[1]:
        gram = mat @ mat.T
    else:
        gram = mat.T @ mat
    return np.linalg.eigvalsh(gram)


def _spectrum_sparse(sv: StateVector, bp: Bipartition, nz: np.ndarray) -> np.ndarray:
    """Same spectrum computed from the nonzero amplitudes only: compress the
    distinct row and column index patterns and take the small Gram matrix."""
    n, d = sv.n, sv.d
    a_axes = [s - 1 for s in bp.a_sites]
    b_axes = [j for j in range(n) if j not in a_axes]
    digits = [(nz // d ** (n - 1 - ax)) % d for ax in range(n)]
    row = np.zeros(nz.shape, dtype=np.int64)
    for ax in a_axes:
        row = row * d + digits[ax]
    col = np.zeros(nz.shape, dtype=np.int64)
    for ax in b_axes:
        col = col * d + digits[ax]
    _, ri = np.unique(row, return_inverse=True)
    _, ci = np.unique(col, return_inverse=True)
    small = np.zeros((ri.max() + 1, ci.max() + 1), dtype=np.float64)
    np.add.at(small, (ri, ci), sv.amps[nz])
    if small.shape[0] <= small.shape[1]:
        gram = small @ small.T
    else:
        gram = small.T @ small
    return np.linalg.eigvalsh(gram)


def entropy(sv: StateVector, bp: Bipartition) -> float:
    """Von Neumann entropy (bits) of the reduction to bp.a_sites."""
    assert bp.n == sv.n
    sv.check_normalized()
    small_side = min(bp.m, sv.n - bp.m)
    nz = None
    if sv.d**small_side > SPARSE_SUPPORT_MAX:
        nz = np.nonzero(sv.amps)[0]
        if nz.size > SPARSE_SUPPORT_MAX:
            nz = None
    lam = (
        _spectrum_sparse(sv, bp, nz)
        if nz is not None
        else _spectrum_dense(sv, bp)
    )
    assert lam.min() > -1e-12, "Gram matrix has a significantly negative eigenvalue"
    assert abs(lam.sum() - 1.0) < 1e-9, "Schmidt spectrum does not sum to 1"
    lam = lam[lam > EIG_CUTOFF]
    return float(-(lam * np.log2(lam)).sum())


@dataclass(frozen=True)
class AmeVerdict:
    ok: bool
    worst_deviation: float
    worst_sites: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_ame(sv: StateVector, tol: float = 1e-10) -> AmeVerdict:
    """Check that every reduction to floor(n/2) sites is maximally mixed
    (checking the balanced cuts suffices: smaller blocks are partial traces
    of balanced ones)."""
    m = sv.n // 2
    target = m * log2(sv.d)
    worst, worst_sites = -1.0, ()
    for sites in combinations(range(1, sv.n + 1), m):
        dev = abs(entropy(sv, Bipartition(sv.n, sites)) - target)
        if dev > worst:
            worst, worst_sites = dev, sites
    return AmeVerdict(worst < tol, worst, worst_sites)


def exhaustive_partitions(n: int, m: int, budget: int = EXHAUSTIVE_BUDGET) -> Iterator[Bipartition]:
    total = comb(n, m)
    if total > budget:
        raise TooLarge(
            f"C({n},{m}) = {total} exceeds exhaustive budget {budget}; sample instead"
        )
    for sites in combinations(range(1, n + 1), m):
        yield Bipartition(n, sites)


def sample_partitions(n: int, m: int, count: int, seed: int) -> list[Bipartition]:
    """Distinct uniform m-subsets, reproducible from the seed (PCG64)."""
    total = comb(n, m)
    count = min(count, total)
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, ...]] = set()
    out = []
    while len(out) < count:
        sites = tuple(sorted(rng.choice(n, size=m, replace=False) + 1))
        if sites not in seen:
            seen.add(sites)
            out.append(Bipartition(n, tuple(int(s) for s in sites)))
    return out


def structured_partitions(pt: Polytope, m: Optional[int] = None) -> list[Bipartition]:
    """Geometry-derived blocks: single faces, opposite-face pairs, and edge
    neighborhoods (the two faces adjacent across an edge). Filtered to block
    size m when given."""
    n = pt.vertex_count
    blocks: list[tuple[int, ...]] = []
    for f in pt.faces:
        blocks.append(tuple(sorted(v + 1 for v in f)))
    if pt.name != "tetrahedron":
        seen_pairs = set()
        for a in range(pt.face_count):
            b = opposite_face_pair(pt, a)
            if (min(a, b), max(a, b)) in seen_pairs:
                continue
            seen_pairs.add((min(a, b), max(a, b)))
            blocks.append(tuple(sorted(v + 1 for v in pt.faces[a] + pt.faces[b])))
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for a, f in enumerate(pt.faces):
        for i, u in enumerate(f):
            v = f[(i + 1) % len(f)]
            edge_faces.setdefault((min(u, v), max(u, v)), []).append(a)
    for fs in edge_faces.values():
        a, b = fs
        sites = tuple(sorted({v + 1 for v in pt.faces[a] + pt.faces[b]}))
        blocks.append(sites)
    out = []
    seen: set[tuple[int, ...]] = set()
    for sites in blocks:
        if sites in seen or not 1 <= len(sites) <= n - 1:
            continue
        seen.add(sites)
        if m is None or len(sites) == m:
            out.append(Bipartition(n, sites))
    return out


@dataclass
class SweepRow:
    m: int
    values: list[float]
    witnesses: dict[float, tuple[int, ...]]
    examined: int
    mode: str
    seed: Optional[int] = None
    non_integer: list[float] = None

    def __post_init__(self):
        if self.non_integer is None:
            self.non_integer = []


@dataclass
class EntropyReport:
    state_id: str
    rows: list[SweepRow]
    eig_cutoff: float = EIG_CUTOFF
    integer_tolerance: float = INTEGER_TOL


_POOL_STATE: dict = {}


def _pool_init(sv: StateVector) -> None:
    _POOL_STATE["sv"] = sv


def _pool_entropy(bp: Bipartition) -> float:
    return entropy(_POOL_STATE["sv"], bp)


def worker_count() -> int:
    import os

    try:
        return max(1, int(os.environ.get("POLYAME_WORKERS", "1")))
    except ValueError:
        return 1


def batch_entropies(sv: StateVector, bps: list, workers: Optional[int] = None) -> list[float]:
    """Entropies for a list of bipartitions; order of results matches input,
    so serial and parallel runs assemble identical reports."""
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(bps) < 8:
        return [entropy(sv, bp) for bp in bps]
    import multiprocessing as mp

    with mp.get_context("fork").Pool(workers, _pool_init, (sv,)) as pool:
        return pool.map(_pool_entropy, bps, chunksize=max(1, len(bps) // (4 * workers)))


def _observe(sv: StateVector, parts, row: SweepRow) -> None:
    bps = list(parts)
    for bp, s in zip(bps, batch_entropies(sv, bps)):
        rounded = round(s)
        if abs(s - rounded) <= INTEGER_TOL:
            val = float(rounded)
        else:
            val = s
            row.non_integer.append(s)
        if val not in row.witnesses:
            row.witnesses[val] = bp.a_sites
            row.values.append(val)
        row.examined += 1
    row.values.sort()


def entropy_sweep(sv: StateVector, plan, state_id: str = "state") -> EntropyReport:
    """plan: iterable of (m, mode) where mode is 'exhaustive',
    ('sample', count, seed), or ('structured', polytope)."""
    rows = []
    for m, mode in plan:
        if mode == "exhaustive":
            row = SweepRow(m, [], {}, 0, "exhaustive")
            _observe(sv, exhaustive_partitions(sv.n, m), row)
        elif mode[0] == "sample":
            _, count, seed = mode
            row = SweepRow(m, [], {}, 0, "sampled", seed=seed)
            _observe(sv, sample_partitions(sv.n, m, count, seed), row)
        elif mode[0] == "structured":
            row = SweepRow(m, [], {}, 0, "structured")
            _observe(sv, structured_partitions(mode[1], m), row)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        rows.append(row)
    return EntropyReport(state_id, rows)
