"""Centrally symmetric compositions and matrices, block partitions, the
closure order, and the index-shift on block partitions.

Two variants are supported.  C_ODD works with N = 2n+1 parts and the full
hyperoctahedral parabolic on the middle block; D_EVEN works with N = 2n parts,
adds a parity refinement to the closure order, and uses purely symmetric
parabolics (the middle of {1..2d} is never straddled by a block).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exactring import ParabolicSpec, QScalar, q_power

C_ODD = "c-odd"
D_EVEN = "d-even"


@dataclass(frozen=True)
class Variant:
    """Rank data: n >= 1 determines N (2n+1 or 2n); d >= 1 is the number of
    independent coordinates (compositions sum to 2d)."""

    kind: str
    n: int
    d: int

    def __post_init__(self):
        if self.kind not in (C_ODD, D_EVEN):
            raise ValueError(f"unknown variant kind {self.kind!r}")
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive")

    @property
    def N(self) -> int:
        return 2 * self.n + 1 if self.kind == C_ODD else 2 * self.n

    def tau(self, i: int) -> int:
        """The index involution on 1..N-1."""
        if not 1 <= i <= self.N - 1:
            raise ValueError(f"index {i} outside [1, {self.N - 1}]")
        return self.N - i

    def tau_node(self, i: int) -> int:
        """The diagram involution on affine nodes 0..N-1 (fixes 0)."""
        return 0 if i == 0 else self.N - i

    def cartan(self, i: int, j: int) -> int:
        """Affine Cartan matrix of the cycle on nodes {0..N-1}."""
        N = self.N
        if i == j:
            return 2
        if N == 2:
            return -2
        return -1 if (i - j) % N in (1, N - 1) else 0

    def central_scalar(self) -> QScalar:
        """The value q^N of the central element."""
        return q_power(self.N)


Composition = tuple
BlockPartition = tuple
OrbitMatrix = tuple


def check_composition(var: Variant, v) -> Composition:
    v = tuple(v)
    N = var.N
    if len(v) != N:
        raise ValueError(f"composition must have {N} parts")
    if any(x < 0 for x in v):
        raise ValueError("composition entries must be nonnegative")
    if any(v[i] != v[N - 1 - i] for i in range(N)):
        raise ValueError("composition is not centrally symmetric")
    if sum(v) != 2 * var.d:
        raise ValueError(f"composition entries must sum to {2 * var.d}")
    return v


@lru_cache(maxsize=None)
def enum_compositions(var: Variant):
    """All centrally symmetric compositions of 2d into N parts, sorted."""
    N, d = var.N, var.d
    half = N // 2
    out = []
    if var.kind == C_ODD:
        for head in itertools.product(range(2 * d + 1), repeat=half):
            mid = 2 * d - 2 * sum(head)
            if mid >= 0 and mid % 2 == 0:
                out.append(head + (mid,) + head[::-1])
    else:
        for head in itertools.product(range(2 * d + 1), repeat=half):
            if sum(head) == d:
                out.append(head + head[::-1])
    return tuple(sorted(out))


def partial_sums(v: Composition):
    out = [0]
    for x in v:
        out.append(out[-1] + x)
    return out


def blocks(var: Variant, v) -> BlockPartition:
    """Consecutive intervals of lengths v_1..v_N partitioning {1..2d}."""
    v = check_composition(var, v)
    bars = partial_sums(v)
    return tuple(
        tuple(range(bars[i] + 1, bars[i + 1] + 1)) for i in range(var.N)
    )


def check_mirror(var: Variant, I: BlockPartition) -> bool:
    """r in I_s iff 2d+1-r in I_{tau(s)+1}, with blocks partitioning {1..2d}."""
    N, d = var.N, var.d
    if len(I) != N:
        return False
    seen = sorted(itertools.chain.from_iterable(I))
    if seen != list(range(1, 2 * d + 1)):
        return False
    member = {}
    for s, blk in enumerate(I, start=1):
        for r in blk:
            member[r] = s
    for r, s in member.items():
        if member[2 * d + 1 - r] != N + 1 - s:
            return False
    return True


def tau_plus(var: Variant, I: BlockPartition, r: int) -> BlockPartition:
    """Shift r one block to the right and its mirror one block to the left."""
    N, d = var.N, var.d
    if not check_mirror(var, I):
        raise ValueError("input blocks do not satisfy the mirror property")
    s = next((k for k, blk in enumerate(I, start=1) if r in blk), None)
    if s is None:
        raise ValueError(f"index {r} not found in any block")
    if s == N:
        raise ValueError(f"index {r} lies in the last block and cannot shift")
    rp = 2 * d + 1 - r
    out = [list(b) for b in I]
    out[s - 1].remove(r)
    out[s].append(r)
    # mirror index moves from block tau(s)+1 = N+1-s down to block tau(s) = N-s
    out[N - s].remove(rp)
    out[N - s - 1].append(rp)
    result = tuple(tuple(sorted(b)) for b in out)
    assert check_mirror(var, result)
    return result


def listing(I: BlockPartition):
    """The ordered variable listing: blocks in order, ascending inside each."""
    return tuple(itertools.chain.from_iterable(tuple(sorted(b)) for b in I))


def e_theta(var: Variant, i: int, j: int, v2, a: int) -> OrbitMatrix:
    """diag(v2) + a*(E_ij + E_{tau(i)+1, tau(j)+1})."""
    N = var.N
    if not (1 <= i <= N and 1 <= j <= N):
        raise ValueError("matrix indices out of range")
    v2 = tuple(v2)
    if len(v2) != N or any(x < 0 for x in v2):
        raise ValueError("diagonal part must be a nonnegative N-vector")
    A = [[0] * N for _ in range(N)]
    for k in range(N):
        A[k][k] = v2[k]
    A[i - 1][j - 1] += a
    A[N - i][N - j] += a  # (tau(i)+1, tau(j)+1), 1-based
    return tuple(tuple(row) for row in A)


def check_matrix(var: Variant, A) -> OrbitMatrix:
    A = tuple(tuple(row) for row in A)
    N = var.N
    if len(A) != N or any(len(row) != N for row in A):
        raise ValueError(f"matrix must be {N}x{N}")
    if any(x < 0 for row in A for x in row):
        raise ValueError("matrix entries must be nonnegative")
    if sum(x for row in A for x in row) != 2 * var.d:
        raise ValueError(f"matrix entries must sum to {2 * var.d}")
    for i in range(N):
        for j in range(N):
            if A[i][j] != A[N - 1 - i][N - 1 - j]:
                raise ValueError("matrix is not centrally symmetric")
    return A


def ro(A: OrbitMatrix) -> Composition:
    return tuple(sum(row) for row in A)


def co(A: OrbitMatrix) -> Composition:
    return tuple(sum(col) for col in zip(*A))


def leq(var: Variant, A, B) -> bool:
    """The closure order: equal margins, dominated upper-right corner sums,
    and (D_EVEN only) matching parity of the upper-left n x n entry sum."""
    A = check_matrix(var, A)
    B = check_matrix(var, B)
    if ro(A) != ro(B) or co(A) != co(B):
        return False
    N = var.N
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            sa = sum(A[r - 1][s - 1] for r in range(1, i + 1) for s in range(j, N + 1))
            sb = sum(B[r - 1][s - 1] for r in range(1, i + 1) for s in range(j, N + 1))
            if sa > sb:
                return False
    if var.kind == D_EVEN:
        n = var.n
        pa = sum(A[r][s] for r in range(n) for s in range(n))
        pb = sum(B[r][s] for r in range(n) for s in range(n))
        if (pa - pb) % 2:
            return False
    return True


@lru_cache(maxsize=None)
def enum_matrices(var: Variant):
    """All centrally symmetric N x N matrices over N with entry sum 2d."""
    N, d = var.N, var.d
    positions = [(i, j) for i in range(N) for j in range(N)]
    orbits = []
    seen = set()
    for i, j in positions:
        if (i, j) in seen:
            continue
        m = (N - 1 - i, N - 1 - j)
        seen.add((i, j))
        seen.add(m)
        orbits.append(((i, j), m))
    out = []

    def fill(k, remaining, acc):
        if k == len(orbits):
            if remaining == 0:
                A = [[0] * N for _ in range(N)]
                for ((i, j), (mi, mj)), val in zip(orbits, acc):
                    A[i][j] = val
                    A[mi][mj] = val
                out.append(tuple(tuple(row) for row in A))
            return
        (pos, mirror) = orbits[k]
        weight = 1 if pos == mirror else 2
        for val in range(remaining // weight + 1):
            fill(k + 1, remaining - weight * val, acc + [val])

    fill(0, 2 * d, [])
    return tuple(sorted(out))


def margin_class(var: Variant, rv, cv):
    """All matrices with the given row and column margins, sorted."""
    rv, cv = tuple(rv), tuple(cv)
    return tuple(A for A in enum_matrices(var) if ro(A) == rv and co(A) == cv)


def hasse(var: Variant, matrices):
    """Covering pairs (A, B) of the closure order within one margin class."""
    ms = list(matrices)
    less = {
        (A, B)
        for A in ms
        for B in ms
        if A != B and leq(var, A, B)
    }
    covers = []
    for A, B in sorted(less):
        if not any((A, C) in less and (C, B) in less for C in ms):
            covers.append((A, B))
    return covers


def matrix_blocks(var: Variant, A) -> dict:
    """Row-major interval blocks of {1..2d} indexed by matrix position."""
    A = check_matrix(var, A)
    N = var.N
    out = {}
    start = 1
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            a = A[i - 1][j - 1]
            out[(i, j)] = tuple(range(start, start + a))
            start += a
    return out


def parabolic(var: Variant, v) -> ParabolicSpec:
    """Block stabilizer of a composition: symmetric groups on the first n
    blocks plus, for C_ODD, a hyperoctahedral factor on [1+bar(v)_n, d]."""
    v = check_composition(var, v)
    bars = partial_sums(v)
    d = var.d
    sym = [tuple(range(bars[i] + 1, bars[i + 1] + 1)) for i in range(var.n)]
    if var.kind == C_ODD:
        hyper = tuple(range(bars[var.n] + 1, d + 1))
    else:
        hyper = ()
    return ParabolicSpec.make(d, sym, hyper)


def parabolic_matrix(var: Variant, A) -> ParabolicSpec:
    """Block stabilizer of a matrix: symmetric groups on the row-major blocks
    before the central position plus, for C_ODD, a hyperoctahedral factor on
    the first-half part of the central block."""
    A = check_matrix(var, A)
    d = var.d
    blk = matrix_blocks(var, A)
    sym = []
    if var.kind == C_ODD:
        center = (var.n + 1, var.n + 1)
        for (i, j), b in blk.items():
            if (i, j) < center and b:
                sym.append(b)
        prefix = sum(A[i - 1][j - 1] for (i, j) in blk if (i, j) < center)
        hyper = tuple(range(prefix + 1, d + 1))
    else:
        for (i, j), b in blk.items():
            if b and b[-1] <= d:
                sym.append(b)
        hyper = ()
    return ParabolicSpec.make(d, sym, hyper)
