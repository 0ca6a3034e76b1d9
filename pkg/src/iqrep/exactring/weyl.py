"""Signed permutations acting on Laurent polynomials, and coset sums.

The hyperoctahedral group of rank d acts on x_1..x_d: a permutation sigma
sends f(x_1,...,x_d) to f(x_{sigma(1)},...,x_{sigma(d)}), and the sign flip
iota_m inverts the m-th variable.  Parabolic subgroups are described by
disjoint index blocks: plain symmetric blocks permute their variables, the
(single, possibly empty) hyperoctahedral block also flips signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, RatFn


class WeylElement:
    """A signed permutation of {1..d}.

    ``images[k]`` is the signed, 1-based image of k+1: the element sends the
    variable in slot k+1 to x_{|images[k]|}, inverted when images[k] < 0.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @classmethod
    def identity(cls, d: int) -> "WeylElement":
        return cls(range(1, d + 1))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "WeylElement":
        im = list(range(1, d + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @classmethod
    def sign_flip(cls, d: int, m: int) -> "WeylElement":
        im = list(range(1, d + 1))
        im[m - 1] = -m
        return cls(im)

    @property
    def d(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.d + 1))

    def apply_signed(self, s: int) -> int:
        t = self.images[abs(s) - 1]
        return t if s > 0 else -t

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other: (self*other)(k) = self(other(k))."""
        return WeylElement(self.apply_signed(s) for s in other.images)

    def inverse(self) -> "WeylElement":
        im = [0] * self.d
        for k, s in enumerate(self.images, start=1):
            if s > 0:
                im[s - 1] = k
            else:
                im[-s - 1] = -k
        return WeylElement(im)

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"WeylElement({self.images})"


def weyl_act(w: WeylElement, f):
    """Act by a signed permutation on a LaurentPoly or RatFn."""
    if isinstance(f, RatFn):
        if w.d != f.nvars:
            raise ValueError("dimension mismatch between group element and function")
        return f.substitute_signed(w.images)
    if w.d != f.nvars:
        raise ValueError("dimension mismatch between group element and function")
    return f.substitute_signed(w.images)


@dataclass(frozen=True)
class ParabolicSpec:
    """Disjoint blocks in {1..d}: symmetric-group blocks plus one
    hyperoctahedral block (possibly empty)."""

    d: int
    sym_blocks: tuple
    hyper_block: tuple

    @classmethod
    def make(cls, d: int, sym_blocks, hyper_block=()) -> "ParabolicSpec":
        sym = tuple(
            sorted(tuple(sorted(b)) for b in sym_blocks if len(b) > 0)
        )
        hyp = tuple(sorted(hyper_block))
        seen: set = set()
        for b in sym + (hyp,):
            for i in b:
                if not 1 <= i <= d:
                    raise ValueError(f"block index {i} outside [1, {d}]")
                if i in seen:
                    raise ValueError("blocks are not disjoint")
                seen.add(i)
        return cls(d, sym, hyp)

    @classmethod
    def trivial(cls, d: int) -> "ParabolicSpec":
        return cls.make(d, ())

    def generators(self):
        """Adjacent transpositions per block, plus sign flips on the
        hyperoctahedral block."""
        gens = []
        for b in self.sym_blocks:
            for i, j in zip(b, b[1:]):
                gens.append(WeylElement.transposition(self.d, i, j))
        for i, j in zip(self.hyper_block, self.hyper_block[1:]):
            gens.append(WeylElement.transposition(self.d, i, j))
        for m in self.hyper_block:
            gens.append(WeylElement.sign_flip(self.d, m))
        return gens

    def order(self) -> int:
        from math import factorial

        n = 1
        for b in self.sym_blocks:
            n *= factorial(len(b))
        h = len(self.hyper_block)
        n *= 2**h * factorial(h)
        return n

    def contains(self, other: "ParabolicSpec") -> bool:
        """Blockwise refinement: every block of ``other`` sits inside one of
        ours (sign flips only inside our hyperoctahedral block)."""
        if self.d != other.d:
            return False
        mine = [set(b) for b in self.sym_blocks]
        hyp = set(self.hyper_block)
        for b in other.sym_blocks:
            sb = set(b)
            if not any(sb <= m for m in mine) and not sb <= hyp:
                return False
        return set(other.hyper_block) <= hyp

    def is_invariant(self, f) -> bool:
        return all(weyl_act(g, f) == f for g in self.generators())


@lru_cache(maxsize=None)
def _elements(spec: ParabolicSpec):
    """All group elements of a parabolic subgroup, by closure from generators."""
    gens = spec.generators()
    seen = {WeylElement.identity(spec.d)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                h = g * w
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: w.images))


@lru_cache(maxsize=None)
def _coset_reps(big: ParabolicSpec, small: ParabolicSpec):
    """Deterministic representatives for the left cosets big/small."""
    small_elems = _elements(small)
    reps = {}
    for g in _elements(big):
        key = min((g * h).images for h in small_elems)
        cur = reps.get(key)
        if cur is None or g.images < cur.images:
            reps[key] = g
    return tuple(sorted(reps.values(), key=lambda w: w.images))


def coset_symmetrize(big: ParabolicSpec, small: ParabolicSpec, f):
    """Sum sigma(f) over left-coset representatives of small in big.

    Requires small <= big blockwise and f invariant under small; the result
    is then invariant under big and independent of the chosen representatives.
    """
    if not big.contains(small):
        raise ValueError("first parabolic does not contain the second")
    if not small.is_invariant(f):
        raise ValueError("input is not invariant under the smaller parabolic")
    reps = _coset_reps(big, small)
    acc = weyl_act(reps[0], f)
    for g in reps[1:]:
        acc = acc + weyl_act(g, f)
    return acc
