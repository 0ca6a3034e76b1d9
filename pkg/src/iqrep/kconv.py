"""Closed-orbit convolution data: relative cotangent classes, B-classes, and
the pushforward recipe that must reproduce the combinatorial B operators.

For a target composition v with v_i >= 1, the associated closed orbit is the
matrix diag(v - e_i - e_{tau(i)+1}) + E_{i,i+1} + E_{tau(i)+1,tau(i)}.  Its
relative cotangent class along the first projection is a short list of
monomials in closed form; convolution against the B-class (determinant of the
cotangent class twisted by a power of the tautological line coordinate) is a
coset-symmetrized rational expression whose denominators must cancel exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinat import (
    C_ODD,
    D_EVEN,
    Variant,
    blocks,
    check_composition,
    co,
    e_theta,
    matrix_blocks,
    parabolic,
    parabolic_matrix,
    partial_sums,
)
from .exactring import (
    DenominatorError,
    LaurentPoly,
    QScalar,
    RatFn,
    coset_symmetrize,
    q_power,
    resolve_index,
    weyl_act,
    xvar,
)
from .polyrep import ModuleElement, b_source, is_component_invariant


@dataclass(frozen=True)
class ClosedOrbitDatum:
    """Closed-orbit geometry attached to (variant, i, target composition)."""

    variant: Variant
    i: int
    v: tuple
    source: tuple
    matrix: tuple
    rel_cotangent: tuple  # monomial list of the relative cotangent class
    line_coord: LaurentPoly  # coordinate of the tautological line
    prefactor: QScalar  # (-q)^(1 - v_i)


def orbit_datum(var: Variant, i: int, v) -> ClosedOrbitDatum:
    v = check_composition(var, v)
    if not 1 <= i <= var.N - 1:
        raise ValueError(f"generator index {i} outside [1, {var.N - 1}]")
    if v[i - 1] < 1:
        raise ValueError(f"empty orbit: composition has v_{i} = 0")
    d, n = var.d, var.n
    ti = var.tau(i)
    v2 = list(v)
    v2[i - 1] -= 1
    v2[ti] -= 1  # tau(i)+1, 1-based
    if min(v2) < 0:
        raise ValueError("composition does not admit the closed orbit")
    E = e_theta(var, i, i + 1, tuple(v2), 1)
    bars = partial_sums(v)
    if var.kind == C_ODD and i == n + 1:
        # fiber coordinates x_{bar(v)_n + 1} / x_t over the middle block
        base = bars[n] + 1
        cot = tuple(
            xvar(base, d) * xvar(t, d, power=-1)
            for t in range(base + 1, bars[n + 1] + 1)
        )
        line = xvar(bars[n + 1], d)
    else:
        top = bars[i]
        cot = tuple(
            xvar(t, d) * xvar(top, d, power=-1)
            for t in range(bars[i - 1] + 1, top)
        )
        line = xvar(top, d)
    pref = (-q_power(1)) ** (1 - v[i - 1])
    src = b_source(var, i, v)
    assert src is not None and src == co(E)
    return ClosedOrbitDatum(var, i, v, src, E, cot, line, pref)


@lru_cache(maxsize=None)
def _column_images(var: Variant, E) -> tuple:
    """Signed substitution realizing the second-projection pullback: position
    p of the source listing receives the p-th entry of the column-major block
    listing of the orbit matrix."""
    d = var.d
    blk = matrix_blocks(var, E)
    N = var.N
    col_listing = []
    for j in range(1, N + 1):
        for i in range(1, N + 1):
            col_listing.extend(blk[(i, j)])
    images = []
    for p in range(1, d + 1):
        idx, sign = resolve_index(col_listing[p - 1], d)
        images.append(sign * (idx + 1))
    return tuple(images)


def bclass_value(datum: ClosedOrbitDatum, r: int) -> LaurentPoly:
    """Det of the relative cotangent class times the r-th power of the line
    coordinate."""
    out = datum.line_coord**r
    for mu in datum.rel_cotangent:
        out = out * mu
    return out


def convolve_closed(datum: ClosedOrbitDatum, r: int, f: LaurentPoly) -> LaurentPoly:
    """Pushforward along the closed orbit: prefactor times the coset sum of

        wedge_{q^2}(T) * pullback(f) * Det(T*) * line^r / wedge(T*),

    where both wedge factors are finite products over the cotangent monomials.
    """
    var = datum.variant
    d = var.d
    if not is_component_invariant(var, datum.source, f):
        raise ValueError("input is not invariant under the source stabilizer")
    one = LaurentPoly.one(d)
    core = RatFn(f.substitute_signed(_column_images(var, datum.matrix)))
    core = core * RatFn(bclass_value(datum, r))
    for mu in datum.rel_cotangent:
        # wedge_{q^2} of the tangent class: (1 - q^2 mu^{-1}) per monomial
        core = core * RatFn(one - (mu**-1).scale(q_power(2)))
        core = core / RatFn(one - mu)
    big = parabolic(var, datum.v)
    small = parabolic_matrix(var, datum.matrix)
    summed = coset_symmetrize(big, small, core)
    result = summed.as_laurent().scale(datum.prefactor)
    if not is_component_invariant(var, datum.v, result):
        raise ValueError("convolution output failed the invariance check")
    return result


def convolve_element(datum: ClosedOrbitDatum, r: int, e: ModuleElement) -> ModuleElement:
    """Convolution on a module element: only the source component moves."""
    f = e.components.get(datum.source)
    if f is None:
        return ModuleElement.zero(datum.variant)
    return ModuleElement.vector(
        datum.variant, datum.v, convolve_closed(datum, r, f)
    )


def bclass_monomial_form(var: Variant, i: int, v, k: int):
    """The B-class of the middle-index orbit rewritten as a pure power of one
    coordinate, reported together with the reading that reproduces it.

    The closed form leaves the mirror identification's orientation implicit,
    so the candidate monomial is compared against the mechanically computed
    class under both orientations of the coordinate ("mirror" resolves the
    large index through the inverse, "direct" through the identity), first
    with the stated exponent k + v_mid ("as-written") and then with the
    determinant factor oriented oppositely, i.e. exponent k - v_mid
    ("det-flipped").  The convolution/operator agreement pins the class value
    itself; the reading label records which bookkeeping matches it.
    """
    if var.kind != C_ODD:
        raise ValueError("the monomial form is stated for the odd variant")
    n, d = var.n, var.d
    if i != n + 1:
        raise ValueError("the monomial form concerns the middle index only")
    v = check_composition(var, v)
    if v[n] < 1:
        raise ValueError("middle entry must be positive")
    datum = orbit_datum(var, i, v)
    value = bclass_value(datum, k)
    bars = partial_sums(v)
    vmid = v[n]
    candidates = [
        ("as-written/mirror", xvar(bars[n + 1], d, power=k + vmid)),
        ("as-written/direct", xvar(bars[n + 1], d, power=-(k + vmid))),
        ("det-flipped/mirror", xvar(bars[n + 1], d, power=k - vmid)),
        ("det-flipped/direct", xvar(bars[n + 1], d, power=-(k - vmid))),
    ]
    for reading, cand in candidates:
        if value == cand:
            return value, reading
    raise ArithmeticError(
        "no orientation reading of the stated monomial matches the B-class value"
    )


def crosscheck_cases(var: Variant):
    """All (i, v) with a nonempty closed orbit for this variant."""
    from .combinat import enum_compositions

    out = []
    for v in enum_compositions(var):
        for i in range(1, var.N):
            if v[i - 1] >= 1:
                out.append((i, v))
    return out


def crosscheck_suite(var: Variant, r_window: int = 2, degree_bound: int = 3):
    """Compare the convolution pushforward against the shift operator on full
    spanning sets, for every orbit case and every twist in the window.

    Returns (entries, comparisons): one entry per (i, v, r) with a pass/fail
    status, and the total number of vector-level comparisons performed.
    """
    from .polyrep import apply_B, spanning_set

    entries = []
    comparisons = 0
    for i, v in crosscheck_cases(var):
        datum = orbit_datum(var, i, v)
        vectors = spanning_set(var, datum.source, degree_bound)
        for r in range(-r_window, r_window + 1):
            status = "pass"
            witness = ""
            for idx, f in enumerate(vectors):
                comparisons += 1
                elem = ModuleElement.vector(var, datum.source, f)
                geo = convolve_element(datum, r, elem)
                alg = apply_B(var, i, r, elem)
                if geo != alg:
                    status = "fail"
                    witness = (
                        f"vector {idx}: convolution {geo.render()} "
                        f"!= operator {alg.render()}"
                    )
                    break
            entries.append(
                {
                    "variant": var.kind,
                    "n": var.n,
                    "d": var.d,
                    "i": i,
                    "v": list(v),
                    "r": r,
                    "vectors": len(vectors),
                    "status": status,
                    **({"witness": witness} if witness else {}),
                }
            )
    return entries, comparisons
