"""The polynomial representation: module elements over the composition set,
and the K / Theta / B / H operators for both variants.

A module element assigns to finitely many compositions v a Laurent polynomial
invariant under the block stabilizer of v.  K and Theta (and H) act by
componentwise multiplication; B shifts components and is assembled from
theta-factor products and block-shift substitutions, with the rational
intermediates required to cancel to honest Laurent polynomials.
"""

from __future__ import annotations

from functools import lru_cache

from .combinat import (
    C_ODD,
    D_EVEN,
    Variant,
    blocks,
    check_composition,
    enum_compositions,
    listing,
    parabolic,
    partial_sums,
    tau_plus,
)
from .exactring import (
    DenominatorError,
    LaurentPoly,
    RatFn,
    QScalar,
    QONE,
    divide_exact,
    expand_series,
    phi_product,
    q_integer,
    q_power,
    resolve_index,
    render_laurent,
    weyl_act,
    xvar,
)

# Contract checks on B inputs/outputs (invariance, denominator cancellation).
# Left on by default; the relation checker keeps them on and counts them.
CHECK_INVARIANCE = True


class InvarianceError(ValueError):
    """A component is not invariant under its block stabilizer."""


class ModuleElement:
    """Finitely supported map from compositions to invariant Laurent
    polynomials."""

    __slots__ = ("variant", "components", "_hash")

    def __init__(self, variant: Variant, components=None, *, _clean=False):
        self.variant = variant
        comps = {} if components is None else components
        if not _clean:
            comps = {
                check_composition(variant, v): f
                for v, f in comps.items()
                if not f.is_zero()
            }
        self.components = comps
        self._hash = None

    @classmethod
    def zero(cls, variant: Variant) -> "ModuleElement":
        return cls(variant, {}, _clean=True)

    @classmethod
    def vector(cls, variant: Variant, v, f: LaurentPoly) -> "ModuleElement":
        v = check_composition(variant, v)
        if f.is_zero():
            return cls.zero(variant)
        return cls(variant, {v: f}, _clean=True)

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.variant == other.variant and self.components == other.components

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(
                (self.variant, frozenset(self.components.items()))
            )
        return h

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        out = dict(self.components)
        for v, f in other.components.items():
            cur = out.get(v)
            if cur is None:
                out[v] = f
            else:
                s = cur + f
                if s.is_zero():
                    del out[v]
                else:
                    out[v] = s
        return ModuleElement(self.variant, out, _clean=True)

    def __neg__(self):
        return ModuleElement(
            self.variant,
            {v: -f for v, f in self.components.items()},
            _clean=True,
        )

    def __sub__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: QScalar) -> "ModuleElement":
        if c.is_zero():
            return ModuleElement.zero(self.variant)
        if c.is_one():
            return self
        return ModuleElement(
            self.variant,
            {v: f.scale(c) for v, f in self.components.items()},
            _clean=True,
        )

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for v in sorted(self.components):
            parts.append(f"[{','.join(map(str, v))}] {render_laurent(self.components[v])}")
        return "; ".join(parts)

    def __repr__(self):
        return f"ModuleElement({self.render()})"


def is_component_invariant(var: Variant, v, f: LaurentPoly) -> bool:
    return parabolic(var, v).is_invariant(f)


# -- K operators ------------------------------------------------------------


def k_scalar(var: Variant, i: int, v) -> QScalar:
    """Componentwise scalar of the i-th K operator."""
    v = check_composition(var, v)
    if not 1 <= i <= var.N - 1:
        raise ValueError(f"generator index {i} outside [1, {var.N - 1}]")
    if var.kind == C_ODD:
        return q_power(-v[i - 1] + v[i] + (1 if i == var.n else 0))
    scal = q_power(v[i] - v[i - 1])
    if i == var.n:
        scal = scal * (-q_power(1))
    return scal


def apply_K(var: Variant, i: int, e: ModuleElement) -> ModuleElement:
    return ModuleElement(
        var,
        {v: f.scale(k_scalar(var, i, v)) for v, f in e.components.items()},
        _clean=True,
    )


def apply_Kinv(var: Variant, i: int, e: ModuleElement) -> ModuleElement:
    return ModuleElement(
        var,
        {
            v: f.scale(k_scalar(var, i, v).inverse())
            for v, f in e.components.items()
        },
        _clean=True,
    )


# -- Theta operators ---------------------------------------------------------


@lru_cache(maxsize=None)
def theta_ratfn(var: Variant, i: int, v) -> RatFn:
    """The componentwise generating rational function of the Theta operators,
    in one trailing series variable z; its expansion at z = 0 has constant
    term 1."""
    v = check_composition(var, v)
    if not 1 <= i <= var.N - 1:
        raise ValueError(f"generator index {i} outside [1, {var.N - 1}]")
    d, n = var.d, var.n
    nv = d + 1
    I = blocks(var, v)
    z = RatFn(LaurentPoly.variable(d, nv))
    zinv = z.reciprocal()

    def qc(k: int) -> RatFn:
        return RatFn(LaurentPoly.const(nv, q_power(k)))

    out = RatFn(LaurentPoly.const(nv, q_power(v[i] - v[i - 1])))
    out = out * phi_product(I[i - 1], qc(1 - i) * zinv, d)
    out = out / phi_product(I[i], qc(-1 - i) * zinv, d)
    if var.kind == C_ODD and i == n + 1:
        one = LaurentPoly.one(nv)
        z2 = LaurentPoly.variable(d, nv, 2)
        out = out * RatFn(
            one - z2.scale(q_power(2 * n)), one - z2.scale(q_power(2 * n + 2))
        )
    if var.kind == D_EVEN and i == n:
        from .exactring import theta_factor

        z2 = RatFn(LaurentPoly.variable(d, nv, 2))
        out = out * theta_factor(1, z2.scale(q_power(2 * n - 1))).scale(q_power(1))
    return out


@lru_cache(maxsize=None)
def _theta_series(var: Variant, i: int, v, order: int):
    return tuple(expand_series(theta_ratfn(var, i, v), "zero", order))


@lru_cache(maxsize=None)
def theta_multiplier(var: Variant, i: int, m: int, v) -> LaurentPoly:
    """Componentwise multiplier of Theta_{i,m}: the z^m series coefficient of
    the generating function, divided by (q - q^-1)."""
    if m < 1:
        raise ValueError("Theta modes are indexed by m >= 1")
    coeff = _theta_series(var, i, v, m)[m]
    return coeff.scale((q_power(1) - q_power(-1)).inverse())


def apply_theta(var: Variant, i: int, m: int, e: ModuleElement) -> ModuleElement:
    out = {}
    for v, f in e.components.items():
        g = theta_multiplier(var, i, m, v) * f
        if not g.is_zero():
            out[v] = g
    return ModuleElement(var, out, _clean=True)


# -- H operators (odd case only) ----------------------------------------------


@lru_cache(maxsize=None)
def h_multiplier(var: Variant, i: int, k: int, v) -> LaurentPoly:
    """Componentwise multiplier of the k-th logarithmic mode H_{i,k}."""
    if var.kind != C_ODD:
        raise ValueError("H operators are defined for the odd variant only")
    if k < 1:
        raise ValueError("H modes are indexed by k >= 1")
    v = check_composition(var, v)
    d, n = var.d, var.n
    I = blocks(var, v)
    acc = LaurentPoly.zero(d)
    for j in I[i - 1]:
        acc = acc + xvar(j, d, power=k)
    for j in I[i]:
        acc = acc - xvar(j, d, power=k).scale(q_power(2 * k))
    inv_k = QScalar(1, k)
    mult = acc.scale(inv_k * q_integer(k) * q_power((i - 1) * k))
    if i == n + 1 and k % 2 == 0:
        c = (q_power((2 * n + 2) * k) - q_power(2 * n * k)) * inv_k
        c = c * (q_power(1) - q_power(-1)).inverse()
        mult = mult + LaurentPoly.const(d, c)
    return mult


def apply_H(var: Variant, i: int, k: int, e: ModuleElement) -> ModuleElement:
    out = {}
    for v, f in e.components.items():
        g = h_multiplier(var, i, k, v) * f
        if not g.is_zero():
            out[v] = g
    return ModuleElement(var, out, _clean=True)


# -- B operators ---------------------------------------------------------------


def b_source(var: Variant, i: int, v):
    """The source composition v' feeding the v-component through B_i."""
    v = check_composition(var, v)
    N = var.N
    ti = var.tau(i)
    out = list(v)
    out[i - 1] -= 1
    out[i] += 1
    out[ti - 1] += 1
    out[ti] -= 1
    if min(out) < 0:
        return None
    return tuple(out)


def b_target(var: Variant, i: int, u):
    """The composition receiving the u-component under B_i (inverse of
    b_source), or None when it leaves the composition set."""
    u = check_composition(var, u)
    ti = var.tau(i)
    out = list(u)
    out[i - 1] += 1
    out[i] -= 1
    out[ti - 1] -= 1
    out[ti] += 1
    if min(out) < 0:
        return None
    return tuple(out)


@lru_cache(maxsize=None)
def _shift_images(var: Variant, v, j: int):
    """Signed substitution images realizing f(x_{tau_j^+ [v]}) for f written
    in the standard listing of the source blocks."""
    d = var.d
    I = blocks(var, v)
    target_listing = listing(tau_plus(var, I, j))
    images = []
    for p in range(1, d + 1):
        idx, sign = resolve_index(target_listing[p - 1], d)
        images.append(sign * (idx + 1))
    return tuple(images)


@lru_cache(maxsize=None)
def _b_block_data(var: Variant, v, i: int):
    """Per-index numerators and the common denominator of the theta-factor
    products over the i-th block of v.

    With X_j the resolved coordinate monomials of the block, the j-th summand
    of the shift operator carries prod_{t != j} (q^2 X_j - X_t) over
    prod_{t != j} (X_j - X_t) (times q^{1-v_i}); putting every summand over
    the Vandermonde product V = prod_{t<u} (X_t - X_u) multiplies the j-th
    numerator by the complementary pair product and a position sign.
    """
    d = var.d
    blk = blocks(var, v)[i - 1]
    xs = [xvar(t, d) for t in blk]
    m = len(xs)
    V = LaurentPoly.one(d)
    for a in range(m):
        for b in range(a + 1, m):
            V = V * (xs[a] - xs[b])
    per_j = []
    q2 = q_power(2)
    for pos, j in enumerate(blk):
        num = LaurentPoly.one(d)
        for t in range(m):
            if t != pos:
                num = num * (xs[pos].scale(q2) - xs[t])
        comp = LaurentPoly.one(d)
        for a in range(m):
            for b in range(a + 1, m):
                if a != pos and b != pos:
                    comp = comp * (xs[a] - xs[b])
        sign = QScalar(-1) ** pos
        per_j.append((j, xs[pos], (num * comp).scale(sign)))
    scale = q_power(-(m - 1))
    return tuple(per_j), V, scale


@lru_cache(maxsize=None)
def _b_line(var: Variant, i: int, u, f: LaurentPoly):
    """Shared r-independent data of B_i on the component (u, f): the target
    composition, one numerator polynomial per block index (substituted input
    against its theta-factor numerator), the common denominator, and the
    overall scalar."""
    v = b_target(var, i, u)
    if v is None:
        return None
    per_j, V, scale = _b_block_data(var, v, i)
    terms = tuple(
        (xj, num * f.substitute_signed(_shift_images(var, v, j)))
        for j, xj, num in per_j
    )
    return v, terms, V, scale


def apply_B(var: Variant, i: int, r: int, e: ModuleElement) -> ModuleElement:
    """The r-th shift operator B_{i,r}; components landing outside the
    composition set contribute zero."""
    if not 1 <= i <= var.N - 1:
        raise ValueError(f"generator index {i} outside [1, {var.N - 1}]")
    out = ModuleElement.zero(var)
    for u, f in e.components.items():
        if CHECK_INVARIANCE and not is_component_invariant(var, u, f):
            raise InvarianceError(
                f"input component at {u} is not invariant under its stabilizer"
            )
        line = _b_line(var, i, u, f)
        if line is None:
            continue
        v, terms, V, scale = line
        acc = LaurentPoly.zero(var.d)
        for xj, num in terms:
            acc = acc + (xj**r) * num
        poly = divide_exact(acc, V)
        if poly is None:
            raise DenominatorError(
                f"B_{i},{r} on component {u}: denominator does not cancel"
            )
        poly = poly.scale(scale)
        if CHECK_INVARIANCE and not is_component_invariant(var, v, poly):
            raise InvarianceError(
                f"B_{i},{r} output at {v} is not invariant under its stabilizer"
            )
        out = out + ModuleElement.vector(var, v, poly)
    return out


# -- spanning vectors -----------------------------------------------------------


@lru_cache(maxsize=None)
def spanning_set(var: Variant, v, degree_bound: int):
    """Orbit sums of bounded-exponent monomials under the block stabilizer:
    a deterministic spanning family of the invariant ring up to that degree."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    v = check_composition(var, v)
    d = var.d
    group = parabolic(var, v)
    from .exactring.weyl import _elements

    elems = _elements(group)
    out = {}
    import itertools as _it

    for exps in _it.product(range(-degree_bound, degree_bound + 1), repeat=d):
        orbit = set()
        for w in elems:
            ne = [0] * d
            for k, ek in enumerate(exps):
                img = w.images[k]
                if img > 0:
                    ne[img - 1] += ek
                else:
                    ne[-img - 1] -= ek
            orbit.add(tuple(ne))
        key = tuple(sorted(orbit))
        if key not in out:
            poly = LaurentPoly(d, {e: QONE for e in orbit}, _clean=True)
            out[key] = poly
    return tuple(out[k] for k in sorted(out))


def spanning_vectors(var: Variant, degree_bound: int):
    """All (vector id, element) pairs over every composition, deterministically
    ordered; ids are "<composition>#<index>"."""
    out = []
    for v in enum_compositions(var):
        for idx, f in enumerate(spanning_set(var, v, degree_bound)):
            vid = ",".join(map(str, v)) + f"#{idx}"
            out.append((vid, ModuleElement.vector(var, v, f)))
    return out
