"""Signed-permutation action and coset symmetrization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqrep.exactring import (
    LaurentPoly,
    ParabolicSpec,
    QScalar,
    WeylElement,
    coset_symmetrize,
    weyl_act,
)
from iqrep.exactring.weyl import _coset_reps, _elements

coeffs = st.builds(
    QScalar,
    st.lists(st.integers(-4, 4), min_size=1, max_size=2).map(tuple),
    st.just((1,)),
)


def polys(nvars=3):
    exps = st.tuples(*[st.integers(-2, 2)] * nvars)
    return st.dictionaries(exps, coeffs, max_size=4).map(
        lambda t: LaurentPoly(nvars, t)
    )


def elements(d=3):
    perms = st.permutations(list(range(1, d + 1)))
    signs = st.tuples(*[st.sampled_from([1, -1])] * d)
    return st.builds(
        lambda p, s: WeylElement(tuple(x * e for x, e in zip(p, s))), perms, signs
    )


def test_action_basics():
    d = 2
    x1 = LaurentPoly.variable(0, d)
    x2 = LaurentPoly.variable(1, d)
    iota1 = WeylElement.sign_flip(d, 1)
    swap = WeylElement.transposition(d, 1, 2)
    assert weyl_act(iota1, x1) == x1.inv_var(0)
    assert weyl_act(swap, x1 * x2**2) == x2 * x1**2
    assert weyl_act(WeylElement.identity(d), x1 * x2) == x1 * x2


@settings(max_examples=300, deadline=None)
@given(elements(), elements(), polys())
def test_group_action_law(w1, w2, f):
    assert weyl_act(w1, weyl_act(w2, f)) == weyl_act(w1 * w2, f)


@settings(max_examples=100, deadline=None)
@given(elements())
def test_inverse(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


def test_generators_square_to_identity():
    d = 3
    for g in [
        WeylElement.transposition(d, 1, 2),
        WeylElement.transposition(d, 2, 3),
        WeylElement.sign_flip(d, 1),
        WeylElement.sign_flip(d, 3),
    ]:
        assert (g * g).is_identity()


def test_parabolic_orders():
    spec = ParabolicSpec.make(4, [(1, 2)], (3, 4))
    assert spec.order() == 2 * (2**2 * 2)
    assert len(_elements(spec)) == spec.order()
    assert ParabolicSpec.trivial(3).order() == 1


def test_parabolic_containment():
    full = ParabolicSpec.make(2, [], (1, 2))
    sub = ParabolicSpec.make(2, [(1,)], (2,))
    triv = ParabolicSpec.trivial(2)
    assert full.contains(sub)
    assert full.contains(triv)
    assert not sub.contains(full)
    # a symmetric block is allowed inside a hyperoctahedral block
    assert full.contains(ParabolicSpec.make(2, [(1, 2)], ()))
    # but sign flips need the hyperoctahedral block
    assert not ParabolicSpec.make(2, [(1, 2)], ()).contains(
        ParabolicSpec.make(2, [], (1,))
    )


def test_coset_symmetrize_orbit_sums():
    d = 2
    x1 = LaurentPoly.variable(0, d)
    x2 = LaurentPoly.variable(1, d)
    triv = ParabolicSpec.trivial(d)
    s12 = ParabolicSpec.make(d, [(1, 2)], ())
    assert coset_symmetrize(s12, triv, x1) == x1 + x2
    z2 = ParabolicSpec.make(1, [], (1,))
    y = LaurentPoly.variable(0, 1)
    assert coset_symmetrize(z2, ParabolicSpec.trivial(1), y) == y + y.inv_var(0)


def test_coset_symmetrize_four_term_representatives():
    # big group: sign flips and swap on {1,2}; small: symmetric on {1}, flips on {2}
    d = 2
    big = ParabolicSpec.make(d, [], (1, 2))
    small = ParabolicSpec.make(d, [(1,)], (2,))
    assert len(_coset_reps(big, small)) == 4
    x1 = LaurentPoly.variable(0, d)
    out = coset_symmetrize(big, small, x1)
    x2 = LaurentPoly.variable(1, d)
    assert out == x1 + x1.inv_var(0) + x2 + x2.inv_var(1)


def test_coset_symmetrize_preconditions():
    d = 2
    big = ParabolicSpec.make(d, [(1, 2)], ())
    small = ParabolicSpec.make(d, [], (1,))
    x1 = LaurentPoly.variable(0, d)
    with pytest.raises(ValueError):
        coset_symmetrize(big, small, x1)  # small not contained in big
    with pytest.raises(ValueError):
        # x1 is not invariant under the swap subgroup
        coset_symmetrize(big, big, x1)


@settings(max_examples=60, deadline=None)
@given(polys(2))
def test_symmetrized_output_is_invariant(f):
    big = ParabolicSpec.make(2, [], (1, 2))
    triv = ParabolicSpec.trivial(2)
    out = coset_symmetrize(big, triv, f)
    assert big.is_invariant(out)


def test_coset_counts_match_index():
    big = ParabolicSpec.make(3, [], (1, 2, 3))
    small = ParabolicSpec.make(3, [(1, 2)], (3,))
    reps = _coset_reps(big, small)
    assert len(reps) == big.order() // small.order()
    # representatives hit pairwise distinct cosets and cover the group
    smalls = _elements(small)
    seen = set()
    for g in reps:
        coset = frozenset((g * h).images for h in smalls)
        assert coset not in seen
        seen.add(coset)
    assert sum(len(c) for c in seen) == big.order()
