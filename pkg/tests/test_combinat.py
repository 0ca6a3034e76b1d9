"""Compositions, block partitions, matrices, and the closure order, checked
against brute-force enumeration oracles."""

import itertools

import pytest

from iqrep.combinat import (
    Variant,
    blocks,
    check_mirror,
    co,
    e_theta,
    enum_compositions,
    enum_matrices,
    hasse,
    leq,
    listing,
    margin_class,
    parabolic,
    parabolic_matrix,
    ro,
    tau_plus,
)


def brute_compositions(N, d, odd):
    """Independent oracle: filter the full integer grid."""
    out = set()
    for v in itertools.product(range(2 * d + 1), repeat=N):
        if sum(v) != 2 * d:
            continue
        if any(v[i] != v[N - 1 - i] for i in range(N)):
            continue
        out.add(v)
    return out


@pytest.mark.parametrize(
    "kind,n,d",
    [("c-odd", 1, 1), ("c-odd", 1, 2), ("c-odd", 2, 2), ("d-even", 1, 1), ("d-even", 2, 2)],
)
def test_enum_compositions_against_bruteforce(kind, n, d):
    var = Variant(kind, n, d)
    assert set(enum_compositions(var)) == brute_compositions(var.N, d, kind == "c-odd")


def test_enum_composition_examples():
    assert set(enum_compositions(Variant("c-odd", 1, 1))) == {(1, 0, 1), (0, 2, 0)}
    assert set(enum_compositions(Variant("c-odd", 1, 2))) == {
        (2, 0, 2),
        (1, 2, 1),
        (0, 4, 0),
    }
    assert set(enum_compositions(Variant("d-even", 1, 1))) == {(1, 1)}


def test_blocks_examples():
    var = Variant("c-odd", 1, 2)
    assert blocks(var, (1, 2, 1)) == ((1,), (2, 3), (4,))
    assert blocks(var, (0, 4, 0)) == ((), (1, 2, 3, 4), ())
    var1 = Variant("c-odd", 1, 1)
    assert blocks(var1, (1, 0, 1)) == ((1,), (), (2,))


def test_blocks_partition_and_mirror_property():
    for kind, n, d in [("c-odd", 1, 2), ("c-odd", 2, 2), ("d-even", 2, 2)]:
        var = Variant(kind, n, d)
        for v in enum_compositions(var):
            I = blocks(var, v)
            assert check_mirror(var, I)
            assert sorted(itertools.chain.from_iterable(I)) == list(
                range(1, 2 * d + 1)
            )


def test_tau_plus_paper_listing_example():
    # three blocks of size two: shifting the first index reorders the listing
    var = Variant("c-odd", 1, 3)
    I = ((1, 2), (3, 4), (5, 6))
    J = tau_plus(var, I, 1)
    assert listing(J) == (2, 1, 3, 4, 6, 5)


def test_tau_plus_small_example():
    var = Variant("c-odd", 1, 1)
    I = ((1,), (), (2,))
    assert tau_plus(var, I, 1) == ((), (1, 2), ())


def test_tau_plus_errors():
    var = Variant("c-odd", 1, 1)
    I = ((1,), (), (2,))
    with pytest.raises(ValueError):
        tau_plus(var, I, 2)  # in the last block
    with pytest.raises(ValueError):
        tau_plus(var, I, 7)  # absent


def test_tau_plus_preserves_mirror_exhaustively():
    for kind, n, d in [("c-odd", 1, 3), ("c-odd", 2, 2), ("d-even", 2, 3)]:
        var = Variant(kind, n, d)
        for v in enum_compositions(var):
            I = blocks(var, v)
            for s, blk in enumerate(I[:-1], start=1):
                for r in blk:
                    assert check_mirror(var, tau_plus(var, I, r))


def test_tau_plus_twice_at_middle():
    var = Variant("c-odd", 1, 2)
    I = blocks(var, (0, 4, 0))
    J = tau_plus(var, I, 1)
    assert check_mirror(var, J)
    K = tau_plus(var, J, 2)
    assert check_mirror(var, K)


def test_e_theta_example():
    var = Variant("c-odd", 1, 1)
    A = e_theta(var, 1, 2, (0, 0, 0), 1)
    assert A == ((0, 1, 0), (0, 0, 0), (0, 1, 0))
    assert ro(A) == (1, 0, 1)
    assert co(A) == (0, 2, 0)


def test_e_theta_mirror_pair_coincidence():
    # E^theta_{ij} = E^theta_{tau i + 1, tau j + 1}
    var = Variant("c-odd", 2, 2)
    N = var.N
    z = (0,) * N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ti, tj = N - i + 1, N - j + 1
            assert e_theta(var, i, j, z, 1) == e_theta(var, ti, tj, z, 1)


def test_e_theta_margins():
    # ro = v'' + e_i + e_{tau i + 1}, co = v'' + e_{i+1} + e_{tau i}
    for kind, n, d in [("c-odd", 1, 2), ("c-odd", 2, 2), ("d-even", 2, 2)]:
        var = Variant(kind, n, d)
        N = var.N
        for v2 in enum_compositions(Variant(kind, n, d - 1)) if d > 1 else [(0,) * N]:
            for i in range(1, N):
                A = e_theta(var, i, i + 1, v2, 1)
                expect_ro = list(v2)
                expect_ro[i - 1] += 1
                expect_ro[N - i] += 1
                expect_co = list(v2)
                expect_co[i] += 1
                expect_co[N - i - 1] += 1
                assert ro(A) == tuple(expect_ro)
                assert co(A) == tuple(expect_co)


def test_leq_chain_example():
    # margins (1,2,1)/(1,2,1): three matrices forming a chain
    var = Variant("c-odd", 1, 2)
    diag = ((1, 0, 0), (0, 2, 0), (0, 0, 1))
    mid = ((0, 1, 0), (1, 0, 1), (0, 1, 0))
    anti = ((0, 0, 1), (0, 2, 0), (1, 0, 0))
    cls = margin_class(var, (1, 2, 1), (1, 2, 1))
    assert set(cls) == {diag, mid, anti}
    assert leq(var, diag, mid) and leq(var, mid, anti) and leq(var, diag, anti)
    assert not leq(var, mid, diag)
    assert not leq(var, anti, mid)


def test_leq_reflexive():
    var = Variant("c-odd", 1, 2)
    for A in enum_matrices(var):
        assert leq(var, A, A)


def test_leq_requires_margins():
    var = Variant("c-odd", 1, 1)
    A = ((1, 0, 0), (0, 0, 0), (0, 0, 1))
    B = ((0, 1, 0), (0, 0, 0), (0, 1, 0))
    assert not leq(var, A, B)


def test_d_even_parity_incomparable():
    var = Variant("d-even", 1, 1)
    A = ((1, 0), (0, 1))
    B = ((0, 1), (1, 0))
    assert not leq(var, A, B)
    assert not leq(var, B, A)
    # without the parity condition the corner sums would order them
    var_c = Variant("c-odd", 1, 1)  # same d; reuse the corner-sum logic at N=3
    # direct corner-sum comparison for the 2x2 case:
    assert sum(A[r][s] for r in range(1) for s in range(1, 2)) <= sum(
        B[r][s] for r in range(1) for s in range(1, 2)
    )


@pytest.mark.parametrize("kind,n,d", [("c-odd", 1, 2), ("c-odd", 2, 2)])
def test_partial_order_axioms_on_margin_classes(kind, n, d):
    var = Variant(kind, n, d)
    for rv in enum_compositions(var):
        for cv in enum_compositions(var):
            cls = margin_class(var, rv, cv)
            for A in cls:
                assert leq(var, A, A)
            for A in cls:
                for B in cls:
                    if leq(var, A, B) and leq(var, B, A):
                        assert A == B
                    for C in cls:
                        if leq(var, A, B) and leq(var, B, C):
                            assert leq(var, A, C)


def test_diag_minimal_and_e_theta_minimal():
    for kind, n, d in [("c-odd", 1, 2), ("c-odd", 2, 2), ("d-even", 2, 2)]:
        var = Variant(kind, n, d)
        N = var.N
        for v in enum_compositions(var):
            diag = tuple(
                tuple(v[i] if i == j else 0 for j in range(N)) for i in range(N)
            )
            for A in margin_class(var, v, v):
                if A != diag:
                    assert not leq(var, A, diag)
        smaller = Variant(kind, n, d - 1)
        for v2 in enum_compositions(smaller):
            for i in range(1, N):
                E = e_theta(var, i, i + 1, v2, 1)
                for A in margin_class(var, ro(E), co(E)):
                    if A != E:
                        assert not leq(var, A, E)


def test_hasse_is_reduced():
    var = Variant("c-odd", 1, 2)
    cls = margin_class(var, (1, 2, 1), (1, 2, 1))
    edges = hasse(var, cls)
    # the 3-chain reduces to 2 covering pairs
    assert len(edges) == 2


def test_parabolic_examples():
    var = Variant("c-odd", 1, 1)
    p = parabolic(var, (0, 2, 0))
    assert p.sym_blocks == () and p.hyper_block == (1,)
    p = parabolic(var, (1, 0, 1))
    assert p.sym_blocks == ((1,),) and p.hyper_block == ()
    pd = parabolic(Variant("d-even", 1, 1), (1, 1))
    assert pd.sym_blocks == ((1,),) and pd.hyper_block == ()


def test_parabolic_matrix_middle_orbit():
    # the middle-index closed orbit: one pinned coordinate, flips beyond it
    var = Variant("c-odd", 1, 2)
    E = e_theta(var, 2, 3, (0, 2, 0), 1)
    spec = parabolic_matrix(var, E)
    assert spec.hyper_block == (2,)
    assert (1,) in spec.sym_blocks
