import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympalt.field import PrimeField, BinaryExtensionField
from sympalt.linalg import (
    AmbientMismatch,
    ChainNotAscending,
    ChainNotIsotropic,
    Subspace,
    SymplecticForm,
    darboux_complete,
    gram_matrix,
    invert_matrix,
    is_isotropic,
    mat_mul,
    perp,
    rref,
    subspace_full,
    subspace_join,
    subspace_meet,
    subspace_meet_join,
    subspace_span,
    subspace_zero,
    unit_vector,
    zero_vector,
)

F3 = PrimeField(3)


def V(*coords):
    return tuple(c % 3 for c in coords)


def test_span_examples():
    s = subspace_span(F3, 4, [])
    assert s.dim == 0
    x1 = unit_vector(F3, 4, 0)
    s = subspace_span(F3, 4, [x1, V(2, 0, 0, 0)])
    assert s.dim == 1
    # x1+y1 and y1 span a 2-dim space
    s = subspace_span(F3, 4, [V(1, 1, 0, 0), V(0, 1, 0, 0)])
    assert s.dim == 2
    assert s.contains(x1)


def test_span_canonical_rref():
    rng = random.Random(7)
    for _ in range(50):
        rows = [[rng.randrange(3) for _ in range(6)] for _ in range(3)]
        s1 = subspace_span(F3, 6, [tuple(r) for r in rows])
        shuffled = list(rows)
        rng.shuffle(shuffled)
        mixed = [tuple((a + 2 * b) % 3 for a, b in zip(shuffled[0], shuffled[-1]))] + [
            tuple(r) for r in shuffled
        ]
        s2 = subspace_span(F3, 6, mixed)
        assert s1 == s2
        assert s1.rows == s2.rows


def test_meet_join_examples():
    a = subspace_span(F3, 4, [unit_vector(F3, 4, 0), unit_vector(F3, 4, 2)])  # x1, x2
    m, j = subspace_meet_join(a, a)
    assert m == a and j == a
    b = subspace_span(F3, 4, [unit_vector(F3, 4, 1), unit_vector(F3, 4, 3)])  # y1, y2
    m, j = subspace_meet_join(a, b)
    assert m.dim == 0 and j.dim == 4
    c = subspace_span(F3, 4, [unit_vector(F3, 4, 2), unit_vector(F3, 4, 3)])  # x2, y2
    m = subspace_meet(a, c)
    assert m == subspace_span(F3, 4, [unit_vector(F3, 4, 2)])


def test_meet_join_dim_identity_random():
    rng = random.Random(11)
    for f in [F3, PrimeField(5), BinaryExtensionField(2)]:
        q = f.order
        for _ in range(30):
            n = 6
            a = subspace_span(f, n, [tuple(rng.randrange(q) for _ in range(n)) for _ in range(rng.randrange(4))])
            b = subspace_span(f, n, [tuple(rng.randrange(q) for _ in range(n)) for _ in range(rng.randrange(4))])
            m, j = subspace_meet_join(a, b)
            assert m.dim + j.dim == a.dim + b.dim
            assert a.contains_subspace(m) and b.contains_subspace(m)
            assert j.contains_subspace(a) and j.contains_subspace(b)


def test_ambient_mismatch():
    a = subspace_zero(F3, 4)
    b = subspace_zero(F3, 6)
    with pytest.raises(AmbientMismatch):
        subspace_meet_join(a, b)


def test_perp_examples():
    form = SymplecticForm(F3, 4)
    assert perp(subspace_zero(F3, 4), form) == subspace_full(F3, 4)
    # perp of span{x1} is everything but y1
    s = perp(subspace_span(F3, 4, [unit_vector(F3, 4, 0)]), form)
    assert s.dim == 3
    for i in (0, 2, 3):
        assert s.contains(unit_vector(F3, 4, i))
    assert not s.contains(unit_vector(F3, 4, 1))


def test_perp_involution_and_inclusion_reversal():
    rng = random.Random(3)
    for f in [F3, PrimeField(5), BinaryExtensionField(2)]:
        q = f.order
        form = SymplecticForm(f, 6)
        for _ in range(25):
            rows_a = [tuple(rng.randrange(q) for _ in range(6)) for _ in range(rng.randrange(4))]
            a = subspace_span(f, 6, rows_a)
            b = subspace_join(a, subspace_span(f, 6, [tuple(rng.randrange(q) for _ in range(6))]))
            pa, pb = perp(a, form), perp(b, form)
            assert pa.dim == 6 - a.dim
            assert perp(pa, form) == a
            assert pa.contains_subspace(pb)  # a <= b implies perp(b) <= perp(a)


@given(st.lists(st.lists(st.integers(0, 2), min_size=6, max_size=6), min_size=0, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rref_idempotent_and_spans_same(rows):
    rows = [tuple(r) for r in rows]
    red, piv = rref(F3, rows)
    again, piv2 = rref(F3, red)
    assert red == again and piv == piv2
    s1 = subspace_span(F3, 6, rows)
    s2 = subspace_span(F3, 6, red)
    assert s1 == s2


def random_isotropic_flag(f, n, rng):
    form = SymplecticForm(f, 2 * n)
    chain = []
    cur = subspace_zero(f, 2 * n)
    while cur.dim < n:
        cand_space = perp(cur, form) if cur.dim else subspace_full(f, 2 * n)
        while True:
            coeffs = [rng.randrange(f.order) for _ in range(cand_space.dim)]
            v = zero_vector(f, 2 * n)
            for c, row in zip(coeffs, cand_space.rows):
                v = tuple(f.add(a, f.mul(c, b)) for a, b in zip(v, row))
            if not cur.contains(v) and form.pair(v, v) == f.zero:
                ok = all(form.pair(v, r) == f.zero for r in cur.rows)
                if ok:
                    break
        cur = subspace_join(cur, subspace_span(f, 2 * n, [v]))
        chain.append(cur)
    return chain


def test_darboux_on_standard_flags():
    # flags built from standard x vectors give a permuted standard basis back
    n = 3
    form = SymplecticForm(F3, 2 * n)
    xs = [unit_vector(F3, 6, 2 * i) for i in range(n)]
    chain = [subspace_span(F3, 6, [xs[2]]),
             subspace_span(F3, 6, [xs[2], xs[1]]),
             subspace_span(F3, 6, [xs[2], xs[1], xs[0]])]
    basis = darboux_complete(chain, form)
    assert gram_matrix(form, basis) == form.matrix()
    for r in range(1, n + 1):
        got = subspace_span(F3, 6, [basis[2 * (n - k)] for k in range(1, r + 1)])
        assert got == chain[r - 1]


def test_darboux_random_flags():
    rng = random.Random(42)
    for f in [F3, PrimeField(5), BinaryExtensionField(2)]:
        for n in (2, 3):
            form = SymplecticForm(f, 2 * n)
            for _ in range(10):
                chain = random_isotropic_flag(f, n, rng)
                basis = darboux_complete(chain, form)
                assert gram_matrix(form, basis) == form.matrix()
                for r in range(1, n + 1):
                    got = subspace_span(f, 2 * n, [basis[2 * (n - k)] for k in range(1, r + 1)])
                    assert got == chain[r - 1]


def test_darboux_errors():
    form = SymplecticForm(F3, 6)
    bad = [subspace_span(F3, 6, [unit_vector(F3, 6, 0)]),
           subspace_span(F3, 6, [unit_vector(F3, 6, 0), unit_vector(F3, 6, 1)]),  # x1,y1 not isotropic
           subspace_span(F3, 6, [unit_vector(F3, 6, 0), unit_vector(F3, 6, 1), unit_vector(F3, 6, 2)])]
    with pytest.raises(ChainNotIsotropic):
        darboux_complete(bad, form)
    with pytest.raises(ChainNotAscending):
        darboux_complete([subspace_zero(F3, 6)] * 3, form)
    not_nested = [subspace_span(F3, 6, [unit_vector(F3, 6, 0)]),
                  subspace_span(F3, 6, [unit_vector(F3, 6, 2), unit_vector(F3, 6, 4)]),
                  subspace_span(F3, 6, [unit_vector(F3, 6, 0), unit_vector(F3, 6, 2), unit_vector(F3, 6, 4)])]
    with pytest.raises(ChainNotAscending):
        darboux_complete(not_nested, form)


def test_matrix_inverse():
    rng = random.Random(5)
    for _ in range(20):
        rows = [tuple(rng.randrange(3) for _ in range(4)) for _ in range(4)]
        s = subspace_span(F3, 4, rows)
        if s.dim < 4:
            continue
        inv = invert_matrix(F3, rows)
        prod = mat_mul(F3, rows, inv)
        ident = [tuple(F3.one if i == j else F3.zero for j in range(4)) for i in range(4)]
        assert prod == ident
