"""Exact linear algebra kernel: frozen examples plus randomized invariants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.exactla import (
    FieldSpec,
    LinMap,
    Subspace,
    VecSpace,
    image,
    image_subspace,
    intersect,
    kernel,
    largest_bi_invariant_subspace,
    largest_forward_invariant_subspace,
    maps_into,
    preimage_subspace,
    quotient,
    quotient_section,
    rref,
    subspace_sum,
    tensor_space,
)

Q = FieldSpec.rationals()
F2 = FieldSpec.gf(2)
F3 = FieldSpec.gf(3)


def space(n):
    return VecSpace.make([f"e{i}" for i in range(n)])


def mat(field, dom, cod, rows):
    """Dense row-major list-of-lists -> LinMap."""
    entries = []
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                entries.append((i, j, field.of(c)))
    return LinMap.from_entries(space(dom), space(cod), field, entries)


def test_field_arithmetic():
    assert Q.of("3/2") + Q.of("1/2") == Q.of(2)
    assert Q.inv(Q.of(-4)) == Q.of("-1/4")
    assert F3.of(5) == 2
    assert F3.inv(2) == 2
    assert F2.of("1/1") == 1
    with pytest.raises(ValueError):
        FieldSpec.gf(6)


def test_vecspace_validation():
    with pytest.raises(ValueError):
        VecSpace(2, ("a", "a"))
    assert tensor_space(space(2), space(3)).dim == 6
    assert tensor_space(space(2), space(2)).labels[1] == "e0|e1"


def test_kernel_identity_and_zero():
    f = LinMap.identity(space(3), Q)
    assert kernel(f).dim == 0
    z = LinMap.zero(space(3), space(3), Q)
    assert kernel(z).dim == 3


def test_kernel_gf2_hand_example():
    # [[1,1],[1,1]] over GF(2): kernel spanned by (1,1).
    f = mat(F2, 2, 2, [[1, 1], [1, 1]])
    k = kernel(f)
    assert k.dim == 1
    assert k.rows[0] == {0: 1, 1: 1}


def test_image_examples():
    assert image(LinMap.identity(space(2), Q)).dim == 2
    assert image(LinMap.zero(space(2), space(2), Q)).dim == 0
    f = mat(Q, 2, 2, [[1, 2], [2, 4]])
    im = image(f)
    assert im.dim == 1
    assert im.rows[0] == {0: Q.of(1), 1: Q.of(2)}


def test_intersect_examples():
    amb = space(3)
    full = Subspace.full(amb, Q)
    b = Subspace.span(amb, Q, [{0: Q.of(1), 1: Q.of(5)}])
    assert intersect(full, b) == b
    # two distinct lines in dim 2
    amb2 = space(2)
    l1 = Subspace.span(amb2, Q, [{0: Q.of(1)}])
    l2 = Subspace.span(amb2, Q, [{1: Q.of(1)}])
    assert intersect(l1, l2).dim == 0
    # planes in dim 3 meeting in a line
    a = Subspace.span(amb, Q, [{0: Q.of(1)}, {1: Q.of(1)}])
    b = Subspace.span(amb, Q, [{1: Q.of(1)}, {2: Q.of(1)}])
    m = intersect(a, b)
    assert m.dim == 1 and m.rows[0] == {1: Q.of(1)}


def test_quotient_examples():
    amb = space(3)
    w0 = Subspace.zero(amb, Q)
    qs, q = quotient(amb, w0)
    assert qs.dim == 3 and q == LinMap.identity(amb, Q)
    wf = Subspace.full(amb, Q)
    qs, q = quotient(amb, wf)
    assert qs.dim == 0 and q.is_zero()
    w = Subspace.span(amb, Q, [{0: Q.of(1), 1: Q.of(1)}])
    qs, q = quotient(amb, w)
    assert qs.dim == 2
    assert q.apply({0: Q.of(1), 1: Q.of(1)}) == {}
    assert kernel(q) == w
    s = quotient_section(amb, w, q)
    assert q.compose(s) == LinMap.identity(qs, Q)


def test_tensor_examples():
    id2 = LinMap.identity(space(2), Q)
    id3 = LinMap.identity(space(3), Q)
    assert id2.tensor(id3) == LinMap.identity(space(6), Q)
    z = LinMap.zero(space(2), space(2), Q)
    assert id2.tensor(z).is_zero()
    a = mat(Q, 1, 1, [[2]])
    b = mat(Q, 1, 1, [[3]])
    assert a.tensor(b) == mat(Q, 1, 1, [[6]])


def test_compose_examples():
    f = mat(Q, 2, 2, [[1, 2], [3, 4]])
    assert LinMap.identity(space(2), Q).compose(f) == f
    finv = mat(Q, 2, 2, [["-2", "1"], ["3/2", "-1/2"]])
    assert f.compose(finv) == LinMap.identity(space(2), Q)
    g = mat(Q, 2, 2, [[0, 1], [1, 0]])
    # hand product: f@g swaps the columns of f
    assert f.compose(g) == mat(Q, 2, 2, [[2, 1], [4, 3]])


def test_bi_invariant_fixpoint_examples():
    amb = space(2)
    ident = LinMap.identity(amb, Q)
    full = Subspace.full(amb, Q)
    assert largest_bi_invariant_subspace(full, ident, ident) == full
    z = Subspace.zero(amb, Q)
    assert largest_bi_invariant_subspace(z, ident, ident).dim == 0
    # 90 degree rotation has no invariant line over Q
    rot = mat(Q, 2, 2, [[0, -1], [1, 0]])
    rot_inv = mat(Q, 2, 2, [[0, 1], [-1, 0]])
    line = Subspace.span(amb, Q, [{0: Q.of(1)}])
    assert largest_bi_invariant_subspace(line, rot, rot_inv).dim == 0
    with pytest.raises(ValueError):
        largest_bi_invariant_subspace(line, rot, rot)


def test_forward_invariant_fixpoint():
    # shift map on Q^3: e0->0, e1->e0, e2->e1; ker shift = <e0>
    f = mat(Q, 3, 3, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    amb = space(3)
    w = Subspace.span(amb, Q, [{0: Q.of(1)}, {1: Q.of(1)}])
    v = largest_forward_invariant_subspace(w, f)
    assert v.dim == 2 and maps_into(f, v, v)


def test_preimage_subspace():
    f = mat(Q, 2, 2, [[1, 0], [0, 0]])
    w = Subspace.zero(space(2), Q)
    pre = preimage_subspace(f, w)
    assert pre == kernel(f)


# -- randomized invariants ---------------------------------------------------

FIELDS = [Q, F2, F3]


def random_map(field, rng, n, m, density=0.4):
    entries = []
    for i in range(m):
        for j in range(n):
            if rng.random() < density:
                entries.append((i, j, field.of(rng.randint(-3, 3))))
    return LinMap.from_entries(space(n), space(m), field, entries)


@given(st.integers(0, 2**32 - 1), st.sampled_from([0, 1, 2]))
@settings(max_examples=60, deadline=None)
def test_rank_nullity_random(seed, fidx):
    field = FIELDS[fidx]
    rng = random.Random(seed)
    n, m = rng.randint(1, 7), rng.randint(1, 7)
    f = random_map(field, rng, n, m)
    assert kernel(f).dim + f.rank() == n


@given(st.integers(0, 2**32 - 1), st.sampled_from([0, 1, 2]))
@settings(max_examples=40, deadline=None)
def test_intersection_commutes_bitexact(seed, fidx):
    field = FIELDS[fidx]
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    amb = space(n)
    a = image(random_map(field, rng, rng.randint(1, 4), n))
    b = image(random_map(field, rng, rng.randint(1, 4), n))
    ab, ba = intersect(a, b), intersect(b, a)
    assert ab == ba
    assert ab.dim == a.dim + b.dim - subspace_sum(a, b).dim


@given(st.integers(0, 2**32 - 1), st.sampled_from([0, 1, 2]))
@settings(max_examples=40, deadline=None)
def test_quotient_exactness_random(seed, fidx):
    field = FIELDS[fidx]
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    amb = space(n)
    w = image(random_map(field, rng, rng.randint(1, n), n))
    qs, q = quotient(amb, w)
    assert qs.dim == n - w.dim
    assert kernel(q) == w


def _random_invertible(field, rng, n):
    while True:
        f = random_map(field, rng, n, n, density=0.6)
        if f.rank() == n:
            return f


def _invert(f):
    """Dense inversion via RREF of [f | I] rows; fine at test sizes."""
    field, n = f.field, f.domain.dim
    rows = f.rows()
    for i in range(n):
        rows[i][n + i] = field.one
    red, pivots = rref(field, rows)
    assert pivots[:n] == list(range(n))
    entries = []
    for i, row in zip(pivots, red):
        for j, c in row.items():
            if j >= n:
                entries.append((i, j - n, c))
    return LinMap.from_entries(f.domain, f.domain, field, entries)


@given(st.integers(0, 2**32 - 1), st.sampled_from([0, 1, 2]))
@settings(max_examples=25, deadline=None)
def test_fixpoint_is_largest_invariant(seed, fidx):
    """Brute-force maximality: every t,t^-1-stable V' inside W lands in V."""
    field = FIELDS[fidx]
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    t = _random_invertible(field, rng, n)
    t_inv = _invert(t)
    w = image(random_map(field, rng, rng.randint(1, n), n))
    v = largest_bi_invariant_subspace(w, t, t_inv)
    assert w.contains(v)
    assert image_subspace(t, v) == v
    # brute force over iterated intersections of random stable candidates
    for _ in range(10):
        cand = image(random_map(field, rng, rng.randint(1, n), n))
        cand = intersect(cand, w)
        for _ in range(2 * n):
            cand = intersect(cand, image_subspace(t, cand))
            cand = intersect(cand, image_subspace(t_inv, cand))
        # cand is now stable and inside w, so it must embed in v
        assert v.contains(cand)
