"""Structure-constant Hopf algebras: axiom checks, builtins, grouplikes,
stability / anti-Yetter-Drinfeld predicates, adjoint action, op comodules."""

import pytest

from hopfcyclic.exactla import FieldSpec, LinMap
from hopfcyclic.hopf import (
    ComoduleAlgebra,
    adjoint_module,
    check_ayd,
    check_comodule_algebra,
    check_hopf_axioms,
    check_module_axioms,
    check_stability,
    character_module,
    comodule_algebra_from_bialgebra,
    cyclic_group_table,
    dual_hopf,
    group_algebra,
    grouplikes,
    is_stable,
    is_stable_ayd,
    op_comodule,
    stability_map,
    sweedler_h4,
    symmetric3_table,
    trivial_module,
    validate_group_table,
)

Q = FieldSpec.rationals()
F2 = FieldSpec.gf(2)
F3 = FieldSpec.gf(3)


def kZ2(field=Q):
    t, l = cyclic_group_table(2)
    return group_algebra(t, field, l, name="Z2")


def kZ3(field=Q):
    t, l = cyclic_group_table(3)
    return group_algebra(t, field, l, name="Z3")


def kS3(field=Q):
    t, l = symmetric3_table()
    return group_algebra(t, field, l, name="S3")


def test_group_table_validation():
    t, _ = cyclic_group_table(3)
    assert validate_group_table(t) == 0
    bad = [row[:] for row in t]
    bad[1][2] = 1  # break associativity/inverses
    with pytest.raises(ValueError):
        validate_group_table(bad)


def test_group_algebra_axioms_all_pass():
    for h in (kZ2(), kZ3(), kS3(), kZ2(F2), kZ3(F3)):
        rep = check_hopf_axioms(h)
        assert rep.ok, rep.render()
        # S o S = id and cocommutative for group rings
        assert h.antipode.compose(h.antipode) == LinMap.identity(h.space, h.field)
        assert h.is_cocommutative()


def test_corrupted_cayley_table_fails_associativity():
    t, l = symmetric3_table()
    bad = [row[:] for row in t]
    bad[3][4] = (bad[3][4] + 1) % 6
    with pytest.raises(ValueError, match="not a group"):
        group_algebra(bad, Q, l)


def test_trivial_group():
    h = group_algebra([[0]], Q, ["1"])
    assert h.dim == 1
    assert check_hopf_axioms(h).ok
    assert grouplikes(h) == [{0: Q.one}]


def test_sweedler_h4():
    h = sweedler_h4(Q)
    rep = check_hopf_axioms(h)
    assert rep.ok, rep.render()
    s2 = h.antipode.compose(h.antipode)
    assert s2 != LinMap.identity(h.space, Q)
    assert s2.compose(s2) == LinMap.identity(h.space, Q)
    # S^2(x) = -x; eps(x) = 0; S^{-1}(x) = gx
    assert s2.apply({2: Q.one}) == {2: Q.of(-1)}
    assert h.counit_of(2) == Q.zero
    assert dict(h.antipode_list(2, -1)) == {3: Q.one}
    with pytest.raises(ValueError):
        sweedler_h4(F2)


def test_sweedler_h4_gf3():
    assert check_hopf_axioms(sweedler_h4(F3)).ok


def test_dual_hopf():
    for h in (kZ2(), kZ3(), sweedler_h4(Q), kZ2(F2)):
        d = dual_hopf(h)
        assert check_hopf_axioms(d).ok
        dd = dual_hopf(d)
        # double dual has the same structure matrices
        assert dd.mult.cols == h.mult.cols and dd.comult.cols == h.comult.cols
    # dual of a cocommutative algebra is commutative
    assert dual_hopf(kS3()).is_commutative()
    assert not dual_hopf(kS3()).is_cocommutative()


def test_grouplikes_group_algebra():
    h = kZ2()
    gl = grouplikes(h)
    assert gl == [{0: Q.one}, {1: Q.one}]
    assert len(grouplikes(kZ3())) == 3
    assert len(grouplikes(kS3())) == 6


def test_grouplikes_sweedler():
    assert grouplikes(sweedler_h4(Q)) == [{0: Q.one}, {1: Q.one}]


def test_grouplikes_dual_are_characters():
    # characters of Z2: trivial and sign, i.e. e0 +- e1 in the dual basis
    gl = grouplikes(dual_hopf(kZ2()))
    assert len(gl) == 2
    assert {0: Q.one, 1: Q.one} in gl and {0: Q.one, 1: Q.of(-1)} in gl
    # over GF(2) the two characters collapse to one (brute-force path)
    assert len(grouplikes(dual_hopf(kZ2(F2)))) == 1
    # characters of S3: trivial and sign
    assert len(grouplikes(dual_hopf(kS3()))) == 2
    # characters of Z3 over Q: only the trivial one (no rational cube roots)
    assert len(grouplikes(dual_hopf(kZ3()))) == 1


def test_character_module_validation():
    h = kZ2()
    x = character_module(h, {1: Q.one}, [1, 1])
    assert check_module_axioms(x).ok
    with pytest.raises(ValueError, match="grouplike"):
        character_module(h, {0: Q.one, 1: Q.one}, [1, 1])
    with pytest.raises(ValueError, match="multiplicative"):
        character_module(h, {0: Q.one}, [1, 2])


def test_trivial_module_stable_ayd():
    for h in (kZ2(), kZ3(), kS3(), kZ2(F2)):
        x = trivial_module(h)
        assert check_module_axioms(x).ok
        assert is_stable(x)
        assert check_ayd(x)


def test_character_module_stability():
    h = kZ2()
    # sign character with nontrivial grouplike: 0-stability fails since
    # delta(g) = -1 scales the identity
    x = character_module(h, {1: Q.one}, [1, -1])
    assert not check_stability(x, 0)
    assert stability_map(x, 0) == LinMap.identity(x.space, Q).scale(Q.of(-1))
    # counit character with nontrivial grouplike: stable (delta(g) = 1)
    y = character_module(h, {1: Q.one}, [1, 1])
    assert check_stability(y, 0) and check_stability(y, 1)
    # sign character of S3 with trivial grouplike: stable
    z = character_module(kS3(), {0: Q.one}, [1, -1, -1, 1, 1, -1])
    assert is_stable(z) and check_ayd(z)


def test_ayd_requires_central_grouplike():
    # coaction via a transposition of S3 with trivial action: stable, not aYD
    s3 = kS3()
    transposition = s3.space.labels.index("(12)")
    x = character_module(s3, {transposition: Q.one}, [1] * 6)
    assert is_stable(x)
    assert not check_ayd(x)
    # central grouplike over an abelian group: aYD holds
    z3 = kZ3()
    y = character_module(z3, {1: Q.one}, [1, 1, 1])
    assert check_ayd(y)


def test_sweedler_ayd_depends_on_character():
    h = sweedler_h4(Q)
    triv = trivial_module(h)
    assert is_stable(triv)
    assert not check_ayd(triv)
    minus = character_module(h, dict(h.unit_vec), [1, -1, 0, 0], name="k(1,-)")
    assert is_stable_ayd(minus)


def test_ayd_with_zero_stable_implies_one_stable():
    fixtures = []
    for h in (kZ2(), kZ3(), kS3()):
        fixtures.append(trivial_module(h))
        fixtures.append(character_module(h, dict(h.unit_vec),
                                         [h.counit_of(a) for a in range(h.dim)]))
    fixtures.append(character_module(sweedler_h4(Q), {0: Q.one}, [1, -1, 0, 0]))
    for x in fixtures:
        if check_ayd(x) and check_stability(x, 0):
            assert check_stability(x, 1)


def test_adjoint_module():
    for h in (kZ2(), kZ3(), kS3(), sweedler_h4(Q)):
        ad = adjoint_module(h)
        assert ad.axioms_ok()
    # group case: m . g = g^{-1} m g; commutative case collapses to eps(g) m
    s3 = kS3()
    ad = adjoint_module(s3)
    g = s3.space.labels.index("(01)")
    m = s3.space.labels.index("(12)")
    conj = s3.elem_mult_many([dict(s3.antipode_list(g)), {m: Q.one}, {g: Q.one}])
    assert dict(ad.act_list(m, g)) == conj
    z3 = kZ3()
    adz = adjoint_module(z3)
    for m in range(3):
        for g in range(3):
            assert dict(adz.act_list(m, g)) == {m: Q.one}
    # unit element: 1 . h = eps(h) 1 by the antipode axiom
    one_idx = 0
    for a in range(s3.dim):
        assert dict(ad.act_list(one_idx, a)) == ({one_idx: Q.one} if s3.counit_of(a) else {})


def test_op_comodule_roundtrip():
    h = kZ3()
    x = character_module(h, {1: Q.one}, [1, 1, 1])
    xr = op_comodule(x, "left_to_right")
    assert xr.right_coaction is not None and xr.left_coaction is None
    # grouplike coaction 1 -> g (x) 1 becomes right coaction 1 -> 1 (x) g^{-1}
    assert xr.rcoact_list(0) == [(0, 2, Q.one)]
    back = op_comodule(xr, "right_to_left")
    assert back.left_coaction == x.left_coaction
    triv = trivial_module(h)
    t2 = op_comodule(op_comodule(triv, "left_to_right"), "right_to_left")
    assert t2.left_coaction == triv.left_coaction


def test_right_coaction_axioms_and_op_consistency():
    h = sweedler_h4(Q)
    x = trivial_module(h)
    xr = op_comodule(x, "left_to_right")
    both = type(x)(h, x.space, x.action, left_coaction=x.left_coaction,
                   right_coaction=xr.right_coaction)
    assert check_module_axioms(both).ok


def test_comodule_algebra_from_bialgebra():
    for h in (kZ2(), kZ3(), sweedler_h4(Q)):
        y = comodule_algebra_from_bialgebra(h)
        rep = check_comodule_algebra(y)
        assert rep.ok, rep.render()
