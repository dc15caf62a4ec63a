import pytest

from forge import compose
from forge.algebra import (Algebra, MixedAlgebras, MissingForm,
                           algebra_from_text, commutative_center,
                           derivation_algebra, find_unity, matrix_in_span,
                           operator_matrix, orthogonal_algebra,
                           subalgebra_generated, verify_composition,
                           verify_jordan, verify_lie, verify_symmetric)
from forge.exact import MINUS_ONE, ONE, sc
from forge.scenarios import okubo11, para_split, split_cayley


def test_multiply_examples():
    C = split_cayley()
    u1, v1 = C.basis_element(2), C.basis_element(5)
    assert (u1 * v1).coords[0] == MINUS_ONE          # u1 v1 = -e1
    assert (C.basis_element(0) * C.basis_element(1)).is_zero()
    O = okubo11()
    x10 = O.basis_element(0)
    prod = x10 * x10
    assert prod == O.element([0, -1, 0, 0, 0, 0, 0, 0])


def test_mixed_algebras_rejected():
    C = split_cayley()
    O = okubo11()
    with pytest.raises(MixedAlgebras):
        C.basis_element(0) * O.basis_element(0)


def test_verify_composition():
    assert verify_composition(split_cayley()).passed
    assert verify_composition(okubo11()).passed
    broken = compose.split_cayley()
    vec = dict(broken.products[(2, 3)])              # u1 u2 = v3
    vec[7] = vec[7] + ONE
    broken.products[(2, 3)] = vec
    broken._cache.clear()
    rep = verify_composition(broken)
    assert not rep.passed and rep.witness is not None


def test_verify_composition_needs_form():
    A = Algebra(1, "bare", {(0, 0): {0: ONE}})
    with pytest.raises(MissingForm):
        verify_composition(A)


def test_verify_symmetric():
    assert verify_symmetric(para_split()).passed
    assert verify_symmetric(compose.okubo(2, 3)).passed
    rep = verify_symmetric(split_cayley())
    assert not rep.passed and isinstance(rep.witness, tuple)


def test_derivation_dimensions():
    assert len(derivation_algebra(para_split())) == 14
    assert len(derivation_algebra(okubo11())) == 8
    assert len(derivation_algebra(compose.ground_field())) == 0


def test_derivations_closed_and_skew():
    S = para_split()
    ders = derivation_algebra(S)
    skews = orthogonal_algebra(S)
    assert matrix_in_span(ders[0].commutator(ders[1]), ders, S.dim)
    for d in ders[:4]:
        assert matrix_in_span(d, skews, S.dim)


def test_orthogonal_dimensions():
    assert len(orthogonal_algebra(split_cayley())) == 28
    assert len(orthogonal_algebra(compose.s2(1))) == 1
    assert len(orthogonal_algebra(compose.ground_field())) == 0


def test_subalgebra_generated():
    O = okubo11()
    sub = subalgebra_generated(O, [O.basis_element(0)])
    assert len(sub) == 2                              # span{x, x*x}
    assert len(subalgebra_generated(O, [])) == 0
    assert len(subalgebra_generated(O, O.basis())) == 8
    again = subalgebra_generated(O, sub)
    assert [b.coords for b in again] == [b.coords for b in sub]


def test_commutative_center():
    S = para_split()
    center = commutative_center(S)
    assert len(center) == 1
    unit = find_unity(split_cayley())
    assert center[0].coords == unit.coords or \
        center[0].scale(sc(-1)).coords == unit.coords
    assert commutative_center(okubo11()) == []
    comm = Algebra(2, "comm", {(0, 0): {0: ONE}, (0, 1): {1: ONE},
                               (1, 0): {1: ONE}})
    assert len(commutative_center(comm)) == 2


def test_verify_lie_on_matrix_commutators():
    from forge.magic import lie_algebra_on_matrices
    mats = [m for m in orthogonal_algebra(split_cayley())]
    L = lie_algebra_on_matrices(mats, "o8")
    assert L.dim == 28
    assert verify_lie(L).passed


def test_verify_lie_counterexample():
    # anticommutative but not Jacobi: [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e0
    bad = Algebra(3, "bad", {
        (0, 1): {2: ONE}, (1, 0): {2: MINUS_ONE},
        (1, 2): {0: ONE}, (2, 1): {0: MINUS_ONE},
        (2, 0): {0: ONE}, (0, 2): {0: MINUS_ONE},
    })
    rep = verify_lie(bad)
    assert not rep.passed and rep.witness == (0, 1, 2)


def test_verify_jordan_negative():
    assert not verify_jordan(split_cayley()).passed


def test_interchange_round_trip():
    for A in (split_cayley(), okubo11(), compose.okubo(sc(2), sc(3))):
        text = A.to_text()
        back = algebra_from_text(text)
        assert back.to_text() == text
        assert back.products == A.products
        assert back.polar == A.polar


def test_interchange_rejects_garbage():
    with pytest.raises(ValueError):
        algebra_from_text("not a header\n")


def test_operator_matrix():
    C = split_cayley()
    e1 = C.basis_element(0)
    left = operator_matrix(C, "left", e1)
    # left multiplication by e1 fixes e1, u_i and kills e2, v_i
    assert left.data[0][0] == ONE and left.data[2][2] == ONE
    assert all(left.data[r][1].is_zero() for r in range(8))


def test_norm_polarization_identity():
    # n(x, y) = n(x + y) - n(x) - n(y) with n(x) = polar(x, x)/2
    import random
    C = split_cayley()
    rng = random.Random(41)
    for _ in range(20):
        x = {i: sc(rng.randint(-3, 3)) for i in range(8)}
        y = {i: sc(rng.randint(-3, 3)) for i in range(8)}
        xy = {i: x[i] + y[i] for i in range(8)}
        lhs = C.polar_pair_sparse(x, y)
        rhs = C.norm_sparse(xy) - C.norm_sparse(x) - C.norm_sparse(y)
        assert lhs == rhs
