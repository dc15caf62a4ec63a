import random

import pytest

from forge.exact import OMEGA, ONE, ZERO, Polynomial, Scalar, sc
from forge.linalg import (IntMatrix, Matrix, NotSquare, SparseEchelon,
                          int_det, inverse, lattice_row_reduce,
                          minimal_polynomial, nullspace, rank, rank_mod_p,
                          rref, smith_normal_form, solve, sparse_kernel)

X = Polynomial.x
C = Polynomial.constant


def test_rref_examples():
    ident = Matrix.identity(3)
    red, rk, piv = rref(ident)
    assert red == ident and rk == 3 and piv == [0, 1, 2]
    z = Matrix.zero(2, 2)
    assert rref(z)[0] == z and rref(z)[1] == 0
    m = Matrix([[ONE, OMEGA], [OMEGA, Scalar(-1, -1)]])
    assert rref(m)[1] == 1  # second row is w times the first


def test_nullspace_examples():
    assert nullspace(Matrix.identity(4)) == []
    assert len(nullspace(Matrix.zero(2, 3))) == 3


def test_rank_nullity_random():
    rng = random.Random(17)
    for _ in range(15):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = Matrix([[sc(rng.randint(-3, 3)) for _ in range(cols)]
                    for _ in range(rows)])
        assert rank(m) + len(nullspace(m)) == cols


def test_solve_and_inverse():
    m = Matrix([[1, 2], [3, 5]])
    x = solve(m, [sc(1), sc(2)])
    assert m.apply(x) == [ONE, sc(2)]
    assert m * inverse(m) == Matrix.identity(2)
    assert solve(Matrix([[1, 1], [1, 1]]), [sc(0), sc(1)]) is None


def test_minimal_polynomial_examples():
    assert minimal_polynomial(Matrix.identity(5)) == X() - C(1)
    assert minimal_polynomial(Matrix([[0, 1], [0, 0]])) == X(2)
    d = Matrix([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert minimal_polynomial(d) == (X() - C(1)) * (X() - C(2))
    with pytest.raises(NotSquare):
        minimal_polynomial(Matrix.zero(2, 3))


def test_minimal_polynomial_annihilates():
    rng = random.Random(23)
    for _ in range(8):
        n = rng.randint(1, 5)
        m = Matrix([[sc(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        p = minimal_polynomial(m)
        acc = Matrix.zero(n, n)
        power = Matrix.identity(n)
        for c in p.coeffs:
            acc = acc + power.scale(c)
            power = power * m
        assert acc.is_zero()


def test_smith_normal_form_examples():
    inv, L, R = smith_normal_form(IntMatrix([[1, 0], [0, 1]]))
    assert inv == [1, 1]
    inv, L, R = smith_normal_form(IntMatrix([[3, 0], [0, 3]]))
    assert inv == [3, 3]
    m = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    inv, L, R = smith_normal_form(m)
    assert inv == [2, 6, 12]
    d = L * m * R
    for i in range(3):
        for j in range(3):
            assert d.data[i][j] == (inv[i] if i == j else 0)
    assert int_det(L) in (1, -1) and int_det(R) in (1, -1)


def test_smith_divisibility_random():
    rng = random.Random(31)
    for _ in range(12):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = IntMatrix([[rng.randint(-6, 6) for _ in range(cols)]
                       for _ in range(rows)])
        inv, L, R = smith_normal_form(m)
        nz = [d for d in inv if d != 0]
        for a, b in zip(nz, nz[1:]):
            assert b % a == 0
        d = L * m * R
        for i in range(rows):
            for j in range(cols):
                assert d.data[i][j] == (inv[i] if i == j and i < len(inv) else 0)
        assert abs(int_det(L)) == 1 and abs(int_det(R)) == 1


def test_okubo_relation_lattice_cokernel():
    # brute-force oracle: relations a + b - c over the eight nonzero degree
    # labels of the isotropic Okubo basis force Z3 x Z3
    from forge.compose import OKUBO_DEGREES, okubo
    O = okubo(1, 1)
    labels = list(OKUBO_DEGREES)
    index = {l: i for i, l in enumerate(labels)}
    rows = []
    for (i, j), vec in O.products.items():
        (k,) = vec.keys()
        row = [0] * 8
        row[index[labels[i]]] += 1
        row[index[labels[j]]] += 1
        row[index[labels[k]]] -= 1
        rows.append(row)
    reduced = lattice_row_reduce(rows, 8)
    inv, _, _ = smith_normal_form(IntMatrix(reduced))
    assert [d for d in inv if d not in (0, 1)] == [3, 3]
    assert sum(1 for d in inv if d == 0) + (8 - len(inv)) == 0


def test_sparse_echelon_and_kernel():
    rows = [{0: ONE, 1: ONE}, {1: ONE, 2: ONE}, {0: ONE, 2: -ONE}]
    kern = sparse_kernel(rows, 3)
    assert len(kern) == 1
    ech = SparseEchelon(3)
    for r in rows:
        ech.insert(dict(r))
    assert ech.rank == 2
    for v in kern:
        for r in rows:
            acc = ZERO
            for k, c in r.items():
                acc = acc + c * v.get(k, ZERO)
            assert acc.is_zero()


def test_rank_mod_p_bounds():
    rows = [{0: ONE, 1: OMEGA}, {0: OMEGA, 1: Scalar(-1, -1)}]
    assert rank_mod_p(rows, 2) == 1
    rows = [{i: ONE} for i in range(5)]
    assert rank_mod_p(rows, 5) == 5
    assert rank_mod_p(rows, 5, limit=3) == 3


def test_sparse_kernel_matches_dense_nullspace():
    rng = random.Random(61)
    for trial in range(20):
        rows_n = rng.randint(1, 12)
        cols_n = rng.randint(1, 10)
        dense = [[sc(rng.randint(-2, 2)) if rng.random() < 0.4 else ZERO
                  for _ in range(cols_n)] for _ in range(rows_n)]
        m = Matrix(dense)
        sparse_rows = [{j: v for j, v in enumerate(row) if not v.is_zero()}
                       for row in dense]
        sparse_rows = [r for r in sparse_rows if r]
        kern = sparse_kernel(sparse_rows, cols_n)
        assert len(kern) == len(nullspace(m))
        for v in kern:
            out = m.apply([v.get(j, ZERO) for j in range(cols_n)])
            assert all(x.is_zero() for x in out)


def test_rank_mod_p_agrees_with_exact_rank():
    rng = random.Random(67)
    for trial in range(15):
        rows_n = rng.randint(1, 8)
        cols_n = rng.randint(1, 8)
        dense = [[Scalar(rng.randint(-4, 4), rng.randint(-2, 2),
                         rng.randint(1, 5)) for _ in range(cols_n)]
                 for _ in range(rows_n)]
        m = Matrix(dense)
        sparse_rows = [{j: v for j, v in enumerate(row) if not v.is_zero()}
                       for row in dense]
        got = rank_mod_p([r for r in sparse_rows if r], cols_n)
        assert got <= rank(m)
        assert got == rank(m)      # generic instances; prime is fixed


def test_rank_mod_p_retries_on_bad_prime():
    from forge.linalg import rank_moduli
    p0 = rank_moduli(1)[0][0]
    rows = [{0: Scalar(1, 0, p0)}, {1: ONE}]
    assert rank_mod_p(rows, 2) == 2
