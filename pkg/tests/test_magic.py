import pytest

from forge import compose, magic
from forge.algebra import verify_jordan, verify_lie
from forge.exact import ONE, ZERO, Polynomial, is_squarefree, sc
from forge.grading import grading_type, verify_grading
from forge.linalg import Matrix, nullspace
from forge.scenarios import (albert_para, e8_pair, f4_mag, okubo11,
                             para_split, split_cayley)

X = Polynomial.x
C = Polynomial.constant


def test_tri_dimensions():
    assert magic.TriContext(para_split()).n == 28
    assert magic.TriContext(okubo11()).n == 28
    assert len(magic.tri(compose.s2(1))) == 2
    assert len(magic.tri(compose.s1())) == 0


def test_tri_rejects_non_symmetric():
    with pytest.raises(magic.NotSymmetricComposition):
        magic.tri(split_cayley())


def test_theta_fixed_subalgebras():
    for S, want in ((para_split(), 14), (okubo11(), 8)):
        ctx = magic.TriContext(S)
        th = ctx.theta_matrix()
        shifted = Matrix([[th.data[r][c] - (ONE if r == c else ZERO)
                           for c in range(ctx.n)] for r in range(ctx.n)])
        assert len(nullspace(shifted)) == want
        cube = th * th * th
        assert cube == Matrix.identity(ctx.n)


def test_t_xx_is_zero():
    S = para_split()
    for i in range(8):
        t = magic.t_xy(S, S.basis_element(i), S.basis_element(i))
        assert all(m.is_zero() for m in t.mats)
    # and the first slot vanishes for sigma_{x,x} even when scaled
    t = magic.t_xy(S, S.basis_element(0), S.basis_element(0).scale(3))
    assert t.mats[0].is_zero()


def test_magic_dimension_formula():
    k = compose.s1()
    s2 = compose.s2(1)
    assert magic.magic_g(k, s2).lie.dim == 8
    assert magic.magic_g(s2, compose.s2(3)).lie.dim == 16
    assert f4_mag().lie.dim == 52


def test_magic_rejects_bad_inputs():
    with pytest.raises(magic.NotSymmetricComposition):
        magic.magic_g(compose.s1(), split_cayley())


def test_theta_cycles_iota_blocks():
    mag = f4_mag()
    th = magic.theta_matrix(mag)
    lie = mag.lie
    d, dp = mag.S.dim, mag.Sp.dim
    # Theta sends iota_i(x) into the iota_{i+1} block and fixes the tri block
    for i in range(3):
        col = mag.iota_index(i, 0, 3)
        img = [r for r in range(lie.dim) if not th.data[r][col].is_zero()]
        lo = mag.iota_index((i + 1) % 3, 0, 0)
        hi = mag.iota_index((i + 1) % 3, d - 1, dp - 1)
        assert all(lo <= r <= hi for r in img)
    assert magic.is_lie_automorphism(lie, th).passed


def test_albert_products():
    A = albert_para()
    J = A.jordan
    S = A.S
    for i in range(3):
        a, b = 0, 1
        lhs = J.basis_element(A.iota_index(i, a)) * J.basis_element(A.iota_index(i, b))
        n2 = sc(2) * S.polar.data[a][b]
        want = [ZERO] * J.dim
        want[(i + 1) % 3] = n2
        want[(i + 2) % 3] = n2
        assert list(lhs.coords) == want
    one = J.element([1, 1, 1] + [0] * 24)
    for i in range(J.dim):
        assert one * J.basis_element(i) == J.basis_element(i)
    theta = magic.albert_theta(A)
    assert theta * theta * theta == Matrix.identity(27)
    assert verify_jordan(J).passed


def test_d_i_examples():
    A = albert_para()
    S = A.S
    a = S.basis_element(2)
    for i in range(3):
        D = magic.d_i_derivation(A, i, a)
        assert all(D.data[r][A.diag_index(i)].is_zero() for r in range(27))
        rep = magic.check_d_i_rules(A, i, a)
        assert rep.passed
        assert magic.is_derivation(A.jordan, D)


def test_adjoint_minimal_polynomial_matches_dense():
    # on a Lie algebra the product is the bracket, so ad = left multiplication
    L = f4_mag().lie
    el = L.element([sc(1 if i in (0, 13, 40) else 0) for i in range(52)])
    from forge.algebra import operator_matrix
    from forge.linalg import minimal_polynomial
    fast = magic.adjoint_minimal_polynomial(L, el)
    dense = minimal_polynomial(operator_matrix(L, "left", el))
    assert fast == dense


def test_is_toral_examples():
    mag, lie, gr = magic.f4_z3_3()
    comps = gr.components()
    # the (0,0,j) components span the natural Cartan subalgebra
    h = [lie.basis_element(i) for i in comps[(0, 0, 1)] + comps[(0, 0, 2)]]
    rep = magic.is_toral(lie, h)
    assert rep.passed
    rep = magic.is_cartan(lie, h)
    assert rep.passed and rep.details["dim"] == 4
    # a single root vector is not self-normalizing
    mu = (1, 0, 0)
    root = [lie.basis_element(comps[mu][0])]
    rep = magic.is_cartan(lie, root)
    assert not rep.passed


def test_iota_adjoint_annihilator():
    # ad of iota_i(a x x) with n(a) = n'(x) = 1 satisfies X(X^2+4)(X^2+1)
    mag8, _ = e8_pair()
    lie = mag8.lie
    a_idx = 0                      # the tower unit has norm 1
    el = lie.basis_element(mag8.iota_index(0, a_idx, a_idx))
    mp = magic.adjoint_minimal_polynomial(lie, el)
    annihilator = X() * (X(2) + C(4)) * (X(2) + C(1))
    assert annihilator % mp == Polynomial([])
    assert is_squarefree(mp)


def test_nilpotent_element_not_toral():
    mag = f4_mag()
    lie = mag.lie
    # iota_0(1 x u1) with isotropic u1: cube of ad vanishes
    el = lie.basis_element(mag.iota_index(0, 0, 2))
    rep = magic.is_toral(lie, [el])
    assert not rep.passed
    mp = magic.adjoint_minimal_polynomial(lie, el)
    assert str(mp).startswith("X")
    assert not is_squarefree(mp)


def test_jordan_grading_check_rejects_unequal_dims():
    mag8, gr8 = e8_pair()
    rep = magic.jordan_grading_check(mag8.lie, gr8, cartan_mode="pairs")
    assert not rep.passed
    assert rep.details["stage"] in ("equal dimensions", "g_0 = 0")


def test_rebase_blockwise_preserves_brackets():
    mag = f4_mag()
    lie = rebased = magic.rebase_blockwise(mag.lie, magic._gamma_blocks(mag))
    assert verify_lie(rebased).passed
    # dimensions of products agree with a hand change of basis on one pair
    i0 = mag.iota_index(0, 0, 0)
    assert rebased.product(i0, i0) == {}


def test_e6_dimension_and_types():
    mag, lie, gr = magic.e6_z3_3()
    assert lie.dim == 78
    assert verify_grading(gr).passed
    assert grading_type(gr) == (0, 0, 26)


def test_graded_tri_zero_component_empty():
    PC, gr = magic.graded_para_cayley()
    graded = magic.graded_tri_basis(PC, gr, theta_refine=False)
    degs = {d: len(els) for d, els in graded}
    assert degs.get((0, 0, 0), 0) == 0
    assert sum(degs.values()) == 28
    assert set(degs.values()) == {4}


def test_theta_cycles_iota_blocks_on_e8():
    mag8, _ = e8_pair()
    lie = mag8.lie
    th = magic.theta_matrix(mag8)
    d, dp = 8, 8
    for i in range(3):
        for a, b in ((0, 0), (3, 5)):
            col = mag8.iota_index(i, a, b)
            img = [r for r in range(lie.dim) if not th.data[r][col].is_zero()]
            assert img == [mag8.iota_index((i + 1) % 3, a, b)]
    # tri block is preserved
    for r in range(mag8.nt + mag8.ntp):
        col = [th.data[x][r] for x in range(lie.dim)]
        assert all(col[x].is_zero() for x in range(mag8.nt + mag8.ntp, lie.dim))


def test_phi_tri_images_have_degree_zero():
    # images of triality triples preserve each component of the natural
    # Z2 x Z2 grading of the Jordan algebra
    A = albert_para()
    mag = f4_mag()
    blocks = [list(range(3))] + [[A.iota_index(i, a) for a in range(8)]
                                 for i in range(3)]
    which = {}
    for bi, idxs in enumerate(blocks):
        for i in idxs:
            which[i] = bi
    for r in range(mag.nt, mag.nt + mag.ntp):
        m = magic._phi_image(mag, A, r)
        for c in range(27):
            for row in range(27):
                if not m.data[row][c].is_zero():
                    assert which[row] == which[c]


def test_induced_grading_dispatcher():
    L, gr = magic.induced_grading("g2")
    assert L.dim == 14 and grading_type(gr) == (0, 7)
    with pytest.raises(magic.IncompatibleInputs):
        magic.induced_grading("nonsense")


def test_tricontext_rejects_dependent_basis():
    S = para_split()
    ts = magic.tri(S)
    dup = ts[:3] + [ts[0]]
    with pytest.raises(magic.IncompatibleInputs):
        magic.TriContext(S, dup)


def test_f4_z3_3_generic_parameters():
    _, lie, gr = magic.f4_z3_3((2, 3))
    assert lie.dim == 52
    assert verify_grading(gr).passed
    assert grading_type(gr) == (0, 26)


def test_verify_lie_sampled_mode_deterministic():
    mag8, _ = e8_pair()
    r1 = verify_lie(mag8.lie, mode="sampled", samples=2000, seed=99)
    r2 = verify_lie(mag8.lie, mode="sampled", samples=2000, seed=99)
    assert r1.passed and r2.passed
    assert r1.details == r2.details


def test_theta_eigenspace_dims_okubo_case():
    mag = magic.magic_g(compose.s1(), okubo11())
    dims = magic.theta_eigenspace_dims(mag)
    assert sum(dims) == 52
    # the fixed subalgebra is tri's derivation part (8) plus one iota diagonal
    assert dims[0] == 16


def test_d4_dempwolff_from_binary_grading():
    # collapsing the theta coordinate of the (14,7) grading leaves the
    # Z2^3-grading of the 28-dimensional orthogonal algebra: zero component
    # trivial and all seven components Cartan of dimension 4
    from forge.grading import AbelianGroup, GroupHom, coarsen
    PC, grPC = magic.graded_para_cayley()
    L, grL, _ = magic.orthogonal_graded(PC, grPC)
    src = grL.group
    tgt = AbelianGroup(0, (2, 2, 2))
    images = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)]
    hom = GroupHom(src, tgt, tuple(images))
    gr = coarsen(grL, hom)
    assert verify_grading(gr).passed
    assert grading_type(gr) == (0, 0, 0, 7)
    rep = magic.jordan_grading_check(L, gr, cartan_mode="components")
    assert rep.passed
    assert rep.details == {"components": 7, "component_dim": 4}


def test_o8_okubo_coarse_grading_with_cartan_zero_part():
    # dropping the theta coordinate of the (24,2) grading gives the
    # Z3^2-grading of type (0,0,8,1) whose zero component is a Cartan
    # subalgebra
    from forge.grading import AbelianGroup, GroupHom, coarsen
    O, grO = magic.graded_okubo()
    L, grL, _ = magic.orthogonal_graded(O, grO)
    tgt = AbelianGroup(0, (3, 3))
    hom = GroupHom(grL.group, tgt, ((1, 0), (0, 1), (0, 0)))
    gr = coarsen(grL, hom)
    assert verify_grading(gr).passed
    assert grading_type(gr) == (0, 0, 8, 1)
    zero = [L.basis_element(i) for i, d in enumerate(gr.degrees)
            if d == (0, 0)]
    assert len(zero) == 4
    assert magic.is_cartan(L, zero).passed


def test_theta_eigenvalue_grading_by_coarsening():
    # the eigenspaces of the order-3 automorphism grade the algebra over Z3;
    # they appear as the theta coordinate of the ternary fine grading
    from forge.grading import AbelianGroup, GroupHom, coarsen
    _, lie, gr = magic.f4_z3_3()
    tgt = AbelianGroup(0, (3,))
    hom = GroupHom(gr.group, tgt, ((0,), (0,), (1,)))
    grj = coarsen(gr, hom)
    assert verify_grading(grj).passed
    comps = {d: len(v) for d, v in grj.components().items()}
    assert comps == {(0,): 16, (1,): 18, (2,): 18}
    mag = magic.magic_g(compose.s1(), okubo11())
    assert magic.theta_eigenspace_dims(mag) == (16, 18, 18)
