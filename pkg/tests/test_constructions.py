import pytest

from superbracket.constructions import (
    AssembleError,
    BilinearFormPair,
    add_centre,
    assemble,
    build_char2_example,
    build_char3_example,
    build_double,
    build_osp,
    build_osp12,
    sl2_algebra,
)
from superbracket.fields import GF, QQ
from superbracket.linalg import Matrix, Vector
from superbracket.sl2 import RepMatrices
from superbracket.superalgebra import (
    MorphismCertificate,
    SuperAlgebra,
    check_morphism,
    supercentre,
    validate,
)

F3 = GF(3)
F5 = GF(5)


def test_osp12_moment_map_values():
    g = build_osp12(QQ)
    assert g.odd_bracket[0][0] == (2, 0, 0)  # {e0,e0} = 2E
    assert g.odd_bracket[0][1] == (0, -1, 0)  # {e0,e1} = -H
    assert g.odd_bracket[1][1] == (0, 0, -2)  # {e1,e1} = -2F
    assert validate(g).ok


def test_osp12_rejects_char2():
    with pytest.raises(ValueError):
        build_osp12(GF(2))


def test_osp12_char3_mode():
    g = build_osp12(F3)
    assert g.mode == "char3"
    assert validate(g).ok


@pytest.mark.parametrize("field", [QQ, F5])
@pytest.mark.parametrize(
    "d0,d1", [(1, 2), (2, 2), (1, 4), (3, 2)]
)
def test_osp_dimension_formula(field, d0, d1):
    g = build_osp(BilinearFormPair.standard(field, d0, d1), field)
    assert g.dim_even == d0 * (d0 - 1) // 2 + d1 * (d1 + 1) // 2
    assert g.dim_odd == d0 * d1
    assert validate(g).ok


def test_osp_without_odd_part_is_sp2():
    g = build_osp(BilinearFormPair.standard(QQ, 0, 2), QQ)
    assert (g.dim_even, g.dim_odd) == (3, 0)
    assert validate(g).ok


def test_osp_degenerate_forms_rejected():
    with pytest.raises(ValueError):
        BilinearFormPair(Matrix(QQ, [[0]]), BilinearFormPair.standard(QQ, 0, 2).omega)
    with pytest.raises(ValueError):
        BilinearFormPair.standard(QQ, 1, 3)  # odd symplectic dimension


def test_double_shape_and_rules():
    dbl = build_double(sl2_algebra(QQ), Matrix.identity(QQ, 3))
    assert (dbl.dim_even, dbl.dim_odd) == (3, 4)
    # {x, f} = 0 for the centralizer line
    for x in range(3):
        col = dbl.action_matrix(x).column(3)
        assert col.is_zero()
    # {v, w} = 0 inside the copy of the even part
    for u in range(3):
        for v in range(3):
            assert not any(dbl.odd_bracket[u][v])
    # {v_i, f} = e_i for phi = f = id
    for i in range(3):
        assert dbl.odd_bracket[i][3] == tuple(
            QQ.one() if k == i else QQ.zero() for k in range(3)
        )
    assert supercentre(dbl) == ([], [])


def test_double_rejects_non_isomorphism():
    with pytest.raises(ValueError):
        build_double(sl2_algebra(QQ), Matrix.diagonal(QQ, [1, 1, 2]))
    with pytest.raises(ValueError):
        build_double(sl2_algebra(QQ), Matrix.zero(QQ, 3, 3))


def test_double_with_nontrivial_iso():
    # Ad of diag(1, -1): E -> -E, H -> H, F -> -F is an automorphism
    phi = Matrix.diagonal(QQ, [-1, 1, -1])
    dbl = build_double(sl2_algebra(QQ), phi)
    assert validate(dbl).ok
    assert (dbl.dim_even, dbl.dim_odd) == (3, 4)


def test_add_centre_zero_is_identity():
    g = build_osp12(QQ)
    assert add_centre(g, 0) is g


def test_add_centre_grows_supercentre():
    g = add_centre(build_osp12(QQ), 3)
    assert g.dim_odd == 5
    even, odd = supercentre(g)
    assert even == [] and len(odd) == 3
    assert validate(g).ok


def test_assemble_reproduces_double():
    # adjoint + trivial module with the double's pairing equals the double
    dbl = build_double(sl2_algebra(QQ), Matrix.identity(QQ, 3))
    sl2 = sl2_algebra(QQ)
    rep = RepMatrices(
        *[
            Matrix(
                QQ,
                [
                    [dbl.action[x][v][w] for v in range(4)]
                    for w in range(4)
                ],
            )
            for x in range(3)
        ]
    )
    entries = [
        (u, v, x, dbl.odd_bracket[u][v][x])
        for u in range(4)
        for v in range(u, 4)
        for x in range(3)
        if dbl.odd_bracket[u][v][x]
    ]
    g = assemble(sl2, rep, entries)
    assert g == dbl
    cert = MorphismCertificate(g, dbl, Matrix.identity(QQ, 3), Matrix.identity(QQ, 4))
    assert check_morphism(cert) == (True, None)


def test_assemble_surfaces_validation_report():
    from superbracket.sl2 import IrrepSpec, build_irrep

    rep = build_irrep(IrrepSpec.standard_params(QQ, 1), QQ)
    with pytest.raises(AssembleError) as err:
        assemble(sl2_algebra(QQ), rep, [(0, 0, 0, 1)])  # not a valid bracket
    assert err.value.report.violations


def test_char3_example_matrices_and_validity():
    g = build_char3_example()
    assert g.mode == "char3" and (g.dim_even, g.dim_odd) == (3, 3)
    assert g.action_matrix(1) == Matrix.diagonal(F3, [1, -1, 0])  # rho(H)
    assert g.action_matrix(0) == Matrix(F3, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert g.action_matrix(2) == Matrix(F3, [[0, 0, 1], [1, 0, 0], [0, 0, 0]])
    assert validate(g).ok


def test_char3_restriction_is_osp12():
    g = build_char3_example()
    sub = g.restrict_odd([0, 1])
    assert validate(sub).ok
    target = build_osp12(F3)
    cert = MorphismCertificate(
        sub,
        target,
        Matrix.diagonal(F3, [-1, 1, -1]),
        Matrix.diagonal(F3, [1, -1]),
    )
    assert check_morphism(cert) == (True, None)


def test_char3_restriction_requires_closure():
    g = build_char3_example()
    with pytest.raises(ValueError):
        g.restrict_odd([0, 2])  # E moves v to e1, outside the subset


def test_char2_example_squaring():
    g = build_char2_example()
    assert g.mode == "char2"
    # (pE)^2 = 0, (pE + pF)^2 = H, polarization {pE, pF} = H
    f2 = g.field
    assert g.square_vec(Vector.unit(f2, 3, 0)).is_zero()
    assert g.square_vec(Vector(f2, [1, 0, 1])) == Vector.unit(f2, 3, 1)
    assert g.odd_bracket[0][2] == (0, 1, 0)
    assert g.odd_bracket[0][0] == (0, 0, 0)
    assert validate(g).ok


def test_char2_squaring_distinguishes_beyond_polarization():
    # adding a diagonal square (pH)^2 = H leaves the polarized bracket and
    # the axioms intact but changes the structure; the morphism check sees it
    g1 = build_char2_example()
    g2 = SuperAlgebra.from_entries(
        GF(2),
        3,
        3,
        bracket=[(0, 2, 1, 1)],
        action=[(0, 2, 1, 1), (2, 0, 1, 1)],
        mode="char2",
        squaring=[(0, 2, 1, 1), (1, 1, 1, 1)],
    )
    assert validate(g2).ok
    assert g2.odd_bracket == g1.odd_bracket
    ident = MorphismCertificate(
        g1, g2, Matrix.identity(GF(2), 3), Matrix.identity(GF(2), 3)
    )
    ok, why = check_morphism(ident)
    assert not ok and "squaring" in why
    same = MorphismCertificate(
        g1, g1, Matrix.identity(GF(2), 3), Matrix.identity(GF(2), 3)
    )
    assert check_morphism(same) == (True, None)


def test_char2_elementary_symmetric_squaring_rejected():
    # polarizing ab + ac + bc instead of ac breaks the squaring axiom
    g = SuperAlgebra.from_entries(
        GF(2),
        3,
        3,
        bracket=[(0, 2, 1, 1)],
        action=[(0, 2, 1, 1), (2, 0, 1, 1)],
        mode="char2",
        squaring=[(0, 1, 1, 1), (0, 2, 1, 1), (1, 2, 1, 1)],
    )
    report = validate(g)
    assert not report.ok
    assert report.identities() == {"char2_square"}
