import pytest

from superbracket.constructions import (
    add_centre,
    build_double,
    build_osp12,
    sl2_algebra,
)
from superbracket.fields import GF, QQ
from superbracket.linalg import Matrix, Vector
from superbracket.moduli import odd_bracket_space
from superbracket.sl2 import IrrepSpec, RepMatrices, build_irrep
from superbracket.superalgebra import (
    MorphismCertificate,
    SuperAlgebra,
    check_morphism,
    is_ideal,
    is_simple_3dim,
    killing_form,
    p_span,
    supercentre,
    validate,
)

F5 = GF(5)


def odd_units(g):
    return [Vector.unit(g.field, g.dim_odd, i) for i in range(g.dim_odd)]


def test_osp12_validates():
    for field in (QQ, F5, GF(7)):
        assert validate(build_osp12(field)).ok


def test_zero_odd_bracket_always_valid():
    # any valid even bracket + representation with zero odd bracket passes
    rep = build_irrep(IrrepSpec.standard_params(QQ, 3), QQ)
    g = SuperAlgebra.from_tensors(
        QQ,
        sl2_algebra(QQ).bracket,
        [
            [[m.data[w][v] for w in range(4)] for v in range(4)]
            for m in rep.matrices()
        ],
        [[[0] * 3 for _ in range(4)] for _ in range(4)],
    )
    assert validate(g).ok


def test_negated_entry_breaks_relation_1():
    g = build_osp12(QQ)
    tensors = [[list(r) for r in plane] for plane in g.odd_bracket]
    tensors[1][1] = [QQ.neg(x) for x in tensors[1][1]]  # negate {e1,e1}
    bad = SuperAlgebra.from_tensors(QQ, g.bracket, g.action, tensors)
    report = validate(bad)
    assert not report.ok
    assert ("relation_1", (0, 1, 1)) in [
        (v.identity, v.indices) for v in report.violations
    ]


def test_mode_characteristic_guards():
    with pytest.raises(ValueError):
        SuperAlgebra.from_entries(GF(3), 1, 0, mode="standard")
    with pytest.raises(ValueError):
        SuperAlgebra.from_entries(QQ, 1, 0, mode="char3")
    with pytest.raises(ValueError):
        # char2 requires the squaring tensor at the raw-constructor level
        SuperAlgebra(GF(2), 1, 0, [[[0]]], [[]], [], mode="char2", squaring=None)


def test_entry_bounds():
    with pytest.raises(ValueError):
        SuperAlgebra.from_entries(QQ, 2, 0, bracket=[(1, 0, 0, 1)])  # needs i < j
    with pytest.raises(ValueError):
        SuperAlgebra.from_entries(QQ, 2, 2, odd_bracket=[(1, 0, 0, 1)])  # u <= v


def test_supercentre_osp12():
    even, odd = supercentre(build_osp12(QQ))
    assert even == [] and odd == []


def test_supercentre_added_lines():
    g = add_centre(build_osp12(QQ), 2)
    even, odd = supercentre(g)
    assert even == []
    assert len(odd) == 2
    assert all(v.entries[0] == 0 and v.entries[1] == 0 for v in odd)


def test_supercentre_double_trivial():
    dbl = build_double(sl2_algebra(QQ), Matrix.identity(QQ, 3))
    even, odd = supercentre(dbl)
    assert even == [] and odd == []


def test_supercentre_brackets_vanish():
    # the supercentre is a sub-superalgebra on which all brackets vanish
    g = add_centre(build_osp12(F5), 3)
    even, odd = supercentre(g)
    for z in odd:
        for x in range(3):
            assert g.act_vec(Vector.unit(F5, 3, x), z).is_zero()
        for u in odd_units(g):
            assert g.odd_bracket_vec(z, u).is_zero()


def test_p_span_osp12_full():
    g = build_osp12(QQ)
    units = odd_units(g)
    span = p_span(g, units, units)
    assert len(span) == 3  # all of sl(2)
    assert is_ideal(g, span)


def test_p_span_trivial_submodule():
    g = add_centre(build_osp12(QQ), 2)
    centre = [Vector.unit(QQ, 4, 2), Vector.unit(QQ, 4, 3)]
    assert p_span(g, centre, centre) == []


def test_p_span_double_copy_is_zero():
    dbl = build_double(sl2_algebra(QQ), Matrix.identity(QQ, 3))
    copy = [Vector.unit(QQ, 4, i) for i in range(3)]
    assert p_span(dbl, copy, copy) == []
    # but pairing the copy with the whole odd part fills sl(2)
    assert len(p_span(dbl, copy, odd_units(dbl))) == 3


def test_killing_form_sl2():
    k = killing_form(sl2_algebra(QQ))
    assert k == Matrix(QQ, [[0, 0, 4], [0, 8, 0], [4, 0, 0]])
    assert is_simple_3dim(sl2_algebra(QQ))


def test_killing_abelian_and_heisenberg():
    abelian = SuperAlgebra.from_entries(QQ, 3, 0)
    assert killing_form(abelian).is_zero()
    assert not is_simple_3dim(abelian)
    heis = SuperAlgebra.from_entries(QQ, 3, 0, bracket=[(0, 1, 2, 1)])
    assert not killing_form(heis).det()
    assert not is_simple_3dim(heis)


def test_killing_rejects_other_dims():
    with pytest.raises(ValueError):
        is_simple_3dim(SuperAlgebra.from_entries(QQ, 2, 0))


def test_morphism_identity():
    for g in (build_osp12(QQ), build_double(sl2_algebra(F5), Matrix.identity(F5, 3))):
        cert = MorphismCertificate(
            g, g, Matrix.identity(g.field, 3), Matrix.identity(g.field, g.dim_odd)
        )
        assert check_morphism(cert) == (True, None)


def test_morphism_odd_swap_fails_at_first_pair():
    g = build_osp12(QQ)
    swap = Matrix(QQ, [[0, 1], [1, 0]])
    ok, why = check_morphism(MorphismCertificate(g, g, Matrix.identity(QQ, 3), swap))
    assert not ok
    assert "(0,0)" in why


@pytest.mark.parametrize("t,expect", [(2, False), (-1, True), (1, True)])
def test_morphism_odd_scaling(t, expect):
    g = build_osp12(QQ)
    cert = MorphismCertificate(
        g, g, Matrix.identity(QQ, 3), Matrix.identity(QQ, 2).scaled(t)
    )
    assert check_morphism(cert)[0] is expect


def test_morphism_singular_block_distinct_reason():
    g = build_osp12(QQ)
    singular = Matrix.zero(QQ, 2, 2)
    ok, why = check_morphism(
        MorphismCertificate(g, g, Matrix.identity(QQ, 3), singular)
    )
    assert not ok and "singular" in why


def _random_oracle_instance(rng, dims):
    even = sl2_algebra(F5)
    rep = RepMatrices.direct_sum(
        [build_irrep(IrrepSpec.standard_params(F5, d - 1), F5) for d in dims]
    )
    space = odd_bracket_space(F5, even.bracket, list(rep.matrices()))
    tensors = [
        [[F5.zero()] * 3 for _ in range(rep.dim)] for _ in range(rep.dim)
    ]
    for basis_tensor in space.basis:
        c = rng.randrange(5)
        for u in range(rep.dim):
            for v in range(rep.dim):
                for x in range(3):
                    tensors[u][v][x] = F5.add(
                        tensors[u][v][x], F5.mul(c, basis_tensor[u][v][x])
                    )
    g = SuperAlgebra.from_tensors(
        F5,
        even.bracket,
        [
            [[m.data[w][v] for w in range(rep.dim)] for v in range(rep.dim)]
            for m in rep.matrices()
        ],
        tensors,
    )
    assert validate(g).ok
    return g, dims


def test_vanishing_span_forces_zero_bracket(rng):
    # a nontrivially-acted submodule whose pairing with everything vanishes
    # forces the whole odd bracket to vanish
    for dims in [(2,), (2, 1), (3, 1), (2, 1, 1), (3, 1, 1)]:
        for _ in range(4):
            g, _ = _random_oracle_instance(rng, dims)
            w = [Vector.unit(F5, g.dim_odd, i) for i in range(dims[0])]
            full = odd_units(g)
            if not p_span(g, full, w):
                assert g.odd_bracket_is_zero()


def test_nonzero_self_span_confines_action(rng):
    # if the first summand pairs nontrivially with itself, the whole action
    # image lands inside it
    for dims in [(2,), (2, 1), (2, 1, 1)]:
        for _ in range(4):
            g, _ = _random_oracle_instance(rng, dims)
            w = [Vector.unit(F5, g.dim_odd, i) for i in range(dims[0])]
            if p_span(g, w, w):
                for x in range(3):
                    mat = g.action_matrix(x)
                    for col in mat.columns():
                        coords = [col.entries[i] for i in range(dims[0], g.dim_odd)]
                        assert not any(coords)
