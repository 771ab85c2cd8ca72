"""Builders for the concrete superalgebras the library works with.

* ``build_osp`` solves the defining linear condition of the orthosymplectic
  algebra inside graded End(V) and extracts structure constants.
* ``build_osp12`` is the explicit 3|2-dimensional model: sl(2) acting on its
  standard module with the moment map
  P((a,b),(c,d)) = [[-(ad+bc), 2ac], [-2bd, ad+bc]].
* ``build_double`` forms g + (g' + C(g')) from a Lie algebra isomorphism
  phi: g -> g', where C(g') is the space of equivariant maps g -> g'.
* ``add_centre`` / ``assemble`` are the generic glue.
* ``build_char3_example`` and ``build_char2_example`` are the small-
  characteristic structures that the standard classification does not cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .linalg import Matrix, Vector, kernel_basis, solve_linear
from .superalgebra import SuperAlgebra, ValidationReport, validate

__all__ = [
    "BilinearFormPair",
    "AssembleError",
    "sl2_algebra",
    "build_osp",
    "build_osp12",
    "build_double",
    "add_centre",
    "assemble",
    "build_char3_example",
    "build_char2_example",
]


class AssembleError(ValueError):
    """Assembly produced tensors violating the axioms; carries the report."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def _mode_for(field: Field) -> str:
    char = field.characteristic
    if char == 3:
        return "char3"
    if char == 2:
        return "char2"
    return "standard"


def sl2_algebra(field: Field) -> SuperAlgebra:
    """sl(2) with basis (E, H, F) as a purely even algebra."""
    mode = _mode_for(field)
    return SuperAlgebra.from_entries(
        field,
        3,
        0,
        bracket=[(0, 1, 0, -2), (0, 2, 1, 1), (1, 2, 2, -2)],
        mode=mode,
        squaring=[] if mode == "char2" else None,
    )


@dataclass(frozen=True)
class BilinearFormPair:
    """A nondegenerate symmetric form on the even space and a nondegenerate
    alternating form on the (even-dimensional) odd space."""

    q: Matrix
    omega: Matrix

    def __post_init__(self):
        q, om = self.q, self.omega
        if q.rows != q.cols or om.rows != om.cols:
            raise ValueError("forms must be square")
        if om.rows % 2:
            raise ValueError("the symplectic space must be even-dimensional")
        if q.transpose() != q:
            raise ValueError("q must be symmetric")
        if om.transpose() != -om:
            raise ValueError("omega must be antisymmetric")
        if q.rows and not q.det():
            raise ValueError("q is degenerate")
        if om.rows and not om.det():
            raise ValueError("omega is degenerate")

    @staticmethod
    def standard(field: Field, d0: int, d1: int) -> "BilinearFormPair":
        """Identity quadratic form and the standard symplectic form."""
        q = Matrix.identity(field, d0)
        half = d1 // 2
        z, one = field.zero(), field.one()
        om = [[z] * d1 for _ in range(d1)]
        for i in range(half):
            om[i][half + i] = one
            om[half + i][i] = field.neg(one)
        return BilinearFormPair(q, Matrix(field, om))


def build_osp(forms: BilinearFormPair, field: Field) -> SuperAlgebra:
    """Orthosymplectic algebra of (V, B) by solving B(f(v),v') +
    (-1)^{|f||v|} B(v,f(v')) = 0 for graded f, then extracting constants in
    the echelon basis of the solution space (flattening: even = rows of the
    V0-block then the V1-block; odd = rows of the V0->V1 block then the
    V1->V0 block)."""
    q, om = forms.q, forms.omega
    d0, d1 = q.rows, om.rows

    # even sector: blocks (A, D): A^T q + q A = 0 and D^T om + om D = 0
    n_even = d0 * d0 + d1 * d1

    def a_idx(k, l):
        return k * d0 + l

    def d_idx(k, l):
        return d0 * d0 + k * d1 + l

    rows = []
    for i in range(d0):
        for j in range(d0):
            row = [field.zero()] * n_even
            for k in range(d0):
                row[a_idx(k, i)] = field.add(row[a_idx(k, i)], q.data[k][j])
                row[a_idx(k, j)] = field.add(row[a_idx(k, j)], q.data[i][k])
            rows.append(row)
    for i in range(d1):
        for j in range(d1):
            row = [field.zero()] * n_even
            for k in range(d1):
                row[d_idx(k, i)] = field.add(row[d_idx(k, i)], om.data[k][j])
                row[d_idx(k, j)] = field.add(row[d_idx(k, j)], om.data[i][k])
            rows.append(row)
    even_basis_flat = kernel_basis(Matrix(field, rows)) if n_even else []

    # odd sector: blocks (X: V0->V1, Y: V1->V0): X^T om + q Y = 0
    n_odd = d1 * d0 + d0 * d1

    def x_idx(k, l):
        return k * d0 + l

    def y_idx(k, l):
        return d1 * d0 + k * d1 + l

    rows = []
    for i in range(d0):
        for j in range(d1):
            row = [field.zero()] * n_odd
            for k in range(d1):
                row[x_idx(k, i)] = field.add(row[x_idx(k, i)], om.data[k][j])
            for k in range(d0):
                row[y_idx(k, j)] = field.add(row[y_idx(k, j)], q.data[i][k])
            rows.append(row)
    for j in range(d1):
        for i in range(d0):
            row = [field.zero()] * n_odd
            for k in range(d0):
                row[y_idx(k, j)] = field.add(row[y_idx(k, j)], q.data[k][i])
            for k in range(d1):
                row[x_idx(k, i)] = field.add(
                    row[x_idx(k, i)], field.neg(om.data[j][k])
                )
            rows.append(row)
    odd_basis_flat = kernel_basis(Matrix(field, rows)) if n_odd else []

    dim_even = d0 * (d0 - 1) // 2 + d1 * (d1 + 1) // 2
    dim_odd = d0 * d1
    assert len(even_basis_flat) == dim_even, "even solution space has wrong dimension"
    assert len(odd_basis_flat) == dim_odd, "odd solution space has wrong dimension"

    n = d0 + d1

    def even_matrix(flat: Vector) -> Matrix:
        m = [[field.zero()] * n for _ in range(n)]
        for k in range(d0):
            for l in range(d0):
                m[k][l] = flat.entries[a_idx(k, l)]
        for k in range(d1):
            for l in range(d1):
                m[d0 + k][d0 + l] = flat.entries[d_idx(k, l)]
        return Matrix(field, m)

    def odd_matrix(flat: Vector) -> Matrix:
        m = [[field.zero()] * n for _ in range(n)]
        for k in range(d1):
            for l in range(d0):
                m[d0 + k][l] = flat.entries[x_idx(k, l)]
        for k in range(d0):
            for l in range(d1):
                m[k][d0 + l] = flat.entries[y_idx(k, l)]
        return Matrix(field, m)

    def even_flat(m: Matrix) -> Vector:
        out = [field.zero()] * n_even
        for k in range(d0):
            for l in range(d0):
                out[a_idx(k, l)] = m.data[k][l]
        for k in range(d1):
            for l in range(d1):
                out[d_idx(k, l)] = m.data[d0 + k][d0 + l]
        return Vector(field, out)

    def odd_flat(m: Matrix) -> Vector:
        out = [field.zero()] * n_odd
        for k in range(d1):
            for l in range(d0):
                out[x_idx(k, l)] = m.data[d0 + k][l]
        for k in range(d0):
            for l in range(d1):
                out[y_idx(k, l)] = m.data[k][d0 + l]
        return Vector(field, out)

    even_mats = [even_matrix(v) for v in even_basis_flat]
    odd_mats = [odd_matrix(v) for v in odd_basis_flat]
    even_cols = (
        Matrix.from_columns(field, even_basis_flat) if even_basis_flat else None
    )
    odd_cols = Matrix.from_columns(field, odd_basis_flat) if odd_basis_flat else None

    def even_coords(m: Matrix) -> Vector:
        target = even_flat(m)
        if even_cols is None:
            assert target.is_zero()
            return Vector(field, [])
        sol = solve_linear(even_cols, target)
        assert sol is not None, "bracket left the even solution space"
        return sol

    def odd_coords(m: Matrix) -> Vector:
        target = odd_flat(m)
        if odd_cols is None:
            assert target.is_zero()
            return Vector(field, [])
        sol = solve_linear(odd_cols, target)
        assert sol is not None, "bracket left the odd solution space"
        return sol

    bracket = [
        [list(even_coords(ea.commutator(eb)).entries) for eb in even_mats]
        for ea in even_mats
    ]
    action = [
        [list(odd_coords(ea @ ob - ob @ ea).entries) for ob in odd_mats]
        for ea in even_mats
    ]
    odd_bracket = [
        [list(even_coords(oa.anticommutator(ob)).entries) for ob in odd_mats]
        for oa in odd_mats
    ]
    g = SuperAlgebra.from_tensors(
        field, bracket, action, odd_bracket, mode=_mode_for(field)
    )
    report = validate(g)
    if not report.ok:
        raise AssembleError(report)
    return g


def build_osp12(field: Field) -> SuperAlgebra:
    """The 3|2-dimensional orthosymplectic algebra over k (char != 2).

    Even basis (E, H, F); odd basis (e0, e1) carrying the standard module;
    odd brackets {e0,e0} = 2E, {e0,e1} = -H, {e1,e1} = -2F.  Over a field
    of characteristic 3 the same constants are returned in char3 mode.
    """
    if field.characteristic == 2:
        raise ValueError("the moment-map model is not defined in characteristic 2")
    return SuperAlgebra.from_entries(
        field,
        3,
        2,
        bracket=[(0, 1, 0, -2), (0, 2, 1, 1), (1, 2, 2, -2)],
        action=[
            (0, 1, 0, 1),  # E e1 = e0
            (1, 0, 0, 1),  # H e0 = e0
            (1, 1, 1, -1),  # H e1 = -e1
            (2, 0, 1, 1),  # F e0 = e1
        ],
        odd_bracket=[
            (0, 0, 0, 2),  # {e0,e0} = 2E
            (0, 1, 1, -1),  # {e0,e1} = -H
            (1, 1, 2, -2),  # {e1,e1} = -2F
        ],
        mode=_mode_for(field),
    )


def build_double(g: SuperAlgebra, phi: Matrix) -> SuperAlgebra:
    """The superalgebra g + (g' + C(g')) defined by an isomorphism phi.

    g must be purely even; g' is a coordinate copy of g and C(g') is the
    solution space of f . ad(x) = ad(phi(x)) . f inside Hom(g, g').  The
    odd part is g' + C(g'); the only nonzero odd brackets pair the two:
    {v, f} = phi^{-1}(f(phi^{-1}(v))).
    """
    if g.dim_odd != 0:
        raise ValueError("build_double expects a purely even algebra")
    if g.mode != "standard":
        raise ValueError("build_double requires characteristic not 2 or 3")
    field = g.field
    n = g.dim_even
    phi_inv = phi.inverse()
    if phi_inv is None:
        raise ValueError("phi is singular")
    ads = [g.ad(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            img = phi @ Vector(field, g.bracket[i][j])
            if img != g.even_bracket_vec(phi.column(i), phi.column(j)):
                raise ValueError("phi is not a Lie algebra isomorphism")

    # centralizer: kernel of f -> f ad(x) - ad(phi x) f over all basis x
    rows = []
    for idx in range(n):
        ad_x = ads[idx]
        ad_phix = g.ad_vec(phi.column(idx))
        for r in range(n):
            for c in range(n):
                row = [field.zero()] * (n * n)
                for a in range(n):
                    row[r * n + a] = field.add(row[r * n + a], ad_x.data[a][c])
                    row[a * n + c] = field.sub(row[a * n + c], ad_phix.data[r][a])
                rows.append(row)
    cent = kernel_basis(Matrix(field, rows))
    z = len(cent)
    cent_mats = [
        Matrix(field, [[v.entries[r * n + c] for c in range(n)] for r in range(n)])
        for v in cent
    ]

    d1 = n + z
    action_entries = []
    for x in range(n):
        phix = phi.column(x)
        for j in range(n):
            img = g.even_bracket_vec(phix, Vector.unit(field, n, j))
            for w, val in enumerate(img.entries):
                if val:
                    action_entries.append((x, j, w, val))
        # centralizer coordinates are killed by the action
    odd_entries = []
    for j in range(n):
        vj = phi_inv.column(j)  # phi^{-1}(v_j)
        for k, fk in enumerate(cent_mats):
            img = phi_inv @ (fk @ vj)
            for x, val in enumerate(img.entries):
                if val:
                    odd_entries.append((j, n + k, x, val))
    dbl = SuperAlgebra.from_entries(
        field,
        n,
        d1,
        bracket=[
            (i, j, k, g.bracket[i][j][k])
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(n)
            if g.bracket[i][j][k]
        ],
        action=action_entries,
        odd_bracket=odd_entries,
        mode="standard",
    )
    report = validate(dbl)
    if not report.ok:
        raise AssembleError(report)
    return dbl


def add_centre(g: SuperAlgebra, z: int) -> SuperAlgebra:
    """Append z odd coordinates with zero action and zero brackets."""
    if z < 0:
        raise ValueError("z must be nonnegative")
    if z == 0:
        return g
    field = g.field
    d0, d1 = g.dim_even, g.dim_odd
    new_d1 = d1 + z
    zero = field.zero()
    action = [
        [
            [g.action[x][v][w] if v < d1 and w < d1 else zero for w in range(new_d1)]
            for v in range(new_d1)
        ]
        for x in range(d0)
    ]
    odd = [
        [
            [
                g.odd_bracket[u][v][k] if u < d1 and v < d1 else zero
                for k in range(d0)
            ]
            for v in range(new_d1)
        ]
        for u in range(new_d1)
    ]
    sq = None
    if g.mode == "char2":
        sq = [
            [
                [
                    g.squaring[u][v][k] if u < d1 and v < d1 else zero
                    for k in range(d0)
                ]
                for v in range(new_d1)
            ]
            for u in range(new_d1)
        ]
    return SuperAlgebra(
        field, d0, new_d1, g.bracket, action, odd, mode=g.mode, squaring=sq
    )


def assemble(
    even: SuperAlgebra,
    rep,
    odd_entries=(),
    odd_tensor=None,
    mode: str = "standard",
) -> SuperAlgebra:
    """Glue an even algebra with basis (E, H, F), a module given by
    RepMatrices, and an odd bracket into a validated superalgebra.

    The odd bracket comes either as (u, v, x, coeff) entries with u <= v or
    as a dense d1 x d1 x d0 tensor (upper part authoritative).  Raises
    AssembleError carrying the full report when the axioms fail.
    """
    field = even.field
    if even.dim_odd != 0 or even.dim_even != 3:
        raise ValueError("assemble expects a purely even 3-dimensional algebra")
    mats = rep.matrices()
    d1 = rep.dim
    action = [
        [[mats[x].data[w][v] for w in range(d1)] for v in range(d1)]
        for x in range(3)
    ]
    if odd_tensor is None:
        odd_tensor = [[[field.zero()] * 3 for _ in range(d1)] for _ in range(d1)]
        for u, v, x, coeff in odd_entries:
            odd_tensor[u][v][x] = field.add(odd_tensor[u][v][x], field.coerce(coeff))
    g = SuperAlgebra.from_tensors(
        field, even.bracket, action, odd_tensor, mode=mode
    )
    report = validate(g)
    if not report.ok:
        raise AssembleError(report)
    return g


def build_char3_example() -> SuperAlgebra:
    """A 3|3-dimensional structure over F_3 outside the standard
    classification: sl(2) acts on basis (e0, e1, v) by

        H = diag(1,-1,0),  E(e1)=e0, E(v)=e1,  F(e0)=e1, F(v)=e0,

    with odd brackets {e0,e0}=E, {e0,e1}=H, {e1,e1}=-F, {v,e0}=F,
    {v,v}=H, {v,e1}=-E.  It satisfies all char3 axioms including the cubic
    one, and its span{e0,e1} restriction is the 3|2 moment-map algebra.
    """
    field = Field.prime(3)
    return SuperAlgebra.from_entries(
        field,
        3,
        3,
        bracket=[(0, 1, 0, -2), (0, 2, 1, 1), (1, 2, 2, -2)],
        action=[
            (0, 1, 0, 1),  # E e1 = e0
            (0, 2, 1, 1),  # E v  = e1
            (1, 0, 0, 1),  # H e0 = e0
            (1, 1, 1, -1),  # H e1 = -e1
            (2, 0, 1, 1),  # F e0 = e1
            (2, 2, 0, 1),  # F v  = e0
        ],
        odd_bracket=[
            (0, 0, 0, 1),  # {e0,e0} = E
            (0, 1, 1, 1),  # {e0,e1} = H
            (1, 1, 2, -1),  # {e1,e1} = -F
            (0, 2, 2, 1),  # {v,e0} = F
            (2, 2, 1, 1),  # {v,v} = H
            (1, 2, 0, -1),  # {v,e1} = -E
        ],
        mode="char3",
    )


def build_char2_example() -> SuperAlgebra:
    """A 3|3-dimensional structure over F_2: the even part acts on an odd
    copy of itself by the adjoint action, and odd elements square by

        (a pE + b pH + c pF)^2 = (a c) H,

    whose polarization pairs pE with pF: {pE, pF} = H, everything else 0.
    Both sides of {x^2, y} = {x, {x, y}} vanish identically for this
    squaring, which the char2 validator certifies.
    """
    field = Field.prime(2)
    # adjoint action of the characteristic-2 triple: [E,F] = H is the only
    # nonzero bracket, so E moves pF to pH, F moves pE to pH, H acts by zero
    return SuperAlgebra.from_entries(
        field,
        3,
        3,
        bracket=[(0, 2, 1, 1)],
        action=[
            (0, 2, 1, 1),  # E pF = pH
            (2, 0, 1, 1),  # F pE = pH
        ],
        mode="char2",
        squaring=[(0, 2, 1, 1)],  # (pE + pF)-mixed coefficient lands on H
    )
