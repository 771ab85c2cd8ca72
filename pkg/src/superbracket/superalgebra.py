"""Structure-constant model of finite-dimensional Lie superalgebras.

A superalgebra here is g = g0 + g1 over an exact field, stored as three
dense tensors:

* ``bracket[i][j]``      -- coordinates of [e_i, e_j] in the even basis,
* ``action[x][v]``       -- coordinates of e_x(f_v) in the odd basis,
* ``odd_bracket[u][v]``  -- coordinates of {f_u, f_v} in the even basis.

Antisymmetry of the even bracket and symmetry of the odd one are enforced
structurally: constructors take the entries with i < j (resp. u <= v) and
mirror them, so those symmetries cannot be violated by construction.

Three axiom modes are supported.  ``standard`` is the usual super Jacobi
identity, split into the four graded checks (even Jacobi, representation
property, and the two compatibility relations of the odd bracket).
``char3`` additionally demands {x,{x,x}} = 0 for odd x, checked monomial by
monomial as a cubic polynomial map, since in characteristic 3 that identity
is strictly stronger than the symmetric trilinear relation.  ``char2``
replaces the odd bracket by a squaring map v -> v^2 (the odd bracket is its
polarization) and validates {x^2, y} = {x, {x, y}} for all y, again per
monomial in the coordinates of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field
from .linalg import (
    DimensionMismatch,
    Matrix,
    Vector,
    echelon_span,
    kernel_basis,
    span_contains,
)

__all__ = [
    "SuperAlgebra",
    "MorphismCertificate",
    "ValidationReport",
    "Violation",
    "MODES",
    "validate",
    "supercentre",
    "p_span",
    "is_ideal",
    "check_morphism",
    "killing_form",
    "is_simple_3dim",
]

MODES = ("standard", "char3", "char2")


class ShapeError(ValueError):
    """Structure-constant entry out of range or tensor shape mismatch."""


@dataclass(frozen=True)
class Violation:
    identity: str  # "even_jacobi" | "representation" | "relation_1" | ...
    indices: tuple
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.identity} violated at {self.indices}"
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def identities(self) -> set[str]:
        return {v.identity for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def _zero_tensor(field, a, b, c):
    z = field.zero()
    return [[[z] * c for _ in range(b)] for _ in range(a)]


def _freeze3(t):
    return tuple(tuple(tuple(row) for row in plane) for plane in t)


class SuperAlgebra:
    """Immutable Lie superalgebra given by structure constants."""

    __slots__ = (
        "field",
        "dim_even",
        "dim_odd",
        "mode",
        "bracket",
        "action",
        "odd_bracket",
        "squaring",
    )

    def __init__(
        self,
        field: Field,
        dim_even: int,
        dim_odd: int,
        bracket,
        action,
        odd_bracket,
        mode: str = "standard",
        squaring=None,
    ):
        if mode not in MODES:
            raise ShapeError(f"unknown axiom mode {mode!r}")
        char = field.characteristic
        if mode == "standard" and char in (2, 3):
            raise ShapeError("standard mode requires characteristic not 2 or 3")
        if mode == "char3" and char != 3:
            raise ShapeError("char3 mode requires characteristic 3")
        if mode == "char2" and char != 2:
            raise ShapeError("char2 mode requires characteristic 2")
        if mode == "char2" and squaring is None:
            raise ShapeError("char2 mode needs a squaring tensor")
        if mode != "char2" and squaring is not None:
            raise ShapeError("squaring is only meaningful in char2 mode")
        self.field = field
        self.dim_even = dim_even
        self.dim_odd = dim_odd
        self.mode = mode
        self.bracket = _freeze3(bracket)
        self.action = _freeze3(action)
        self.odd_bracket = _freeze3(odd_bracket)
        self.squaring = _freeze3(squaring) if squaring is not None else None
        self._check_shapes()

    def _check_shapes(self):
        d0, d1 = self.dim_even, self.dim_odd
        if len(self.bracket) != d0 or any(
            len(p) != d0 or any(len(r) != d0 for r in p) for p in self.bracket
        ):
            raise ShapeError("even bracket tensor must be d0 x d0 x d0")
        if len(self.action) != d0 or any(
            len(p) != d1 or any(len(r) != d1 for r in p) for p in self.action
        ):
            raise ShapeError("action tensor must be d0 x d1 x d1")
        if len(self.odd_bracket) != d1 or any(
            len(p) != d1 or any(len(r) != d0 for r in p) for p in self.odd_bracket
        ):
            raise ShapeError("odd bracket tensor must be d1 x d1 x d0")
        if self.squaring is not None and (
            len(self.squaring) != d1
            or any(
                len(p) != d1 or any(len(r) != d0 for r in p) for p in self.squaring
            )
        ):
            raise ShapeError("squaring tensor must be d1 x d1 x d0")

    # --- constructors ----------------------------------------------------

    @classmethod
    def from_entries(
        cls,
        field: Field,
        dim_even: int,
        dim_odd: int,
        bracket: Iterable = (),
        action: Iterable = (),
        odd_bracket: Iterable = (),
        mode: str = "standard",
        squaring: Iterable | None = None,
    ) -> "SuperAlgebra":
        """Build from sparse entries ``(i, j, k, coeff)``.

        Even bracket entries require i < j and are mirrored with a sign;
        odd bracket and squaring entries require u <= v and are mirrored
        symmetrically.  In char2 mode the odd bracket is not an input: it
        is derived from the squaring by polarization.
        """
        c = _zero_tensor(field, dim_even, dim_even, dim_even)
        for i, j, k, coeff in bracket:
            if not (0 <= i < j < dim_even and 0 <= k < dim_even):
                raise ShapeError(f"bracket entry ({i},{j},{k}) out of range (need i<j)")
            val = field.coerce(coeff)
            c[i][j][k] = field.add(c[i][j][k], val)
            c[j][i][k] = field.neg(c[i][j][k])
        a = _zero_tensor(field, dim_even, dim_odd, dim_odd)
        for x, v, w, coeff in action:
            if not (0 <= x < dim_even and 0 <= v < dim_odd and 0 <= w < dim_odd):
                raise ShapeError(f"action entry ({x},{v},{w}) out of range")
            a[x][v][w] = field.add(a[x][v][w], field.coerce(coeff))

        if mode == "char2":
            if list(odd_bracket):
                raise ShapeError("char2 mode derives the odd bracket from squaring")
            s = _zero_tensor(field, dim_odd, dim_odd, dim_even)
            for v, w, x, coeff in squaring or ():
                if not (0 <= v <= w < dim_odd and 0 <= x < dim_even):
                    raise ShapeError(
                        f"squaring entry ({v},{w},{x}) out of range (need v<=w)"
                    )
                s[v][w][x] = field.add(s[v][w][x], field.coerce(coeff))
            p = _zero_tensor(field, dim_odd, dim_odd, dim_even)
            for v in range(dim_odd):
                for w in range(v + 1, dim_odd):
                    # polarization: {f_v, f_w} = (f_v+f_w)^2 + f_v^2 + f_w^2;
                    # the diagonal {f_v, f_v} = 2 f_v^2 vanishes in char 2
                    p[v][w] = list(s[v][w])
                    p[w][v] = list(s[v][w])
            return cls(
                field, dim_even, dim_odd, c, a, p, mode=mode, squaring=s
            )

        p = _zero_tensor(field, dim_odd, dim_odd, dim_even)
        for u, v, x, coeff in odd_bracket:
            if not (0 <= u <= v < dim_odd and 0 <= x < dim_even):
                raise ShapeError(
                    f"odd bracket entry ({u},{v},{x}) out of range (need u<=v)"
                )
            val = field.add(p[u][v][x], field.coerce(coeff))
            p[u][v][x] = val
            p[v][u][x] = val
        return cls(field, dim_even, dim_odd, c, a, p, mode=mode)

    @classmethod
    def from_tensors(
        cls,
        field: Field,
        bracket,
        action,
        odd_bracket,
        mode: str = "standard",
        squaring=None,
    ) -> "SuperAlgebra":
        """Build from dense tensors, re-canonicalizing the symmetries from
        the upper-triangular parts."""
        d0 = len(bracket)
        d1 = len(odd_bracket)
        c = _zero_tensor(field, d0, d0, d0)
        for i in range(d0):
            for j in range(i + 1, d0):
                row = [field.coerce(x) for x in bracket[i][j]]
                c[i][j] = row
                c[j][i] = [field.neg(x) for x in row]
        a = [
            [[field.coerce(x) for x in action[x_][v]] for v in range(d1)]
            for x_ in range(d0)
        ]
        p = _zero_tensor(field, d1, d1, d0)
        for u in range(d1):
            for v in range(u, d1):
                row = [field.coerce(x) for x in odd_bracket[u][v]]
                p[u][v] = row
                p[v][u] = list(row)
        sq = None
        if squaring is not None:
            sq = _zero_tensor(field, d1, d1, d0)
            for v in range(d1):
                for w in range(v, d1):
                    sq[v][w] = [field.coerce(x) for x in squaring[v][w]]
        return cls(field, d0, d1, c, a, p, mode=mode, squaring=sq)

    # --- basic algebra operations -----------------------------------------

    def even_bracket_vec(self, x: Vector, y: Vector) -> Vector:
        f = self.field
        out = [f.zero()] * self.dim_even
        for i, xi in enumerate(x.entries):
            if not xi:
                continue
            for j, yj in enumerate(y.entries):
                if not yj:
                    continue
                coeff = f.mul(xi, yj)
                row = self.bracket[i][j]
                for k in range(self.dim_even):
                    if row[k]:
                        out[k] = f.add(out[k], f.mul(coeff, row[k]))
        return Vector(f, out)

    def act_vec(self, x: Vector, v: Vector) -> Vector:
        f = self.field
        out = [f.zero()] * self.dim_odd
        for i, xi in enumerate(x.entries):
            if not xi:
                continue
            plane = self.action[i]
            for u, vu in enumerate(v.entries):
                if not vu:
                    continue
                coeff = f.mul(xi, vu)
                row = plane[u]
                for w in range(self.dim_odd):
                    if row[w]:
                        out[w] = f.add(out[w], f.mul(coeff, row[w]))
        return Vector(f, out)

    def odd_bracket_vec(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        out = [f.zero()] * self.dim_even
        for a, ua in enumerate(u.entries):
            if not ua:
                continue
            for b, vb in enumerate(v.entries):
                if not vb:
                    continue
                coeff = f.mul(ua, vb)
                row = self.odd_bracket[a][b]
                for k in range(self.dim_even):
                    if row[k]:
                        out[k] = f.add(out[k], f.mul(coeff, row[k]))
        return Vector(f, out)

    def square_vec(self, v: Vector) -> Vector:
        """The squaring map applied to an odd vector (char2 mode only)."""
        if self.squaring is None:
            raise ShapeError("squaring is only defined in char2 mode")
        f = self.field
        out = [f.zero()] * self.dim_even
        for a in range(self.dim_odd):
            va = v.entries[a]
            if not va:
                continue
            for b in range(a, self.dim_odd):
                vb = v.entries[b]
                if not vb:
                    continue
                coeff = f.mul(va, vb)
                row = self.squaring[a][b]
                for k in range(self.dim_even):
                    if row[k]:
                        out[k] = f.add(out[k], f.mul(coeff, row[k]))
        return Vector(f, out)

    def ad(self, i: int) -> Matrix:
        """Matrix of ad(e_i) on the even part (columns are [e_i, e_j])."""
        f = self.field
        return Matrix(
            f,
            [
                [self.bracket[i][j][k] for j in range(self.dim_even)]
                for k in range(self.dim_even)
            ],
        )

    def ad_vec(self, x: Vector) -> Matrix:
        cols = [
            self.even_bracket_vec(x, Vector.unit(self.field, self.dim_even, j))
            for j in range(self.dim_even)
        ]
        return Matrix.from_columns(self.field, cols)

    def action_matrix(self, i: int) -> Matrix:
        """Matrix of e_x acting on the odd part (columns are e_x(f_v))."""
        f = self.field
        return Matrix(
            f,
            [
                [self.action[i][v][w] for v in range(self.dim_odd)]
                for w in range(self.dim_odd)
            ],
        )

    def action_matrix_vec(self, x: Vector) -> Matrix:
        f = self.field
        m = Matrix.zero(f, self.dim_odd, self.dim_odd)
        for i, xi in enumerate(x.entries):
            if xi:
                m = m + self.action_matrix(i).scaled(xi)
        return m

    def odd_pair_basis(self, u: int, v: int) -> Vector:
        return Vector(self.field, self.odd_bracket[u][v])

    def even_part(self) -> "SuperAlgebra":
        """The even part as a stand-alone (purely even) algebra."""
        f = self.field
        return SuperAlgebra(
            f,
            self.dim_even,
            0,
            self.bracket,
            [[] for _ in range(self.dim_even)],
            [],
            mode=self.mode if self.mode != "char2" else "char2",
            squaring=[] if self.mode == "char2" else None,
        )

    def conjugated(self, m_even: Matrix, m_odd: Matrix) -> "SuperAlgebra":
        """Structure constants in the new graded basis whose vectors are the
        columns of (m_even, m_odd), expressed in the old one."""
        f = self.field
        if m_even.rows != self.dim_even or m_odd.rows != self.dim_odd:
            raise DimensionMismatch("basis-change block sizes")
        inv_e = m_even.inverse()
        inv_o = m_odd.inverse()
        if inv_e is None or inv_o is None:
            raise ValueError("basis change must be invertible")
        d0, d1 = self.dim_even, self.dim_odd
        ecols = m_even.columns()
        ocols = m_odd.columns()
        c = [
            [list((inv_e @ self.even_bracket_vec(ecols[i], ecols[j])).entries) for j in range(d0)]
            for i in range(d0)
        ]
        a = [
            [list((inv_o @ self.act_vec(ecols[x], ocols[v])).entries) for v in range(d1)]
            for x in range(d0)
        ]
        p = [
            [list((inv_e @ self.odd_bracket_vec(ocols[u], ocols[v])).entries) for v in range(d1)]
            for u in range(d1)
        ]
        sq = None
        if self.mode == "char2":
            # transport the quadratic form: diagonal directly, mixed terms by
            # polarization (b_v + b_w)^2 + b_v^2 + b_w^2
            sq = _zero_tensor(f, d1, d1, d0)
            diag = [list((inv_e @ self.square_vec(ocols[v])).entries) for v in range(d1)]
            for v in range(d1):
                sq[v][v] = diag[v]
                for w in range(v + 1, d1):
                    mixed = inv_e @ self.square_vec(ocols[v] + ocols[w])
                    sq[v][w] = [
                        f.add(mixed.entries[k], f.add(diag[v][k], diag[w][k]))
                        for k in range(d0)
                    ]
        return SuperAlgebra.from_tensors(f, c, a, p, mode=self.mode, squaring=sq)

    def odd_bracket_is_zero(self) -> bool:
        return all(
            not x for plane in self.odd_bracket for row in plane for x in row
        )

    def restrict_odd(self, indices: Sequence[int]) -> "SuperAlgebra":
        """Sub-superalgebra on a coordinate subset of the odd basis.

        The chosen odd coordinates must be closed under the action;
        otherwise this raises.
        """
        idx = list(indices)
        f = self.field
        keep = set(idx)
        for x in range(self.dim_even):
            for v in idx:
                for w in range(self.dim_odd):
                    if self.action[x][v][w] and w not in keep:
                        raise ValueError(
                            f"odd coordinates {idx} are not action-closed"
                        )
        d1 = len(idx)
        a = [
            [[self.action[x][idx[v]][idx[w]] for w in range(d1)] for v in range(d1)]
            for x in range(self.dim_even)
        ]
        p = [
            [list(self.odd_bracket[idx[u]][idx[v]]) for v in range(d1)]
            for u in range(d1)
        ]
        sq = None
        if self.mode == "char2":
            sq = [
                [list(self.squaring[idx[u]][idx[v]]) for v in range(d1)]
                for u in range(d1)
            ]
        return SuperAlgebra.from_tensors(
            f, self.bracket, a, p, mode=self.mode, squaring=sq
        )

    def __eq__(self, o) -> bool:
        return (
            isinstance(o, SuperAlgebra)
            and o.field == self.field
            and o.mode == self.mode
            and o.bracket == self.bracket
            and o.action == self.action
            and o.odd_bracket == self.odd_bracket
            and o.squaring == self.squaring
        )

    def __hash__(self):
        return hash((self.field, self.mode, self.bracket, self.action, self.odd_bracket))

    def __repr__(self) -> str:
        return (
            f"SuperAlgebra({self.field}, dim {self.dim_even}|{self.dim_odd}, "
            f"mode {self.mode})"
        )


# --- validation ------------------------------------------------------------


def validate(g: SuperAlgebra) -> ValidationReport:
    """Check every axiom of g's mode; lists all violations, not just the first."""
    f = g.field
    d0, d1 = g.dim_even, g.dim_odd
    bad: list[Violation] = []

    def vec_even(raw) -> Vector:
        return Vector(f, raw)

    # even Jacobi identity on basis triples i < j < k
    units_e = [Vector.unit(f, d0, i) for i in range(d0)]
    for i in range(d0):
        for j in range(i + 1, d0):
            for k in range(j + 1, d0):
                s = (
                    g.even_bracket_vec(units_e[i], vec_even(g.bracket[j][k]))
                    + g.even_bracket_vec(units_e[j], vec_even(g.bracket[k][i]))
                    + g.even_bracket_vec(units_e[k], vec_even(g.bracket[i][j]))
                )
                if not s.is_zero():
                    bad.append(Violation("even_jacobi", (i, j, k), repr(s)))

    # the action is a representation of the even part
    mats = [g.action_matrix(i) for i in range(d0)]
    for i in range(d0):
        for j in range(i + 1, d0):
            expected = Matrix.zero(f, d1, d1)
            for k in range(d0):
                if g.bracket[i][j][k]:
                    expected = expected + mats[k].scaled(g.bracket[i][j][k])
            if mats[i].commutator(mats[j]) != expected:
                bad.append(Violation("representation", (i, j)))

    if g.mode in ("standard", "char3"):
        _check_relation_1(g, bad)
        _check_relation_2(g, bad)
    if g.mode == "char3":
        _check_char3_cubic(g, bad)
    if g.mode == "char2":
        _check_char2_axiom(g, bad)

    return ValidationReport(tuple(bad))


def _odd_action_of_even_vec(g: SuperAlgebra, coeffs, v: int) -> list:
    """Raw coordinates of (sum_x coeffs[x] e_x)(f_v)."""
    f = g.field
    out = [f.zero()] * g.dim_odd
    for x, cx in enumerate(coeffs):
        if not cx:
            continue
        row = g.action[x][v]
        for w in range(g.dim_odd):
            if row[w]:
                out[w] = f.add(out[w], f.mul(cx, row[w]))
    return out


def _relation1_sum(g: SuperAlgebra, u: int, v: int, w: int) -> list:
    """Raw odd vector {f_u,f_v}(f_w) + {f_v,f_w}(f_u) + {f_w,f_u}(f_v)."""
    f = g.field
    t1 = _odd_action_of_even_vec(g, g.odd_bracket[u][v], w)
    t2 = _odd_action_of_even_vec(g, g.odd_bracket[v][w], u)
    t3 = _odd_action_of_even_vec(g, g.odd_bracket[w][u], v)
    return [f.add(a, f.add(b, c)) for a, b, c in zip(t1, t2, t3)]


def _check_relation_1(g: SuperAlgebra, bad: list):
    # fully symmetric in (u, v, w), so u <= v <= w covers everything
    for u in range(g.dim_odd):
        for v in range(u, g.dim_odd):
            for w in range(v, g.dim_odd):
                s = _relation1_sum(g, u, v, w)
                if any(s):
                    bad.append(Violation("relation_1", (u, v, w)))


def _check_relation_2(g: SuperAlgebra, bad: list):
    f = g.field
    d0, d1 = g.dim_even, g.dim_odd
    for x in range(d0):
        for u in range(d1):
            for v in range(u, d1):
                lhs = [f.zero()] * d0
                for z in range(d0):
                    pz = g.odd_bracket[u][v][z]
                    if pz:
                        row = g.bracket[x][z]
                        for k in range(d0):
                            if row[k]:
                                lhs[k] = f.add(lhs[k], f.mul(pz, row[k]))
                rhs = [f.zero()] * d0
                for w in range(d1):
                    axu = g.action[x][u][w]
                    if axu:
                        row = g.odd_bracket[w][v]
                        for k in range(d0):
                            if row[k]:
                                rhs[k] = f.add(rhs[k], f.mul(axu, row[k]))
                    axv = g.action[x][v][w]
                    if axv:
                        row = g.odd_bracket[u][w]
                        for k in range(d0):
                            if row[k]:
                                rhs[k] = f.add(rhs[k], f.mul(axv, row[k]))
                if any(f.sub(a, b) for a, b in zip(lhs, rhs)):
                    bad.append(Violation("relation_2", (x, u, v)))


def _check_char3_cubic(g: SuperAlgebra, bad: list):
    """{x,{x,x}} = 0 for all odd x, as a cubic polynomial map.

    The coefficient of the monomial t_a t_b t_c of {x,{x,x}} (x = sum t f)
    is the symmetrized sum of {f_i,f_j}(f_k) over arrangements of the
    multiset {a,b,c}.  For distinct or doubled indices this reduces to the
    trilinear relation, but the diagonal a=b=c gives {f_a,f_a}(f_a) = 0,
    which the trilinear relation cannot see in characteristic 3.
    """
    f = g.field
    d1 = g.dim_odd
    two = f.from_int(2)
    for a in range(d1):
        for b in range(a, d1):
            for c in range(b, d1):
                if a == b == c:
                    coeff = _odd_action_of_even_vec(g, g.odd_bracket[a][a], a)
                elif a == b:
                    # t_a^2 t_c: {aa}(c) + 2 {ac}(a)
                    t1 = _odd_action_of_even_vec(g, g.odd_bracket[a][a], c)
                    t2 = _odd_action_of_even_vec(g, g.odd_bracket[a][c], a)
                    coeff = [f.add(x, f.mul(two, y)) for x, y in zip(t1, t2)]
                elif b == c:
                    # t_a t_b^2: 2 {ab}(b) + {bb}(a)
                    t1 = _odd_action_of_even_vec(g, g.odd_bracket[a][b], b)
                    t2 = _odd_action_of_even_vec(g, g.odd_bracket[b][b], a)
                    coeff = [f.add(f.mul(two, x), y) for x, y in zip(t1, t2)]
                else:
                    coeff = [f.mul(two, x) for x in _relation1_sum(g, a, b, c)]
                if any(coeff):
                    bad.append(Violation("char3_cubic", (a, b, c)))


def _check_char2_axiom(g: SuperAlgebra, bad: list):
    """{x^2, y} = {x, {x, y}} for all odd x and basis y, per monomial in x."""
    f = g.field
    d0, d1 = g.dim_even, g.dim_odd

    def sq(v, w):
        a, b = (v, w) if v <= w else (w, v)
        return g.squaring[a][b]

    for v in range(d1):
        for w in range(v, d1):
            # even y: [x^2, e_y] vs {f_v,{f_w,e_y}} symmetrized
            for y in range(d0):
                lhs = [f.zero()] * d0
                for z in range(d0):
                    sz = sq(v, w)[z]
                    if sz:
                        row = g.bracket[z][y]
                        for k in range(d0):
                            if row[k]:
                                lhs[k] = f.add(lhs[k], f.mul(sz, row[k]))
                if v == w:
                    rhs = _pair_with_action(g, v, y, v)
                else:
                    r1 = _pair_with_action(g, v, y, w)
                    r2 = _pair_with_action(g, w, y, v)
                    rhs = [f.add(a_, b_) for a_, b_ in zip(r1, r2)]
                if any(f.sub(a_, b_) for a_, b_ in zip(lhs, rhs)):
                    bad.append(Violation("char2_square", ("even", y, v, w)))
            # odd y: x^2(f_y) vs {f_v, {f_w, f_y}} symmetrized
            for y in range(d1):
                lhs = _odd_action_of_even_vec(g, sq(v, w), y)
                if v == w:
                    rhs = _odd_action_of_even_vec(g, g.odd_bracket[v][y], v)
                else:
                    r1 = _odd_action_of_even_vec(g, g.odd_bracket[w][y], v)
                    r2 = _odd_action_of_even_vec(g, g.odd_bracket[v][y], w)
                    rhs = [f.add(a_, b_) for a_, b_ in zip(r1, r2)]
                if any(f.sub(a_, b_) for a_, b_ in zip(lhs, rhs)):
                    bad.append(Violation("char2_square", ("odd", y, v, w)))


def _pair_with_action(g: SuperAlgebra, u: int, y: int, v: int) -> list:
    """Raw even coordinates of {f_u, e_y(f_v)}."""
    f = g.field
    out = [f.zero()] * g.dim_even
    for w in range(g.dim_odd):
        c = g.action[y][v][w]
        if c:
            row = g.odd_bracket[u][w]
            for k in range(g.dim_even):
                if row[k]:
                    out[k] = f.add(out[k], f.mul(c, row[k]))
    return out


# --- supercentre, spans, simplicity -----------------------------------------


def supercentre(g: SuperAlgebra) -> tuple[list[Vector], list[Vector]]:
    """Echelon bases of Z(g) in the even and odd sectors.

    An even x is central iff [x, e_j] = 0 for all j and x acts by zero on
    the odd part; an odd u is central iff every e_x kills it and
    {u, f_v} = 0 for all v.  Both conditions are kernels of stacked linear
    maps on the coordinates.
    """
    f = g.field
    d0, d1 = g.dim_even, g.dim_odd

    rows_even: list[list] = []
    for j in range(d0):
        for k in range(d0):
            rows_even.append([g.bracket[i][j][k] for i in range(d0)])
    for v in range(d1):
        for w in range(d1):
            rows_even.append([g.action[i][v][w] for i in range(d0)])
    even = (
        kernel_basis(Matrix(f, rows_even))
        if rows_even
        else [Vector.unit(f, d0, i) for i in range(d0)]
    )

    rows_odd: list[list] = []
    for x in range(d0):
        for w in range(d1):
            rows_odd.append([g.action[x][v][w] for v in range(d1)])
    for v in range(d1):
        for k in range(d0):
            rows_odd.append([g.odd_bracket[u][v][k] for u in range(d1)])
    odd = (
        kernel_basis(Matrix(f, rows_odd))
        if rows_odd
        else [Vector.unit(f, d1, i) for i in range(d1)]
    )
    return even, odd


def p_span(
    g: SuperAlgebra, u_basis: Sequence[Vector], w_basis: Sequence[Vector]
) -> list[Vector]:
    """Echelon basis of span{ {u, w} : u in U, w in W } inside g0."""
    vecs = [
        g.odd_bracket_vec(u, w) for u in u_basis for w in w_basis
    ]
    return echelon_span(g.field, vecs)


def is_ideal(g: SuperAlgebra, subspace: Sequence[Vector]) -> bool:
    """Whether a subspace of the even part satisfies [g0, S] <= S."""
    basis = echelon_span(g.field, list(subspace))
    for i in range(g.dim_even):
        e_i = Vector.unit(g.field, g.dim_even, i)
        for s in basis:
            if not span_contains(basis, g.even_bracket_vec(e_i, s)):
                return False
    return True


def killing_form(g: SuperAlgebra) -> Matrix:
    """Killing form K(x,y) = trace(ad x . ad y) of the even part."""
    ads = [g.ad(i) for i in range(g.dim_even)]
    f = g.field
    return Matrix(
        f,
        [
            [(ads[i] @ ads[j]).trace().value for j in range(g.dim_even)]
            for i in range(g.dim_even)
        ],
    )


def is_simple_3dim(g: SuperAlgebra) -> bool:
    """Simplicity test for a 3-dimensional even part via det(Killing) != 0.

    Valid in characteristic not 2 or 3; rejects other even dimensions.
    """
    if g.dim_even != 3:
        raise DimensionMismatch("simplicity test requires a 3-dimensional even part")
    return bool(killing_form(g).det())


# --- morphism certificates ---------------------------------------------------


@dataclass(frozen=True)
class MorphismCertificate:
    """A claimed isomorphism: block matrices on the even and odd sectors,
    columns holding images of the source basis in target coordinates."""

    source: SuperAlgebra
    target: SuperAlgebra
    m_even: Matrix
    m_odd: Matrix


def check_morphism(cert: MorphismCertificate) -> tuple[bool, str | None]:
    """Verify a certificate: both blocks invertible and bracket-preserving
    in all three graded sectors.  Returns (ok, first failure or None)."""
    s, t = cert.source, cert.target
    if s.field != t.field:
        return False, "source and target fields differ"
    if s.dim_even != t.dim_even or s.dim_odd != t.dim_odd:
        return False, "graded dimensions differ"
    me, mo = cert.m_even, cert.m_odd
    if me.rows != s.dim_even or me.cols != s.dim_even:
        return False, "even block has wrong shape"
    if mo.rows != s.dim_odd or mo.cols != s.dim_odd:
        return False, "odd block has wrong shape"
    if me.inverse() is None:
        return False, "even block singular"
    if mo.inverse() is None:
        return False, "odd block singular"
    f = s.field
    ecols = me.columns()
    ocols = mo.columns()
    for i in range(s.dim_even):
        for j in range(i + 1, s.dim_even):
            img = me @ Vector(f, s.bracket[i][j])
            if img != t.even_bracket_vec(ecols[i], ecols[j]):
                return False, f"even bracket not preserved at ({i},{j})"
    for x in range(s.dim_even):
        for v in range(s.dim_odd):
            img = mo @ Vector(f, s.action[x][v])
            if img != t.act_vec(ecols[x], ocols[v]):
                return False, f"action not preserved at ({x},{v})"
    for u in range(s.dim_odd):
        for v in range(u, s.dim_odd):
            img = me @ Vector(f, s.odd_bracket[u][v])
            if img != t.odd_bracket_vec(ocols[u], ocols[v]):
                return False, f"odd bracket not preserved at ({u},{v})"
    if s.mode == "char2":
        # the odd bracket is only the polarization; diagonal squares need
        # their own check
        if t.mode != "char2":
            return False, "axiom modes differ"
        for v in range(s.dim_odd):
            img = me @ Vector(f, s.squaring[v][v])
            if img != t.square_vec(ocols[v]):
                return False, f"squaring not preserved at ({v})"
    return True, None
