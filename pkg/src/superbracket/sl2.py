"""sl(2)-triples and the representation toolkit built on them.

Covers: locating triples (exhaustively over F_p, by a bounded rational
search over Q), the explicit irreducible modules V(m, alpha, beta), their
annihilators, the Casimir operator (H+1)^2 + 4FE, the nilpotency criterion
for complete reducibility in positive characteristic, direct-sum
decomposition, and composition series with the maximal trivial submodule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fields import Field, Scalar
from .linalg import (
    Matrix,
    Vector,
    coordinates_in_span,
    echelon_span,
    eigenspace,
    kernel_basis,
    span_contains,
)
from .superalgebra import SuperAlgebra

__all__ = [
    "Sl2Triple",
    "Undetermined",
    "IrrepSpec",
    "RepMatrices",
    "verify_triple",
    "find_sl2_triple",
    "build_irrep",
    "annihilator",
    "casimir",
    "jacobson_test",
    "CHAR_ZERO",
    "SUFFICIENT",
    "INCONCLUSIVE",
    "decompose",
    "composition_series",
    "has_proper_submodule",
]

CHAR_ZERO = "char_zero"
SUFFICIENT = "sufficient_for_complete_reducibility"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Sl2Triple:
    """Vectors (E, H, F) in an even part with [E,F]=H, [H,E]=2E, [H,F]=-2F."""

    e: Vector
    h: Vector
    f: Vector


@dataclass(frozen=True)
class Undetermined:
    """Triple search gave up within its budget; not a proof of absence."""

    reason: str


def verify_triple(g: SuperAlgebra, triple: Sl2Triple) -> bool:
    e, h, f = triple.e, triple.h, triple.f
    return (
        g.even_bracket_vec(e, f) == h
        and g.even_bracket_vec(h, e) == e.scaled(2)
        and g.even_bracket_vec(h, f) == f.scaled(-2)
    )


def _triple_from_h(g: SuperAlgebra, h: Vector) -> Sl2Triple | None:
    """Given H with ad(H) eigenvalues {2, 0, -2}, solve for E and F."""
    field = g.field
    ad_h = g.ad_vec(h)
    e_space = eigenspace(ad_h, field.from_int(2))
    f_space = eigenspace(ad_h, field.from_int(-2))
    if not e_space or not f_space:
        return None
    e0, f0 = e_space[0], f_space[0]
    bracket = g.even_bracket_vec(e0, f0)
    # [E0, F0] lies in ker(ad H); demand it be a nonzero multiple of H
    c = None
    for i, hx in enumerate(h.entries):
        if hx:
            c = field.div(bracket.entries[i], hx)
            break
    if c is None or not c:
        return None
    if bracket != h.scaled(c):
        return None
    cand = Sl2Triple(e0.scaled(field.inv(c)), h, f0)
    return cand if verify_triple(g, cand) else None


def find_sl2_triple(
    g: SuperAlgebra, fp_max: int = 13, q_budget: int = 2
) -> Sl2Triple | None | Undetermined:
    """Search the 3-dimensional even part of g for an sl(2)-triple.

    Over F_p (p <= fp_max) the search is exhaustive over all H candidates,
    so None is a proof that no triple exists (the algebra is non-split).
    Over Q only a finite list of small integer combinations is tried for H,
    and exhausting it yields Undetermined, never None.
    """
    field = g.field
    if g.dim_even != 3:
        raise ValueError("triple search requires a 3-dimensional even part")
    if field.kind == "prime":
        p = field.p
        if p > fp_max:
            return Undetermined(f"p={p} exceeds the exhaustive-search bound {fp_max}")
        for a in range(p):
            for b in range(p):
                for c in range(p):
                    if a == b == c == 0:
                        continue
                    t = _triple_from_h(g, Vector(field, [a, b, c]))
                    if t is not None:
                        return t
        return None

    # rationals: try H proportional to small primitive integer combinations,
    # sparsest (hence basis vectors) first
    candidates: list[tuple[int, int, int]] = []
    bound = q_budget
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                v = (a, b, c)
                if v == (0, 0, 0):
                    continue
                if math.gcd(math.gcd(abs(a), abs(b)), abs(c)) != 1:
                    continue
                # primitive, first nonzero positive: one per line
                first = next(x for x in v if x)
                if first < 0:
                    continue
                candidates.append(v)
    candidates.sort(
        key=lambda v: (
            max(abs(x) for x in v),
            sum(1 for x in v if x),
            tuple(abs(x) for x in v),
            v,
        )
    )
    for cand in candidates:
        x = Vector(field, cand)
        ad_x = g.ad_vec(x)
        # eigenvalues are {theta, 0, -theta}; theta^2 = tr(ad_x^2)/2
        d = (ad_x @ ad_x).trace().value / 2
        if d <= 0:
            continue
        num, den = d.numerator, d.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            continue
        theta = Fraction(rn, rd)
        t = _triple_from_h(g, x.scaled(Fraction(2) / theta))
        if t is not None:
            return t
    return Undetermined(
        f"no rational sl(2)-triple found among integer combinations of height <= {q_budget}"
    )


# --- explicit irreducible modules -------------------------------------------


@dataclass(frozen=True)
class IrrepSpec:
    """Parameters (m, alpha, beta) of the explicit (m+1)-dimensional module."""

    m: int
    alpha: Scalar
    beta: Scalar

    @staticmethod
    def standard_params(field: Field, m: int) -> "IrrepSpec":
        return IrrepSpec(m, field.scalar(m), field.scalar(0))

    def check(self, field: Field):
        """Enforce the admissibility constraints for the given field."""
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.alpha.field != field or self.beta.field != field:
            raise ValueError("spec scalars must live in the module's field")
        char = field.characteristic
        dim = self.m + 1
        if char == 0:
            if self.alpha != field.scalar(self.m):
                raise ValueError("characteristic zero forces alpha = m")
            if self.beta != field.scalar(0):
                raise ValueError("characteristic zero forces beta = 0")
            return
        if dim > char:
            raise ValueError(f"dimension {dim} exceeds the bound p = {char}")
        if dim < char:
            if self.alpha != field.scalar(self.m):
                raise ValueError("dimension below p forces alpha = m")
            if self.beta != field.scalar(0):
                raise ValueError("dimension below p forces beta = 0")
        else:
            # dim == p over a prime field: every scalar is an integer image,
            # so alpha = [m] is forced; beta is unconstrained here
            if self.alpha != field.scalar(self.m):
                raise ValueError("alpha must equal [m] when the dimension is p")


@dataclass(frozen=True)
class RepMatrices:
    """Action matrices of a triple on a module (columns are images)."""

    rho_e: Matrix
    rho_h: Matrix
    rho_f: Matrix

    @property
    def dim(self) -> int:
        return self.rho_e.rows

    @property
    def field(self) -> Field:
        return self.rho_e.field

    def matrices(self) -> tuple[Matrix, Matrix, Matrix]:
        return self.rho_e, self.rho_h, self.rho_f

    def satisfies_triple_relations(self) -> bool:
        e, h, f = self.matrices()
        return (
            e.commutator(f) == h
            and h.commutator(e) == e.scaled(2)
            and h.commutator(f) == f.scaled(-2)
        )

    @staticmethod
    def from_algebra(g: SuperAlgebra, triple: Sl2Triple) -> "RepMatrices":
        return RepMatrices(
            g.action_matrix_vec(triple.e),
            g.action_matrix_vec(triple.h),
            g.action_matrix_vec(triple.f),
        )

    @staticmethod
    def direct_sum(parts: Sequence["RepMatrices"]) -> "RepMatrices":
        field = parts[0].field
        n = sum(p.dim for p in parts)
        blocks = []
        for which in range(3):
            m = [[field.zero()] * n for _ in range(n)]
            off = 0
            for part in parts:
                src = part.matrices()[which]
                for i in range(part.dim):
                    for j in range(part.dim):
                        m[off + i][off + j] = src.data[i][j]
                off += part.dim
            blocks.append(Matrix(field, m))
        return RepMatrices(*blocks)

    def conjugated(self, t: Matrix) -> "RepMatrices":
        """The same action written in the basis given by the columns of t."""
        inv = t.inverse()
        if inv is None:
            raise ValueError("basis change must be invertible")
        return RepMatrices(
            inv @ self.rho_e @ t, inv @ self.rho_h @ t, inv @ self.rho_f @ t
        )


def build_irrep(spec: IrrepSpec, field: Field) -> RepMatrices:
    """Matrices of the module with basis e_0..e_m:

    H e_i = (alpha - 2[i]) e_i,
    E e_0 = 0,  E e_i = [i](alpha - ([i]-1)) e_{i-1},
    F e_i = e_{i+1} (i < m),  F e_m = beta e_0.
    """
    spec.check(field)
    n = spec.m + 1
    alpha = spec.alpha.value
    zero, one = field.zero(), field.one()
    h = [[zero] * n for _ in range(n)]
    e = [[zero] * n for _ in range(n)]
    fm = [[zero] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = field.sub(alpha, field.from_int(2 * i))
    for i in range(1, n):
        e[i - 1][i] = field.mul(
            field.from_int(i), field.sub(alpha, field.from_int(i - 1))
        )
    for i in range(n - 1):
        fm[i + 1][i] = one
    fm[0][n - 1] = field.add(fm[0][n - 1], spec.beta.value)
    rep = RepMatrices(Matrix(field, e), Matrix(field, h), Matrix(field, fm))
    assert rep.satisfies_triple_relations()
    return rep


def annihilator(spec: IrrepSpec, i: int, field: Field) -> list[Vector]:
    """Basis of {x in sl2 : x(e_i) = 0}, in (E, H, F) coordinates.

    Computed as the kernel of x -> x(e_i), not read off a case table.
    """
    if not 0 <= i <= spec.m:
        raise ValueError(f"index {i} outside 0..{spec.m}")
    rep = build_irrep(spec, field)
    cols = [m.column(i) for m in rep.matrices()]
    return kernel_basis(Matrix.from_columns(field, cols))


def casimir(rep: RepMatrices) -> Matrix:
    """The Casimir operator (rho_H + Id)^2 + 4 rho_F rho_E."""
    shifted = rep.rho_h + Matrix.identity(rep.field, rep.dim)
    return shifted @ shifted + (rep.rho_f @ rep.rho_e).scaled(4)


def jacobson_test(rep: RepMatrices) -> str:
    """Sufficient condition for complete reducibility.

    In characteristic zero every finite-dimensional module is completely
    reducible.  In characteristic p the criterion rho(E)^(p-1) =
    rho(F)^(p-1) = 0 suffices; failing it decides nothing.
    """
    char = rep.field.characteristic
    if char == 0:
        return CHAR_ZERO
    if rep.rho_e.power(char - 1).is_zero() and rep.rho_f.power(char - 1).is_zero():
        return SUFFICIENT
    return INCONCLUSIVE


def _weight_candidates(field: Field, dim: int) -> list[int]:
    if field.characteristic == 0:
        top = dim
    else:
        top = min(field.characteristic, dim)
    return list(range(top - 1, -1, -1))  # descending m


def decompose(rep: RepMatrices) -> list[tuple[list[Vector], IrrepSpec]]:
    """Split a completely reducible module into irreducible summands.

    Requires the Jacobson criterion (or characteristic zero).  Highest
    weight vectors are found in ker(rho_E), split by rho_H eigenvalue, and
    each summand is generated by applying rho_F; summands are listed by
    descending H-eigenvalue, then echelon order, and each chain basis
    (w, Fw, F^2 w, ...) matches the basis convention of build_irrep.
    """
    status = jacobson_test(rep)
    if status == INCONCLUSIVE:
        raise ValueError("complete reducibility is not certified for this module")
    field = rep.field
    dim = rep.dim
    if dim == 0:
        return []
    top = kernel_basis(rep.rho_e)
    top_matrix = Matrix.from_columns(field, top) if top else None
    if top_matrix is None:
        raise ValueError("no highest weight vectors; not a valid module")
    # rho_H restricted to ker(rho_E), in coordinates of that kernel basis
    restr_cols = []
    for v in top:
        coords = coordinates_in_span(top, rep.rho_h @ v)
        if coords is None:
            raise ValueError("ker(rho_E) is not rho_H-invariant; not a valid module")
        restr_cols.append(coords)
    restr = Matrix.from_columns(field, restr_cols)
    summands: list[tuple[list[Vector], IrrepSpec]] = []
    covered = 0
    for m in _weight_candidates(field, dim):
        lam = field.from_int(m)
        for coords in eigenspace(restr, lam):
            w = top_matrix @ coords
            chain = [w]
            nxt = rep.rho_f @ w
            while not nxt.is_zero():
                chain.append(nxt)
                if len(chain) > dim:
                    raise ValueError("runaway lowering chain; not a valid module")
                nxt = rep.rho_f @ nxt
            if len(chain) != m + 1:
                raise ValueError(
                    f"highest weight {m} generated a chain of length {len(chain)}"
                )
            summands.append((chain, IrrepSpec.standard_params(field, m)))
            covered += len(chain)
    if covered != dim:
        raise ValueError("summands do not exhaust the module; not a valid module")
    return summands


def invariant_closure(mats: Sequence[Matrix], seeds: Sequence[Vector]) -> list[Vector]:
    """Echelon basis of the smallest subspace containing the seeds and
    invariant under all the given operators."""
    field = seeds[0].field
    basis = echelon_span(field, list(seeds))
    frontier = list(basis)
    while frontier:
        new = []
        for v in frontier:
            for m in mats:
                img = m @ v
                if not span_contains(basis, img):
                    new.append(img)
                    basis = echelon_span(field, basis + [img])
        frontier = new
    return basis


def _joint_kernel(rep: RepMatrices) -> list[Vector]:
    stacked = Matrix.vstack([rep.rho_e, rep.rho_h, rep.rho_f])
    return kernel_basis(stacked)


def _socle_member(rep: RepMatrices) -> list[Vector]:
    """An irreducible submodule of least dimension (ties by echelon order)."""
    field = rep.field
    dim = rep.dim
    joint = _joint_kernel(rep)
    if joint:
        return [joint[0]]  # a trivial line; nothing smaller exists
    mats = rep.matrices()
    candidates: list[list[Vector]] = []
    top = kernel_basis(rep.rho_e)
    for m in _weight_candidates(field, dim):
        lam = field.from_int(m)
        for w in top:
            img = rep.rho_h @ w - w.scaled(lam)
            if img.is_zero():
                candidates.append(invariant_closure(mats, [w]))
    if not candidates:
        raise ValueError(
            "no trivial line or highest weight vector found; "
            "unsupported module structure"
        )
    best = min(enumerate(candidates), key=lambda kv: (len(kv[1]), kv[0]))[1]
    # refine until irreducible: look for a proper submodule inside
    while True:
        sub = _proper_submodule_inside(rep, best)
        if sub is None:
            return best
        best = sub


def _restricted_rep(rep: RepMatrices, basis: list[Vector]) -> RepMatrices:
    field = rep.field
    mats = []
    for m in rep.matrices():
        cols = []
        for v in basis:
            coords = coordinates_in_span(basis, m @ v)
            if coords is None:
                raise ValueError("subspace is not invariant")
            cols.append(coords)
        mats.append(Matrix.from_columns(field, cols))
    return RepMatrices(*mats)


def _proper_submodule_inside(rep: RepMatrices, basis: list[Vector]) -> list[Vector] | None:
    """A proper nonzero submodule of the invariant subspace, or None."""
    if len(basis) <= 1:
        return None
    sub = _restricted_rep(rep, basis)
    lift = Matrix.from_columns(rep.field, basis)
    joint = _joint_kernel(sub)
    if joint:
        return [lift @ joint[0]]
    top = kernel_basis(sub.rho_e)
    for m in _weight_candidates(rep.field, sub.dim):
        lam = rep.field.from_int(m)
        for w in top:
            if (sub.rho_h @ w - w.scaled(lam)).is_zero():
                closure = invariant_closure(sub.matrices(), [w])
                if 0 < len(closure) < len(basis):
                    return [lift @ v for v in closure]
    return None


def composition_series(rep: RepMatrices) -> tuple[list[int], list[Vector]]:
    """Greedy composition series plus the maximal trivial submodule.

    Repeatedly removes an irreducible submodule of the current quotient
    (socle member of least dimension, ties by echelon order) and records
    the factor dimensions.  Also returns the joint kernel of rho_E, rho_H,
    rho_F, i.e. the maximal trivial submodule of the original module.
    """
    field = rep.field
    dim = rep.dim
    trivial = _joint_kernel(rep)
    factors: list[int] = []
    flag: list[Vector] = []  # echelon basis of the current submodule
    while len(flag) < dim:
        pivot_cols = _pivot_columns(field, flag)
        complement = [c for c in range(dim) if c not in pivot_cols]
        lift_cols = [Vector.unit(field, dim, c) for c in complement]
        qmats = []
        for m in rep.matrices():
            cols = [_reduce_mod(field, flag, pivot_cols, m @ u, complement) for u in lift_cols]
            qmats.append(Matrix.from_columns(field, cols))
        qrep = RepMatrices(*qmats)
        member = _socle_member(qrep)
        factors.append(len(member))
        lifted = [
            _lift_from_complement(field, dim, complement, v) for v in member
        ]
        flag = echelon_span(field, flag + lifted)
    return factors, trivial


def _pivot_columns(field: Field, echelon: list[Vector]) -> list[int]:
    cols = []
    for v in echelon:
        for i, x in enumerate(v.entries):
            if x:
                cols.append(i)
                break
    return cols


def _reduce_mod(field, echelon, pivot_cols, v: Vector, complement) -> Vector:
    ent = list(v.entries)
    for row, pc in zip(echelon, pivot_cols):
        c = ent[pc]
        if c:
            ent = [field.sub(a, field.mul(c, b)) for a, b in zip(ent, row.entries)]
    return Vector(field, [ent[c] for c in complement])


def _lift_from_complement(field, dim, complement, v: Vector) -> Vector:
    ent = [field.zero()] * dim
    for c, x in zip(complement, v.entries):
        ent[c] = x
    return Vector(field, ent)


def has_proper_submodule(rep: RepMatrices) -> bool:
    """Whether the module has a proper nonzero submodule.

    Complete whenever rho_H is diagonalizable over the base field with
    integer-image eigenvalues (every module built from the explicit family
    and its extensions), which is the situation the rest of the library
    produces; other module structures may raise.
    """
    dim = rep.dim
    if dim <= 1:
        return False
    if _joint_kernel(rep):
        return True
    field = rep.field
    mats = rep.matrices()
    if field.characteristic == 0:
        weights = [w for m in range(dim) for w in (m, -m)]
    else:
        weights = list(range(field.characteristic))
    for r in weights:
        lam = field.from_int(r)
        for w in eigenspace(rep.rho_h, lam):
            if len(invariant_closure(mats, [w])) < dim:
                return True
    return False
