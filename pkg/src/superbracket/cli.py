"""Command-line front end.

Subcommands operate on the canonical JSON documents (see ``schema``) and
compose through pipes: a path argument of "-" reads stdin, and every
``construct`` subcommand writes canonical JSON to stdout, so e.g.

    superbracket construct irrep --m 2 --field fp:5 | superbracket pspace -
    superbracket construct double --field q | superbracket classify -

Exit codes: 0 success (classification cases A/B/C), 1 validation failure,
2 classification not applicable, 3 undetermined, 64 usage error, 65 schema
error.
"""

from __future__ import annotations

import json
import sys

import click

from . import superalgebra as sa
from .classify import classify as run_classify
from .constructions import (
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
from .fields import Field, FieldError
from .linalg import Matrix
from .moduli import odd_bracket_space_of, sweep_irrep_sums
from .schema import SchemaError, parse_algebra, serialize_algebra
from .sl2 import (
    INCONCLUSIVE,
    IrrepSpec,
    RepMatrices,
    Undetermined,
    build_irrep,
    decompose as rep_decompose,
    find_sl2_triple,
    jacobson_test,
)

EXIT_VALIDATION = 1
EXIT_NOT_APPLICABLE = 2
EXIT_UNDETERMINED = 3
EXIT_USAGE = 64
EXIT_SCHEMA = 65


def parse_field_flag(text: str) -> Field:
    if text == "q":
        return Field.rationals()
    if text.startswith("fp:"):
        try:
            return Field.prime(int(text[3:]))
        except (ValueError, FieldError) as exc:
            raise click.UsageError(f"bad --field {text!r}: {exc}") from None
    raise click.UsageError(f"--field must be 'q' or 'fp:<prime>', got {text!r}")


field_option = click.option(
    "--field", "field_text", default="q", show_default=True,
    help="Coefficient field: q or fp:<prime>.",
)


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from None


def _load(path: str):
    try:
        return parse_algebra(_read_document(path))
    except SchemaError as exc:
        click.echo(f"schema error: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)


def _emit(g, metadata=None):
    click.echo(serialize_algebra(g, metadata), nl=False)


@click.group()
def cli():
    """Exact construction, validation and classification of Lie
    superalgebras with three-dimensional simple even part."""


@cli.command("validate")
@click.argument("path")
def cmd_validate(path):
    """Check every axiom of the document's mode; exit 1 on violations."""
    g, _ = _load(path)
    report = sa.validate(g)
    if report.ok:
        click.echo("valid")
        return
    for violation in report.violations:
        click.echo(str(violation))
    sys.exit(EXIT_VALIDATION)


@cli.command("classify")
@click.argument("path")
def cmd_classify(path):
    """Decide case A/B/C and print the verified certificate."""
    g, _ = _load(path)
    result = run_classify(g)
    doc = {"case": result.case}
    if result.centre_dim is not None:
        doc["centre_dim"] = result.centre_dim
    if result.certificate is not None:
        field = g.field
        doc["certificate"] = {
            "even": [
                [field.format(x) for x in row]
                for row in result.certificate.m_even.data
            ],
            "odd": [
                [field.format(x) for x in row]
                for row in result.certificate.m_odd.data
            ],
        }
    if result.reason:
        doc["reason"] = result.reason
    if result.restricted_note:
        doc["restricted"] = result.restricted_note
    click.echo(json.dumps(doc, indent=2))
    if result.case == "not_applicable":
        sys.exit(EXIT_NOT_APPLICABLE)
    if result.case == "undetermined":
        sys.exit(EXIT_UNDETERMINED)


@cli.group("construct")
def construct():
    """Builders; each prints canonical JSON."""


@construct.command("osp12")
@field_option
def construct_osp12(field_text):
    """The 3|2 orthosymplectic algebra."""
    _emit(build_osp12(parse_field_flag(field_text)))


@construct.command("osp")
@field_option
@click.option("--d0", type=int, required=True, help="Quadratic dimension.")
@click.option("--d1", type=int, required=True, help="Symplectic dimension (even).")
@click.option(
    "--q-diag",
    default=None,
    help="Comma-separated diagonal of the quadratic form (default all ones).",
)
def construct_osp(field_text, d0, d1, q_diag):
    """Orthosymplectic algebra of diag(q) + standard symplectic form."""
    field = parse_field_flag(field_text)
    if q_diag is None:
        forms = BilinearFormPair.standard(field, d0, d1)
    else:
        try:
            entries = [field.parse(x) for x in q_diag.split(",")]
        except FieldError as exc:
            raise click.UsageError(f"bad --q-diag: {exc}") from None
        if len(entries) != d0:
            raise click.UsageError("--q-diag length must equal --d0")
        forms = BilinearFormPair(
            Matrix.diagonal(field, entries),
            BilinearFormPair.standard(field, 0, d1).omega,
        )
    _emit(build_osp(forms, field))


@construct.command("double")
@field_option
def construct_double(field_text):
    """The double of sl(2): sl2 + (sl2' + centralizer line)."""
    field = parse_field_flag(field_text)
    _emit(build_double(sl2_algebra(field), Matrix.identity(field, 3)))


@construct.command("irrep")
@field_option
@click.option("--m", type=int, required=True, help="Highest weight (dim = m+1).")
@click.option("--alpha", default=None, help="Override alpha (dim = p only).")
@click.option("--beta", default=None, help="Override beta (dim = p only).")
def construct_irrep(field_text, m, alpha, beta):
    """sl(2) + V(m, alpha, beta) with zero odd bracket."""
    field = parse_field_flag(field_text)
    _emit(_sl2_module_algebra(field, m, alpha, beta, ()))


def _sl2_module_algebra(field, m, alpha, beta, odd_entries):
    try:
        spec = IrrepSpec(
            m,
            field.scalar(field.parse(alpha)) if alpha is not None else field.scalar(m),
            field.scalar(field.parse(beta)) if beta is not None else field.scalar(0),
        )
        rep = build_irrep(spec, field)
        return assemble(sl2_algebra(field), rep, odd_entries)
    except FieldError as exc:
        raise click.UsageError(str(exc)) from None
    except AssembleError:
        raise
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None


@construct.command("char3")
def construct_char3():
    """The 3|3 characteristic-3 structure outside the classification."""
    _emit(build_char3_example())


@construct.command("char2")
@click.option(
    "--literal-elementary-symmetric",
    is_flag=True,
    help="Use the elementary-symmetric squaring (fails validation; kept for "
    "comparison).",
)
def construct_char2(literal_elementary_symmetric):
    """The 3|3 characteristic-2 structure with nonzero squaring."""
    if literal_elementary_symmetric:
        g = sa.SuperAlgebra.from_entries(
            Field.prime(2),
            3,
            3,
            bracket=[(0, 2, 1, 1)],
            action=[(0, 2, 1, 1), (2, 0, 1, 1)],
            mode="char2",
            squaring=[(0, 1, 1, 1), (0, 2, 1, 1), (1, 2, 1, 1)],
        )
        _emit(g)
        return
    _emit(build_char2_example())


@construct.command("add-centre")
@click.argument("path")
@click.option("--z", type=int, required=True, help="Number of central odd lines.")
def construct_add_centre(path, z):
    """Append z central odd coordinates to an existing document."""
    g, meta = _load(path)
    if z < 0:
        raise click.UsageError("--z must be nonnegative")
    _emit(add_centre(g, z), meta)


@construct.command("assemble")
@field_option
@click.option("--m", type=int, required=True, help="Highest weight of the module.")
@click.option("--alpha", default=None)
@click.option("--beta", default=None)
@click.option(
    "--p-file",
    default=None,
    help="JSON file holding [[u, v, x, coeff], ...] odd bracket entries "
    "(default: zero bracket).",
)
def construct_assemble(field_text, m, alpha, beta, p_file):
    """sl(2) + V(m) with a supplied odd bracket, validated on assembly."""
    field = parse_field_flag(field_text)
    entries = ()
    if p_file is not None:
        try:
            raw = json.loads(_read_document(p_file))
            entries = [
                (u, v, x, field.parse(c)) for u, v, x, c in raw
            ]
        except (ValueError, TypeError, FieldError) as exc:
            click.echo(f"schema error: bad --p-file: {exc}", err=True)
            sys.exit(EXIT_SCHEMA)
    try:
        g = _sl2_module_algebra(field, m, alpha, beta, entries)
    except AssembleError as exc:
        click.echo(f"assembly produced an invalid structure:\n{exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _emit(g)


@cli.command("pspace")
@click.argument("path")
@click.option(
    "--mode",
    default=None,
    type=click.Choice(["standard", "char3"]),
    help="Axiom system for the solver (default: inferred from the document).",
)
def cmd_pspace(path, mode):
    """Dimension and basis of all odd brackets compatible with the module."""
    g, _ = _load(path)
    space = odd_bracket_space_of(g, mode=mode)
    field = g.field
    basis_entries = []
    for tensor in space.basis:
        entries = [
            [u, v, x, field.format(tensor[u][v][x])]
            for u in range(g.dim_odd)
            for v in range(u, g.dim_odd)
            for x in range(g.dim_even)
            if tensor[u][v][x]
        ]
        basis_entries.append(entries)
    click.echo(json.dumps({"dim": space.dimension, "basis": basis_entries}, indent=2))


@cli.command("decompose")
@click.argument("path")
@click.option(
    "--triple-budget",
    type=int,
    default=None,
    help="Search budget for the sl(2)-triple (height over Q, exhaustion "
    "bound over F_p).",
)
def cmd_decompose(path, triple_budget):
    """Split the document's odd module into irreducible summands."""
    g, _ = _load(path)
    kwargs = {}
    if triple_budget is not None:
        kwargs = {"fp_max": max(13, triple_budget), "q_budget": triple_budget}
    triple = find_sl2_triple(g, **kwargs)
    if isinstance(triple, Undetermined):
        click.echo(json.dumps({"error": triple.reason}), err=True)
        sys.exit(EXIT_UNDETERMINED)
    if triple is None:
        click.echo(
            json.dumps({"error": "even part admits no sl(2)-triple (non-split)"}),
            err=True,
        )
        sys.exit(EXIT_NOT_APPLICABLE)
    rep = RepMatrices.from_algebra(g, triple)
    status = jacobson_test(rep)
    if status == INCONCLUSIVE:
        click.echo(
            json.dumps({"error": "complete reducibility is not certified"}),
            err=True,
        )
        sys.exit(EXIT_NOT_APPLICABLE)
    summands = rep_decompose(rep)
    field = g.field
    doc = {
        "triple": {
            "e": [field.format(x) for x in triple.e.entries],
            "h": [field.format(x) for x in triple.h.entries],
            "f": [field.format(x) for x in triple.f.entries],
        },
        "jacobson": status,
        "summands": [
            {
                "m": spec.m,
                "alpha": str(spec.alpha),
                "beta": str(spec.beta),
                "dim": spec.m + 1,
                "basis": [
                    [field.format(x) for x in vec.entries] for vec in chain
                ],
            }
            for chain, spec in summands
        ],
    }
    click.echo(json.dumps(doc, indent=2))


@cli.command("info")
@click.argument("path")
def cmd_info(path):
    """Dimensions, centre, Killing determinant, simplicity flags."""
    g, meta = _load(path)
    even_centre, odd_centre = sa.supercentre(g)
    doc = {
        "field": str(g.field),
        "axiom_mode": g.mode,
        "dim_even": g.dim_even,
        "dim_odd": g.dim_odd,
        "centre_dim_even": len(even_centre),
        "centre_dim_odd": len(odd_centre),
        "odd_bracket_zero": g.odd_bracket_is_zero(),
    }
    if g.dim_even == 3:
        det = sa.killing_form(g).det()
        doc["killing_det"] = str(det)
        doc["even_part_simple"] = bool(det)
        if g.mode == "standard" and doc["even_part_simple"]:
            from .classify import is_simple_superalgebra

            try:
                doc["simple"] = is_simple_superalgebra(g)
            except ValueError:
                pass
    if meta:
        doc["metadata"] = meta
    click.echo(json.dumps(doc, indent=2))


@cli.command("sweep")
@field_option
@click.option("--max-odd-dim", type=int, default=6, show_default=True)
@click.option(
    "--output",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
def cmd_sweep(field_text, max_odd_dim, output):
    """Solution dimensions over all irreducible-sum modules up to a bound."""
    field = parse_field_flag(field_text)
    try:
        rows = sweep_irrep_sums(field, max_odd_dim)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    if output == "json":
        click.echo(
            json.dumps(
                [
                    {"p": r.p, "composition": list(r.composition), "dim": r.dimension}
                    for r in rows
                ],
                indent=2,
            )
        )
        return
    click.echo("p,composition,dim")
    for r in rows:
        click.echo(f"{r.p},{'+'.join(map(str, r.composition))},{r.dimension}")


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(130)
    return 0


if __name__ == "__main__":
    main()
