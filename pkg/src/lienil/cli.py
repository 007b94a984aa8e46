from __future__ import annotations

import logging
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Sequence, TypeVar

import click

from lienil.core.algebra.base import LieAlgebra
from lienil.core.algebra.fingerprint import fingerprint, fingerprint_many
from lienil.core.algebra.series import center, derived_subalgebra
from lienil.core.catalog.entries import UNKNOWN, get, identify, list_entries
from lienil.core.catalog.table import corank_row, corank_table
from lienil.core.cohomology.extension import TwoCocycle, central_extension, find_extension_to
from lienil.core.config import current_settings
from lienil.core.errors import InputError, JacobiViolation, LienilError
from lienil.core.fock.rep import check_realization
from lienil.core.serializer.base import Serializer, get_serializer_by_name
from lienil.core.serializer.grammar import cocycle_grammar, parse_line
from lienil.core.serializer.json import json_sorted_serializer
from lienil.core.serializer.text import format_algebra, parse_algebra, parse_realization
from lienil.core.utils.misc import NOT_NILPOTENT, UNLISTED, ExceptionGroup

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

F = TypeVar("F", bound=Callable[..., Any])

_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


def run(argv: Sequence[str]) -> int:
    """Run the command line with some arguments and return its exit code."""
    try:
        result = main.main(args=list(argv), prog_name="lienil", standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        return EXIT_FAILED
    return result if isinstance(result, int) else EXIT_OK


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages to stderr.")
@click.option(
    "--serializer",
    default=json_sorted_serializer.name,
    show_default=True,
    help="Registered serializer that writes --json reports.",
)
@click.pass_context
def main(ctx: click.Context, verbose: bool, serializer: str) -> None:  # noqa: FBT001
    """Exact invariants of nilpotent Lie algebras and their ladder-operator realizations."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG)
    try:
        ctx.obj = get_serializer_by_name(serializer)
    except LienilError as error:
        raise click.BadParameter(str(error), param_hint="--serializer") from None


def _json_option(func: F) -> F:
    return click.option("--json", "as_json", is_flag=True, help="Print a JSON report.")(func)


def _reports_errors(func: F) -> F:
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except LienilError as error:
            click.echo(f"error: {error}", err=True)
            raise click.exceptions.Exit(EXIT_USAGE) from None
        except ExceptionGroup as group:
            # batched work fails with one error per job
            if not all(isinstance(error, LienilError) for error in group.exceptions):
                raise
            for error in group.exceptions:
                click.echo(f"error: {error}", err=True)
            raise click.exceptions.Exit(EXIT_USAGE) from None

    return wrapper  # type: ignore[return-value]


def _emit(report: dict[str, Any] | list[Any], text: str, *, as_json: bool) -> None:
    if as_json:
        serializer: Serializer[Any] = click.get_current_context().find_object(Serializer)
        click.echo(serializer.serialize(report).decode())
    else:
        click.echo(text)


def _exit(code: int) -> None:
    if code != EXIT_OK:
        raise click.exceptions.Exit(code)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as error:
        msg = f"{path} is not UTF-8 text: {error.reason} at byte {error.start}"
        raise InputError(msg) from None
    except OSError as error:
        msg = f"Cannot read {path}: {error.strerror or error}"
        raise InputError(msg) from None


def _read_algebra(path: Path) -> LieAlgebra:
    return parse_algebra(_read_text(path))


def _invariants(l: LieAlgebra) -> dict[str, Any]:
    fp = fingerprint(l)
    identified = identify(l)
    flags = []
    if fp.nilpotency_class is NOT_NILPOTENT:
        flags.append("not nilpotent")
    if identified != UNKNOWN:
        expected = get(identified).expected_corank
        if expected is not UNLISTED and expected != fp.corank:
            flags.append(
                f"{identified}: table says t = {expected}, engine computes t = {fp.corank}"
            )
    return {
        "name": l.label or "",
        **fp.to_dict(),
        "derived_dim": derived_subalgebra(l).dim,
        "center_dim": center(l).dim,
        "identified_as": identified,
        "flags": flags,
    }


@main.command()
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def check(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Check that an algebra file satisfies the Jacobi identity."""
    try:
        l = _read_algebra(path)
    except JacobiViolation as error:
        report = {"name": path.stem, "jacobi": False, "flags": [str(error)]}
        _emit(report, f"error: {error}", as_json=as_json)
        _exit(EXIT_FAILED)
        return
    report = {"name": l.label or "", "dim": l.dim, "jacobi": True, "flags": []}
    _emit(report, f"{l.label}: Jacobi identity holds (dim {l.dim})", as_json=as_json)


@main.command()
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def invariants(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Print every invariant of an algebra."""
    report = _invariants(_read_algebra(path))
    lines = [
        f"name: {report['name']}",
        f"dim: {report['dim']}",
        f"lower central series: {report['lcs_dims']}",
        f"upper central series: {report['ucs_dims']}",
        f"nilpotency class: {report['class']}",
        f"derived algebra: dim {report['derived_dim']}",
        f"center: dim {report['center_dim']}",
        f"dim M = {report['multiplier_dim']}, t = {report['corank']}",
        f"centralizers: {report['centralizer_dims']}",
        f"identified as: {report['identified_as']}",
    ]
    lines.extend(f"flag: {flag}" for flag in report["flags"])
    _emit(report, "\n".join(lines), as_json=as_json)


@main.command()
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def schur(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Print the dimension of the Schur multiplier."""
    l = _read_algebra(path)
    fp = fingerprint(l)
    report = {"name": l.label or "", "dim": l.dim, "multiplier_dim": fp.multiplier_dim}
    _emit(report, f"dim M = {fp.multiplier_dim}", as_json=as_json)


@main.command()
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def corank(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Print the multiplier dimension and the corank."""
    l = _read_algebra(path)
    fp = fingerprint(l)
    report = {
        "name": l.label or "",
        "dim": l.dim,
        "multiplier_dim": fp.multiplier_dim,
        "corank": fp.corank,
    }
    _emit(report, f"dim M = {fp.multiplier_dim}, t = {fp.corank}", as_json=as_json)


@main.command(name="identify")
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def identify_command(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Name the catalog entry an algebra is isomorphic to."""
    l = _read_algebra(path)
    name = identify(l)
    report = {"name": l.label or "", "dim": l.dim, "identified_as": name}
    _emit(report, name, as_json=as_json)


@main.group()
def catalog() -> None:
    """Browse the built-in catalog."""


@catalog.command(name="list")
@_json_option
@_reports_errors
def catalog_list(as_json: bool) -> None:  # noqa: FBT001
    """List every named entry with its computed and tabulated corank."""
    entries = list_entries()
    fingerprints = fingerprint_many.s([e.algebra for e in entries])
    rows = [
        {
            "name": e.name,
            "dim": fp.dim,
            "corank": fp.corank,
            "expected_corank": str(e.expected_corank),
            "description": e.description,
        }
        for e, fp in zip(entries, fingerprints)
    ]
    text = "\n".join(
        f"{r['name']:<6} dim {r['dim']}  t = {r['corank']}  "
        f"table: {r['expected_corank']:<8}  {r['description']}"
        for r in rows
    )
    _emit(rows, text, as_json=as_json)


@catalog.command(name="show")
@click.argument("name")
@_json_option
@_reports_errors
def catalog_show(name: str, as_json: bool) -> None:  # noqa: FBT001
    """Show the brackets and invariants of an entry."""
    entry = get(name)
    report = _invariants(entry.algebra)
    report["expected_corank"] = str(entry.expected_corank)
    report["description"] = entry.description
    text = format_algebra(entry.algebra, entry.name)
    text += f"{entry.description}\n" if entry.description else ""
    text += f"{fingerprint(entry.algebra)}\ntable corank: {entry.expected_corank}"
    text += "".join(f"\nflag: {flag}" for flag in report["flags"])
    _emit(report, text, as_json=as_json)


@main.command()
@click.option("--corank", "t", type=int, default=None, help="Only show this row.")
@_json_option
@_reports_errors
def classify(t: int | None, as_json: bool) -> None:  # noqa: FBT001
    """Check the classification table of small coranks against the engine."""
    rows = corank_table() if t is None else [corank_row(t)]
    lines = []
    for row in rows:
        verdict = "agrees" if row.agrees else "disagrees"
        entries = ", ".join(f"{n} (t = {c})" for n, c in zip(row.names, row.computed))
        lines.append(f"t = {row.corank}: {entries}: {verdict}")
        lines.extend(f"  flag: {flag}" for flag in row.flags)
    _emit([row.to_dict() for row in rows], "\n".join(lines), as_json=as_json)


@main.command()
@click.argument("path", type=_FILE)
@click.option("--cocycle", required=True, help='Values like "(1,4)=1,(2,3)=-1/2".')
@_json_option
@_reports_errors
def extend(path: Path, cocycle: str, as_json: bool) -> None:  # noqa: FBT001
    """Build the central extension of an algebra by a 2-cocycle."""
    l = _read_algebra(path)
    theta = TwoCocycle.from_pairs(l.dim, parse_line(cocycle_grammar(), cocycle))
    label = f"{l.label or 'L'}^theta"
    extension = central_extension(l, theta).with_label(label)
    report = _invariants(extension)
    report["cocycle"] = str(theta)
    text = format_algebra(extension) + f"identified as: {report['identified_as']}"
    _emit(report, text, as_json=as_json)


@main.command(name="extend-search")
@click.argument("path", type=_FILE)
@click.option("--target", required=True, help="Catalog name of the extension to look for.")
@click.option("--bound", type=int, default=None, help="Largest coefficient to try.")
@_json_option
@_reports_errors
def extend_search(
    path: Path,
    target: str,
    bound: int | None,
    as_json: bool,  # noqa: FBT001
) -> None:
    """Search for a 2-cocycle whose central extension is a catalog entry."""
    l = _read_algebra(path)
    entry = get(target)
    overrides = {} if bound is None else {"search_bound": bound}
    with current_settings(**overrides) as settings:
        theta = find_extension_to(l, fingerprint(entry.algebra))
    report = {
        "name": l.label or "",
        "target": entry.name,
        "bound": settings.search_bound,
        "found": theta is not None,
        "cocycle": None if theta is None else str(theta),
    }
    if theta is None:
        text = f"no extension of {l.label} to {entry.name} "
        text += f"with coefficients up to {settings.search_bound}"
    else:
        text = f"{entry.name}: theta = {theta}"
    _emit(report, text, as_json=as_json)
    _exit(EXIT_OK if theta is not None else EXIT_FAILED)


@main.command()
@click.argument("path", type=_FILE)
@_json_option
@_reports_errors
def verify(path: Path, as_json: bool) -> None:  # noqa: FBT001
    """Check that a realization respects every bracket of its algebra."""
    realization = parse_realization(_read_text(path))
    result = realization.verify()
    report = {"name": realization.name, **result.to_dict()}
    lines = [
        f"homomorphism: {_yes(result.is_homomorphism)}, faithful: {_yes(result.is_faithful)}"
    ]
    lines.extend(f"mismatch {m}" for m in result.mismatches)
    lines.extend(f"note: {note}" for note in result.notes)
    _emit(report, "\n".join(lines), as_json=as_json)
    _exit(EXIT_OK if result.is_homomorphism else EXIT_FAILED)


@main.command(name="fock-check")
@click.argument("path", type=_FILE)
@click.option("--levels", type=int, multiple=True, help="Truncation per mode, repeatable.")
@_json_option
@_reports_errors
def fock_check(path: Path, levels: tuple[int, ...], as_json: bool) -> None:  # noqa: FBT001
    """Check a realization against truncated Fock space matrices."""
    realization = parse_realization(_read_text(path))
    reports = check_realization.s(realization, levels or None)
    lines = []
    for report in reports:
        lines.append(f"levels {report.levels}: {'ok' if report.ok else 'failed'}")
        lines.extend(f"  {check}" for check in report.checks if not check.ok)
    payload = {"name": realization.name, "reports": [r.to_dict() for r in reports]}
    _emit(payload, "\n".join(lines), as_json=as_json)
    _exit(EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED)


def _yes(value: bool) -> str:  # noqa: FBT001
    return "yes" if value else "no"
