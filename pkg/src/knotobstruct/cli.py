"""Command-line front end.

Subcommands: invariants, obstruct, pretzel-scan, batch, selftest.
Verdicts are data, not errors: only input and I/O failures exit nonzero.
"""

from __future__ import annotations

import csv
import json
import sys
from fractions import Fraction

import click

from .diagram import PDCode, PretzelParams, parse_pd
from .errors import KnotObstructError
from .kauffman import jones
from .laurent import LaurentPoly, parse_laurent
from .obstruction import (
    ObstructionReport,
    cosmetic_verdict,
    obstruction_value,
    pretzel_family,
)
from .seifert import GenusOneSpine, SeifertMatrix, pretzel_alexander_coeff
from .selftest import SUITES, run_selftest
from .twoloop import TangleInvariants, reduced_two_loop


def _parse_pretzel(text: str) -> PretzelParams:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise click.UsageError("--pretzel wants three comma-separated odd integers")
    return PretzelParams(*parts)


def _parse_seifert(text: str) -> SeifertMatrix:
    rows = [
        [int(x) for x in row.split(",") if x.strip() != ""]
        for row in text.split(";")
        if row.strip() != ""
    ]
    return SeifertMatrix(rows)


def _parse_spine(text: str) -> GenusOneSpine:
    parts = [int(x) for x in text.split(",")]
    if len(parts) not in (3, 4):
        raise click.UsageError("--spine wants n,m,ell[,eps]")
    return GenusOneSpine(*parts)


def _parse_tinv(text: str) -> TangleInvariants:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 4:
        raise click.UsageError("--tinv wants v2xx,v2yy,v2xy,v3")
    return TangleInvariants(*parts)


def _frac_str(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _print_report(report: ObstructionReport, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report.to_json_dict(), indent=2))
        return
    rows = [
        ("alexander", report.alexander.render() if report.alexander else "-"),
        ("jones", report.jones.render() if report.jones else "-"),
        ("determinant", report.determinant if report.determinant is not None else "-"),
        ("sigma", report.sigma if report.sigma is not None else "-"),
        ("w3", _frac_str(report.w3)),
        ("lambda_w", _frac_str(report.lambda_w)),
        ("theta_at_1", _frac_str(report.theta_at_1)),
        ("theta_at_minus1", _frac_str(report.theta_at_minus1)),
        ("ob", _frac_str(report.ob)),
        ("ob_mod16_nonzero", report.ob_mod16_nonzero),
        ("verdict", report.verdict),
    ]
    for name, value in rows:
        click.echo(f"{name:18} {value}")
    for note in report.notes:
        click.echo(f"note: {note}")


def _single_source(pretzel, pd, seifert, spine, allow_pd_seifert=False):
    sources = [x is not None for x in (pretzel, pd, seifert, spine)]
    if allow_pd_seifert and pd is not None and seifert is not None:
        sources = [pretzel is not None, True, spine is not None]
    if sum(sources) != 1:
        raise click.UsageError(
            "give exactly one input source (--pretzel | --pd | --seifert | --spine)"
        )


@click.group()
def main():
    """Exact knot invariants and cosmetic-crossing obstructions."""


@main.command()
@click.option("--pretzel", "pretzel_s", default=None, help="p,q,r (odd)")
@click.option("--pd", "pd_s", default=None, help='PD code "X(a,b,c,d); ..."')
@click.option("--seifert", "seifert_s", default=None, help='row-major "a,b;c,d"')
@click.option("--spine", "spine_s", default=None, help="n,m,ell[,eps]")
@click.option("--tinv", "tinv_s", default=None, help="v2xx,v2yy,v2xy,v3 (with --spine)")
@click.option("--json", "as_json", is_flag=True, help="JSON output")
def invariants(pretzel_s, pd_s, seifert_s, spine_s, tinv_s, as_json):
    """Compute all invariants available from one input source."""
    pretzel = _parse_pretzel(pretzel_s) if pretzel_s is not None else None
    pd = parse_pd(pd_s) if pd_s is not None else None
    seifert = _parse_seifert(seifert_s) if seifert_s is not None else None
    spine = _parse_spine(spine_s) if spine_s is not None else None
    _single_source(pretzel, pd, seifert, spine)
    jones_poly = None
    if spine is not None and tinv_s is not None:
        # the spine route has no diagram; tangle invariants give Theta itself
        theta = reduced_two_loop(spine, _parse_tinv(tinv_s))
        click.echo(f"{'theta':18} {theta.render()}")
    report = cosmetic_verdict(
        pretzel=pretzel, pd=pd, seifert=seifert, spine=spine, jones_poly=jones_poly
    )
    _print_report(report, as_json)


@main.command()
@click.option("--pretzel", "pretzel_s", default=None, help="p,q,r (odd)")
@click.option("--pd", "pd_s", default=None, help='PD code "X(a,b,c,d); ..."')
@click.option("--seifert", "seifert_s", default=None, help='row-major "a,b;c,d"')
@click.option("--spine", "spine_s", default=None, help="n,m,ell[,eps]")
@click.option("--jones", "jones_s", default=None, help='Jones polynomial, e.g. "-1*t^4 + 1*t^3 + 1*t^1"')
@click.option("--json", "as_json", is_flag=True, help="JSON output")
def obstruct(pretzel_s, pd_s, seifert_s, spine_s, jones_s, as_json):
    """Run the cosmetic-crossing decision procedure and print the verdict."""
    pretzel = _parse_pretzel(pretzel_s) if pretzel_s is not None else None
    pd = parse_pd(pd_s) if pd_s is not None else None
    seifert = _parse_seifert(seifert_s) if seifert_s is not None else None
    spine = _parse_spine(spine_s) if spine_s is not None else None
    _single_source(pretzel, pd, seifert, spine, allow_pd_seifert=True)
    jones_poly = parse_laurent(jones_s) if jones_s is not None else None
    report = cosmetic_verdict(
        pretzel=pretzel, pd=pd, seifert=seifert, spine=spine, jones_poly=jones_poly
    )
    _print_report(report, as_json)


@main.command("pretzel-scan")
@click.option("--k-min", type=int, default=1, show_default=True)
@click.option("--k-max", type=int, default=8, show_default=True)
@click.option("--jones-upto", type=int, default=0, show_default=True,
              help="also run the independent Jones route for k up to this")
@click.option("--json", "as_json", is_flag=True, help="JSON output")
def pretzel_scan(k_min, k_max, jones_upto, as_json):
    """Sweep the trivial-Alexander family P(4k+1, 4k+3, -(2k+1))."""
    if not 1 <= k_min <= k_max:
        raise click.UsageError("need 1 <= k-min <= k-max")
    rows = []
    for k in range(k_min, k_max + 1):
        params, ob, predicted = pretzel_family(k)
        row = {
            "k": k,
            "p": params.p,
            "q": params.q,
            "r": params.r,
            "alexander_trivial": pretzel_alexander_coeff(params) == 0,
            "ob_closed_form": _frac_str(ob),
            "verdict_mod16": predicted,
        }
        if k <= jones_upto:
            _, _, ob_jones = obstruction_value(jones(params))
            row["ob_jones_route"] = _frac_str(ob_jones)
            row["routes_agree"] = ob_jones == ob
        rows.append(row)
    if as_json:
        click.echo(json.dumps(rows, indent=2))
        return
    for row in rows:
        line = (
            f"k={row['k']:>3}  P({row['p']},{row['q']},{row['r']})"
            f"  trivial_alexander={row['alexander_trivial']}"
            f"  ob={row['ob_closed_form']}"
            f"  mod16_obstructs={row['verdict_mod16']}"
        )
        if "ob_jones_route" in row:
            line += (
                f"  jones_ob={row['ob_jones_route']}"
                f"  agree={row['routes_agree']}"
            )
        click.echo(line)


def _batch_row_report(kind: str, payload: list[str]) -> ObstructionReport:
    if kind == "pretzel":
        if len(payload) < 3:
            raise KnotObstructError("pretzel rows need columns p,q,r")
        return cosmetic_verdict(
            pretzel=PretzelParams(*(int(x) for x in payload[:3]))
        )
    if kind == "pd":
        if not payload:
            raise KnotObstructError("pd rows need a PD string column")
        return cosmetic_verdict(pd=parse_pd(payload[0]))
    if kind == "seifert":
        if not payload:
            raise KnotObstructError("seifert rows need a matrix column")
        return cosmetic_verdict(seifert=_parse_seifert(payload[0]))
    raise KnotObstructError(f"unknown row kind {kind!r}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--output", "output_path", default=None, type=click.Path())
def batch(input_path, output_path):
    """Process a CSV of knots (header kind,label,payload...) into reports."""
    results = []
    counts: dict[str, int] = {}
    with open(input_path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["kind", "label"]:
            raise click.ClickException("CSV header must start with: kind,label")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            kind = row[0].strip()
            label = row[1].strip() if len(row) > 1 else ""
            payload = [c.strip() for c in row[2:]]
            try:
                report = _batch_row_report(kind, payload)
            except (KnotObstructError, ValueError) as exc:
                results.append({"label": label, "error": str(exc), "line": lineno})
                counts["error"] = counts.get("error", 0) + 1
                continue
            results.append({"label": label, "report": report.to_json_dict()})
            counts[report.verdict] = counts.get(report.verdict, 0) + 1
    doc = {"results": results, "summary": counts}
    text = json.dumps(doc, indent=2)
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) or "empty"
    click.echo(f"summary: {summary}", err=True)


@main.command()
@click.option("--suite", default=None, type=click.Choice(sorted(SUITES)))
@click.option("--flip-smoothing", is_flag=True,
              help="debug: flip the bracket smoothing pairing (trefoil suite must fail)")
def selftest(suite, flip_smoothing):
    """Run the embedded oracle suites; nonzero exit on any failure."""
    results = run_selftest(suite=suite, flip_smoothing=flip_smoothing)
    ok = True
    for name, passed in results.items():
        click.echo(f"{name:12} {'pass' if passed else 'FAIL'}")
        ok = ok and passed
    if not ok:
        sys.exit(1)


def run():
    try:
        main(standalone_mode=True)
    except KnotObstructError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    run()
