"""Command-line front end.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage or
parse errors (click's convention for bad invocations).
"""

from __future__ import annotations

import json
import sys

import click

from . import aw as aw_mod
from . import mixed_eulerian, pipedreams, verify
from .perm import (
    Permutation,
    cyclic_shifts,
    format_perm,
    longest_element,
    parse_perm,
    reduced_word_count,
)

DEFAULT_MAX_N = 7


def _parse_perm_arg(text: str) -> Permutation:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.UsageError(f"cannot parse composition: {text!r}")
    if any(x < 0 for x in parts):
        raise click.UsageError(f"composition parts must be nonnegative: {text!r}")
    return parts


def expansion_to_json(n: int, expansion: dict[Permutation, int], methods: dict[Permutation, str]) -> dict:
    wo = longest_element(n)
    terms = []
    for w in sorted(expansion, key=lambda v: (wo * v).one_line(n)):
        terms.append(
            {
                "w": format_perm(w, n),
                "wo_w": format_perm(wo * w),
                "a_w": expansion[w],
                "method": methods[w],
            }
        )
    return {"n": n, "terms": terms}


def expansion_from_json(data: dict) -> dict[Permutation, int]:
    return {parse_perm(term["w"]): term["a_w"] for term in data["terms"]}


@click.group()
def main():
    """Exact Schubert expansion of the permutahedral variety class."""


@main.command("aw")
@click.argument("perm")
@click.option("--method", type=click.Choice(aw_mod.METHODS), default="auto", show_default=True)
@click.option("--all-methods", is_flag=True, help="Print every method and an agreement verdict.")
def cmd_aw(perm: str, method: str, all_methods: bool):
    """Compute a_w for a permutation of length n-1 given in one-line notation."""
    w = _parse_perm_arg(perm)
    n = max(len(perm.split(",")) if "," in perm else len(perm.strip()), w.size)
    if w.length() != n - 1:
        raise click.UsageError(
            f"{perm} has length {w.length()}, expected n - 1 = {n - 1}"
        )
    if all_methods:
        results = aw_mod.aw_all_methods(w, n)
        for name, result in sorted(results.items()):
            click.echo(f"{name:10s} {result.value}  ({result.seconds:.3f}s, {result.method})")
        values = {r.value for r in results.values()}
        verdict = "AGREE" if len(values) == 1 else "DISAGREE"
        click.echo(f"verdict: {verdict}")
        if len(values) != 1:
            sys.exit(1)
    else:
        result = aw_mod.aw_detailed(w, n, method)
        click.echo(str(result.value))


@main.command("tau")
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text", show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--max-n", type=int, default=DEFAULT_MAX_N, show_default=True,
              help="Refuse n beyond this cap.")
def cmd_tau(n: int, fmt: str, threads: int, max_n: int):
    """Print the full expansion of the permutahedral class for S_n."""
    if not 2 <= n <= max_n:
        raise click.UsageError(f"n must be between 2 and {max_n}")
    expansion = aw_mod.tau_expansion(n, threads=threads)
    methods = {w: aw_mod.aw_detailed(w, n).method for w in expansion}
    wo = longest_element(n)
    ordered = sorted(expansion, key=lambda v: (wo * v).one_line(n))
    if fmt == "text":
        chunks = []
        for w in ordered:
            coeff = expansion[w]
            index = format_perm(wo * w)
            chunks.append(f"S_{index}" if coeff == 1 else f"{coeff}*S_{index}")
        click.echo(" + ".join(chunks))
    elif fmt == "csv":
        click.echo("n,w,wo_w,a_w,method")
        for w in ordered:
            click.echo(
                f"{n},{format_perm(w, n)},{format_perm(wo * w)},{expansion[w]},{methods[w]}"
            )
    else:
        click.echo(json.dumps(expansion_to_json(n, expansion, methods), indent=2))


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify.SUITES) + ["all"]))
@click.argument("n", type=int, default=5)
def cmd_verify(suite: str, n: int):
    """Run a verification suite exhaustively up to rank N (default 5)."""
    if n < 2:
        raise click.UsageError("n must be at least 2")
    checks = verify.run_suite(suite, n)
    failed = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        detail = f"  [{check.detail}]" if check.detail else ""
        click.echo(f"{status}  {check.name} ({check.instances} instances){detail}")
        if not check.passed:
            failed += 1
    click.echo(f"{len(checks) - failed}/{len(checks)} checks passed")
    if failed:
        sys.exit(1)


@main.command("hvector")
@click.argument("perm")
def cmd_hvector(perm: str):
    """Print the h-vector of an indecomposable permutation as a polynomial in t."""
    u = _parse_perm_arg(perm)
    try:
        coeffs = aw_mod.h_vector(u)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    terms = []
    for m, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        if m == 0:
            terms.append(str(coeff))
        else:
            power = "t" if m == 1 else f"t^{m}"
            terms.append(power if coeff == 1 else f"{coeff}*{power}")
    click.echo(" + ".join(terms) if terms else "0")


@main.command("mixed")
@click.argument("composition", required=False)
@click.option("--table", "table_n", type=int, default=None,
              help="Dump all mixed Eulerian numbers for the given rank as CSV.")
def cmd_mixed(composition: str | None, table_n: int | None):
    """Print the mixed Eulerian number A_c for a comma-separated composition."""
    if table_n is not None:
        click.echo("c,A_c")
        for c, value in mixed_eulerian.table_rows(table_n):
            click.echo(f"{';'.join(map(str, c))},{value}")
        return
    if composition is None:
        raise click.UsageError("provide a composition or --table N")
    c = _parse_composition(composition)
    try:
        value = mixed_eulerian.mixed_eulerian(c)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(str(value))


@main.command("pipedreams")
@click.argument("perm")
def cmd_pipedreams(perm: str):
    """Render all reduced pipe dreams of a permutation."""
    w = _parse_perm_arg(perm)
    n = max(len(perm.split(",")) if "," in perm else len(perm.strip()), w.size, 1)
    dreams = sorted(pipedreams.enumerate_pipe_dreams(w, n), key=sorted)
    for k, dream in enumerate(dreams, start=1):
        click.echo(f"# {k} (weight {pipedreams.row_weight(dream, n)})")
        click.echo(pipedreams.render_ascii(dream, n))
    click.echo(f"{len(dreams)} reduced pipe dreams")


@main.command("maxima")
@click.argument("n", type=int)
@click.option("--max-n", type=int, default=DEFAULT_MAX_N, show_default=True)
def cmd_maxima(n: int, max_n: int):
    """Report where a_w is maximal over S'_n (empirical observation only)."""
    if not 2 <= n <= max_n:
        raise click.UsageError(f"n must be between 2 and {max_n}")
    best, argmax, at_alternating = aw_mod.max_report(n)
    names = ", ".join(format_perm(w, n) for w in argmax)
    click.echo(f"max a_w over S'_{n} is {best}, attained at: {names}")
    click.echo(
        "maximizers are exactly the two alternating Coxeter elements: "
        + ("yes" if at_alternating else "no")
    )


if __name__ == "__main__":
    main()
