"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.  Output is
deterministic and independent of --threads (execution is sequential; the
flag is accepted for interface stability).
"""

from __future__ import annotations

import json
import sys

import click

from .cells import cells_report
from .coxeter import (FAMILIES, GroupType, InvalidGroupError, build_graph,
                      normalize_family)
from .enumerator import cross_validate, enumerate_fc, iter_fc
from .genfunc import (SERIES_IDS, card_involutions, length_genfunc,
                      maj_genfunc, maj_genfunc_by_descents, solve_series)
from .qpoly import TPoly
from .walks import END_CHOICES, START_CHOICES, WEIGHT_CHOICES, WalkFamilySpec, family_poly

FORMATS = ("text", "json", "csv")


def _group_type(family: str, rank: int) -> GroupType:
    try:
        return GroupType(normalize_family(family), rank)
    except InvalidGroupError as e:
        raise click.UsageError(str(e))


def _emit_json(payload) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


type_option = click.option("--type", "family", required=True,
                           help=f"group family, one of {', '.join(FAMILIES)}")
rank_option = click.option("--rank", type=int, required=True, help="rank parameter")
format_option = click.option("--format", "fmt", type=click.Choice(FORMATS),
                             default="text", show_default=True)
threads_option = click.option("--threads", type=int, default=1, show_default=True,
                              help="accepted for compatibility; execution is sequential")


def _check_threads(threads: int) -> None:
    if threads < 1:
        raise click.UsageError("--threads must be >= 1")


@click.group()
def main() -> None:
    """Fully commutative involutions: enumeration, series, and verification."""


@main.group()
def graph() -> None:
    """Coxeter graph inspection."""


@graph.command("show")
@type_option
@rank_option
@format_option
def graph_show(family: str, rank: int, fmt: str) -> None:
    """Print the generators and bonds of a family graph."""
    t = _group_type(family, rank)
    g = build_graph(t)
    if fmt == "json":
        _emit_json({
            "type": t.family,
            "rank": t.n,
            "generators": list(g.names),
            "cyclic": g.cyclic,
            "bonds": [{"a": g.names[i], "b": g.names[j], "m": m}
                      for i, j, m in g.edges()],
            "forks": [{"branches": [g.names[a], g.names[b]], "joint": g.names[j]}
                      for a, b, j in g.forks],
            "maj_weight": list(g.maj_weight) if g.maj_weight else None,
        })
        return
    rows = [f"group {t.family}:{t.n}  generators {g.size}  "
            f"{'cyclic' if g.cyclic else 'acyclic'}"]
    rows.append("generators: " + " ".join(g.names))
    for i, j, m in g.edges():
        rows.append(f"bond {g.names[i]} -- {g.names[j]}  m={m}")
    if g.maj_weight:
        rows.append("weights: " + " ".join(f"{nm}={w}" for nm, w in zip(g.names, g.maj_weight)))
    if fmt == "csv":
        click.echo("a,b,m")
        for i, j, m in g.edges():
            click.echo(f"{g.names[i]},{g.names[j]},{m}")
        return
    for r in rows:
        click.echo(r)


@main.command("enumerate")
@type_option
@rank_option
@click.option("--max-length", type=int, required=True)
@click.option("--involutions", "mode", flag_value="involutions",
              help="count only self-dual heaps")
@click.option("--alternating", "mode", flag_value="alternating",
              help="count only alternating involutions")
@click.option("--all", "mode", flag_value="all", default=True, hidden=True)
@click.option("--stream", is_flag=True, help="emit canonical words instead of counts")
@format_option
@threads_option
def enumerate_cmd(family: str, rank: int, max_length: int, mode: str,
                  stream: bool, fmt: str, threads: int) -> None:
    """Count FC heaps by length, optionally filtered or streamed."""
    _check_threads(threads)
    if max_length < 0:
        raise click.UsageError("--max-length must be >= 0")
    t = _group_type(family, rank)
    g = build_graph(t)
    if stream:
        from .enumerator import passes_filter
        elements = []
        for length, h in iter_fc(g, max_length):
            if passes_filter(h, mode):
                word = " ".join(g.names[c] for c in h.canonical_word) or "e"
                elements.append((length, word))
        if fmt == "json":
            _emit_json({"type": t.family, "rank": t.n, "max_length": max_length,
                        "filter": mode,
                        "elements": [{"length": l, "word": w} for l, w in elements]})
        elif fmt == "csv":
            click.echo("length,word")
            for l, w in elements:
                click.echo(f"{l},{w}")
        else:
            for _l, w in elements:
                click.echo(w)
        return
    counts, _ = enumerate_fc(g, max_length, mode)
    if fmt == "json":
        _emit_json({"type": t.family, "rank": t.n, "max_length": max_length,
                    "filter": mode, "counts": counts})
    elif fmt == "csv":
        for length, c in enumerate(counts):
            click.echo(f"{length},{c}")
    else:
        for length, c in enumerate(counts):
            click.echo(f"{length}: {c}")


@main.command("genfunc")
@click.argument("stat", type=click.Choice(["length", "maj", "card"]))
@type_option
@rank_option
@click.option("--descents", type=int, default=None,
              help="restrict maj to a fixed descent count (family B)")
@format_option
def genfunc_cmd(stat: str, family: str, rank: int, descents: int | None, fmt: str) -> None:
    """Closed-form length/maj polynomials and cardinalities."""
    t = _group_type(family, rank)
    if t.is_affine:
        raise click.UsageError(f"genfunc {stat} needs a finite family, got {t.family}")
    if descents is not None and (stat != "maj" or t.family != "B"):
        raise click.UsageError("--descents applies to 'maj' with --type B only")
    try:
        if stat == "card":
            value = card_involutions(t.family, t.n)
            if fmt == "json":
                _emit_json({"type": t.family, "rank": t.n, "stat": "card", "value": value})
            elif fmt == "csv":
                click.echo("value")
                click.echo(str(value))
            else:
                click.echo(str(value))
            return
        if stat == "maj":
            poly = (maj_genfunc_by_descents(t.n, descents) if descents is not None
                    else maj_genfunc(t.family, t.n))
            var = "q"
        else:
            poly = length_genfunc(t.family, t.n)
            var = "t"
    except (InvalidGroupError, ValueError) as e:
        raise click.UsageError(str(e))
    _emit_poly(poly, var, fmt, {"type": t.family, "rank": t.n, "stat": stat,
                                **({"descents": descents} if descents is not None else {})})


def _emit_poly(poly: TPoly, var: str, fmt: str, meta: dict) -> None:
    if fmt == "json":
        _emit_json({**meta, **poly.to_json_dict(var)})
    elif fmt == "csv":
        click.echo("exponent,coefficient")
        for k, c in enumerate(poly.coeffs):
            if c:
                click.echo(f"{k},{c}")
    else:
        click.echo(poly.to_text(var))


@main.command("series")
@click.option("--id", "series_id", type=click.Choice(SERIES_IDS), required=True)
@click.option("--xmax", type=int, required=True)
@click.option("--tmax", type=int, required=True)
@format_option
def series_cmd(series_id: str, xmax: int, tmax: int, fmt: str) -> None:
    """Solve a walk functional equation on a truncated window."""
    if xmax < 0 or tmax < 0:
        raise click.UsageError("--xmax and --tmax must be >= 0")
    s = solve_series(series_id, xmax, tmax)
    if fmt == "json":
        _emit_json({"id": series_id, "xmax": xmax, "tmax": tmax,
                    "coeffs": [[str(c) for c in p.coeffs] for p in s.coeffs]})
    elif fmt == "csv":
        click.echo("xpow,tpow,coefficient")
        for k, p in enumerate(s.coeffs):
            for e, c in enumerate(p.coeffs):
                if c:
                    click.echo(f"{k},{e},{c}")
    else:
        for k, p in enumerate(s.coeffs):
            click.echo(f"[x^{k}] {p.to_text()}")


@main.group()
def walks() -> None:
    """Weighted walk families."""


def _parse_height(value: str, choices) -> object:
    if value.lstrip("-").isdigit():
        h = int(value)
        if h < 0:
            raise click.UsageError("height constraints must be >= 0")
        return h
    if value in choices:
        return value
    raise click.UsageError(f"bad constraint {value!r}; want an integer or one of {choices}")


@walks.command("family")
@click.option("--n", "length", type=int, required=True, help="number of steps")
@click.option("--no-horiz", is_flag=True, help="forbid horizontal steps")
@click.option("--touch", is_flag=True, help="require a zero height somewhere")
@click.option("--start", default="0", show_default=True)
@click.option("--end", default="any", show_default=True)
@click.option("--weight", type=click.Choice(WEIGHT_CHOICES), default="all", show_default=True)
@click.option("--tmax", type=int, required=True)
@format_option
def walks_family(length: int, no_horiz: bool, touch: bool, start: str, end: str,
                 weight: str, tmax: int, fmt: str) -> None:
    """Weight polynomial of a constrained walk family."""
    if length < 0 or tmax < 0:
        raise click.UsageError("--n and --tmax must be >= 0")
    try:
        spec = WalkFamilySpec(n=length, allow_horiz=not no_horiz,
                              start=_parse_height(start, START_CHOICES),
                              end=_parse_height(end, END_CHOICES),
                              require_touch=touch, weight=weight)
    except ValueError as e:
        raise click.UsageError(str(e))
    poly = family_poly(spec, tmax)
    _emit_poly(poly, "t", fmt, {"n": length, "allow_horiz": not no_horiz,
                                "touch": touch, "start": start, "end": end,
                                "weight": weight, "tmax": tmax})


@main.command("verify")
@type_option
@rank_option
@click.option("--max-length", type=int, default=None,
              help="enumeration window for affine families")
@click.option("--format", "fmt", type=click.Choice(("text", "json")),
              default="text", show_default=True)
@threads_option
def verify_cmd(family: str, rank: int, max_length: int | None, fmt: str, threads: int) -> None:
    """Check enumerated counts against every closed form for the group."""
    _check_threads(threads)
    t = _group_type(family, rank)
    if max_length is not None and max_length < 4:
        raise click.UsageError("--max-length must be >= 4")
    report = cross_validate(t.family, t.n, max_length)
    if fmt == "json":
        payload = {
            "type": t.family, "rank": t.n, "ok": report.ok,
            "checks": report.checks, "failures": report.failures,
            "notes": report.notes,
        }
        if report.card is not None:
            payload["card"] = report.card
        if report.maj is not None:
            payload["maj"] = report.maj.to_json_dict("q")
        if report.length is not None:
            payload["length"] = report.length.to_json_dict("t")
        if report.remainder is not None:
            payload["remainder"] = report.remainder.to_json_dict("t")
        if report.period is not None:
            payload["period"] = {
                "transient_start": report.period.transient_start,
                "period": report.period.period,
                "repeating_block": list(report.period.repeating_block),
            }
        _emit_json(payload)
    else:
        if not t.is_affine:
            parts = []
            if report.card is not None:
                parts.append(f"card={report.card}")
            if report.maj is not None:
                parts.append(f"maj={report.maj.to_text('q', compact=True)}")
            if report.length is not None:
                parts.append(f"length={report.length.to_text('t', compact=True)}")
            parts.append("all match" if report.ok else "MISMATCH")
            click.echo(" ".join(parts))
        else:
            if report.remainder is not None:
                click.echo(f"remainder={report.remainder.to_text('t', compact=True)}")
            if report.period is not None:
                block = ",".join(str(c) for c in report.period.repeating_block)
                click.echo(f"period={report.period.period} "
                           f"transient={report.period.transient_start} block={block}")
            click.echo("all match" if report.ok else "MISMATCH")
        for note in report.notes:
            click.echo(f"note: {note}")
        for f in report.failures:
            click.echo(f"failure: {f}", err=False)
    if not report.ok:
        sys.exit(1)


@main.command("cells")
@click.option("--rank", type=int, required=True)
@click.option("--max-length", type=int, required=True)
@format_option
@threads_option
def cells_cmd(rank: int, max_length: int, fmt: str, threads: int) -> None:
    """Reduce every FC heap of a cycle and report the fibers."""
    _check_threads(threads)
    if max_length < 0:
        raise click.UsageError("--max-length must be >= 0")
    try:
        GroupType("affA", rank)
    except InvalidGroupError as e:
        raise click.UsageError(str(e))
    report = cells_report(rank, max_length)
    if fmt == "json":
        _emit_json(report)
        return
    if fmt == "csv":
        click.echo("representative,members,involution")
        for row in report["fibers"]:
            inv = row["involution"] or ""
            click.echo(f"{row['representative']},{row['members']},{inv}")
        return
    click.echo(f"rank {report['rank']} max_length {report['max_length']} "
               f"fibers {report['fiber_count']}")
    for row in report["fibers"]:
        inv = row["involution"] or "-"
        click.echo(f"{row['representative']} | members {row['members']} | involution {inv}")
    for name, ok in report["audits"].items():
        click.echo(f"audit {name}: {'ok' if ok else 'FAILED'}")
    if not all(report["audits"].values()):
        sys.exit(1)


if __name__ == "__main__":
    main()
