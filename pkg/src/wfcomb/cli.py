"""``wfcomb`` command line.

Inputs are JSON, given as an argument or on stdin when the argument is
omitted; results go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import json
import random
import sys
from typing import Any

import click

from . import duality, endoscopy, springer, symbols, wavefront
from .errors import WfcombError
from .partitions import PartitionClass, as_partition
from .suites import SUITES, run_suite


class ParseError(WfcombError, ValueError):
    pass


def _emit(ctx: click.Context, obj: Any) -> None:
    pretty = ctx.find_root().obj.get("pretty", False)
    click.echo(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def _load(text: str | None, what: str) -> Any:
    if text is None:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: {exc.msg} at column {exc.colno}") from None


def _partition(text: str | None, what: str = "partition"):
    obj = _load(text, what)
    if not isinstance(obj, list) or not all(isinstance(x, int) and x >= 0 for x in obj):
        raise ParseError(f"{what}: expected a JSON array of nonnegative integers")
    return as_partition(obj)


def _cls(text: str) -> PartitionClass:
    try:
        return PartitionClass.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


class _Group(click.Group):
    """Turn library errors into a JSON diagnostic on stderr and exit code 2."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (WfcombError, ValueError, KeyError, TypeError) as exc:
            kind = "ParseError" if isinstance(exc, (ParseError, KeyError, TypeError)) else "DomainError"
            diag = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
            click.echo(json.dumps(diag), err=True)
            ctx.exit(2)


@click.group(cls=_Group)
@click.option("--json/--pretty", "compact", default=True, help="Compact (default) or indented output.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for any randomized step.")
@click.pass_context
def main(ctx: click.Context, compact: bool, seed: int) -> None:
    """Partition and symbol combinatorics for wave front sets of pi(lam+, eps+, lam-, eps-)."""
    random.seed(seed)
    ctx.obj = {"pretty": not compact, "seed": seed}


@main.command("wavefront")
@click.argument("quadruple", required=False)
@click.pass_context
def cmd_wavefront(ctx, quadruple):
    """Wave front partition of {"lp","ep","lm","em"}."""
    q = wavefront.QuadrupleBP.from_json(_load(quadruple, "quadruple"))
    _emit(ctx, list(wavefront.wavefront(q)))


@main.command("table-5-3")
@click.argument("lam", required=False)
@click.pass_context
def cmd_table(ctx, lam):
    """The eight rows (eps, k, lam^max, eps^max, t lam^min, mu) for a triple."""
    rows = wavefront.table_5_3(_partition(lam))
    if ctx.find_root().obj["pretty"]:
        sign = lambda es: "".join("+" if e > 0 else "-" for e in es)  # noqa: E731
        click.echo(f"{'eps':5}{'k':>3}  {'lam^max':16}{'eps^max':9}{'t lam^min':22}mu")
        for r in rows:
            click.echo(f"{sign(r.eps):5}{r.k:>3}  {str(list(r.lam_max)):16}{sign(r.eps_max):9}"
                       f"{str(list(r.t_lam_min)):22}{list(r.mu)}")
        return
    _emit(ctx, [r.to_json() for r in rows])


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--bound", type=int, default=None, help="Size bound; each suite has its own default.")
@click.pass_context
def cmd_verify(ctx, suite, bound):
    """Run an exhaustive verification suite; exit 1 on any failure."""
    report = run_suite(suite, bound)
    _emit(ctx, report.to_json())
    if not report.passed:
        ctx.exit(1)


@main.command("dual")
@click.option("--class", "pclass", default="symp", show_default=True)
@click.argument("lam", required=False)
@click.pass_context
def cmd_dual(ctx, pclass, lam):
    """Duality d(lam)."""
    _emit(ctx, list(duality.dual(_partition(lam), _cls(pclass))))


@main.command("sp")
@click.argument("lam", required=False)
@click.pass_context
def cmd_sp(ctx, lam):
    """Smallest special symplectic partition above lam."""
    _emit(ctx, list(duality.sp_closure(_partition(lam))))


@main.command("family")
@click.option("--class", "pclass", default="symp", show_default=True)
@click.argument("lam", required=False)
@click.pass_context
def cmd_family(ctx, pclass, lam):
    """Members of Fam(lam) with their (tau, delta) coordinates."""
    cls = _cls(pclass)
    lam = _partition(lam)
    fam = symbols.family(lam, cls)
    members = []
    for s in fam.members():
        c = symbols.tau_delta(s, fam)
        members.append({"symbol": s.to_json(), "r": c.r,
                        "tau": [b for _, b in c.tau], "delta": [b for _, b in c.delta]})
    _emit(ctx, {"lambda": list(lam), "class": cls.value, "special": fam.special.to_json(),
                "intervals": [list(d.values) for d in fam.tilde], "size": len(members),
                "members": members})


@main.command("induce")
@click.argument("lam1", required=False)
@click.argument("lam2", required=False)
@click.pass_context
def cmd_induce(ctx, lam1, lam2):
    """Endoscopic induction of a special symplectic and a special even orthogonal partition."""
    data = endoscopy.induce(_partition(lam1, "lam1"), _partition(lam2 if lam2 is not None else "[]", "lam2"))
    _emit(ctx, {
        "lambda": list(data.lam),
        "regular": endoscopy.is_regular(data),
        "xi": list(data.xi),
        "J_plus": sorted(data.J_plus),
        "J_minus": sorted(data.J_minus),
        "intervals": [{"values": list(D.values), "j_min": D.j_min, "j_max": D.j_max, "chi": D.chi}
                      for D in data.rel],
    })


@main.command("springer")
@click.option("--inverse", is_flag=True, help="Map a datum {k, rho} back, with --class and --n.")
@click.option("--class", "pclass", default="symp", show_default=True)
@click.option("--n", "N", type=int, default=None, help="Rank N (for --inverse).")
@click.argument("data", required=False)
@click.pass_context
def cmd_springer(ctx, inverse, pclass, N, data):
    """Springer datum of {"lambda","eps"} (signs keyed by part), or its inverse."""
    obj = _load(data, "springer input")
    if inverse:
        if N is None:
            raise ParseError("--inverse needs --n")
        alpha, beta = obj["rho"]
        datum = springer.SpringerDatum(int(obj["k"]), springer.Bipartition.of(alpha, beta))
        _emit(ctx, springer.springer_inv(_cls(pclass), datum, N).to_json())
        return
    obj.setdefault("class", pclass)
    sp = springer.SignedPartition.from_json(obj)
    _emit(ctx, springer.springer(sp).to_json())


@main.command("symb")
@click.option("--kind", type=click.Choice([symbols.IMP, symbols.PAIR]), default=symbols.IMP, show_default=True)
@click.option("--inverse", is_flag=True, help="Read a symbol {X, Y, kind} and return (r, alpha, beta).")
@click.argument("data", required=False)
@click.pass_context
def cmd_symb(ctx, kind, inverse, data):
    """symb(r, alpha, beta) from {"r","alpha","beta"}, or its inverse."""
    obj = _load(data, "symb input")
    if inverse:
        r, a, b = symbols.symb_inv(symbols.Symbol.from_json(obj))
        _emit(ctx, {"r": r, "alpha": list(a), "beta": list(b), "kind": obj.get("kind", symbols.IMP)})
        return
    sym = symbols.symb(kind, int(obj["r"]), obj.get("alpha", []), obj.get("beta", []))
    _emit(ctx, sym.to_json())


if __name__ == "__main__":
    main()
