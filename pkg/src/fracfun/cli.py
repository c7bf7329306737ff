"""
Command-line front end for fracfun.

Usage:
    fracfun eval legendre --nu 0.5 --grid -0.9:0.9:7
    fracfun eval charlier --mu 1 --a 2 --x 2
    fracfun diff --in seq.csv --alpha 0.5
    fracfun check all
    fracfun table legendre --nu 0.25,0.5,0.75 --grid -0.9:0.9:33 --format json

Exit codes: 0 ok, 1 a check failed, 2 bad configuration, 3 numerical failure.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from importlib import resources
from pathlib import Path

import click
import numpy as np

from . import __version__
from . import continuous_families as cf
from . import discrete_families as df
from .checks import SUITES, run_suite
from .discrete import DiscreteSequence, alpha_diff, backward_difference
from .errors import DomainError, FracFunError, PoleError, WindowError
from .hypergeom import DEFAULT_TOL, EvalResult
from .special import is_integer

__all__ = ["main", "OUTPUT_SCHEMA", "parse_grid", "EXIT_OK", "EXIT_CHECK", "EXIT_CONFIG",
           "EXIT_NUMERIC"]

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3

EVAL_COLUMNS = ["x", "re", "im", "abs_error_estimate", "terms_used"]

# family -> parameters it accepts (flag names without dashes)
CONTINUOUS_PARAMS = {
    "hermite": (),
    "laguerre": ("alpha",),
    "jacobi": ("alpha", "beta"),
    "gegenbauer": ("lambda",),
    "chebyshev_t": (),
    "chebyshev_u": (),
    "legendre": (),
}
DISCRETE_PARAMS = {
    "charlier": ("a",),
    "meixner": ("beta", "c"),
    "krawtchouk": ("p", "N"),
    "hahn": ("alpha", "beta", "N"),
}
# defaults for omitted continuous-family parameters
CONTINUOUS_DEFAULTS = {"alpha": 0.0, "beta": 0.0, "lambda": 1.0}
FORMS = {"hermite": ("caputo", "printed"), "legendre": ("real", "jacobi")}
ALL_FAMILIES = tuple(CONTINUOUS_PARAMS) + tuple(DISCRETE_PARAMS)


def _load_schema() -> dict:
    text = resources.files("fracfun").joinpath("data/output_schema.json").read_text()
    return json.loads(text)


OUTPUT_SCHEMA = _load_schema()


class ConfigError(Exception):
    """Bad flags or input; maps to exit code 2."""


class NumericalFailure(Exception):
    """A library evaluation failed; maps to exit code 3."""


def fmt(v: float) -> str:
    """
    Fixed 17-significant-digit rendering, independent of locale.

    Example:
        >>> fmt(0.1)
        '0.10000000000000001'
        >>> fmt(-0.0)
        '0'
    """
    v = float(v)
    if v == 0:
        return "0"
    return format(v, ".17g")


def parse_grid(spec: str) -> np.ndarray:
    """
    Parse ``start:stop:count`` into an inclusive grid.

    Example:
        >>> parse_grid("0:1:3").tolist()
        [0.0, 0.5, 1.0]
        >>> parse_grid("2:9:1").tolist()
        [2.0]
    """
    parts = spec.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:count, got {spec!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid must be start:stop:count, got {spec!r}") from None
    if count < 1:
        raise ConfigError(f"grid count must be at least 1, got {count}")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ConfigError("grid endpoints must be finite")
    if count == 1:
        return np.array([start])
    # scale before dividing so symmetric grids hit 0 exactly
    return start + (stop - start) * np.arange(count) / (count - 1)


def _parse_floats(text: str) -> list[float]:
    try:
        vals = [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"expected a comma-separated list of numbers, got {text!r}") from None
    if not vals:
        raise ConfigError("empty order list")
    return vals


def _points(x: float | None, grid: str | None) -> np.ndarray:
    if (x is None) == (grid is None):
        raise ConfigError("give exactly one of --x or --grid")
    if x is not None:
        return np.array([float(x)])
    return parse_grid(grid)


def _check_tol(tol: float) -> float:
    if not (tol > 0 and math.isfinite(tol)):
        raise ConfigError(f"tolerance must be positive, got {tol}")
    return tol


def _family_params(family: str, given: dict) -> dict:
    supplied = {k for k, v in given.items() if v is not None}
    allowed = CONTINUOUS_PARAMS.get(family) or DISCRETE_PARAMS.get(family) or ()
    extra = sorted(supplied - set(allowed))
    if extra:
        raise ConfigError(
            f"{family} does not take {', '.join('--' + e for e in extra)}"
            f" (accepts: {', '.join('--' + a for a in allowed) or 'none'})"
        )
    if family in DISCRETE_PARAMS:
        missing = [k for k in allowed if given.get(k) is None]
        if missing:
            raise ConfigError(f"{family} needs {', '.join('--' + m for m in missing)}")
        return {k: given[k] for k in allowed}
    return {k: CONTINUOUS_DEFAULTS[k] if given.get(k) is None else given[k] for k in allowed}


class Evaluator:
    """Validated family plus parameters, callable at a point."""

    def __init__(self, family: str, order: float, params: dict, form: str | None):
        self.family = family
        self.params = params
        try:
            if family in CONTINUOUS_PARAMS:
                options = {}
                if form is not None:
                    if form not in FORMS.get(family, ()):
                        raise ConfigError(f"--form is not valid for {family}: {form!r}")
                    options["form"] = form
                self.spec = cf.ContinuousFamilySpec(
                    family, order,
                    alpha=params.get("alpha", CONTINUOUS_DEFAULTS["alpha"]),
                    beta=params.get("beta", CONTINUOUS_DEFAULTS["beta"]),
                    lam=params.get("lambda", CONTINUOUS_DEFAULTS["lambda"]), options=options,
                )
            else:
                if form is not None:
                    raise ConfigError(f"--form is not valid for {family}")
                kw = dict(params)
                if "N" in kw:
                    if not is_integer(kw["N"]):
                        raise ConfigError(f"--N must be an integer, got {kw['N']}")
                    kw["N"] = int(round(kw["N"]))
                self.spec = df.DiscreteFamilySpec(family, order, **kw)
        except DomainError as exc:
            raise ConfigError(str(exc)) from None

    @property
    def discrete(self) -> bool:
        return self.family in DISCRETE_PARAMS

    def __call__(self, x: float, tol: float) -> EvalResult:
        try:
            if self.discrete:
                if not is_integer(x):
                    raise ConfigError(f"{self.family} is defined on integers, got x = {fmt(x)}")
                return self.spec.closed_form(int(round(x)), tol)
            return self.spec.evaluate(float(x), tol)
        except ConfigError:
            raise
        except PoleError as exc:
            raise NumericalFailure(f"at x = {fmt(x)}: {exc}") from None
        except (DomainError, WindowError) as exc:
            raise ConfigError(f"at x = {fmt(x)}: {exc}") from None
        except (FracFunError, ArithmeticError) as exc:
            raise NumericalFailure(f"at x = {fmt(x)}: {exc}") from None


def _make_evaluator(family, order_nu, order_mu, given, form) -> tuple[Evaluator, float]:
    family = family.lower()
    if family in CONTINUOUS_PARAMS:
        if order_mu is not None:
            raise ConfigError(f"{family} takes --nu, not --mu")
        if order_nu is None:
            raise ConfigError(f"{family} needs --nu")
        order = order_nu
    elif family in DISCRETE_PARAMS:
        if order_nu is not None:
            raise ConfigError(f"{family} takes --mu, not --nu")
        if order_mu is None:
            raise ConfigError(f"{family} needs --mu")
        order = order_mu
    else:
        raise ConfigError(f"unknown family {family!r}; choose from {', '.join(ALL_FAMILIES)}")
    return Evaluator(family, order, _family_params(family, given), form), order


def _header(lines: list[tuple[str, object]]) -> str:
    return "".join(f"# {k}: {v}\n" for k, v in lines)


def _param_text(params: dict) -> str:
    return ", ".join(f"{k}={fmt(v)}" for k, v in params.items()) or "none"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc.strerror or exc}") from None


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, allow_nan=False) + "\n"


def _run(body):
    """Call ``body`` and translate failures into exit codes."""
    try:
        body()
    except ConfigError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)


def _family_options(func=None, *, order_type=float, order_help=""):
    if func is None:
        return lambda f: _family_options(f, order_type=order_type, order_help=order_help)
    opts = [
        click.option("--nu", type=order_type, default=None,
                     help="Order of a continuous family." + order_help),
        click.option("--mu", type=order_type, default=None,
                     help="Order of a discrete family." + order_help),
        click.option("--alpha", type=float, default=None),
        click.option("--beta", type=float, default=None),
        click.option("--lambda", "lam", type=float, default=None, help="Gegenbauer parameter."),
        click.option("--a", "a_", type=float, default=None, help="Charlier parameter."),
        click.option("--c", type=float, default=None, help="Meixner parameter."),
        click.option("--p", type=float, default=None, help="Krawtchouk parameter."),
        click.option("--N", "N", type=float, default=None, help="Krawtchouk/Hahn length."),
        click.option("--form", default=None, help="hermite: caputo|printed, legendre: real|jacobi."),
    ]
    for opt in reversed(opts):
        func = opt(func)
    return func


def _common_options(func):
    opts = [
        click.option("--format", "fmt_", type=click.Choice(["csv", "json"]), default="csv",
                     show_default=True),
        click.option("--tol", type=float, default=DEFAULT_TOL, envvar="FRACFUN_TOL",
                     show_default=True, help="Series tolerance (env FRACFUN_TOL)."),
        click.option("--out", type=click.Path(dir_okay=False), default=None,
                     help="Output file (default stdout)."),
    ]
    for opt in reversed(opts):
        func = opt(func)
    return func


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="fracfun")
def main():
    """
    Fractional Caputo and Gray-Zhang function families.

    Examples:

        fracfun eval jacobi --nu 1.5 --alpha 0.5 --beta 0 --grid -0.9:0.9:5

        fracfun check dualpath --max-x 10
    """


@main.command("eval")
@click.argument("family")
@_family_options
@click.option("--x", type=float, default=None, help="Single evaluation point.")
@click.option("--grid", default=None, help="start:stop:count, endpoints included.")
@_common_options
def eval_cmd(family, nu, mu, alpha, beta, lam, a_, c, p, N, form, x, grid, fmt_, tol, out):
    """Evaluate FAMILY at one point or on a grid."""

    def body():
        _check_tol(tol)
        given = {"alpha": alpha, "beta": beta, "lambda": lam, "a": a_, "c": c, "p": p, "N": N}
        ev, order = _make_evaluator(family, nu, mu, given, form)
        pts = _points(x, grid)
        rows = []
        for i, xi in enumerate(pts):
            try:
                r = ev(float(xi), tol)
            except NumericalFailure as exc:
                raise NumericalFailure(f"row {i}, {exc}") from None
            v = complex(r.value)
            # + 0.0 folds -0.0 so JSON and CSV agree
            rows.append((float(xi), v.real + 0.0, v.imag + 0.0, float(r.abs_error_estimate),
                         int(r.terms_used)))
        order_name = "mu" if ev.discrete else "nu"
        if fmt_ == "json":
            meta = {
                "command": "eval", "version": __version__, "family": ev.family,
                "tol": tol, "params": {order_name: order, **ev.params},
                "columns": EVAL_COLUMNS,
            }
            if form:
                meta["params"]["form"] = form
            doc = {"meta": meta, "rows": [dict(zip(EVAL_COLUMNS, r)) for r in rows]}
            _emit(_dump_json(doc), out)
            return
        buf = io.StringIO()
        buf.write(_header([
            ("fracfun", __version__), ("command", "eval"), ("family", ev.family),
            (order_name, fmt(order)), ("params", _param_text(ev.params)),
            ("form", form or "default"), ("tol", fmt(tol)),
        ]))
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(EVAL_COLUMNS)
        for r in rows:
            w.writerow([fmt(r[0]), fmt(r[1]), fmt(r[2]), fmt(r[3]), str(r[4])])
        _emit(buf.getvalue(), out)

    _run(body)


def read_sequence(path: str, column: str = "f") -> DiscreteSequence:
    """Read a ``t,<column>`` CSV (``#`` lines skipped) into a sequence."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror or exc}") from None
    reader = csv.DictReader(lines)
    if reader.fieldnames is None or "t" not in reader.fieldnames or column not in reader.fieldnames:
        raise ConfigError(f"{path}: header must contain columns t and {column}")
    ts, vals = [], []
    for lineno, row in enumerate(reader, start=2):
        try:
            t = float(row["t"])
            v = float(row[column]) if row[column] not in ("", None) else math.nan
        except ValueError:
            raise ConfigError(f"{path}: bad number on data row {lineno}") from None
        if not is_integer(t):
            raise ConfigError(f"{path}: t must be an integer, got {row['t']!r}")
        ts.append(int(round(t)))
        vals.append(v)
    if not ts:
        raise ConfigError(f"{path}: no data rows")
    for prev, cur in zip(ts, ts[1:]):
        if cur != prev + 1:
            raise ConfigError(f"{path}: index is not contiguous ({prev} then {cur})")
    return DiscreteSequence(ts[0], vals)


@main.command("diff")
@click.option("--in", "in_path", required=True, type=click.Path(dir_okay=False),
              help="CSV with columns t,f.")
@click.option("--alpha", type=float, required=True, help="Difference order; negative for sums.")
@click.option("--column", default="f", show_default=True, help="Input column holding f.")
@_common_options
def diff_cmd(in_path, alpha, column, fmt_, tol, out):
    """
    Append the Gray-Zhang difference of order ALPHA to a sequence.

    Positive integer orders use the classical backward difference and leave
    the first ALPHA rows blank.  Other orders act on the window that starts
    at the first t.
    """

    def body():
        _check_tol(tol)
        f = read_sequence(in_path, column)
        if any(math.isnan(v) for v in f.values):
            raise ConfigError(f"{in_path}: column {column} has blank entries")
        ts = range(f.start, f.end + 1)
        classical = is_integer(alpha) and alpha > 0
        if classical:
            m = int(round(alpha))
            if m >= len(f):
                raise ConfigError(f"window too short: order {m} needs more than {len(f)} rows")
        out_vals = []
        for t in ts:
            try:
                if classical:
                    out_vals.append(backward_difference(f, m, t) if t - m >= f.start else None)
                else:
                    out_vals.append(alpha_diff(f, alpha, t))
            except (FracFunError, ArithmeticError) as exc:
                raise NumericalFailure(f"t = {t}: {exc}") from None
        if fmt_ == "json":
            doc = {
                "meta": {"command": "diff", "version": __version__, "tol": tol,
                         "params": {"alpha": alpha}, "columns": ["t", "f", "diff"]},
                "rows": [{"t": t, "f": float(v), "diff": d}
                         for t, v, d in zip(ts, f.values, out_vals)],
            }
            _emit(_dump_json(doc), out)
            return
        buf = io.StringIO()
        buf.write(_header([("fracfun", __version__), ("command", "diff"),
                           ("alpha", fmt(alpha)), ("window", f"{f.start}..{f.end}")]))
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "f", "diff"])
        for t, v, d in zip(ts, f.values, out_vals):
            w.writerow([t, fmt(v), "" if d is None else fmt(d)])
        _emit(buf.getvalue(), out)

    _run(body)


@main.command("check")
@click.argument("suite", type=click.Choice(sorted(SUITES) + ["all"]), default="all")
@click.option("--seed", type=int, default=0, show_default=True, help="Random draw seed.")
@click.option("--max-x", type=int, default=15, show_default=True,
              help="Largest x in the dual-path suite.")
def check_cmd(suite, seed, max_x):
    """Run a verification SUITE and print one line per property."""
    if max_x < 0:
        click.echo("error: --max-x must be nonnegative", err=True)
        sys.exit(EXIT_CONFIG)
    try:
        results = run_suite(suite, seed, max_x)
    except (FracFunError, ArithmeticError) as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    for r in results:
        click.echo(r.line())
    failed = [r for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} properties passed")
    if failed:
        click.echo(f"first failing property: {failed[0].name}", err=True)
        sys.exit(EXIT_CHECK)


@main.command("table")
@click.argument("family")
@_family_options(order_type=str, order_help=" Comma-separated list.")
@click.option("--grid", required=True, help="start:stop:count, endpoints included.")
@click.option("--part", type=click.Choice(["re", "im"]), default="re", show_default=True,
              help="Which part fills the CSV matrix (JSON carries both).")
@_common_options
def table_cmd(family, nu, mu, alpha, beta, lam, a_, c, p, N, form, grid, part, fmt_, tol, out):
    """
    Tabulate FAMILY as an (order x point) matrix for plotting.

    --nu (or --mu) takes a comma-separated list of orders.
    """

    def body():
        _check_tol(tol)
        given = {"alpha": alpha, "beta": beta, "lambda": lam, "a": a_, "c": c, "p": p, "N": N}
        fam = family.lower()
        orders = _parse_floats(nu if nu is not None else (mu if mu is not None else ""))
        discrete = fam in DISCRETE_PARAMS
        evs = [
            _make_evaluator(fam, None if discrete else o, o if discrete else None, given, form)[0]
            for o in orders
        ]
        xs = parse_grid(grid)
        vals = np.empty((len(orders), len(xs)), dtype=complex)
        for i, ev in enumerate(evs):
            for j, xj in enumerate(xs):
                try:
                    vals[i, j] = complex(ev(float(xj), tol).value)
                except NumericalFailure as exc:
                    raise NumericalFailure(f"order {fmt(orders[i])}, {exc}") from None
        order_name = "mu" if discrete else "nu"
        params = evs[0].params
        if fmt_ == "json":
            meta = {
                "command": "table", "version": __version__, "family": fam, "tol": tol,
                "params": dict(params), "x": [float(v) for v in xs],
                "order_name": order_name, "columns": ["order", "re", "im"],
            }
            if form:
                meta["params"]["form"] = form
            rows = [{"order": float(o), "re": [float(v) + 0.0 for v in vals[i].real],
                     "im": [float(v) + 0.0 for v in vals[i].imag]} for i, o in enumerate(orders)]
            _emit(_dump_json({"meta": meta, "rows": rows}), out)
            return
        mat = vals.real if part == "re" else vals.imag
        buf = io.StringIO()
        buf.write(_header([
            ("fracfun", __version__), ("command", "table"), ("family", fam),
            ("params", _param_text(params)), ("form", form or "default"),
            ("tol", fmt(tol)), ("part", part),
            ("layout", f"rows are {order_name}, columns are x"),
        ]))
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([order_name] + [fmt(v) for v in xs])
        for o, row in zip(orders, mat):
            w.writerow([fmt(o)] + [fmt(v) for v in row])
        _emit(buf.getvalue(), out)

    _run(body)


if __name__ == "__main__":
    main()
