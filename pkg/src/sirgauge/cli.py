"""Command-line frontend.

Every subcommand reads a scenario (bundled name, JSON file, or explicit
--s0/--i0 overrides), runs one operation, and writes CSV or JSON to
--out (stdout by default).  Outputs are deterministic: identical flags
give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from importlib import resources

import click
import numpy as np

from . import (__version__, asymptotics, convergence, nondim, oracle, series,
               singularity)
from .errors import (AmbiguousRootError, GaugeDegenerateError, NoRealRootError,
                     QuadratureError)

BUNDLED = ("bubonic", "ebola", "covid_japan")

EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2


def _resolve_state(scenario, s0, i0):
    if s0 is not None or i0 is not None:
        if s0 is None or i0 is None:
            raise click.UsageError("--s0 and --i0 must be given together")
        return nondim.from_collapsed(s0, i0)
    if scenario is None:
        raise click.UsageError("provide --scenario or --s0/--i0")
    if scenario in BUNDLED:
        path = resources.files("sirgauge.scenarios") / f"{scenario}.json"
        with resources.as_file(path) as p:
            return nondim.load_scenario(str(p))
    return nondim.load_scenario(scenario)


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


scenario_options = [
    click.option("--scenario", default=None,
                 help="bundled name (bubonic, ebola, covid_japan) or JSON path"),
    click.option("--s0", type=float, default=None,
                 help="nondimensional initial susceptible (overrides scenario)"),
    click.option("--i0", type=float, default=None,
                 help="nondimensional initial infected (overrides scenario)"),
]


def with_scenario(f):
    for opt in reversed(scenario_options):
        f = opt(f)
    return f


@click.group()
@click.version_option(__version__)
def main():
    """Power-series SIR solver in the shifted exponential gauge."""


@main.command()
@with_scenario
@click.option("--n", "n_terms", type=int, default=100, show_default=True,
              help="series truncation order")
@click.option("--tmax", type=float, default=20.0, show_default=True)
@click.option("--dt", type=float, default=1e-4, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def solve(scenario, s0, i0, n_terms, tmax, dt, out):
    """Trajectory CSV: T, y, V_series, V_rk4, S_tilde, I_tilde, R_tilde."""
    state = _resolve_state(scenario, s0, i0)
    traj = oracle.integrate_v(state, t_max=tmax, dt=dt)
    if state.gauge_degenerate:
        y = np.zeros_like(traj.t)
        v_series = np.full_like(traj.t, state.v0)  # constant exact solution
    else:
        y = series.gauge_forward(traj.t, state.lam)
        v_series = series.eval_series(series.shifted_series(state, n_terms).a, y)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["T", "y", "V_series", "V_rk4", "S_tilde", "I_tilde", "R_tilde"])
    for k in range(len(traj)):
        w.writerow([f"{traj.t[k]:.10g}", f"{y[k]:.17g}", f"{v_series[k]:.17g}",
                    f"{traj.v[k]:.17g}", f"{traj.s[k]:.17g}",
                    f"{traj.i[k]:.17g}", f"{traj.r[k]:.17g}"])
    _emit(buf.getvalue(), out)


@main.command()
@with_scenario
@click.option("--n", "n_terms", type=int, default=100, show_default=True)
@click.option("--domain", type=click.Choice(["y", "T"]), default="y",
              show_default=True, help="shifted-gauge or direct time series")
@click.option("--with-b", is_flag=True, help="include the xi coefficients B_n")
@click.option("--out", type=click.Path(), default=None)
def coeffs(scenario, s0, i0, n_terms, domain, with_b, out):
    """Coefficient CSV: n, A_n, C_n (and B_n with --with-b)."""
    state = _resolve_state(scenario, s0, i0)
    if domain == "y":
        triple = series.shifted_series(state, n_terms)
    else:
        triple = series.time_series(state, n_terms)
    if with_b:
        triple = triple.with_b()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["n", "A_n", "C_n"] + (["B_n"] if with_b else [])
    w.writerow(header)
    for k in range(len(triple.a)):
        row = [k, f"{triple.a.coeffs[k]:.17g}", f"{triple.c.coeffs[k]:.17g}"]
        if with_b:
            row.append(f"{triple.b.coeffs[k]:.17g}")
        w.writerow(row)
    _emit(buf.getvalue(), out)


@main.command()
@with_scenario
@click.option("--n", "n_terms", type=int, default=1000, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def radius(scenario, s0, i0, n_terms, out):
    """Root/ratio-test radius JSON for the shifted-gauge series."""
    state = _resolve_state(scenario, s0, i0)
    triple = series.shifted_series(state, n_terms + 2)
    est = convergence.root_test(triple.a, n_terms)
    classification = convergence.classify_hk(state, n_terms)
    _emit(_json_dumps({
        "N": est.n_used,
        "rho_root": est.rho_root,
        "rho_ratio": est.rho_ratio,
        "drift": est.drift,
        "classification": classification,
    }), out)


@main.command()
@click.option("--s0-min", type=float, default=0.05, show_default=True)
@click.option("--s0-max", type=float, default=4.0, show_default=True)
@click.option("--i0-min", type=float, default=0.05, show_default=True)
@click.option("--i0-max", type=float, default=2.0, show_default=True)
@click.option("--s0-cells", type=int, default=80, show_default=True)
@click.option("--i0-cells", type=int, default=60, show_default=True)
@click.option("--n", "n_terms", type=int, default=1000, show_default=True)
@click.option("--metric", type=click.Choice(["radius", "max_error"]),
              default="radius", show_default=True)
@click.option("--out", type=click.Path(), required=True,
              help="CSV path; grid metadata goes to <out>.meta.json")
def survey(s0_min, s0_max, i0_min, i0_max, s0_cells, i0_cells, n_terms,
           metric, out):
    """Parameter-space survey CSV (long format) plus a JSON sidecar."""
    grid = convergence.survey((s0_min, s0_max), (i0_min, i0_max),
                              (s0_cells, i0_cells), n_terms, metric=metric)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["s0_tilde", "i0_tilde", "value"])
    for i, i0 in enumerate(grid.i0_axis):
        for j, s0 in enumerate(grid.s0_axis):
            v = grid.values[i, j]
            w.writerow([f"{s0:.10g}", f"{i0:.10g}",
                        "nan" if math.isnan(v) else f"{v:.17g}"])
    _emit(buf.getvalue(), out)
    meta = {
        "metric": grid.metric_tag,
        "N": grid.n_terms,
        "s0_axis": [float(v) for v in grid.s0_axis],
        "i0_axis": [float(v) for v in grid.i0_axis],
        "generated_by": f"sirgauge {__version__}",
    }
    _emit(_json_dumps(meta), out + ".meta.json")


@main.command()
@with_scenario
@click.option("--n", "n_list", type=int, multiple=True, required=True,
              help="truncation order; repeat for a --table sweep")
@click.option("--domain", type=click.Choice(["y", "T"]), default="y",
              show_default=True)
@click.option("--table", is_flag=True,
              help="emit CSV rows (N, re, im, rho) instead of JSON")
@click.option("--out", type=click.Path(), default=None)
def singularities(scenario, s0, i0, n_list, domain, table, out):
    """Nearest singularities of the truncated series via reciprocal roots."""
    state = _resolve_state(scenario, s0, i0)
    n_max = max(n_list)
    if domain == "y":
        v = series.shifted_series(state, n_max).a
    else:
        v = series.time_series(state, n_max).a
    reports = [singularity.nearest_singularities(v, n) for n in n_list]
    if table:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "re", "im", "rho"])
        for rep in reports:
            w.writerow([rep.n_used, f"{rep.nearest_pair[0].real:.17g}",
                        f"{abs(rep.nearest_pair[0].imag):.17g}",
                        f"{rep.radius:.17g}"])
        _emit(buf.getvalue(), out)
        return
    if len(reports) != 1:
        raise click.UsageError("JSON output takes exactly one --n; use --table")
    rep = reports[0]
    _emit(_json_dumps({
        "domain": rep.domain_tag,
        "N": rep.n_used,
        "nearest": [{"re": z.real, "im": z.imag} for z in rep.nearest_pair],
        "radius": rep.radius,
        "ambiguous": rep.ambiguous,
        "all_roots": [{"re": z.real, "im": z.imag} for z in rep.roots],
    }), out)


@main.command("error-scan")
@with_scenario
@click.option("--n", "n_terms", type=int, default=1000, show_default=True)
@click.option("--tmax", type=float, default=20.0, show_default=True)
@click.option("--dt", type=float, default=1e-4, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def error_scan_cmd(scenario, s0, i0, n_terms, tmax, dt, out):
    """Max |V_RK4 - V_series| over the scan window, as JSON."""
    state = _resolve_state(scenario, s0, i0)
    triple = series.shifted_series(state, n_terms)
    scan = oracle.error_scan(state, triple.a, n_terms, t_max=tmax, dt=dt)
    _emit(_json_dumps({
        "N": scan.n_terms,
        "max_abs_error": scan.max_abs_error,
        "argmax_T": scan.argmax_t,
    }), out)


@main.command("asymptotics")
@click.option("--family", type=click.Choice(["h", "j", "p"]), required=True,
              help="h: small-i0 components; j: s0=1 components; p: small-s0")
@click.option("--s0", type=float, default=None,
              help="base s0_tilde (h family)")
@click.option("--i0", type=float, default=None,
              help="i0_tilde (p family)")
@click.option("--points", type=int, default=101, show_default=True)
@click.option("--ymax", type=float, default=0.99, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def asymptotics_cmd(family, s0, i0, points, ymax, out):
    """Asymptotic component CSV over a y grid."""
    ys = np.linspace(0.0, ymax, points)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if family == "h":
        if s0 is None:
            raise click.UsageError("--s0 is required for the h family")
        exp = asymptotics.small_i0_expansion(s0)
        w.writerow(["y", "H1", "H2"])
        for y in ys:
            w.writerow([f"{y:.10g}", f"{asymptotics.h1(y, exp):.17g}",
                        f"{asymptotics.h2(y, exp):.17g}"])
    elif family == "j":
        w.writerow(["y", "J11", "J23", "J34", "J35"])
        for y in ys:
            vals = asymptotics.j_components(y)
            w.writerow([f"{y:.10g}"] + [f"{v:.17g}" for v in vals])
    else:
        if i0 is None:
            raise click.UsageError("--i0 is required for the p family")
        w.writerow(["y", "P0", "P1"])
        for y in ys:
            p0, p1 = asymptotics.p_components(y, i0)
            w.writerow([f"{y:.10g}", f"{p0:.17g}", f"{p1:.17g}"])
    _emit(buf.getvalue(), out)


@main.command()
@click.option("--m", type=float, required=True, help="strength of the y=1 pole")
@click.option("--n-amp", type=float, required=True,
              help="strength of the conjugate pair")
@click.option("--rho", type=float, required=True, help="conjugate-pair modulus")
@click.option("--phi", type=float, required=True,
              help="conjugate-pair phase in radians")
@click.option("--n-max", type=int, default=600, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def toy(m, n_amp, rho, phi, n_max, out):
    """Toy-model coefficient CSV: n, A_n, log10_abs."""
    ps = asymptotics.toy_coefficients(
        asymptotics.ToyModelParams(m=m, n_amp=n_amp, rho=rho, phi=phi), n_max)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "A_n", "log10_abs"])
    for k, a in enumerate(ps.coeffs):
        log_abs = math.log10(abs(a)) if a != 0 else -math.inf
        w.writerow([k, f"{a:.17g}", f"{log_abs:.17g}"])
    _emit(buf.getvalue(), out)


def run(argv=None) -> int:
    """Entry point returning an exit code instead of raising SystemExit."""
    try:
        main.main(args=argv, standalone_mode=False)
        return 0
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, OSError, GaugeDegenerateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NoRealRootError, AmbiguousRootError, QuadratureError,
            OverflowError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(run())
