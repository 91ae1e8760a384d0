"""Command-line interface: evolve, scan, dicke, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
error. CSV output is deterministic (LF line endings, '.' decimal separator,
fixed significant-digit formatting), so identical configs produce identical
bytes.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import verify as verify_mod
from .dicke import collective_moments, make_dicke_state
from .errors import MeanSpinDegenerateError, NumericalError
from .evolution import trajectory
from .hamiltonians import HamiltonianSpec
from .pairwise import concurrence_x_form, reduced_two_qubit
from .squeezing import squeezing_even_odd, squeezing_general

MODELS = ("one-axis", "one-axis-field", "two-axis", "general")

EVOLVE_COLUMNS = (
    "t", "xi2_closed", "xi2_general", "mean_spin_norm", "degenerate_flag",
    "concurrence", "branch", "u_re", "u_im", "y", "v_plus", "v_minus",
    "sz_mean", "sz2", "sp2_re", "sp2_im",
)

SCAN_COLUMNS = (
    "model", "n", "mu", "chi", "gamma", "omega", "min_xi2", "t_min_xi2",
    "mubar_min_xi2", "max_concurrence", "t_max_concurrence", "max_xi2",
    "max_xi2_exceeds_one",
)


@dataclass
class RunConfig:
    model: str = "one-axis"
    n_qubits: int = 6
    mu: float = 1.0
    chi: float = 0.0
    gamma: float = 1.0
    omega: float = 0.0
    f_coeffs: tuple = ()
    t_max: float = 10.0
    dt: float = 0.01
    output_path: str = ""
    precision: int = 17

    def spec(self) -> HamiltonianSpec:
        if self.model == "one-axis":
            return HamiltonianSpec.one_axis(self.mu)
        if self.model == "one-axis-field":
            return HamiltonianSpec.one_axis_field(self.mu, self.omega)
        if self.model == "two-axis":
            return HamiltonianSpec.two_axis(self.gamma)
        if self.model == "general":
            return HamiltonianSpec(
                mu=self.mu, chi=self.chi, gamma_sym=self.gamma, f_coeffs=self.f_coeffs
            )
        raise ValueError(f"unknown model {self.model!r}")


def fmt(value: float, precision: int) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return format(value, f".{precision}g")


def evolve_rows(cfg: RunConfig):
    """One dict per grid point with every CSV column."""
    traj = trajectory(cfg.spec(), cfg.n_qubits, cfg.t_max, cfg.dt)
    rows = []
    for t, state in zip(traj.times, traj.states):
        m = collective_moments(state)
        closed = squeezing_even_odd(m)
        try:
            xi2_general = squeezing_general(m).xi2
            degenerate = 0
        except MeanSpinDegenerateError:
            xi2_general = math.nan
            degenerate = 1
        r = reduced_two_qubit(m)
        conc = concurrence_x_form(r)
        rows.append(
            {
                "t": float(t),
                "xi2_closed": closed.xi2,
                "xi2_general": xi2_general,
                "mean_spin_norm": m.mean_spin_norm,
                "degenerate_flag": degenerate,
                "concurrence": conc.concurrence,
                "branch": conc.branch,
                "u_re": r.u.real,
                "u_im": r.u.imag,
                "y": r.y,
                "v_plus": r.v_plus,
                "v_minus": r.v_minus,
                "sz_mean": m.mean_sz,
                "sz2": m.sz2,
                "sp2_re": m.sp2.real,
                "sp2_im": m.sp2.imag,
            }
        )
    return rows


def write_csv(path, columns, rows, precision: int):
    def render(value):
        if isinstance(value, str):
            return value
        if isinstance(value, int):
            return str(value)
        return fmt(value, precision)

    lines = [",".join(columns)]
    lines.extend(",".join(render(row[c]) for c in columns) for row in rows)
    text = "\n".join(lines) + "\n"
    if path in ("", "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as handle:
            handle.write(text)


def cmd_evolve(cfg: RunConfig) -> int:
    rows = evolve_rows(cfg)
    write_csv(cfg.output_path, EVOLVE_COLUMNS, rows, cfg.precision)
    best = min(rows, key=lambda r: r["xi2_closed"])
    peak = max(rows, key=lambda r: r["concurrence"])
    print(
        f"min xi2 = {best['xi2_closed']:.6g} at t = {best['t']:.6g}; "
        f"max concurrence = {peak['concurrence']:.6g} at t = {peak['t']:.6g}",
        file=sys.stderr,
    )
    return 0


def _scan_point(args):
    model, n, mu, chi, gamma, omega, t_max, dt = args
    cfg = RunConfig(
        model=model, n_qubits=n, mu=mu, chi=chi, gamma=gamma, omega=omega,
        t_max=t_max, dt=dt,
    )
    rows = evolve_rows(cfg)
    best = min(rows, key=lambda r: r["xi2_closed"])
    peak = max(rows, key=lambda r: r["concurrence"])
    max_xi2 = max(r["xi2_closed"] for r in rows)
    return {
        "model": model,
        "n": n,
        "mu": mu,
        "chi": chi,
        "gamma": gamma,
        "omega": omega,
        "min_xi2": best["xi2_closed"],
        "t_min_xi2": best["t"],
        "mubar_min_xi2": 2.0 * mu * best["t"],
        "max_concurrence": peak["concurrence"],
        "t_max_concurrence": peak["t"],
        "max_xi2": max_xi2,
        "max_xi2_exceeds_one": int(max_xi2 > 1.0 + 1e-9),
    }


def cmd_scan(model, n_list, mu_list, chi_list, gamma_list, omega_list,
             t_max, dt, output_path, precision, workers=1) -> int:
    grid = sorted(
        (model, n, mu, chi, gamma, omega, t_max, dt)
        for n in n_list
        for mu in mu_list
        for chi in chi_list
        for gamma in gamma_list
        for omega in omega_list
    )
    if not grid:
        raise ValueError("empty scan grid")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_point, grid))
    else:
        rows = [_scan_point(point) for point in grid]
    write_csv(output_path, SCAN_COLUMNS, rows, precision)
    return 0


def cmd_dicke(n_qubits: int, n_excited: int) -> int:
    state = make_dicke_state(n_qubits, n_excited)
    m = collective_moments(state)
    xi2 = squeezing_even_odd(m).xi2
    r = reduced_two_qubit(m)
    conc = concurrence_x_form(r)
    print(f"Dicke state: N = {n_qubits}, excitations = {n_excited}")
    print(f"xi2          = {xi2:.17g}")
    print(f"concurrence  = {conc.concurrence:.17g}  (branch: {conc.branch})")
    print(f"v_plus       = {r.v_plus:.17g}")
    print(f"v_minus      = {r.v_minus:.17g}")
    print(f"y            = {r.y:.17g}")
    print(f"u            = {r.u.real:.17g}{r.u.imag:+.17g}j")
    print(f"x_plus       = {r.x_plus.real:.17g}{r.x_plus.imag:+.17g}j")
    print(f"x_minus      = {r.x_minus.real:.17g}{r.x_minus.imag:+.17g}j")
    return 0


def cmd_verify(suite: str, seed: int) -> int:
    checks = verify_mod.run_suite(suite, seed)
    print(f"suite: {suite}   rng: {verify_mod.RNG_ALGORITHM}   seed: {seed}")
    width = max(len(c.name) for c in checks)
    failures = 0
    for check in checks:
        status = "pass" if check.passed else "FAIL"
        print(
            f"{status}  {check.name:<{width}}  residual {check.residual:.3e}"
            f"  tolerance {check.tolerance:.1e}"
        )
        failures += not check.passed
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


def _parse_floats(text: str):
    return tuple(float(part) for part in text.split(",") if part.strip())


def load_config_file(path: str) -> dict:
    """Flat `key = value` file; keys match the CLI flag names."""
    values = {}
    with open(path) as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


_CONFIG_PARSERS = {
    "model": str,
    "n": int,
    "mu": float,
    "chi": float,
    "gamma": float,
    "omega": float,
    "f_coeffs": _parse_floats,
    "t_max": float,
    "dt": float,
    "out": str,
    "seed": int,
    "workers": int,
    "precision": int,
}


def _apply_config(args, parser):
    if not getattr(args, "config", None):
        return
    try:
        file_values = load_config_file(args.config)
    except OSError as exc:
        parser.error(str(exc))
    for key, raw in file_values.items():
        if key not in _CONFIG_PARSERS:
            parser.error(f"unknown config key {key!r}")
        if getattr(args, key, None) is None and hasattr(args, key):
            setattr(args, key, _CONFIG_PARSERS[key](raw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinsqueeze",
        description="Collective-spin squeezing and pairwise entanglement toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, listy=False):
        number = _parse_floats if listy else float
        p.add_argument("--model", choices=MODELS, default=None)
        p.add_argument("--mu", type=number, default=None)
        p.add_argument("--chi", type=number, default=None)
        p.add_argument("--gamma", type=number, default=None)
        p.add_argument("--omega", type=number, default=None)
        p.add_argument("--f-coeffs", dest="f_coeffs", type=_parse_floats, default=None)
        p.add_argument("--t-max", dest="t_max", type=float, default=None)
        p.add_argument("--dt", type=float, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--precision", type=int, default=None)
        p.add_argument("--config", default=None)

    evolve = sub.add_parser("evolve", help="trajectory CSV for one configuration")
    add_common(evolve)
    evolve.add_argument("--n", type=int, default=None)

    scan = sub.add_parser("scan", help="grid scan over N and coefficients")
    add_common(scan, listy=True)
    scan.add_argument(
        "--n",
        type=lambda s: tuple(int(float(v)) for v in s.split(",") if v.strip()),
        default=None,
    )
    scan.add_argument("--workers", type=int, default=None)

    dicke = sub.add_parser("dicke", help="squeezing/concurrence of a Dicke state")
    dicke.add_argument("--n", type=int, required=True)
    dicke.add_argument("--excitations", type=int, required=True)

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("suite", choices=verify_mod.SUITES + ("all",))
    ver.add_argument("--seed", type=int, default=0)

    return parser


def _value(args, name, default):
    v = getattr(args, name, None)
    return default if v is None else v


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "evolve":
            _apply_config(args, parser)
            cfg = RunConfig(
                model=_value(args, "model", "one-axis"),
                n_qubits=_value(args, "n", 6),
                mu=_value(args, "mu", 1.0),
                chi=_value(args, "chi", 0.0),
                gamma=_value(args, "gamma", 1.0),
                omega=_value(args, "omega", 0.0),
                f_coeffs=_value(args, "f_coeffs", ()),
                t_max=_value(args, "t_max", 10.0),
                dt=_value(args, "dt", 0.01),
                output_path=_value(args, "out", ""),
                precision=_value(args, "precision", 17),
            )
            return cmd_evolve(cfg)
        if args.command == "scan":
            _apply_config(args, parser)

            def as_tuple(v):
                return v if isinstance(v, tuple) else (v,)

            return cmd_scan(
                model=_value(args, "model", "one-axis"),
                n_list=as_tuple(_value(args, "n", tuple(range(2, 11)))),
                mu_list=as_tuple(_value(args, "mu", (1.0,))),
                chi_list=as_tuple(_value(args, "chi", (0.0,))),
                gamma_list=as_tuple(_value(args, "gamma", (1.0,))),
                omega_list=as_tuple(_value(args, "omega", (0.0,))),
                t_max=_value(args, "t_max", 10.0),
                dt=_value(args, "dt", 0.01),
                output_path=_value(args, "out", ""),
                precision=_value(args, "precision", 17),
                workers=_value(args, "workers", 1),
            )
        if args.command == "dicke":
            return cmd_dicke(args.n, args.excitations)
        if args.command == "verify":
            return cmd_verify(args.suite, args.seed)
        raise ValueError(f"unknown command {args.command!r}")
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
