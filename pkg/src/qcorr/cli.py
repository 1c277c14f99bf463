"""Command-line front end.

Every subcommand is a thin wrapper over a library call: the CLI parses,
dispatches, and serializes, adding no arithmetic of its own. Numeric
output is printed with 17 significant digits so files round-trip 64-bit
floats exactly. Output files are written only after the computation has
fully succeeded.

Exit codes: 0 on success, 2 on usage errors (unknown verbs or flags,
malformed values), 1 on data errors (unreadable files, violated state
invariants).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import gaussian as gaussian_mod
from . import measurement, probability, quench, states
from .discord import discord as discord_of_state
from .errors import ConsistencyError, ValidationError

DEFAULT_SEED = 0
SEED_VARIABLE = "QCORR_SEED"


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _dumps(obj) -> str:
    """JSON with every float rendered at 17 significant digits."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dumps(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        if math.isinf(obj):
            return '"inf"'
        return _fmt(obj)
    return json.dumps(obj)


def _write_output(path, text: str):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii") as handle:
        handle.write(text)


def run_seed() -> int:
    raw = os.environ.get(SEED_VARIABLE)
    if raw is None:
        return DEFAULT_SEED
    try:
        seed = int(raw)
    except ValueError:
        raise ValidationError(f"{SEED_VARIABLE} must be an unsigned integer; got {raw!r}")
    if seed < 0:
        raise ValidationError(f"{SEED_VARIABLE} must be an unsigned integer; got {raw!r}")
    return seed


def _parse_distribution(text: str) -> probability.Distribution:
    try:
        values = [float(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"could not parse --dist value {text!r}: {exc}")
    return probability.Distribution(values)


def _parse_joint(text: str) -> probability.JointDistribution:
    try:
        rows = [[float(tok) for tok in row.split(",")] for row in text.split(";")]
    except ValueError as exc:
        raise ValidationError(f"could not parse --joint value {text!r}: {exc}")
    return probability.JointDistribution(rows)


def load_state(path: str):
    """Load a density matrix or covariance matrix from a JSON file.

    Objects with "dims" and "matrix" keys are density matrices; bare
    nested arrays are covariance matrices. Loading fails with the first
    violated invariant named in the error.
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path} is not valid JSON: {exc}")
    if isinstance(payload, dict):
        return states.density_matrix_from_dict(payload)
    if isinstance(payload, list):
        return gaussian_mod.CovarianceMatrix(np.asarray(payload, dtype=float))
    raise ValidationError(f"{path}: expected a JSON object or array, got {type(payload).__name__}")


def everett_demo(alpha: complex, beta: complex, eps_values):
    """Rows (eps, measurement mutual information, quantum mutual
    information of the global state) over a grid of pointer overlaps.

    Puts the observable-level correlations next to the state-level ones:
    the first is capped at ln 2 while the second reaches 2 ln 2.
    """
    observable = measurement.computational_basis_observable(2)
    rows = []
    for eps in eps_values:
        psi = measurement.everett_state(alpha, beta, float(eps))
        rho = states.density_from_pure(psi)
        meas_info = measurement.measurement_mutual_information(rho, observable, observable)
        rows.append((float(eps), meas_info, states.quantum_mutual_information(rho)))
    return rows


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ValidationError(f"could not parse complex amplitude {text!r}: {exc}")


# -- verb handlers -------------------------------------------------------

def _cmd_entropy(args) -> str:
    value = probability.shannon_entropy(_parse_distribution(args.dist))
    if args.bits:
        value /= math.log(2.0)
    return _fmt(value) + "\n"


def _cmd_mutual_info(args) -> str:
    value = probability.mutual_information(_parse_joint(args.joint))
    if args.bits:
        value /= math.log(2.0)
    return _fmt(value) + "\n"


def _cmd_qstate(args) -> str:
    rho = load_state(args.state)
    if not isinstance(rho, states.DensityMatrix):
        raise ValidationError(f"{args.state} holds a covariance matrix; use the gaussian verb")
    report = {
        "dims": [rho.dims[0], rho.dims[1]],
        "entropy": states.von_neumann_entropy(rho),
    }
    if rho.is_bipartite:
        lower, middle, upper = states.araki_lieb_check(rho)
        report.update(
            {
                "entropy_a": states.von_neumann_entropy(states.partial_trace(rho, "A")),
                "entropy_b": states.von_neumann_entropy(states.partial_trace(rho, "B")),
                "mutual_information": states.quantum_mutual_information(rho),
                "araki_lieb": [lower, middle, upper],
            }
        )
    return _dumps(report) + "\n"


def _cmd_discord(args) -> str:
    rho = load_state(args.state)
    if not isinstance(rho, states.DensityMatrix):
        raise ValidationError(f"{args.state} holds a covariance matrix; use the gaussian verb")
    result = discord_of_state(rho)
    return (
        _dumps(
            {
                "mutual_info": result.mutual_info,
                "classical_corr": result.classical_corr,
                "discord": result.discord,
                "theta": result.optimal_basis.theta,
                "phi": result.optimal_basis.phi,
                "evaluations": result.trace.evaluations,
                "converged": result.trace.converged,
            }
        )
        + "\n"
    )


def _cmd_gaussian(args) -> str:
    sigma = load_state(args.cov)
    if not isinstance(sigma, gaussian_mod.CovarianceMatrix):
        raise ValidationError(f"{args.cov} holds a density matrix; use the qstate verb")
    nu_minus, nu_plus = gaussian_mod.symplectic_eigenvalues(sigma)
    return (
        _dumps(
            {
                "nu_minus": nu_minus,
                "nu_plus": nu_plus,
                "entropy": gaussian_mod.gaussian_entropy(sigma),
                "discord": gaussian_mod.gaussian_discord(sigma, args.measured_mode),
            }
        )
        + "\n"
    )


def _cmd_everett(args) -> tuple:
    rows = everett_demo(_parse_complex(args.alpha), _parse_complex(args.beta),
                        np.linspace(0.0, 1.0, args.points))
    lines = ["epsilon,measurement_mutual_information,quantum_mutual_information"]
    for eps, meas_info, q_info in rows:
        lines.append(f"{_fmt(eps)},{_fmt(meas_info)},{_fmt(q_info)}")
    return args.out, "\n".join(lines) + "\n"


def _quench_params(args) -> quench.QuenchParams:
    return quench.QuenchParams(
        mass=args.mass,
        omega=args.omega,
        lambda0=args.lambda0,
        beta=getattr(args, "beta", 1.0),
        hbar=args.hbar,
        kb=args.kb,
    )


def _cmd_quench_sweep(args) -> tuple:
    reports = quench.sweep_temperature(
        _quench_params(args), args.t_min, args.t_max, args.points, args.time
    )
    return args.out, quench.reports_to_csv(reports)


def _cmd_quench_point(args) -> str:
    report = quench.report_at(_quench_params(args), args.time)
    return _dumps({field: getattr(report, field) for field in quench.CSV_FIELDS}) + "\n"


# -- parser --------------------------------------------------------------

def _add_quench_physics_flags(parser, with_beta: bool):
    parser.add_argument("--lambda0", type=float, default=1.0, help="quench amplitude")
    parser.add_argument("--omega", type=float, default=1.0, help="oscillator frequency")
    parser.add_argument("--mass", type=float, default=1.0, help="oscillator mass")
    parser.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant")
    parser.add_argument("--kb", type=float, default=1.0, help="Boltzmann constant")
    parser.add_argument("--time", type=float, default=1.0, help="evolution time for the discord")
    if with_beta:
        parser.add_argument("--beta", type=float, required=True, help="inverse temperature")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcorr",
        description="Classical and quantum correlation measures and quench thermodynamics",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("entropy", help="Shannon entropy of a distribution")
    p.add_argument("--dist", required=True, help="comma-separated probabilities")
    p.add_argument("--bits", action="store_true", help="report in bits instead of nats")
    p.set_defaults(handler=_cmd_entropy)

    p = verbs.add_parser("mutual-info", help="Shannon mutual information of a joint table")
    p.add_argument("--joint", required=True, help="semicolon-separated rows of comma-separated probabilities")
    p.add_argument("--bits", action="store_true", help="report in bits instead of nats")
    p.set_defaults(handler=_cmd_mutual_info)

    p = verbs.add_parser("qstate", help="entropic report on a density-matrix file")
    p.add_argument("--state", required=True, help="path to a state JSON file")
    p.set_defaults(handler=_cmd_qstate)

    p = verbs.add_parser("discord", help="two-qubit discord of a density-matrix file")
    p.add_argument("--state", required=True, help="path to a state JSON file")
    p.set_defaults(handler=_cmd_discord)

    p = verbs.add_parser("gaussian", help="symplectic report and discord of a covariance file")
    p.add_argument("--cov", required=True, help="path to a covariance JSON file")
    p.add_argument("--measured-mode", type=int, default=1, choices=(1, 2))
    p.set_defaults(handler=_cmd_gaussian)

    p = verbs.add_parser("everett", help="pointer-overlap sweep of measurement correlations")
    p.add_argument("--alpha", required=True, help="amplitude of |0>, e.g. 0.7071 or 0.5+0.5j")
    p.add_argument("--beta", required=True, help="amplitude of |1>")
    p.add_argument("--points", type=int, default=11, help="overlap grid size")
    p.add_argument("--out", help="CSV output path (stdout when omitted)")
    p.set_defaults(handler=_cmd_everett, writes_file=True)

    p = verbs.add_parser("quench", help="sudden-quench thermodynamics")
    quench_verbs = p.add_subparsers(dest="quench_verb", required=True)

    sweep = quench_verbs.add_parser("sweep", help="temperature sweep as CSV")
    _add_quench_physics_flags(sweep, with_beta=False)
    sweep.add_argument("--t-min", type=float, default=0.1, help="lowest temperature")
    sweep.add_argument("--t-max", type=float, default=5.0, help="highest temperature")
    sweep.add_argument("--points", type=int, default=50, help="grid size")
    sweep.add_argument("--out", help="CSV output path (stdout when omitted)")
    sweep.set_defaults(handler=_cmd_quench_sweep, writes_file=True)

    point = quench_verbs.add_parser("point", help="single-temperature report as JSON")
    _add_quench_physics_flags(point, with_beta=True)
    point.set_defaults(handler=_cmd_quench_point)

    return parser


def parse_and_dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        run_seed()  # validated even though current verbs are deterministic
        result = args.handler(args)
        if getattr(args, "writes_file", False):
            path, text = result
            _write_output(path, text)
        else:
            sys.stdout.write(result)
    except (ValidationError, ConsistencyError, OSError) as exc:
        print(f"qcorr: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    return parse_and_dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
