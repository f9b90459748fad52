"""Command-line front end producing deterministic CSV or JSON streams.

Every subcommand writes its data to stdout (or --output) with floats
rendered at 17 significant digits, so repeated runs with identical flags
are byte-identical.  In CSV mode, report lines such as composite-identity
verdicts appear as leading '#' comment lines; in JSON mode the same
material is embedded in the document.  Exit codes: 0 success, 2 invalid
flags or malformed input, 3 input/output failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import dynamics, entanglement, interferometer, matrixio, realmap, superselection
from . import indefinite_metric as im

LARMOR_NOTE = (
    "first-amplitude phase convention: a(t) = exp(-i*omega*t)/sqrt(2); "
    "treatments using exp(+i*omega*t) flip the sign of a_i and b_i"
)


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return _fmt(value)


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_text(header, rows, notes=()) -> str:
    lines = [f"# {note}" for note in notes]
    lines.append(",".join(header))
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _int_min(minimum: int):
    def convert(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return convert


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default="-", help="output path, or - for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


# --- larmor ---------------------------------------------------------------


def _cmd_larmor(args) -> int:
    times = np.linspace(0.0, args.tmax, args.steps + 1)
    records = dynamics.larmor_experiment(args.omega, times)
    header = ["t", "a_r", "a_i", "b_r", "b_i", "p0", "p1"]
    rows = [[rec.t, *rec.state, *rec.probs] for rec in records]
    if args.format == "csv":
        text = _csv_text(header, rows, notes=[f"note: {LARMOR_NOTE}"])
    else:
        text = _json_text(
            {
                "omega": args.omega,
                "note": LARMOR_NOTE,
                "rows": [dict(zip(header, (float(v) for v in row))) for row in rows],
            }
        )
    _write_output(args.output, text)
    if args.figure:
        from . import plotting

        plotting.save_larmor_figure(records, args.figure)
    return 0


# --- mzi ------------------------------------------------------------------


def _mzi_report() -> tuple[dict[str, float], list[str]]:
    report = interferometer.composite_report()
    notes = [f"{key} = {_fmt(val)}" for key, val in sorted(report.items())]
    notes.append("verdict: normalized composite = -identity")
    notes.append("verdict: unnormalized composite = -2*identity")
    return report, notes


def _cmd_mzi(args) -> int:
    report, notes = _mzi_report()
    if args.grid is not None:
        phis = np.linspace(0.0, 2.0 * np.pi, args.grid)
    else:
        phis = np.array([args.phase])
    rows = []
    for phi in phis:
        p0_real, p1_real = interferometer.mach_zehnder_with_phase(float(phi), "real")
        p0_cplx, p1_cplx = interferometer.mach_zehnder_with_phase(float(phi), "complex")
        if max(abs(p0_real - p0_cplx), abs(p1_real - p1_cplx)) > 1e-12:
            raise ArithmeticError("complex and real interferometer routes disagree")
        rows.append([float(phi), p0_real, p1_real])
    header = ["phi", "p0", "p1"]
    if args.format == "csv":
        text = _csv_text(header, rows, notes=notes)
    else:
        text = _json_text(
            {
                "report": report,
                "verdict_normalized": "-identity",
                "verdict_unnormalized": "-2*identity",
                "rows": [dict(zip(header, (float(v) for v in row))) for row in rows],
            }
        )
    _write_output(args.output, text)
    if args.figure:
        from . import plotting

        plotting.save_mzi_figure(
            [row[0] for row in rows], [row[1] for row in rows], [row[2] for row in rows], args.figure
        )
    return 0


# --- entropy-scan ---------------------------------------------------------


def _cmd_entropy_scan(args) -> int:
    alphas = np.linspace(0.0, 2.0 * np.pi, args.grid)
    betas = np.linspace(0.0, np.pi / 2.0, args.grid)
    header = ["alpha", "beta", "det_rho1", "entropy_nats", "class"]
    rows = []
    grid = np.empty((args.grid, args.grid))
    for i, alpha in enumerate(alphas):
        for j, beta in enumerate(betas):
            psi = np.array([np.cos(beta), np.exp(1.0j * alpha) * np.sin(beta)])
            rep = entanglement.entanglement_entropy(realmap.realify_state(psi))
            grid[i, j] = rep.entropy_nats
            rows.append([float(alpha), float(beta), rep.det_rho1, rep.entropy_nats, rep.kind.value])
    if args.format == "csv":
        text = _csv_text(header, rows)
    else:
        text = _json_text(
            {
                "rows": [
                    {
                        "alpha": row[0],
                        "beta": row[1],
                        "det_rho1": row[2],
                        "entropy_nats": row[3],
                        "class": row[4],
                    }
                    for row in rows
                ]
            }
        )
    _write_output(args.output, text)
    if args.figure:
        from . import plotting

        plotting.save_entropy_figure(alphas, betas, grid, args.figure)
    return 0


# --- audit ----------------------------------------------------------------


def _cmd_audit(args) -> int:
    if args.matrix is not None:
        kind, loaded = matrixio.load_matrix_auto(args.matrix)
        op = realmap.realify_op(loaded) if kind == "complex" else loaded
        rep = superselection.audit(op, args.tol)
        result: dict = {
            "source": args.matrix,
            "input_format": kind,
            "dim": int(op.shape[0]),
            "linear_residual": rep.linear_residual,
            "antilinear_residual": rep.antilinear_residual,
            "verdict": rep.verdict.value,
        }
    else:
        rng = np.random.default_rng(args.seed)
        physical = 0
        worst = 0.0
        for _ in range(args.trials):
            u = realmap.random_unitary(args.dim, rng)
            rep = superselection.audit(realmap.realify_op(u), args.tol)
            if rep.verdict is superselection.Verdict.PHYSICAL:
                physical += 1
            worst = max(worst, rep.linear_residual)
        result = {
            "source": "random-unitary-battery",
            "dim": 2 * args.dim,
            "trials": args.trials,
            "seed": args.seed,
            "physical_count": physical,
            "all_physical": physical == args.trials,
            "max_linear_residual": worst,
        }
    if args.format == "csv":
        text = _csv_text(["field", "value"], [[k, _cell(v)] for k, v in result.items()])
    else:
        text = _json_text(result)
    _write_output(args.output, text)
    return 0


# --- ghosts ---------------------------------------------------------------


def _ghost_table(cutoff: int, lam: float) -> list[tuple[str, float]]:
    toy = im.build_fock_toy(cutoff)
    space = toy.space
    vac = im.vacuum(toy)
    emitter = toy.a3_dag - toy.a0_dag
    pair = emitter @ vac
    emitted = im.ghost_emit(toy, vac, lam)
    double = im.ghost_emit(toy, emitted, 0.5 * lam)
    witness = vac + 0.5 * pair + 0.25 * (emitter @ pair)
    proj = im.guard_projector(toy)
    eye = np.eye(toy.dim)
    comm_wrong = np.linalg.norm((toy.a0 @ toy.a0_dag - toy.a0_dag @ toy.a0 + eye) @ proj, 2)
    comm_standard = np.linalg.norm((toy.a3 @ toy.a3_dag - toy.a3_dag @ toy.a3 - eye) @ proj, 2)
    constraint = toy.a3 - toy.a0
    comm_emit = np.linalg.norm((constraint @ emitter - emitter @ constraint) @ proj, 2)
    pair_op = im.pair_constraint_operator()
    _, svals, vh = np.linalg.svd(pair_op)
    kernel = vh[svals <= 1e-12].T if svals.size else np.empty((4, 0))
    pair_metric = im.two_qubit_pair_space().metric
    restricted = kernel.T @ pair_metric @ kernel
    eigs = np.linalg.eigvalsh(restricted)
    return [
        ("eta_norm_vacuum", im.eta_inner(vac, vac, space)),
        ("eta_norm_one_wrong_sign_quantum", im.eta_inner(im.fock_basis_state(toy, 0, 1), im.fock_basis_state(toy, 0, 1), space)),
        ("eta_norm_two_wrong_sign_quanta", im.eta_inner(im.fock_basis_state(toy, 0, 2), im.fock_basis_state(toy, 0, 2), space)),
        ("wrong_sign_commutator_residual", float(comm_wrong)),
        ("standard_commutator_residual", float(comm_standard)),
        ("emission_constraint_commutator_residual", float(comm_emit)),
        ("vacuum_constraint_residual", im.gb_constraint_residual(toy, vac)),
        ("ghost_pair_eta_norm", im.eta_inner(pair, pair, space)),
        ("ghost_pair_overlap_with_vacuum", im.eta_inner(pair, vac, space)),
        ("emitted_constraint_residual", im.gb_constraint_residual(toy, emitted)),
        ("emitted_eta_norm_change", abs(im.eta_inner(emitted, emitted, space) - im.eta_inner(vac, vac, space))),
        ("overlap_shift_single_emission", im.overlap_invariance_check(toy, vac, witness, lam)),
        ("overlap_shift_double_emission", abs(im.eta_inner(double, witness, space) - im.eta_inner(vac, witness, space))),
        ("pair_kernel_dimension", float(kernel.shape[1])),
        ("pair_kernel_metric_min_eigenvalue", float(eigs.min())),
        ("pair_kernel_metric_max_eigenvalue", float(eigs.max())),
    ]


def _cmd_ghosts(args) -> int:
    table = _ghost_table(args.cutoff, args.lam)
    if args.format == "text":
        lines = [f"ghost ledger (cutoff={args.cutoff}, lambda={_fmt(args.lam)})"]
        lines.extend(f"{name:<44}{_fmt(value)}" for name, value in table)
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(
            {"cutoff": args.cutoff, "lambda": args.lam, "table": {k: v for k, v in table}}
        )
    _write_output(args.output, text)
    return 0


# --- local-phase-demo -----------------------------------------------------


def _random_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def _phase_distances(psi, phi) -> tuple[float, float]:
    local = np.linalg.norm(
        entanglement.encode_local(1j * psi, phi) - entanglement.encode_local(psi, 1j * phi)
    )
    global_ = np.linalg.norm(
        entanglement.encode_global(1j * psi, phi) - entanglement.encode_global(psi, 1j * phi)
    )
    return float(local), float(global_)


def _cmd_local_phase_demo(args) -> int:
    rng = np.random.default_rng(args.seed)
    basis = (np.array([1.0 + 0.0j, 0.0j]), np.array([1.0 + 0.0j, 0.0j]))
    rows = [["basis", *_phase_distances(*basis)]]
    for k in range(args.trials):
        rows.append([f"random-{k}", *_phase_distances(_random_qubit(rng), _random_qubit(rng))])
    header = ["case", "local_distance", "global_distance"]
    if args.format == "csv":
        text = _csv_text(header, rows)
    else:
        text = _json_text(
            {
                "rows": [
                    {"case": row[0], "local_distance": row[1], "global_distance": row[2]}
                    for row in rows
                ]
            }
        )
    _write_output(args.output, text)
    return 0


# --- emit-fixtures --------------------------------------------------------


def fixture_matrices() -> dict[str, np.ndarray]:
    """Canonical real matrices for round-trip and audit exercises."""
    eye = np.eye(2, dtype=complex)
    mats = {
        "j2": realmap.j_operator(2),
        "generator_identity": dynamics.real_generator(eye),
        "generator_sigma_x": dynamics.real_generator(realmap.PAULI_X),
        "generator_sigma_y": dynamics.real_generator(realmap.PAULI_Y),
        "generator_sigma_z": dynamics.real_generator(realmap.PAULI_Z),
        "beamsplitter_real": interferometer.beamsplitter().real_form,
        "beamsplitter_real_unnormalized": realmap.realify_op(np.array([[1.0, 1.0j], [1.0j, 1.0]])),
        "mirror_real": interferometer.mirror().real_form,
        "universal_not": superselection.universal_not(),
    }
    for idx, basis_op in enumerate(superselection.commutant_basis()):
        mats[f"commutant_basis_{idx}"] = basis_op
    return mats


def emit_matrix_fixtures(directory) -> list[Path]:
    """Write every fixture matrix as <name>.json under directory; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, mat in fixture_matrices().items():
        path = directory / f"{name}.json"
        matrixio.save_real_matrix(path, mat)
        paths.append(path)
    return paths


def _cmd_emit_fixtures(args) -> int:
    for path in emit_matrix_fixtures(args.dir):
        sys.stdout.write(path.name + "\n")
    return 0


# --- parser and entry point -----------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realqm",
        description="real-vector-space quantum mechanics demonstrations and operator audit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("larmor", help="precession of the equal superposition, doubled representation")
    p.add_argument("--omega", type=_positive_float, default=1.0, help="angular frequency, positive")
    p.add_argument("--tmax", type=_positive_float, default=2.0 * np.pi, help="end of the time grid")
    p.add_argument("--steps", type=_int_min(1), default=100, help="intervals on [0, tmax]; emits steps+1 rows")
    _add_output_args(p)
    p.add_argument("--figure", help="also render a figure to this path")
    p.set_defaults(handler=_cmd_larmor)

    p = sub.add_parser("mzi", help="balanced interferometer: composite verdicts and phase sweep")
    p.add_argument("--phase", type=float, default=0.0, help="single phase-plate setting")
    p.add_argument("--grid", type=_int_min(2), default=None, help="sweep this many settings over [0, 2pi]")
    _add_output_args(p)
    p.add_argument("--figure", help="also render a figure to this path")
    p.set_defaults(handler=_cmd_mzi)

    p = sub.add_parser("entropy-scan", help="entanglement entropy of the doubled qubit over a state family")
    p.add_argument("--grid", type=_int_min(2), default=25, help="grid points per parameter")
    _add_output_args(p)
    p.add_argument("--figure", help="also render a figure to this path")
    p.set_defaults(handler=_cmd_entropy_scan)

    p = sub.add_parser("audit", help="classify an operator against the complex-structure rule")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help="JSON matrix file (real nested arrays or complex dim/entries)")
    group.add_argument("--random", action="store_true", help="run a battery of random realified unitaries")
    p.add_argument("--tol", type=_positive_float, default=1e-9, help="relative classification tolerance")
    p.add_argument("--trials", type=_int_min(1), default=200, help="battery size for --random")
    p.add_argument("--seed", type=int, default=42, help="battery seed for --random")
    p.add_argument("--dim", type=_int_min(1), default=2, help="complex dimension for --random")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("ghosts", help="indefinite-metric ledger: wrong-sign mode, ghost emission, pair kernel")
    p.add_argument("--cutoff", type=_int_min(4), default=8, help="per-mode truncation, at least 4")
    p.add_argument("--lambda", dest="lam", type=float, default=0.7, help="emission strength")
    p.add_argument("--output", default="-", help="output path, or - for stdout")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_ghosts)

    p = sub.add_parser("local-phase-demo", help="per-factor doubling distinguishes local phases; global doubling does not")
    p.add_argument("--trials", type=_int_min(1), default=5, help="random state pairs")
    p.add_argument("--seed", type=int, default=42)
    _add_output_args(p)
    p.set_defaults(handler=_cmd_local_phase_demo)

    p = sub.add_parser("emit-fixtures", help="write the canonical matrix fixture files")
    p.add_argument("--dir", required=True, help="target directory (created if missing)")
    p.set_defaults(handler=_cmd_emit_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno} (char {exc.pos})",
            file=sys.stderr,
        )
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
