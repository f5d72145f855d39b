"""Command-line front-end: construction, verification, encoding, crossing, disk data.

Exit status: 0 when all checks pass, 1 on verification failure, 2 on usage or
input errors.  Complex arguments use the shell-safe ``re,im`` syntax; the
``SUN_GATES_TOLERANCE`` environment variable supplies the tolerance when
``--tolerance`` is not given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .amplitude_model import (
    AmplitudeCoefficients,
    PartialWaveSector,
    amplitude_operator,
    check_partial_wave,
    cross_coefficients,
    disk_samples,
)
from .invariant_channels import (
    Channel,
    ChannelSpec,
    build_gates,
    build_projectors,
    crossing_map,
    generator_form_projectors,
    swap_matrix,
    u_exponential_form,
)
from .lcu_encoder import (
    apply_with_postselection,
    build_w,
    circuit_to_json,
    export_circuit,
    plan_encoding,
    verify_block,
)
from .qudit_ops import decompose, reconstruct
from .sun_algebra import (
    DEFAULT_TOLERANCE,
    build_generators,
    hermiticity_deviation,
    orthonormality_deviation,
    tracelessness_deviation,
    verify_completeness,
)

ENV_TOLERANCE = "SUN_GATES_TOLERANCE"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    """Resolved common options of a single command invocation."""

    n: int
    channel: Channel | None
    tolerance: float
    seed: int
    output: str | None
    fmt: str | None


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    passed: bool
    detail: str = ""


def _cplx(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def parse_complex(text: str) -> complex:
    """Parse the ``re,im`` complex-argument syntax."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"complex values use the re,im syntax, got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def _max_abs(m: np.ndarray) -> float:
    return float(np.abs(m).max())


def identity_checks(n: int, kinds: list[Channel], tolerance: float, seed: int) -> list[CheckResult]:
    """Run the full identity suite at dimension ``n`` for the given channels."""
    rng = np.random.default_rng(seed)
    gens = build_generators(n)
    d = n * n

    def check(name, deviation, detail=""):
        deviation = float(deviation)
        return CheckResult(name=name, max_deviation=deviation, passed=deviation <= tolerance, detail=detail)

    results = [
        check("generator_hermiticity", hermiticity_deviation(gens)),
        check("generator_tracelessness", tracelessness_deviation(gens)),
        check("generator_orthonormality", orthonormality_deviation(gens)),
        check("completeness_identity", verify_completeness(gens, tolerance).max_deviation),
    ]

    eye = np.eye(d, dtype=complex)
    for kind in kinds:
        spec = ChannelSpec(kind, n)
        tag = kind.value
        projs = build_projectors(spec, gens)
        gates = build_gates(spec, gens)
        p_plus, p_minus = projs.p_plus, projs.p_minus
        g_plus, g_minus = generator_form_projectors(spec, gens)
        if kind is Channel.S:
            trace_plus, trace_minus = n * (n + 1) / 2.0, n * (n - 1) / 2.0
        else:
            trace_plus, trace_minus = 1.0, float(d - 1)
        z = gates.z_gate
        results += [
            check(f"projector_idempotence[{tag}]",
                  max(_max_abs(p_plus @ p_plus - p_plus), _max_abs(p_minus @ p_minus - p_minus))),
            check(f"projector_orthogonality[{tag}]", _max_abs(p_plus @ p_minus)),
            check(f"projector_completeness[{tag}]", _max_abs(p_plus + p_minus - eye)),
            check(f"projector_traces[{tag}]",
                  max(abs(np.trace(p_plus).real - trace_plus), abs(np.trace(p_minus).real - trace_minus))),
            check(f"projector_generator_form[{tag}]",
                  max(_max_abs(p_plus - g_plus), _max_abs(p_minus - g_minus))),
            check(f"gate_unitarity[{tag}]", _max_abs(z.conj().T @ z - eye)),
            check(f"gate_involution[{tag}]", _max_abs(z @ z - gates.s_identity)),
            check(f"gate_hermiticity[{tag}]", _max_abs(z - z.conj().T)),
        ]
        if kind is Channel.S:
            results.append(check("swap_action", _max_abs(z - swap_matrix(n))))
        else:
            evals = np.linalg.eigvalsh(z)
            n_plus = int(np.sum(evals > 0))
            n_minus = int(np.sum(evals < 0))
            spectrum_dev = _max_abs(np.abs(evals) - 1.0)
            counts_ok = n_plus == 1 and n_minus == d - 1
            results.append(CheckResult(
                name="u_spectrum",
                max_deviation=spectrum_dev,
                passed=bool(counts_ok and spectrum_dev <= tolerance),
                detail=f"multiplicities +1 x{n_plus}, -1 x{n_minus}",
            ))
            u_exp = u_exponential_form(gens)
            overlap = abs(np.einsum("ij,ij", z.conj(), u_exp)) / d
            results.append(check("u_exponential_form", abs(1.0 - overlap)))

    # crossing relations tie the two channels together, so they always run
    t_gates = build_gates(ChannelSpec(Channel.T, n), gens)
    s_gates = build_gates(ChannelSpec(Channel.S, n), gens)
    u = t_gates.z_gate
    results += [
        check("crossing_row_identity",
              _max_abs(crossing_map(s_gates.s_identity) - (n / 2.0) * (eye + u))),
        check("crossing_row_swap", _max_abs(crossing_map(s_gates.z_gate) - eye)),
    ]

    a, b = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
    s_coeffs = AmplitudeCoefficients(ChannelSpec(Channel.S, n), a, b)
    t_coeffs = cross_coefficients(s_coeffs)
    back = cross_coefficients(t_coeffs)
    results.append(check(
        "crossing_coefficient_round_trip",
        max(abs(back.a - a), abs(back.b - b)),
    ))
    m_s = amplitude_operator(s_coeffs, s_gates)
    m_t = amplitude_operator(t_coeffs, t_gates)
    results.append(check("crossing_operator_consistency", _max_abs(crossing_map(m_s) - m_t)))

    op = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    results.append(check("decompose_round_trip", _max_abs(reconstruct(decompose(op, gens), gens) - op)))
    return results


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def _emit_json(payload: dict, output: str | None) -> None:
    _emit(json.dumps(payload, indent=2), output)


def cmd_generators(config: RunConfig) -> int:
    gens = build_generators(config.n)
    completeness = verify_completeness(gens, config.tolerance)
    deviations = {
        "hermiticity_max_deviation": hermiticity_deviation(gens),
        "tracelessness_max_deviation": tracelessness_deviation(gens),
        "orthonormality_max_deviation": orthonormality_deviation(gens),
        "completeness_max_deviation": completeness.max_deviation,
    }
    all_passed = all(v <= config.tolerance for v in deviations.values())
    payload = {
        "n": config.n,
        "tolerance": config.tolerance,
        "generator_count": len(gens),
        "generators": [[[_cplx(entry) for entry in row] for row in mat] for mat in gens],
        **deviations,
        "all_passed": all_passed,
    }
    _emit_json(payload, config.output)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_verify(config: RunConfig) -> int:
    kinds = [config.channel] if config.channel else [Channel.S, Channel.T]
    checks = identity_checks(config.n, kinds, config.tolerance, config.seed)
    all_passed = all(c.passed for c in checks)
    payload = {
        "n": config.n,
        "channel": config.channel.value if config.channel else "both",
        "tolerance": config.tolerance,
        "seed": config.seed,
        "checks": [
            {"name": c.name, "max_deviation": c.max_deviation, "passed": c.passed,
             **({"detail": c.detail} if c.detail else {})}
            for c in checks
        ],
        "all_passed": all_passed,
    }
    _emit_json(payload, config.output)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_encode(config: RunConfig, a: complex, b: complex, psi: np.ndarray | None) -> int:
    channel = ChannelSpec(config.channel or Channel.S, config.n)
    coeffs = AmplitudeCoefficients(channel, a, b)
    plan = plan_encoding(coeffs)
    gens = build_generators(config.n)
    gates = build_gates(channel, gens)
    w = build_w(plan, gates)
    m = amplitude_operator(coeffs, gates)
    report = verify_block(w, m, plan.alpha, config.tolerance)
    d = config.n ** 2
    unitarity = _max_abs(w.conj().T @ w - np.eye(2 * d))
    payload = {
        "circuit": circuit_to_json(export_circuit(plan)),
        "alpha": plan.alpha,
        "gamma": plan.gamma,
        "phi_a": plan.phi_a,
        "phi_b": plan.phi_b,
        "block_identity_deviation": report.max_deviation,
        "w_unitarity_deviation": unitarity,
    }
    if psi is not None:
        result = apply_with_postselection(plan, gates, psi)
        payload["postselection_probability"] = result.success_probability
        payload["postselection_annihilated"] = result.annihilated
    all_passed = report.passed and unitarity <= config.tolerance
    payload["all_passed"] = all_passed
    _emit_json(payload, config.output)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_cross(config: RunConfig, a: complex, b: complex) -> int:
    source = ChannelSpec(config.channel or Channel.S, config.n)
    coeffs = AmplitudeCoefficients(source, a, b)
    crossed = cross_coefficients(coeffs)
    back = cross_coefficients(crossed)
    gens = build_generators(config.n)
    s_gates = build_gates(ChannelSpec(Channel.S, config.n), gens)
    t_gates = build_gates(ChannelSpec(Channel.T, config.n), gens)
    if source.kind is Channel.S:
        m_s = amplitude_operator(coeffs, s_gates)
        m_t = amplitude_operator(crossed, t_gates)
    else:
        m_s = amplitude_operator(crossed, s_gates)
        m_t = amplitude_operator(coeffs, t_gates)
    operator_dev = _max_abs(crossing_map(m_s) - m_t)
    round_trip_dev = max(abs(back.a - a), abs(back.b - b))
    all_passed = operator_dev <= config.tolerance and round_trip_dev <= config.tolerance
    payload = {
        "n": config.n,
        "source_channel": source.kind.value,
        "target_channel": crossed.channel.kind.value,
        "a": _cplx(a),
        "b": _cplx(b),
        "a_crossed": _cplx(crossed.a),
        "b_crossed": _cplx(crossed.b),
        "operator_consistency_deviation": operator_dev,
        "round_trip_deviation": round_trip_dev,
        "all_passed": all_passed,
    }
    _emit_json(payload, config.output)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_disk(config: RunConfig, resolution: int) -> int:
    rows = disk_samples(resolution)
    if config.fmt == "json":
        payload = {
            "resolution": resolution,
            "rows": [
                {"theta": r.theta, "phi": r.phi, "a": _cplx(r.a), "b": _cplx(r.b), "norm_sq": r.norm_sq}
                for r in rows
            ],
        }
        _emit_json(payload, config.output)
        return EXIT_OK
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["theta", "phi", "re_a", "im_a", "re_b", "im_b", "norm_sq"])
    for r in rows:
        writer.writerow([
            repr(r.theta), repr(r.phi),
            repr(r.a.real), repr(r.a.imag),
            repr(r.b.real), repr(r.b.imag),
            repr(r.norm_sq),
        ])
    _emit(buffer.getvalue().rstrip("\n"), config.output)
    return EXIT_OK


def read_sectors(path: str) -> list[PartialWaveSector]:
    """Parse a sector CSV with header j,re_a,im_a,re_b,im_b,kappa.

    Raises ValueError carrying the offending line number on malformed input.
    """
    sectors = []
    with open(path, newline="", encoding="utf-8") as fh:
        numbered = [
            (line_number, row)
            for line_number, row in enumerate(csv.reader(fh), start=1)
            if row and any(cell.strip() for cell in row)
        ]
    if not numbered:
        return sectors
    header_line, header_row = numbered[0]
    header = [cell.strip() for cell in header_row]
    expected = ["j", "re_a", "im_a", "re_b", "im_b", "kappa"]
    if header != expected:
        raise ValueError(
            f"line {header_line}: expected header {','.join(expected)}, got {','.join(header)}"
        )
    for line_number, row in numbered[1:]:
        try:
            if len(row) != 6:
                raise ValueError(f"expected 6 fields, got {len(row)}")
            sectors.append(PartialWaveSector(
                j=int(row[0]),
                a_j=complex(float(row[1]), float(row[2])),
                b_j=complex(float(row[3]), float(row[4])),
                kappa_j=float(row[5]),
            ))
        except ValueError as exc:
            raise ValueError(f"line {line_number}: {exc}") from exc
    return sectors


def cmd_partial_wave(config: RunConfig, sectors_file: str) -> int:
    sectors = read_sectors(sectors_file)
    reports = [(s, check_partial_wave(s, config.tolerance)) for s in sectors]
    all_satisfied = all(r.bound_satisfied for _, r in reports)
    payload = {
        "tolerance": config.tolerance,
        "sectors": [
            {
                "j": s.j,
                "a": _cplx(s.a_j),
                "b": _cplx(s.b_j),
                "kappa": s.kappa_j,
                "norm_sq": r.norm_sq,
                "bound_satisfied": r.bound_satisfied,
                "eigen_plus": _cplx(r.eigen_plus),
                "eigen_minus": _cplx(r.eigen_minus),
                "in_unit_disk": list(r.in_unit_disk),
                "elastic_saturation": r.elastic_saturation,
            }
            for s, r in reports
        ],
        "all_bounds_satisfied": all_satisfied,
    }
    _emit_json(payload, config.output)
    return EXIT_OK if all_satisfied else EXIT_CHECK_FAILED


def _resolve_tolerance(value: float | None) -> float:
    if value is not None:
        return value
    raw = os.environ.get(ENV_TOLERANCE)
    if raw is None:
        return DEFAULT_TOLERANCE
    return float(raw)


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=3, help="qudit dimension N (default 3)")
    parser.add_argument("--channel", choices=["s", "t"], default=None,
                        help="scattering channel (verify runs both when omitted)")
    parser.add_argument("--tolerance", type=float, default=None,
                        help=f"check tolerance (default {ENV_TOLERANCE} or {DEFAULT_TOLERANCE})")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--output", default=None, help="write output to this path instead of stdout")
    parser.add_argument("--format", dest="fmt", choices=["json", "csv"], default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sun-gates", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generators", help="build generators and verify their identities")
    _add_common_options(p)

    p = sub.add_parser("verify", help="run the full operator-identity suite")
    _add_common_options(p)

    p = sub.add_parser("encode", help="block-encode an amplitude a*I + b*Z")
    _add_common_options(p)
    p.add_argument("--a", required=True, help="coefficient of the identity gate, re,im")
    p.add_argument("--b", required=True, help="coefficient of the Z gate, re,im")
    p.add_argument("--psi", default=None,
                   help="optional system state: N^2 comma-separated real amplitudes")

    p = sub.add_parser("cross", help="transport coefficients to the crossed channel")
    _add_common_options(p)
    p.add_argument("--a", required=True, help="coefficient of the identity gate, re,im")
    p.add_argument("--b", required=True, help="coefficient of the Z gate, re,im")

    p = sub.add_parser("disk", help="emit coefficient-disk samples")
    _add_common_options(p)
    p.add_argument("--resolution", type=int, default=8, help="boundary sample count (>= 2)")

    p = sub.add_parser("partial-wave", help="check unitarity bounds for a sector table")
    _add_common_options(p)
    p.add_argument("sectors_file", help="CSV with header j,re_a,im_a,re_b,im_b,kappa")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = RunConfig(
            n=args.n,
            channel=Channel(args.channel) if args.channel else None,
            tolerance=_resolve_tolerance(args.tolerance),
            seed=args.seed,
            output=args.output,
            fmt=args.fmt,
        )
        if config.n < 2:
            raise ValueError(f"qudit dimension must be at least 2, got {config.n}")
        if not config.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {config.tolerance}")

        if args.command == "generators":
            return cmd_generators(config)
        if args.command == "verify":
            return cmd_verify(config)
        if args.command == "encode":
            psi = None
            if args.psi is not None:
                values = [float(part) for part in args.psi.split(",")]
                if len(values) != config.n ** 2:
                    raise ValueError(
                        f"psi must have {config.n ** 2} amplitudes for N={config.n}, got {len(values)}"
                    )
                psi = np.array(values, dtype=complex)
            return cmd_encode(config, parse_complex(args.a), parse_complex(args.b), psi)
        if args.command == "cross":
            return cmd_cross(config, parse_complex(args.a), parse_complex(args.b))
        if args.command == "disk":
            return cmd_disk(config, args.resolution)
        if args.command == "partial-wave":
            return cmd_partial_wave(config, args.sectors_file)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
