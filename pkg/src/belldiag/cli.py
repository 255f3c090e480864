"""Command-line interface.

Subcommands: classify a state file, run seeded share estimations, print a
state's witness, cross-check fast criteria against the dense oracles, and
list the phase-space coset indexing. Machine-readable payloads (JSON, or
CSV where offered) go to stdout; summaries and diagnostics go to stderr.
Floats are printed with 12 significant digits. Exit codes: 0 success, 2
parse/invariant/flag failure, 1 internal numerical failure.

State files are JSON objects {"d": n, "c": [[...], ...], "label":
optional} or a CSV grid of coefficients preceded by a `# d=<n>` header
line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import secrets
import sys
from pathlib import Path

import numpy as np

from . import detection, montecarlo
from .detection import DETECTION_GUARD
from .errors import BellDiagError, InvalidCoefficientsError
from .montecarlo import CSV_COLUMNS, RNG_DESCRIPTION, SamplerConfig
from .phase_space import all_cosets, enumerate_subgroups, striation
from .weyl import CoefficientMatrix


def _round_floats(obj):
    """Round floats to 12 significant digits, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit_json(payload) -> None:
    print(json.dumps(_round_floats(payload), indent=2))


def _csv_text(columns, row) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerow([f"{v:.12g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _load_state(path: str) -> tuple[CoefficientMatrix, str | None]:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        payload = json.loads(text)
        if "d" not in payload or "c" not in payload:
            raise BellDiagError('state file must contain "d" and "c" fields')
        d = int(payload["d"])
        c = np.asarray(payload["c"], dtype=float)
        label = payload.get("label")
    else:
        d = None
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = re.search(r"d\s*=\s*(\d+)", line)
                if m:
                    d = int(m.group(1))
                continue
            rows.append([float(x) for x in line.split(",")])
        if d is None:
            raise BellDiagError("CSV state file needs a '# d=<n>' header line")
        c = np.asarray(rows, dtype=float)
        label = None
    if c.shape != (d, d):
        raise InvalidCoefficientsError(
            f"coefficient grid has shape {c.shape}, expected ({d}, {d})"
        )
    return CoefficientMatrix(c), label


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(63)
    print(f"seed: {seed} (generated, pass --seed to reproduce)", file=sys.stderr)
    return seed


def cmd_classify(args) -> int:
    cm, label = _load_state(args.path)
    record = detection.classify(cm)
    payload = record.to_dict()
    if label is not None:
        payload["input_label"] = label
    if args.oracle:
        trace_norm = detection.realignment_oracle(cm)
        min_eig, oracle_npt = detection.ppt_oracle(cm)
        oracle_detected = cm.d * trace_norm > cm.d + DETECTION_GUARD
        payload["oracle_realignment_trace_norm"] = trace_norm
        payload["oracle_realignment_detected"] = oracle_detected
        payload["oracle_min_eigenvalue"] = min_eig
        payload["oracle_is_npt"] = oracle_npt
        payload["agreement"] = (
            oracle_npt == (not record.is_ppt)
            and oracle_detected == record.realignment_detected
        )
    _emit_json(payload)
    return 0


def cmd_witness(args) -> int:
    cm, _ = _load_state(args.path)
    kappa = detection.witness_kappa(cm)
    value = detection.witness_value(cm, kappa)
    if np.max(np.abs(kappa)) <= 1e-12:
        note = (
            "kappa is the zero matrix (degenerate witness): "
            "the operator is not a valid entanglement witness"
        )
    elif kappa.min() >= -1e-12:
        note = (
            "kappa is entry-wise non-negative: the operator is positive "
            "and not a valid entanglement witness"
        )
    else:
        note = None
    _emit_json(
        {
            "d": 3,
            "kappa": kappa.tolist(),
            "witness_value": value,
            "npt_certified": value < -DETECTION_GUARD,
            "note": note,
        }
    )
    return 0


def _sample_summary(payload) -> None:
    print(f"d={payload['d']} n={payload['n_samples']} seed={payload['seed']}", file=sys.stderr)
    for key, value in payload.items():
        if key in ("d", "n_samples", "seed", "rng"):
            continue
        if isinstance(value, float):
            print(f"  {key:<28} {value:.6f}", file=sys.stderr)
        else:
            print(f"  {key:<28} {value}", file=sys.stderr)


def cmd_sample(args) -> int:
    seed = _resolve_seed(args)
    if args.zero_coset is not None:
        cosets = all_cosets(args.d)
        if not 0 <= args.zero_coset < len(cosets):
            raise BellDiagError(
                f"--zero-coset index {args.zero_coset} out of range, "
                f"d={args.d} has {len(cosets)} cosets (see the striations subcommand)"
            )
        cfg = SamplerConfig(args.d, args.n, seed, zero_coset=cosets[args.zero_coset])
        counts = montecarlo.proposition1_check(cfg)
        payload = {
            "d": args.d,
            "n_samples": args.n,
            "seed": seed,
            "zero_coset": args.zero_coset,
            "n_ppt_entangled_detected": counts.n_ppt_entangled_detected,
            "n_npt": counts.n_npt,
            "n_other": counts.n_other,
            "rng": RNG_DESCRIPTION,
        }
        columns = ("d", "n", "seed", "zero_coset", "n_ppt_entangled_detected", "n_npt", "n_other")
        row = (args.d, args.n, seed, args.zero_coset, *counts)
    else:
        report = montecarlo.estimate_shares(SamplerConfig(args.d, args.n, seed))
        payload = report.to_dict()
        columns = CSV_COLUMNS
        row = report.csv_row()
    _sample_summary(payload)
    csv_text = _csv_text(columns, row)
    if args.out:
        Path(args.out).write_text(csv_text)
    if args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        _emit_json(payload)
    return 0


def cmd_verify(args) -> int:
    seed = _resolve_seed(args)
    cfg = SamplerConfig(args.d, args.n, seed)
    checks: dict[str, int] = {}
    violation = None

    def run(name: str, ok: bool, cm) -> None:
        nonlocal violation
        checks[name] = checks.get(name, 0) + 1
        if not ok and violation is None:
            violation = {"check": name, "c": cm.c.tolist()}

    for cm in montecarlo.sample_uniform(cfg):
        fast = detection.realignment_fast(cm)
        trace_norm = detection.realignment_oracle(cm)
        run("realignment_fast_vs_oracle", abs(cfg.d * trace_norm - fast.value) < 1e-9, cm)
        if cfg.d == 2:
            _, oracle_npt = detection.ppt_oracle(cm)
            run("qubit_realignment_iff_npt", fast.detected == oracle_npt, cm)
        if cfg.d == 3:
            sub = detection.realignment_qutrit_subgroup_form(cm)
            run("subgroup_form_agreement", sub.detected == fast.detected, cm)
            det = detection.ppt_det_qutrit(cm)
            min_eig, oracle_npt = detection.ppt_oracle(cm)
            near_boundary = abs(det.rhs - det.lhs) < 1e-9 or abs(min_eig) < 1e-9
            run("det_criterion_vs_oracle", det.is_npt == oracle_npt or near_boundary, cm)
            rho = detection.density_from_coefficients(cm)
            evs = detection.linalg.hermitian_eigenvalues(
                detection.partial_transpose(rho, 3, 3)
            )
            run("spectrum_in_third_band", evs[0] >= -1 / 3 - 1e-9 and evs[-1] <= 1 / 3 + 1e-9, cm)
            run("negative_count_0_or_3", int((evs < -1e-9).sum()) in (0, 3), cm)
    payload = {
        "d": cfg.d,
        "n": cfg.n_samples,
        "seed": seed,
        "checks": checks,
        "violations": 0 if violation is None else 1,
        "first_violation": violation,
    }
    _emit_json(payload)
    if violation is not None:
        print(
            f"violation in check {violation['check']}, coefficients: {violation['c']!r}",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_striations(args) -> int:
    subgroups = enumerate_subgroups(args.d)
    cosets = all_cosets(args.d)
    index_of = {c.elements: i for i, c in enumerate(cosets)}
    sub_index = {s.elements: i for i, s in enumerate(subgroups)}
    payload = {
        "d": args.d,
        "subgroups": [
            {"index": i, "elements": [list(p) for p in s.elements]}
            for i, s in enumerate(subgroups)
        ],
        "striations": [
            {
                "subgroup_index": i,
                "coset_indices": [index_of[c.elements] for c in striation(s).cosets],
            }
            for i, s in enumerate(subgroups)
        ],
        "cosets": [
            {
                "index": i,
                "subgroup_index": sub_index[c.base.elements],
                "shift": list(c.shift),
                "elements": [list(p) for p in c.elements],
            }
            for i, c in enumerate(cosets)
        ],
    }
    _emit_json(payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belldiag",
        description="Entanglement detection for Bell-diagonal qudit states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a state file by both criteria")
    p.add_argument("path", help="state file (JSON or CSV grid)")
    p.add_argument("--oracle", action="store_true", help="add dense-oracle fields")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", help="estimate detection shares on uniform samples")
    p.add_argument("--d", type=int, required=True, help="local dimension")
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (printed if omitted)")
    p.add_argument(
        "--zero-coset",
        type=int,
        default=None,
        dest="zero_coset",
        help="pin one coset to zero (canonical index) and report the constrained counts",
    )
    p.add_argument("--out", default=None, help="also write the CSV report to this path")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("witness", help="print the witness kappa of a d=3 state file")
    p.add_argument("path")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="cross-check fast criteria against dense oracles")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("striations", help="print subgroups, cosets, and coset indices")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_striations)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except np.linalg.LinAlgError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return 1
    except (BellDiagError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
