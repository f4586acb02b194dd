"""Command-line front door.

Exit codes are uniform across commands: 0 for success or a passing
verdict, 1 for a semantic failure (a negative verdict on valid input), 2
for invalid input.  Reports are JSON documents on stdout with a
"schema_version" field; diagnostics go to stderr.  Exact rationals are
serialized as fraction strings and polynomials both as a coefficient map
and a human-readable string.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .core import (
    FixedPointData,
    ValidationError,
    betti_numbers,
    load,
    projective_profile,
    serialize,
)
from .hattori import (
    BundleDerivationError,
    RigidityVerdict,
    first_chern_candidates,
    hattori_verdict,
)
from .laurent import LaurentPoly
from .localization import (
    c1cn1_from_k2,
    c1_power,
    chi_y_from_data,
    k_coefficients,
    residue_sum,
)
from .models import hyperplane_model, linear_pn, pair_restriction_check
from .search import SearchSpaceError, SearchSpec, rigidity_experiment

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


def _emit(document: dict) -> None:
    print(json.dumps(document, indent=2))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def _rational(value) -> str:
    return str(Fraction(value))


def _poly_payload(poly: LaurentPoly, variable: str = "y") -> dict:
    return {
        "coefficients": {str(k): c for k, c in poly.terms},
        "text": poly.fmt(variable),
    }


def _load(path: str) -> FixedPointData:
    try:
        return load(path)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}")


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_weights(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip() != "")
    except ValueError:
        raise ValidationError(f"weights must be comma-separated integers, got {raw!r}")


def _parse_k0(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"k0 must be an integer or fraction like 3/2, got {raw!r}")


def _parse_embedding(raw: str) -> dict[str, str]:
    mapping = {}
    for part in raw.split(","):
        if not part.strip():
            continue
        source, separator, image = part.partition("=")
        if not separator or not source.strip() or not image.strip():
            raise ValidationError(
                f"embedding entries must look like LABEL=LABEL, got {part!r}"
            )
        if source.strip() in mapping:
            raise ValidationError(f"embedding maps {source.strip()!r} twice")
        mapping[source.strip()] = image.strip()
    if not mapping:
        raise ValidationError("embedding is empty")
    return mapping


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        data = _load(args.path)
    except ValidationError as exc:
        return _fail(str(exc))
    sys.stdout.write(serialize(data))
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    try:
        data = _load(args.path)
    except ValidationError as exc:
        return _fail(str(exc))
    chi = chi_y_from_data(data)
    coefficients = k_coefficients(chi, data.n)
    document = {
        "schema_version": SCHEMA_VERSION,
        "n": data.n,
        "point_count": data.point_count,
        "euler_characteristic": data.point_count,
        "betti": list(betti_numbers(data)),
        "projective_profile": projective_profile(data),
        "residue_sums": [_rational(residue_sum(data, r)) for r in range(data.n + 1)],
        "c1_power": _rational(c1_power(data)),
        "chi_y": _poly_payload(chi),
        "k_coefficients": list(coefficients.values),
        "c1cn1": (
            c1cn1_from_k2(coefficients[2], data.point_count, data.n)
            if data.n >= 2
            else None
        ),
    }
    _emit(document)
    return EXIT_OK


def _mismatch_payload(verdict: RigidityVerdict) -> list[dict]:
    return [
        {
            "label": mismatch.label,
            "expected": list(mismatch.expected),
            "actual": list(mismatch.actual),
        }
        for mismatch in verdict.mismatches
    ]


def cmd_hattori(args: argparse.Namespace) -> int:
    try:
        data = _load(args.path)
    except ValidationError as exc:
        return _fail(str(exc))
    try:
        verdict = hattori_verdict(data)
    except ValidationError as exc:
        return _fail(str(exc))
    except BundleDerivationError as exc:
        _emit(
            {
                "schema_version": SCHEMA_VERSION,
                "passes": False,
                "error": f"bundle derivation failed: {exc}",
            }
        )
        return EXIT_FAIL
    document = {
        "schema_version": SCHEMA_VERSION,
        "passes": verdict.passes,
        "normalized_bundle": list(verdict.normalized_a),
        "quasi_ample": verdict.quasi_ample,
        "bundle_power": _rational(verdict.bundle_power),
        "condition_c": (
            {"k0": verdict.condition_c.k0, "offset": verdict.condition_c.offset}
            if verdict.condition_c is not None
            else None
        ),
        "condition_c_violation": verdict.condition_c_violation,
        "mismatches": _mismatch_payload(verdict),
    }
    _emit(document)
    return EXIT_OK if verdict.passes else EXIT_FAIL


def cmd_model(args: argparse.Namespace) -> int:
    try:
        weights = _parse_weights(args.weights)
        if args.n is not None and args.n != len(weights) - 1:
            raise ValidationError(
                f"--n {args.n} disagrees with {len(weights)} weights "
                f"(expected n + 1 of them)"
            )
        if args.hyperplane:
            data = hyperplane_model(weights[:-1])
        else:
            data = linear_pn(weights)
    except ValidationError as exc:
        return _fail(str(exc))
    try:
        _write_output(serialize(data), args.output)
    except OSError as exc:
        return _fail(f"cannot write {args.output}: {exc}")
    return EXIT_OK


def cmd_pair(args: argparse.Namespace) -> int:
    try:
        ambient = _load(args.ambient)
        hypersurface = _load(args.hypersurface)
        embedding = _parse_embedding(args.embedding) if args.embedding else None
        report = pair_restriction_check(ambient, hypersurface, embedding)
    except ValidationError as exc:
        return _fail(str(exc))
    document = {
        "schema_version": SCHEMA_VERSION,
        "passes": report.passes,
        "omitted_label": report.omitted_label,
        "points": [
            {
                "label": row.label,
                "image": row.image,
                "embeds": row.embeds,
                "missing": list(row.missing),
                "normal_weight": row.normal_weight,
                "expected_normal": row.expected_normal,
            }
            for row in report.points
        ],
    }
    _emit(document)
    return EXIT_OK if report.passes else EXIT_FAIL


def _weights_payload(data: FixedPointData) -> list[list[int]]:
    return [list(point.weights) for point in data.points]


def cmd_search(args: argparse.Namespace) -> int:
    max_leaves = 10**8
    override = os.environ.get("FPKIT_MAX_LEAVES")
    if override is not None:
        try:
            max_leaves = int(override)
        except ValueError:
            return _fail(f"FPKIT_MAX_LEAVES must be an integer, got {override!r}")
    try:
        k0 = _parse_k0(args.k0) if args.k0 is not None else None
        if k0 is not None and k0.denominator == 1:
            k0 = int(k0)
        spec = SearchSpec(
            n=args.n,
            bound=args.bound,
            require_projective_profile=args.require_profile,
            require_condition_c=args.require_condition_c,
            k0=k0,
            max_leaves=max_leaves,
        )
        experiment = rigidity_experiment(spec, workers=args.workers)
    except (ValidationError, SearchSpaceError) as exc:
        return _fail(str(exc))
    if args.output is not None:
        stream = "".join(serialize(data) for data in experiment.survivors)
        try:
            _write_output(stream, args.output)
        except OSError as exc:
            return _fail(f"cannot write {args.output}: {exc}")
    document = {
        "schema_version": SCHEMA_VERSION,
        "n": spec.n,
        "bound": spec.bound,
        "require_projective_profile": spec.require_projective_profile,
        "require_condition_c": spec.require_condition_c,
        "k0": _rational(spec.effective_k0) if spec.require_condition_c else None,
        "survivor_count": experiment.survivor_count,
        "match_count": len(experiment.matches),
        "counterexample_count": len(experiment.counterexamples),
        "hypothesis_failure_count": len(experiment.hypothesis_failures),
        "matches": [_weights_payload(data) for data in experiment.matches],
        "counterexamples": [
            {
                "weights": _weights_payload(data),
                "normalized_bundle": list(verdict.normalized_a),
                "quasi_ample": verdict.quasi_ample,
                "bundle_power": _rational(verdict.bundle_power),
                "condition_c_violation": verdict.condition_c_violation,
                "mismatches": _mismatch_payload(verdict),
            }
            for data, verdict in experiment.counterexamples
        ],
        "hypothesis_failures": [
            {"weights": _weights_payload(data), "reason": reason}
            for data, reason in experiment.hypothesis_failures
        ],
    }
    _emit(document)
    return EXIT_OK if not experiment.counterexamples else EXIT_FAIL


def cmd_c1candidates(args: argparse.Namespace) -> int:
    try:
        candidates = first_chern_candidates(args.n)
    except ValidationError as exc:
        return _fail(str(exc))
    document = {
        "schema_version": SCHEMA_VERSION,
        "n": args.n,
        "candidates": [
            {
                "value": _rational(candidate.value),
                "admissible": candidate.admissible,
                "reason": candidate.reason,
            }
            for candidate in candidates
        ],
    }
    _emit(document)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpkit",
        description=(
            "Exact localization calculator for circle-action fixed-point data: "
            "validation, Chern numbers, genus polynomials, rigidity "
            "certification, model generation, and bounded searches."
        ),
    )
    parser.add_argument("--version", action="version", version=f"fpkit {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("validate", help="validate a data file and echo it canonically")
    sub.add_argument("path", help="fixed-point data file")
    sub.set_defaults(handler=cmd_validate)

    sub = commands.add_parser("report", help="full localization report for a data file")
    sub.add_argument("path", help="fixed-point data file")
    sub.set_defaults(handler=cmd_report)

    sub = commands.add_parser("hattori", help="run the rigidity pipeline on a data file")
    sub.add_argument("path", help="fixed-point data file")
    sub.set_defaults(handler=cmd_hattori)

    sub = commands.add_parser("model", help="emit linear projective-space data")
    sub.add_argument("--weights", required=True, help="comma-separated distinct integers")
    sub.add_argument("--n", type=int, help="expected dimension (weights must number n+1)")
    sub.add_argument(
        "--hyperplane",
        action="store_true",
        help="emit the invariant hyperplane of the ambient weights instead",
    )
    sub.add_argument("--output", help="write the document here instead of stdout")
    sub.set_defaults(handler=cmd_model)

    sub = commands.add_parser("pair", help="check a hypersurface restriction")
    sub.add_argument("ambient", help="ambient data file")
    sub.add_argument("hypersurface", help="hypersurface data file")
    sub.add_argument(
        "--embedding",
        help="comma-separated LABEL=LABEL pairs (default matches labels)",
    )
    sub.set_defaults(handler=cmd_pair)

    sub = commands.add_parser("search", help="sweep small weight configurations")
    sub.add_argument("--n", type=int, required=True, help="complex dimension")
    sub.add_argument("--bound", type=int, required=True, help="weight magnitude bound")
    sub.add_argument(
        "--require-profile",
        action="store_true",
        help="keep only survivors with the projective negative-count profile",
    )
    sub.add_argument(
        "--require-condition-c",
        action="store_true",
        help="keep only survivors admitting the affine weight-sum relation",
    )
    sub.add_argument("--k0", help="relation multiplier (integer or fraction; default n+1)")
    sub.add_argument("--workers", type=int, default=1, help="parallel worker count")
    sub.add_argument("--output", help="write the survivor stream to this file")
    sub.set_defaults(handler=cmd_search)

    sub = commands.add_parser("c1candidates", help="admissible first-Chern-number roots")
    sub.add_argument("--n", type=int, required=True, help="complex dimension")
    sub.set_defaults(handler=cmd_c1candidates)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
