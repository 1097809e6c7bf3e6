"""Command-line interface.

Subcommands: linking, present, reduce, check-mild, augment, series, dims,
oracle, basis, selftest.  Exit codes: 0 success (and mild verdicts),
2 input errors, 3 not_shown, 4 inapplicable, 5 resource-guard stops
(memory cap, exhausted search bound); the oracle subcommand exits 1 on a
dimension mismatch.  MILD2_MEMORY_CAP_MIB overrides the default memory cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .arith import BoundExceededError
from .linking import (
    NoEliminableGeneratorError,
    Presentation,
    augment,
    eliminate_generator,
    koch_presentation,
    linking_data,
)
from .mildness import check_mild
from .oracle import MemoryGuardError, strongly_free_oracle
from .quadlie import F2, F2PI, WeightedAlphabet, bracket_weight, elimination_basis, enumerate_y, render_bracket
from .series import (
    NonRealizableError,
    WeightSignature,
    gamma_series,
    lower_central_dims,
    reduced_dims_bn,
    strongly_free_series,
    zassenhaus_dims,
)

_EXIT_BY_VERDICT = {"mild": 0, "not_shown": 3, "inapplicable": 4}
_RINGS = {"f2": F2, "f2pi": F2PI}


@dataclass
class Config:
    """Defaults shared by the subcommands."""

    max_degree: int = 6
    prime_bound: int = 10**6
    memory_cap_mib: int = 1024
    format: str = "text"


def default_memory_cap() -> int:
    raw = os.environ.get("MILD2_MEMORY_CAP_MIB")
    if raw is None:
        return Config.memory_cap_mib
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"MILD2_MEMORY_CAP_MIB must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"MILD2_MEMORY_CAP_MIB must be >= 1, got {cap}")
    return cap


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"{what} must be a comma-separated list of integers, got {text!r}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_presentation(args) -> Presentation:
    given_in = getattr(args, "infile", None)
    if given_in:
        with open(given_in, "r", encoding="utf-8") as handle:
            return Presentation.from_json_dict(json.load(handle))
    if not getattr(args, "primes", None):
        raise ValueError("provide --primes or --in FILE")
    return koch_presentation(_parse_ints(args.primes, "--primes"))


def _cmd_linking(args) -> int:
    data = linking_data(_parse_ints(args.primes, "--primes"))
    _emit(args, data.to_json_dict(), data.text())
    return 0


def _cmd_present(args) -> int:
    pres = koch_presentation(_parse_ints(args.primes, "--primes"))
    _emit(args, pres.to_json_dict(), pres.text())
    return 0


def _cmd_reduce(args) -> int:
    pres = _load_presentation(args)
    reduced = eliminate_generator(pres, args.t)
    _emit(args, reduced.to_json_dict(), reduced.text())
    return 0


def _cmd_check_mild(args) -> int:
    pres = _load_presentation(args)
    report = check_mild(
        pres,
        oracle_depth=args.oracle_depth,
        oracle_ring=_RINGS[args.ring],
        memory_cap_mib=args.memory_cap_mib,
    )
    _emit(args, report.to_json_dict(), report.text())
    return _EXIT_BY_VERDICT[report.verdict]


def _cmd_augment(args) -> int:
    result = augment(_parse_ints(args.seed, "--seed"), args.bound)
    lines = [
        f"seed (normalized) = {result.seed}",
        f"q_aux = {result.q_aux}",
        f"q_last = {result.q_last}",
        f"S = {result.S}",
        f"attempts = {result.attempts}",
    ]
    _emit(args, result.to_json_dict(), "\n".join(lines))
    return 0


def _signature_from(args) -> WeightSignature:
    if args.e is not None:
        return WeightSignature(_parse_ints(args.e, "--e"), _parse_ints(args.h or "", "--h"))
    if args.d is not None:
        return WeightSignature((1,) * args.d, (2,) * (args.m or 0))
    raise ValueError("provide --e/--h or --d/--m")


def _dims_payload(seq, extra: dict | None = None) -> tuple[dict, str]:
    payload = seq.to_json_dict()
    if extra:
        payload.update(extra)
    text = "\n".join(f"{n}: {v}" for n, v in seq.pairs())
    return payload, text


def _cmd_series(args) -> int:
    sig = _signature_from(args)
    fn = strongly_free_series if args.kind == "strongly-free" else gamma_series
    series = fn(sig, args.max)
    kind = "strongly_free_series" if args.kind == "strongly-free" else "gamma_series"
    payload = {"kind": kind, "e": list(sig.e), "h": list(sig.h), "start": 0, "values": list(series.coeffs)}
    _emit(args, payload, "\n".join(f"{n}: {c}" for n, c in series.pairs()))
    return 0


def _cmd_dims(args) -> int:
    try:
        if args.kind == "zassenhaus":
            if args.d is None:
                raise ValueError("--kind zassenhaus needs --d (and optionally --m)")
            seq = zassenhaus_dims(args.d, args.m or 0, args.max)
            payload, text = _dims_payload(seq, {"d": args.d, "m": args.m or 0})
        else:
            sig = _signature_from(args)
            if args.kind == "reduced-b":
                seq = reduced_dims_bn(sig, args.max)
                payload, text = _dims_payload(seq, {"e": list(sig.e), "h": list(sig.h)})
            else:
                seq = lower_central_dims(sig, args.max)
                note = (
                    "a(1) counts weight-1 generators; a(n) for n >= 2 is the partial sum"
                    " b(2) + ... + b(n) of the reduced dimensions"
                )
                payload, text = _dims_payload(seq, {"e": list(sig.e), "h": list(sig.h), "note": note})
    except NonRealizableError as exc:
        diag = {
            "kind": args.kind,
            "error": {"n": exc.n, "value": str(exc.value), "reason": exc.reason},
            "diagnosis": "not realizable by a strongly free sequence",
        }
        _emit(args, diag, f"not realizable by a strongly free sequence: {exc}")
        return 0
    _emit(args, payload, text)
    return 0


def _cmd_oracle(args) -> int:
    pres = _load_presentation(args)
    if pres.product_relation is not None and any(pres.product_relation):
        pres = eliminate_generator(pres)
    ring = _RINGS[args.ring]
    result = strongly_free_oracle(
        pres.relators, args.max, ring=ring, memory_cap_mib=args.memory_cap_mib
    )
    verdict = "match" if result.match else f"mismatch at degree {result.mismatch_degree}"
    text = "\n".join(
        [
            f"ring = {result.ring}",
            result.profile.table(),
            f"expected = {list(result.expected_dims)}",
            f"verdict = {verdict}",
        ]
    )
    _emit(args, result.to_json_dict(), text)
    return 0 if result.match else 1


def _cmd_basis(args) -> int:
    alphabet = WeightedAlphabet(_parse_ints(args.weights, "--weights"))
    if args.kind == "y":
        grouped = enumerate_y(alphabet, args.max)
        payload = {
            "kind": "y",
            "weights": list(alphabet.weights),
            "by_degree": {str(deg): [render_bracket(w) for w in ws] for deg, ws in grouped.items()},
        }
        lines = []
        for deg, ws in grouped.items():
            lines.append(f"degree {deg} (count {len(ws)}):")
            lines.extend(f"  {render_bracket(w)}" for w in ws)
        _emit(args, payload, "\n".join(lines))
        return 0
    if args.sigma is None:
        raise ValueError("--kind elimination needs --sigma")
    sigma = _parse_ints(args.sigma, "--sigma")
    words = elimination_basis(alphabet, sigma, args.max)
    payload = {
        "kind": "elimination",
        "weights": list(alphabet.weights),
        "sigma": sorted(set(sigma)),
        "words": [
            {"weight": bracket_weight(w, alphabet), "word": render_bracket(w)} for w in words
        ],
    }
    lines = [f"{bracket_weight(w, alphabet)}: {render_bracket(w)}" for w in words]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_selftest(args) -> int:
    from .acceptance import run_all

    ok = run_all(stream=sys.stdout, include_optional=args.with_degree_7)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    cap = default_memory_cap()
    parser = argparse.ArgumentParser(prog="mild2", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, fmt="text", **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=handler)
        p.add_argument("--format", choices=("text", "json"), default=fmt)
        return p

    p = add("linking", _cmd_linking, help="square classes and linking matrix of a prime set")
    p.add_argument("--primes", required=True, help="comma-separated odd primes")

    p = add("present", _cmd_present, help="quadratic presentation induced by a prime set")
    p.add_argument("--primes", required=True)

    p = add("reduce", _cmd_reduce, help="eliminate one generator through the product relation")
    p.add_argument("--primes")
    p.add_argument("--in", dest="infile", help="presentation JSON file")
    p.add_argument("--t", type=int, default=None, help="generator to eliminate (default: last usable)")

    p = add("check-mild", _cmd_check_mild, fmt="json", help="run the mildness pipeline")
    p.add_argument("--primes")
    p.add_argument("--in", dest="infile")
    p.add_argument("--oracle-depth", type=int, default=None)
    p.add_argument("--ring", choices=sorted(_RINGS), default="f2")
    p.add_argument("--memory-cap-mib", type=int, default=cap)

    p = add("augment", _cmd_augment, fmt="json", help="search for a mild augmentation of a seed")
    p.add_argument("--seed", required=True, help="comma-separated odd primes")
    p.add_argument("--bound", type=int, default=Config.prime_bound)

    p = add("series", _cmd_series, help="strongly free dimension series of a weight signature")
    p.add_argument("--e", help="generator weights, e.g. 1,1,1,1")
    p.add_argument("--h", help="relator weights, e.g. 2,2,2,2")
    p.add_argument("--d", type=int, help="shorthand: d weight-1 generators")
    p.add_argument("--m", type=int, help="shorthand: m degree-2 relators")
    p.add_argument("--max", type=int, default=Config.max_degree)
    p.add_argument("--kind", choices=("strongly-free", "gamma"), default="strongly-free")

    p = add("dims", _cmd_dims, help="derived dimension sequences")
    p.add_argument("--kind", choices=("reduced-b", "lower-central", "zassenhaus"), required=True)
    p.add_argument("--e")
    p.add_argument("--h")
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max", type=int, default=Config.max_degree)

    p = add("oracle", _cmd_oracle, help="brute-force quotient dimensions vs the predicted series")
    p.add_argument("--primes")
    p.add_argument("--in", dest="infile")
    p.add_argument("--ring", choices=sorted(_RINGS), default="f2")
    p.add_argument("--max", type=int, default=Config.max_degree)
    p.add_argument("--memory-cap-mib", type=int, default=cap)

    p = add("basis", _cmd_basis, help="basis-word enumerations")
    p.add_argument("--kind", choices=("y", "elimination"), required=True)
    p.add_argument("--weights", required=True, help="letter weights, e.g. 1,1,2")
    p.add_argument("--sigma", help="chain letters for --kind elimination, e.g. 1,2")
    p.add_argument("--max", type=int, default=Config.max_degree)

    p = add("selftest", _cmd_selftest, help="run the acceptance checks")
    p.add_argument("--with-degree-7", action="store_true", help="include the slow degree-7 oracle check")

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NoEliminableGeneratorError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BoundExceededError, MemoryGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
