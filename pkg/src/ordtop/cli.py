"""Command-line entry point: ``ordtop {classify,sets,verify,suite,zoo}``.

Reports are JSON with sorted keys.  Sets appear as sorted arrays, families
in the canonical (size, then lexicographic) order.  Wall-clock time goes to
stderr only, so identical inputs give byte-identical reports.

Exit codes: 0 pass or verified, 1 property failure or refuted claim, 2 input error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .classifiers import classify
from .errors import OrdTopError
from .order import FinitePoset, build_poset, named
from .setclasses import dc, rd, sc, wd_finite
from .space import FiniteSpace, alexandroff, compact_saturated, irr_c, make_space
from .suite import MAX_SUITE_SIZE, jsonable, replay, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
FAMILIES = {"sc": sc, "dc": dc, "rd": rd, "wd": wd_finite, "irr": irr_c, "kx": compact_saturated}


class InputError(Exception):
    pass


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def parse_descriptor(raw: bytes):
    """A FinitePoset, a FiniteSpace, or a zoo id string."""
    try:
        d = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"space descriptor is not JSON: {exc}") from None
    if not isinstance(d, dict):
        raise InputError("space descriptor must be a JSON object")
    kind = d.get("kind")
    try:
        if kind == "finite-poset":
            if "named" in d:
                try:
                    return named(d["named"])
                except KeyError:
                    raise InputError(f"no named poset {d['named']!r}") from None
            pairs = [tuple(p) for p in d.get("order", [])]
            if any(len(p) != 2 for p in pairs):
                raise InputError("order pairs must have two entries")
            return build_poset([str(e) for e in d["elements"]], [(str(a), str(b)) for a, b in pairs])
        if kind == "finite-space":
            return make_space([str(e) for e in d["carrier"]], [[str(x) for x in u] for u in d["opens"]])
        if kind == "zoo":
            from .zoo.spaces import space_id
            return space_id(d["id"]).value
    except KeyError as exc:
        raise InputError(f"descriptor is missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad descriptor: {exc}") from None
    raise InputError(f"unknown descriptor kind {kind!r}")


def _as_space(obj) -> FiniteSpace:
    return alexandroff(obj) if isinstance(obj, FinitePoset) else obj


def _report(command: str, digest: str, results, seed=None) -> dict:
    return {"tool": "ordtop", "version": __version__, "command": command, "input_digest": digest,
            "seed": seed, "wall_clock": None, "results": jsonable(results)}


def cmd_classify(args) -> tuple[dict, int]:
    raw = _read(args.space)
    obj = parse_descriptor(raw)
    if isinstance(obj, str):
        from .zoo import curated_results
        rows = [r.to_json() for r in curated_results(obj)]
        return _report("classify", _digest(raw), {"space": obj, "curated": rows}), EXIT_OK
    X = _as_space(obj)
    rep = classify(X)
    results = {
        "flags": rep.flags(),
        "witnesses": {k: v for k, v in rep.witnesses.items()},
        "d_space_conditions": list(rep.d_space_conditions),
        "carrier": list(X.carrier),
    }
    return _report("classify", _digest(raw), results), EXIT_OK


def cmd_sets(args) -> tuple[dict, int]:
    raw = _read(args.space)
    obj = parse_descriptor(raw)
    if isinstance(obj, str):
        raise InputError("set families are computed for finite descriptors only")
    fam = FAMILIES[args.which](_as_space(obj))
    results = {"which": args.which, "family": [sorted(s) for s in fam]}
    return _report("sets", _digest(raw), results), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    from .zoo import Claim, shipped_claims, verify_claim
    shipped = shipped_claims()
    if not Path(args.claim).exists() and args.claim in shipped:
        raw = shipped[args.claim].dumps().encode()
    else:
        raw = _read(args.claim)
    try:
        claim = Claim.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InputError(f"claim is not UTF-8: {exc}") from None
    verdict = verify_claim(claim)
    results = {"claim": claim.to_json(), "verdict": verdict.to_json()}
    return _report("verify", _digest(raw), results), EXIT_OK if verdict.verified else EXIT_FAIL


def cmd_suite(args) -> tuple[dict, int]:
    if args.space:
        raw = _read(args.space)
        obj = parse_descriptor(raw)
        if not isinstance(obj, FinitePoset):
            raise InputError("suite replay takes a finite-poset descriptor")
        results = replay(obj)
        return _report("suite", _digest(raw), results), EXIT_FAIL if results["failures"] else EXIT_OK
    if not 1 <= args.max_size <= MAX_SUITE_SIZE:
        raise InputError(f"--max-size must be between 1 and {MAX_SUITE_SIZE}")
    if args.samples < 0:
        raise InputError("--samples must be nonnegative")
    params = {"max_size": args.max_size, "seed": args.seed, "samples": args.samples, "dedup": args.dedup}
    results = run_suite(args.max_size, args.seed, args.samples, args.dedup)
    digest = _digest(json.dumps(params, sort_keys=True).encode())
    return _report("suite", digest, results, seed=args.seed), EXIT_FAIL if results["failures"] else EXIT_OK


def cmd_zoo(args) -> tuple[dict, int]:
    from .zoo import ZooSpaceId, curated_results
    ids = [args.id] if args.id else [s.value for s in ZooSpaceId]
    results = {}
    for sid in ids:
        results[sid] = [r.to_json() for r in curated_results(sid)]
    return _report("zoo", _digest(" ".join(ids).encode()), results), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordtop", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ordtop {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_out(sp):
        sp.add_argument("--out", help="write the report here instead of stdout")
        return sp

    c = with_out(sub.add_parser("classify", help="property flags of a finite space, or a zoo table"))
    c.add_argument("--space", required=True)
    c.set_defaults(func=cmd_classify)

    s = with_out(sub.add_parser("sets", help="one of the set families of a finite space"))
    s.add_argument("--space", required=True)
    s.add_argument("--which", required=True, choices=sorted(FAMILIES))
    s.set_defaults(func=cmd_sets)

    v = with_out(sub.add_parser("verify", help="check a counterexample claim (file or shipped name)"))
    v.add_argument("--claim", required=True)
    v.set_defaults(func=cmd_verify)

    t = with_out(sub.add_parser("suite", help="exhaustive and randomized theorem checks"))
    t.add_argument("--max-size", type=int, default=4)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--samples", type=int, default=0)
    t.add_argument("--dedup", action="store_true", help="keep one poset per isomorphism class")
    t.add_argument("--space", help="replay every check on one finite-poset descriptor")
    t.set_defaults(func=cmd_suite)

    z = with_out(sub.add_parser("zoo", help="curated results for the infinite spaces"))
    z.add_argument("id", nargs="?")
    z.set_defaults(func=cmd_zoo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except (InputError, OrdTopError) as exc:
        kind = type(exc).__name__
        print(f"ordtop: {kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"ordtop: {args.command} finished in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
