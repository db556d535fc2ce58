"""Command line entry point: ``python -m dualpoly <command> ...``.

Exit status: 0 on success, 1 on a domain error (JSON object on stderr with
``error`` and ``message``), 2 on a usage error. Counts are printed as decimal
strings.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path

from . import counting
from .dual import DualRing, dual_local_structure, parse_ring
from .enumeration import DEFAULT_BUDGET
from .errors import DualPolyError, RingSpecError
from .null_ideals import (canonical_monic_null_base, canonical_monic_null_dual, enumerate_bounded_null,
                          in_N, in_Nprime, is_null_on_dual)
from .permutations import construct_pair_field, is_perm
from .poly import FunctionTable, derivative, format_poly, induce, parse_poly
from .rings import FiniteRing, is_suitable, local_structure

CACHE_ENV = "DUALPOLY_CACHE_DIR"
CSV_COLUMNS = ("ring", "k", "quantity", "formula", "enum", "match", "seconds")


class UsageError(Exception):
    pass


# -- cache ---------------------------------------------------------------------

def _cache_dir(args):
    d = args.cache_dir or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cache_key(**fields) -> str:
    blob = json.dumps(fields, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get(directory, key):
    if directory is None:
        return None
    path = directory / f"{key}.json"
    if not path.exists():
        return None
    with open(path) as fh:
        return json.load(fh)


def cache_put(directory, key, payload):
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, directory / f"{key}.json")


def _cached(args, fields, compute):
    directory = _cache_dir(args)
    key = cache_key(**fields)
    hit = cache_get(directory, key)
    if hit is not None:
        return hit
    payload = compute()
    cache_put(directory, key, payload)
    return payload


# -- helpers -------------------------------------------------------------------

def _base_ring(text: str) -> FiniteRing:
    r = parse_ring(text)
    if isinstance(r, DualRing):
        raise RingSpecError(f"{text!r}: expected a base ring without [k]")
    return r


def _ring_with_k(args):
    """``--ring`` may carry ``[k]``; ``--k`` must agree when both are given."""
    r = parse_ring(args.ring)
    if isinstance(r, DualRing):
        if args.k is not None and args.k != r.k:
            raise UsageError(f"--k {args.k} conflicts with {args.ring}")
        return r.base, r.k
    if args.k is None:
        raise UsageError("--k is required")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    return r, args.k


def _fmt(ring, a):
    return ring.format_element(int(a))


def _witness(verdict, ring):
    w = verdict.witness
    if w is None:
        return None
    fmt = str if isinstance(ring, DualRing) else (lambda a: _fmt(ring, a))
    return w.to_dict(fmt)


def _local_info(ls, ring):
    return {"maximal_ideal_size": len(ls.maximal_ideal), "nilpotency": ls.nilpotency,
            "residue_field_order": ls.residue_order}


# -- commands ------------------------------------------------------------------

def cmd_ring_info(args):
    r = parse_ring(args.ring)
    if isinstance(r, DualRing):
        out = {"kind": "ring_info", "ring": str(r), "order": str(r.order), "base": str(r.base), "k": r.k,
               "units": str(int(r.unit_mask.sum())), "is_local": r.base.is_local, "is_field": False}
        if r.base.is_local:
            out.update(_local_info(dual_local_structure(r), r))
            out["suitable"] = is_suitable(r) if r.order <= 1024 else r.base.is_field
        return out
    out = {"kind": "ring_info", "ring": str(r), "order": str(r.order), "characteristic": r.characteristic,
           "units": str(len(r.units)), "is_local": r.is_local, "is_field": r.is_field,
           "summands": [str(s) for s in r.summands]}
    if r.is_local:
        out.update(_local_info(local_structure(r), r))
        out["suitable"] = is_suitable(r)
    return out


def cmd_null_check(args):
    r = parse_ring(args.ring)
    f = parse_poly(args.poly, r)
    if isinstance(r, DualRing):
        return {"kind": "null_check", "ring": str(r), "poly": format_poly(f),
                "null": is_null_on_dual(f), "f0_in_N_prime": in_Nprime(f.f0),
                "parts_in_N": [in_N(p) for p in f.parts]}
    return {"kind": "null_check", "ring": str(r), "poly": format_poly(f),
            "null": in_N(f), "in_N_prime": in_Nprime(f)}


def cmd_null_canonical(args):
    r = parse_ring(args.ring)
    base = r.base if isinstance(r, DualRing) else r
    return {"kind": "null_canonical", "ring": str(r),
            "base": format_poly(canonical_monic_null_base(base)),
            "dual": format_poly(canonical_monic_null_dual(base))}


def cmd_null_enumerate(args):
    r = _base_ring(args.ring)
    n = args.n if args.n is not None else r.order
    sets = enumerate_bounded_null(r, n, primed=True, workers=args.workers, budget=args.budget)
    return {"kind": "null_enumerate", "ring": str(r), "n": n,
            "sizes": {k: str(v) for k, v in sets.sizes.items()},
            "N": [format_poly(f) for f in sets.null],
            "N_prime": [format_poly(f) for f in sets.primed_null]}


def cmd_perm_check(args):
    r = parse_ring(args.ring)
    f = parse_poly(args.poly, r)
    v = is_perm(f, r if isinstance(r, DualRing) else None)
    return {"kind": "perm_check", "ring": str(r), "poly": format_poly(f),
            "is_permutation": v.is_permutation, "criterion_path": v.criterion_path,
            "witness": _witness(v, r)}


def _table_arg(ring, text, flag):
    vals = [ring.parse_element(t) for t in _split_top(text)]
    if len(vals) != ring.order:
        raise UsageError(f"{flag} needs {ring.order} values, got {len(vals)}")
    return FunctionTable(ring, vals)


def _split_top(text):
    """Split on commas that are not inside brackets or parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += ch in "[("
        depth -= ch in "])"
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [t.strip() for t in out]


def cmd_pair_construct(args):
    r = _base_ring(args.ring)
    F = _table_arg(r, args.F, "--F")
    G = _table_arg(r, args.G, "--G")
    f = construct_pair_field(F, G)
    ok = induce(f, r) == F and induce(derivative(f), r) == G
    return {"kind": "pair_construct", "ring": str(r), "poly": format_poly(f),
            "degree": f.degree if f.degree >= 0 else None, "verified": ok}


def _count_payload(args, ring, k, quantity, method):
    fields = {"spec": str(ring), "k": k, "quantity": quantity, "method": method, "budget": args.budget}

    def compute():
        rep = counting.count(ring, k, quantity, method, workers=args.workers, budget=args.budget)
        return rep.to_dict()

    return _cached(args, dict(fields, command="count"), compute)


def cmd_count(args):
    ring, k = _ring_with_k(args)
    return _count_payload(args, ring, k, args.quantity, args.method)


def cmd_verify(args):
    ring, k = _ring_with_k(args)
    fields = {"spec": str(ring), "k": k, "budget": args.budget, "command": "verify"}

    def compute():
        reps = counting.verify_identities(ring, k, workers=args.workers, budget=args.budget)
        return [r.to_dict() for r in reps]

    return _cached(args, fields, compute)


def _row(report):
    seconds = sum(report.get("seconds", {}).values())
    match = report.get("match")
    return {"ring": report["ring"], "k": report["k"], "quantity": report["quantity"],
            "formula": "" if report.get("formula") is None else report["formula"],
            "enum": "" if report.get("enum") is None else report["enum"],
            "match": "" if match is None else str(match).lower(), "seconds": f"{seconds:.6f}"}


def load_sweep_config(path):
    with open(path) as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict) or "rings" not in cfg:
        raise UsageError(f"{path}: config must be an object with a 'rings' list")
    ks = cfg.get("k", [1])
    if isinstance(ks, int):
        ks = [ks]
    return {"rings": list(cfg["rings"]), "k": list(ks),
            "quantities": list(cfg.get("quantities", ["functions", "perms", "stab"])),
            "method": cfg.get("method", "both"), "budget": cfg.get("budget")}


def cmd_sweep(args):
    cfg = load_sweep_config(args.rings)
    if cfg["budget"] is not None and not args.budget_given:
        args.budget = int(cfg["budget"])
    rows = []
    for spec in cfg["rings"]:
        for k in cfg["k"]:
            for quantity in cfg["quantities"]:
                try:
                    ring = _base_ring(spec)
                    rows.append(_row(_count_payload(args, ring, k, quantity, cfg["method"])))
                except DualPolyError as exc:
                    rows.append({"ring": spec, "k": k, "quantity": quantity, "formula": "",
                                 "enum": f"error:{exc.code}", "match": "", "seconds": ""})
    return {"kind": "sweep", "rows": rows}


# -- output --------------------------------------------------------------------

def _to_csv(payload):
    if isinstance(payload, dict) and payload.get("kind") == "sweep":
        rows = payload["rows"]
    elif isinstance(payload, list):
        rows = [_row(r) for r in payload]
    elif isinstance(payload, dict) and "quantity" in payload:
        rows = [_row(payload)]
    else:
        raise UsageError("csv output is only available for count, verify and sweep")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _to_text(payload):
    if isinstance(payload, dict) and payload.get("kind") == "sweep":
        return _to_csv(payload)
    items = payload if isinstance(payload, list) else [payload]
    lines = []
    for item in items:
        lines.append("  ".join(f"{k}={v}" for k, v in item.items() if k != "kind"))
    return "\n".join(lines) + "\n"


def render(payload, fmt):
    if fmt == "csv":
        return _to_csv(payload)
    if fmt == "text":
        return _to_text(payload)
    if isinstance(payload, dict) and payload.get("kind") == "sweep" and fmt == "json":
        return json.dumps(payload["rows"], indent=2) + "\n"
    return json.dumps(payload, indent=2) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help=f"max candidates per enumeration (default {DEFAULT_BUDGET})")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--cache-dir", help=f"result cache directory (env {CACHE_ENV})")

    p = argparse.ArgumentParser(prog="dualpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring").add_subparsers(dest="action", required=True)
    a = ring.add_parser("info", parents=[common])
    a.add_argument("--ring", required=True)
    a.set_defaults(func=cmd_ring_info)

    null = sub.add_parser("null").add_subparsers(dest="action", required=True)
    a = null.add_parser("check", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--poly", required=True)
    a.set_defaults(func=cmd_null_check)
    a = null.add_parser("canonical", parents=[common])
    a.add_argument("--ring", required=True)
    a.set_defaults(func=cmd_null_canonical)
    a = null.add_parser("enumerate", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--n", type=int, help="degree bound (default |R|)")
    a.set_defaults(func=cmd_null_enumerate)

    perm = sub.add_parser("perm").add_subparsers(dest="action", required=True)
    a = perm.add_parser("check", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--poly", required=True)
    a.set_defaults(func=cmd_perm_check)

    pair = sub.add_parser("pair").add_subparsers(dest="action", required=True)
    a = pair.add_parser("construct", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--F", required=True, help="comma separated values of [f]")
    a.add_argument("--G", required=True, help="comma separated values of [f']")
    a.set_defaults(func=cmd_pair_construct)

    a = sub.add_parser("count", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--k", type=int)
    a.add_argument("--quantity", choices=("functions", "perms", "stab"), required=True)
    a.add_argument("--method", choices=("formula", "enum", "both"), default="both")
    a.set_defaults(func=cmd_count)

    a = sub.add_parser("verify", parents=[common])
    a.add_argument("--ring", required=True)
    a.add_argument("--k", type=int)
    a.set_defaults(func=cmd_verify)

    a = sub.add_parser("sweep", parents=[common])
    a.add_argument("--rings", required=True, help="JSON config file")
    a.set_defaults(func=cmd_sweep)
    return p


def _emit_error(exc_code, message):
    sys.stderr.write(json.dumps({"error": exc_code, "message": message}) + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.budget_given = args.budget is not None
    if args.budget is None:
        args.budget = DEFAULT_BUDGET
    fmt = args.format or ("csv" if args.command == "sweep" else "json")
    try:
        text = render(args.func(args), fmt)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _emit_error("usage", str(exc))
        return 2
    except DualPolyError as exc:
        _emit_error(exc.code, str(exc))
        return 1
    except OSError as exc:
        _emit_error("io", str(exc))
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
