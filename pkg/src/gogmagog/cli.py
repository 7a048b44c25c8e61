"""Command-line interface.

Subcommands: ``enumerate``, ``convert``, ``stats``, ``dist``, ``poset``,
``poset-check`` and ``verify-all``.  Data goes to stdout, diagnostics to
stderr; output is deterministic for identical inputs.  Exit codes: 0 success,
1 verification failure, 2 usage or input error.  The ``TSSCPP_MAX_N``
environment variable overrides every enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import bijections, claims, enumeration, orders, statistics
from .enumeration import CapExceeded, FamilyId
from .poset import SizeCap
from .triangles import (
    Permutation,
    ValidationError,
    from_json_dict,
    to_json,
    to_json_dict,
)

__all__ = ["main", "Config"]


@dataclass(frozen=True)
class Config:
    """Resolved run configuration; the CLI is always deterministic."""

    max_n: dict = field(default_factory=dict)
    output: str = "jsonl"
    deterministic: bool = True

    @classmethod
    def from_environment(cls):
        caps = dict(enumeration.DEFAULT_CAPS)
        env = os.environ.get(enumeration.ENV_CAP)
        if env is not None:
            caps = {family: int(env) for family in caps}
        return cls(max_n=caps)

    def cap(self, family):
        return self.max_n[FamilyId(family)]


_KIND_ALIASES = {
    "asm": "asm",
    "monotone": "monotone_triangle",
    "monotone_triangle": "monotone_triangle",
    "magog": "magog_triangle",
    "magog_triangle": "magog_triangle",
    "boolean": "boolean_triangle",
    "boolean_triangle": "boolean_triangle",
    "nilp": "nilp_nest",
    "nilp_nest": "nilp_nest",
    "tsscpp": "plane_partition",
    "plane_partition": "plane_partition",
    "fundamental": "fundamental_domain",
    "fundamental_domain": "fundamental_domain",
    "permutation": "permutation",
}

# Conversion graph: kind -> [(kind, map)].  The permutation bridge between
# the matrix side and the plane-partition side is only total on permutation
# objects; elsewhere it raises.
_EDGES = {
    "asm": [
        ("monotone_triangle", bijections.asm_to_monotone),
        ("permutation", bijections.asm_to_permutation),
    ],
    "monotone_triangle": [
        ("asm", bijections.monotone_to_asm),
        ("permutation", bijections.monotone_to_permutation),
    ],
    "permutation": [
        ("asm", bijections.permutation_matrix),
        ("monotone_triangle", bijections.permutation_to_monotone),
        ("boolean_triangle", bijections.permutation_to_boolean),
    ],
    "boolean_triangle": [
        ("permutation", bijections.boolean_to_permutation),
        ("fundamental_domain", bijections.fundamental_from_boolean),
        ("nilp_nest", bijections.boolean_to_nilp),
        ("magog_triangle", bijections.boolean_to_magog),
        ("plane_partition", bijections.boolean_to_tsscpp),
    ],
    "magog_triangle": [
        ("fundamental_domain", bijections.fundamental_from_magog),
        ("boolean_triangle", bijections.magog_to_boolean),
    ],
    "fundamental_domain": [
        ("magog_triangle", bijections.magog_from_fundamental),
        ("boolean_triangle", bijections.boolean_from_fundamental),
        ("nilp_nest", bijections.nilp_from_fundamental),
        ("plane_partition", bijections.expand_fundamental),
    ],
    "nilp_nest": [
        ("boolean_triangle", bijections.nilp_to_boolean),
        ("fundamental_domain", bijections.fundamental_from_nilp),
    ],
    "plane_partition": [
        ("fundamental_domain", bijections.fundamental_domain),
        ("boolean_triangle", bijections.tsscpp_to_boolean),
    ],
}


def _conversion_path(source, target):
    """Shortest kind path, BFS in fixed edge order for determinism."""
    if source == target:
        return []
    frontier = [(source, [])]
    seen = {source}
    while frontier:
        nxt = []
        for kind, path in frontier:
            for other, func in _EDGES.get(kind, ()):
                if other in seen:
                    continue
                step = path + [func]
                if other == target:
                    return step
                seen.add(other)
                nxt.append((other, step))
        frontier = nxt
    raise ValidationError(f"no conversion from {source} to {target}")


def convert_object(obj, target_kind):
    source = obj.to_json_dict()["kind"]
    for func in _conversion_path(source, _KIND_ALIASES[target_kind]):
        obj = func(obj)
    return obj


def _parse_value(kind, text):
    text = text.strip()
    if text.startswith("{"):
        return from_json_dict(json.loads(text))
    if kind is None:
        raise ValidationError("non-JSON input needs an explicit kind")
    if _KIND_ALIASES[kind] == "permutation":
        return Permutation.from_one_line(text)
    raise ValidationError(f"{kind} objects must be given as JSON")


_POSET_BUILDERS = {
    "An": orders.build_An,
    "Tn": orders.build_Tn,
    "TBool": orders.build_TBool,
    "TnPerm": orders.build_Tn_perm,
    "TBoolPerm": orders.build_TBool_perm,
    "weak": orders.build_weak_order,
    "strong": orders.build_strong_bruhat,
    "tamari": orders.build_tamari,
    "catalan": orders.build_catalan_distributive,
    "chains": orders.build_product_of_chains,
    "Pn": orders.build_Pn,
    "Qn": orders.build_Qn,
    "JPn": lambda n: orders.build_Pn(n).order_ideals(),
    "JQn": lambda n: orders.build_Qn(n).order_ideals(),
}


def _object_stats(obj):
    kind = obj.to_json_dict()["kind"]
    if kind == "asm":
        bundle = statistics.stat_bundle(obj)
        return {
            "inversions": bundle.inversion_number,
            "negative_ones": bundle.negative_ones,
            "last_row_one_col": bundle.last_row_one_col,
            "last_col_one_row": bundle.last_col_one_row,
            "is_permutation": bijections.is_permutation_matrix(obj),
        }
    if kind == "permutation":
        return {"inversions": statistics.perm_inversions(obj)}
    if kind == "monotone_triangle":
        return {"strict_diagonal_entries": statistics.strict_diagonal_entries(obj)}
    if kind == "boolean_triangle":
        return {
            "zeros": statistics.boolean_zero_count(obj),
            "last_row_zeros": statistics.boolean_last_row_zeros(obj),
            "lowest_one_last_diagonal": statistics.boolean_lowest_one_last_diagonal(obj),
            "zero_then_one": statistics.zero_then_one_count(obj),
            "is_permutation": bijections.is_permutation_boolean(obj),
        }
    if kind == "magog_triangle":
        return {"is_permutation": bijections.is_permutation_magog(obj)}
    if kind == "plane_partition":
        return {"is_permutation": bijections.is_permutation_tsscpp(obj)}
    # fall back to the boolean encoding
    return _object_stats(convert_object(obj, "boolean"))


def _cmd_enumerate(args, config):
    family = FamilyId(args.family)
    stream = enumeration.generate(family, args.n, max_n=config.cap(family))
    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    for obj in stream:
        print(to_json(obj))
    return 0


def _cmd_convert(args, config):
    obj = _parse_value(args.source, args.value)
    print(to_json(convert_object(obj, args.target)))
    return 0


def _cmd_stats(args, config):
    obj = _parse_value(args.kind, args.value)
    print(json.dumps({"object": to_json_dict(obj), "stats": _object_stats(obj)}))
    return 0


def _cmd_dist(args, config):
    family = FamilyId(args.family)
    counts = statistics.distribution(family, args.n, args.statistic, max_n=config.cap(family))
    print(
        json.dumps(
            {
                "statistic": args.statistic,
                "n": args.n,
                "counts": {str(k): v for k, v in counts.items()},
            }
        )
    )
    return 0


def _cmd_poset(args, config):
    p = _POSET_BUILDERS[args.name](args.n)
    if args.out == "dot":
        print(p.to_dot())
    else:
        print(json.dumps(p.to_json_dict()))
    return 0


def _cmd_poset_check(args, config):
    result = claims.run_claim(args.claim, args.n)
    if result["ok"]:
        print(f"{args.claim} n={args.n}: PASS")
        return 0
    print(json.dumps(result), file=sys.stderr)
    print(f"{args.claim} n={args.n}: FAIL")
    return 1


def _counts_check(n):
    asm = enumeration.count(FamilyId.ASM, n)
    boolean = enumeration.count(FamilyId.BOOLEAN, n)
    return {"claim": "counts", "n": n, "ok": asm == boolean, "asm": asm, "boolean": boolean}


def _factorial_check(n):
    total = enumeration.count(FamilyId.PERMUTATION_BOOLEAN, n)
    expected = 1
    for i in range(2, n + 1):
        expected *= i
    return {"claim": "factorial", "n": n, "ok": total == expected, "count": total}


def _statistics_check(n):
    from .statistics import boolean_stat_triple, perm_inversions

    ok = True
    for p in enumeration.generate(FamilyId.PERMUTATION, n):
        b = bijections.permutation_to_boolean(p)
        zeros, last_row, lowest = boolean_stat_triple(b)
        expected_lowest = None if p.sigma.index(p.n) + 1 == 1 else p.sigma.index(p.n)
        if zeros != perm_inversions(p) or last_row != n - p.sigma[-1] or lowest != expected_lowest:
            ok = False
            break
    return {"claim": "statistics", "n": n, "ok": ok}


def _roundtrip_check(n):
    ok = True
    for b in enumeration.generate(FamilyId.BOOLEAN, n):
        d = bijections.fundamental_from_boolean(b)
        if bijections.boolean_from_fundamental(d) != b:
            ok = False
        if bijections.nilp_to_boolean(bijections.boolean_to_nilp(b)) != b:
            ok = False
        if bijections.magog_to_boolean(bijections.boolean_to_magog(b)) != b:
            ok = False
    for a in enumeration.generate(FamilyId.ASM, n):
        if bijections.monotone_to_asm(bijections.asm_to_monotone(a)) != a:
            ok = False
    return {"claim": "roundtrips", "n": n, "ok": ok}


def _cmd_verify_all(args, config):
    n = args.n
    rows = []
    for k in range(1, n + 1):
        rows.append(_counts_check(k))
        rows.append(_factorial_check(k))
        rows.append(_statistics_check(k))
        rows.append(_roundtrip_check(k))
    for name in claims.claim_names():
        for k in range(2, n + 1):
            rows.append(claims.run_claim(name, k))
    width = max(len(r["claim"]) for r in rows)
    failures = 0
    for r in rows:
        status = "PASS" if r["ok"] else "FAIL"
        print(f"{r['claim']:<{width}}  n={r['n']}  {status}")
        if not r["ok"]:
            failures += 1
            print(json.dumps(r), file=sys.stderr)
    print(f"{len(rows) - failures}/{len(rows)} checks passed")
    return 0 if failures == 0 else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gogmagog",
        description="Matrices, plane partitions, triangles: bijections, statistics, and orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in FamilyId]

    p = sub.add_parser("enumerate", help="stream a family as JSON lines")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--jsonl", action="store_true", help="JSON lines (the default)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("convert", help="convert an object between families")
    p.add_argument("--from", dest="source", required=True, choices=sorted(_KIND_ALIASES))
    p.add_argument("--to", dest="target", required=True, choices=sorted(_KIND_ALIASES))
    p.add_argument("value", help="object JSON, or one-line notation for permutations")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("stats", help="statistics of a single object")
    p.add_argument("--kind", choices=sorted(_KIND_ALIASES))
    p.add_argument("value")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("dist", help="distribution of a statistic over a family")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--statistic", required=True, choices=sorted(statistics.STATISTICS))
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("poset", help="emit a named poset as DOT or JSON")
    p.add_argument("--name", required=True, choices=sorted(_POSET_BUILDERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", choices=("dot", "json"), default="json")
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("poset-check", help="verify one structural claim")
    p.add_argument("--claim", required=True, choices=sorted(claims.claim_names()))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_poset_check)

    p = sub.add_parser("verify-all", help="run the whole claim suite up to n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = Config.from_environment()
    try:
        return args.func(args, config)
    except (ValidationError, CapExceeded, SizeCap, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
