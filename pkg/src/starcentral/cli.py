"""Command line front end.

Exit codes: 0 when the verdict holds (or the command simply succeeded), 1 when
it fails, 2 on a polynomial parse error, 3 on a configuration error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List

from . import catalog
from .checker import CheckConfig, is_central, is_identity
from .grammar import ParseError, format_poly, parse_poly
from .m11 import TruncationError
from .membership import GeneratorSet, is_member
from .membership import DegreeBudgetExceeded as MemberBudget
from .polyalg import CharacteristicError, NotMultihomogeneous
from .scalars import RingConfig
from .structure import DegreeBudgetExceeded, leading_proper_part, pbw_decompose, rank
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CONFIG = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _ring(args) -> RingConfig:
    try:
        return RingConfig(args.char)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------- commands

def cmd_check(args) -> int:
    ring = _ring(args)
    f = parse_poly(args.poly, ring)
    try:
        cfg = CheckConfig(args.char, args.strategy, args.seed, args.truncation)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    report = is_identity(f, cfg) if args.kind == "identity" else is_central(f, cfg)
    word = "an identity" if args.kind == "identity" else "central"
    lines = [f"{format_poly(f)}: {'holds' if report.holds else 'fails'} "
             f"({'is' if report.holds else 'not'} {word}; strategy {report.strategy}, "
             f"truncation {report.truncation}, {report.completeness})"]
    if report.witness is not None:
        for x, v in sorted(report.witness.items()):
            lines.append(f"  {x} -> {v}")
        lines.append(f"  value {report.value}")
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.truncation is not None and args.truncation < 1:
        raise ConfigError("truncation must be at least 1")
    _ring(args)
    report = run_suite(args.char, args.seed, args.strategy, args.truncation, args.only)
    if args.json:
        print(report.to_json(timings=args.timings))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_parse(args) -> int:
    f = parse_poly(args.poly, _ring(args))
    text = format_poly(f)
    again = format_poly(parse_poly(text, f.ring))
    payload = {"schema": "starcentral/parse/1", "input": args.poly, "canonical": text,
               "fixed_point": again == text}
    _emit(args, payload, text)
    return EXIT_OK if again == text else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = [(e.name, e.status, format_poly(e.polynomial)) for e in catalog.entries()]
        payload = {"schema": "starcentral/catalog/1",
                   "entries": [{"name": n, "status": s, "polynomial": p} for n, s, p in rows],
                   "families": catalog.NAMES}
        width = max(len(n) for n, _, _ in rows)
        text = "\n".join(f"{n:<{width}}  {s:<8}  {p}" for n, s, p in rows)
        text += "\n\nfamilies: " + " ".join(catalog.NAMES)
        _emit(args, payload, text)
        return EXIT_OK
    if not args.name:
        raise ConfigError("catalog get needs a name")
    try:
        f = catalog.get(args.name, *args.params)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    text = format_poly(f)
    _emit(args, {"schema": "starcentral/catalog-entry/1", "name": args.name,
                 "params": args.params, "polynomial": text}, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    f = parse_poly(args.poly, _ring(args))
    dec = pbw_decompose(f, args.max_degree)
    frame = [str(x) for x in dec.frame]
    entries = [{"exponents": list(a), "proper": format_poly(w)} for a, w in dec.entries]
    lines = [f"frame: {', '.join(frame) or '(none)'}"]
    lines += [f"{tuple(a)}: {format_poly(w)}" for a, w in dec.entries]
    _emit(args, {"schema": "starcentral/pbw/1", "frame": frame, "entries": entries},
          "\n".join(lines))
    return EXIT_OK


def cmd_rank(args) -> int:
    f = parse_poly(args.poly, _ring(args))
    if not f:
        raise ConfigError("the zero polynomial has no rank")
    a = rank(f, args.max_degree)
    w = leading_proper_part(f, args.max_degree)
    dec = pbw_decompose(f, args.max_degree)
    payload = {"schema": "starcentral/rank/1", "frame": [str(x) for x in dec.frame],
               "rank": list(a), "leading_proper_part": format_poly(w)}
    _emit(args, payload, f"rank {tuple(a)}\nleading proper part {format_poly(w)}")
    return EXIT_OK


_REF = re.compile(r"^([A-Za-z]+)(\d*)$")


def _load_gens(spec: str, mode: str) -> GeneratorSet:
    """``[space:|ideal:]REF``: a file of polynomials or comma-separated catalog names."""
    label = spec
    if ":" in spec and spec.split(":", 1)[0] in ("space", "ideal"):
        prefix, spec = spec.split(":", 1)
        mode = prefix
    star_mode = "star_space" if mode == "space" else "star_ideal"
    path = Path(spec)
    if path.is_file():
        polys = [parse_poly(line.split("#", 1)[0])
                 for line in path.read_text().splitlines() if line.split("#", 1)[0].strip()]
        return GeneratorSet(polys, star_mode, label)
    polys = []
    for ref in spec.split(","):
        ref = ref.strip()
        if ref == "I":
            polys += [catalog.make_H(k) for k in range(1, 11)]
            continue
        if ref == "V":
            polys += [catalog.make_central("a"), catalog.make_central("b")]
            continue
        m = _REF.match(ref)
        if not m:
            raise ConfigError(f"cannot read generator reference {ref!r}")
        name, num = m.groups()
        try:
            polys.append(catalog.get(name, *([int(num)] if num else [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"{ref}: {exc}") from exc
    return GeneratorSet(polys, star_mode, label)


def cmd_member(args) -> int:
    target = parse_poly(args.target, _ring(args))
    gensets = [_load_gens(g, args.mode) for g in args.gens]
    cert = is_member(target, *gensets, cap=args.max_degree)
    if cert is None:
        payload = {"schema": "starcentral/membership-certificate/1", "found": False,
                   "target": format_poly(target),
                   "meaning": "outside the span of the enumerated consequences"}
        _emit(args, payload, "not found: outside the span of the enumerated consequences")
        return EXIT_FAIL
    payload = cert.to_dict()
    payload["found"] = True
    lines = [f"found: {len(cert.terms)} terms, recombines exactly"]
    for t in cert.terms:
        subs = ", ".join(f"{x}->{format_poly(p)}" for x, p in sorted(t.substitution.items()))
        frame = ""
        if t.left or t.right:
            frame = f" framed by {''.join(map(str, t.left)) or '1'} .. {''.join(map(str, t.right)) or '1'}"
        lines.append(f"  {t.coefficient} * {t.generator_set}[{t.generator_index}]({subs}){frame}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="0 or an odd prime")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    checking = argparse.ArgumentParser(add_help=False)
    checking.add_argument("--strategy", choices=["exhaustive", "symbolic", "random"],
                          default="exhaustive")
    checking.add_argument("--seed", type=int, default=0)
    checking.add_argument("--truncation", type=int, default=None,
                          help="number of Grassmann generators (default: automatic)")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--max-degree", type=int, default=7)

    p = argparse.ArgumentParser(prog="starcentral", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common, checking], help="identity or centrality test")
    c.add_argument("kind", choices=["identity", "central"])
    c.add_argument("poly")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify-paper", parents=[common, checking], help="run the full claim suite")
    v.add_argument("--only", default=None, help="run claims whose name starts with this prefix")
    v.add_argument("--timings", action="store_true", help="include timings in JSON output")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("parse", parents=[common], help="print the canonical form")
    r.add_argument("poly")
    r.set_defaults(func=cmd_parse)

    k = sub.add_parser("catalog", parents=[common], help="named polynomials")
    k.add_argument("action", choices=["list", "get"])
    k.add_argument("name", nargs="?")
    k.add_argument("params", nargs="*", type=int)
    k.set_defaults(func=cmd_catalog)

    d = sub.add_parser("decompose", parents=[common, degree], help="y-monomials times proper parts")
    d.add_argument("poly")
    d.set_defaults(func=cmd_decompose)

    n = sub.add_parser("rank", parents=[common, degree], help="rank and leading proper part")
    n.add_argument("poly")
    n.set_defaults(func=cmd_rank)

    m = sub.add_parser("member", parents=[common, degree], help="membership with a certificate")
    m.add_argument("--target", required=True)
    m.add_argument("--gens", action="append", required=True,
                   help="file or catalog names (e.g. 'b', 'I', 'space:a,b'); repeatable")
    m.add_argument("--mode", choices=["space", "ideal"], default="space")
    m.set_defaults(func=cmd_member)
    return p


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, TruncationError, CharacteristicError, DegreeBudgetExceeded,
            MemberBudget, NotMultihomogeneous) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
