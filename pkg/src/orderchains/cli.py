"""Command-line entry point: ``orderchains <subcommand> ...``.

Exit codes: 0 pass, 1 verdict or certificate failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
from dataclasses import dataclass

from .cardinals import DEFAULT_CHAIN, CardinalChain, CardinalError
from .chains import BuildRefused, bitset_to_set, build_chain, certify, to_hex
from .elements import LazySeq, NotRealizableError, code_to_json, elements
from .finite import (
    CapExceededError,
    check_claim1,
    day_check,
    enumerate_max_chains,
    init_of_finite_order,
    is_maximal_chain,
)
from .props import InvalidTargetError, Target, attrs, check
from .terms import NoEndpointError, ParseError, parse, render
from .topology import verify_iso

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    cardinals: str | None = None
    term: str | None = None
    target: str | None = None
    n: int = 16
    s: int | None = None
    samples: int = 8
    out: str | None = None
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("n must be at least 1")

    def chain(self) -> CardinalChain:
        if not self.cardinals:
            return DEFAULT_CHAIN
        return CardinalChain.parse(self.cardinals)


# --------------------------------------------------------------------------
# commands; each returns (report, exit code)

def cmd_analyze(cfg: RunConfig):
    ch = cfg.chain()
    t = parse(cfg.term, ch)
    a = attrs(t, ch)
    return {"term": render(t), "chain": str(ch), "attrs": a.to_json()}, EXIT_OK


def _target(cfg: RunConfig, ch: CardinalChain) -> Target:
    return Target.parse(cfg.target, ch) if cfg.target else Target.omega(ch)


def cmd_characterize(cfg: RunConfig):
    ch = cfg.chain()
    t = parse(cfg.term, ch)
    v = check(t, _target(cfg, ch))
    return {"term": render(t), **v.to_json()}, EXIT_OK if v.passed else EXIT_FAIL


def cmd_build(cfg: RunConfig):
    ch = cfg.chain()
    t = parse(cfg.term, ch)
    target = _target(cfg, ch)
    try:
        h = build_chain(t, target, ch)
    except BuildRefused as e:
        return {"term": render(t), "refused": True, "verdict": e.verdict.to_json()}, EXIT_FAIL
    except NotRealizableError as e:
        v = check(t, target)
        return {"term": render(t), "refused": True, "reason": str(e), "verdict": v.to_json()}, EXIT_FAIL
    n = cfg.n
    rng = random.Random(cfg.seed)
    pool = LazySeq(elements(t)).prefix(4 * n)
    sampled = rng.sample(pool, min(cfg.samples, len(pool)))

    def rows(points):
        out = []
        for a in points:
            bits = h.trace(a, n)
            out.append({"code": code_to_json(a), "trace": to_hex(bits, n),
                        "indices": sorted(bitset_to_set(bits))})
        return out

    cert = certify(h, n)
    report = {
        "term": render(t),
        "n": n,
        "d_points": rows(h.denum.enumerate(n)),
        "sampled_points": rows(sampled),
        "certificate": cert.to_json(),
    }
    return report, EXIT_OK if cert.passed else EXIT_FAIL


def cmd_oracle(cfg: RunConfig):
    n = cfg.n
    chains = enumerate_max_chains(n)
    inits = {init_of_finite_order(p) for p in _perms(n)}
    report = {
        "pn": n,
        "chains": len(chains),
        "expected": math.factorial(n),
        "all_maximal": all(is_maximal_chain(c) for c in chains),
        "claim1_pass": sum(check_claim1(c) for c in chains),
        "day_pass": sum(day_check(c) for c in chains),
        "init_bijection": inits == set(chains),
    }
    report["passed"] = (
        report["chains"] == report["expected"]
        and report["all_maximal"]
        and report["claim1_pass"] == report["day_pass"] == len(chains)
        and report["init_bijection"]
    )
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


def _perms(n):
    return itertools.permutations(range(n))


def cmd_topology(cfg: RunConfig):
    if cfg.s is None:
        raise UsageError("topology needs -s")
    report = verify_iso(cfg.n, cfg.s)
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


COMMANDS = {
    "analyze": cmd_analyze,
    "characterize": cmd_characterize,
    "build": cmd_build,
    "oracle": cmd_oracle,
    "topology": cmd_topology,
}


# --------------------------------------------------------------------------
# argument parsing and output

def _add_common(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--cardinals", default=d(None), help='cardinal chain, e.g. "fin<aleph0<l<+l+<k"')
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default=d("json"))
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled points")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderchains",
        description="Order types of maximal chains in [kappa]^{lambda|mu}.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        return p

    p = add("analyze", "order attributes of a term")
    p.add_argument("term")

    p = add("characterize", "verdict for a target [k]^{l|m}")
    p.add_argument("term")
    p.add_argument("--target", default=None, help="default [w]^{w|w}")

    p = add("build", "trace dump and prefix certificate")
    p.add_argument("term")
    p.add_argument("--target", default=None)
    p.add_argument("-n", type=int, default=16, help="prefix size of D")
    p.add_argument("--samples", type=int, default=8, help="extra sampled points in the dump")

    p = add("oracle", "maximal chains of P(n) by brute force")
    p.add_argument("--pn", dest="n", type=int, required=True)

    p = add("topology", "orbit of P(S)+{X} versus s-subsets")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    return parser


def _to_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    args = vars(ns)
    fmt = args.get("fmt", "json")
    try:
        cfg = RunConfig(
            command=args["command"],
            cardinals=args.get("cardinals"),
            term=args.get("term"),
            target=args.get("target"),
            n=16 if args.get("n") is None else args["n"],
            s=args.get("s"),
            samples=args.get("samples", 8),
            out=args.get("out"),
            fmt=fmt,
            seed=args.get("seed", 0),
        )
        report, code = COMMANDS[cfg.command](cfg)
    except (UsageError, ParseError, CardinalError, InvalidTargetError, NoEndpointError,
            CapExceededError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(report, indent=2) if fmt == "json" else _to_text(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
