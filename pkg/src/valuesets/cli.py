"""Command-line front end.

Subcommands: eval, decompose, analyze, spectrum, construct, verify.
Output is JSON (one record per line) or TSV with a header row.

Exit codes: 0 success (including verification records with
``"match": false``), 2 usage or validation error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

from . import carlitz, constructions, family
from .errors import BudgetExceeded, ValueSetError
from .gf import FieldCtx

EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    p: int
    r: int = 1
    modulus: list[int] | None = None
    command: str = ""
    params: dict = field(default_factory=dict)
    format: str = "json"
    seed: int = 0
    budget: int = family.DEFAULT_BUDGET

    def field(self) -> FieldCtx:
        return FieldCtx(self.p, self.r, self.modulus)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_elements(ctx: FieldCtx, text: str) -> list:
    """``"4,5,-1"`` or, for r > 1, ``"[1,2],[0,3],4"``; ints are reduced mod p."""
    try:
        raw = json.loads("[" + text + "]")
    except json.JSONDecodeError:
        raise UsageError(f"cannot parse element list {text!r}") from None
    return [ctx(v) for v in raw]


def _elements_arg(ctx, cfg, name, required=True):
    text = cfg.params.get(name)
    if text is None:
        if required:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        return None
    return parse_elements(ctx, text)


def _single(ctx, cfg, name):
    vals = _elements_arg(ctx, cfg, name, required=False)
    if vals is None:
        return None
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single element")
    return vals[0]


def _linear_map(ctx, cfg) -> carlitz.LinearMap:
    vals = _elements_arg(ctx, cfg, "g")
    if len(vals) != 2:
        raise UsageError("--g takes 'a,b'")
    return carlitz.LinearMap(*vals)


# -- commands -------------------------------------------------------------

def cmd_eval(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    chain = carlitz.CarlitzChain(ctx, tuple(_elements_arg(ctx, cfg, "chain")))
    plus = cfg.params.get("plus_x")
    if cfg.params.get("all"):
        points = ctx.elements()
    else:
        x = _single(ctx, cfg, "x")
        if x is None:
            raise UsageError("give --x or --all")
        points = [x]
    rows = []
    for d in points:
        v = carlitz.eval_chain(chain, d)
        rows.append((d, v + d if plus else v))
    if not cfg.params.get("all"):
        return [str(rows[0][1]) if cfg.format == "tsv" else _dump(rows[0][1].to_json())]
    if cfg.format == "tsv":
        return ["x\tvalue"] + [f"{d}\t{v}" for d, v in rows]
    return [_dump({"x": d.to_json(), "value": v.to_json()}) for d, v in rows]


def cmd_decompose(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    g = _linear_map(ctx, cfg)
    poles = carlitz.PoleSet(tuple(_elements_arg(ctx, cfg, "poles")))
    chain, trace = carlitz.decompose_with_trace(g, poles)
    if cfg.format == "tsv":
        rows = ["step\tvalue"]
        for line in trace.lines():
            k, v = line.split(" = ")
            rows.append(f"{k}\t{v}")
        rows.append("chain\t" + ",".join(map(str, chain.c)))
        return rows
    return [_dump({"field": ctx.to_json(), "g": g.to_json(), "poles": poles.to_json(),
                   "chain": [c.to_json() for c in chain.c], "trace": trace.to_json()})]


def cmd_analyze(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    if cfg.params.get("chain"):
        chain = carlitz.CarlitzChain(ctx, tuple(_elements_arg(ctx, cfg, "chain")))
        validity = carlitz.validate_chain(chain)
        if not validity:
            raise UsageError("chain is not in the family: " + "; ".join(validity.reasons()))
        g, poles = carlitz.linear_part(chain), carlitz.poles(chain)
    else:
        g = _linear_map(ctx, cfg)
        poles = carlitz.PoleSet(tuple(_elements_arg(ctx, cfg, "poles")))
        chain = carlitz.decompose(g, poles)
    inst = family.build_instance(ctx, g, poles)
    prof = inst.profile
    rec = {
        "field": ctx.to_json(),
        "g": g.to_json(),
        "poles": poles.to_json(),
        "chain": [c.to_json() for c in chain.c],
        "profile": prof.to_json(),
        "F_is_permutation": family.is_permutation(inst.F_table),
        "complete_mapping": family.is_complete_mapping(inst),
        "sum_of_values": family.sum_of_values(inst.F_table).to_json(),
    }
    if cfg.params.get("interpolate"):
        rec["f_coefficients"] = [c.to_json() for c in family.interpolate(inst.f_table)]
    if cfg.format == "tsv":
        return ["size\tcounts\tmax_count\tF_is_permutation\tcomplete_mapping",
                f"{prof.size}\t{prof.render_counts()}\t{prof.max_count}\t"
                f"{rec['F_is_permutation']}\t{rec['complete_mapping']}"]
    return [_dump(rec)]


def cmd_spectrum(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    n = cfg.params.get("n")
    if n is None:
        raise UsageError("--n is required")
    report = family.enumerate_spectrum(
        ctx, n, cfg.params.get("mode") or "exhaustive",
        samples=cfg.params.get("samples") or 10_000, seed=cfg.seed,
        budget=cfg.budget, workers=cfg.params.get("workers") or 1)
    if cfg.format == "tsv":
        return report.tsv().rstrip("\n").split("\n")
    return [_dump(r) for r in report.records()]


def _family_params(ctx, cfg) -> dict:
    out = {}
    for name in ("c", "d", "a", "b", "alpha"):
        v = _single(ctx, cfg, name)
        if v is not None:
            out[name] = v
    if cfg.params.get("n") is not None:
        out["n"] = cfg.params["n"]
    return out


def _report_lines(cfg, reports) -> list[str]:
    if cfg.format == "tsv":
        rows = ["family\tparams\tsize\tcounts\tmatch\tmismatches"]
        for r in reports:
            rows.append("\t".join([
                r.family, _dump(r.params), str(r.observed.size),
                r.observed.render_counts(), str(r.match).lower(), " | ".join(r.mismatches),
            ]))
        return rows
    return [_dump(r.to_json()) for r in reports]


def cmd_construct(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    fam = cfg.params.get("family")
    con = constructions.construct(fam, ctx, **_family_params(ctx, cfg))
    return _report_lines(cfg, [constructions.verify(con)])


def cmd_verify(cfg: RunConfig) -> list[str]:
    ctx = cfg.field()
    fam = cfg.params.get("family")
    params = _family_params(ctx, cfg)
    if cfg.params.get("sweep_b"):
        if fam not in ("thm7ii", "thm7iii", "thm7iv"):
            raise UsageError(f"--sweep-b applies to thm7ii, thm7iii, thm7iv, not {fam}")
        cons = constructions.sweep(fam, ctx, n=params.get("n"), only_b=True, a=params.get("a"))
    elif cfg.params.get("sweep"):
        cons = constructions.sweep(fam, ctx, n=params.get("n"))
    else:
        cons = [constructions.construct(fam, ctx, **params)]
    return _report_lines(cfg, [constructions.verify(c) for c in cons])


COMMANDS = {
    "eval": cmd_eval,
    "decompose": cmd_decompose,
    "analyze": cmd_analyze,
    "spectrum": cmd_spectrum,
    "construct": cmd_construct,
    "verify": cmd_verify,
}


# -- argument parsing -----------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="field characteristic")
    common.add_argument("--r", type=int, default=1, help="extension degree")
    common.add_argument("--modulus", help="monic modulus coefficients, low degree first")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=family.DEFAULT_BUDGET,
                        help="max table evaluations for spectrum")

    parser = argparse.ArgumentParser(prog="valuesets", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a chain")
    p.add_argument("--chain", required=True)
    p.add_argument("--x")
    p.add_argument("--all", action="store_true")
    p.add_argument("--plus-x", action="store_true", help="print F = P_n + x instead")

    p = sub.add_parser("decompose", parents=[common], help="chain from g and poles")
    p.add_argument("--g", required=True, help="a,b")
    p.add_argument("--poles", required=True)

    p = sub.add_parser("analyze", parents=[common], help="value profile of one instance")
    p.add_argument("--chain")
    p.add_argument("--g")
    p.add_argument("--poles")
    p.add_argument("--interpolate", action="store_true")

    p = sub.add_parser("spectrum", parents=[common], help="attained |V_F| for F_{q,n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1)

    for name, helptext in (("construct", "one explicit family member"),
                           ("verify", "check families against brute force")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--family", required=True, choices=sorted(constructions.FAMILIES))
        p.add_argument("--n", type=int)
        for param in ("c", "d", "a", "b", "alpha"):
            p.add_argument(f"--{param}")
        if name == "verify":
            p.add_argument("--sweep", action="store_true")
            p.add_argument("--sweep-b", action="store_true")
    return parser


_NEGATIVE_VALUE = re.compile(r"^-[\d\[]")


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "--g -1,2" as two options
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def parse_config(argv: list[str]) -> RunConfig:
    args = _build_parser().parse_args(_join_negative_values(list(argv)))
    ns = vars(args)
    modulus = None
    if ns.pop("modulus"):
        modulus = [int(c) for c in args.modulus.split(",")]
    cfg = RunConfig(
        p=ns.pop("p"), r=ns.pop("r"), modulus=modulus, command=ns.pop("command"),
        format=ns.pop("format"), seed=ns.pop("seed"), budget=ns.pop("budget"),
    )
    cfg.params = ns
    return cfg


def run(cfg: RunConfig) -> list[str]:
    return COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        lines = run(cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueSetError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
