"""Command-line front end.

Exit codes: 0 on success or a computed verdict, 1 when the input fails a
validation check (the witness is printed), 2 on malformed input or usage.
File arguments name a JSON document, or ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from relaxkit import cardinal, cb, coherent, domain, hf, mostowski, order, ordinal
from relaxkit.config import Config
from relaxkit.errors import MalformedCNF, ParseError, RelaxkitError
from relaxkit.order import UNDEFINED

MALFORMED = (ParseError, MalformedCNF)


class UsageError(Exception):
    pass


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return domain.load_json(text)


def _code(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ParseError(f"not a natural number: {text!r}") from None
    if n < 0:
        raise ParseError(f"not a natural number: {text!r}")
    return n


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _config(args) -> Config:
    return Config(
        powerset_bound=args.bound,
        bit_budget=args.budget,
        beth_base=args.base,
        probe_bound=args.probe,
        seed=args.seed,
    )


# Handlers take parsed args and a Config and return (exit code, output lines).

def do_domain_quotient(args, cfg):
    classes, projection = domain.quotient(domain.EqvTable.from_json(_read_json(args.file)))
    lines = ["classes=" + ",".join(classes.labels)]
    lines += [f"{x}={projection[x]}" for x in projection]
    return 0, lines


def do_domain_powerset(args, cfg):
    A = domain.FinDomain.from_json(_read_json(args.file))
    return 0, [h.bitstring() for h in domain.powerset(A, cfg.powerset_bound)]


def do_domain_empty(args, cfg):
    bits = args.bits
    if any(c not in "01" for c in bits):
        raise ParseError(f"expected a bit string, got {bits!r}")
    A = domain.make_domain([str(i) for i in range(len(bits))])
    h = domain.BinFn.from_bits(A, [c == "1" for c in bits])
    return 0, ["empty=" + _bool(domain.is_empty(h))]


def do_domain_union(args, cfg):
    doc = _read_json(args.file)
    try:
        B = domain.make_domain(doc["B"]["labels"])
        fibers = {b: domain.make_domain(f["labels"]) for b, f in doc["fibers"].items()}
    except (KeyError, TypeError, AttributeError):
        raise ParseError('expected {"B": {"labels": [...]}, "fibers": {"b": {"labels": [...]}}}') from None
    union, projection = domain.union_of_fibers(B, fibers)
    return 0, [f"{label}={b} {x}" for label, (b, x) in projection.items()]


def do_cb(args, cfg):
    f, g = cb.from_json(_read_json(args.file))
    result = cb.cantor_bernstein(f, g)
    doc = {"bijection": result.bijection, "cases": result.cases}
    return 0, [json.dumps(doc)]


def _leq_table(doc):
    try:
        return domain.make_domain(doc["labels"]), doc["leq"]
    except (KeyError, TypeError):
        raise ParseError('expected {"labels": [...], "leq": [[...], ...]}') from None


def _well_order(doc) -> order.WellOrder:
    if isinstance(doc, dict) and "leq" in doc:
        return order.check_well_order(*_leq_table(doc))
    return order.WellOrder.from_json(doc)


def do_worder_check(args, cfg):
    W = order.check_well_order(*_leq_table(_read_json(args.file)))
    return 0, ["ok", "order=" + ",".join(W.elements())]


def do_worder_iso(args, cfg):
    doc = _read_json(args.file)
    try:
        A, B = _well_order(doc["A"]), _well_order(doc["B"])
    except (KeyError, TypeError):
        raise ParseError('expected {"A": {...}, "B": {...}}') from None
    f = order.order_isomorphism(A, B)
    full = [name for name, ok in (("domain", len(f) == len(A)), ("image", len(f) == len(B))) if ok]
    return 0, [f"{a}={b}" for a, b in f.items()] + ["full=" + ",".join(full)]


def do_worder_product(args, cfg):
    A = _well_order(_read_json(args.file))
    d = len(A) if args.d is None else args.d
    return 0, list(order.canonical_product(A, d).elements())


def do_worder_type(args, cfg):
    return 0, [f"type={order.order_type(_well_order(_read_json(args.file)))}"]


def do_worder_choice(args, cfg):
    A = domain.FinDomain.from_json(_read_json(args.file))
    W = order.well_order_via_choice(A, order.least_unused_choice)
    return 0, ["order=" + ",".join(W.elements())]


RECURSION_RULES: dict[str, Callable] = {
    # value = number of elements already defined, i.e. the rank
    "rank": lambda f, a: len(f),
    # value = 1 + sum of earlier values
    "sum": lambda f, a: 1 + sum(f.values()),
    "fib": lambda f, a: 1 if len(f) < 2 else f.values_list()[-1] + f.values_list()[-2],
}


def do_worder_recurse(args, cfg):
    A = _well_order(_read_json(args.file))
    base = RECURSION_RULES[args.rule]
    stop = args.stop

    def rule(f, a):
        if stop is not None and len(f) >= stop:
            return UNDEFINED
        return base(f, a)

    seed = {}
    if args.seed_values:
        values = [int(v) for v in args.seed_values.split(",")]
        seed = dict(zip(A.elements(), values))
        f = order.recursive_extension(A, rule, seed)
    else:
        f = order.recursion(A, rule)
    return 0, [f"{a}={v}" for a, v in f.items()]


def _ord(text):
    return ordinal.parse_ordinal(text)


def do_ord_cmp(args, cfg):
    return 0, [ordinal.ord_cmp(_ord(args.a), _ord(args.b))]


def do_ord_add(args, cfg):
    return 0, [ordinal.format_ordinal(ordinal.ord_add(_ord(args.a), _ord(args.b)))]


def do_ord_mul(args, cfg):
    return 0, [ordinal.format_ordinal(ordinal.ord_mul(_ord(args.a), _ord(args.b)))]


def do_ord_sup(args, cfg):
    return 0, [ordinal.format_ordinal(ordinal.ord_sup([_ord(x) for x in args.xs]))]


def do_ord_classify(args, cfg):
    return 0, [ordinal.classify(_ord(args.a))]


def do_ord_wpow(args, cfg):
    return 0, [ordinal.format_ordinal(ordinal.omega_pow(_ord(args.a)))]


def do_pairidx(args, cfg):
    return 0, [str(ordinal.pair_index(_code(args.a), _code(args.b)))]


def do_unpair(args, cfg):
    a, b = ordinal.unpair(_code(args.n))
    return 0, [f"a={a} b={b}"]


def do_cardinal_diag(args, cfg):
    doc = _read_json(args.file)
    try:
        A = domain.make_domain(doc["labels"])
        p = {a: domain.BinFn.from_bits(A, bits) for a, bits in doc["p"].items()}
    except (KeyError, TypeError, AttributeError):
        raise ParseError('expected {"labels": [...], "p": {"a": [true, false, ...], ...}}') from None
    return 0, [cardinal.cantor_diagonal(A, p).bitstring()]


def do_cardinal_inj(args, cfg):
    doc = _read_json(args.file)
    try:
        A, B = domain.FinDomain.from_json(doc["A"]), domain.FinDomain.from_json(doc["B"])
    except (KeyError, TypeError):
        raise ParseError('expected {"A": {"labels": [...]}, "B": {"labels": [...]}}') from None
    witness = cardinal.injection(A, B)
    if witness is None:
        return 0, ["exists=" + _bool(cardinal.inj_exists(A, B))]
    return 0, ["exists=" + _bool(cardinal.inj_exists(A, B))] + [f"{a}={b}" for a, b in witness.items()]


def do_cardinal_card(args, cfg):
    return 0, [f"card={cardinal.card(domain.FinDomain.from_json(_read_json(args.file)))}"]


def _tower(cfg):
    return hf.BethTower(cfg.beth_base, cfg.bit_budget)


def _hf_out(args, n):
    return hf.format_set(n) if args.set else str(n)


def do_hf_encode(args, cfg):
    return 0, [str(hf.parse_set(args.literal, cfg.bit_budget))]


def do_hf_decode(args, cfg):
    return 0, [hf.format_set(_code(args.n))]


def do_hf_mem(args, cfg):
    return 0, [_bool(hf.mem(_code(args.m), _code(args.n)))]


def do_hf_union(args, cfg):
    return 0, [_hf_out(args, hf.hf_union(_code(args.n)))]


def do_hf_powerset(args, cfg):
    return 0, [_hf_out(args, hf.hf_powerset(_code(args.n), cfg.powerset_bound, cfg.bit_budget))]


def do_hf_choice(args, cfg):
    return 0, [str(hf.hf_choice(_code(args.n)))]


def do_hf_tc(args, cfg):
    return 0, [_hf_out(args, hf.transitive_closure(_code(args.n)))]


def do_hf_rank(args, cfg):
    return 0, [str(hf.rank(_code(args.n), _tower(cfg)))]


def do_hf_rankfn(args, cfg):
    return 0, [str(hf.rank_fn(_code(args.n), _tower(cfg)))]


def do_hf_beth(args, cfg):
    return 0, [str(hf.beth_mini(_code(args.k), _tower(cfg)))]


def do_hf_sep(args, cfg):
    keep = _code(args.keep)
    return 0, [_hf_out(args, hf.hf_separation(_code(args.n), lambda e: hf.mem(e, keep)))]


REPLACEMENT_MAPS: dict[str, Callable] = {
    "singleton": lambda e: 1 << e,
    "union": hf.hf_union,
    "closure": hf.transitive_closure,
    "successor": lambda e: e | (1 << e),
}


def do_hf_repl(args, cfg):
    f = REPLACEMENT_MAPS[args.map]
    return 0, [_hf_out(args, hf.hf_replacement(_code(args.n), f, cfg.bit_budget))]


def do_hf_zfc_check(args, cfg):
    if args.bound < 2:
        raise UsageError("--bound must be at least 2")
    report = hf.zfc_check(args.bound, seed=cfg.seed, budget=cfg.bit_budget)
    return (0 if report.ok else 1), [f"bound={report.bound}"] + report.lines()


def _graph(args):
    return mostowski.WFGraph.from_json(_read_json(args.file))


def do_collapse(args, cfg):
    result = mostowski.collapse(_graph(args), budget=cfg.bit_budget)
    lines = [" ".join(f"{v}={c}" for v, c in result.codes.items())]
    if result.clash is not None:
        lines.append("non-injective: " + ",".join(result.clash))
    return 0, lines


def do_wf_check(args, cfg):
    G = _graph(args)
    cycle = mostowski.check_well_founded(G)
    if cycle is not None:
        return 1, ["not well-founded: cycle " + ",".join(cycle)]
    clash = mostowski.check_extensional(G)
    ext = "extensional=true" if clash is None else "extensional=false (" + ",".join(clash) + ")"
    return 0, ["well-founded", ext]


def do_wf_height(args, cfg):
    G = _graph(args)
    heights = mostowski.wf_recursion(G, mostowski.height_rule(G))
    return 0, [" ".join(f"{v}={h}" for v, h in heights.items())]


def _family(args):
    return coherent.FiniteCoherentFamily.from_json(_read_json(args.file))


def _violation_line(v):
    a, b, p = v
    return f"not coherent: a={a} b={b} position={p}"


def do_coherent_check(args, cfg):
    v = coherent.check_coherent(_family(args))
    return (0, ["coherent"]) if v is None else (1, [_violation_line(v)])


def do_coherent_limit(args, cfg):
    fam = _family(args)
    v = coherent.check_coherent(fam)
    if v is not None:
        return 1, [_violation_line(v)]
    return 0, ["limit=" + ",".join(map(str, coherent.limit(fam)))]


def do_coherent_demo(args, cfg):
    if args.family == "constant":
        fam = coherent.OmegaFamily.constant(args.value)
    elif args.family == "step":
        fam = coherent.OmegaFamily.step()
    else:
        if not args.stages:
            raise UsageError("--family explicit needs --stages")
        stages = [coherent.parse_evconst(s) for s in args.stages.split(";")]
        fam = coherent.OmegaFamily.explicit(stages, cfg.probe_bound)
    verdict = coherent.lambda_check(fam, coherent.BUILTIN_LAMBDAS[args.lam], probe_bound=cfg.probe_bound)
    if verdict.stages_admissible:
        stages_line = f"stages=admissible (checked {cfg.probe_bound})"
    else:
        stages_line = f"stages=rejected at {verdict.first_rejected_stage}"
    return 0, [
        f"family={args.family}",
        f"lambda={args.lam}",
        stages_line,
        f"limit={verdict.limit}",
        "limit_admissible=" + _bool(verdict.limit_admissible),
        f"verdict={verdict.verdict}",
    ]


# Subcommand -> (handler, library operations it reaches). The second field
# feeds the coverage test.
DISPATCH: dict[str, tuple[Callable, tuple[Callable, ...]]] = {
    "domain quotient": (do_domain_quotient, (domain.quotient, domain.make_domain)),
    "domain powerset": (do_domain_powerset, (domain.powerset,)),
    "domain empty": (do_domain_empty, (domain.is_empty,)),
    "domain union": (do_domain_union, (domain.union_of_fibers,)),
    "cb": (do_cb, (cb.cantor_bernstein,)),
    "worder check": (do_worder_check, (order.check_well_order,)),
    "worder iso": (do_worder_iso, (order.order_isomorphism,)),
    "worder product": (do_worder_product, (order.canonical_product,)),
    "worder type": (do_worder_type, (order.order_type,)),
    "worder choice": (do_worder_choice, (order.well_order_via_choice,)),
    "worder recurse": (do_worder_recurse, (order.recursion, order.recursive_extension)),
    "ord cmp": (do_ord_cmp, (ordinal.ord_cmp,)),
    "ord add": (do_ord_add, (ordinal.ord_add,)),
    "ord mul": (do_ord_mul, (ordinal.ord_mul,)),
    "ord sup": (do_ord_sup, (ordinal.ord_sup,)),
    "ord classify": (do_ord_classify, (ordinal.classify,)),
    "ord wpow": (do_ord_wpow, (ordinal.omega_pow,)),
    "pairidx": (do_pairidx, (ordinal.pair_index,)),
    "unpair": (do_unpair, (ordinal.unpair,)),
    "cardinal diag": (do_cardinal_diag, (cardinal.cantor_diagonal,)),
    "cardinal inj": (do_cardinal_inj, (cardinal.inj_exists,)),
    "cardinal card": (do_cardinal_card, (cardinal.card,)),
    "hf encode": (do_hf_encode, (hf.encode,)),
    "hf decode": (do_hf_decode, (hf.decode,)),
    "hf mem": (do_hf_mem, (hf.mem,)),
    "hf union": (do_hf_union, (hf.hf_union,)),
    "hf powerset": (do_hf_powerset, (hf.hf_powerset,)),
    "hf choice": (do_hf_choice, (hf.hf_choice,)),
    "hf tc": (do_hf_tc, (hf.transitive_closure,)),
    "hf rank": (do_hf_rank, (hf.rank,)),
    "hf rankfn": (do_hf_rankfn, (hf.rank_fn,)),
    "hf beth": (do_hf_beth, (hf.beth_mini,)),
    "hf sep": (do_hf_sep, (hf.hf_separation,)),
    "hf repl": (do_hf_repl, (hf.hf_replacement,)),
    "hf zfc-check": (do_hf_zfc_check, (hf.zfc_check,)),
    "collapse": (do_collapse, (mostowski.collapse,)),
    "wf check": (do_wf_check, (mostowski.check_well_founded, mostowski.check_extensional)),
    "wf height": (do_wf_height, (mostowski.wf_recursion,)),
    "coherent check": (do_coherent_check, (coherent.check_coherent,)),
    "coherent limit": (do_coherent_limit, (coherent.limit,)),
    "coherent demo": (do_coherent_demo, (coherent.omega_limit, coherent.lambda_check)),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=20, help="powerset bound (zfc-check: codes to check)")
    common.add_argument("--base", type=int, default=1, help="Beth tower base")
    common.add_argument("--budget", type=int, default=2**20, help="bit budget for codes")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--probe", type=int, default=10**4, help="probe bound for omega families")

    parser = argparse.ArgumentParser(prog="relaxkit", description="Finite set-theory constructions.")
    top = parser.add_subparsers(dest="command", metavar="command")
    top.required = True

    def leaf(sub, name, key, *arguments):
        p = sub.add_parser(name, parents=[common])
        for args, kwargs in arguments:
            p.add_argument(*args, **kwargs)
        p.set_defaults(key=key)
        return p

    def group(name, help_text):
        g = top.add_parser(name, help=help_text)
        sub = g.add_subparsers(dest="sub", metavar="subcommand")
        sub.required = True
        return sub

    FILE = (("file",), {"help": "JSON input, or - for stdin"})
    N = (("n",), {})
    SET = (("--set",), {"action": "store_true", "help": "print a set literal instead of a code"})

    sub = group("domain", "finite domains")
    leaf(sub, "quotient", "domain quotient", FILE)
    leaf(sub, "powerset", "domain powerset", FILE)
    leaf(sub, "empty", "domain empty", (("bits",), {}))
    leaf(sub, "union", "domain union", FILE)

    leaf(top, "cb", "cb", FILE)

    sub = group("worder", "finite well-orders")
    leaf(sub, "check", "worder check", FILE)
    leaf(sub, "iso", "worder iso", FILE)
    leaf(sub, "product", "worder product", FILE, (("--d",), {"type": int, "default": None}))
    leaf(sub, "type", "worder type", FILE)
    leaf(sub, "choice", "worder choice", FILE)
    leaf(
        sub, "recurse", "worder recurse", FILE,
        (("--rule",), {"choices": sorted(RECURSION_RULES), "default": "rank"}),
        (("--stop",), {"type": int, "default": None, "help": "rule undefined once this many values exist"}),
        (("--seed-values",), {"default": None, "help": "comma-separated values on an initial segment"}),
    )

    sub = group("ord", "ordinals below epsilon_0")
    for name in ("cmp", "add", "mul"):
        leaf(sub, name, f"ord {name}", (("a",), {}), (("b",), {}))
    leaf(sub, "sup", "ord sup", (("xs",), {"nargs": "+"}))
    leaf(sub, "classify", "ord classify", (("a",), {}))
    leaf(sub, "wpow", "ord wpow", (("a",), {}))

    leaf(top, "pairidx", "pairidx", (("a",), {}), (("b",), {}))
    leaf(top, "unpair", "unpair", N)

    sub = group("cardinal", "finite cardinality")
    leaf(sub, "diag", "cardinal diag", FILE)
    leaf(sub, "inj", "cardinal inj", FILE)
    leaf(sub, "card", "cardinal card", FILE)

    sub = group("hf", "hereditarily finite sets")
    leaf(sub, "encode", "hf encode", (("literal",), {}))
    leaf(sub, "decode", "hf decode", N)
    leaf(sub, "mem", "hf mem", (("m",), {}), N)
    for name in ("union", "powerset", "tc"):
        leaf(sub, name, f"hf {name}", N, SET)
    leaf(sub, "choice", "hf choice", N)
    leaf(sub, "rank", "hf rank", N)
    leaf(sub, "rankfn", "hf rankfn", N)
    leaf(sub, "beth", "hf beth", (("k",), {}))
    leaf(sub, "sep", "hf sep", N, (("--keep",), {"required": True, "help": "keep elements of this code"}), SET)
    leaf(sub, "repl", "hf repl", N, (("--map",), {"choices": sorted(REPLACEMENT_MAPS), "required": True}), SET)
    leaf(sub, "zfc-check", "hf zfc-check")

    leaf(top, "collapse", "collapse", FILE)

    sub = group("wf", "well-founded relations")
    leaf(sub, "check", "wf check", FILE)
    leaf(sub, "height", "wf height", FILE)

    sub = group("coherent", "coherent families")
    leaf(sub, "check", "coherent check", FILE)
    leaf(sub, "limit", "coherent limit", FILE)
    leaf(
        sub, "demo", "coherent demo",
        (("--family",), {"choices": ["step", "constant", "explicit"], "default": "step"}),
        (("--value",), {"type": int, "choices": [0, 1], "default": 0}),
        (("--stages",), {"default": None, "help": "';'-separated sequences such as 10(0)"}),
        (("--lambda",), {"dest": "lam", "choices": sorted(coherent.BUILTIN_LAMBDAS), "default": "eventually-zero"}),
    )
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handler = DISPATCH[args.key][0]
    try:
        cfg = _config(args)
        code, lines = handler(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except MALFORMED as exc:
        print(f"malformed input: {exc}", file=err)
        return 2
    except RelaxkitError as exc:
        print(str(exc), file=out)
        return 1
    except ValueError as exc:  # bad Config values
        print(f"error: {exc}", file=err)
        return 2
    for line in lines:
        print(line, file=out)
    return code


def main() -> None:
    sys.exit(run())
