"""Batch command line: ``plgroups <area> <command> ...``.

Exit codes: 0 the checked property holds, 1 it fails, 2 input error,
3 unsupported or indeterminate.
"""
from __future__ import annotations

import argparse
import math
import random
import sys
from pathlib import Path

from . import families
from .constructions import bump, lemma72_pair, multibump
from .group import (
    BudgetExceeded,
    FGGroup,
    ModuleSpec,
    ball,
    char_image,
    format_word,
    independence,
    irreducible,
    membership,
    psi_invariance,
    slope_group_of,
)
from .io import (
    DocumentError,
    group_document,
    group_from_json,
    load,
    map_document,
    map_from_json,
    parse_interval,
    report_document,
)
from .plmap import Compact, PLMap, compose, evaluate, fix_support, germ, invert
from .scalar import IncompatibleRadicands, format_scalar, parse_scalar
from .sigma1 import chi_ball_components, sigma1_evidence
from .slopegroup import (
    CharacterSpec,
    NotInGroup,
    RationalGens,
    UnsupportedCharacter,
    char_sign,
    gl2z_equivalent,
    lemma75_distinct,
    multiplicatively_independent,
    parse_character,
    units_trivial,
)
from .thompson import verify_f_relations
from .twisted import (
    Automorphism,
    NotAnAutomorphism,
    homothety_pullback_check,
    order2_invariant,
    separate_classes,
    twist,
)

HOLDS, FAILS, INPUT_ERROR, UNSUPPORTED = 0, 1, 2, 3

BUILTIN_GROUPS = {
    "dyadic-reflection": families.dyadic_reflection_group,
    "dyadic-gs": families.dyadic_gs_group,
    "gs": families.gs_group,
    "single-bump": families.single_bump_group,
    "independent": families.independent_group,
    "gnu": families.gnu_group,
    "primes": families.prime_group,
}


# -- argument helpers ----------------------------------------------------------------

def _scalar_list(text: str) -> list:
    return [parse_scalar(t) for t in text.split(",") if t.strip()]


def _load_map(path: str) -> tuple[PLMap, object]:
    kind, payload = load(path)
    if kind != "map":
        raise DocumentError(f"{path}: expected a map document, got {kind}")
    return map_from_json(payload)


def _load_group(spec: str) -> FGGroup:
    if spec.startswith("builtin:"):
        name = spec[len("builtin:"):]
        if name not in BUILTIN_GROUPS:
            raise DocumentError(f"unknown builtin group {name!r}; choose from {', '.join(BUILTIN_GROUPS)}")
        return BUILTIN_GROUPS[name]()
    kind, payload = load(spec)
    if kind == "automorphism":
        payload = payload["group"]
    elif kind != "group":
        raise DocumentError(f"{spec}: expected a group document, got {kind}")
    return group_from_json(payload)


def _load_automorphism(spec: str, G: FGGroup) -> Automorphism:
    if spec == "identity":
        return Automorphism.identity(G)
    if spec == "reflection":
        return Automorphism.reflection(G)
    if spec.startswith("homothety:"):
        return Automorphism.homothety(G, parse_scalar(spec.split(":", 1)[1]))
    kind, payload = load(spec)
    if kind != "automorphism":
        raise DocumentError(f"{spec}: expected an automorphism document, got {kind}")
    phi, _ = map_from_json(payload["conjugator"])
    return Automorphism(phi, G, payload.get("label", "conjugation"))


class Output:
    """Collects the text report and writes it (and the JSON document) once."""

    def __init__(self, args):
        self.args = args

    def report(self, command: str, prop: str, status: str, lines: list, data=None) -> None:
        text = "\n".join([f"command: {command}", f"property: {prop}", *lines, f"status: {status}"]) + "\n"
        if self.args.format == "json":
            text = report_document(command, prop, status, lines, data)
        self._write(text)

    def document(self, text: str) -> None:
        self._write(text)

    def _write(self, text: str) -> None:
        if self.args.out:
            Path(self.args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)


def _status(ok) -> tuple[str, int]:
    if ok is None:
        return "indeterminate", UNSUPPORTED
    return ("holds", HOLDS) if ok else ("fails", FAILS)


# -- map ------------------------------------------------------------------------------

def cmd_map(args, out: Output) -> int:
    f, interval = _load_map(args.file)
    if args.command == "eval":
        t = parse_scalar(args.t)
        out.report("map eval", "exact evaluation", "holds", [f"f({format_scalar(t)}) = {format_scalar(evaluate(f, t))}"])
        return HOLDS
    if args.command == "compose":
        g, _ = _load_map(args.other)
        out.document(map_document(compose(f, g), interval))
        return HOLDS
    if args.command == "invert":
        out.document(map_document(invert(f), interval))
        return HOLDS
    if args.command == "canon":
        out.document(map_document(f, interval))
        return HOLDS
    if args.command == "support":
        rep = fix_support(f)

        def end(v, inf):
            return inf if v is None else format_scalar(v)

        lines = [f"support components: {rep.count}"]
        lines += [f"  ({end(lo, '-inf')}, {end(hi, '+inf')})" for lo, hi in rep.support_components]
        lines.append("fixed set:")
        lines += [f"  [{end(lo, '-inf')}, {end(hi, '+inf')}]" for lo, hi in rep.fixed_set]
        out.report("map support", "fixed set and support components", "holds", lines)
        return HOLDS
    if args.command == "germ":
        iv = parse_interval(args.interval) if args.interval else interval
        lines = []
        for side in ("left", "right"):
            g = germ(f, side, iv)
            amp = f", amplitude {format_scalar(g.amplitude)}" if g.is_translation else ""
            lines.append(f"{side}: slope {format_scalar(g.slope)}, intercept {format_scalar(g.intercept)}{amp}")
        out.report("map germ", "endpoint germs relative to the interval", "holds", lines)
        return HOLDS
    raise AssertionError(args.command)


# -- construct ------------------------------------------------------------------------

def cmd_construct(args, out: Output) -> int:
    if args.command == "bump":
        b = parse_scalar(args.b)
        f = bump(parse_scalar(args.s), b, parse_scalar(args.shift))
        out.document(map_document(f, Compact(parse_scalar(args.shift) + b, parse_scalar(args.shift))))
        return HOLDS
    if args.command == "multibump":
        lo, hi = parse_scalar(args.lo), parse_scalar(args.hi)
        out.document(map_document(multibump(args.n, lo, hi, parse_scalar(args.s)), Compact(hi, lo)))
        return HOLDS
    if args.command == "gs":
        s1, s2, s3 = _scalar_list(args.s)
        out.document(group_document(families.gs_group(s1, s2, s3)))
        return HOLDS
    if args.command == "dyadic":
        out.document(group_document(families.dyadic_gs_group(parse_scalar(args.s3))))
        return HOLDS
    if args.command == "lemma72":
        a, b, c, d = _scalar_list(args.abcd)
        nodes = _scalar_list(args.nodes) if args.nodes else None
        sf, sg = parse_scalar(args.sf), parse_scalar(args.sg)
        f, g = lemma72_pair(sf, sg, a, b, c, d, nodes)
        G = FGGroup(Compact(d, a), slope_group_of([f, g]), ModuleSpec.rationals(), (("f", f), ("g", g)))
        out.document(group_document(G))
        return HOLDS
    raise AssertionError(args.command)


# -- verify ---------------------------------------------------------------------------

def cmd_verify(args, out: Output) -> int:
    G = _load_group(args.group)
    names = args.pair.split(",") if args.pair else G.names[:2]
    if len(names) != 2:
        raise DocumentError("--pair needs two generator names")
    rep = verify_f_relations(G.generator(names[0]), G.generator(names[1]))
    status, code = _status(rep.ok)
    out.report(
        "verify f-relations",
        "relator chains of the two-bump copy of Thompson's group F",
        status,
        [f"f = {names[0]}, g = {names[1]}, h = f g", *rep.lines()],
    )
    return code


# -- group ----------------------------------------------------------------------------

def cmd_group(args, out: Output) -> int:
    G = _load_group(args.group)
    if args.command == "ball":
        B = ball(G, args.radius, args.budget)
        lines = [f"radius {args.radius}: {len(B)} elements", "by word length: " + " ".join(map(str, B.counts_by_length()))]
        if args.list:
            lines += [f"  {format_word(w)}" for w in B.words]
        out.report("group ball", "distinct elements of the word-length ball", "holds", lines, {"count": len(B)})
        return HOLDS
    if args.command == "membership":
        f, _ = _load_map(args.map)
        m = membership(G, f)
        status, code = _status(m.verdict)
        out.report("group membership", "defining conditions of the ambient PL group", status, m.reasons)
        return code
    if args.command == "irreducible":
        irr, witness = irreducible(G)
        lines = ["no interior point fixed by all generators"] if irr else [f"common fixed point {format_scalar(witness)}"]
        status, code = _status(irr)
        out.report("group irreducible", "no common interior fixed point", status, lines)
        return code
    if args.command == "independence":
        rep = independence(G)
        lines = rep.lines()
        for name, L in (("im chi_l", rep.left), ("im chi_r", rep.right), ("joint", rep.joint)):
            lines.append(f"{name} (HNF):")
            lines += [f"  {row}" for row in L.matrix_lines()]
        code = HOLDS if rep.kind != "neither" else FAILS
        out.report("group independence", "endpoint characters (almost) independent", rep.kind, lines)
        return code
    if args.command == "psi-invariance":
        alpha = _load_automorphism(args.automorphism, G)
        rep = psi_invariance(G, alpha, args.radius, args.budget)
        status, code = _status(rep.ok)
        out.report("group psi-invariance", "psi = sigma_l * sigma_r is fixed by automorphisms", status, [f"automorphism: {alpha}", *rep.lines()])
        return code
    raise AssertionError(args.command)


# -- char -----------------------------------------------------------------------------

def cmd_char(args, out: Output) -> int:
    spec = parse_character(args.char)
    if args.command == "sign":
        f, interval = _load_map(args.map)
        iv = parse_interval(args.interval) if args.interval else interval
        s = char_sign(spec, f, iv)
        out.report("char sign", "exact sign of an endpoint character", "holds", [f"{spec} has sign {s:+d}" if s else f"{spec} vanishes"], {"sign": s})
        return HOLDS
    if args.command == "image":
        G = _load_group(args.group)
        L = char_image(G, spec)
        lines = [f"{spec}: rank {L.rank} over basis {', '.join(format_scalar(b) for b in L.ambient)}"]
        lines += [f"  {row}" for row in L.matrix_lines()]
        out.report("char image", "image lattice of a slope character", "holds", lines)
        return HOLDS
    raise AssertionError(args.command)


# -- units ----------------------------------------------------------------------------

def cmd_units(args, out: Output) -> int:
    if args.command == "trivial":
        ok, cert = units_trivial(RationalGens(tuple(_scalar_list(args.p))))
        status, code = _status(ok)
        out.report("units trivial", "units of ln P are +-1", status, [cert])
        return code
    if args.command == "indep":
        xs = _scalar_list(args.xs)
        ok = multiplicatively_independent(xs)
        status, code = _status(ok)
        out.report("units indep", "multiplicative independence", status, [", ".join(map(format_scalar, xs))])
        return code
    if args.command == "lemma75":
        P1, P2 = RationalGens(tuple(_scalar_list(args.p1))), RationalGens(tuple(_scalar_list(args.p2)))
        verdict, detail = lemma75_distinct(P1, P2)
        line = f"{verdict}, π={detail}" if verdict == "distinct_for_all_u" else f"{verdict}: {detail}"
        code = HOLDS if verdict == "distinct_for_all_u" else UNSUPPORTED
        out.report("units lemma75", "ln P2 differs from every positive multiple of ln P1", verdict, [line])
        return code
    if args.command == "gl2z":
        x = args.x if args.x.strip().lower() in ("inf", "∞", "infinity") else parse_scalar(args.x)
        y = args.y if args.y.strip().lower() in ("inf", "∞", "infinity") else parse_scalar(args.y)
        ok = gl2z_equivalent(x, y)
        status, code = _status(ok)
        out.report("units gl2z", "same orbit under integral fractional linear maps", status, [f"{args.x} ~ {args.y}: {ok}"])
        return code
    raise AssertionError(args.command)


# -- twisted --------------------------------------------------------------------------

def cmd_twisted(args, out: Output) -> int:
    G = _load_group(args.group)
    if args.command == "homothety-check":
        rep = homothety_pullback_check(G, parse_scalar(args.p), args.radius, args.budget)
        status, code = _status(rep.ok)
        out.report("twisted homothety-check", "tau_r(alpha_p g) = p tau_r(g)", status, rep.lines())
        return code
    alpha = _load_automorphism(args.automorphism, G)
    if args.command == "twist":
        z, _ = _load_map(args.z)
        x, _ = _load_map(args.x)
        out.document(map_document(twist(z, x, alpha, check=True), G.interval))
        return HOLDS
    if args.command == "invariant":
        x, _ = _load_map(args.x)
        n = order2_invariant(x, alpha, args.radius)
        out.report(
            "twisted invariant",
            "support components of x beta(x) are constant on twisted classes",
            "holds",
            [f"automorphism: {alpha}", f"order-2 check radius: {args.radius}", f"components of x beta(x): {n}"],
            {"count": n},
        )
        return HOLDS
    if args.command == "separate":
        xs = [_load_map(p)[0] for p in args.maps]
        rep = separate_classes(xs, alpha, args.radius)
        out.report("twisted separate", "invariants constant on twisted classes separate the inputs", "holds", rep.lines())
        return HOLDS
    raise AssertionError(args.command)


# -- sigma1 ---------------------------------------------------------------------------

def _random_rays(n: int, seed: int) -> list:
    rng = random.Random(seed)
    rays, seen = [], set()
    while len(rays) < n:
        cl, cr = rng.randint(-4, 4), rng.randint(-4, 4)
        if (cl, cr) == (0, 0):
            continue
        g = math.gcd(cl, cr)
        if (cl // g, cr // g) in seen:
            continue
        seen.add((cl // g, cr // g))
        rays.append(CharacterSpec("slope", cl, cr))
    return rays


def cmd_sigma1(args, out: Output) -> int:
    G = _load_group(args.group)
    if args.command == "ball":
        rep = chi_ball_components(G, parse_character(args.char), args.radius, args.budget)
        out.report("sigma1 ball", "components of the half-space subgraph of a ball", "holds", rep.lines(), {"count": rep.count, "sizes": rep.sizes})
        return HOLDS
    if args.command == "evidence":
        rays = [parse_character(t) for t in args.rays.split(";")] if args.rays else []
        if args.random_rays:
            rays += _random_rays(args.random_rays, args.seed)
        if not rays:
            rays = [CharacterSpec.chi_left(), CharacterSpec.chi_right()]
        rep = sigma1_evidence(G, rays, args.radius, args.budget)
        lines = [f"seed: {args.seed}", *rep.lines()]
        if not rep.hypotheses_hold:
            out.report("sigma1 evidence", "finite-ball evidence for the Sigma^1 complement", "hypothesis-failure", lines)
            return FAILS
        out.report("sigma1 evidence", "finite-ball evidence for the Sigma^1 complement", "evidence", lines)
        return HOLDS
    raise AssertionError(args.command)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the output to this file")
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    common.add_argument("--radius", type=int, default=3)
    common.add_argument("--budget", type=int, default=200_000, help="maximum number of ball elements")
    common.add_argument("--seed", type=int, default=0, help="seed for randomly sampled inputs")

    p = argparse.ArgumentParser(prog="plgroups", description="Exact computations with PL homeomorphism groups.")
    areas = p.add_subparsers(dest="area", required=True)

    def sub(area_parser, name, **kw):
        return area_parser.add_parser(name, parents=[common], **kw)

    m = areas.add_parser("map").add_subparsers(dest="command", required=True)
    x = sub(m, "eval"); x.add_argument("file"); x.add_argument("t")
    x = sub(m, "compose", help="first ∘ second"); x.add_argument("file"); x.add_argument("other")
    for name in ("invert", "canon", "support"):
        sub(m, name).add_argument("file")
    x = sub(m, "germ"); x.add_argument("file"); x.add_argument("--interval")

    c = areas.add_parser("construct").add_subparsers(dest="command", required=True)
    x = sub(c, "bump"); x.add_argument("--s", required=True); x.add_argument("--b", default="1"); x.add_argument("--shift", default="0")
    x = sub(c, "gs"); x.add_argument("--s", default="2,3,5", help="s1,s2,s3")
    x = sub(c, "dyadic"); x.add_argument("--s3", default="2")
    x = sub(c, "multibump"); x.add_argument("--n", type=int, required=True); x.add_argument("--lo", default="0"); x.add_argument("--hi", default="1/2"); x.add_argument("--s", default="2")
    x = sub(c, "lemma72"); x.add_argument("--sf", default="1/2"); x.add_argument("--sg", default="2")
    x.add_argument("--abcd", default="0,1/4,3/4,1"); x.add_argument("--nodes", help="t1,t2,t3,t4")

    v = areas.add_parser("verify").add_subparsers(dest="command", required=True)
    x = sub(v, "f-relations"); x.add_argument("group", help="group file or builtin:NAME"); x.add_argument("--pair", help="f,g generator names")

    g = areas.add_parser("group").add_subparsers(dest="command", required=True)
    x = sub(g, "ball"); x.add_argument("group"); x.add_argument("--list", action="store_true")
    x = sub(g, "membership"); x.add_argument("group"); x.add_argument("map")
    sub(g, "irreducible").add_argument("group")
    sub(g, "independence").add_argument("group")
    x = sub(g, "psi-invariance"); x.add_argument("group"); x.add_argument("--automorphism", default="reflection")

    ch = areas.add_parser("char").add_subparsers(dest="command", required=True)
    x = sub(ch, "sign"); x.add_argument("map"); x.add_argument("--char", required=True); x.add_argument("--interval")
    x = sub(ch, "image"); x.add_argument("group"); x.add_argument("--char", required=True)

    u = areas.add_parser("units").add_subparsers(dest="command", required=True)
    sub(u, "trivial").add_argument("--p", required=True)
    sub(u, "indep").add_argument("--xs", required=True)
    x = sub(u, "lemma75"); x.add_argument("--p1", required=True); x.add_argument("--p2", required=True)
    x = sub(u, "gl2z"); x.add_argument("x"); x.add_argument("y")

    t = areas.add_parser("twisted").add_subparsers(dest="command", required=True)
    x = sub(t, "twist"); x.add_argument("group"); x.add_argument("--z", required=True); x.add_argument("--x", required=True)
    x.add_argument("--automorphism", default="identity")
    x = sub(t, "invariant"); x.add_argument("group"); x.add_argument("--x", required=True); x.add_argument("--automorphism", default="reflection")
    x = sub(t, "separate"); x.add_argument("group"); x.add_argument("maps", nargs="+"); x.add_argument("--automorphism", default="reflection")
    x = sub(t, "homothety-check"); x.add_argument("group"); x.add_argument("--p", required=True)

    s = areas.add_parser("sigma1").add_subparsers(dest="command", required=True)
    x = sub(s, "ball"); x.add_argument("group"); x.add_argument("--char", required=True)
    x = sub(s, "evidence"); x.add_argument("group")
    x.add_argument("--rays", help="semicolon-separated characters, e.g. 'chi_l;chi_r;chi_l-chi_r'")
    x.add_argument("--random-rays", type=int, default=0, help="add this many random rational rays (uses --seed)")
    return p


HANDLERS = {
    "map": cmd_map,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "group": cmd_group,
    "char": cmd_char,
    "units": cmd_units,
    "twisted": cmd_twisted,
    "sigma1": cmd_sigma1,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else HOLDS
    out = Output(args)
    try:
        return HANDLERS[args.area](args, out)
    except (UnsupportedCharacter, NotImplementedError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (DocumentError, IncompatibleRadicands, NotInGroup, NotAnAutomorphism, ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
