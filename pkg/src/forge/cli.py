"""Command-line front end.

Commands: build (emit an algebra in the interchange format), grade (build or
check gradings), verify (run an identity checker on an algebra file), magic
(construct magic-square Lie algebras and their gradings), scenario (run a
named claim bundle), list.  Exit codes: 0 all pass, 1 any claim failed,
2 usage or i/o error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import compose, magic
from .algebra import (Algebra, algebra_from_text, verify_composition,
                      verify_jordan, verify_lie, verify_symmetric,
                      DEFAULT_SEED, DEFAULT_SAMPLE_COUNT)
from .exact import parse_scalar
from .grading import (CAYLEY_KINDS, OKUBO_KINDS,
                      QUATERNION_KINDS, cayley_grading, grading_from_text,
                      grading_type, okubo_grading, quaternion_grading,
                      two_dim_z3_grading, universal_group, verify_grading)
from .report import Report
from . import scenarios


class UnknownScenario(KeyError):
    pass


def _parse_params(text):
    if not text:
        return ()
    return tuple(parse_scalar(t) for t in text.split(","))


_BUILDERS = {
    "k": lambda p: compose.ground_field(),
    "s1": lambda p: compose.s1(),
    "s2": lambda p: compose.s2(*(p or (1,))),
    "quadratic": lambda p: compose.quadratic_algebra(*(p or (-1,))),
    "mat2": lambda p: compose.split_quaternion(),
    "split-cayley": lambda p: compose.split_cayley(),
    "cd": lambda p: compose.cd_tower(*(p or (1, 1, 1))),
    "para-cayley": lambda p: compose.para_hurwitz(compose.cd_tower(*(p or (1, 1, 1)))),
    "para-split-cayley": lambda p: compose.para_hurwitz(compose.split_cayley()),
    "okubo": lambda p: compose.okubo(*(p or (1, 1))),
    "okubo-quat": lambda p: compose.okubo_from_quaternion(*(p or (1, 1))),
    "p8": lambda p: compose.pseudo_octonion(),
    "p8-nst": lambda p: compose.petersson(compose.split_cayley(),
                                          compose.tau_automorphism("nst")),
    "p8-omega": lambda p: compose.petersson(compose.split_cayley(),
                                            compose.tau_automorphism("omega")),
}


def build_algebra(spec: str) -> Algebra:
    """Build a catalog algebra from "name" or "name:p1,p2,..."."""
    name, _, params = spec.partition(":")
    if name == "albert":
        return magic.albert(build_algebra(params or "para-split-cayley")).jordan
    if name not in _BUILDERS:
        raise KeyError("unknown algebra %r (try: %s)"
                       % (name, ", ".join(sorted(_BUILDERS))))
    return _BUILDERS[name](_parse_params(params))


def _sink(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    A = build_algebra(args.name)
    _sink(A.to_text(), args.out)
    return 0


def cmd_grade(args) -> int:
    if args.algebra:
        with open(args.algebra) as fh:
            A = algebra_from_text(fh.read())
        with open(args.grading) as fh:
            gr = grading_from_text(fh.read(), A)
    else:
        fam = args.family
        params = _parse_params(args.params) or None
        if fam == "cayley":
            gr = cayley_grading(args.kind, params or (1, 1, 1))
        elif fam == "quaternion":
            gr = quaternion_grading(args.kind, params or (1, 1))
        elif fam == "okubo":
            gr = okubo_grading(args.kind, params or (1, 1))
        elif fam == "dim2":
            gr = two_dim_z3_grading(*(params or (1,)))
        else:
            raise KeyError("unknown family %r" % fam)
    outcome = {}
    ok = True
    if args.check or args.type or args.universal:
        rep = verify_grading(gr)
        ok = rep.passed
        outcome["verified"] = rep.passed
        if not rep.passed:
            outcome["witness"] = str(rep.witness)
    if ok and args.type:
        outcome["type"] = list(grading_type(gr))
    if ok and args.universal:
        group, _, _ = universal_group(gr)
        outcome["universal"] = group.describe()
    if args.out:
        _sink(gr.to_text(), args.out)
    if outcome:
        print(json.dumps(outcome) if args.json else
              "\n".join("%s: %s" % kv for kv in outcome.items()))
    return 0 if ok else 1


_VERIFIERS = {
    "composition": verify_composition,
    "symmetric": verify_symmetric,
    "lie": verify_lie,
    "jordan": verify_jordan,
}


def cmd_verify(args) -> int:
    if args.algebra:
        with open(args.algebra) as fh:
            A = algebra_from_text(fh.read())
    else:
        A = build_algebra(args.name)
    rep = _VERIFIERS[args.what](A)
    print(rep.to_json() if args.json else rep.summary())
    return 0 if rep.passed else 1


def cmd_magic(args) -> int:
    reports = []
    mag = None
    if args.grade == "z3_5":
        mag, lie, grading = magic.e8_z3_5()
    elif args.grade in ("z2_8", "dempwolff"):
        mag, gr8 = magic.e8_z2_8()
        lie = mag.lie
        grading = gr8 if args.grade == "z2_8" else magic.e8_dempwolff(mag, gr8)
    else:
        left = build_algebra(args.left or "para-cayley")
        right = build_algebra(args.right or "para-cayley")
        mag = magic.magic_g(left, right)
        lie, grading = mag.lie, mag.z22
    reports.append(Report("dimension", True, {"dim": lie.dim}))
    rep = verify_grading(grading)
    reports.append(rep)
    if rep.passed:
        reports.append(Report("type(%s)" % grading.name, True,
                              {"type": list(grading_type(grading))}))
    if args.check == "jacobi":
        mode = "full" if (args.full or lie.dim < 200) else "mixed"
        block = mag.tri_block() if mag is not None and lie is mag.lie else None
        reports.append(verify_lie(lie, mode=mode, samples=args.samples,
                                  seed=args.seed, priority_block=block))
    elif args.check in ("cartan", "jordan"):
        if args.grade != "dempwolff":
            print("error: --check %s needs --grade dempwolff" % args.check,
                  file=sys.stderr)
            return 2
        reports.append(magic.jordan_grading_check(lie, grading,
                                                  cartan_mode="components"))
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
    return 0 if ok else 1


def cmd_scenario(args) -> int:
    try:
        fn = scenarios.CATALOG[args.name]
    except KeyError:
        print("unknown scenario %r; available: %s"
              % (args.name, ", ".join(sorted(scenarios.CATALOG))), file=sys.stderr)
        return 2
    t0 = time.time()
    rep = fn(full=args.full, seed=args.seed)
    rep.details["wall_time_s"] = round(time.time() - t0, 2)
    rep.details["seed"] = args.seed
    text = rep.to_json() if args.json else _scenario_text(rep)
    _sink(text + "\n", args.out)
    return 0 if rep.passed else 1


def _scenario_text(rep: Report) -> str:
    lines = [rep.summary()]
    for claim in rep.details.get("claims", []):
        lines.append("  [%s] %-34s %s" % ("ok" if claim["passed"] else "FAIL",
                                          claim["id"], claim.get("got", "")))
    return "\n".join(lines)


def cmd_list(args) -> int:
    print("scenarios:")
    for name in sorted(scenarios.CATALOG):
        print("  %s" % name)
    print("algebras (forge build):")
    print("  " + ", ".join(sorted(_BUILDERS)) + ", albert:<inner>")
    print("grading kinds:")
    print("  cayley: %s" % ", ".join(CAYLEY_KINDS))
    print("  quaternion: %s" % ", ".join(QUATERNION_KINDS))
    print("  okubo: %s" % ", ".join(OKUBO_KINDS))
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="forge",
                                 description="exact composition-algebra forge")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="emit an algebra in the interchange format")
    b.add_argument("name")
    b.add_argument("--out")
    b.set_defaults(fn=cmd_build)

    g = sub.add_parser("grade", help="build or check a grading")
    g.add_argument("--algebra", help="algebra interchange file")
    g.add_argument("--grading", help="grading file to check against --algebra")
    g.add_argument("--family", default="cayley",
                   choices=("cayley", "quaternion", "okubo", "dim2"))
    g.add_argument("--kind", default="z3")
    g.add_argument("--params", default="")
    g.add_argument("--check", action="store_true")
    g.add_argument("--type", action="store_true")
    g.add_argument("--universal", action="store_true")
    g.add_argument("--json", action="store_true")
    g.add_argument("--out")
    g.set_defaults(fn=cmd_grade)

    v = sub.add_parser("verify", help="run an identity checker")
    v.add_argument("what", choices=sorted(_VERIFIERS))
    v.add_argument("--algebra", help="algebra interchange file")
    v.add_argument("--name", default="split-cayley", help="catalog algebra")
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_verify)

    m = sub.add_parser("magic", help="magic-square Lie algebras")
    m.add_argument("--left", default="para-cayley")
    m.add_argument("--right", default="para-cayley")
    m.add_argument("--grade", choices=("z2_8", "z3_5", "dempwolff"))
    m.add_argument("--check", choices=("jacobi", "cartan", "jordan"))
    m.add_argument("--full", action="store_true")
    m.add_argument("--seed", type=int, default=DEFAULT_SEED)
    m.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_COUNT)
    m.add_argument("--json", action="store_true")
    m.set_defaults(fn=cmd_magic)

    s = sub.add_parser("scenario", help="run a named claim bundle")
    s.add_argument("name")
    s.add_argument("--full", action="store_true")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_scenario)

    l = sub.add_parser("list", help="list scenarios and builders")
    l.set_defaults(fn=cmd_list)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (KeyError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
