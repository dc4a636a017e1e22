"""Command line front end.

Exit status: 0 success, 1 oracle disagreement, 2 parse error,
3 precondition violated, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coplactic, jdt, lr, polyoracle
from .errors import LRError, PreconditionError
from .tableaux import bender_knuth, companion, weight
from .textio import (format_skew_shape, format_tableau, format_trace, format_word,
                     parse_partition, parse_skew_shape, parse_tableau, parse_weight,
                     parse_word)

EXIT_CODES = {"parse": 2, "precondition": 3, "resource": 4}


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _tab_json(T) -> dict:
    return {"tableau": format_tableau(T), "shape": format_skew_shape(T.shape),
            "weight": list(weight(T))}


def _check_letters(word, n):
    if n is not None and any(x >= n for x in word):
        raise PreconditionError(f"letters must be below {n}")


def cmd_mult(args):
    e = lr.schur_product(parse_partition(args.lam), parse_partition(args.mu), args.n)
    _emit(args, str(e), e.to_json())


def cmd_skew(args):
    e = lr.skew_expand(parse_skew_shape(args.chi), args.n)
    _emit(args, str(e), e.to_json())


def cmd_coef(args):
    if len(args.shapes) == 2:
        c = lr.lr_coefficient(parse_skew_shape(args.shapes[0]), parse_partition(args.shapes[1]))
    elif len(args.shapes) == 3:
        lam, mu, nu = (parse_partition(s) for s in args.shapes)
        c = lr.lr_coefficient(lr.product_shape(lam, mu), nu)
    else:
        raise _ArgumentError("coef takes either 'chi nu' or 'lambda mu nu'")
    _emit(args, str(c), {"coefficient": c})


def cmd_lrtab(args):
    chi = parse_skew_shape(args.chi)
    nu = parse_partition(args.weight) if args.weight else None
    found = list(lr.enumerate_lr(chi, nu, args.n))
    _emit(args, "\n".join(format_tableau(T) for T in found),
          {"shape": format_skew_shape(chi), "count": len(found),
           "tableaux": [format_tableau(T) for T in found]})


def cmd_rect(args):
    P, trace = jdt.rectify(parse_tableau(args.T))
    steps = [{"start": list(s), "end": list(e), "shape": format_skew_shape(sh)}
             for s, e, sh in trace.steps]
    _emit(args, format_tableau(P), {**_tab_json(P), "slides": steps})


def cmd_switch(args):
    T2, S2 = jdt.switch(parse_tableau(args.S), parse_tableau(args.T))
    _emit(args, f"{format_tableau(T2)}\n{format_tableau(S2)}",
          {"inner": format_tableau(T2), "outer": format_tableau(S2)})


def cmd_rob(args):
    L, P = coplactic.rob(parse_tableau(args.T))
    _emit(args, f"{format_tableau(L)}\n{format_tableau(P)}",
          {"L": format_tableau(L), "P": format_tableau(P)})


def cmd_unrob(args):
    T = coplactic.rob_inverse(parse_tableau(args.L), parse_tableau(args.P))
    _emit(args, format_tableau(T), _tab_json(T))


def cmd_word(args):
    w = parse_word(args.w)
    _check_letters(w, args.n)
    if args.action == "nf":
        policy = coplactic.MIN_INDEX if args.policy == "min" else coplactic.MAX_INDEX
        nf, trace = coplactic.dominant_normal_form(w, policy)
        text = format_word(nf)
        if trace.steps:
            text += "\n" + format_trace(trace)
        _emit(args, text,
              {"word": list(nf), "trace": [{"op": k, "index": i, "position": p}
                                           for k, i, p in trace.steps]})
        return
    if args.index is None:
        raise _ArgumentError(f"word {args.action} needs --index")
    if args.n is not None and not 0 <= args.index < args.n - 1:
        raise PreconditionError(f"index must lie in 0..{args.n - 2}")
    op = coplactic.raise_word if args.action == "raise" else coplactic.lower_word
    out = op(w, args.index)
    _emit(args, "undefined" if out is None else format_word(out),
          {"word": None if out is None else list(out)})


def cmd_crystal(args):
    w = parse_word(args.w)
    _check_letters(w, args.n)
    comp = coplactic.coplactic_component(w, args.n, cap=args.cap, with_edges=not args.stats)
    if args.stats:
        _emit(args, f"vertices={len(comp.vertices)} same_weight={comp.same_weight()}",
              {"vertices": len(comp.vertices), "same_weight": comp.same_weight()})
    else:
        _emit(args, "\n".join(format_word(v) for v in comp.vertices), comp.to_json())


def cmd_kostka(args):
    k = lr.kostka(parse_partition(args.lam), parse_weight(args.mu))
    _emit(args, str(k), {"kostka": k})


def cmd_oracle(args):
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    combinatorial = lr.schur_product(lam, mu).restrict(args.n)
    oracle = polyoracle.schur_product_oracle(lam, mu, args.n)
    agree = combinatorial == oracle
    if agree:
        text = f"AGREE: {combinatorial}"
    else:
        text = f"DISAGREE: lr={combinatorial} oracle={oracle}"
    _emit(args, text, {"agree": agree, "lr": combinatorial.to_json()["expansion"],
                       "oracle": oracle.to_json()["expansion"]})
    return 0 if agree else 1


def cmd_bk(args):
    T = bender_knuth(parse_tableau(args.T), args.k)
    _emit(args, format_tableau(T), _tab_json(T))


def cmd_companion(args):
    C = companion(parse_tableau(args.T), parse_partition(args.kappa))
    _emit(args, format_tableau(C), _tab_json(C))


def cmd_dual(args):
    same = jdt.dual_equivalent(parse_tableau(args.S1), parse_tableau(args.S2))
    _emit(args, "true" if same else "false", {"dual_equivalent": same})


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lrrule", description="Littlewood-Richardson computations.")
    p.add_argument("--json", action="store_true", help="structured output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    sp = add("mult", cmd_mult, "expand s_lambda * s_mu")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("--n", type=int)
    sp = add("skew", cmd_skew, "expand a skew Schur function")
    sp.add_argument("chi")
    sp.add_argument("--n", type=int)
    sp = add("coef", cmd_coef, "a single coefficient: 'chi nu' or 'lambda mu nu'")
    sp.add_argument("shapes", nargs="+")
    sp = add("lrtab", cmd_lrtab, "list Littlewood-Richardson tableaux")
    sp.add_argument("chi")
    sp.add_argument("--weight")
    sp.add_argument("--n", type=int)
    sp = add("rect", cmd_rect, "rectify by jeu de taquin")
    sp.add_argument("T")
    sp = add("switch", cmd_switch, "tableau switching")
    sp.add_argument("S")
    sp.add_argument("T")
    sp = add("rob", cmd_rob, "Robinson's correspondence")
    sp.add_argument("T")
    sp = add("unrob", cmd_unrob, "inverse of Robinson's correspondence")
    sp.add_argument("L")
    sp.add_argument("P")
    sp = add("word", cmd_word, "coplactic operations on a word")
    sp.add_argument("action", choices=["raise", "lower", "nf"])
    sp.add_argument("w")
    sp.add_argument("--n", type=int)
    sp.add_argument("--index", "-i", type=int)
    sp.add_argument("--policy", choices=["min", "max"], default="min")
    sp = add("crystal", cmd_crystal, "explore a coplactic component")
    sp.add_argument("w")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--cap", type=int, default=coplactic.DEFAULT_VERTEX_CAP)
    sp = add("kostka", cmd_kostka, "Kostka number")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp = add("oracle", cmd_oracle, "compare the product with the polynomial oracle")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("--n", type=int, required=True)
    sp = add("bk", cmd_bk, "Bender-Knuth involution")
    sp.add_argument("T")
    sp.add_argument("k", type=int)
    sp = add("companion", cmd_companion, "companion tableau over kappa")
    sp.add_argument("T")
    sp.add_argument("kappa")
    sp = add("dual", cmd_dual, "test dual equivalence")
    sp.add_argument("S1")
    sp.add_argument("S2")
    return p


def _fail(category: str, message: str, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"error": {"category": category, "message": message}}))
    print(f"error[{category}]: {message}", file=sys.stderr)
    return EXIT_CODES.get(category, 3)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        status = args.func(args)
    except _ArgumentError as exc:
        return _fail("parse", str(exc), as_json)
    except LRError as exc:
        category = exc.category if exc.category in EXIT_CODES else "precondition"
        return _fail(category, str(exc), as_json)
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
