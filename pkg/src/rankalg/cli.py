"""Command-line frontend: rankalg <group> <action> [options].

Exit codes: 0 success, 1 failed verification checks, 2 usage/parse errors,
3 resource-cap aborts.  Outputs are deterministic byte-for-byte across runs
and across --jobs settings.
"""

import argparse
import json
import sys
from fractions import Fraction

from .groebner import CapExceeded
from .hilbert import hilbert_series
from .models import (ModelError, csiszar_mle, evaluate_distribution,
                     h_description, mallows_specialize, model_inclusion,
                     model_matrix, polytope_dimension, verify_h_description)
from .plackett_luce import (PLError, bt_parametrization_check, marginalize,
                            pl_homogeneous_map, pl_probability,
                            total_mass_identity)
from .polynomials import TermOrder
from .posets import (GradedPoset, PosetError, boolean_lattice, grade,
                     linear_extensions, maximal_chains, order_ideal_lattice,
                     parse_poset, poset_shorthand)
from .toric import (fiber, initial_ideal, toric_groebner, toric_markov_basis)
from .verify import run_verify


LATTICE_KINDS = ("birkhoff", "inversion", "alt_inversion")


def _load_poset(args, kind=None):
    """Resolve --poset / --poset-file.

    birkhoff/inversion kinds take the constraint poset itself; ascending and
    csiszar act on the lattice of order ideals of a constraint shorthand
    (boolean:n is already that lattice for antichain:n).
    """
    if getattr(args, "poset_file", None):
        with open(args.poset_file, "r", encoding="utf-8") as fh:
            p = parse_poset(fh.read())
    elif getattr(args, "poset", None):
        p = poset_shorthand(args.poset)
    else:
        raise PosetError("need --poset or --poset-file")
    if kind is None:
        return p
    if kind in LATTICE_KINDS:
        if isinstance(p, GradedPoset):
            raise PosetError("%s needs a constraint poset, not a lattice"
                             % kind)
        return p
    if isinstance(p, GradedPoset):
        return p
    return order_ideal_lattice(p)


def _order_for(spec, name):
    if name == "lex":
        return TermOrder("lex", spec.col_labels)
    return spec.default_order()


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def cmd_poset(args):
    if args.action == "check":
        p = _load_poset(args)
        if isinstance(p, GradedPoset):
            g = p
        else:
            g = grade(p)
        info = {"elements": len(g.elements), "covers": len(g.poset.covers),
                "rank": g.rk, "levels": [len(l) for l in g.levels]}
        _emit(args, _json(info) if args.format == "json" else
              "\n".join("%s: %s" % kv for kv in info.items()))
        return 0
    if args.action == "chains":
        p = _load_poset(args)
        g = p if isinstance(p, GradedPoset) else order_ideal_lattice(p)
        if g.member_sets is not None:
            from .posets import chain_word
            labels = sorted(chain_word(g, c) for c in maximal_chains(g))
        else:
            labels = sorted("|".join(c) for c in maximal_chains(g))
        _emit(args, _json(labels) if args.format == "json"
              else "\n".join(labels))
        return 0
    raise ModelError("unknown poset action")


def _matrix_text(m, fmt):
    if fmt == "json":
        return _json({"kind": m.kind, "rows": list(m.spec.row_labels),
                      "cols": list(m.spec.col_labels),
                      "matrix": [list(r) for r in m.spec.matrix]})
    lines = ["param," + ",".join(m.spec.col_labels)]
    for lab, row in zip(m.spec.row_labels, m.spec.matrix):
        lines.append(lab + "," + ",".join(str(x) for x in row))
    return "\n".join(lines)


def _binomials_text(bins, fmt):
    if fmt == "json":
        return _json([{"plus": list(b.plus), "minus": list(b.minus)}
                      for b in bins])
    return "\n".join(b.text() for b in bins) if bins else "(empty)"


def cmd_model(args):
    if args.action == "mallows":
        dist = mallows_specialize(args.n, Fraction(args.q))
        _emit(args, _json({w: str(v) for w, v in sorted(dist.items())}))
        return 0
    if args.action == "inclusion":
        constraint = _load_poset(args, "birkhoff")
        lattice = order_ideal_lattice(constraint)
        mats = {}
        for role in (args.inner, args.outer):
            src = lattice if role in ("ascending", "csiszar") else constraint
            mats[role] = model_matrix(role, src)
        ok = model_inclusion(mats[args.inner], mats[args.outer])
        _emit(args, _json({"inner": args.inner, "outer": args.outer,
                           "included": ok}))
        return 0
    kind = args.kind
    q = _load_poset(args, kind)
    m = model_matrix(kind, q)
    if args.action == "matrix":
        _emit(args, _matrix_text(m, args.format))
        return 0
    if args.action == "dim":
        dim = polytope_dimension(m)
        _emit(args, _json({"kind": kind, "dimension": dim})
              if args.format == "json" else str(dim))
        return 0
    if args.action == "hdesc":
        h = h_description(kind, q if isinstance(q, GradedPoset)
                          else order_ideal_lattice(q))
        rep = verify_h_description(m, h)
        data = {"coords": list(h.coords),
                "equalities": [[list(map(str, row)), str(rhs)]
                               for row, rhs in h.equalities],
                "inequalities": [[list(map(str, row)), str(rhs)]
                                 for row, rhs in h.inequalities],
                "verification": {
                    "columns_satisfy": rep.columns_satisfy,
                    "zero_one_match": rep.zero_one_match,
                    "dimension_match": rep.dimension_match,
                    "vertex_match": rep.vertex_match,
                    "dimension": rep.dimension,
                    "partial": rep.partial}}
        _emit(args, _json(data))
        return 0
    if args.action == "markov":
        mb = toric_markov_basis(m.spec, budget=args.cap, jobs=args.jobs)
        _emit(args, _binomials_text(mb, args.format))
        return 0
    if args.action == "groebner":
        gb = toric_groebner(m.spec, order=_order_for(m.spec, args.order),
                            budget=args.cap, jobs=args.jobs)
        _emit(args, _binomials_text(gb, args.format))
        return 0
    if args.action == "hilbert":
        order = _order_for(m.spec, args.order)
        gb = toric_groebner(m.spec, order=order, budget=args.cap,
                            jobs=args.jobs)
        hs = hilbert_series(initial_ideal(gb, m.spec.col_labels, order))
        data = {"numerator": list(hs.numerator), "K": hs.K,
                "degree": hs.degree, "symmetric": hs.is_symmetric()}
        _emit(args, _json(data) if args.format == "json" else
              "numerator %s; K=%d; degree %d" % (
                  ",".join(map(str, hs.numerator)), hs.K, hs.degree))
        return 0
    if args.action == "mle":
        counts = {k: int(v) for k, v in json.loads(args.counts).items()}
        est = csiszar_mle(q, counts)
        _emit(args, _json({w: str(v) for w, v in sorted(est.items())}))
        return 0
    if args.action == "eval":
        params = {k: Fraction(v) for k, v in json.loads(args.params).items()}
        dist = evaluate_distribution(m, params)
        _emit(args, _json({w: str(v) for w, v in sorted(dist.items())}))
        return 0
    raise ModelError("unknown model action")


def cmd_toric(args):
    if args.action != "fiber":
        raise ModelError("unknown toric action")
    kind = args.kind
    q = _load_poset(args, kind)
    m = model_matrix(kind, q)
    idx = {lab: j for j, lab in enumerate(m.spec.col_labels)}
    if args.words:
        expo = [0] * len(m.spec.col_labels)
        for w in args.words.split(","):
            if w not in idx:
                raise ModelError("unknown state %r" % w)
            expo[idx[w]] += 1
        target = m.spec.image(expo)
        degree = sum(expo)
    else:
        target = json.loads(args.target)
        degree = args.degree
    result = fiber(m.spec, target, degree, jobs=args.jobs)
    _emit(args, _json([list(mono) for mono in result])
          if args.format == "json"
          else "\n".join("·".join("p_%s" % w for w in mono)
                         for mono in result))
    return 0


def cmd_pl(args):
    constraint = _load_poset(args, "birkhoff")
    if args.action == "map":
        plmap = pl_homogeneous_map(constraint)
        items = plmap.items
        data = {}
        for w in plmap.words:
            data[w] = plmap.image(w).text(["th%s" % i for i in items])
        _emit(args, _json(data))
        return 0
    if args.action == "check":
        theta = [Fraction(t) for t in args.theta.split(",")] if args.theta \
            else [Fraction(1)] * len(constraint.elements)
        values, total = pl_probability(constraint, theta)
        data = {"values": {w: str(v) for w, v in sorted(values.items())},
                "total": str(total)}
        if not constraint.strict:
            data["total_mass_identity"] = total_mass_identity(constraint)
        _emit(args, _json(data))
        return 0
    if args.action == "marginalize":
        theta = [Fraction(t) for t in args.theta.split(",")] if args.theta \
            else [Fraction(1)] * len(constraint.elements)
        values, total = pl_probability(constraint, theta)
        dist = {w: v / total for w, v in values.items()}
        margs = marginalize(dist, args.k, constraint)
        _emit(args, _json({k: {w: str(v) for w, v in sorted(sub.items())}
                           for k, sub in sorted(margs.items())}))
        return 0
    if args.action == "bt":
        rep = bt_parametrization_check(constraint, trials=args.trials,
                                       seed=args.seed)
        data = {"circuits_vanish": rep.circuits_vanish,
                "complements_to_one": rep.complements_to_one,
                "marginals_match": rep.marginals_match,
                "circuit_count": rep.circuit_count,
                "trials": rep.trials}
        _emit(args, _json(data))
        return 0 if (rep.circuits_vanish and rep.complements_to_one
                     and rep.marginals_match) else 1
    raise ModelError("unknown pl action")


def cmd_verify(args):
    report = run_verify(tier=args.tier, seed=args.seed, budget=args.cap,
                        jobs=args.jobs)
    _emit(args, report.to_json() if args.format == "json"
          else report.to_text())
    return report.exit_code()


def build_parser():
    top = argparse.ArgumentParser(
        prog="rankalg",
        description="Exact algebra of statistical ranking models")
    top.add_argument("--format", choices=("json", "csv", "text"),
                     default="text")
    top.add_argument("--order", choices=("lex", "grevlex"),
                     default="grevlex")
    top.add_argument("--cap", type=int, default=None,
                     help="reduction-step cap for Groebner runs")
    top.add_argument("--jobs", type=int, default=1)
    top.add_argument("--seed", type=int, default=17,
                     help="seed for randomized property checks")
    top.add_argument("--out", default=None, help="write output to a file")
    sub = top.add_subparsers(dest="group", required=True)

    p_poset = sub.add_parser("poset")
    p_poset.add_argument("action", choices=("check", "chains"))
    _poset_opts(p_poset)

    p_model = sub.add_parser("model")
    p_model.add_argument("action", choices=(
        "matrix", "dim", "hdesc", "markov", "groebner", "hilbert",
        "inclusion", "mle", "mallows", "eval"))
    p_model.add_argument("--kind", choices=(
        "ascending", "csiszar", "birkhoff", "inversion", "alt_inversion"),
        default="ascending")
    p_model.add_argument("--inner", default="birkhoff")
    p_model.add_argument("--outer", default="ascending")
    p_model.add_argument("--counts", default="{}")
    p_model.add_argument("--params", default="{}")
    p_model.add_argument("--n", type=int, default=3)
    p_model.add_argument("--q", default="1")
    _poset_opts(p_model)

    p_toric = sub.add_parser("toric")
    p_toric.add_argument("action", choices=("fiber",))
    p_toric.add_argument("--kind", default="inversion")
    p_toric.add_argument("--words", default=None,
                         help="comma-separated states; target = their image")
    p_toric.add_argument("--target", default=None, help="JSON target vector")
    p_toric.add_argument("--degree", type=int, default=2)
    _poset_opts(p_toric)

    p_pl = sub.add_parser("pl")
    p_pl.add_argument("action", choices=("map", "check", "marginalize", "bt"))
    p_pl.add_argument("--theta", default=None,
                      help="comma-separated rationals like 2/3,1,5")
    p_pl.add_argument("--k", type=int, default=2)
    p_pl.add_argument("--trials", type=int, default=5)
    _poset_opts(p_pl)

    p_verify = sub.add_parser("verify")
    p_verify.add_argument("--tier", choices=("fast", "full", "stretch"),
                          default="fast")
    return top


def _poset_opts(parser):
    parser.add_argument("--poset", default=None,
                        help="boolean:n, antichain:n, chain:n, or mixed:c,k")
    parser.add_argument("--poset-file", default=None)


HANDLERS = {"poset": cmd_poset, "model": cmd_model, "toric": cmd_toric,
            "pl": cmd_pl, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.group](args)
    except CapExceeded as exc:
        sys.stderr.write("cap exceeded: %s\n" % exc)
        return 3
    except (ModelError, PosetError, PLError, ValueError,
            json.JSONDecodeError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
