"""Command-line surface: family tables, verification suites, solver, maps.

Subcommands:

    gen     emit a family table (text, LaTeX, or lossless JSON)
    verify  run an exact-check suite; exit 0 iff every check passes
    solve   run the bounded-ansatz determining-equation solver (Burgers)
    map     push one heat characteristic down the substitution chain

All output is byte-deterministic for fixed flags: terms are rendered in the
global monomial order, coefficients as exact num/den strings, and suite
results in a fixed order.  Exit codes: 0 success, 1 check or verdict
failure, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .colemap import NotProjectable, heat_to_potential, potential_to_burgers
from .detsolve import AnsatzTooLarge, solve_symmetries
from .diffring import (
    DiffPoly,
    KIND_JET,
    KIND_PAR,
    KIND_T,
    KIND_X,
    Monomial,
    jet,
    par,
    T_VAR,
    X_VAR,
)
from .jetflow import BURGERS, EQUATIONS, HEAT, POTBURGERS, invariance_residual
from .opcalc import (
    Compose,
    Scale,
    Sum,
    apply,
    boost_op,
    commutator_op,
    op_scale,
    operator_identity_probe,
    potential_defect_op,
    recursion_ops,
    translation_op,
)
from .symfam import (
    Family,
    commutator,
    lie_correspondence,
    q_char,
    structure_check,
)
from .zeta import build_zetas, from_zeta_coordinates, to_zeta_coordinates, verify_zeta_identities

MONOMIAL_ORDER_ID = "graded:t<x<z<h"

DEP_LETTER = {"heat": "u", "potburgers": "w", "burgers": "v"}

_EQ_FAMILY = {
    "heat": Family.HEAT_Q,
    "potburgers": Family.POT_Q,
    "burgers": Family.BURGERS_Q,
}

_KIND_LETTER = {KIND_T: "t", KIND_X: "x", KIND_JET: "z", KIND_PAR: "h"}
_LETTER_KIND = {v: k for k, v in _KIND_LETTER.items()}


# -- rendering ------------------------------------------------------------------


def _text_var(v, dep: str) -> str:
    kind, idx = v
    if kind == KIND_T:
        return "t"
    if kind == KIND_X:
        return "x"
    letter = dep if kind == KIND_JET else "h"
    return letter if idx == 0 else f"{letter}{idx}"


def render_text(p: DiffPoly, dep: str) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono, coeff in p.sorted_terms():
        body = "*".join(
            _text_var(v, dep) if e == 1 else f"{_text_var(v, dep)}^{e}"
            for v, e in mono
        )
        if not body:
            frag = str(coeff)
        elif coeff == 1:
            frag = body
        elif coeff == -1:
            frag = f"-{body}"
        else:
            frag = f"{coeff}*{body}"
        parts.append(frag)
    return " + ".join(parts).replace("+ -", "- ")


def _latex_var(v, dep: str) -> str:
    kind, idx = v
    if kind == KIND_T:
        return "t"
    if kind == KIND_X:
        return "x"
    letter = dep if kind == KIND_JET else "h"
    if idx == 0:
        return letter
    if idx <= 3:
        return f"{letter}_{{{'x' * idx}}}"
    return f"{letter}_{{x^{{{idx}}}}}"


def _latex_coeff(c: Fraction) -> str:
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return f"{sign}\\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def render_latex(p: DiffPoly, dep: str) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono, coeff in p.sorted_terms():
        body = " ".join(
            _latex_var(v, dep) if e == 1 else f"{_latex_var(v, dep)}^{{{e}}}"
            for v, e in mono
        )
        if not body:
            frag = _latex_coeff(coeff)
        elif coeff == 1:
            frag = body
        elif coeff == -1:
            frag = f"-{body}"
        else:
            frag = f"{_latex_coeff(coeff)} {body}"
        parts.append(frag)
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


_FAMILY_TEX = {
    "heat": "\\mathfrak{Q}",
    "potburgers": "\\tilde{\\mathfrak{Q}}",
    "burgers": "\\hat{\\mathfrak{Q}}",
}


# -- lossless JSON documents -----------------------------------------------------


def _mono_to_json(mono: Monomial) -> list:
    return [[_KIND_LETTER[kind], idx, e] for (kind, idx), e in mono]


def _mono_from_json(data) -> Monomial:
    out = []
    for letter, idx, e in data:
        out.append(((_LETTER_KIND[letter], idx), e))
    return tuple(sorted(out))


def _body_to_json(p: DiffPoly) -> list:
    return [[_mono_to_json(m), str(c)] for m, c in p.sorted_terms()]


def _body_from_json(data) -> DiffPoly:
    return DiffPoly({_mono_from_json(m): Fraction(c) for m, c in data})


@dataclass
class TableEntry:
    family: str
    k: int
    l: int
    body: DiffPoly


@dataclass
class SymmetryTableDoc:
    """A family table that round-trips losslessly through JSON."""

    equation: str
    entries: list
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "equation": self.equation,
            "metadata": self.metadata,
            "entries": [
                {
                    "family": e.family,
                    "k": e.k,
                    "l": e.l,
                    "body": _body_to_json(e.body),
                }
                for e in self.entries
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json(text: str) -> "SymmetryTableDoc":
        payload = json.loads(text)
        entries = [
            TableEntry(e["family"], e["k"], e["l"], _body_from_json(e["body"]))
            for e in payload["entries"]
        ]
        return SymmetryTableDoc(payload["equation"], entries, payload["metadata"])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetryTableDoc):
            return NotImplemented
        return (
            self.equation == other.equation
            and self.metadata == other.metadata
            and [(e.family, e.k, e.l, e.body) for e in self.entries]
            == [(e.family, e.k, e.l, e.body) for e in other.entries]
        )


def family_table(equation: str, max_order: int) -> SymmetryTableDoc:
    family = _EQ_FAMILY[equation]
    entries = []
    start = 1 if equation == "burgers" else 0
    for total in range(start, max_order + 1):
        for k in range(total + 1):
            l = total - k
            entries.append(TableEntry("Q", k, l, q_char(family, k, l).body))
    metadata = {
        "engine": f"jetsym {__version__}",
        "monomial_order": MONOMIAL_ORDER_ID,
    }
    return SymmetryTableDoc(equation, entries, metadata)


def render_table(doc: SymmetryTableDoc, fmt: str) -> str:
    dep = DEP_LETTER[doc.equation]
    if fmt == "json":
        return doc.to_json()
    lines = []
    if fmt == "text":
        for e in doc.entries:
            lines.append(f"Q[{e.k},{e.l}] = {render_text(e.body, dep)}")
    else:
        sym = _FAMILY_TEX[doc.equation]
        for e in doc.entries:
            lines.append(f"{sym}^{{{e.k},{e.l}}} = {render_latex(e.body, dep)}")
    return "\n".join(lines) + "\n"


# -- verification suites ----------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _probe_detail(report) -> str:
    for outcome in report.outcomes:
        if not outcome.equal:
            return f"first residual {outcome.residual}"
    return ""


def _is_zero(body) -> bool:
    return body.is_zero() if hasattr(body, "is_zero") else body == 0


def _index_range(max_sum: int, include_origin: bool = True):
    for total in range(0 if include_origin else 1, max_sum + 1):
        for k in range(total + 1):
            yield k, total - k


def _random_polys(rng: random.Random, count: int, with_par: bool = False):
    vars_pool = [T_VAR, X_VAR, jet(0), jet(1), jet(2), jet(3)]
    if with_par:
        vars_pool += [par(0), par(1)]
    polys = []
    while len(polys) < count:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            mono = []
            for v in vars_pool:
                e = rng.choice((0, 0, 0, 1, 1, 2))
                if e:
                    mono.append((v, e))
            terms[tuple(sorted(mono))] = Fraction(
                rng.randint(-4, 4), rng.choice((1, 1, 2, 3))
            )
        p = DiffPoly(terms)
        if p:
            polys.append(p)
    return polys


def suite_invariance(max_order: int) -> list[CheckResult]:
    out = []
    for name, family in (
        ("heat", Family.HEAT_Q),
        ("potburgers", Family.POT_Q),
        ("burgers", Family.BURGERS_Q),
    ):
        eq = EQUATIONS[name]
        bad = []
        first_residual = ""
        for k, l in _index_range(max_order):
            residual = invariance_residual(eq, q_char(family, k, l))
            if not _is_zero(residual):
                if not bad:
                    first_residual = f"; first residual {residual}"
                bad.append((k, l))
        out.append(
            CheckResult(
                f"invariance {name} family k+l<={max_order}",
                not bad,
                f"failing indices {bad}{first_residual}" if bad else "",
            )
        )
    out.append(
        CheckResult(
            "invariance heat parameter family",
            _is_zero(invariance_residual(HEAT, q_char(Family.HEAT_Z))),
        )
    )
    out.append(
        CheckResult(
            "invariance potburgers parameter family",
            _is_zero(invariance_residual(POTBURGERS, q_char(Family.POT_Z))),
        )
    )
    matches = lie_correspondence()
    out.append(
        CheckResult(
            "heat point symmetries match family combinations up to sign",
            all(m.sign is not None for m in matches),
            ", ".join(f"{m.name}:{m.sign:+d}" for m in matches if m.sign is not None),
        )
    )
    return out


def suite_commutators(max_order: int) -> list[CheckResult]:
    out = []
    for name, family in (
        ("heat", Family.HEAT_Q),
        ("potburgers", Family.POT_Q),
        ("burgers", Family.BURGERS_Q),
    ):
        bad = []
        first_residual = ""
        pairs = list(_index_range(max_order))
        for kl1 in pairs:
            for kl2 in pairs:
                residual = structure_check(family, kl1, kl2)
                if not _is_zero(residual):
                    if not bad:
                        first_residual = f"; first residual {residual}"
                    bad.append((kl1, kl2))
        out.append(
            CheckResult(
                f"structure constants {name} pairs k+l<={max_order}",
                not bad,
                f"failing pairs {bad[:4]}{first_residual}" if bad else "",
            )
        )
    for name, family in (("heat", Family.HEAT_Z), ("potburgers", Family.POT_Z)):
        bad = [
            kl
            for kl in _index_range(max_order + 1)
            if not _is_zero(structure_check(family, kl))
        ]
        out.append(
            CheckResult(
                f"parameter bracket [Z(h), Q] {name} k+l<={max_order + 1}",
                not bad,
                f"failing indices {bad}" if bad else "",
            )
        )
    zz = commutator(HEAT, q_char(Family.HEAT_Z), q_char(Family.HEAT_Z)).body
    zz2 = commutator(POTBURGERS, q_char(Family.POT_Z), q_char(Family.POT_Z)).body
    out.append(CheckResult("parameter bracket [Z, Z] = 0", _is_zero(zz) and _is_zero(zz2)))
    return out


def suite_recursion(max_order: int) -> list[CheckResult]:
    out = []
    r1, r2 = recursion_ops()

    def burgers_body(k, l):
        return q_char(Family.BURGERS_Q, k, l).body

    probes = [
        burgers_body(k, l) for k, l in _index_range(max_order, include_origin=False)
    ]
    report = operator_identity_probe(
        commutator_op(r1, r2), op_scale(Fraction(1, 2)), BURGERS, probes
    )
    out.append(
        CheckResult(
            f"[R1, R2] = 1/2 on family bodies k+l<={max_order}",
            report.all_equal,
            "" if report.all_equal else _probe_detail(report),
        )
    )
    out.append(
        CheckResult(
            "R2 Q[0,1] = R1 Q[1,0]",
            apply(r2, BURGERS, burgers_body(0, 1))
            == apply(r1, BURGERS, burgers_body(1, 0)),
        )
    )
    ok = True
    cur = burgers_body(0, 1)
    for l in range(2, max_order + 1):
        cur = apply(r1, BURGERS, cur)
        ok = ok and cur == burgers_body(0, l)
    cur = burgers_body(1, 0)
    for k in range(2, max_order + 1):
        cur = apply(r2, BURGERS, cur)
        ok = ok and cur == burgers_body(k, 0)
    out.append(CheckResult(f"generation chains Q[0,l] and Q[k,0] up to {max_order}", ok))
    ok = True
    for k, l in _index_range(max_order):
        if k < 1 or l < 1:
            continue
        cur = burgers_body(0, 1)
        for _ in range(l - 1):
            cur = apply(r1, BURGERS, cur)
        for _ in range(k):
            cur = apply(r2, BURGERS, cur)
        ok = ok and cur == burgers_body(k, l)
        cur = burgers_body(1, 0)
        for _ in range(l):
            cur = apply(r1, BURGERS, cur)
        for _ in range(k - 1):
            cur = apply(r2, BURGERS, cur)
        expected = burgers_body(k, l) + Fraction(l - 1, 2) * burgers_body(k - 1, l - 1)
        ok = ok and cur == expected
    out.append(
        CheckResult(f"mixed generation routes k,l>=1, k+l<={max_order}", ok)
    )

    rng = random.Random(20240607)
    flow = potential_defect_op(BURGERS)
    fam_probes = [
        apply(
            Compose((boost_op(BURGERS),) * k + (translation_op(BURGERS),) * l),
            BURGERS,
            DiffPoly.const(1),
        )
        for k, l in _index_range(4)
    ]
    probes = fam_probes + _random_polys(rng, 20)
    zero = op_scale(0)
    for label, op in (
        ("translation", translation_op(BURGERS)),
        ("boost", boost_op(BURGERS)),
    ):
        rep = operator_identity_probe(commutator_op(flow, op), zero, BURGERS, probes)
        out.append(
            CheckResult(
                f"[D_t + v D_x - D_x^2, {label}] = 0 on {len(probes)} probes",
                rep.all_equal,
                "" if rep.all_equal else _probe_detail(rep),
            )
        )
    p_op, g_op = translation_op(HEAT), boost_op(HEAT)
    heat_probes = _random_polys(rng, 20, with_par=True)
    rep = operator_identity_probe(
        Compose((p_op, g_op)),
        Sum((Compose((g_op, p_op)), Scale(Fraction(1, 2)))),
        HEAT,
        heat_probes,
    )
    out.append(
        CheckResult(
            f"PG = GP + 1/2 on {len(heat_probes)} heat probes",
            rep.all_equal,
            "" if rep.all_equal else _probe_detail(rep),
        )
    )
    return out


def suite_zeta(max_order: int) -> list[CheckResult]:
    out = []
    basis = build_zetas(max(max_order, 1))
    v = DiffPoly.variable(jet(0))
    v1 = DiffPoly.variable(jet(1))
    seeds_ok = basis.zetas[0] == Fraction(-1, 2) * v and basis.zetas[1] == Fraction(
        -1, 2
    ) * v1 + Fraction(1, 4) * v * v
    out.append(CheckResult("zeta seeds -v/2 and -v_x/2 + v^2/4", seeds_ok))
    report = verify_zeta_identities(max_order)
    out.append(
        CheckResult(
            f"derivative identity D_x zeta_k = zeta_k+1 - zeta_0 zeta_k, k<={max_order}",
            all(report.derivative_ok),
        )
    )
    out.append(
        CheckResult(
            f"flow identity (D_t + v D_x - D_x^2) zeta_k = 0, k<={max_order}",
            all(report.flow_ok),
        )
    )
    rng = random.Random(987654)
    rt_basis = build_zetas(6)
    pool = (T_VAR, X_VAR, jet(0), jet(1), jet(3), jet(6))
    ok = True
    for _ in range(12):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            chosen = rng.sample(pool, rng.randint(0, 3))
            mono = tuple(sorted((v_id, rng.randint(1, 2)) for v_id in chosen))
            terms[mono] = Fraction(rng.randint(-3, 3), 1)
        p = DiffPoly(terms)
        zp = to_zeta_coordinates(p, rt_basis)
        ok = ok and from_zeta_coordinates(zp, rt_basis) == p
    out.append(CheckResult("coordinate round-trip on random polynomials (order 6)", ok))
    return out


def suite_maps(max_order: int) -> list[CheckResult]:
    out = []
    ok_hp = True
    ok_pb = True
    for k, l in _index_range(max_order):
        qh = q_char(Family.HEAT_Q, k, l)
        qp = q_char(Family.POT_Q, k, l)
        ok_hp = ok_hp and heat_to_potential(qh).body == qp.body
        ok_pb = (
            ok_pb
            and potential_to_burgers(qp).body
            == -2 * q_char(Family.BURGERS_Q, k, l).body
        )
    out.append(
        CheckResult(f"heat -> potential matches family k+l<={max_order}", ok_hp)
    )
    out.append(
        CheckResult(
            f"potential -> burgers = -2 * family k+l<={max_order}", ok_pb
        )
    )
    out.append(
        CheckResult(
            "kernel: value at (0,0) maps to 0",
            _is_zero(potential_to_burgers(q_char(Family.POT_Q, 0, 0)).body),
        )
    )
    try:
        potential_to_burgers(q_char(Family.POT_Z))
        out.append(CheckResult("parameter family rejected as not projectable", False))
    except NotProjectable:
        out.append(CheckResult("parameter family rejected as not projectable", True))
    return out


_SUITES = {
    "invariance": (suite_invariance, 6),
    "commutators": (suite_commutators, 3),
    "recursion": (suite_recursion, 5),
    "zeta": (suite_zeta, 8),
    "maps": (suite_maps, 5),
}


def run_suites(names, max_order=None, stream=None) -> int:
    stream = stream or sys.stdout
    passed = failed = 0
    for name in names:
        fn, default_order = _SUITES[name]
        order = default_order if max_order is None else max_order
        for result in fn(order):
            if result.ok:
                passed += 1
                line = f"PASS  {name}: {result.name}"
                if result.detail:
                    line += f"  [{result.detail}]"
            else:
                failed += 1
                line = f"FAIL  {name}: {result.name}"
                if result.detail:
                    line += f"  ({result.detail})"
            print(line, file=stream)
    print(f"{passed + failed} checks: {passed} passed, {failed} failed", file=stream)
    return 0 if failed == 0 else 1


# -- subcommands -----------------------------------------------------------------


def _cmd_gen(args, parser) -> int:
    if args.max_order < 0 or (args.eq == "burgers" and args.max_order < 1):
        parser.error(f"--max-order {args.max_order} is invalid for --eq {args.eq}")
    doc = family_table(args.eq, args.max_order)
    text = render_table(doc, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args, parser) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    return run_suites(names, args.max_order)


def _cmd_solve(args, parser) -> int:
    if args.order < 0:
        parser.error("--order must be nonnegative")
    try:
        report = solve_symmetries(
            BURGERS,
            args.order,
            jet_degree=args.jet_deg,
            x_degree=args.x_deg,
            t_degree=args.t_deg,
        )
    except AnsatzTooLarge as exc:
        print(f"ansatz too large: {exc}", file=sys.stderr)
        return 3
    if args.format == "json":
        payload = {
            "order": report.order,
            "dimension": report.dimension,
            "ansatz_size": report.ansatz_size,
            "family_span_matches": report.family_span_matches,
            "basis": [_body_to_json(c.body) for c in report.basis],
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        print(f"order {report.order}: dimension {report.dimension} "
              f"(ansatz {report.ansatz_size} monomials)")
        verdict = "MATCH" if report.family_span_matches else "MISMATCH"
        print(f"family span: {verdict}")
        for i, c in enumerate(report.basis):
            print(f"  basis[{i}] = {render_text(c.body, 'v')}")
    return 0 if report.family_span_matches else 1


def _cmd_map(args, parser) -> int:
    if args.k < 0 or args.l < 0:
        parser.error("--k and --l must be nonnegative")
    if args.family == "z":
        eta = q_char(Family.HEAT_Z)
        print(f"heat: Z(h) = {render_text(eta.body, 'u')}")
        mid = heat_to_potential(eta)
        print(f"potential: {mid.body}")
        if args.to == "potburgers":
            return 0
        try:
            potential_to_burgers(mid)
        except NotProjectable as exc:
            print(f"NOT PROJECTABLE: {exc}")
            return 1
        print("unexpected: parameter family projected")
        return 1
    eta = q_char(Family.HEAT_Q, args.k, args.l)
    print(f"heat: Q[{args.k},{args.l}] = {render_text(eta.body, 'u')}")
    mid = heat_to_potential(eta)
    print(f"potential: {render_text(mid.body, 'w')}")
    if args.to == "potburgers":
        return 0
    final = potential_to_burgers(mid)
    if args.normalize:
        body = final.body * Fraction(-1, 2)
        print(f"burgers (normalized): {render_text(body, 'v')}")
    else:
        body = final.body
        print(f"burgers: {render_text(body, 'v')}")
    if _is_zero(final.body):
        print("KERNEL: the image vanishes")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetsym",
        description="exact symmetry calculus for the heat, potential Burgers, "
        "and Burgers equations",
    )
    parser.add_argument("--version", action="version", version=f"jetsym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a symmetry family table")
    gen.add_argument("--eq", choices=("heat", "potburgers", "burgers"), required=True)
    gen.add_argument(
        "--max-order", type=int, required=True, help="emit members with k+l up to N"
    )
    gen.add_argument("--format", choices=("json", "latex", "text"), default="text")
    gen.add_argument("--out", default=None, help="write to a file instead of stdout")

    verify = sub.add_parser("verify", help="run an exact verification suite")
    verify.add_argument(
        "--suite",
        choices=("invariance", "commutators", "recursion", "zeta", "maps", "all"),
        default="all",
    )
    verify.add_argument(
        "--max-order",
        type=int,
        default=None,
        help="override each suite's default sweep bound",
    )

    solve = sub.add_parser("solve", help="bounded-ansatz determining-equation solver")
    solve.add_argument("--order", type=int, required=True, help="symmetry order n")
    solve.add_argument("--jet-deg", type=int, default=-1, help="total jet degree bound (default n)")
    solve.add_argument("--x-deg", type=int, default=-1, help="x degree bound (default n)")
    solve.add_argument("--t-deg", type=int, default=-1, help="t degree bound (default n)")
    solve.add_argument("--format", choices=("json", "text"), default="text")

    mp = sub.add_parser("map", help="push a heat characteristic down the chain")
    mp.add_argument("--from", dest="source", choices=("heat",), default="heat")
    mp.add_argument("--to", choices=("potburgers", "burgers"), default="burgers")
    mp.add_argument("--k", type=int, default=0)
    mp.add_argument("--l", type=int, default=0)
    mp.add_argument("--family", choices=("q", "z"), default="q")
    mp.add_argument(
        "--normalize",
        action="store_true",
        help="emit the image divided by -2 (the family member itself)",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        return _cmd_gen(args, parser)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    if args.command == "solve":
        return _cmd_solve(args, parser)
    if args.command == "map":
        return _cmd_map(args, parser)
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
