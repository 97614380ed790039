"""Command-line surface: enumeration, operators, exports, rendering, verification.

Flat vectors read and print in the anchor word's root order (the same order
convex_order returns); rationals serialize as "p/q" strings; set-valued JSON
keys are comma-joined.  Verification suites print one JSON report line each
and the process exits 0 on success, 1 on any counterexample, 2 on usage
errors.  All sampling is seeded, so identical invocations print identical
bytes.
"""

import argparse
import json
import random
import sys
from itertools import product

from fractions import Fraction

from .bz import BZDatum, bz_crystal_f, bz_from_lusztig, proper_subsets
from .crossings import (
    crossing_rvec,
    crystal_op,
    dual_crystal_op,
    enumerate_crossings,
    generate_hw_crystal,
    is_reineke,
    poset_leq,
)
from .lusztig import LusztigDatum, oracle_op, oracle_star_op
from .potentials import (
    LaurentPolynomial,
    UnitriangularMatrix,
    bk_identity_check,
    cone_correspondence_check,
    ghkk_restriction,
    neighbour_ansatz,
    reineke_poly,
    transform_check_rtrans,
)
from .strings import polar_duality_check, string_cone, string_datum
from .tiling import build_tiling, comb, render_svg
from .words import convex_order, enumerate_reduced_words

__all__ = [
    "main",
    "weyl_dimension",
    "verify_crossing",
    "verify_duality",
    "verify_am",
    "verify_rtrans",
    "verify_ghkk",
    "verify_bk",
    "verify_lattice",
    "lattice_failures",
    "reselection_failures",
]


def _parse_word(text) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError:
        raise SystemExit(f"cannot parse word {text!r}; expected e.g. 1,2,1")


def _parse_vector(text) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError:
        raise SystemExit(f"cannot parse vector {text!r}; expected e.g. 0,0,1")


def _key(label) -> str:
    return ",".join(map(str, label)) if isinstance(label, tuple) else str(label)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _poly_json(poly) -> dict:
    return {
        "coords": [list(c) if isinstance(c, tuple) else c for c in poly.coords],
        "terms": [{"exp": list(exp), "coeff": coeff} for exp, coeff in poly.terms],
    }


def _sorted_crossings(tiling, a, dual):
    return sorted(
        enumerate_crossings(tiling, a, dual),
        key=lambda c: (len(c.tiles), tuple(t.pair for t in c.tiles)),
    )


# ---------------------------------------------------------------------------
# verification suites


def weyl_dimension(lam) -> int:
    """Dimension of the irreducible module with the given weight coefficients.

    Product formula over the positive roots: for each pair a < b the factor
    is (b - a + lam_a + ... + lam_{b-1}) / (b - a).

    >>> weyl_dimension((1, 1))
    8
    >>> weyl_dimension((2, 1))
    15
    """
    lam = tuple(lam)
    n = len(lam) + 1
    num = den = 1
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            num *= (b - a) + sum(lam[a - 1 : b - 1])
            den *= b - a
    assert num % den == 0
    return num // den


def _pick_words(n, cap, rng):
    words = list(enumerate_reduced_words(n))
    if cap is not None and len(words) > cap:
        words = sorted(rng.sample(words, cap))
    return words


def verify_crossing(n, seed=0, words_cap=8, data_per_word=30, box=2) -> dict:
    """Crossing-formula operators against the transport oracle."""
    rng = random.Random(f"crossing:{seed}:{n}")
    bad = []
    cases = 0
    big = n * (n - 1) // 2
    for w in _pick_words(n, words_cap, rng):
        for _ in range(data_per_word):
            x = LusztigDatum(w, tuple(rng.randint(0, box) for _ in range(big)))
            for a in range(1, n):
                for kind in ("f", "e", "eps"):
                    cases += 2
                    got, want = crystal_op(kind, a, x), oracle_op(kind, a, x)
                    if got != want:
                        bad.append({"word": list(w), "a": a, "kind": kind, "x": list(x.values)})
                    got = dual_crystal_op(kind, a, x)
                    want = oracle_star_op(kind, a, x)
                    if got != want:
                        bad.append(
                            {"word": list(w), "a": a, "kind": kind + "*", "x": list(x.values)}
                        )
    return _report("crossing", n, seed, cases, bad)


def verify_duality(n, seed=0, words_cap=6, box=3) -> dict:
    """String data from the starred operators against the cone lattice points."""
    rng = random.Random(f"duality:{seed}:{n}")
    bad = []
    cases = 0
    for w in _pick_words(n, words_cap, rng):
        rep = polar_duality_check(w, box=box)
        cases += rep["reached"]
        if not rep["ok"]:
            bad.append({"word": list(w), "failures": len(rep["failures"])})
    return _report("duality", n, seed, cases, bad)


def verify_am(n, seed=0, words_cap=6, data_per_word=25, box=2) -> dict:
    """Subset functions commute with the crystal operator f."""
    rng = random.Random(f"am:{seed}:{n}")
    bad = []
    cases = 0
    big = n * (n - 1) // 2
    for w in _pick_words(n, words_cap, rng):
        for _ in range(data_per_word):
            x = LusztigDatum(w, tuple(rng.randint(0, box) for _ in range(big)))
            z = bz_from_lusztig(x)
            for a in range(1, n):
                cases += 1
                if bz_from_lusztig(crystal_op("f", a, x)) != bz_crystal_f(a, z):
                    bad.append({"word": list(w), "a": a, "x": list(x.values)})
    return _report("am", n, seed, cases, bad)


def verify_rtrans(n, seed=0, pairs=12, points=4) -> dict:
    """Crossing polynomials transform through the lifts between any two words."""
    rng = random.Random(f"rtrans:{seed}:{n}")
    words = list(enumerate_reduced_words(n))
    bad = []
    cases = 0
    for _ in range(pairs):
        i, j = rng.choice(words), rng.choice(words)
        pts = [
            {p: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for p in convex_order(i)}
            for _ in range(points)
        ]
        for a in range(1, n):
            rep = transform_check_rtrans(a, i, j, pts)
            cases += rep["points"]
            if not rep["ok"]:
                bad.append({"words": [list(i), list(j)], "a": a})
    return _report("rtrans", n, seed, cases, bad)


def verify_ghkk(n, seed=0, words_cap=6, box=2, cap=60000, points=6) -> dict:
    """Potential restrictions and the cone correspondences."""
    rng = random.Random(f"ghkk:{seed}:{n}")
    bad = []
    cases = 0
    for w in _pick_words(n, words_cap, rng):
        for a in range(1, n):
            ghkk_restriction(w, a)
        rep = cone_correspondence_check(w, box=box, points=points, seed=seed, cap=cap)
        cases += rep["lattice_points"] + rep["rational_points"]
        if not rep["ok"]:
            bad.append({"word": list(w), "failures": rep["failures"][:3]})
    return _report("ghkk", n, seed, cases, bad)


def verify_bk(n, seed=0, words_cap=6, matrices=12) -> dict:
    """Minor ratios against crossing polynomials at chamber-minor points."""
    rng = random.Random(f"bk:{seed}:{n}")
    bad = []
    cases = 0
    for w in _pick_words(n, words_cap, rng):
        done = 0
        while done < matrices:
            rows = [
                [
                    Fraction(1)
                    if r == c
                    else (
                        Fraction(rng.randint(-6, 6), rng.randint(1, 4)) if c > r else Fraction(0)
                    )
                    for c in range(n)
                ]
                for r in range(n)
            ]
            rep = bk_identity_check(w, UnitriangularMatrix(rows))
            if rep["excluded"]:
                continue
            done += 1
            cases += 1
            if not rep["ok"]:
                bad.append({"word": list(w), "failures": len(rep["failures"])})
    return _report("bk", n, seed, cases, bad)


def lattice_failures(tiling, a, dual=False) -> list:
    """Pairs without a unique bound, and bounds leaving the Reineke subset."""
    cs = _sorted_crossings(tiling, a, dual)
    leq = {(c, d): poset_leq(c, d) for c in cs for d in cs}
    fails = []
    for i, c in enumerate(cs):
        for d in cs[i:]:
            for upper in (True, False):
                if upper:
                    cand = [e for e in cs if leq[(c, e)] and leq[(d, e)]]
                    best = [e for e in cand if all(leq[(e, f)] for f in cand)]
                else:
                    cand = [e for e in cs if leq[(e, c)] and leq[(e, d)]]
                    best = [e for e in cand if all(leq[(f, e)] for f in cand)]
                if len(best) != 1:
                    fails.append(("missing bound", a, dual))
                elif is_reineke(c) and is_reineke(d) and not is_reineke(best[0]):
                    fails.append(("not a sublattice", a, dual))
    return fails


def reselection_failures(word, a, dual=False) -> list:
    """Reineke crossings that f does not re-select at the negative part of rvec."""
    word = tuple(word)
    tiling = build_tiling(word)
    fails = []
    for c in _sorted_crossings(tiling, a, dual):
        if not is_reineke(c):
            continue
        r = crossing_rvec(c)
        x = LusztigDatum(word, tuple(max(0, -v) for v in r))
        y = (dual_crystal_op if dual else crystal_op)("f", a, x)
        if tuple(p - q for p, q in zip(y.values, x.values)) != r:
            fails.append((list(word), a, dual, list(r)))
    return fails


def verify_lattice(n, seed=0, words_cap=None, lam_max=1) -> dict:
    """Order structure of the crossings and highest-weight crystal sizes."""
    rng = random.Random(f"lattice:{seed}:{n}")
    bad = []
    cases = 0
    words = _pick_words(n, words_cap, rng)
    for w in words:
        tiling = build_tiling(w)
        for a in range(1, n):
            for dual in (False, True):
                cases += 1
                bad.extend({"word": list(w), "where": f} for f in lattice_failures(tiling, a, dual))
                bad.extend({"word": list(w), "where": f} for f in reselection_failures(w, a, dual))
    anchor = words[0]
    for lam in product(range(lam_max + 1), repeat=n - 1):
        cases += 1
        size = len(generate_hw_crystal(lam, anchor))
        want = weyl_dimension(lam)
        if size != want:
            bad.append({"lam": list(lam), "size": size, "dimension": want})
    return _report("lattice", n, seed, cases, bad)


def _report(suite, n, seed, cases, bad) -> dict:
    return {
        "suite": suite,
        "n": n,
        "seed": seed,
        "cases": cases,
        "counterexamples": len(bad),
        "witnesses": bad[:10],
        "ok": not bad,
    }


_SUITES = {
    "crossing": verify_crossing,
    "duality": verify_duality,
    "am": verify_am,
    "rtrans": verify_rtrans,
    "ghkk": verify_ghkk,
    "bk": verify_bk,
    "lattice": verify_lattice,
}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_words(args) -> int:
    words = enumerate_reduced_words(args.n)
    if args.count:
        print(len(words))
    else:
        for w in words:
            print(",".join(map(str, w)))
    return 0


def _cmd_tiling(args) -> int:
    word = _parse_word(args.word)
    tiling = build_tiling(word)
    _emit(
        {
            "n": tiling.n,
            "order": [list(p) for p in convex_order(word)],
            "tiles": [
                {"pair": list(t.pair), "base": list(t.base)}
                for t in sorted(tiling.tiles, key=lambda t: t.pair)
            ],
        }
    )
    return 0


def _cmd_crossings(args) -> int:
    word = _parse_word(args.word)
    tiling = build_tiling(word)
    n = tiling.n
    strips = [args.a] if args.a is not None else list(range(1, n))
    out = []
    vectors = set()
    for a in range(1, n):
        for c in _sorted_crossings(tiling, a, args.dual):
            if is_reineke(c):
                vectors.add(crossing_rvec(c))
            if a in strips:
                out.append(
                    {
                        "tiles": [list(t.pair) for t in c.tiles],
                        "strips": list(c.strips),
                        "dual": c.dual,
                        "rvec": list(crossing_rvec(c)),
                        "reineke": is_reineke(c),
                    }
                )
    _emit(
        {
            "word": list(word),
            "a": args.a,
            "dual": args.dual,
            "crossings": out,
            "reineke_vectors": sorted(list(v) for v in vectors),
        }
    )
    return 0


def _cmd_crystal(args) -> int:
    word = _parse_word(args.word)
    x = LusztigDatum(word, _parse_vector(args.datum))
    starred = args.op.endswith("*")
    kind = args.op.rstrip("*")
    if args.oracle:
        res = (oracle_star_op if starred else oracle_op)(kind, args.a, x)
    else:
        res = (dual_crystal_op if starred else crystal_op)(kind, args.a, x)
    if res is None:
        print("null")
    elif isinstance(res, LusztigDatum):
        print(",".join(map(str, res.values)))
    else:
        print(res)
    return 0


def _cmd_string(args) -> int:
    word = _parse_word(args.word)
    if args.cone:
        cone = string_cone(word)
        _emit({"coords": [list(c) for c in cone.coords], "rows": [list(r) for r in cone.rows]})
        return 0
    if args.datum is None:
        raise SystemExit("string needs --datum or --cone")
    sd = string_datum(LusztigDatum(word, _parse_vector(args.datum)))
    print(",".join(map(str, sd.values)))
    return 0


def _bz_json(z: BZDatum) -> dict:
    values = {_key(s): v for s, v in sorted(z.items) if v}
    return {"n": z.n, "values": values}


def _cmd_bz(args) -> int:
    if args.from_lusztig:
        if args.word is None or args.datum is None:
            raise SystemExit("bz --from-lusztig needs --word and --datum")
        word = _parse_word(args.word)
        z = bz_from_lusztig(LusztigDatum(word, _parse_vector(args.datum)))
        _emit(_bz_json(z))
        return 0
    if args.apply_f:
        if args.n is None or args.values is None or args.a is None:
            raise SystemExit("bz --apply-f needs --n, --a and --values")
        given = json.loads(args.values)
        vals = {}
        for s in proper_subsets(args.n):
            vals[s] = int(given.get(_key(s), 0))
        out = bz_crystal_f(args.a, BZDatum(args.n, vals))
        _emit(_bz_json(out))
        return 0
    raise SystemExit("bz needs --from-lusztig or --apply-f")


def _cmd_cone(args) -> int:
    if not args.polar_check:
        raise SystemExit("cone needs --polar-check")
    word = _parse_word(args.word)
    rep = polar_duality_check(word, box=args.box)
    _emit(
        {
            "word": list(word),
            "box": rep["box"],
            "reached": rep["reached"],
            "cone_points": rep["cone_points"],
            "counterexamples": len(rep["failures"]),
            "ok": rep["ok"],
        }
    )
    return 0 if rep["ok"] else 1


def _cmd_potential(args) -> int:
    word = _parse_word(args.word)
    chosen = [name for name in ("r", "ghkk", "bk") if getattr(args, name)]
    if len(chosen) != 1:
        raise SystemExit("potential needs exactly one of --r, --ghkk, --bk")
    if chosen[0] == "r":
        poly = reineke_poly(word, args.a)
    elif chosen[0] == "ghkk":
        poly = ghkk_restriction(word, args.a)
    else:
        io = neighbour_ansatz(word)
        terms = {}
        for y, coeff in reineke_poly(word, args.a).terms:
            w = tuple(
                sum(io.rows[p][v] * y[p] for p in range(len(y))) for v in range(len(io.src))
            )
            terms[w] = terms.get(w, 0) + coeff
        poly = LaurentPolynomial(io.src, terms)
    _emit(_poly_json(poly))
    return 0


def _cmd_render(args) -> int:
    word = _parse_word(args.word)
    tiling = build_tiling(word)
    decorations = {}
    if args.highlight:
        pairs = []
        for chunk in args.highlight.split(","):
            s, t = chunk.split("-")
            pairs.append((int(s), int(t)))
        decorations["highlight"] = pairs
    if args.comb is not None:
        decorations["highlight"] = sorted(
            t.pair for t in comb(tiling, args.comb)
        )
    if args.labels:
        decorations["vertex_labels"] = True
    svg = render_svg(tiling, decorations)
    with open(args.svg_out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(args.svg_out)
    return 0


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        fn = _SUITES[name]
        rep = fn(args.n, seed=args.seed)
        _emit(rep)
        ok = ok and rep["ok"]
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystaltiles",
        description=(
            "Rhombic tilings and their crystal combinatorics.  Flat vectors "
            "use the anchor word's root order throughout."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("words", help="enumerate reduced words of the longest element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print the count only")
    p.set_defaults(fn=_cmd_words)

    p = sub.add_parser("tiling", help="tile list and root order of a word, as JSON")
    p.add_argument("--word", required=True)
    p.set_defaults(fn=_cmd_tiling)

    p = sub.add_parser("crossings", help="crossing paths of a word, as JSON")
    p.add_argument("--word", required=True)
    p.add_argument("--a", type=int, help="restrict the listing to one strip")
    p.add_argument("--dual", action="store_true")
    p.set_defaults(fn=_cmd_crossings)

    p = sub.add_parser("crystal", help="apply a crystal operator to a datum")
    p.add_argument("--op", required=True, choices=["f", "e", "eps", "f*", "e*", "eps*"])
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--datum", required=True)
    p.add_argument(
        "--oracle", action="store_true", help="use the transport rule instead of crossings"
    )
    p.set_defaults(fn=_cmd_crystal)

    p = sub.add_parser("string", help="string datum of a datum, or the string cone")
    p.add_argument("--word", required=True)
    p.add_argument("--datum")
    p.add_argument("--cone", action="store_true")
    p.set_defaults(fn=_cmd_string)

    p = sub.add_parser("bz", help="subset functions: construction and operator")
    p.add_argument("--from-lusztig", action="store_true", dest="from_lusztig")
    p.add_argument("--apply-f", action="store_true", dest="apply_f")
    p.add_argument("--word")
    p.add_argument("--datum")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--values", help='JSON object like {"1": -1, "1,3": -1}')
    p.set_defaults(fn=_cmd_bz)

    p = sub.add_parser("cone", help="string-cone lattice points against the operators")
    p.add_argument("--polar-check", action="store_true", dest="polar_check")
    p.add_argument("--word", required=True)
    p.add_argument("--box", type=int, default=3)
    p.set_defaults(fn=_cmd_cone)

    p = sub.add_parser("potential", help="crossing polynomials and potentials, as JSON")
    p.add_argument("--word", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--r", action="store_true", help="tile-coordinate crossing polynomial")
    p.add_argument("--ghkk", action="store_true", help="vertex coordinates via chamber map")
    p.add_argument("--bk", action="store_true", help="vertex coordinates via neighbour map")
    p.set_defaults(fn=_cmd_potential)

    p = sub.add_parser("render", help="write an SVG picture of a tiling")
    p.add_argument("--word", required=True)
    p.add_argument("--svg-out", required=True, dest="svg_out")
    p.add_argument("--highlight", help="tiles to shade, e.g. 1-2,2-3")
    p.add_argument("--comb", type=int, help="shade the a-comb instead")
    p.add_argument("--labels", action="store_true")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("verify", help="run a verification suite and report JSON lines")
    p.add_argument("--suite", default="all", choices=["all", *_SUITES])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
