"""String data, the string crystal operator, and string cones.

The string datum of a Lusztig datum x anchored to i = (i_1, ..., i_N) is the
vector (c_1, ..., c_N) with c_k = eps_{i_k} of the current element, which is
then raised by e_{i_k} that many times; after the last step nothing remains.
The string operator acts on these vectors directly: among positions j with
i_j = a it increments the smallest one maximizing

    nu_j(s) = s_j + sum_{j < t <= N} <h_{i_j}, alpha_{i_t}> s_t,

and this matches the starred operator on the Lusztig side, datum by datum.

The set of all string data of a word is cut out by the dual Reineke vectors:
s is a string datum iff <r, s> >= 0 for every dual Reineke vector r of the
word's tiling, coordinates read in the word's root order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .crossings import crystal_op, dual_crystal_op, reineke_vectors
from .lusztig import LusztigDatum
from .tiling import build_tiling
from .words import cartan_pairing, convex_order, is_reduced_word, rank_of_word

__all__ = [
    "StringDatum",
    "Cone",
    "string_datum",
    "string_op_f",
    "string_cone",
    "cone_points",
    "polar_duality_check",
]


@dataclass(frozen=True)
class StringDatum:
    """An integer vector in the position coordinates of its anchor word."""

    word: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != len(self.word):
            raise ValueError("one coordinate per word position")

    @property
    def n(self) -> int:
        return rank_of_word(self.word)


@dataclass(frozen=True)
class Cone:
    """{v : <row, v> >= 0 for all rows}, coordinates labeled by coords."""

    coords: tuple
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(
            self, "rows", tuple(tuple(int(c) for c in row) for row in self.rows)
        )
        if any(len(row) != len(self.coords) for row in self.rows):
            raise ValueError("rows must have one entry per coordinate")

    def contains(self, vec) -> bool:
        vec = tuple(vec)
        if len(vec) != len(self.coords):
            raise ValueError("vector arity mismatch")
        return all(sum(c * v for c, v in zip(row, vec)) >= 0 for row in self.rows)

    def inequalities(self) -> list[str]:
        """Human-readable rows, one '... >= 0' line per row."""
        out = []
        for row in self.rows:
            terms = []
            for c, label in zip(row, self.coords):
                if c == 0:
                    continue
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                if isinstance(label, tuple):
                    name = f"v[{','.join(map(str, label))}]"
                else:
                    name = f"v[{label}]"
                terms.append(("- " if c < 0 else "+ ") + mag + name)
            lead = " ".join(terms).lstrip("+ ") or "0"
            out.append(f"{lead} >= 0")
        return out


def string_datum(x: LusztigDatum) -> StringDatum:
    """Read off eps_{i_k} along the word while raising by e_{i_k} each time.

    The element must be exhausted at the end; a nonzero residue would mean a
    broken operator and is asserted against.

    >>> string_datum(LusztigDatum((1, 2, 1), (0, 0, 1))).values
    (0, 1, 0)
    """
    cur = x
    out = []
    for a in x.word:
        c = crystal_op("eps", a, cur)
        for _ in range(c):
            cur = crystal_op("e", a, cur)
        out.append(c)
    assert all(v == 0 for v in cur.values), "string recursion left a residue"
    return StringDatum(x.word, tuple(out))


def string_op_f(a: int, s: StringDatum) -> StringDatum:
    """Increment the smallest position j with i_j = a maximizing nu_j.

    >>> string_op_f(2, StringDatum((1, 2, 1), (0, 0, 0))).values
    (0, 1, 0)
    >>> string_op_f(1, StringDatum((1, 2, 1), (0, 1, 0))).values
    (0, 1, 1)
    """
    word, vals = s.word, s.values
    n_pos = len(word)
    best = None
    best_j = None
    for j in range(n_pos):
        if word[j] != a:
            continue
        nu = vals[j] + sum(
            cartan_pairing(word[j], word[t]) * vals[t] for t in range(j + 1, n_pos)
        )
        if best is None or nu > best:
            best, best_j = nu, j
    if best_j is None:
        raise ValueError(f"letter {a} does not occur in the word")
    return StringDatum(word, tuple(v + (j == best_j) for j, v in enumerate(vals)))


@lru_cache(maxsize=None)
def string_cone(word: tuple[int, ...]) -> Cone:
    """Cone of all string data: rows are the dual Reineke vectors of the word.

    >>> string_cone((2, 1, 2)).rows
    ((0, 0, 1), (0, 1, -1), (1, 0, 0))
    """
    word = tuple(word)
    n = rank_of_word(word)
    if not is_reduced_word(word, n):
        raise ValueError("anchor must be a reduced word")
    tiling = build_tiling(word)
    rows = set()
    for a in range(1, n):
        rows |= reineke_vectors(tiling, a, dual=True)
    return Cone(convex_order(word), tuple(sorted(rows)))


def cone_points(cone: Cone, box: int) -> set[tuple[int, ...]]:
    """Integer points of the cone with all coordinates in {0, ..., box}."""
    dim = len(cone.coords)
    return {
        p for p in product(range(box + 1), repeat=dim) if cone.contains(p)
    }


def polar_duality_check(word, box: int = 4, depth: int | None = None) -> dict:
    """Match f*-reachable string data against the cone, both directions.

    Searches the crystal from the origin by starred operators, keeping only
    elements whose string datum stays inside the box (string data grow by a
    unit step per application, so nothing inside the box is lost).  Checks:

      a. every reached string datum satisfies all cone rows;
      b. every integer cone point in the box is reached, and recomputing its
         string datum from the Lusztig side reproduces it;
      c. each search step changes the datum by a unit vector e_k with
         i_k = a, and agrees with the direct string operator.

    Returns a report dict; "ok" is True when all three hold exactly.
    """
    word = tuple(word)
    n = rank_of_word(word)
    cone = string_cone(word)
    failures = []

    zero = LusztigDatum(word, (0,) * len(word))
    reached = {string_datum(zero).values: zero}
    frontier = [zero]
    layer = 0
    while frontier and (depth is None or layer < depth):
        layer += 1
        nxt = []
        for y in frontier:
            s = string_datum(y)
            for a in range(1, n):
                z = dual_crystal_op("f", a, y)
                sz = string_datum(z)
                step = tuple(u - v for u, v in zip(sz.values, s.values))
                unit = [k for k, d in enumerate(step) if d != 0]
                if not (len(unit) == 1 and step[unit[0]] == 1 and word[unit[0]] == a):
                    failures.append(("step", a, s.values, sz.values))
                if string_op_f(a, s).values != sz.values:
                    failures.append(("string-op", a, s.values, sz.values))
                if max(sz.values) > box:
                    continue
                if sz.values not in reached:
                    reached[sz.values] = z
                    nxt.append(z)
        frontier = nxt

    points = cone_points(cone, box)
    for s in reached:
        if s not in points:
            failures.append(("outside-cone", s))
    for p in points:
        if p not in reached:
            failures.append(("unreached", p))

    return {
        "word": word,
        "box": box,
        "reached": len(reached),
        "cone_points": len(points),
        "failures": failures,
        "ok": not failures,
    }
