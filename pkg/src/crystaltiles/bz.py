"""BZ data: subset-indexed integer vectors behind MV polytopes.

A w0-normalized BZ datum assigns an integer z_S to every nonempty proper
subset S of [n] (z of the empty and full set read as 0) subject to

  * normalization: z vanishes on the suffix sets {n-a+1, ..., n};
  * edge inequalities, one per permutation sigma and letter a:
      z_{sigma[a]} + z_{sigma s_a [a]} + sum_{b != a} <alpha_a, alpha_b>
      z_{sigma[b]} <= 0;
  * tropical Pluecker relations for adjacent letters |a - b| = 1 and
    sigma with sigma s_a > sigma, sigma s_b > sigma:
      z_{sigma s_a [a]} + z_{sigma s_b [b]}
        = min(z_{sigma[a]} + z_{sigma s_a s_b [b]},
              z_{sigma[b]} + z_{sigma s_b s_a [a]}).
    For non-adjacent a, b the min degenerates and the printed relation
    fails on valid data, so only adjacent triples are constraints.

The tropical Chamber Ansatz reads a Lusztig datum off a tiling vertex-wise,
x_T = z_o + z_u - z_l - z_r over the four corners of T; inverting it tile
system by tile system reconstructs z from x.  The crystal operator descends
to the subset side as a 0/1 decrement rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations

from .lusztig import LusztigDatum, transition
from .tiling import build_tiling
from .words import (
    MAX_ENUM_RANK,
    cartan_pairing,
    compose,
    enumerate_reduced_words,
    inverse,
    longest_element,
    num_positive_roots,
    permutation_of_word,
    reduced_word_of_permutation,
)

__all__ = [
    "BZDatum",
    "proper_subsets",
    "validate_bz",
    "trop_chamber_ansatz",
    "bz_from_lusztig",
    "find_word_with_vertex",
    "bz_crystal_f",
]


@lru_cache(maxsize=None)
def proper_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """All nonempty proper subsets of [n] as sorted tuples."""
    out = []
    for k in range(1, n):
        out.extend(combinations(range(1, n + 1), k))
    return tuple(out)


@dataclass(frozen=True)
class BZDatum:
    """Integer values on the nonempty proper subsets of [n]."""

    n: int
    items: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        wanted = proper_subsets(self.n)
        mapping = dict(self.items) if not isinstance(self.items, dict) else dict(self.items.items())
        mapping = {tuple(sorted(k)): int(v) for k, v in mapping.items()}
        if set(mapping) != set(wanted):
            raise ValueError("values must cover exactly the nonempty proper subsets")
        object.__setattr__(self, "items", tuple((s, mapping[s]) for s in wanted))

    @cached_property
    def _dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.items)

    def value(self, subset) -> int:
        """z_S; the empty and full set count as 0."""
        s = tuple(sorted(subset))
        if s == () or s == tuple(range(1, self.n + 1)):
            return 0
        return self._dict[s]

    def __repr__(self):
        nz = {s: v for s, v in self.items if v}
        return f"BZDatum(n={self.n}, nonzero={nz})"


def _sigma_a(subset: tuple[int, ...], a: int) -> tuple[int, ...]:
    return tuple(sorted((set(subset) - {a}) | {a + 1}))


def _image(perm: tuple[int, ...], k: int) -> tuple[int, ...]:
    """sigma([k]) as a sorted tuple, sigma in one-line notation."""
    return tuple(sorted(perm[:k]))


def validate_bz(z: BZDatum, seed: int = 0) -> dict:
    """Check normalization, edge inequalities, and Pluecker relations.

    All permutations are swept for n <= 5; for larger n a seeded sample of
    200 is used.  Returns a report dict with any violations listed.
    """
    n = z.n
    failures = []
    for a in range(1, n):
        suffix = tuple(range(n - a + 1, n + 1))
        if z.value(suffix) != 0:
            failures.append(("normalization", suffix, z.value(suffix)))

    perms = list(permutations(range(1, n + 1)))
    if n > 5:
        import random

        perms = random.Random(seed).sample(perms, 200)

    for sigma in perms:
        for a in range(1, n):
            lhs = z.value(_image(sigma, a)) + z.value(_image(_right_mul(sigma, a), a))
            for b in range(1, n):
                if b != a:
                    lhs += cartan_pairing(a, b) * z.value(_image(sigma, b))
            if lhs > 0:
                failures.append(("edge", sigma, a, lhs))
        for a in range(1, n):
            for b in (a - 1, a + 1):
                if not 1 <= b < n or not (sigma[a - 1] < sigma[a] and sigma[b - 1] < sigma[b]):
                    continue
                sig_a = _right_mul(sigma, a)
                sig_b = _right_mul(sigma, b)
                lhs = z.value(_image(sig_a, a)) + z.value(_image(sig_b, b))
                rhs = min(
                    z.value(_image(sigma, a)) + z.value(_image(_right_mul(sig_a, b), b)),
                    z.value(_image(sigma, b)) + z.value(_image(_right_mul(sig_b, a), a)),
                )
                if lhs != rhs:
                    failures.append(("pluecker", sigma, a, b, lhs, rhs))
    return {"n": n, "failures": failures, "ok": not failures}


def _right_mul(perm: tuple[int, ...], a: int) -> tuple[int, ...]:
    """perm * s_a in one-line notation (swap the values at positions a, a+1)."""
    out = list(perm)
    out[a - 1], out[a] = out[a], out[a - 1]
    return tuple(out)


def trop_chamber_ansatz(z: BZDatum, word) -> LusztigDatum:
    """Read the Lusztig datum of a word off a BZ datum, tile by tile.

    >>> zero = BZDatum(3, {s: 0 for s in proper_subsets(3)})
    >>> trop_chamber_ansatz(zero, (1, 2, 1)).values
    (0, 0, 0)
    """
    word = tuple(word)
    tiling = build_tiling(word)
    vals = []
    for tile in tiling.tiles:
        s, t = tile.pair
        base = set(tile.base)
        x = (
            z.value(base | {s, t})
            + z.value(base)
            - z.value(base | {s})
            - z.value(base | {t})
        )
        assert x >= 0, f"negative coordinate at {tile}: invalid BZ datum"
        vals.append(x)
    return LusztigDatum(word, tuple(vals))


@lru_cache(maxsize=None)
def _vertex_solver(word: tuple[int, ...]):
    """Integer inverse of the tile system of a word's tiling.

    Unknowns are the vertex subsets that are not pinned to zero (the empty,
    full, and suffix sets); one equation per tile.  The matrix is asserted
    unimodular, so the inverse is integral and solutions are exact.
    """
    from sympy import Matrix

    tiling = build_tiling(word)
    n = tiling.n
    fixed = {(), tuple(range(1, n + 1))}
    fixed |= {tuple(range(k, n + 1)) for k in range(2, n + 1)}
    unknowns = sorted(v for v in tiling.vertices if v not in fixed)
    index = {v: i for i, v in enumerate(unknowns)}
    rows = []
    for tile in tiling.tiles:
        s, t = tile.pair
        base = set(tile.base)
        row = [0] * len(unknowns)
        for subset, coeff in (
            (base | {s, t}, 1),
            (base, 1),
            (base | {s}, -1),
            (base | {t}, -1),
        ):
            key = tuple(sorted(subset))
            if key not in fixed:
                row[index[key]] += coeff
        rows.append(row)
    m = Matrix(rows)
    det = m.det()
    assert det in (1, -1), f"tile system of {word} is not unimodular (det {det})"
    inv = m.inv()
    inv_rows = tuple(tuple(int(c) for c in inv.row(i)) for i in range(len(unknowns)))
    return tuple(unknowns), inv_rows


@lru_cache(maxsize=None)
def find_word_with_vertex(subset: tuple[int, ...], n: int) -> tuple[int, ...]:
    """A reduced word whose tiling has v_subset among its vertices.

    Factor the longest element through the permutation sending an initial
    block to the subset (ascending), so the subset becomes a chamber set.
    Falls back to exhaustive search if the constructed word misses it.
    """
    subset = tuple(sorted(subset))
    if not subset or len(subset) >= n:
        raise ValueError("subset must be nonempty and proper")
    block = list(subset) + sorted(set(range(1, n + 1)) - set(subset))
    u = tuple(block)
    head = reduced_word_of_permutation(u)
    tail = reduced_word_of_permutation(compose(inverse(u), longest_element(n)))
    word = head + tail
    if (
        permutation_of_word(word, n) == longest_element(n)
        and len(word) == num_positive_roots(n)
        and subset in build_tiling(word).vertices
    ):
        return word
    if n > MAX_ENUM_RANK:
        raise ValueError(f"no word found and n = {n} too large to search")
    for cand in enumerate_reduced_words(n):
        if subset in build_tiling(cand).vertices:
            return cand
    raise AssertionError(f"no tiling of rank {n} has vertex {subset}")


def bz_from_lusztig(x: LusztigDatum) -> BZDatum:
    """Reconstruct the BZ datum of a crystal element from one Lusztig datum.

    Solves the anchor word's tile system, then covers the remaining subsets
    by transporting x to words whose tilings contain them; overlapping
    solutions must agree and are asserted to.

    >>> bz_from_lusztig(LusztigDatum((1, 2, 1), (0, 0, 0)))
    BZDatum(n=3, nonzero={})
    """
    n = x.n
    values: dict[tuple[int, ...], int] = {}

    def solve_into(word, datum):
        unknowns, inv_rows = _vertex_solver(word)
        sol = [
            sum(c * v for c, v in zip(row, datum.values)) for row in inv_rows
        ]
        for subset, val in zip(unknowns, sol):
            if subset in values:
                assert values[subset] == val, (
                    f"inconsistent value at {subset}: {values[subset]} vs {val}"
                )
            else:
                values[subset] = val

    solve_into(x.word, x)
    for subset in proper_subsets(n):
        if subset in values:
            continue
        word = find_word_with_vertex(subset, n)
        solve_into(word, transition(x, word))
    for k in range(2, n + 1):
        values[tuple(range(k, n + 1))] = 0
    return BZDatum(n, values)


def bz_crystal_f(a: int, z: BZDatum) -> BZDatum:
    """Apply f_a on the subset side.

    z_S drops by 1 exactly when a is in S, a+1 is not, and the difference
    z_S - z_{sigma_a S} meets its upper bound z_{[a]} - z_{sigma_a [a]};
    the bound itself is asserted, and the equivalent max-form decrement
    max(0, z_S - z_{sigma_a S} + z_{sigma_a [a]} - z_{[a]} + 1) is computed
    independently and asserted equal.
    """
    n = z.n
    if not 1 <= a <= n - 1:
        raise ValueError(f"a must lie in [n-1] = [{n - 1}]")
    head = tuple(range(1, a + 1))
    bound = z.value(head) - z.value(_sigma_a(head, a))
    out = {}
    for subset in proper_subsets(n):
        val = z.value(subset)
        if a in subset and a + 1 not in subset:
            diff = val - z.value(_sigma_a(subset, a))
            assert diff <= bound, (
                f"upper bound violated at {subset}: {diff} > {bound}"
            )
            dec = 1 if diff >= bound else 0
            assert dec == max(0, diff - bound + 1), "decrement forms disagree"
            val -= dec
        out[subset] = val
    return BZDatum(n, out)
