"""Rhombic tilings of the regular 2n-gon.

A reduced word for w0 in S_n determines a tiling of the regular 2n-gon P0
into N = n(n-1)/2 rhombi.  Vertices are subsets S of [n], drawn at
v_S = sum_{s in S} u_s where u_s is the unit vector at angle
pi/2 + (n+1-2s)pi/(2n); edges join subsets differing by one element, which
serves as the edge label.  The tile [s,t; S] has the four vertices
S, S+{s}, S+{t}, S+{s,t}.

This module builds tilings from words, recovers words from tile sets,
computes the border-sweep partitions kappa_s, strips, the induced partial
orders, hexagon flips, combs (closures of maximal crossings) and SVG
pictures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .words import (
    WordMove,
    apply_move,
    applicable_moves,
    convex_order,
    prefix_permutations,
    rank_of_word,
)

__all__ = [
    "Tile",
    "Tiling",
    "Hexagon",
    "build_tiling",
    "word_from_tiles",
    "kappa_partition",
    "strip",
    "s_leq",
    "hexagons",
    "flip",
    "maximal_crossing_path",
    "closure_tiles",
    "comb",
    "find_comb_hexagon",
    "render_svg",
]

Vertex = tuple[int, ...]  # sorted subset of [n]


def _vertex(elements) -> Vertex:
    return tuple(sorted(elements))


def _edge(v1: Vertex, v2: Vertex) -> tuple[Vertex, Vertex]:
    return (v1, v2) if v1 <= v2 else (v2, v1)


def edge_label(edge: tuple[Vertex, Vertex]) -> int:
    """The unique element by which the two endpoint subsets differ."""
    diff = set(edge[0]) ^ set(edge[1])
    if len(diff) != 1:
        raise ValueError(f"{edge} is not a tiling edge")
    return diff.pop()


@dataclass(frozen=True)
class Tile:
    """The rhombus [s,t; S]: pair (s,t) with s < t, base set S disjoint from it."""

    pair: tuple[int, int]
    base: tuple[int, ...]

    def __post_init__(self):
        s, t = self.pair
        if not s < t:
            raise ValueError("tile pair must be ordered")
        if set(self.pair) & set(self.base):
            raise ValueError("tile base must avoid the pair")
        object.__setattr__(self, "base", _vertex(self.base))

    @property
    def lower(self) -> Vertex:
        return self.base

    @property
    def upper(self) -> Vertex:
        return _vertex(self.base + self.pair)

    @property
    def left(self) -> Vertex:
        """Base plus the smaller pair element (the leftward vertex in the plane)."""
        return _vertex(self.base + (self.pair[0],))

    @property
    def right(self) -> Vertex:
        return _vertex(self.base + (self.pair[1],))

    @property
    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        return (self.lower, self.left, self.right, self.upper)

    @property
    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        lo, le, ri, up = self.vertices
        return (_edge(lo, le), _edge(lo, ri), _edge(le, up), _edge(ri, up))

    def __repr__(self):
        s, t = self.pair
        return f"[{s},{t};{{{','.join(map(str, self.base))}}}]"


@dataclass(frozen=True)
class Tiling:
    """A rhombic tiling of the 2n-gon, anchored to a generating word.

    tiles are listed in the word's order, which refines the partial order
    <=_n on tiles; the same tile set may be anchored to any word of its
    commutation class.
    """

    n: int
    word: tuple[int, ...]
    tiles: tuple[Tile, ...]

    @cached_property
    def by_pair(self) -> dict[tuple[int, int], Tile]:
        return {tile.pair: tile for tile in self.tiles}

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(v for tile in self.tiles for v in tile.vertices)

    @cached_property
    def edges(self) -> dict[tuple[Vertex, Vertex], int]:
        """Edge -> label map over all tile edges."""
        return {e: edge_label(e) for tile in self.tiles for e in tile.edges}

    @cached_property
    def edge_tiles(self) -> dict[tuple[Vertex, Vertex], tuple[Tile, ...]]:
        out: dict[tuple[Vertex, Vertex], list[Tile]] = {}
        for tile in self.tiles:
            for e in tile.edges:
                out.setdefault(e, []).append(tile)
        return {e: tuple(ts) for e, ts in out.items()}

    @cached_property
    def adjacency(self) -> dict[Tile, tuple[Tile, ...]]:
        out: dict[Tile, list[Tile]] = {tile: [] for tile in self.tiles}
        for ts in self.edge_tiles.values():
            if len(ts) == 2:
                out[ts[0]].append(ts[1])
                out[ts[1]].append(ts[0])
        return {tile: tuple(ns) for tile, ns in out.items()}

    @cached_property
    def coords(self) -> dict[Vertex, tuple[float, float]]:
        units = {}
        for s in range(1, self.n + 1):
            angle = math.pi / 2 + (self.n + 1 - 2 * s) * math.pi / (2 * self.n)
            units[s] = (math.cos(angle), math.sin(angle))
        return {
            v: (sum(units[s][0] for s in v), sum(units[s][1] for s in v))
            for v in self.vertices
        }

    def center(self, tile: Tile) -> tuple[float, float]:
        pts = [self.coords[v] for v in tile.vertices]
        return (sum(p[0] for p in pts) / 4, sum(p[1] for p in pts) / 4)

    @cached_property
    def boundary_cycle(self) -> tuple[Vertex, ...]:
        """The 2n boundary vertices clockwise from v_emptyset.

        Positions 0..n hold the prefix sets [0], [1], ..., [n] (up the left
        boundary); positions n..2n-1 hold the suffix sets going back down the
        right boundary.  Boundary edge b_k joins positions k-1 and k mod 2n.
        """
        left = [_vertex(range(1, a + 1)) for a in range(0, self.n + 1)]
        right = [_vertex(range(a, self.n + 1)) for a in range(2, self.n + 1)]
        return tuple(left + right)

    def boundary_edge(self, k: int) -> tuple[Vertex, Vertex]:
        """b_k for k in [2n], clockwise from v_emptyset; b_{n+k} is parallel to b_k."""
        cyc = self.boundary_cycle
        m = len(cyc)
        return _edge(cyc[(k - 1) % m], cyc[k % m])

    @cached_property
    def boundary_edge_set(self) -> frozenset[tuple[Vertex, Vertex]]:
        return frozenset(self.boundary_edge(k) for k in range(1, 2 * self.n + 1))


@lru_cache(maxsize=None)
def build_tiling(word: tuple[int, ...]) -> Tiling:
    """The tiling T_i of a reduced word i for w0.

    The k-th tile is [{w_{k-1}(i_k), w_{k-1}(i_k+1)}; w_{k-1}([i_k - 1])]
    where w_k is the product of the first k letters.

    >>> [t.pair for t in build_tiling((2, 1, 2)).tiles]
    [(2, 3), (1, 3), (1, 2)]
    """
    word = tuple(word)
    n = rank_of_word(word)
    convex_order(word)  # raises for non-reduced input
    prefixes = prefix_permutations(word, n)
    tiles = []
    for k, a in enumerate(word):
        w = prefixes[k]
        pair = tuple(sorted((w[a - 1], w[a])))
        base = _vertex(w[b] for b in range(a - 1))
        tiles.append(Tile(pair, base))
    return Tiling(n, word, tuple(tiles))


def word_from_tiles(n: int, tiles) -> tuple[int, ...]:
    """Recover some generating word from a tile set by peeling at the border.

    Starting from the left boundary, repeatedly finds a position p where an
    unused tile fills the corner between border vertices p-1, p, p+1 and
    advances across it, emitting the letter p.  Deterministic (smallest p
    first).  ValueError if the tiles do not tile the 2n-gon.
    """
    remaining = {tile.pair: tile for tile in tiles}
    if len(remaining) != n * (n - 1) // 2:
        raise ValueError("wrong number of tiles")
    border = [_vertex(range(1, a + 1)) for a in range(0, n + 1)]
    word = []
    while remaining:
        for p in range(1, n):
            lower, mid, upper = border[p - 1], border[p], border[p + 1]
            pair = tuple(sorted(set(upper) - set(lower)))
            tile = remaining.get(pair)
            if tile is not None and tile.lower == lower and mid in (tile.left, tile.right):
                other = tile.right if mid == tile.left else tile.left
                border[p] = other
                word.append(p)
                del remaining[pair]
                break
        else:
            raise ValueError("tile set does not tile the polygon")
    return tuple(word)


def kappa_partition(tiling: Tiling, s: int) -> dict[Tile, int]:
    """Level map kappa_s of the border sweep starting opposite the label-s side.

    The initial border B_1 consists of the boundary edges b_{n+s+1}, ...,
    b_{2n+s} (indices mod 2n).  At every step all tiles meeting the current
    border in two edges form the next level, and the border advances across
    them; the sweep ends on the complementary boundary arc.

    >>> t = build_tiling((1, 2, 1))
    >>> {tile.pair: k for tile, k in kappa_partition(t, 4).items()}
    {(1, 3): 1, (1, 2): 2, (2, 3): 3}
    """
    return dict(_kappa_levels(tiling, s))


@lru_cache(maxsize=None)
def _kappa_levels(tiling: Tiling, s: int) -> tuple[tuple[Tile, int], ...]:
    n = tiling.n
    if not 1 <= s <= 2 * n:
        raise ValueError(f"s must lie in [2n] = [{2 * n}]")
    cyc = tiling.boundary_cycle
    m = len(cyc)
    border = [cyc[(n + s + j) % m] for j in range(0, n + 1)]
    levels: dict[Tile, int] = {}
    for level in range(1, len(tiling.tiles) + 2):
        found: list[tuple[int, Tile]] = []
        for p in range(1, n):
            e1 = _edge(border[p - 1], border[p])
            e2 = _edge(border[p], border[p + 1])
            hits = [
                tile
                for tile in tiling.edge_tiles.get(e1, ())
                if tile in tiling.edge_tiles.get(e2, ()) and tile not in levels
            ]
            if hits:
                found.append((p, hits[0]))
        if not found:
            break
        seen = [tile for _, tile in found]
        assert len(set(seen)) == len(seen), "tile met the border at two corners"
        for p, tile in found:
            levels[tile] = level
            fourth = set(border[p - 1]) ^ set(border[p]) ^ set(border[p + 1])
            border[p] = _vertex(fourth)
    if len(levels) != len(tiling.tiles):
        raise AssertionError(f"border sweep stalled at s={s} for {tiling.word}")
    return tuple(levels.items())


def strip(tiling: Tiling, s: int) -> tuple[Tile, ...]:
    """The s-strip: the n-1 tiles with an s-labeled edge, from the left boundary.

    Consecutive strip tiles share an edge labeled s; the first contains the
    left-boundary edge b_s and the last the right-boundary edge b_{n+s}.
    """
    n = tiling.n
    if not 1 <= s <= n:
        raise ValueError(f"strip labels lie in [n] = [{n}]")
    edge = tiling.boundary_edge(s)
    out = []
    prev = None
    while True:
        hits = [t for t in tiling.edge_tiles[edge] if t is not prev]
        if not hits:
            break
        tile = hits[0]
        out.append(tile)
        s_edges = [e for e in tile.edges if tiling.edges[e] == s]
        edge = s_edges[0] if s_edges[1] == edge else s_edges[1]
        prev = tile
    if len(out) != n - 1:
        raise AssertionError(f"strip {s} has {len(out)} tiles")
    return tuple(out)


def s_leq(tiling: Tiling, s: int, t1: Tile, t2: Tile) -> bool:
    """The partial order <=_s: does an s-ascending neighbour sequence run t1 -> t2?

    Ascending means the kappa_s level strictly increases between all
    consecutive members; members must share edges.  Reflexive.
    """
    if t1 == t2:
        return True
    kappa = kappa_partition(tiling, s)
    frontier = [t1]
    seen = {t1}
    while frontier:
        nxt = []
        for cur in frontier:
            for nb in tiling.adjacency[cur]:
                if nb in seen or kappa[nb] <= kappa[cur]:
                    continue
                if nb == t2:
                    return True
                seen.add(nb)
                nxt.append(nb)
        frontier = nxt
    return False


@dataclass(frozen=True)
class Hexagon:
    """Three tiles [s,t], [s,u], [t,u] (s < t < u) filling a regular 6-gon.

    left_form means the bases are ([s,t;S], [s,u;S+{t}], [t,u;S]); the flip
    exchanges this with the right form ([s,t;S+{u}], [s,u;S], [t,u;S+{s}]).
    """

    tiles: tuple[Tile, Tile, Tile]
    support: tuple[int, int, int]
    base: tuple[int, ...]
    left_form: bool

    def flipped_tiles(self) -> tuple[Tile, Tile, Tile]:
        s, t, u = self.support
        if self.left_form:
            return (
                Tile((s, t), _vertex(self.base + (u,))),
                Tile((s, u), self.base),
                Tile((t, u), _vertex(self.base + (s,))),
            )
        return (
            Tile((s, t), self.base),
            Tile((s, u), _vertex(self.base + (t,))),
            Tile((t, u), self.base),
        )


def hexagons(tiling: Tiling) -> tuple[Hexagon, ...]:
    """All hexagons of the tiling, sorted by support triple."""
    out = []
    n = tiling.n
    for s in range(1, n + 1):
        for t in range(s + 1, n + 1):
            for u in range(t + 1, n + 1):
                st, su, tu = (
                    tiling.by_pair[(s, t)],
                    tiling.by_pair[(s, u)],
                    tiling.by_pair[(t, u)],
                )
                if st.base == tu.base and su.base == _vertex(st.base + (t,)):
                    out.append(Hexagon((st, su, tu), (s, t, u), st.base, True))
                elif st.base == _vertex(su.base + (u,)) and tu.base == _vertex(
                    su.base + (s,)
                ):
                    out.append(Hexagon((st, su, tu), (s, t, u), su.base, False))
    return tuple(out)


def _as_hexagon(tiling: Tiling, hexagon) -> Hexagon:
    if isinstance(hexagon, Hexagon):
        candidates = [h for h in hexagons(tiling) if h == hexagon]
    else:
        wanted = set()
        for item in hexagon:
            wanted.add(item.pair if isinstance(item, Tile) else tuple(sorted(item)))
        candidates = [
            h for h in hexagons(tiling) if {t.pair for t in h.tiles} == wanted
        ]
    if not candidates:
        raise ValueError("the given tiles do not form a hexagon of this tiling")
    return candidates[0]


def flip(tiling: Tiling, hexagon) -> tuple[Tiling, WordMove]:
    """Flip the tiling at a hexagon; returns the new tiling and the braid move.

    The move applies at a word generating the input tiling (reachable from
    the anchor by commutation moves alone); the returned tiling is anchored
    to the braided word, so applying the same move to its anchor recovers the
    pre-flip word.  Flipping twice restores the tile set.
    """
    hexagon = _as_hexagon(tiling, hexagon)
    pairs = {t.pair for t in hexagon.tiles}
    seen = {tiling.word}
    frontier = [tiling.word]
    while frontier:
        nxt = []
        for w in frontier:
            order = convex_order(w)
            for mv in applicable_moves(w):
                if mv.kind == "braid":
                    p = mv.position - 1
                    if {order[p], order[p + 1], order[p + 2]} == pairs:
                        new_word = apply_move(w, mv)
                        new_tiling = build_tiling(new_word)
                        expected = (set(tiling.tiles) - set(hexagon.tiles)) | set(
                            hexagon.flipped_tiles()
                        )
                        assert set(new_tiling.tiles) == expected
                        return new_tiling, mv
                    continue
                u = apply_move(w, mv)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    raise AssertionError("hexagon never becomes letter-adjacent")  # unreachable


def maximal_crossing_path(tiling: Tiling, a: int, dual: bool = False) -> tuple[Tile, ...]:
    """The tile path of the maximal a-crossing, with strip sequence (a, a+1).

    Runs along the a-strip to the tile [a,a+1] and back along the (a+1)-strip.
    Primal: from the left boundary; dual: from the right boundary.
    """
    strip_a = strip(tiling, a)
    strip_b = strip(tiling, a + 1)
    if dual:
        strip_a = tuple(reversed(strip_a))
        strip_b = tuple(reversed(strip_b))
    corner = tiling.by_pair[(a, a + 1)]
    ia, ib = strip_a.index(corner), strip_b.index(corner)
    return strip_a[: ia + 1] + tuple(reversed(strip_b[:ib]))


def closure_tiles(
    tiling: Tiling, path, a: int, dual: bool = False
) -> frozenset[Tile]:
    """Closure of a crossing path: the path plus every tile left of it.

    The path, extended to the midpoints of the boundary edges labeled a and
    a+1 (left boundary for primal crossings, right boundary for dual ones),
    is a simple arc splitting the polygon into two regions.  Closing the arc
    with the short boundary stretch through the corner vertex between those
    edges gives a polygon whose orientation tells which region lies left of
    travel; tile centers are then classified by an even-odd test.  Every
    adjacency component of the complement must land on one side, which is
    asserted.
    """
    path = tuple(path)
    n = tiling.n
    cyc = tiling.boundary_cycle

    def mid(v1, v2):
        (x1, y1), (x2, y2) = tiling.coords[v1], tiling.coords[v2]
        return ((x1 + x2) / 2, (y1 + y2) / 2)

    if dual:
        def suffix(k):
            return _vertex(range(k, n + 1))

        start = mid(suffix(a), suffix(a + 1))
        end = mid(suffix(a + 1), suffix(a + 2))
        corner = tiling.coords[suffix(a + 1)]
    else:
        start = mid(cyc[a - 1], cyc[a])
        end = mid(cyc[a], cyc[(a + 1) % len(cyc)])
        corner = tiling.coords[cyc[a]]

    poly = [start] + [tiling.center(t) for t in path] + [end, corner]
    area2 = sum(
        x1 * y2 - x2 * y1
        for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1])
    )
    # Rotate by a fixed irrational angle so no ray-casting edge is horizontal.
    cs, sn = math.cos(0.1234567), math.sin(0.1234567)

    def rot(p):
        return (cs * p[0] - sn * p[1], sn * p[0] + cs * p[1])

    rpoly = [rot(p) for p in poly]

    def interior(p):
        px, py = rot(p)
        hits = 0
        for (x1, y1), (x2, y2) in zip(rpoly, rpoly[1:] + rpoly[:1]):
            if (y1 > py) != (y2 > py) and px < x1 + (py - y1) * (x2 - x1) / (y2 - y1):
                hits += 1
        return hits % 2 == 1

    in_path = set(path)
    left = {t for t in tiling.tiles if t not in in_path and interior(tiling.center(t))}
    if area2 < 0:
        left = set(tiling.tiles) - in_path - left

    unseen = set(tiling.tiles) - in_path
    while unseen:
        comp = {unseen.pop()}
        frontier = list(comp)
        while frontier:
            cur = frontier.pop()
            for nb in tiling.adjacency[cur]:
                if nb in unseen:
                    unseen.discard(nb)
                    comp.add(nb)
                    frontier.append(nb)
        sides = {t in left for t in comp}
        assert len(sides) == 1, "component straddles the crossing path"
    return frozenset(in_path | left)


def comb(tiling: Tiling, a: int) -> frozenset[Tile]:
    """The a-comb: closure of the maximal a-crossing.

    >>> sorted(t.pair for t in comb(build_tiling((1, 2, 1)), 1))
    [(1, 2)]
    """
    if not 1 <= a <= tiling.n - 1:
        raise ValueError(f"a must lie in [n-1] = [{tiling.n - 1}]")
    return closure_tiles(tiling, maximal_crossing_path(tiling, a), a)


def find_comb_hexagon(tiling: Tiling, a: int) -> Hexagon | None:
    """A hexagon {[a,s], [a,t], [s,t]} inside the a-comb.

    Exists whenever the comb has more than one tile; None for the
    single-tile comb (words starting with the letter a, up to commutation).
    """
    tiles = comb(tiling, a)
    if len(tiles) == 1:
        return None
    for h in hexagons(tiling):
        if a in h.support and set(h.tiles) <= tiles:
            return h
    raise AssertionError(f"comb of size {len(tiles)} contains no hexagon through {a}")


_HIGHLIGHT = "#f4c7c3"
_POLYLINE = "#c0392b"


def render_svg(tiling: Tiling, decorations: dict | None = None) -> str:
    """A deterministic SVG picture of the tiling.

    decorations keys (all optional):
      "highlight": iterable of tiles or pairs to shade;
      "polyline":  sequence of tiles or pairs to join through their centers;
      "edge_labels", "vertex_labels": booleans.
    Unknown keys or unknown tiles raise ValueError.
    """
    decorations = dict(decorations or {})
    unknown = set(decorations) - {"highlight", "polyline", "edge_labels", "vertex_labels"}
    if unknown:
        raise ValueError(f"unknown decoration keys: {sorted(unknown)}")

    def as_tile(item) -> Tile:
        pair = item.pair if isinstance(item, Tile) else tuple(sorted(item))
        if pair not in tiling.by_pair:
            raise ValueError(f"no tile with pair {pair}")
        return tiling.by_pair[pair]

    highlight = {as_tile(t) for t in decorations.get("highlight", ())}
    polyline = [as_tile(t) for t in decorations.get("polyline", ())]

    scale = 60.0
    xs = [p[0] for p in tiling.coords.values()]
    ys = [p[1] for p in tiling.coords.values()]
    margin = 0.4
    width = (max(xs) - min(xs) + 2 * margin) * scale
    height = (max(ys) - min(ys) + 2 * margin) * scale

    def pt(p):
        x = (p[0] - min(xs) + margin) * scale
        y = (max(ys) - p[1] + margin) * scale
        return f"{x:.2f},{y:.2f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">'
    ]
    for tile in tiling.tiles:
        lo, le, ri, up = tile.vertices
        corners = " ".join(pt(tiling.coords[v]) for v in (lo, le, up, ri))
        fill = _HIGHLIGHT if tile in highlight else "white"
        lines.append(
            f'<polygon points="{corners}" fill="{fill}" stroke="black" '
            f'stroke-width="1"/>'
        )
    if polyline:
        pts = " ".join(pt(tiling.center(t)) for t in polyline)
        lines.append(
            f'<polyline points="{pts}" fill="none" stroke="{_POLYLINE}" '
            f'stroke-width="2"/>'
        )
    if decorations.get("edge_labels"):
        for edge in sorted(tiling.edges):
            (x1, y1), (x2, y2) = tiling.coords[edge[0]], tiling.coords[edge[1]]
            lines.append(
                f'<text x="{pt(((x1 + x2) / 2, (y1 + y2) / 2)).split(",")[0]}" '
                f'y="{pt(((x1 + x2) / 2, (y1 + y2) / 2)).split(",")[1]}" '
                f'font-size="10" text-anchor="middle">{tiling.edges[edge]}</text>'
            )
    if decorations.get("vertex_labels"):
        for v in sorted(tiling.vertices):
            label = "{" + ",".join(map(str, v)) + "}"
            x, y = pt(tiling.coords[v]).split(",")
            lines.append(
                f'<text x="{x}" y="{y}" font-size="9" text-anchor="middle" '
                f'fill="#555">{label}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines)
