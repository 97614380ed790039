"""Reduced words for the longest permutation and the moves connecting them.

Permutations of [n] = {1, ..., n} are stored in one-line notation as tuples
``(w(1), ..., w(n))``.  A word ``(i_1, ..., i_k)`` denotes the product
``s_{i_1} s_{i_2} ... s_{i_k}`` of simple transpositions, applied right to
left: the letter ``i_k`` acts first.

The longest element w0 (the order-reversing permutation) has length
N = n(n-1)/2, and every word for w0 of length N is automatically reduced.
Any two reduced words for w0 are connected by commutation moves
(swap adjacent letters a, b with |a-b| >= 2) and braid moves
(replace a, b, a by b, a, b for |a-b| = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "MAX_ENUM_RANK",
    "WordMove",
    "identity",
    "longest_element",
    "compose",
    "inverse",
    "permutation_of_word",
    "reduced_word_of_permutation",
    "rank_of_word",
    "is_reduced_word",
    "enumerate_reduced_words",
    "count_reduced_words",
    "applicable_moves",
    "apply_move",
    "move_path",
    "prefix_permutations",
    "convex_order",
    "star_word",
    "positive_roots",
    "cartan_pairing",
    "root_span",
]

# Full enumeration of reduced words beyond rank 7 is astronomically large
# (n = 8 already has ~2.4e9 words); refuse rather than thrash.
MAX_ENUM_RANK = 7

Permutation = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation w0, mapping a to n + 1 - a."""
    return tuple(range(n, 0, -1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(a) = u(v(a))."""
    return tuple(u[b - 1] for b in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for a, b in enumerate(w, start=1):
        out[b - 1] = a
    return tuple(out)


def _right_multiply(w: Permutation, a: int) -> Permutation:
    """w o s_a: swaps the entries at positions a, a+1 of one-line notation."""
    lst = list(w)
    lst[a - 1], lst[a] = lst[a], lst[a - 1]
    return tuple(lst)


def permutation_of_word(word: Word, n: int) -> Permutation:
    """Evaluate s_{i_1} ... s_{i_k} as a permutation of [n].

    >>> permutation_of_word((1, 2, 1), 3)
    (3, 2, 1)
    """
    w = identity(n)
    for a in word:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} outside [{n - 1}]")
        w = _right_multiply(w, a)
    return w


def reduced_word_of_permutation(w: Permutation) -> Word:
    """Some reduced word for w (lexicographically smallest factor choices).

    Peels descents on the right: if w(a) > w(a+1) then w s_a is shorter.

    >>> reduced_word_of_permutation((3, 2, 1))
    (1, 2, 1)
    """
    n = len(w)
    suffix = []
    cur = w
    while True:
        a = next((a for a in range(1, n) if cur[a - 1] > cur[a]), None)
        if a is None:
            break
        suffix.append(a)
        cur = _right_multiply(cur, a)
    return tuple(reversed(suffix))


def length(w: Permutation) -> int:
    """Coxeter length: the number of inversions of w."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def num_positive_roots(n: int) -> int:
    return n * (n - 1) // 2


def rank_of_word(word: Word) -> int:
    """Recover n from the length N = n(n-1)/2 of a reduced word for w0."""
    big_n = len(word)
    n = (1 + math.isqrt(1 + 8 * big_n)) // 2
    if num_positive_roots(n) != big_n:
        raise ValueError(f"word length {big_n} is not n(n-1)/2 for any n")
    return n


def is_reduced_word(word, n: int) -> bool:
    """True iff word is a reduced word for the longest element of S_n.

    A word of length n(n-1)/2 with product w0 is automatically reduced, so no
    length-descent bookkeeping is needed.  Letters outside [n-1] are malformed
    input and raise ValueError.

    >>> is_reduced_word((1, 2, 1), 3)
    True
    >>> is_reduced_word((1, 2, 2), 3)
    False
    """
    word = tuple(word)
    if len(word) != num_positive_roots(n):
        for a in word:
            if not (isinstance(a, int) and 1 <= a <= n - 1):
                raise ValueError(f"letter {a!r} outside [{n - 1}]")
        return False
    return permutation_of_word(word, n) == longest_element(n)


@dataclass(frozen=True, order=True)
class WordMove:
    """A local rewrite at a 1-based position of a word.

    kind 'commutation' swaps letters at positions (position, position+1);
    kind 'braid' rewrites (a, b, a) -> (b, a, b) at positions
    (position, position+1, position+2).  Both are involutive.
    """

    kind: str
    position: int

    def __post_init__(self):
        if self.kind not in ("commutation", "braid"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.position < 1:
            raise ValueError("positions are 1-based")


def applicable_moves(word: Word) -> tuple[WordMove, ...]:
    """All moves applicable to word, sorted by (position, kind)."""
    moves = []
    for p in range(len(word) - 1):
        if abs(word[p] - word[p + 1]) >= 2:
            moves.append(WordMove("commutation", p + 1))
    for p in range(len(word) - 2):
        if word[p] == word[p + 2] and abs(word[p] - word[p + 1]) == 1:
            moves.append(WordMove("braid", p + 1))
    return tuple(sorted(moves, key=lambda m: (m.position, m.kind)))


def apply_move(word: Word, move: WordMove) -> Word:
    """Apply a commutation or braid move; ValueError if not applicable there.

    >>> apply_move((2, 1, 2), WordMove("braid", 1))
    (1, 2, 1)
    """
    word = tuple(word)
    p = move.position - 1
    if move.kind == "commutation":
        if p + 1 >= len(word) or abs(word[p] - word[p + 1]) < 2:
            raise ValueError(f"no commutation applies at position {move.position}")
        return word[:p] + (word[p + 1], word[p]) + word[p + 2:]
    if p + 2 >= len(word) or word[p] != word[p + 2] or abs(word[p] - word[p + 1]) != 1:
        raise ValueError(f"no braid move applies at position {move.position}")
    a, b = word[p], word[p + 1]
    return word[:p] + (b, a, b) + word[p + 3:]


def _lex_min_word(n: int) -> Word:
    """(1, 2, 1, 3, 2, 1, ...): concatenation of the chunks (b, b-1, ..., 1)."""
    out = []
    for b in range(1, n):
        out.extend(range(b, 0, -1))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_reduced_words(n: int) -> tuple[Word, ...]:
    """All reduced words for w0 in S_n, sorted lexicographically.

    Breadth-first closure of the move graph starting from one reduced word;
    the graph is connected by Tits' theorem.  Refuses n > MAX_ENUM_RANK.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    if n > MAX_ENUM_RANK:
        raise ValueError(
            f"enumerating reduced words for n = {n} exceeds the resource guard"
            f" (MAX_ENUM_RANK = {MAX_ENUM_RANK})"
        )
    seed = _lex_min_word(n)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for mv in applicable_moves(w):
                u = apply_move(w, mv)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen))


def count_reduced_words(n: int) -> int:
    """Number of reduced words for w0 via the staircase hook length formula:
    N! divided by 1^(n-1) 3^(n-2) 5^(n-3) ... (2n-3)^1.
    """
    big_n = num_positive_roots(n)
    denom = 1
    for k in range(1, n):
        denom *= (2 * k - 1) ** (n - k)
    return math.factorial(big_n) // denom


@lru_cache(maxsize=None)
def _move_tree(root: Word) -> dict[Word, tuple[Word, WordMove] | None]:
    """BFS predecessor tree of the move graph rooted at root.

    Neighbours are explored in sorted move order, so shortest paths extracted
    from the tree are deterministic.
    """
    tree: dict[Word, tuple[Word, WordMove] | None] = {root: None}
    frontier = [root]
    while frontier:
        nxt = []
        for w in frontier:
            for mv in applicable_moves(w):
                u = apply_move(w, mv)
                if u not in tree:
                    tree[u] = (w, mv)
                    nxt.append(u)
        frontier = nxt
    return tree


def move_path(i: Word, j: Word) -> tuple[WordMove, ...]:
    """A shortest move sequence transforming word i into word j.

    Ties are broken deterministically (breadth-first order with moves sorted
    by position).  ValueError if the words are not reduced words for the same
    longest element.

    >>> move_path((2, 1, 2), (1, 2, 1))
    (WordMove(kind='braid', position=1),)
    """
    i, j = tuple(i), tuple(j)
    n = rank_of_word(i)
    if rank_of_word(j) != n:
        raise ValueError("words have different ranks")
    for w in (i, j):
        if not is_reduced_word(w, n):
            raise ValueError(f"{w} is not a reduced word for w0")
    tree = _move_tree(i)
    if j not in tree:
        raise ValueError("words are not connected by moves")  # unreachable
    path = []
    cur = j
    while tree[cur] is not None:
        prev, mv = tree[cur]
        path.append(mv)
        cur = prev
    return tuple(reversed(path))


def prefix_permutations(word: Word, n: int) -> tuple[Permutation, ...]:
    """(w_0 = e, w_1, ..., w_k) with w_m = s_{i_1} ... s_{i_m}."""
    out = [identity(n)]
    for a in word:
        out.append(_right_multiply(out[-1], a))
    return tuple(out)


def convex_order(word: Word) -> tuple[tuple[int, int], ...]:
    """The total order on positive roots induced by a reduced word for w0.

    The k-th root is the transposition pair {w_{k-1}(i_k), w_{k-1}(i_k + 1)},
    returned as a sorted pair.  Every positive root occurs exactly once.

    >>> convex_order((1, 2, 1))
    ((1, 2), (1, 3), (2, 3))
    >>> convex_order((2, 1, 2))
    ((2, 3), (1, 3), (1, 2))
    """
    word = tuple(word)
    n = rank_of_word(word)
    prefixes = prefix_permutations(word, n)
    roots = []
    for k, a in enumerate(word):
        w = prefixes[k]
        s, t = w[a - 1], w[a]
        roots.append((s, t) if s < t else (t, s))
    if len(set(roots)) != len(word):
        raise ValueError(f"{word} is not a reduced word for w0")
    return tuple(roots)


def star_word(word: Word) -> Word:
    """The reversed-complemented word (n - i_N, ..., n - i_1).

    Conjugation by w0 sends s_a to s_{n-a}, so this is again a reduced word
    for w0; it carries the Kashiwara involution on Lusztig data.

    >>> star_word((1, 2, 1))
    (2, 1, 2)
    """
    n = rank_of_word(word)
    return tuple(n - a for a in reversed(word))


def positive_roots(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (s, t) with 1 <= s < t <= n, lexicographically."""
    return tuple((s, t) for s in range(1, n + 1) for t in range(s + 1, n + 1))


def cartan_pairing(a: int, b: int) -> int:
    """<h_a, alpha_b> for the type A Cartan matrix: 2, -1 or 0."""
    if a == b:
        return 2
    return -1 if abs(a - b) == 1 else 0


def root_span(pair: tuple[int, int]) -> tuple[int, ...]:
    """Simple-root support of the positive root (s, t): indices s, ..., t-1."""
    s, t = pair
    return tuple(range(s, t))
