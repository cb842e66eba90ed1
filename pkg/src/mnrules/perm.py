"""Permutations of {1, 2, ...} with finite support; k-Bruhat covers and chains.

A permutation is stored in one-line notation as a tuple (w(1), ..., w(m)),
trimmed so that either the tuple is empty (the identity) or its last entry is
not a fixed point.  Values beyond the stored word are fixed.  Products
compose right-to-left: (u * v)(i) = u(v(i)), and w followed by the
transposition (i, j) on the right swaps the values in positions i and j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Permutation = tuple[int, ...]

IDENTITY: Permutation = ()


class ChainCapExceeded(RuntimeError):
    """Raised when a chain enumeration would materialize too many chains."""


def canonical(word: Iterable[int]) -> Permutation:
    """Validate one-line notation and trim trailing fixed points.

    >>> canonical([3, 4, 1, 6, 5, 2, 7, 8])
    (3, 4, 1, 6, 5, 2)
    >>> canonical([1, 2])
    ()
    """
    w = tuple(int(v) for v in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    while w and w[-1] == len(w):
        w = w[:-1]
    return w


def apply(w: Permutation, i: int) -> int:
    """The image w(i), with w fixing everything beyond its stored word."""
    if i < 1:
        raise ValueError(f"positions are 1-indexed, got {i}")
    return w[i - 1] if i <= len(w) else i


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u * v)(i) = u(v(i)), canonicalized."""
    m = max(len(u), len(v))
    return canonical(apply(u, apply(v, i)) for i in range(1, m + 1))


def transposition(i: int, j: int) -> Permutation:
    if i == j or i < 1 or j < 1:
        raise ValueError(f"need distinct positive i, j, got {i}, {j}")
    i, j = min(i, j), max(i, j)
    word = list(range(1, j + 1))
    word[i - 1], word[j - 1] = j, i
    return tuple(word)


def right_transposed(w: Permutation, i: int, j: int) -> Permutation:
    """w * (i, j): the values in positions i and j change places."""
    m = max(len(w), i, j)
    word = [apply(w, t) for t in range(1, m + 1)]
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return canonical(word)


def length(w: Permutation) -> int:
    """Number of inversions.

    >>> length((3, 4, 1, 6, 5, 2))
    7
    """
    return sum(
        1
        for a in range(len(w))
        for b in range(a + 1, len(w))
        if w[a] > w[b]
    )


def is_cover_transposition(w: Permutation, i: int, j: int) -> bool:
    """True when l(w * (i,j)) = l(w) + 1 for i < j.

    Equivalent to: w(i) < w(j) and no position strictly between i and j
    carries a value strictly between w(i) and w(j).
    """
    if not i < j:
        raise ValueError(f"need i < j, got {i}, {j}")
    wi, wj = apply(w, i), apply(w, j)
    if wi > wj:
        return False
    return all(not wi < apply(w, t) < wj for t in range(i + 1, j))


def het(eta: Permutation, k: int) -> int:
    """Number of positions i <= k that ``eta`` moves."""
    return sum(1 for i in range(1, min(k, len(eta)) + 1) if eta[i - 1] != i)


def up_set(zeta: Permutation) -> frozenset[int]:
    """Positions that ``zeta`` moves up: {a : zeta(a) > a}."""
    return frozenset(i for i in range(1, len(zeta) + 1) if zeta[i - 1] > i)


def cycle_type_check(eta: Permutation, c: int) -> bool:
    """True iff ``eta`` is one cycle on exactly ``c`` points (rest fixed).

    >>> cycle_type_check(transposition(2, 5), 2)
    True
    >>> cycle_type_check((), 2)
    False
    """
    if c < 2:
        return False
    moved = {i for i in range(1, len(eta) + 1) if eta[i - 1] != i}
    if len(moved) != c:
        return False
    start = min(moved)
    seen = {start}
    cur = apply(eta, start)
    while cur != start:
        seen.add(cur)
        cur = apply(eta, cur)
    return seen == moved


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """code(w)_i = #{j > i : w(j) < w(i)}, trimmed of trailing zeros."""
    code = [
        sum(1 for b in range(a + 1, len(w)) if w[b] < w[a]) for a in range(len(w))
    ]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def from_lehmer_code(code: Iterable[int]) -> Permutation:
    """The unique permutation with the given Lehmer code.

    >>> from_lehmer_code((1, 2))
    (2, 4, 1, 3)
    """
    c = tuple(int(x) for x in code)
    if any(x < 0 for x in c):
        raise ValueError(f"code entries must be nonnegative: {c}")
    pool = list(range(1, len(c) + max(c, default=0) + 2))
    word = []
    for x in c:
        word.append(pool.pop(x))
    word.extend(pool)
    return canonical(word)


def descents(w: Permutation) -> tuple[int, ...]:
    """Positions i with w(i) > w(i+1)."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def default_max_support(w: Permutation, k: int, steps: int) -> int:
    """Support bound for ``steps`` cover steps above w.

    A cover w -> w(i, j) with i <= k < j forces j at most one past
    max(support, k): for larger j the fixed value j - 1 would sit strictly
    between w(i) and w(j) = j.  So every endpoint fits in this bound.
    """
    return max(len(w), k) + steps


@dataclass(frozen=True)
class LabeledCover:
    """A k-Bruhat cover start -> end = start * (i, j), labeled by start(i)."""

    start: Permutation
    end: Permutation
    label: int


def k_bruhat_covers(w: Permutation, k: int, max_support: int) -> list[LabeledCover]:
    """Covers w -> w(i, j) with i <= k < j <= max_support and length up by 1.

    Ordered by (i, j).
    """
    w = canonical(w)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    covers = []
    for i in range(1, k + 1):
        label = apply(w, i)
        for j in range(k + 1, max_support + 1):
            if i < j and is_cover_transposition(w, i, j):
                covers.append(LabeledCover(w, right_transposed(w, i, j), label))
    return covers


def chain_endpoints(
    w: Permutation, k: int, r: int, max_support: int | None = None
) -> set[Permutation]:
    """Endpoints of all length-r saturated k-Bruhat chains starting at w."""
    w = canonical(w)
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    bound = default_max_support(w, k, r) if max_support is None else max_support
    level = {w}
    for _ in range(r):
        level = {c.end for v in level for c in k_bruhat_covers(v, k, bound)}
    return level


def saturated_chains(
    w: Permutation,
    k: int,
    r: int,
    max_support: int | None = None,
    max_chains: int = 500_000,
) -> list[tuple[LabeledCover, ...]]:
    """All saturated k-Bruhat chains of length r from w, materialized.

    Chains come out in depth-first order following the (i, j) order of the
    covers at each step, which is deterministic.  Raises ChainCapExceeded
    when more than ``max_chains`` chains would be produced.
    """
    w = canonical(w)
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    bound = default_max_support(w, k, r) if max_support is None else max_support
    out: list[tuple[LabeledCover, ...]] = []

    def walk(v: Permutation, prefix: tuple[LabeledCover, ...]) -> None:
        if len(prefix) == r:
            if len(out) >= max_chains:
                raise ChainCapExceeded(
                    f"more than {max_chains} chains from {w} (k={k}, r={r})"
                )
            out.append(prefix)
            return
        for cov in k_bruhat_covers(v, k, bound):
            walk(cov.end, prefix + (cov,))

    walk(w, ())
    return out


def peakless_endpoints(
    w: Permutation,
    k: int,
    a: int,
    b: int,
    max_support: int | None = None,
) -> list[tuple[Permutation, int]]:
    """Endpoints of peakless chains of shape (a, b), with multiplicities.

    A chain of length a + b - 1 is peakless when its labels strictly
    decrease through the first a steps and strictly increase from step a on.
    a = 1 means strictly increasing labels, b = 1 strictly decreasing.
    Returns (endpoint, number of such chains), sorted by endpoint word.
    """
    w = canonical(w)
    if a < 1 or b < 1:
        raise ValueError(f"need a, b >= 1, got a={a}, b={b}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if a > k:
        raise ValueError(f"a cannot exceed k: a={a}, k={k}")
    r = a + b - 1
    bound = default_max_support(w, k, r) if max_support is None else max_support
    # states: (current permutation, last label) -> chain count
    states: dict[tuple[Permutation, int], int] = {(w, 0): 1}
    for step in range(1, r + 1):
        nxt: dict[tuple[Permutation, int], int] = {}
        for (v, last), count in states.items():
            for cov in k_bruhat_covers(v, k, bound):
                if step > 1:
                    if step <= a and not cov.label < last:
                        continue
                    if step > a and not cov.label > last:
                        continue
                key = (cov.end, cov.label)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    totals: dict[Permutation, int] = {}
    for (v, _), count in states.items():
        totals[v] = totals.get(v, 0) + count
    return sorted(totals.items())


if __name__ == "__main__":
    import doctest

    doctest.testmod()
