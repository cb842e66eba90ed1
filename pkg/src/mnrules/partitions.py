"""Partition and skew-shape combinatorics: strips, rim hooks, n-cores.

Partitions are tuples of weakly decreasing positive integers; the empty tuple
is the empty partition.  Cells of the Young diagram are (row, col) pairs with
0-based indices, and the diagonal of a cell is col - row.  Everything here is
a pure function on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

Partition = tuple[int, ...]

EMPTY: Partition = ()


def validate_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a canonical partition tuple.

    Trailing zeros are dropped; negative or increasing entries raise
    ValueError.

    >>> validate_partition([3, 2, 1, 0, 0])
    (3, 2, 1)
    >>> validate_partition([])
    ()
    """
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"parts must be positive integers, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def part(lam: Partition, i: int) -> int:
    """Row ``i`` (0-based) of ``lam``, reading 0 beyond the last row."""
    return lam[i] if 0 <= i < len(lam) else 0


def leq(a: Partition, b: Partition) -> bool:
    """Containment of Young diagrams: every row of ``a`` fits inside ``b``.

    >>> leq((3, 1), (5, 4, 3, 1))
    True
    >>> leq((1, 1), (2,))
    False
    """
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def box_partition(k: int, n: int) -> Partition:
    """The k-row rectangle with rows of length n - k.

    >>> box_partition(2, 5)
    (3, 3)
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    return (n - k,) * k


def skew_cells(inner: Partition, outer: Partition) -> list[tuple[int, int]]:
    """Cells of outer/inner as (row, col) pairs in row-major order."""
    if not leq(inner, outer):
        raise ValueError(f"{inner} is not contained in {outer}")
    return [
        (r, c)
        for r in range(len(outer))
        for c in range(part(inner, r), outer[r])
    ]


def is_rim_hook(inner: Partition, outer: Partition) -> bool:
    """True when outer/inner is a nonempty rim hook.

    A rim hook meets a consecutive run of diagonals, one cell on each.

    >>> is_rim_hook((1,), (2, 1))
    False
    >>> is_rim_hook((1,), (1, 1, 1))
    True
    """
    cells = skew_cells(inner, outer)
    if not cells:
        return False
    diags = [c - r for r, c in cells]
    return len(set(diags)) == len(diags) and max(diags) - min(diags) + 1 == len(diags)


def rim_hook_height(inner: Partition, outer: Partition) -> int:
    """Number of rows the rim hook outer/inner occupies."""
    if not is_rim_hook(inner, outer):
        raise ValueError(f"{outer}/{inner} is not a rim hook")
    return len({r for r, _ in skew_cells(inner, outer)})


@dataclass(frozen=True)
class RimHookRecord:
    """One way of adding (or removing) a rim hook: inner <= outer."""

    inner: Partition
    outer: Partition
    size: int
    height: int


def rim_hook_record_to_json(rec: RimHookRecord) -> dict:
    return {
        "inner": list(rec.inner),
        "outer": list(rec.outer),
        "size": rec.size,
        "height": rec.height,
    }


def _hook_candidate_valid(inner: Partition, mu: list[int], r: int) -> Partition | None:
    """Canonicalize ``mu`` and accept it only if mu/inner is an r-cell rim hook."""
    while mu and mu[-1] == 0:
        mu.pop()
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        return None
    outer = tuple(mu)
    if min(mu, default=1) < 1 or not leq(inner, outer):
        return None
    if sum(outer) - sum(inner) != r or not is_rim_hook(inner, outer):
        return None
    return outer


def add_rim_hooks(lam: Partition, r: int, max_rows: int) -> list[RimHookRecord]:
    """All ways to grow ``lam`` by a rim hook of ``r`` cells within ``max_rows`` rows.

    A rim hook is determined by the rows it occupies: below its top row it
    hugs the old boundary (row a gains the cells from one past row a-1's old
    end down to row a's old end), and the top row absorbs whatever cells are
    left over.  Records are sorted lexicographically by outer shape.

    >>> [rec.outer for rec in add_rim_hooks((1,), 2, 3)]
    [(1, 1, 1), (3,)]
    """
    lam = validate_partition(lam)
    if r < 1:
        raise ValueError(f"rim hook size must be positive, got {r}")
    if max_rows < 0:
        raise ValueError(f"max_rows must be nonnegative, got {max_rows}")
    if len(lam) > max_rows:
        return []
    found = []
    for top in range(max_rows):
        for bottom in range(top, max_rows):
            lower = sum(
                part(lam, a - 1) + 1 - part(lam, a) for a in range(top + 1, bottom + 1)
            )
            head = r - lower
            if head < 1:
                continue
            mu = [part(lam, i) for i in range(max(len(lam), bottom + 1))]
            mu[top] += head
            for a in range(top + 1, bottom + 1):
                mu[a] = part(lam, a - 1) + 1
            outer = _hook_candidate_valid(lam, mu, r)
            if outer is not None:
                found.append(RimHookRecord(lam, outer, r, bottom - top + 1))
    found.sort(key=lambda rec: rec.outer)
    return found


def remove_rim_hooks(lam: Partition, r: int) -> list[RimHookRecord]:
    """All ways to strip a rim hook of ``r`` cells from ``lam``.

    Mirror image of :func:`add_rim_hooks`: above its bottom row the hook hugs
    the boundary (row a keeps one cell fewer than row a+1's old end), and the
    bottom row gives up the remaining cells.  Records are sorted
    lexicographically by inner shape.

    >>> [rec.inner for rec in remove_rim_hooks((2, 2), 3)]
    [(1,)]
    """
    lam = validate_partition(lam)
    if r < 1:
        raise ValueError(f"rim hook size must be positive, got {r}")
    found = []
    for top in range(len(lam)):
        for bottom in range(top, len(lam)):
            upper = sum(lam[a] - (lam[a + 1] - 1) for a in range(top, bottom))
            tail = r - upper
            if tail < 1:
                continue
            nu = list(lam)
            for a in range(top, bottom):
                nu[a] = lam[a + 1] - 1
            nu[bottom] = lam[bottom] - tail
            if nu[bottom] < 0:
                continue
            inner_list = nu
            while inner_list and inner_list[-1] == 0:
                inner_list.pop()
            if any(inner_list[i] < inner_list[i + 1] for i in range(len(inner_list) - 1)):
                continue
            inner = tuple(inner_list)
            if not leq(inner, lam) or sum(lam) - sum(inner) != r:
                continue
            if not is_rim_hook(inner, lam):
                continue
            found.append(RimHookRecord(inner, lam, r, bottom - top + 1))
    found.sort(key=lambda rec: rec.inner)
    return found


@dataclass(frozen=True)
class CoreResult:
    """Outcome of stripping rim hooks of a fixed size until stuck."""

    core: Partition
    hooks_removed: int
    height_sum: int


def _top_row_of_hook(rec: RimHookRecord) -> int:
    return next(r for r in range(len(rec.outer)) if part(rec.inner, r) < rec.outer[r])


def n_core(lam: Partition, n: int) -> CoreResult:
    """Strip rim hooks of ``n`` cells from ``lam`` until none remains.

    The hook whose top row is highest is removed first.  The resulting core,
    the number of hooks, and the parity of the total height do not depend on
    the removal order; only this policy's height_sum is reported.

    >>> n_core((2, 1, 1), 4).core
    ()
    >>> n_core((2, 2), 4).core  # the full rim holds a 2x2 square: no 4-hook
    (2, 2)
    """
    lam = validate_partition(lam)
    if n < 2:
        raise ValueError(f"hook size must be at least 2, got {n}")
    cur, hooks, heights = lam, 0, 0
    while True:
        recs = remove_rim_hooks(cur, n)
        if not recs:
            return CoreResult(cur, hooks, heights)
        rec = min(recs, key=_top_row_of_hook)
        cur, hooks, heights = rec.inner, hooks + 1, heights + rec.height


StripKind = Literal["horizontal", "vertical"]


def strips(lam: Partition, size: int, kind: StripKind, max_rows: int) -> list[Partition]:
    """Partitions obtained by adding a strip of ``size`` cells to ``lam``.

    A horizontal strip has at most one new cell per column, a vertical strip
    at most one per row.  Only results with at most ``max_rows`` rows are
    returned, sorted lexicographically.

    >>> strips((1,), 2, "horizontal", 3)
    [(2, 1), (3,)]
    """
    lam = validate_partition(lam)
    if size < 1:
        raise ValueError(f"strip size must be positive, got {size}")
    if kind not in ("horizontal", "vertical"):
        raise ValueError(f"kind must be 'horizontal' or 'vertical', got {kind!r}")
    if len(lam) > max_rows:
        return []
    found: list[Partition] = []
    if kind == "horizontal":

        def grow_h(i: int, budget: int, mu: list[int]) -> None:
            if i == max_rows:
                if budget == 0:
                    found.append(validate_partition(mu))
                return
            lo = part(lam, i)
            hi = lo + budget
            if i:
                hi = min(hi, part(lam, i - 1))
            for v in range(lo, hi + 1):
                mu.append(v)
                grow_h(i + 1, budget - (v - lo), mu)
                mu.pop()

        grow_h(0, size, [])
    else:

        def grow_v(i: int, budget: int, mu: list[int]) -> None:
            if i == max_rows:
                if budget == 0:
                    found.append(validate_partition(mu))
                return
            for extra in (0, 1):
                if extra > budget:
                    continue
                v = part(lam, i) + extra
                if i and v > mu[i - 1]:
                    continue
                mu.append(v)
                grow_v(i + 1, budget - extra, mu)
                mu.pop()

        grow_v(0, size, [])
    return sorted(set(found))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
