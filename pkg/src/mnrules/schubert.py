"""Schubert polynomials, divided differences, and power-sum products.

The Schubert polynomial of the longest element of S_n is the staircase
monomial x_1^(n-1) x_2^(n-2) ... x_{n-1}; every other one is reached by
divided differences, which lower degree by one.  Expansions in the Schubert
basis are dicts mapping canonical permutations to nonzero integers.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition, validate_partition
from .perm import (
    Permutation,
    apply,
    canonical,
    chain_endpoints,
    compose,
    cycle_type_check,
    default_max_support,
    from_lehmer_code,
    het,
    inverse,
    is_cover_transposition,
    k_bruhat_covers,
    length,
    peakless_endpoints,
    right_transposed,
)
from .poly import SparsePoly

SchubertExpansion = dict[Permutation, int]


def divided_difference(f: SparsePoly, i: int) -> SparsePoly:
    """The i-th divided difference: (f - f with x_i, x_{i+1} swapped) / (x_i - x_{i+1}).

    The quotient of each monomial is expanded in closed form, so the division
    is exact by construction: x^p y^q maps to the geometric sum
    sign * (x^(hi-1) y^lo + ... + x^lo y^(hi-1)) in the two affected slots.
    """
    if i < 1:
        raise ValueError(f"divided differences are 1-indexed, got {i}")
    data: dict[tuple[int, ...], int] = {}
    for exps, coeff in f.terms.items():
        p = exps[i - 1] if len(exps) >= i else 0
        q = exps[i] if len(exps) >= i + 1 else 0
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        base = list(exps) + [0] * (i + 1 - len(exps))
        for t in range(hi - lo):
            base[i - 1] = hi - 1 - t
            base[i] = lo + t
            e = tuple(base)
            while e and e[-1] == 0:
                e = e[:-1]
            s = data.get(e, 0) + sign * coeff
            if s:
                data[e] = s
            else:
                data.pop(e, None)
    return SparsePoly._from_clean(data)


def reduced_word(v: Permutation) -> tuple[int, ...]:
    """A reduced word (a_1, ..., a_m) with v = t_{a_1} * ... * t_{a_m}.

    Peels simple transpositions off the left: a is a valid first letter
    whenever the value a sits to the right of a + 1 in one-line notation.
    """
    v = canonical(v)
    word = []
    inv = list(inverse(v))
    while inv:
        for a in range(1, len(inv)):
            if inv[a - 1] > inv[a]:
                word.append(a)
                inv[a - 1], inv[a] = inv[a], inv[a - 1]
                break
        while inv and inv[-1] == len(inv):
            inv.pop()
    return tuple(word)


def apply_divided_word(f: SparsePoly, word: tuple[int, ...]) -> SparsePoly:
    """Apply the composite divided difference along a reduced word.

    The last letter acts first, matching the convention that the operator of
    v = t_{a_1} * ... * t_{a_m} is the composition of the operators of its
    letters in the same order.
    """
    for a in reversed(word):
        f = divided_difference(f, a)
    return f


def staircase_monomial(n: int) -> SparsePoly:
    """x_1^(n-1) x_2^(n-2) ... x_{n-1}, the top Schubert polynomial of S_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return SparsePoly.monomial(tuple(range(n - 1, 0, -1)))


def schubert_poly_in(w: Permutation, n: int) -> SparsePoly:
    """Schubert polynomial of w computed inside S_n, straight from the definition.

    Applies the divided differences of w^{-1} * w0 to the staircase monomial.
    The result does not depend on n (stability), which the tests exercise.
    """
    w = canonical(w)
    if len(w) > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    w0 = tuple(range(n, 0, -1))
    v = compose(inverse(w), w0)
    return apply_divided_word(staircase_monomial(n), reduced_word(v))


@cache
def _schubert_cached(w: Permutation) -> SparsePoly:
    n = len(w)
    if n == 0:
        return SparsePoly.one()
    if w == tuple(range(n, 0, -1)):
        return staircase_monomial(n)
    i = next(i for i in range(1, n) if w[i - 1] < w[i])
    return divided_difference(_schubert_cached(right_transposed(w, i, i + 1)), i)


def schubert_poly(w: Permutation) -> SparsePoly:
    """Schubert polynomial of w (cached; computed in the smallest S_n)."""
    return _schubert_cached(canonical(w))


def _colex_less(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Compare two reversed exponent tuples, padding the shorter in front."""
    width = max(len(a), len(b))
    return (0,) * (width - len(a)) + a < (0,) * (width - len(b)) + b


def expand_in_schubert(f: SparsePoly) -> SchubertExpansion:
    """Write an integer polynomial in the Schubert basis.

    Works degree by degree.  The colexicographically greatest monomial of a
    Schubert polynomial S_u is x raised to the Lehmer code of u, so the
    colex-greatest monomial of any integer combination is the code of one of
    its support permutations, carrying that permutation's coefficient.
    Peeling it off strictly lowers the leading monomial, which forces
    termination, and a zero remainder is itself the reconstruction identity:
    the result needs no separate verification pass.  Raises RuntimeError if
    a peel ever fails to make progress (impossible for honest input, i.e.
    any integer polynomial, since the Schubert polynomials are a basis).
    """
    out: SchubertExpansion = {}
    for _deg, component in f.homogeneous_components().items():
        rem = component
        last_key = None
        while rem:
            exps, coeff = rem.leading_term()
            key = tuple(reversed(exps))
            if last_key is not None and not _colex_less(key, last_key):
                raise RuntimeError(
                    f"Schubert expansion failed to make progress at {exps}"
                )
            last_key = key
            u = from_lehmer_code(exps)
            out[u] = out.get(u, 0) + coeff
            rem = rem - coeff * schubert_poly(u)
    return {u: c for u, c in out.items() if c}


def monk(w: Permutation, k: int, max_support: int | None = None) -> SchubertExpansion:
    """Multiply the Schubert polynomial of w by x_1 + ... + x_k.

    One term S_u for every k-Bruhat cover w -> u; all coefficients are 1.
    """
    w = canonical(w)
    bound = default_max_support(w, k, 1) if max_support is None else max_support
    return {c.end: 1 for c in k_bruhat_covers(w, k, bound)}


def transition_xi(w: Permutation, i: int, max_support: int | None = None) -> SchubertExpansion:
    """Multiply the Schubert polynomial of w by the single variable x_i.

    Plus terms w(i, b) for b > i, minus terms w(a, i) for a < i, in both
    cases only where the length goes up by exactly one.
    """
    w = canonical(w)
    if i < 1:
        raise ValueError(f"positions are 1-indexed, got {i}")
    bound = max(len(w), i) + 1 if max_support is None else max_support
    out: SchubertExpansion = {}
    for b in range(i + 1, bound + 1):
        if is_cover_transposition(w, i, b):
            out[right_transposed(w, i, b)] = 1
    for a in range(1, i):
        if is_cover_transposition(w, a, i):
            out[right_transposed(w, a, i)] = -1
    return out


def mn_schubert(
    w: Permutation, k: int, r: int, max_support: int | None = None
) -> SchubertExpansion:
    """Multiply the Schubert polynomial of w by the power sum p_r(x_1..x_k).

    Endpoints u of length-r saturated k-Bruhat chains from w contribute
    exactly when eta = w^{-1} u is a single (r+1)-cycle; the coefficient is
    (-1)**(het(eta, k) + 1) where het counts moved points at most k.  The
    expansion is multiplicity-free.
    """
    w = canonical(w)
    if k < 1 or r < 1:
        raise ValueError(f"need k, r >= 1, got k={k}, r={r}")
    w_inv = inverse(w)
    out: SchubertExpansion = {}
    for u in chain_endpoints(w, k, r, max_support):
        eta = compose(w_inv, u)
        if cycle_type_check(eta, r + 1):
            out[u] = 1 if het(eta, k) % 2 else -1
    return out


def hook_times_schubert(
    w: Permutation, k: int, a: int, b: int, max_support: int | None = None
) -> SchubertExpansion:
    """Multiply the Schubert polynomial of w by s_(b, 1^(a-1))(x_1..x_k).

    The coefficient of S_u is the number of peakless chains of shape (a, b)
    from w to u: labels strictly decreasing for a steps, then strictly
    increasing.
    """
    return dict(peakless_endpoints(w, k, a, b, max_support))


def grassmannian_permutation(lam: Partition, k: int) -> Permutation:
    """The permutation with descent only at k whose Schubert polynomial is
    the Schur polynomial s_lam(x_1..x_k)."""
    lam = validate_partition(lam)
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} rows")
    if not lam:
        return ()
    head = [((lam[k - i] if k - i < len(lam) else 0) + i) for i in range(1, k + 1)]
    tail = sorted(set(range(1, k + lam[0] + 1)) - set(head))
    return canonical(head + tail)


def schubert_expansion_to_json(expansion: SchubertExpansion) -> list[dict]:
    return [
        {"coeff": expansion[u], "perm": list(u)}
        for u in sorted(expansion, key=lambda u: (length(u), u))
    ]


def schubert_expansion_from_json(data: list[dict]) -> SchubertExpansion:
    out: SchubertExpansion = {}
    for item in data:
        u = canonical(item["perm"])
        coeff = int(item["coeff"])
        if u in out:
            raise ValueError(f"duplicate permutation {u}")
        if coeff:
            out[u] = coeff
    return out
