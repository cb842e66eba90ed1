"""Power-sum multiplication in the quantum cohomology of the Grassmannian.

Classes in qH*(Gr(k, n)) are written in the Schubert-cycle basis indexed by
partitions inside the k x (n-k) box, with an extra grading variable q of
degree n.  A quantum class is a dict mapping (q_power, partition) to a
nonzero integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    Partition,
    add_rim_hooks,
    box_partition,
    leq,
    n_core,
    remove_rim_hooks,
    validate_partition,
)
from .symfun import mn_classical

QuantumClass = dict[tuple[int, Partition], int]


@dataclass(frozen=True)
class GrContext:
    """The Grassmannian Gr(k, n) of k-planes in n-space, 0 < k < n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def box(self) -> Partition:
        return box_partition(self.k, self.n)


def _require_in_box(lam: Partition, ctx: GrContext) -> Partition:
    lam = validate_partition(lam)
    if not leq(lam, ctx.box):
        raise ValueError(f"{lam} does not fit in the {ctx.k} x {ctx.n - ctx.k} box")
    return lam


def psi_reduce(lam: Partition, ctx: GrContext) -> QuantumClass:
    """Image of the Schur function s_lam (at most k rows) in qH*(Gr(k, n)).

    Strip rim hooks of size n down to the n-core.  If the core fits in the
    box the image is (-1)**(k*s - total height) q**s times that core's
    Schubert cycle, where s is the number of hooks removed; otherwise zero.
    """
    lam = validate_partition(lam)
    if len(lam) > ctx.k:
        raise ValueError(f"{lam} has more than {ctx.k} rows")
    res = n_core(lam, ctx.n)
    if not leq(res.core, ctx.box):
        return {}
    sign = -1 if (ctx.k * res.hooks_removed - res.height_sum) % 2 else 1
    return {(res.hooks_removed, res.core): sign}


def quantum_mn(lam: Partition, r: int, ctx: GrContext) -> QuantumClass:
    """Multiply the Schubert cycle of lam by the power sum p_r in qH*(Gr(k, n)).

    Classical part: rim hooks of r cells added to lam inside the box, signed
    by (-1)**(height + 1).  Quantum part: rim hooks of n - r cells removed
    from lam, each contributing q with sign -(-1)**k * (-1)**(height + 1).
    Requires 1 <= r < n.
    """
    lam = _require_in_box(lam, ctx)
    if not 1 <= r < ctx.n:
        raise ValueError(f"need 1 <= r < n={ctx.n}, got r={r}")
    out: QuantumClass = {}
    for rec in add_rim_hooks(lam, r, ctx.k):
        if leq(rec.outer, ctx.box):
            out[(0, rec.outer)] = 1 if rec.height % 2 else -1
    for rec in remove_rim_hooks(lam, ctx.n - r):
        out[(1, rec.inner)] = 1 if (ctx.k + rec.height) % 2 == 0 else -1
    return out


def quantum_mn_extended(lam: Partition, r: int, ctx: GrContext) -> QuantumClass:
    """quantum_mn extended to any r >= 1 not divisible by n.

    The power sum p_r acts as (-1)**k q times p_(r-n) whenever r > n, so the
    result is the base case shifted in q with a sign per full wrap.  r
    divisible by n is rejected: the recursion would bottom out at p_0, which
    is not a power sum.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if r % ctx.n == 0:
        raise ValueError(f"r divisible by n={ctx.n} is not supported")
    wraps, base = divmod(r, ctx.n)
    sign = 1 if (ctx.k * wraps) % 2 == 0 else -1
    return {
        (d + wraps, mu): sign * c
        for (d, mu), c in quantum_mn(lam, base, ctx).items()
    }


def oracle_quantum_mn(lam: Partition, r: int, ctx: GrContext) -> QuantumClass:
    """Independent route to quantum_mn: multiply in the symmetric-function
    ring with k rows allowed to run past the box, then push every term
    through psi_reduce and collect."""
    lam = _require_in_box(lam, ctx)
    if not 1 <= r < ctx.n:
        raise ValueError(f"need 1 <= r < n={ctx.n}, got r={r}")
    out: QuantumClass = {}
    for mu, coeff in mn_classical(lam, r, ctx.k).items():
        for (d, core), sign in psi_reduce(mu, ctx).items():
            key = (d, core)
            c = out.get(key, 0) + coeff * sign
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


@dataclass(frozen=True)
class GeneratorCheck:
    """One generator of the defining ideal, its expected and actual image."""

    name: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class VanishingReport:
    checks: tuple[GeneratorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _fmt_class(qc: QuantumClass) -> str:
    if not qc:
        return "0"
    bits = []
    for (d, mu), c in sorted(qc.items()):
        q = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        sign = "+" if c > 0 else "-"
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        bits.append(f"{sign}{mag}{q}{'sigma'}{list(mu)}")
    return " ".join(bits)


def sampled_max_minus_min_partitions(ctx: GrContext, count: int) -> list[Partition]:
    """Deterministic sample of partitions with at most k rows whose first and
    k-th parts differ by exactly n - k + 1 (the quotient-ring generators)."""
    gap = ctx.n - ctx.k + 1
    found: list[Partition] = []
    if ctx.k == 1:
        return found  # a single row has first part equal to last part
    base = 0
    while len(found) < count:
        top = base + gap

        def middles(i: int, prev: int, acc: list[int]) -> None:
            if len(found) >= count:
                return
            if i == ctx.k - 2:
                lam = validate_partition([top] + acc + [base])
                found.append(lam)
                return
            for v in range(prev, base - 1, -1):
                middles(i + 1, v, acc + [v])

        if ctx.k == 2:
            found.append(validate_partition([top, base]))
        else:
            middles(0, top, [])
        base += 1
    return found[:count]


def ideal_vanishing_check(ctx: GrContext, sample_count: int = 20) -> VanishingReport:
    """Check the quotient presentations of qH*(Gr(k, n)) on generators.

    h_j must map to zero for n - k < j < n, h_n must map to (-1)**(k+1) q,
    and sampled s_lam with lam_1 - lam_k = n - k + 1 must map to zero.
    """
    checks: list[GeneratorCheck] = []
    for j in range(ctx.n - ctx.k + 1, ctx.n):
        got = psi_reduce((j,), ctx)
        checks.append(
            GeneratorCheck(f"h_{j}", "0", _fmt_class(got), got == {})
        )
    got = psi_reduce((ctx.n,), ctx)
    expected: QuantumClass = {(1, ()): 1 if ctx.k % 2 else -1}
    checks.append(
        GeneratorCheck(
            f"h_{ctx.n}",
            _fmt_class(expected),
            _fmt_class(got),
            got == expected,
        )
    )
    for lam in sampled_max_minus_min_partitions(ctx, sample_count):
        got = psi_reduce(lam, ctx)
        checks.append(
            GeneratorCheck(f"s_{list(lam)}", "0", _fmt_class(got), got == {})
        )
    return VanishingReport(tuple(checks))


def quantum_class_to_json(qc: QuantumClass) -> list[dict]:
    return [
        {"coeff": qc[key], "q": key[0], "partition": list(key[1])}
        for key in sorted(qc)
    ]


def quantum_class_from_json(data: list[dict]) -> QuantumClass:
    out: QuantumClass = {}
    for item in data:
        key = (int(item["q"]), validate_partition(item["partition"]))
        if key[0] < 0:
            raise ValueError(f"negative q power {key[0]}")
        coeff = int(item["coeff"])
        if key in out:
            raise ValueError(f"duplicate term {key}")
        if coeff:
            out[key] = coeff
    return out
