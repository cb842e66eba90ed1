"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial is a dict from exponent tuples to nonzero ints.  Exponent tuples
never carry trailing zeros, so each monomial has a single stored form no
matter how many variables its polynomial mentions.  Variables are 1-indexed
in the textual form: x1, x2, x3, ...
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

Exponents = tuple[int, ...]


def _trim(exps: Iterable[int]) -> Exponents:
    e = tuple(exps)
    while e and e[-1] == 0:
        e = e[:-1]
    return e


class SparsePoly:
    """Immutable-by-convention sparse polynomial over the integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        data: dict[Exponents, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                e = _trim(tuple(int(x) for x in exps))
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}")
                c = data.get(e, 0) + coeff
                if c:
                    data[e] = c
                else:
                    data.pop(e, None)
        self.terms = data

    @classmethod
    def _from_clean(cls, data: dict[Exponents, int]) -> "SparsePoly":
        """Wrap a dict that is already trimmed and zero-free."""
        p = object.__new__(cls)
        p.terms = data
        return p

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls._from_clean({(): 1})

    @classmethod
    def constant(cls, c: int) -> "SparsePoly":
        return cls._from_clean({(): c} if c else {})

    @classmethod
    def variable(cls, i: int) -> "SparsePoly":
        """The variable x_i (1-indexed)."""
        if i < 1:
            raise ValueError(f"variables are 1-indexed, got {i}")
        return cls._from_clean({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "SparsePoly":
        return cls({tuple(exps): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None  # a dict lives inside; never use as a key

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._from_clean({e: -c for e, c in self.terms.items()})

    def __add__(self, other: "SparsePoly | int") -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.constant(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        return SparsePoly._from_clean(data)

    __radd__ = __add__

    def __sub__(self, other: "SparsePoly | int") -> "SparsePoly":
        return self + (-other)

    def __rsub__(self, other: int) -> "SparsePoly":
        return SparsePoly.constant(other) - self

    def __mul__(self, other: "SparsePoly | int") -> "SparsePoly":
        if isinstance(other, int):
            if other == 0:
                return SparsePoly.zero()
            return SparsePoly._from_clean({e: c * other for e, c in self.terms.items()})
        data: dict[Exponents, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                tail = ea[len(eb):] if len(ea) >= len(eb) else eb[len(ea):]
                e = tuple(x + y for x, y in zip(ea, eb)) + tail
                s = data.get(e, 0) + ca * cb
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        return SparsePoly._from_clean(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = SparsePoly.one()
        for _ in range(n):
            out = out * self
        return out

    def swap_variables(self, i: int, j: int) -> "SparsePoly":
        """Exchange x_i and x_j (1-indexed) in every monomial."""
        if i < 1 or j < 1:
            raise ValueError("variables are 1-indexed")
        data: dict[Exponents, int] = {}
        hi = max(i, j)
        for e, c in self.terms.items():
            ee = list(e) + [0] * (hi - len(e))
            ee[i - 1], ee[j - 1] = ee[j - 1], ee[i - 1]
            data[_trim(ee)] = c
        return SparsePoly._from_clean(data)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def leading_term(self) -> tuple[Exponents, int]:
        """The colexicographically greatest monomial and its coefficient.

        Colex compares exponent vectors at the rightmost position where they
        differ (missing trailing exponents count as zero), so a monomial in
        later variables beats any monomial in earlier ones: x2 > x1^5.
        """
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        width = max(len(e) for e in self.terms)

        def colex(e: Exponents) -> tuple[int, ...]:
            return tuple(reversed(e + (0,) * (width - len(e))))

        e = max(self.terms, key=colex)
        return e, self.terms[e]

    def homogeneous_components(self) -> dict[int, "SparsePoly"]:
        comps: dict[int, dict[Exponents, int]] = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: SparsePoly._from_clean(t) for d, t in sorted(comps.items())}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        order = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        for idx, e in enumerate(order):
            c = self.terms[e]
            factors = [
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                for i, p in enumerate(e)
                if p
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(bits)

    def __repr__(self) -> str:
        return f'SparsePoly("{self}")'

    _FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "SparsePoly":
        """Inverse of ``str``: accepts forms like ``3*x1^2*x3 - x2 + 7``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        s = s.replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        terms: dict[Exponents, int] = {}
        for chunk in s.split("+"):
            if not chunk:
                raise ValueError(f"malformed polynomial: {text!r}")
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            coeff = sign
            exps: dict[int, int] = {}
            for factor in chunk.split("*"):
                m = cls._FACTOR_RE.match(factor)
                if m:
                    i = int(m.group(1))
                    if i < 1:
                        raise ValueError(f"variables are 1-indexed: {factor!r}")
                    exps[i - 1] = exps.get(i - 1, 0) + int(m.group(2) or 1)
                elif factor.isdigit():
                    coeff *= int(factor)
                else:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
            vec = [0] * (max(exps) + 1 if exps else 0)
            for i, p in exps.items():
                vec[i] = p
            e = _trim(vec)
            c = terms.get(e, 0) + coeff
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return cls._from_clean(terms)
