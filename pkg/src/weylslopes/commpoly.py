"""Sparse commutative polynomials with exact rational coefficients.

Used both for the associated graded rings hosting initial ideals (2n
variables, x followed by xi) and for plain polynomial rings (solution
checks, toric ideals in the D-variables alone).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CommPoly:
    """Polynomial in ``nvars`` commuting variables, exponent-tuple keyed."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Union[Mapping, Iterable] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent tuple {mono!r} for nvars={nvars}")
            c = acc.get(mono, 0) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self.nvars = nvars
        self.terms = {m: _norm(c) for m, c in acc.items()}

    @classmethod
    def zero(cls, nvars: int) -> "CommPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, c: Coeff, nvars: int) -> "CommPoly":
        return cls(nvars, {tuple([0] * nvars): c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "CommPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range 0..{nvars - 1}")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, expo, nvars: int, coeff: Coeff = 1) -> "CommPoly":
        return cls(nvars, {tuple(expo): coeff})

    def _same_ring(self, other: "CommPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("ambient variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other, self.nvars)
        self._same_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return _raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CommPoly.zero(self.nvars)
            return _raw(self.nvars, {m: _norm(c * other) for m, c in self.terms.items()})
        self._same_ring(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = acc.get(mono, 0) + c1 * c2
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        return _raw(self.nvars, {m: _norm(c) for m, c in acc.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are undefined")
        out = CommPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            if k >> 1:
                base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other, self.nvars)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def set_vars_zero(self, indices) -> "CommPoly":
        """Substitute 0 for the given variables (same ambient ring)."""
        idx = set(indices)
        kept = {m: c for m, c in self.terms.items() if all(m[i] == 0 for i in idx)}
        return _raw(self.nvars, dict(kept))

    def drop_vars(self, indices) -> "CommPoly":
        """Delete coordinates that must already be exponent-free."""
        idx = sorted(set(indices))
        keep = [i for i in range(self.nvars) if i not in idx]
        out = {}
        for m, c in self.terms.items():
            if any(m[i] for i in idx):
                raise ValueError("cannot drop a variable that still occurs")
            out[tuple(m[i] for i in keep)] = c
        return _raw(len(keep), out)

    def extend_ring(self, new_nvars: int) -> "CommPoly":
        """Reinterpret in a larger ring, new variables appended."""
        if new_nvars < self.nvars:
            raise ValueError("target ring is smaller")
        pad = (0,) * (new_nvars - self.nvars)
        return _raw(new_nvars, {m + pad: c for m, c in self.terms.items()})

    def clear_denominators(self) -> "CommPoly":
        if not self.terms:
            return self
        denom = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = {m: int(c * denom) for m, c in self.terms.items()}
        content = 0
        for c in ints.values():
            content = gcd(content, c)
        if content > 1:
            ints = {m: c // content for m, c in ints.items()}
        return _raw(self.nvars, ints)

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"z{i + 1}" for i in range(self.nvars)]
        out = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m), reverse=True):
            c = self.terms[mono]
            parts = [
                names[i] + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            ]
            mstr = "*".join(parts)
            neg = c < 0
            mag = -c if neg else c
            if mstr and mag == 1:
                body = mstr
            elif mstr:
                body = f"{mag}*{mstr}"
            else:
                body = str(mag)
            out.append(("-" if neg else ("+" if out else "")) + body)
        return "".join(out)

    def __repr__(self):
        return f"CommPoly({self.nvars}, {self.format()!r})"

    def __str__(self):
        return self.format()


def _raw(nvars: int, terms: dict) -> CommPoly:
    p = CommPoly.__new__(CommPoly)
    p.nvars = nvars
    p.terms = terms
    return p


def xr_names(n: int) -> list:
    """Display names for the 2n-variable graded ring: x's then Xi's."""
    return [f"x{i + 1}" for i in range(n)] + [f"Xi{i + 1}" for i in range(n)]
