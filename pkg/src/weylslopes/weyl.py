"""Exact arithmetic in the Weyl algebra A_n over the rationals.

Elements are kept in normal order (all x factors to the left of all
differentiation factors) and represented sparsely: a map from exponent
tuples to nonzero rational coefficients.  A monomial is a flat tuple

    (a_1, ..., a_n, b_1, ..., b_n)   meaning   x^a * D^b

where ``D_i`` denotes d/dx_i.  Multiplication resolves the relation
``D_i x_i = x_i D_i + 1`` exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Iterable, Mapping, Union

from .commpoly import CommPoly

Coeff = Union[int, Fraction]
Monomial = tuple  # length 2n tuple of non-negative ints


def normalize_coeff(c: Coeff) -> Coeff:
    """Collapse integral Fractions to int so engine arithmetic stays fast."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def falling(x, k: int):
    """Falling factorial x(x-1)...(x-k+1); exact for int and Fraction x."""
    out = 1
    for j in range(k):
        out *= x - j
    return out


def rising(x, k: int):
    """Rising factorial x(x+1)...(x+k-1)."""
    out = 1
    for j in range(k):
        out *= x + j
    return out


def mono_mul_terms(m1: Monomial, m2: Monomial, n: int):
    """Yield (monomial, integer factor) for the normally ordered product
    of two Weyl monomials, expanding D^b past x^a by the Leibniz rule."""
    a1, b1 = m1[:n], m1[n:]
    a2, b2 = m2[:n], m2[n:]
    caps = [min(b1[i], a2[i]) for i in range(n)]
    if not any(caps):
        yield tuple(a1[i] + a2[i] for i in range(n)) + tuple(
            b1[i] + b2[i] for i in range(n)
        ), 1
        return
    for k in product(*(range(c + 1) for c in caps)):
        factor = 1
        for i, ki in enumerate(k):
            if ki:
                factor *= comb(b1[i], ki) * falling(a2[i], ki)
        if factor == 0:
            continue
        mono = tuple(a1[i] + a2[i] - k[i] for i in range(n)) + tuple(
            b1[i] + b2[i] - k[i] for i in range(n)
        )
        yield mono, factor


class WeylPoly:
    """A differential operator with exact rational coefficients.

    Immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared freely across threads.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Union[Mapping, Iterable] = ()):
        if n < 1:
            raise ValueError("need at least one variable")
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != 2 * n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent tuple {mono!r} for n={n}")
            c = acc.get(mono, 0) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self.n = n
        self.terms = {m: normalize_coeff(c) for m, c in acc.items()}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "WeylPoly":
        return cls(n, {})

    @classmethod
    def constant(cls, c: Coeff, n: int) -> "WeylPoly":
        return cls(n, {tuple([0] * (2 * n)): c})

    @classmethod
    def x(cls, i: int, n: int) -> "WeylPoly":
        _check_index(i, n)
        e = [0] * (2 * n)
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def d(cls, i: int, n: int) -> "WeylPoly":
        _check_index(i, n)
        e = [0] * (2 * n)
        e[n + i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def theta(cls, i: int, n: int) -> "WeylPoly":
        """The Euler operator x_i D_i in variable i."""
        _check_index(i, n)
        e = [0] * (2 * n)
        e[i - 1] = 1
        e[n + i - 1] = 1
        return cls(n, {tuple(e): 1})

    # -- ring operations ----------------------------------------------

    def _require_same_n(self, other: "WeylPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylPoly.constant(other, self.n)
        self._require_same_n(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return _raw(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylPoly.constant(other, self.n)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return WeylPoly.zero(self.n)
            return _raw(
                self.n,
                {m: normalize_coeff(c * other) for m, c in self.terms.items()},
            )
        self._require_same_n(other)
        n = self.n
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for mono, factor in mono_mul_terms(m1, m2, n):
                    s = acc.get(mono, 0) + c12 * factor
                    if s:
                        acc[mono] = s
                    else:
                        acc.pop(mono, None)
        return _raw(self.n, {m: normalize_coeff(c) for m, c in acc.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator powers are undefined")
        out = WeylPoly.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylPoly.constant(other, self.n)
        if not isinstance(other, WeylPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def d_degree(self) -> int:
        n = self.n
        return max((sum(m[n:]) for m in self.terms), default=0)

    def clear_denominators(self) -> "WeylPoly":
        """Scale by a positive integer so every coefficient is an integer
        with overall content 1 (the left ideal generated is unchanged)."""
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
        return _raw(self.n, ints)

    def map_coefficients(self, fn) -> "WeylPoly":
        return WeylPoly(self.n, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"WeylPoly({self.n}, {format_operator(self)!r})"

    def __str__(self):
        return format_operator(self)


def _raw(n: int, terms: dict) -> WeylPoly:
    """Internal constructor that trusts its input (already combined)."""
    p = WeylPoly.__new__(WeylPoly)
    p.n = n
    p.terms = terms
    return p


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")


def weyl_mul(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """Normally ordered product p * q."""
    return p * q


def commutator(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """p*q - q*p."""
    return p * q - q * p


def apply_operator(p: WeylPoly, f: CommPoly) -> CommPoly:
    """Act with the operator on a polynomial in x only (D_i = d/dx_i)."""
    if f.nvars != p.n:
        raise ValueError("polynomial must live in the x-variables of the operator")
    n = p.n
    acc: dict = {}
    for mono, c in p.terms.items():
        alpha, beta = mono[:n], mono[n:]
        for fexp, fc in f.terms.items():
            factor = 1
            for i in range(n):
                if beta[i]:
                    if fexp[i] < beta[i]:
                        factor = 0
                        break
                    factor *= falling(fexp[i], beta[i])
            if factor == 0:
                continue
            out = tuple(fexp[i] - beta[i] + alpha[i] for i in range(n))
            s = acc.get(out, 0) + c * fc * factor
            if s:
                acc[out] = s
            else:
                acc.pop(out, None)
    return CommPoly(n, acc)


# -- printing ----------------------------------------------------------

def default_print_key(n: int):
    """Key for the canonical printing order (descending), shared with the
    default Groebner tiebreak: graded reverse lexicographic with precedence
    D1 > D2 > ... > Dn > x1 > ... > xn."""
    perm = list(range(n - 1, -1, -1)) + list(range(2 * n - 1, n - 1, -1))

    def key(m):
        return (sum(m), tuple(-m[j] for j in perm))

    return key


def _format_coeff(c: Coeff) -> str:
    return str(c)


def format_monomial(mono: Monomial, n: int) -> str:
    parts = []
    for i in range(n):
        if mono[i]:
            parts.append(f"x{i + 1}" + (f"^{mono[i]}" if mono[i] > 1 else ""))
    for i in range(n):
        e = mono[n + i]
        if e:
            parts.append(f"Dx{i + 1}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_operator(p: WeylPoly) -> str:
    """Deterministic compact rendering, re-parseable by the operator grammar."""
    if not p.terms:
        return "0"
    key = default_print_key(p.n)
    out = []
    for mono in sorted(p.terms, key=key, reverse=True):
        c = p.terms[mono]
        mstr = format_monomial(mono, p.n)
        neg = c < 0
        mag = -c if neg else c
        if mstr and mag == 1:
            body = mstr
        elif mstr:
            body = f"{_format_coeff(mag)}*{mstr}"
        else:
            body = _format_coeff(mag)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out)
