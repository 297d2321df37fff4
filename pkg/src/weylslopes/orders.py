"""Weight vectors and composite monomial orders for the Weyl algebra.

A weight vector is a pair (u, v) of integer vectors with u_i + v_i >= 0;
it grades monomials by u.alpha + v.beta.  A composite order compares by a
primary weight, then an optional secondary weight, then a fixed term
order.  The default term order is graded reverse lexicographic with
variable precedence D1 > D2 > ... > Dn > x1 > ... > xn, which reproduces
the normalized bases this package freezes in its tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class WeightVector:
    """Admissible weight (u on x-variables, v on D-variables)."""

    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(a) for a in self.u))
        object.__setattr__(self, "v", tuple(int(a) for a in self.v))
        if len(self.u) != len(self.v):
            raise ValueError("u and v must have equal length")
        if any(a + b < 0 for a, b in zip(self.u, self.v)):
            raise ValueError("inadmissible weight: some u_i + v_i < 0")

    @property
    def n(self) -> int:
        return len(self.u)

    @classmethod
    def from_flat(cls, flat: Sequence[int]) -> "WeightVector":
        if len(flat) % 2:
            raise ValueError("flat weight must have even length")
        n = len(flat) // 2
        return cls(tuple(flat[:n]), tuple(flat[n:]))

    def flat(self) -> tuple:
        return self.u + self.v

    def is_strict(self) -> bool:
        """True when every u_i + v_i > 0, so the graded ring is commutative."""
        return all(a + b > 0 for a, b in zip(self.u, self.v))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            tuple(a + b for a, b in zip(self.u, other.u)),
            tuple(a + b for a, b in zip(self.v, other.v)),
        )

    def scale(self, k: int) -> "WeightVector":
        if k < 0:
            raise ValueError("weights scale by non-negative integers only")
        return WeightVector(tuple(k * a for a in self.u), tuple(k * a for a in self.v))


def f_weight(n: int) -> WeightVector:
    """Total differentiation order grading."""
    return WeightVector((0,) * n, (1,) * n)


def v_weight(n: int, i0: Optional[int] = None) -> WeightVector:
    """Hyperplane grading b_{i0} - a_{i0} relative to x_{i0} = 0 (1-based)."""
    i0 = n if i0 is None else i0
    if not 1 <= i0 <= n:
        raise ValueError(f"distinguished index {i0} out of range 1..{n}")
    u = [0] * n
    v = [0] * n
    u[i0 - 1] = -1
    v[i0 - 1] = 1
    return WeightVector(tuple(u), tuple(v))


def weight_of(w: WeightVector, mono) -> int:
    """u.alpha + v.beta for a flat exponent tuple (alpha, beta)."""
    n = w.n
    if len(mono) != 2 * n:
        raise ValueError("monomial and weight dimensions differ")
    flat = w.u + w.v
    return sum(e * wi for e, wi in zip(mono, flat))


@dataclass(frozen=True)
class LFiltration:
    """The interpolating grading p*F + q*V along x_{i0} = 0.

    The grade of x^a D^b is p*|b| + q*(b_{i0} - a_{i0}).
    """

    p: int
    q: int
    i0: Optional[int] = None

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or (self.p == 0 and self.q == 0):
            raise ValueError("need p, q >= 0 and not both zero")

    def to_weight(self, n: int) -> WeightVector:
        i0 = n if self.i0 is None else self.i0
        return f_weight(n).scale(self.p) + v_weight(n, i0).scale(self.q)

    def order_of(self, mono, n: int) -> int:
        return weight_of(self.to_weight(n), mono)

    def slope(self) -> Fraction:
        """The slope -p/q this grading probes (q > 0)."""
        if self.q == 0:
            raise ValueError("pure F grading has no finite slope")
        return Fraction(-self.p, self.q)


DEFAULT_TIEBREAK = "grevlex"


def grevlex_listing(n: int) -> list:
    """Flat monomial indices in precedence order D1..Dn, x1..xn."""
    return list(range(n, 2 * n)) + list(range(n))


def grevlex_key_from_listing(listing: Sequence[int]):
    """Sort key for graded reverse lex over the given precedence listing:
    compare total degree, then the reversed listing with negated entries."""
    rev = list(reversed(listing))

    def key(mono):
        return (sum(mono), tuple(-mono[j] for j in rev))

    return key


def tiebreak_key(n: int, tiebreak=DEFAULT_TIEBREAK):
    if tiebreak == DEFAULT_TIEBREAK:
        return grevlex_key_from_listing(grevlex_listing(n))
    if isinstance(tiebreak, (list, tuple)):
        listing = list(tiebreak)
        if sorted(listing) != list(range(2 * n)):
            raise ValueError("tiebreak listing must permute all 2n positions")
        return grevlex_key_from_listing(listing)
    raise ValueError(f"unknown tiebreak {tiebreak!r}")


class CompositeOrder:
    """Total monomial order: weight W, then optional W2, then a term order."""

    def __init__(
        self,
        w: WeightVector,
        w2: Optional[WeightVector] = None,
        tiebreak=DEFAULT_TIEBREAK,
    ):
        if w2 is not None and w2.n != w.n:
            raise ValueError("W and W' dimensions differ")
        self.w = w
        self.w2 = w2
        self.tiebreak = tiebreak
        self.n = w.n
        self._wflat = w.flat()
        self._w2flat = w2.flat() if w2 is not None else None
        self._tbkey = tiebreak_key(w.n, tiebreak)
        self._cache: dict = {}

    def key(self, mono):
        k = self._cache.get(mono)
        if k is None:
            wk = sum(e * wi for e, wi in zip(mono, self._wflat))
            if self._w2flat is None:
                k = (wk, self._tbkey(mono))
            else:
                w2k = sum(e * wi for e, wi in zip(mono, self._w2flat))
                k = (wk, w2k, self._tbkey(mono))
            self._cache[mono] = k
        return k

    def __repr__(self):
        second = "V" if self.w2 is not None else "-"
        return f"CompositeOrder(W={self.w.flat()}, W2={second}, tiebreak={self.tiebreak!r})"


def compare(order: CompositeOrder, m1, m2) -> int:
    """-1, 0 or 1 as m1 is below, equal to, or above m2."""
    if len(m1) != 2 * order.n or len(m2) != 2 * order.n:
        raise ValueError("monomial dimension mismatch")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)
