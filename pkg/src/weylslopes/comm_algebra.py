"""Commutative polynomial ideal toolbox.

Provides the Buchberger engine over exact rationals, ideal and radical
membership (radical membership via the one-extra-variable trick:
f lies in the radical of J iff 1 lies in J + <1 - t*f>), weight
homogeneity tests for ideals and for their radicals, and standard pair
decompositions of monomial ideals.

The radical-level homogeneity test never computes a radical.  A variety
is stable under the one-parameter scaling group of a weight iff its
ideal of definition is graded; the stabilizer of a variety inside the
multiplicative group is Zariski closed, hence either finite or
everything, so testing the single scaling factor 2 (infinite order)
decides stability with finitely many radical membership queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ._engine import Engine, comm_mul_mono, mono_divides
from .budget import StepBudget, ensure_budget
from .commpoly import CommPoly
from .orders import grevlex_key_from_listing


@dataclass(frozen=True)
class CommIdeal:
    """Ideal of a commutative polynomial ring, given by generators."""

    generators: tuple
    nvars: int

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        if not gens:
            raise ValueError("need at least one nonzero generator")
        if any(g.nvars != self.nvars for g in gens):
            raise ValueError("generator ring sizes differ from the ideal's")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens: Iterable[CommPoly]) -> "CommIdeal":
        gens = tuple(gens)
        if not gens:
            raise ValueError("need at least one generator")
        return cls(gens, gens[0].nvars)


def comm_order_key(nvars: int):
    """Graded reverse lex, natural variable precedence z1 > z2 > ..."""
    return grevlex_key_from_listing(list(range(nvars)))


def _to_int_dict(p: CommPoly) -> dict:
    q = p.clear_denominators()
    return {m: int(c) for m, c in q.terms.items()}


def _sign_normalize(terms: dict, key) -> dict:
    if not terms:
        return terms
    lead = max(terms, key=key)
    if terms[lead] < 0:
        return {m: -c for m, c in terms.items()}
    return terms


def comm_buchberger(
    ideal: Union[CommIdeal, Sequence[CommPoly]],
    budget: Optional[StepBudget] = None,
    key=None,
) -> List[CommPoly]:
    """Reduced Groebner basis, integer normalized, deterministic order."""
    ideal = ideal if isinstance(ideal, CommIdeal) else CommIdeal.of(ideal)
    key = key or comm_order_key(ideal.nvars)
    engine = Engine(key, comm_mul_mono, ensure_budget(budget))
    raw = engine.buchberger(
        [_to_int_dict(g) for g in ideal.generators], product_criterion=True
    )
    return [CommPoly(ideal.nvars, _sign_normalize(t, key)) for t in raw]


def comm_normal_form(
    f: CommPoly,
    basis: Sequence[CommPoly],
    budget: Optional[StepBudget] = None,
    key=None,
) -> CommPoly:
    if f.is_zero():
        return f
    key = key or comm_order_key(f.nvars)
    engine = Engine(key, comm_mul_mono, ensure_budget(budget))
    ints = []
    for g in basis:
        t = _to_int_dict(g)
        if t:
            lm = max(t, key=key)
            ints.append((lm, t[lm], t))
    num = f.clear_denominators()
    ratio = None
    for m, c in f.terms.items():
        ratio = Fraction(c, num.terms[m])
        break
    r, scale = engine.reduce({m: int(c) for m, c in num.terms.items()}, ints, full=True)
    return CommPoly(f.nvars, {m: Fraction(c, scale) * ratio for m, c in r.items()})


def ideal_contains(
    ideal: Union[CommIdeal, Sequence[CommPoly], List[CommPoly]],
    f: CommPoly,
    budget: Optional[StepBudget] = None,
    groebner: Optional[List[CommPoly]] = None,
) -> bool:
    gb = groebner if groebner is not None else comm_buchberger(ideal, budget=budget)
    return comm_normal_form(f, gb, budget=budget).is_zero()


def radical_membership(
    f: CommPoly,
    ideal: Union[CommIdeal, Sequence[CommPoly]],
    budget: Optional[StepBudget] = None,
) -> bool:
    """f in rad(J) iff 1 in J + <1 - t*f> in the ring with one extra variable."""
    ideal = ideal if isinstance(ideal, CommIdeal) else CommIdeal.of(ideal)
    if f.nvars != ideal.nvars:
        raise ValueError("ambient rings differ")
    if f.is_zero():
        return True
    nv = ideal.nvars + 1
    gens = [g.extend_ring(nv) for g in ideal.generators]
    t = CommPoly.variable(nv - 1, nv)
    gens.append(CommPoly.constant(1, nv) - t * f.extend_ring(nv))
    gb = comm_buchberger(CommIdeal.of(gens), budget=budget)
    return any(g.is_constant() for g in gb)


def split_by_weight(f: CommPoly, w: Sequence[int]) -> dict:
    """Weight-homogeneous components keyed by their weight."""
    if len(w) != f.nvars:
        raise ValueError("weight length differs from ring size")
    comps: dict = {}
    for m, c in f.terms.items():
        d = sum(e * wi for e, wi in zip(m, w))
        comps.setdefault(d, {})[m] = c
    return {d: CommPoly(f.nvars, t) for d, t in comps.items()}


def is_w_homogeneous(
    ideal: Union[CommIdeal, Sequence[CommPoly]],
    w: Sequence[int],
    budget: Optional[StepBudget] = None,
) -> bool:
    """True iff every w-homogeneous component of every reduced basis
    element lies back in the ideal."""
    ideal = ideal if isinstance(ideal, CommIdeal) else CommIdeal.of(ideal)
    gb = comm_buchberger(ideal, budget=budget)
    for g in gb:
        comps = split_by_weight(g, w)
        if len(comps) == 1:
            continue
        for comp in comps.values():
            if not comm_normal_form(comp, gb, budget=budget).is_zero():
                return False
    return True


def _torus_scaled(f: CommPoly, w: Sequence[int], direction: int) -> CommPoly:
    """f with variable z_i scaled by 2^(direction * w_i), cleared to integer
    coefficients (an overall power of two does not change membership)."""
    comps = split_by_weight(f, w)
    degs = sorted(comps)
    lo, hi = degs[0], degs[-1]
    acc = CommPoly.zero(f.nvars)
    for d, comp in comps.items():
        shift = d - lo if direction > 0 else hi - d
        acc = acc + comp * (2**shift)
    return acc


def is_radical_w_homogeneous(
    ideal: Union[CommIdeal, Sequence[CommPoly]],
    w: Sequence[int],
    budget: Optional[StepBudget] = None,
) -> bool:
    """True iff the radical is w-graded, decided by the scaling-stability
    test at factor 2 in both directions."""
    ideal = ideal if isinstance(ideal, CommIdeal) else CommIdeal.of(ideal)
    gb = comm_buchberger(ideal, budget=budget)
    base = CommIdeal.of(gb)
    for g in gb:
        if len(split_by_weight(g, w)) == 1:
            continue
        for direction in (1, -1):
            scaled = _torus_scaled(g, w, direction)
            if not radical_membership(scaled, base, budget=budget):
                return False
    return True


@dataclass(frozen=True)
class StandardPair:
    """A pair (monomial exponent, face) indexing standard monomials."""

    b: tuple
    face: frozenset

    def __post_init__(self):
        if any(self.b[i] != 0 for i in self.face):
            raise ValueError("exponent must vanish on the face")


def standard_pairs(ideal: Union[CommIdeal, Sequence[CommPoly]]) -> List[StandardPair]:
    """Standard pair decomposition of a monomial ideal.

    Enumerates admissible pairs up to the per-variable exponent bound of
    the generators, then discards pairs covered by a larger admissible
    pair."""
    ideal = ideal if isinstance(ideal, CommIdeal) else CommIdeal.of(ideal)
    gens = []
    for g in ideal.generators:
        if not g.is_monomial():
            raise ValueError("standard pairs require a monomial ideal")
        gens.append(next(iter(g.terms)))
    d = ideal.nvars
    bound = [max((g[i] for g in gens), default=0) for i in range(d)]

    def admissible(b: tuple, face: frozenset) -> bool:
        for g in gens:
            if all(g[i] <= b[i] for i in range(d) if i not in face):
                return False
        return True

    pairs: List[StandardPair] = []
    for r in range(d + 1):
        for face_tuple in combinations(range(d), r):
            face = frozenset(face_tuple)
            off = [i for i in range(d) if i not in face]
            if any(bound[i] == 0 for i in off):
                continue
            for combo in product(*(range(bound[i]) for i in off)):
                b = [0] * d
                for i, e in zip(off, combo):
                    b[i] = e
                b = tuple(b)
                if admissible(b, face):
                    pairs.append(StandardPair(b, face))

    def covered(p: StandardPair, q: StandardPair) -> bool:
        if p == q or not p.face <= q.face:
            return False
        return all(p.b[i] == q.b[i] for i in range(d) if i not in q.face)

    return sorted(
        (p for p in pairs if not any(covered(p, q) for q in pairs)),
        key=lambda p: (sorted(p.face), p.b),
    )


def radical_of_monomial_ideal(ideal: CommIdeal) -> CommIdeal:
    """Radical of a monomial ideal: squarefree parts of the generators."""
    gens = []
    for g in ideal.generators:
        if not g.is_monomial():
            raise ValueError("monomial ideal expected")
        m = next(iter(g.terms))
        gens.append(CommPoly.monomial(tuple(1 if e else 0 for e in m), ideal.nvars))
    return CommIdeal.of(gens)
