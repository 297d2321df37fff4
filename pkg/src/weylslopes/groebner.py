"""Buchberger's algorithm for left ideals of the Weyl algebra.

Orders are composite weight orders refined by a term order; reduction is
certified on demand by re-checking that every S-pair of the output
reduces to zero and every input generator has zero normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Union

from ._engine import Engine, mono_divides
from .budget import StepBudget, ensure_budget
from .commpoly import CommPoly
from .orders import CompositeOrder, WeightVector, weight_of
from .weyl import WeylPoly, default_print_key, mono_mul_terms


@dataclass(frozen=True)
class WeylIdeal:
    """A left ideal given by generators."""

    generators: tuple
    n: int

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        if not gens:
            raise ValueError("need at least one nonzero generator")
        if any(g.n != self.n for g in gens):
            raise ValueError("generator variable counts differ from the ideal's")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens: Iterable[WeylPoly]) -> "WeylIdeal":
        gens = tuple(gens)
        if not gens:
            raise ValueError("need at least one generator")
        return cls(gens, gens[0].n)


@dataclass
class GroebnerBasis:
    elements: List[WeylPoly]
    order: CompositeOrder
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> List[tuple]:
        return [max(g.terms, key=self.order.key) for g in self.elements]


def _weyl_mul_mono(n: int):
    def mul(shift: tuple, f: dict) -> dict:
        acc: dict = {}
        for m, c in f.items():
            for mono, factor in mono_mul_terms(shift, m, n):
                s = acc.get(mono, 0) + c * factor
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        return acc

    return mul


def _to_int_dict(p: WeylPoly) -> dict:
    q = p.clear_denominators()
    return {m: int(c) for m, c in q.terms.items()}


def _sign_normalize(terms: dict, n: int) -> dict:
    """Positive leading coefficient under the default printing grevlex."""
    if not terms:
        return terms
    lead = max(terms, key=default_print_key(n))
    if terms[lead] < 0:
        return {m: -c for m, c in terms.items()}
    return terms


def _from_int_dict(terms: dict, n: int) -> WeylPoly:
    return WeylPoly(n, _sign_normalize(terms, n))


def _engine_for(ideal_or_n, order: CompositeOrder, budget: StepBudget) -> Engine:
    n = ideal_or_n if isinstance(ideal_or_n, int) else ideal_or_n.n
    return Engine(order.key, _weyl_mul_mono(n), budget)


def _as_ideal(ideal: Union[WeylIdeal, Sequence[WeylPoly]]) -> WeylIdeal:
    if isinstance(ideal, WeylIdeal):
        return ideal
    return WeylIdeal.of(ideal)


def buchberger(
    ideal: Union[WeylIdeal, Sequence[WeylPoly]],
    order: CompositeOrder,
    budget: Optional[StepBudget] = None,
    certify: bool = False,
    reduced: bool = True,
) -> GroebnerBasis:
    """Groebner basis of a left ideal for the given order; reduced by
    default, minimal (no tail reduction) when ``reduced`` is false."""
    ideal = _as_ideal(ideal)
    if order.n != ideal.n:
        raise ValueError("order and ideal dimensions differ")
    budget = ensure_budget(budget)
    engine = _engine_for(ideal, order, budget)
    raw = engine.buchberger([_to_int_dict(g) for g in ideal.generators], reduced=reduced)
    elements = [_from_int_dict(t, ideal.n) for t in raw]
    gb = GroebnerBasis(elements, order, reduced=reduced)
    if certify:
        if not is_groebner_basis(elements, order, budget):
            raise AssertionError("output failed S-pair certification")
        for g in ideal.generators:
            if not normal_form(g, gb, budget=budget).is_zero():
                raise AssertionError("an input generator failed to reduce to zero")
    return gb


def normal_form(
    p: WeylPoly,
    basis: Union[GroebnerBasis, Sequence[WeylPoly]],
    order: Optional[CompositeOrder] = None,
    budget: Optional[StepBudget] = None,
) -> WeylPoly:
    """Remainder of p on division by the basis; p minus it lies in the ideal."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        elements = basis.elements
    else:
        elements = list(basis)
        if order is None:
            raise ValueError("an explicit basis needs an explicit order")
    if p.is_zero():
        return p
    budget = ensure_budget(budget)
    engine = _engine_for(p.n, order, budget)
    ints = []
    for g in elements:
        t = _to_int_dict(g)
        if t:
            lm = max(t, key=order.key)
            ints.append((lm, t[lm], t))
    # remainder of c*p for an integer c, then divide c back out
    num = p.clear_denominators()
    ratio = None
    for m, c in p.terms.items():
        ratio = Fraction(c, num.terms[m])
        break
    r, scale = engine.reduce({m: int(c) for m, c in num.terms.items()}, ints, full=True)
    return WeylPoly(p.n, {m: Fraction(c, scale) * ratio for m, c in r.items()})


def is_groebner_basis(
    elements: Sequence[WeylPoly],
    order: CompositeOrder,
    budget: Optional[StepBudget] = None,
) -> bool:
    elements = [g for g in elements if not g.is_zero()]
    if not elements:
        return True
    budget = ensure_budget(budget)
    engine = _engine_for(elements[0].n, order, budget)
    return engine.is_groebner([_to_int_dict(g) for g in elements])


def same_ideal(
    a: Union[WeylIdeal, Sequence[WeylPoly]],
    b: Union[WeylIdeal, Sequence[WeylPoly]],
    order: Optional[CompositeOrder] = None,
    budget: Optional[StepBudget] = None,
) -> bool:
    """Two-way membership check via reduced bases."""
    a, b = _as_ideal(a), _as_ideal(b)
    if a.n != b.n:
        return False
    from .orders import f_weight, v_weight

    if order is None:
        order = CompositeOrder(f_weight(a.n), v_weight(a.n))
    budget = ensure_budget(budget)
    gb_a = buchberger(a, order, budget=budget)
    gb_b = buchberger(b, order, budget=budget)
    return all(normal_form(g, gb_a, budget=budget).is_zero() for g in b.generators) and all(
        normal_form(g, gb_b, budget=budget).is_zero() for g in a.generators
    )


def initial_ideal(
    ideal: Union[WeylIdeal, Sequence[WeylPoly]],
    w: WeightVector,
    tiebreak="grevlex",
    budget: Optional[StepBudget] = None,
    certify: bool = False,
    second: Optional[WeightVector] = None,
):
    """The commutative ideal of top w-weight forms, for strictly positive
    u_i + v_i, computed from a Groebner basis for w refined by an optional
    secondary weight and the tiebreak."""
    from .comm_algebra import CommIdeal

    ideal = _as_ideal(ideal)
    if w.n != ideal.n:
        raise ValueError("weight and ideal dimensions differ")
    if not w.is_strict():
        raise ValueError("inadmissible weight: need u_i + v_i > 0 for all i")
    order = CompositeOrder(w, second, tiebreak)
    gb = buchberger(ideal, order, budget=budget, certify=certify)
    gens = [initial_form(g, w) for g in gb.elements]
    return CommIdeal(tuple(gens), 2 * ideal.n)


def initial_form(p: WeylPoly, w: WeightVector) -> CommPoly:
    """Top w-weight subsum of p, read in the commutative (x, xi) ring."""
    if p.is_zero():
        raise ValueError("zero operator has no initial form")
    top = max(weight_of(w, m) for m in p.terms)
    return CommPoly(
        2 * p.n, {m: c for m, c in p.terms.items() if weight_of(w, m) == top}
    )
