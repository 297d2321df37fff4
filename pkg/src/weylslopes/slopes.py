"""Slope computation for left Weyl-algebra ideals along x_{i0} = 0.

The driver walks candidate slopes read off Newton polygons: starting from
the pure differentiation-order weight F, it computes a Groebner basis,
takes the smallest polygon slope above the previous candidate, re-runs
the basis at the weight p*F + q*V built from that candidate (|slope| =
p/q), and classifies the candidate by testing whether the weight-initial
ideal, respectively its radical, is F-homogeneous.  Candidates strictly
increase and the walk stops at zero.

Initial ideals at a weight p*F + q*V are graded for that weight by
construction, so F- and V-homogeneity are equivalent for them (V is a
rational combination of the weight and F); only the F test is run and
the equivalence is recorded on the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .budget import BudgetExceededError, StepBudget, ensure_budget
from .comm_algebra import CommIdeal, is_radical_w_homogeneous, is_w_homogeneous
from .groebner import WeylIdeal, buchberger, initial_form, initial_ideal
from .newton import next_candidate
from .orders import CompositeOrder, WeightVector, f_weight, v_weight
from .weyl import WeylPoly

HOMOGENEITY_NOTE = (
    "initial ideals at pF+qV are graded for that weight, so F-homogeneity "
    "and V-homogeneity are equivalent; only F is tested"
)


@dataclass(frozen=True)
class SlopeStep:
    """One Groebner stage of the walk."""

    weight: tuple
    p: int
    q: int
    tested: Optional[Fraction]  # slope classified at this weight, None at F
    basis_size: int
    ideal_homogeneous: Optional[bool]
    radical_homogeneous: Optional[bool]
    next_candidate: Fraction


@dataclass
class SlopeReport:
    along: int
    algebraic: List[Fraction]
    geometric: List[Fraction]
    trace: List[SlopeStep]
    complete: bool = True
    note: str = HOMOGENEITY_NOTE
    preprocessing: list = field(default_factory=list)

    @property
    def is_regular(self) -> bool:
        """No slopes at all (the geometric set is what regularity reads)."""
        return not self.geometric and self.complete

    def as_dict(self) -> dict:
        return {
            "along": f"x{self.along}",
            "algebraic_slopes": [str(s) for s in self.algebraic],
            "geometric_slopes": [str(s) for s in self.geometric],
            "regular": self.is_regular,
            "complete": self.complete,
            "note": self.note,
            "preprocessing": list(self.preprocessing),
            "trace": [
                {
                    "weight": list(step.weight),
                    "p": step.p,
                    "q": step.q,
                    "tested": None if step.tested is None else str(step.tested),
                    "basis_size": step.basis_size,
                    "ideal_homogeneous": step.ideal_homogeneous,
                    "radical_homogeneous": step.radical_homogeneous,
                    "next_candidate": str(step.next_candidate),
                }
                for step in self.trace
            ],
        }


def _as_ideal(ideal: Union[WeylIdeal, Sequence[WeylPoly]]) -> WeylIdeal:
    return ideal if isinstance(ideal, WeylIdeal) else WeylIdeal.of(list(ideal))


def l_initial_ideal(
    ideal: Union[WeylIdeal, Sequence[WeylPoly]],
    p: int,
    q: int,
    i0: Optional[int] = None,
    budget: Optional[StepBudget] = None,
) -> CommIdeal:
    """The commutative initial ideal at weight p*F + q*V along x_{i0}=0."""
    ideal = _as_ideal(ideal)
    if p <= 0:
        raise ValueError("need p > 0 for a commutative graded ring")
    if q < 0:
        raise ValueError("need q >= 0")
    n = ideal.n
    i0 = n if i0 is None else i0
    w = f_weight(n).scale(p) + v_weight(n, i0).scale(q)
    return initial_ideal(ideal, w, budget=budget, second=v_weight(n, i0))


def compute_slopes(
    ideal: Union[WeylIdeal, Sequence[WeylPoly]],
    along: Optional[int] = None,
    budget: Optional[StepBudget] = None,
    certify: bool = False,
) -> SlopeReport:
    """All algebraic and geometric slopes along x_{along} = 0 at the origin."""
    ideal = _as_ideal(ideal)
    n = ideal.n
    i0 = n if along is None else along
    if not 1 <= i0 <= n:
        raise ValueError(f"distinguished index {i0} out of range 1..{n}")
    budget = ensure_budget(budget)
    fw = f_weight(n)
    vw = v_weight(n, i0)

    algebraic: List[Fraction] = []
    geometric: List[Fraction] = []
    trace: List[SlopeStep] = []
    complete = True
    try:
        gb = buchberger(ideal, CompositeOrder(fw, vw), budget=budget, certify=certify)
        prev: Optional[Fraction] = None
        cand = next_candidate(gb.elements, prev, i0)
        trace.append(
            SlopeStep(fw.flat(), 1, 0, None, len(gb.elements), None, None, cand)
        )
        while cand != 0:
            p, q = abs(cand.numerator), cand.denominator
            w = fw.scale(p) + vw.scale(q)
            gb = buchberger(
                ideal, CompositeOrder(w, vw), budget=budget, certify=certify
            )
            graded = CommIdeal.of([initial_form(g, w) for g in gb.elements])
            ideal_hom = is_w_homogeneous(graded, fw.flat(), budget=budget)
            if ideal_hom:
                radical_hom = True  # graded ideals have graded radicals
            else:
                algebraic.append(cand)
                radical_hom = is_radical_w_homogeneous(graded, fw.flat(), budget=budget)
                if not radical_hom:
                    geometric.append(cand)
            prev = cand
            cand = next_candidate(gb.elements, prev, i0)
            trace.append(
                SlopeStep(
                    w.flat(),
                    p,
                    q,
                    prev,
                    len(gb.elements),
                    ideal_hom,
                    radical_hom,
                    cand,
                )
            )
    except BudgetExceededError:
        complete = False
    return SlopeReport(i0, algebraic, geometric, trace, complete=complete)
