"""Builders and theorem-backed oracles for GKZ systems of monomial curves.

A system is described by an exponent list A = (1, a_2, ..., a_n) with
1 < a_2 < ... < a_n and a rational parameter beta.  Its left ideal is
generated by the Euler operator sum(a_i x_i D_i) - beta together with
the binomials D_j - D_1^{a_j} that present the toric ideal of the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Set, Tuple, Union

from .budget import StepBudget, ensure_budget
from .comm_algebra import CommIdeal, comm_buchberger, radical_membership
from .commpoly import CommPoly
from .groebner import WeylIdeal, initial_ideal
from .orders import f_weight
from .weyl import WeylPoly


@dataclass(frozen=True)
class GKZSystem:
    """Monomial-curve exponents plus the rational parameter."""

    A: tuple
    beta: Fraction

    def __post_init__(self):
        a = tuple(int(v) for v in self.A)
        if not a or a[0] != 1:
            raise ValueError("exponent list must start with 1")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError("exponents must be strictly increasing")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def n(self) -> int:
        return len(self.A)

    def ideal(self) -> WeylIdeal:
        return gkz_ideal(self.A, self.beta)

    def __str__(self):
        return f"H_{{{','.join(map(str, self.A))}}}({self.beta})"


def _check_A(A) -> tuple:
    return GKZSystem(tuple(A), 0).A


def toric_ideal(A) -> List[WeylPoly]:
    """Generators D_j - D_1^{a_j} (j = 2..n) of the toric ideal, as
    constant-coefficient operators; empty for n = 1."""
    A = _check_A(A)
    n = len(A)
    gens = []
    for j in range(2, n + 1):
        gens.append(WeylPoly.d(j, n) - WeylPoly.d(1, n) ** A[j - 1])
    return gens


def toric_binomials(A) -> List[WeylPoly]:
    """The derived binomials D_i^{a_j} - D_j^{a_i} for all i < j."""
    A = _check_A(A)
    n = len(A)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(
                WeylPoly.d(i, n) ** A[j - 1] - WeylPoly.d(j, n) ** A[i - 1]
            )
    return out


def toric_groebner(A, budget: Optional[StepBudget] = None) -> List[CommPoly]:
    """Reduced Groebner basis of the toric ideal in the commuting
    D-variables alone (graded reverse lex, D1 > D2 > ...)."""
    A = _check_A(A)
    n = len(A)
    gens = []
    for j in range(2, n + 1):
        e1 = [0] * n
        e1[0] = A[j - 1]
        ej = [0] * n
        ej[j - 1] = 1
        gens.append(CommPoly(n, {tuple(e1): 1, tuple(ej): -1}))
    if not gens:
        return []
    return comm_buchberger(CommIdeal.of(gens), budget=budget)


def euler_operator(A, beta) -> WeylPoly:
    """sum a_i x_i D_i - beta."""
    A = _check_A(A)
    n = len(A)
    acc = WeylPoly.constant(-Fraction(beta), n)
    for i in range(1, n + 1):
        acc = acc + WeylPoly.theta(i, n) * A[i - 1]
    return acc


def gkz_ideal(A, beta) -> WeylIdeal:
    """The hypergeometric left ideal of the pair (A, beta)."""
    A = _check_A(A)
    return WeylIdeal.of([euler_operator(A, beta)] + toric_ideal(A))


def restrict(A, beta, i: int) -> GKZSystem:
    """Delete a_i from A (i != 1); the restriction of the system to
    x_i = 0 is the system of the shortened exponent list, same beta."""
    A = _check_A(A)
    n = len(A)
    if i == 1:
        raise ValueError("cannot restrict at the first exponent")
    if not 2 <= i <= n:
        raise ValueError(f"index {i} out of range 2..{n}")
    return GKZSystem(A[: i - 1] + A[i:], Fraction(beta))


def closed_form_slopes(A) -> Set[Fraction]:
    """Slope set along x_n = 0 predicted by the variable-reduction theory:
    {a_{n-1}/(a_{n-1} - a_n)} for n >= 3, {1/(1 - a_2)} for n = 2, empty
    for n = 1 (the one-variable system is regular)."""
    A = _check_A(A)
    n = len(A)
    if n == 1:
        return set()
    if n == 2:
        return {Fraction(1, 1 - A[1])}
    return {Fraction(A[n - 2], A[n - 2] - A[n - 1])}


def characteristic_variety_check(
    A, beta, budget: Optional[StepBudget] = None
) -> bool:
    """Verify that the F-initial ideal cuts out the union of the zero
    section and the conormal to x_n = 0: mutual radical membership with
    <xi_1, ..., xi_{n-1}, x_n xi_n>."""
    A = _check_A(A)
    n = len(A)
    budget = ensure_budget(budget)
    ideal = gkz_ideal(A, beta)
    graded = initial_ideal(ideal, f_weight(n), budget=budget)

    nv = 2 * n
    targets = [CommPoly.variable(n + i, nv) for i in range(n - 1)]
    xn_xin = CommPoly.variable(n - 1, nv) * CommPoly.variable(2 * n - 1, nv)
    targets.append(xn_xin)
    target_ideal = CommIdeal.of(targets)

    for t in targets:
        if not radical_membership(t, graded, budget=budget):
            return False
    for g in comm_buchberger(graded, budget=budget):
        if not radical_membership(g, target_ideal, budget=budget):
            return False
    return True
