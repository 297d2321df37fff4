"""Shared Buchberger machinery for the Weyl and commutative engines.

Polynomials enter as plain dicts mapping exponent tuples to integers
(denominators cleared by the callers).  The two ring flavours differ only
in how a monomial multiplies a polynomial, supplied as ``mul_mono``.
Reduction is fraction free: the element being reduced is rescaled by
integer factors, and the accumulated scale is divided out at the end.
"""

from __future__ import annotations

import heapq
from math import gcd
from typing import Callable, Dict, List, Tuple

from .budget import StepBudget

Poly = Dict[tuple, int]
MulMono = Callable[[tuple, Poly], Poly]

_CONTENT_EVERY = 64


def mono_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def poly_content(f: Poly) -> int:
    c = 0
    for v in f.values():
        c = gcd(c, v)
        if c == 1:
            return 1
    return c


def normalize_int_poly(f: Poly, key) -> Poly:
    """Divide out content and make the order-leading coefficient positive."""
    if not f:
        return f
    c = poly_content(f)
    lead = max(f, key=key)
    if f[lead] < 0:
        c = -c
    if c != 1:
        f = {m: v // c for m, v in f.items()}
    return f


def comm_mul_mono(shift: tuple, f: Poly) -> Poly:
    return {tuple(a + b for a, b in zip(shift, m)): c for m, c in f.items()}


def _strip_content(a: Poly, b: Poly, scale: int) -> int:
    """Divide a common factor out of both polynomials and the scale."""
    c = scale
    for v in a.values():
        c = gcd(c, v)
        if c == 1:
            return scale
    for v in b.values():
        c = gcd(c, v)
        if c == 1:
            return scale
    if c > 1:
        for k in a:
            a[k] //= c
        for k in b:
            b[k] //= c
        scale //= c
    return scale


class Engine:
    """One Groebner computation: a fixed order key plus a step budget."""

    def __init__(self, key, mul_mono: MulMono, budget: StepBudget):
        self.key = key
        self.mul_mono = mul_mono
        self.budget = budget

    # -- division -----------------------------------------------------

    def reduce(self, f: Poly, basis: List[Tuple[tuple, int, Poly]], full: bool = True):
        """Return (remainder, scale) with scale*f congruent to the remainder
        modulo the left ideal of ``basis``.  With ``full`` false, stop at the
        first irreducible leading monomial."""
        if not f:
            return {}, 1
        key = self.key
        mul_mono = self.mul_mono
        budget = self.budget
        work = dict(f)
        out: Poly = {}
        scale = 1
        steps = 0
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            hit = None
            for lm, lc, g in basis:
                if mono_divides(lm, m):
                    hit = (lm, lc, g)
                    break
            if hit is None:
                out[m] = c
                if not full:
                    out.update(work)
                    break
                continue
            lm, lc, g = hit
            d = gcd(lc, c)
            mult_f = lc // d
            mult_g = c // d
            if mult_f < 0:
                mult_f, mult_g = -mult_f, -mult_g
            if mult_f != 1:
                scale *= mult_f
                for k2 in work:
                    work[k2] *= mult_f
                for k2 in out:
                    out[k2] *= mult_f
            for m2, c2 in mul_mono(mono_sub(m, lm), g).items():
                if m2 == m:
                    continue
                s = work.get(m2, 0) - mult_g * c2
                if s:
                    work[m2] = s
                else:
                    work.pop(m2, None)
            budget.tick()
            steps += 1
            if steps % _CONTENT_EVERY == 0 and scale != 1:
                scale = _strip_content(work, out, scale)
        if scale != 1:
            scale = _strip_content(out, {}, scale)
        return out, scale

    def spair(self, fi: Tuple[tuple, int, Poly], fj: Tuple[tuple, int, Poly]) -> Poly:
        lmi, lci, gi = fi
        lmj, lcj, gj = fj
        lcm = mono_lcm(lmi, lmj)
        d = gcd(lci, lcj)
        left = self.mul_mono(mono_sub(lcm, lmi), gi)
        right = self.mul_mono(mono_sub(lcm, lmj), gj)
        mi, mj = lcj // d, lci // d
        acc = {m: mi * c for m, c in left.items()}
        for m, c in right.items():
            s = acc.get(m, 0) - mj * c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return acc

    # -- Buchberger ---------------------------------------------------

    def buchberger(
        self,
        gens: List[Poly],
        product_criterion: bool = False,
        reduced: bool = True,
    ) -> List[Poly]:
        """Groebner basis of the (left) ideal of ``gens``: minimal always,
        tail-reduced when ``reduced`` is set."""
        key = self.key
        basis: List[Tuple[tuple, int, Poly]] = []
        for g in gens:
            g = normalize_int_poly(dict(g), key)
            if g:
                lm = max(g, key=key)
                basis.append((lm, g[lm], g))
        if not basis:
            return []
        if any(not any(lm) for lm, _, _ in basis):
            return [{tuple(0 for _ in basis[0][0]): 1}]

        counter = 0
        heap: list = []
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                counter += 1
                lcm = mono_lcm(basis[i][0], basis[j][0])
                heapq.heappush(heap, (key(lcm), counter, i, j))

        while heap:
            _, _, i, j = heapq.heappop(heap)
            lmi = basis[i][0]
            lmj = basis[j][0]
            if product_criterion and all(min(a, b) == 0 for a, b in zip(lmi, lmj)):
                continue
            s = self.spair(basis[i], basis[j])
            if not s:
                continue
            r, _ = self.reduce(s, basis, full=False)
            if not r:
                continue
            r = normalize_int_poly(r, key)
            lm = max(r, key=key)
            if not any(lm):
                zero = tuple(0 for _ in lm)
                return [{zero: 1}]
            new_index = len(basis)
            basis.append((lm, r[lm], r))
            for t in range(new_index):
                counter += 1
                lcm = mono_lcm(basis[t][0], lm)
                heapq.heappush(heap, (key(lcm), counter, t, new_index))

        return self._interreduce(basis, tails=reduced)

    def _interreduce(
        self, basis: List[Tuple[tuple, int, Poly]], tails: bool = True
    ) -> List[Poly]:
        # minimal set: no leading monomial divisible by another's
        order = sorted(
            range(len(basis)),
            key=lambda t: (self.key(basis[t][0]), sorted(basis[t][2].items())),
        )
        kept: List[int] = []
        for t in order:
            lm = basis[t][0]
            drop = False
            for s in kept:
                if mono_divides(basis[s][0], lm):
                    drop = True
                    break
            if not drop:
                kept = [s for s in kept if not mono_divides(lm, basis[s][0])]
                kept.append(t)
        current = [dict(basis[t][2]) for t in kept]
        if not tails:
            current.sort(
                key=lambda g: (self.key(max(g, key=self.key)), sorted(g.items()))
            )
            return current

        # tail reduction until stable
        for _ in range(64):
            changed = False
            nxt: List[Poly] = []
            heads = [(max(g, key=self.key)) for g in current]
            for idx, g in enumerate(current):
                others = [
                    (heads[k], current[k][heads[k]], current[k])
                    for k in range(len(current))
                    if k != idx
                ]
                r, _ = self.reduce(g, others, full=True)
                r = normalize_int_poly(r, self.key)
                if r != g:
                    changed = True
                nxt.append(r)
            current = [g for g in nxt if g]
            if not changed:
                break
        current.sort(key=lambda g: (self.key(max(g, key=self.key)), sorted(g.items())))
        return current

    # -- certification ------------------------------------------------

    def is_groebner(self, gens: List[Poly]) -> bool:
        """All S-pairs reduce to zero against the given set."""
        basis = []
        for g in gens:
            g = normalize_int_poly(dict(g), self.key)
            if g:
                lm = max(g, key=self.key)
                basis.append((lm, g[lm], g))
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = self.spair(basis[i], basis[j])
                r, _ = self.reduce(s, basis, full=True)
                if r:
                    return False
        return True
