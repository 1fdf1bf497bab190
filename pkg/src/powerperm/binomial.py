"""p-adic valuations of binomial coefficients via four independent routes.

The routes deliberately share no code: a closed form for C(p**k, j), carry
counting in base-p addition, Legendre's factorial formula, and a brute-force
oracle that factors the exact coefficient. Agreement between them is part of
the test contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import BottomExceedsTop, OracleBoundExceeded, OutOfRange
from .padic import PrimeBase, valuation

Method = Literal["lemma1", "kummer", "legendre", "direct"]

DIRECT_BOUND = 10_000


@dataclass(frozen=True)
class ValuationReport:
    """p-adic valuation of C(top, bottom) together with the route that produced it."""

    p: PrimeBase
    top: int
    bottom: int
    valuation: int
    method: Method


def valuation_lemma1(base: PrimeBase, k: int, j: int) -> ValuationReport:
    """Valuation of C(p**k, j) for 0 < j < p**k.

    If p**h is the exact power of p dividing j, then p**(k-h) is the exact
    power of p dividing C(p**k, j).
    """
    if k < 1:
        raise OutOfRange("k must be >= 1")
    top = base.p**k
    if not 0 < j < top:
        raise OutOfRange(f"j must lie strictly between 0 and p**k = {top}")
    h = valuation(j, base)
    return ValuationReport(base, top, j, k - h, "lemma1")


def kummer_carries(base: PrimeBase, top: int, bottom: int) -> ValuationReport:
    """Count carries when adding (top - bottom) and bottom in base p.

    The carry count equals the p-adic valuation of C(top, bottom). Note a
    carry out of one position can propagate through runs of digits summing
    to p-1, so the count may exceed the number of positions where the top
    digit is smaller than the bottom digit.
    """
    if bottom < 0:
        raise OutOfRange("bottom must be non-negative")
    if bottom > top:
        raise BottomExceedsTop(f"bottom {bottom} exceeds top {top}")
    p = base.p
    a, b = top - bottom, bottom
    carries = 0
    carry = 0
    while a or b or carry:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        carry = 1 if da + db + carry >= p else 0
        carries += carry
    return ValuationReport(base, top, bottom, carries, "kummer")


def valuation_legendre(base: PrimeBase, top: int, bottom: int) -> ValuationReport:
    """Valuation via Legendre's formula for factorials.

    v_p(m!) = sum over i of floor(m / p**i), and the coefficient valuation is
    v_p(top!) - v_p(bottom!) - v_p((top-bottom)!).
    """
    if bottom < 0:
        raise OutOfRange("bottom must be non-negative")
    if bottom > top:
        raise BottomExceedsTop(f"bottom {bottom} exceeds top {top}")

    def fact_val(m: int) -> int:
        total = 0
        q = base.p
        while q <= m:
            total += m // q
            q *= base.p
        return total

    val = fact_val(top) - fact_val(bottom) - fact_val(top - bottom)
    return ValuationReport(base, top, bottom, val, "legendre")


def valuation_direct(
    base: PrimeBase, top: int, bottom: int, bound: int = DIRECT_BOUND
) -> ValuationReport:
    """Brute-force oracle: compute C(top, bottom) exactly and divide out p.

    Guarded by a bound on top so tests cannot accidentally request a
    gigantic coefficient.
    """
    if bottom < 0:
        raise OutOfRange("bottom must be non-negative")
    if bottom > top:
        raise BottomExceedsTop(f"bottom {bottom} exceeds top {top}")
    if top > bound:
        raise OracleBoundExceeded(f"top {top} exceeds oracle bound {bound}")
    c = math.comb(top, bottom)
    val = 0
    while c % base.p == 0:
        c //= base.p
        val += 1
    return ValuationReport(base, top, bottom, val, "direct")
