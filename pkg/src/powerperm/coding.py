"""Bijections induced on l-digit base-p blocks by the map x -> x**n.

For a prime p, exponent n = q * p**k with gcd(q, p) = 1, and any nonzero
residue r, the digits of (p*x' + r)**n at positions [shift, shift + l) run
through every l-digit value exactly once as x' runs over [0, p**l). The
shift is 1 + k, plus one more digit when p == 2 and k >= 1. Everything in
this module computes, inverts, or factors that permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator

from .errors import (
    DomainError,
    EnumerationBoundExceeded,
    InternalBijectivityViolation,
    NotComposite,
)
from .padic import PrimeBase, totient_prime_power

# Full-table enumeration refuses to build more than 2**TABLE_BITS entries
# unless told otherwise; decode switches to the scalable path above 2**20.
TABLE_BITS = 24
MAX_TABLE_ENTRIES = 1 << TABLE_BITS
DECODE_TABLE_LIMIT = 1 << 20


@dataclass(frozen=True)
class PowerSpec:
    """Exponent n split as n = q * p**k with q coprime to the base."""

    n: int
    q: int
    k: int

    @classmethod
    def from_power(cls, n: int, base: PrimeBase) -> "PowerSpec":
        if n < 1:
            raise DomainError("exponent must be a positive integer")
        q, k = n, 0
        while q % base.p == 0:
            q //= base.p
            k += 1
        return cls(n=n, q=q, k=k)


@dataclass(frozen=True)
class CodingParams:
    """Parameters of one block permutation.

    p: prime base; power: the exponent split; l: block width in digits;
    r: residue of the argument mod p (never 0); j: exact power of p carried
    by the argument, which moves the digit window but not the induced map.
    """

    p: PrimeBase
    power: PowerSpec
    l: int
    r: int
    j: int = 0

    def __post_init__(self) -> None:
        p = self.p.p
        if self.l < 1:
            raise DomainError("block width l must be >= 1")
        if not 0 < self.r < p:
            raise DomainError(f"residue r must satisfy 0 < r < {p}; got {self.r}")
        if self.j < 0:
            raise DomainError("j must be >= 0")
        pw = self.power
        if pw.n < 1 or pw.q < 1 or pw.k < 0 or pw.q * p**pw.k != pw.n:
            raise DomainError(f"inconsistent power split {pw}")
        if pw.q % p == 0:
            raise DomainError("unit part q must be coprime to the base")

    @classmethod
    def make(cls, p: int, n: int, l: int, r: int, j: int = 0) -> "CodingParams":
        base = PrimeBase(p)
        return cls(p=base, power=PowerSpec.from_power(n, base), l=l, r=r, j=j)

    def size(self) -> int:
        return self.p.p**self.l


@dataclass(frozen=True)
class PermutationTable:
    """Exhaustive image of one block permutation; image[x'] = encode(x')."""

    params: CodingParams
    image: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.image)

    def apply(self, xp: int) -> int:
        return self.image[xp]

    def inverse_image(self) -> tuple[int, ...]:
        inv = [0] * len(self.image)
        for x, z in enumerate(self.image):
            inv[z] = x
        return tuple(inv)


def shift(power: PowerSpec, base: PrimeBase) -> int:
    """First digit position of the permuted window in (p*x'+r)**n.

    Equals 1 + k, plus 1 when p == 2 and k >= 1 (squaring an odd number
    pins the twos digit, so the window starts one place later).
    """
    extra = 1 if (base.p == 2 and power.k >= 1) else 0
    return 1 + power.k + extra


def extended_shift(params: CodingParams) -> int:
    """Window position inside x**n when x carries an exact factor p**j."""
    return params.power.n * params.j + shift(params.power, params.p)


def encode(params: CodingParams, xp: int) -> int:
    """Window digits of x**n, where x = p**j * (p*xp + r).

    The p**j factor contributes exactly n*j zero digits below the window,
    so the result equals the window of (p*xp + r)**n at the base shift and
    does not depend on j.
    """
    if not 0 <= xp < params.size():
        raise DomainError(f"x' must lie in [0, {params.size()}); got {xp}")
    p = params.p.p
    a = shift(params.power, params.p)
    return ((p * xp + params.r) ** params.power.n // p**a) % params.size()


def reconstruct(params: CodingParams, xp: int) -> int:
    """The integer x = p**j * (p*xp + r) whose power carries encode(xp)."""
    if not 0 <= xp < params.size():
        raise DomainError(f"x' must lie in [0, {params.size()}); got {xp}")
    p = params.p.p
    return p**params.j * (p * xp + params.r)


def iter_codes(params: CodingParams) -> Iterator[int]:
    """Yield encode(x') for x' = 0, 1, ..., p**l - 1 with constants hoisted."""
    p = params.p.p
    n = params.power.n
    pa = p ** shift(params.power, params.p)
    pl = params.size()
    x = params.r
    for _ in range(pl):
        yield (x**n // pa) % pl
        x += p


def permutation_table(
    params: CodingParams, max_entries: int = MAX_TABLE_ENTRIES
) -> PermutationTable:
    """Build the full image and verify it is a permutation.

    Raises EnumerationBoundExceeded when p**l > max_entries, and
    InternalBijectivityViolation if a duplicate output ever appears (which
    would be an implementation bug, not a usage error).
    """
    size = params.size()
    if size > max_entries:
        raise EnumerationBoundExceeded(
            f"table would need {size} entries; bound is {max_entries}"
        )
    image = list(iter_codes(params))
    seen = bytearray(size)
    for z in image:
        if seen[z]:
            raise InternalBijectivityViolation(
                f"duplicate output {z} for params {params}"
            )
        seen[z] = 1
    return PermutationTable(params=params, image=tuple(image))


def decode_exponent(params: CodingParams) -> int:
    """Inverse exponent s for the unit part q of n.

    Computed as the inverse of q modulo phi(p**L) when gcd(q, p-1) == 1 and
    modulo p**(L-1) otherwise, with L = l + 1 + k (+1 for p == 2 with
    k >= 1). Either way q*s is 1 modulo p**l, which is what the decode path
    needs on the subgroup of integers congruent to 1 mod p. When k == 0 and
    gcd(n, p-1) == 1 the stronger identity (x**n)**s == x holds for every
    unit x below p**L.
    """
    p = params.p.p
    pw = params.power
    delta = 1 if (p == 2 and pw.k >= 1) else 0
    big = params.l + 1 + pw.k + delta
    if gcd(pw.q, p - 1) == 1:
        modulus = totient_prime_power(params.p, big)
    else:
        modulus = p ** (big - 1)
    if modulus == 1:
        return 1
    return pow(pw.q, -1, modulus)


def _low_window_value(params: CodingParams, code: int, digits: int) -> int:
    # x_u**n agrees with r**n on every digit below the shift, so the known
    # part of x_u**n mod p**(shift+digits) is r**n's tail plus the code.
    p = params.p.p
    a = shift(params.power, params.p)
    return pow(params.r, params.power.n, p**a) + p**a * (code % p**digits)


def _decode_unit_exponent(params: CodingParams, code: int) -> int:
    # k == 0: one modular exponentiation inverts the whole map. Divide out
    # the residue to land in the 1 mod p subgroup, where orders divide p**l.
    p = params.p.p
    n = params.power.n
    big = p ** (params.l + 1)
    w = _low_window_value(params, code, params.l)
    v = w * pow(pow(params.r, n, big), -1, big) % big
    xu = params.r * pow(v, decode_exponent(params), big) % big
    if xu % p != params.r:
        raise InternalBijectivityViolation(f"recovered unit {xu} off-coset")
    return (xu - params.r) // p


def _decode_lift(params: CodingParams, code: int) -> int:
    # p divides n: recover x_u digit by digit. For p == 2 a digit of x_u can
    # disturb the code one position below the newest one, so candidates are
    # filtered with a one-digit lag and pinned by the full window at the end.
    p = params.p.p
    n = params.power.n
    a = shift(params.power, params.p)
    lag = 1 if p == 2 else 0
    w = _low_window_value(params, code, params.l)
    cands = [params.r]
    for t in range(1, params.l + 1):
        modulus = p ** (a + max(0, t - lag))
        target = w % modulus
        step = p**t
        cands = [
            y + c * step
            for y in cands
            for c in range(p)
            if pow(y + c * step, n, modulus) == target
        ]
        if not cands:
            raise InternalBijectivityViolation("digit lifting lost all candidates")
    full = p ** (a + params.l)
    final = [y for y in cands if pow(y, n, full) == w % full]
    if len(final) != 1:
        raise InternalBijectivityViolation(
            f"digit lifting ended with {len(final)} candidates"
        )
    return (final[0] - params.r) // p


@lru_cache(maxsize=8)
def _cached_inverse(params: CodingParams, max_entries: int) -> tuple[int, ...]:
    return permutation_table(params, max_entries).inverse_image()


def decode(
    params: CodingParams,
    code: int,
    strategy: str = "auto",
    max_entries: int = MAX_TABLE_ENTRIES,
) -> int:
    """The unique x' with encode(params, x') == code.

    strategy "table" inverts a full enumeration (cached per params),
    "exponent" uses one modular inversion when p does not divide n and
    digit-wise lifting otherwise, and "auto" picks the table below 2**20
    entries and the scalable path above.
    """
    if not 0 <= code < params.size():
        raise DomainError(f"code must lie in [0, {params.size()}); got {code}")
    if strategy == "auto":
        strategy = "table" if params.size() <= DECODE_TABLE_LIMIT else "exponent"
    if strategy == "table":
        return _cached_inverse(params, max_entries)[code]
    if strategy == "exponent":
        if params.power.k == 0:
            return _decode_unit_exponent(params, code)
        return _decode_lift(params, code)
    raise DomainError(f"unknown decode strategy {strategy!r}")


def compose_decomposition(
    params: CodingParams,
) -> tuple[CodingParams, CodingParams, int]:
    """Split the map for n = q * p**k into a q-stage and a p**k-stage.

    Returns (f_params, g_params, r2) where f encodes with exponent q at
    residue r, g encodes with exponent p**k at residue r2 = r**q mod p, and
    encode(params, x') == encode(g, encode(f, x')) mod p**l for every x'.
    For odd p both stages use block width l and the identity is exact; for
    p == 2 the stages carry one extra digit (width l + 1) because the
    q-stage output is needed modulo 2**(l+2) before the final reduction.
    """
    pw = params.power
    if pw.k == 0 or pw.q == 1:
        raise NotComposite(
            f"n = {pw.n} does not split into nontrivial coprime-power factors"
        )
    p = params.p.p
    mid_l = params.l + (1 if p == 2 else 0)
    f_params = CodingParams(
        p=params.p, power=PowerSpec.from_power(pw.q, params.p), l=mid_l, r=params.r
    )
    r2 = pow(params.r, pw.q, p)
    g_params = CodingParams(
        p=params.p, power=PowerSpec.from_power(p**pw.k, params.p), l=mid_l, r=r2
    )
    return f_params, g_params, r2


def encode_via_composition(params: CodingParams, xp: int) -> int:
    """Evaluate the map through its two-stage decomposition."""
    f_params, g_params, _ = compose_decomposition(params)
    return encode(g_params, encode(f_params, xp)) % params.size()
