"""Finite-field point-counting oracle.

This is the independent verification engine: it never consults the exact
rational criteria, only counts points mod p and reconstructs L-polynomials.

For a good prime p (p >= 5, p not dividing 6*Delta of the integral model):

* #C(F_{p^k}) for k = 1, 2, 3 by cube-character counting: for each x the
  number of y with y^3 = v is 1 if v = 0, 3 if v is a nonzero cube, else 0 —
  when q = 1 mod 3; when q = 2 mod 3 cubing is a bijection and the count is
  q + 1 with no enumeration at all.
* #E(F_p) for the elliptic quotient y^2 = x^3 + c by quadratic characters.
* The genus-3 L-polynomial of C from N_1..N_3 via Newton's identities, the
  top half filled in by the functional equation; the genus-1 one from N_1.
* The Prym quartic factor as the exact quotient L_C / L_E; its value at 1 is
  the group order #P(F_p), which every rational torsion subgroup must divide
  (reduction is injective on prime-to-p torsion, and p >= 5 > 3).

Extension-field sweeps are vectorized with numpy over coordinate columns,
chunked to bound memory; the scalar FiniteField class supplies the modulus and
reduction rows so both paths agree by construction, and a naive double loop
over (x, y) is kept as a second, independent counter for small p.

The sweep size is capped: primes above PRYMLAB_PRIME_CAP (default 499, i.e.
at most ~1.25e8 cubic-field elements) are refused with BadPrime.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .curves import Curve, EllipticModel, discriminant, elliptic_quotients, integral_model
from .errors import BadPrime, NonExactDivision, WeilBoundViolation
from .factorization import is_prime, primes_from
from .finitefields import FiniteField

_CHUNK = 1 << 20


def _prime_cap() -> int:
    return int(os.environ.get("PRYMLAB_PRIME_CAP", "499"))


@dataclass(frozen=True)
class LPolynomial:
    """L(T) = sum c_i T^i, degree 2g, with c_0 = 1 and the functional equation
    c_{2g-i} = p^{g-i} c_i."""

    p: int
    genus: int
    coeffs: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PrymCount:
    """L_C = L_E * L_P at one good prime; order = L_P(1) = #P(F_p)."""

    p: int
    l_c: LPolynomial
    l_e: LPolynomial
    l_p: Tuple[int, ...]
    order: int


def good_primes(c: Curve, count: int, minimum: int = 5) -> List[int]:
    """First `count` primes p >= max(5, minimum) not dividing 6*Delta (integral model)."""
    m = integral_model(c)
    bad = abs(int(6 * discriminant(m)))
    out: List[int] = []
    for p in primes_from(max(5, minimum)):
        if bad % p != 0:
            out.append(p)
            if len(out) == count:
                break
    return out


def _reduce_fraction(q: Fraction, p: int) -> int:
    if q.denominator % p == 0:
        raise BadPrime(f"p = {p} divides a denominator")
    return q.numerator * pow(q.denominator, -1, p) % p


def _require_good(m: Curve, p: int) -> None:
    if p < 5 or not is_prime(p):
        raise BadPrime(f"p = {p} is not a usable prime (need a prime >= 5)")
    if int(6 * discriminant(m)) % p == 0:
        raise BadPrime(f"p = {p} divides 6*Delta")
    if p > _prime_cap():
        raise BadPrime(f"p = {p} above enumeration cap {_prime_cap()}")


def count_points_C(c: Curve, p: int, k: int = 1) -> int:
    """#C(F_{p^k}) including the point at infinity."""
    assert k in (1, 2, 3)
    m = integral_model(c)
    _require_good(m, p)
    q = p ** k
    if q % 3 == 2:
        return q + 1  # cubing is a bijection: one y per x, plus infinity
    a, b = int(m.a) % p, int(m.b) % p
    if k == 1:
        return _count_prime_field(p, a, b) + 1
    return _count_extension(p, k, a, b) + 1


def _count_prime_field(p: int, a: int, b: int) -> int:
    cubes = bytearray(p)
    for x in range(p):
        cubes[pow(x, 3, p)] = 1
    affine = 0
    for x in range(p):
        x2 = x * x % p
        v = (x2 * x2 + a * x2 + b) % p
        if v == 0:
            affine += 1
        elif cubes[v]:
            affine += 3
    return affine


def _mul_cols(field: FiniteField, xs: Sequence[np.ndarray], ys: Sequence[np.ndarray]):
    # vectorized version of FiniteField.mul on int64 coordinate columns
    p = field.p
    if field.k == 2:
        a0, a1 = xs
        b0, b1 = ys
        d2 = a1 * b1 % p
        r0, r1 = field.red2
        return [(a0 * b0 + d2 * r0) % p, (a0 * b1 + a1 * b0 + d2 * r1) % p]
    a0, a1, a2 = xs
    b0, b1, b2 = ys
    d0 = a0 * b0 % p
    d1 = (a0 * b1 + a1 * b0) % p
    d2 = (a0 * b2 + a1 * b1 + a2 * b0) % p
    d3 = (a1 * b2 + a2 * b1) % p
    d4 = a2 * b2 % p
    r3, r4 = field.red3, field.red4
    return [
        (d0 + d3 * r3[0] + d4 * r4[0]) % p,
        (d1 + d3 * r3[1] + d4 * r4[1]) % p,
        (d2 + d3 * r3[2] + d4 * r4[2]) % p,
    ]


def _decode_cols(idx: np.ndarray, p: int, k: int) -> List[np.ndarray]:
    cols = []
    rest = idx
    for _ in range(k):
        cols.append(rest % p)
        rest = rest // p
    return cols


def _encode_cols(cols: Sequence[np.ndarray], p: int) -> np.ndarray:
    idx = cols[-1].copy()
    for col in reversed(cols[:-1]):
        idx = idx * p + col
    return idx


def _count_extension(p: int, k: int, a: int, b: int) -> int:
    """Affine count over F_{p^k} (q = 1 mod 3 branch), numpy-chunked."""
    field = FiniteField(p, k)
    q = field.q
    # pass 1: mark the image of cubing
    is_cube = np.zeros(q, dtype=bool)
    for lo in range(0, q, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, q), dtype=np.int64)
        x = _decode_cols(idx, p, k)
        x3 = _mul_cols(field, _mul_cols(field, x, x), x)
        is_cube[_encode_cols(x3, p)] = True
    # pass 2: classify f(x) = x^4 + a x^2 + b
    affine = 0
    for lo in range(0, q, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, q), dtype=np.int64)
        x = _decode_cols(idx, p, k)
        x2 = _mul_cols(field, x, x)
        x4 = _mul_cols(field, x2, x2)
        f = [(x4[i] + a * x2[i]) % p for i in range(k)]
        f[0] = (f[0] + b) % p
        enc = _encode_cols(f, p)
        zero = enc == 0
        affine += int(np.count_nonzero(zero))
        affine += 3 * int(np.count_nonzero(is_cube[enc] & ~zero))
    return affine


def count_points_C_naive(c: Curve, p: int) -> int:
    """Independent brute-force count of #C(F_p): a plain double loop over (x, y)."""
    m = integral_model(c)
    _require_good(m, p)
    a, b = int(m.a) % p, int(m.b) % p
    total = 1  # infinity
    for x in range(p):
        x2 = x * x % p
        v = (x2 * x2 + a * x2 + b) % p
        for y in range(p):
            if y * y * y % p == v:
                total += 1
    return total


def count_points_E(e: EllipticModel, p: int) -> int:
    """#E(F_p) for y^2 = x^3 + c, including infinity, by quadratic characters."""
    if p < 5 or not is_prime(p):
        raise BadPrime(f"p = {p} is not a usable prime (need a prime >= 5)")
    c = _reduce_fraction(Fraction(e.c), p)
    if c == 0:
        raise BadPrime(f"p = {p} divides 6c in y^2 = x^3 + c")
    if p % 3 == 2:
        return p + 1  # supersingular: x -> x^3 bijective, pairs cancel
    count = 1  # infinity
    half = (p - 1) // 2
    for x in range(p):
        v = (x * x % p * x + c) % p
        if v == 0:
            count += 1
        else:
            count += 2 if pow(v, half, p) == 1 else 0
    return count


def l_polynomial(counts: Sequence[int], p: int, genus: int) -> LPolynomial:
    """L-polynomial from N_1..N_g via Newton's identities + functional equation.

    Raises WeilBoundViolation if the result fails |c_1| <= 2g sqrt(p) or
    positivity of L(1), L(-1) — which would mean the counts are wrong.
    """
    assert genus in (1, 3) and len(counts) == genus
    s = [p ** k + 1 - counts[k - 1] for k in range(1, genus + 1)]
    e1 = s[0]
    if genus == 1:
        coeffs = (1, -e1, p)
    else:
        twice_e2 = e1 * s[0] - s[1]
        if twice_e2 % 2 != 0:
            raise WeilBoundViolation(f"non-integral e2 from counts {counts} at p={p}")
        e2 = twice_e2 // 2
        thrice_e3 = e2 * s[0] - e1 * s[1] + s[2]
        if thrice_e3 % 3 != 0:
            raise WeilBoundViolation(f"non-integral e3 from counts {counts} at p={p}")
        e3 = thrice_e3 // 3
        c1, c2, c3 = -e1, e2, -e3
        coeffs = (1, c1, c2, c3, p * c2, p * p * c1, p ** 3)
    lpoly = LPolynomial(p=p, genus=genus, coeffs=coeffs)
    c1 = coeffs[1]
    if c1 * c1 > 4 * genus * genus * p:
        raise WeilBoundViolation(f"|c1| = {abs(c1)} exceeds 2g*sqrt(p) at p={p}")
    if lpoly(1) <= 0 or lpoly(-1) <= 0:
        raise WeilBoundViolation(f"L(+-1) not positive at p={p}: {coeffs}")
    return lpoly


def _divide_out(l_c: LPolynomial, l_e: LPolynomial) -> Tuple[int, ...]:
    # exact power-series division from the constant end; l_e has constant 1
    num = list(l_c.coeffs) + [0, 0]
    den = l_e.coeffs  # (1, c1, p)
    quotient = []
    for i in range(5):
        q = num[i]
        quotient.append(q)
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num[5:7]) or num[:5] != [0] * 5:
        raise NonExactDivision(f"L_E does not divide L_C at p = {l_c.p}")
    return tuple(quotient)


def prym_order(c: Curve, p: int) -> PrymCount:
    """#P(F_p) via the exact factorization L_C = L_E * L_P."""
    m = integral_model(c)
    _require_good(m, p)
    counts = [count_points_C(m, p, k) for k in (1, 2, 3)]
    l_c = l_polynomial(counts, p, 3)
    e_model = elliptic_quotients(m)[0]
    l_e = l_polynomial([count_points_E(e_model, p)], p, 1)
    l_p = _divide_out(l_c, l_e)
    order = sum(l_p)
    # Weil interval (sqrt(p)-1)^4 <= order <= (sqrt(p)+1)^4, in exact integers:
    # the bounds are M -+ K sqrt(p) with M = p^2 + 6p + 1, K = 4(p + 1).
    mid = p * p + 6 * p + 1
    spread = 4 * (p + 1)
    low_ok = order >= mid or (mid - order) ** 2 <= spread * spread * p
    high_ok = order <= mid or (order - mid) ** 2 <= spread * spread * p
    if order <= 0 or not (low_ok and high_ok):
        raise WeilBoundViolation(f"Prym order {order} outside Weil range at p={p}")
    return PrymCount(p=p, l_c=l_c, l_e=l_e, l_p=l_p, order=order)


def torsion_multiplicative_bound(c: Curve, primes: Sequence[int]) -> int:
    """gcd of #P(F_p) over the given good primes; |P(Q)_tors| divides it."""
    assert primes, "need at least one good prime"
    g = 0
    for p in primes:
        g = math.gcd(g, prym_order(c, p).order)
    return g
