"""Dense integer polynomials of low degree and exact rational root finding.

Coefficients are stored lowest degree first.  Everything here serves quartics
(x^4 + a x^2 + b and its dual) and the degree-4 lifting polynomial, so the
representation stays dense and the root finder is plain rational-root-theorem
enumeration over divisor pairs, each candidate verified by exact evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Set, Tuple

from .factorization import divisors
from .rationals import RationalLike, is_nth_power


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coeffs[i] multiplies x^i.  Leading coeff nonzero."""

    coeffs: Tuple[int, ...]

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):  # Horner
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "x" if i == 1 else f"x^{i}"
                term = base if mag == 1 else f"{mag}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        sign0, term0 = parts[0]
        text = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def rational_roots(p: IntPolynomial) -> Set[Fraction]:
    """Exactly the rational roots of nonzero p, each checked by evaluation.

    Candidates u/v run over u | constant term, v | leading coefficient
    (rational root theorem); a vanishing constant term contributes the root 0
    and is stripped before enumeration.
    """
    coeffs = list(p.coeffs)
    assert coeffs, "zero polynomial"
    roots: Set[Fraction] = set()
    while coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    const, lead = coeffs[0], coeffs[-1]
    stripped = IntPolynomial.of(coeffs)
    for u in divisors(const):
        for v in divisors(lead):
            for cand in (Fraction(u, v), Fraction(-u, v)):
                if cand not in roots and stripped(cand) == 0:
                    roots.add(cand)
    return roots


def rational_roots_scaled(coeffs: Sequence[RationalLike]) -> Set[Fraction]:
    """Roots of a polynomial with rational coefficients (lowest degree first).

    Clears denominators to an integer polynomial with the same root set.
    """
    fracs = [Fraction(c) for c in coeffs]
    scale = math.lcm(*(c.denominator for c in fracs)) if fracs else 1
    return rational_roots(IntPolynomial.of(int(c * scale) for c in fracs))


def biquadratic_roots(a: RationalLike, b: RationalLike) -> Set[Fraction]:
    """Rational roots of x^4 + a x^2 + b without divisor enumeration.

    Substituting z = x^2 reduces to z^2 + a z + b = 0, so the roots are read
    off two exact square tests: a^2 - 4b must be a rational square, and each
    quadratic root z must itself be a square.  Coefficients of astronomical
    height (smooth family members) stay cheap this way, where the divisor walk
    of rational_roots would blow up combinatorially.
    """
    a, b = Fraction(a), Fraction(b)
    disc = a * a - 4 * b
    s = is_nth_power(disc, 2)
    if s is None:
        return set()
    roots: Set[Fraction] = set()
    for z in {(-a + s) / 2, (-a - s) / 2}:
        w = is_nth_power(z, 2)
        if w is not None:
            roots.update({w, -w})
    return roots
