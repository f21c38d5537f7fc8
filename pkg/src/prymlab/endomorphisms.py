"""Endomorphism structure of the Prym surface.

Everything here is decided by power-class tests on the discriminant
delta = 16*b*(a^2 - 4b) and by exact j-matching against the complete table of
rational CM j-invariants.

Endomorphism field.  All endomorphisms are defined over L = Q(omega, delta^(1/6))
(omega a primitive cube root of unity).  Its Galois group is dihedral of order
2d where d = lcm(d2, d3):

* d2 = 1 iff delta or -3*delta is a rational square (i.e. delta is a square in
  Q(omega)), else 2;
* d3 = 1 iff delta is a rational cube (equivalent to being a cube in Q(omega),
  since the quadratic field cannot split a cubic), else 3.

Real multiplication / GL2-type.  The Prym acquires everything over Q exactly
in the sixth-power cases: End = Z[sqrt(2)] iff delta is a rational sixth power,
End = Z[sqrt(6)] iff -27*delta is one (the two cases are exclusive: their ratio
-27 is not a sixth power); otherwise End = Z.  GL2-type is precisely the union
of the two cases.  The Z[sqrt(2)] surfaces are principally polarizable, the
Z[sqrt(6)] ones are not.

CM.  The finitely many rational CM classes are detected by j or 1/j hitting the
hard-coded table; for those, the trichotomy above is suppressed (its hypotheses
assume geometric simplicity) and operations whose contracts require a non-CM
surface raise CMNotSupported.  Sato-Tate labels are attached to the Galois
label alone: D6 -> "J(E_6)", D3 -> "J(E_3)", nothing is asserted for D1/D2.

The Shimura-curve coordinate t = (j+1)^2 / (4j) and its lifting criterion
(t(t-1) a square or zero) are exposed for cross-checks; every j realized by a
rational curve does lift, since t(t-1) = ((j^2-1)/(4j))^2 identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .curves import Curve, discriminant, j_invariant
from .errors import CMNotSupported
from .rationals import RationalLike, is_nth_power, is_square

# Complete list of rational CM j-invariants with their discriminants.
# j = 0 is excluded by smoothness and never matches.
CM_TABLE = {
    Fraction(1): -4,
    Fraction(-1): -24,
    Fraction(256, 135): -75,
    Fraction(-27): -84,
    Fraction(27, 125): -120,
    Fraction(15625, 729): -228,
    Fraction(-48384, 15625): -147,
    Fraction(-1771561, 421875): -372,
    Fraction(-11390625, 4913): -408,
}


@dataclass(frozen=True)
class EndoFieldDescriptor:
    """Splitting data of L = Q(omega, delta^(1/6)) with Gal(L/Q) = D_d."""

    delta: Fraction
    d2: int      # 1 or 2
    d3: int      # 1 or 3
    d: int       # lcm(d2, d3) in {1, 2, 3, 6}
    degree: int  # 2*d
    group_label: str  # "D1" | "D2" | "D3" | "D6"


@dataclass(frozen=True)
class EndRing:
    """End(P) over Q: Z, Z[sqrt(2)], Z[sqrt(6)], or CM with its discriminant."""

    kind: str  # "Z" | "Z_sqrt2" | "Z_sqrt6" | "CM"
    cm_discriminant: Optional[int] = None


def endo_field(c: Curve) -> EndoFieldDescriptor:
    """Descriptor of the endomorphism field of the Prym of c."""
    delta = discriminant(c)
    d2 = 1 if (is_square(delta) or is_square(-3 * delta)) else 2
    d3 = 1 if is_nth_power(delta, 3) is not None else 3
    d = lcm(d2, d3)
    return EndoFieldDescriptor(
        delta=delta, d2=d2, d3=d3, d=d, degree=2 * d, group_label=f"D{d}"
    )


def cm_discriminant(c: Curve) -> Optional[int]:
    """CM discriminant when j or 1/j is in the rational CM table, else None."""
    j = j_invariant(c)
    hit = CM_TABLE.get(j)
    if hit is None:
        hit = CM_TABLE.get(1 / j)
    return hit


def end_ring(c: Curve) -> EndRing:
    """End(P)/Q: CM beats the sixth-power trichotomy Z[sqrt2]/Z[sqrt6]/Z."""
    disc = cm_discriminant(c)
    if disc is not None:
        return EndRing("CM", disc)
    delta = discriminant(c)
    if is_nth_power(delta, 6) is not None:
        return EndRing("Z_sqrt2")
    if is_nth_power(-27 * delta, 6) is not None:
        return EndRing("Z_sqrt6")
    return EndRing("Z")


def is_gl2_type(c: Curve) -> bool:
    """True iff delta or -27*delta is a rational sixth power."""
    delta = discriminant(c)
    return is_nth_power(delta, 6) is not None or is_nth_power(-27 * delta, 6) is not None


def _require_simple(c: Curve) -> None:
    disc = cm_discriminant(c)
    if disc is not None:
        raise CMNotSupported(f"curve has CM (discriminant {disc})")


def is_principally_polarizable(c: Curve) -> bool:
    """For non-CM Pryms: principally polarizable iff End = Z[sqrt(2)]."""
    _require_simple(c)
    return end_ring(c).kind == "Z_sqrt2"


def ns_rank(c: Curve) -> int:
    """Neron-Severi rank of a non-CM Prym: 2 iff Galois image has order 2.

    The rank is 1 + dim of the invariants of the two-dimensional reflection
    representation; over Q the image always contains a reflection, so the
    invariant space is nonzero exactly when d = 1.
    """
    _require_simple(c)
    return 2 if endo_field(c).d == 1 else 1


def sato_tate_label(c: Curve) -> Optional[str]:
    """"J(E_6)" for D6 Galois image, "J(E_3)" for D3; no label otherwise."""
    return {"D6": "J(E_6)", "D3": "J(E_3)"}.get(endo_field(c).group_label)


def elkies_t(j: RationalLike) -> Fraction:
    """Shimura-curve coordinate t = (j+1)^2 / (4j); j must be nonzero."""
    j = Fraction(j)
    assert j != 0
    return (j + 1) ** 2 / (4 * j)


def lifts_to_Y(t: RationalLike) -> bool:
    """True iff t(t-1) is a rational square or zero."""
    t = Fraction(t)
    return is_square(t * (t - 1))
