"""Exact rational torsion of the Prym surface.

The torsion group is always of the shape (Z/2)^m x (Z/3)^n and lands in the
short list {1, Z/2, Z/3, Z/6, (Z/2)^2, (Z/3)^2, Z/6 x Z/3}; there is no 4- or
9-torsion, and m = 2 forces n = 0.  The two parts are computed independently:

2-part (exact).  The 2-torsion sits in an exact sequence between the rational
2-torsion of the two elliptic quotients:

* a point below:  16*(a^2 - 4b) is a rational cube  (E side), contributing 1;
* a point above lifts:  b = t^3 for the real cube root t, and the lifting
  quartic g_{a,t}(z) = z^4 - 6t z^2 + 4a z - 3t^2 has a rational root.

Over Q each elliptic 2-group has order at most 2 (omega is irrational), so the
rank is just the sum of the two indicator bits — no Z/4 can occur.

3-part (exact when possible, honest lower bound otherwise).  The rank r of the
prime-above-3 torsion is read off the quartic f = x^4 + a x^2 + b: r = 2 iff f
splits into linear factors, r >= 1 iff f or its dual fhat has a rational root.
The full 3-torsion interleaves with the same computation for the sextic twist
by -27; with twist rank r_twist, the group order's 3-part lies between r and
min(2, r + r_twist).  Exactness holds when r = 2 (nothing above (Z/3)^2), when
r_twist = 0, or when a multiplicative oracle bound pins the 3-adic valuation
to r.  No rational criterion is known for lifting twist points, so the
remaining case is reported as a lower bound rather than resolved.

Real-multiplication module structure.  When End(P) = Z[sqrt(D)], the torsion
is a cyclic module Z[sqrt(D)]/a_p for a prime ideal a_p; the admissible groups
are, for D = 2: {1, Z/2, (Z/3)^2} and for D = 6: {1, Z/2, Z/3} — anything
else trips InternalInconsistency, as do the m = 2 side conditions.  All such
assertions are theorems applied as assembly constraints: they cannot fire on
correct code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Set, Tuple

from .curves import Curve, integral_model, sextic_twist
from .endomorphisms import EndRing, end_ring
from .errors import InternalInconsistency
from .polynomials import IntPolynomial, biquadratic_roots, rational_roots
from .rationals import format_rational, is_nth_power

EXACT = "Exact"
LOWER_BOUND = "LowerBound"

# (m, n) -> printed group name
_GROUP_NAMES = {
    (0, 0): "trivial",
    (1, 0): "Z/2",
    (0, 1): "Z/3",
    (1, 1): "Z/6",
    (2, 0): "Z/2 x Z/2",
    (0, 2): "Z/3 x Z/3",
    (1, 2): "Z/6 x Z/3",
}

# admissible (m, n) per real-multiplication ring, with the module label
_RM_MODULES = {
    "Z_sqrt2": {(0, 0): "trivial", (1, 0): "mod_a2", (0, 2): "mod_a3"},
    "Z_sqrt6": {(0, 0): "trivial", (1, 0): "mod_a2", (0, 1): "mod_a3"},
}


@dataclass(frozen=True)
class TwoTorsionReport:
    e_part: bool                      # 16(a^2-4b) is a cube
    ehat_point: Optional[Fraction]    # real cube root t of b, when b is a cube
    lift: bool                        # g_{a,t} has a rational root
    rank: int                         # e_part + lift, in {0, 1, 2}
    witness_root: Optional[Fraction]  # a rational root of g_{a,t}, if lift


@dataclass(frozen=True)
class ThreePartReport:
    r: int        # rank of the prime-above-3 part
    r_twist: int  # same for the -27 sextic twist
    lower: int
    upper: int
    status: str   # EXACT or LOWER_BOUND
    witnesses: Tuple[Fraction, ...]


@dataclass(frozen=True)
class TorsionReport:
    invariant_factors: Tuple[int, ...]
    group_name: str
    status: str
    two: TwoTorsionReport
    three: ThreePartReport
    end_module: Optional[str]  # "trivial" | "mod_a2" | "mod_a3" for RM rings


def two_torsion(c: Curve) -> TwoTorsionReport:
    """Exact rational 2-torsion via the two cube tests and the lifting quartic."""
    m = integral_model(c)
    e_part = is_nth_power(16 * (m.a * m.a - 4 * m.b), 3) is not None
    t = is_nth_power(m.b, 3)
    lift = False
    witness = None
    if t is not None:
        # g_{a,t}(z) = z^4 - 6t z^2 + 4a z - 3t^2, with integral a and t
        g = IntPolynomial.of([int(-3 * t * t), int(4 * m.a), int(-6 * t), 0, 1])
        roots = rational_roots(g)
        if roots:
            lift = True
            witness = min(roots)  # deterministic pick
    rank = int(e_part) + int(lift)
    assert not (lift and t is None)
    return TwoTorsionReport(
        e_part=e_part, ehat_point=t, lift=lift, rank=rank, witness_root=witness
    )


def p_torsion_rank(c: Curve) -> Tuple[int, Set[Fraction]]:
    """Rank of the prime-above-3 torsion with root witnesses.

    2 iff f splits completely; 1 iff f or fhat has a rational root (but f does
    not split); 0 otherwise.  Witnesses are roots for the integral model.
    """
    m = integral_model(c)
    f_roots = biquadratic_roots(m.a, m.b)
    if len(f_roots) == 4:  # Delta != 0 makes f squarefree, so split <=> 4 roots
        return 2, f_roots
    fhat_roots = biquadratic_roots(8 * m.a, 16 * (m.a * m.a - 4 * m.b))
    witnesses = f_roots | fhat_roots
    return (1, witnesses) if witnesses else (0, witnesses)


def three_part(c: Curve, oracle_bound: Optional[int] = None) -> ThreePartReport:
    """Full 3-part: rank plus exactness status, optionally oracle-assisted."""
    r, wits = p_torsion_rank(c)
    r_twist, _ = p_torsion_rank(sextic_twist(c, -27))
    upper = min(2, r + r_twist)
    status = LOWER_BOUND
    if r == 2 or r_twist == 0:
        status = EXACT
    if oracle_bound is not None:
        v3 = 0
        n = oracle_bound
        while n % 3 == 0:
            n //= 3
            v3 += 1
        if v3 < r:
            raise InternalInconsistency(
                f"oracle 3-part {v3} below proven rank {r} for {c}"
            )
        if v3 == r:
            status = EXACT
    if status == EXACT:
        upper = r
    return ThreePartReport(
        r=r, r_twist=r_twist, lower=r, upper=upper, status=status,
        witnesses=tuple(sorted(wits)),
    )


def torsion_group(c: Curve, oracle_bound: Optional[int] = None) -> TorsionReport:
    """Assemble the full torsion group and check it against the classification."""
    two = two_torsion(c)
    three = three_part(c, oracle_bound)
    m, n = two.rank, three.r
    if m == 2 and (three.r != 0 or three.r_twist != 0):
        # 2-torsion is twist-invariant and (Z/2)^2 x Z/3 is excluded, so a
        # maximal 2-part with any 3-part signal is impossible.
        raise InternalInconsistency(f"(Z/2)^2 with 3-part signal on {c}")
    if (m, n) not in _GROUP_NAMES:
        raise InternalInconsistency(f"group shape ({m}, {n}) off the list on {c}")
    ring = end_ring(c)
    module = _end_module_label(ring, m, n, c)
    return TorsionReport(
        invariant_factors=_invariant_factors(m, n),
        group_name=_GROUP_NAMES[(m, n)],
        status=three.status,
        two=two,
        three=three,
        end_module=module,
    )


def _invariant_factors(m: int, n: int) -> Tuple[int, ...]:
    # (Z/2)^m x (Z/3)^n as invariant factors, largest first
    factors = []
    for i in range(max(m, n)):
        f = (2 if i < m else 1) * (3 if i < n else 1)
        factors.append(f)
    return tuple(factors)


def _end_module_label(ring: EndRing, m: int, n: int, c: Curve) -> Optional[str]:
    if ring.kind not in _RM_MODULES:
        return None
    table = _RM_MODULES[ring.kind]
    if (m, n) not in table:
        raise InternalInconsistency(
            f"torsion ({m}, {n}) impossible for End = {ring.kind} on {c}"
        )
    return table[(m, n)]


def end_module_structure(c: Curve) -> Optional[str]:
    """Module label of the torsion over a real-multiplication End(P).

    None when End(P) is not Z[sqrt(2)] or Z[sqrt(6)].
    """
    ring = end_ring(c)
    if ring.kind not in _RM_MODULES:
        return None
    rep = torsion_group(c)
    return rep.end_module


def torsion_to_dict(rep: TorsionReport) -> Dict:
    """JSON form of a TorsionReport (rationals as strings)."""
    return {
        "group": rep.group_name,
        "invariant_factors": list(rep.invariant_factors),
        "status": "exact" if rep.status == EXACT else "lower_bound",
        "two_rank": rep.two.rank,
        "three_rank": rep.three.r,
        "witnesses": {
            "two_root": None
            if rep.two.witness_root is None
            else format_rational(rep.two.witness_root),
            "three_roots": [format_rational(w) for w in rep.three.witnesses],
        },
        "end_module": rep.end_module,
    }
