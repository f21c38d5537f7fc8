"""Assembly of full classification records (the CLI's JSON payloads).

A ClassifyRecord collects everything the library knows about one curve:
invariants, the endomorphism profile, the exact torsion report, the bigonal
dual, and optionally the oracle summary over a set of good primes.  All
rationals are serialized as base-10 strings; integer-valued data (ranks,
orders, L-polynomial coefficients) are plain JSON integers.  No floats.

When the oracle runs, its multiplicative bound feeds back into the torsion
computation, upgrading a three-part lower bound to exact whenever the bound's
3-adic valuation matches the proven rank.
"""

from __future__ import annotations

import math
from typing import Dict, List, Optional, Sequence

from .curves import (
    Curve,
    bigonal_dual,
    curve_to_dict,
    discriminant,
    is_special,
    j_invariant,
)
from .endomorphisms import (
    cm_discriminant,
    elkies_t,
    end_ring,
    endo_field,
    is_gl2_type,
    is_principally_polarizable,
    ns_rank,
    sato_tate_label,
)
from .errors import CMNotSupported
from .oracle import good_primes, prym_order
from .rationals import format_rational
from .torsion import torsion_group, torsion_to_dict

DEFAULT_ORACLE_PRIMES = 5


def endo_profile(c: Curve) -> Dict:
    """The endomorphism profile as a JSON-ready dict.

    principally_polarizable and ns_rank are null for CM curves (their
    hypotheses fail); the Sato-Tate label depends only on the Galois label.
    """
    field = endo_field(c)
    ring = end_ring(c)
    try:
        pp: Optional[bool] = is_principally_polarizable(c)
        rank: Optional[int] = ns_rank(c)
    except CMNotSupported:
        pp = None
        rank = None
    return {
        "delta": format_rational(field.delta),
        "d": field.d,
        "degree": field.degree,
        "group_label": field.group_label,
        "end_ring": ring.kind,
        "cm_discriminant": cm_discriminant(c),
        "gl2_type": is_gl2_type(c),
        "principally_polarizable": pp,
        "ns_rank": rank,
        "sato_tate": sato_tate_label(c),
        "elkies_t": format_rational(elkies_t(j_invariant(c))),
    }


def oracle_summary(c: Curve, primes: Sequence[int]) -> Dict:
    """Per-prime L-data and the gcd bound, as a JSON-ready dict."""
    per_prime: List[Dict] = []
    bound = 0
    for p in primes:
        pc = prym_order(c, p)
        per_prime.append(
            {
                "p": p,
                "l_c": list(pc.l_c.coeffs),
                "l_e": list(pc.l_e.coeffs),
                "prym_order": pc.order,
            }
        )
        bound = math.gcd(bound, pc.order)
    return {"per_prime": per_prime, "gcd": bound}


def classify_record(
    c: Curve,
    with_oracle: bool = False,
    primes: Optional[Sequence[int]] = None,
) -> Dict:
    """Full record for one curve; oracle data included on request.

    Explicit primes imply the oracle; with_oracle alone selects the first
    DEFAULT_ORACLE_PRIMES good primes from 5 upward.
    """
    summary = None
    bound = None
    if with_oracle or primes is not None:
        chosen = list(primes) if primes is not None else good_primes(c, DEFAULT_ORACLE_PRIMES)
        summary = oracle_summary(c, chosen)
        bound = summary["gcd"]
    torsion = torsion_group(c, oracle_bound=bound)
    return {
        "curve": curve_to_dict(c),
        "j": format_rational(j_invariant(c)),
        "delta": format_rational(discriminant(c)),
        "special": is_special(c),
        "endo": endo_profile(c),
        "torsion": torsion_to_dict(torsion),
        "oracle": summary,
        "dual": curve_to_dict(bigonal_dual(c)),
    }
