"""Integer factorization and primality.

Pipeline: trial division by a cached sieve up to 10^6, then Brent's variant of
Pollard rho on what remains, with a Miller-Rabin primality check that is
deterministic for n < 3.3 * 10^24 (fixed witness set).  The integers that
actually reach rho here are constants of quartics coming from family
instantiations — smooth products of small parameter values — so this is ample.
"""

from __future__ import annotations

import math
import random
from typing import Dict, Iterator, List

_SIEVE_LIMIT = 10 ** 6
_small_primes: List[int] = []

# Witnesses making Miller-Rabin deterministic for n < 3.317e24 (Sorenson-Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve() -> List[int]:
    global _small_primes
    if not _small_primes:
        flags = bytearray([1]) * _SIEVE_LIMIT
        flags[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(_SIEVE_LIMIT) + 1):
            if flags[i]:
                flags[i * i :: i] = b"\x00" * len(range(i * i, _SIEVE_LIMIT, i))
        _small_primes = [i for i in range(_SIEVE_LIMIT) if flags[i]]
    return _small_primes


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    # Brent's cycle-finding Pollard rho; returns a nontrivial factor of composite odd n.
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:  # backtrack
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_integer(n: int) -> Dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    assert n != 0
    n = abs(n)
    out: Dict[int, int] = {}
    for p in _sieve():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(n)  # deterministic per input
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> List[int]:
    """Sorted positive divisors of |n| (n nonzero)."""
    divs = [1]
    for p, e in factor_integer(n).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Exponent of p in nonzero n."""
    assert n != 0 and p >= 2
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def primes_from(start: int) -> Iterator[int]:
    """Primes >= start in increasing order."""
    n = max(2, start)
    if n == 2:
        yield 2
        n = 3
    elif n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2
