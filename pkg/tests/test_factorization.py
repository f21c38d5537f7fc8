"""Integer factorization utilities."""

import math
import random
from itertools import islice

from prymlab.factorization import (
    divisors,
    factor_integer,
    is_prime,
    primes_from,
    valuation,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_is_prime_carmichael_and_large():
    for n in [561, 1105, 1729, 2465, 6601, 8911]:  # Carmichael numbers
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # Mersenne composite (Cole)


def test_factor_known():
    assert factor_integer(1) == {}
    assert factor_integer(-1) == {}
    assert factor_integer(2**6 * 7) == {2: 6, 7: 1}
    assert factor_integer(-448) == {2: 6, 7: 1}
    assert factor_integer(23328) == {2: 5, 3: 6}
    assert factor_integer(725594112) == {2: 12, 3: 11}


def test_factor_reassembles():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(2, 10**12)
        fac = factor_integer(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p) and e >= 1
            prod *= p**e
        assert prod == n
    # a few with large prime factors
    for n in [10**9 + 7, (10**9 + 7) * (10**9 + 9), 2**32 + 1]:
        fac = factor_integer(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-12) == [1, 2, 3, 4, 6, 12]
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 10**6)
        ds = divisors(n)
        assert ds == sorted(ds) and all(n % d == 0 for d in ds)
        assert len(ds) == sum(1 for d in range(1, n + 1) if n % d == 0) if n < 2000 else True


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(48, 3) == 1
    assert valuation(-9, 3) == 2
    assert valuation(7, 5) == 0


def test_primes_from():
    first = list(islice(primes_from(2), 10))
    assert first == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert list(islice(primes_from(90), 3)) == [97, 101, 103]
    assert next(primes_from(5)) == 5


def test_gcd_sanity():
    assert math.gcd(18, 63) == 9
