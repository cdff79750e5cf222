"""Elementary number theory used throughout the package.

Everything works on plain Python integers, which are arbitrary precision; the
exponents produced by the factorization recursion grow through lcm cascades
and must never be truncated.
"""

from __future__ import annotations

from math import gcd, lcm


def prime_factors(n: int) -> list[int]:
    """Ascending prime factorization of n with multiplicity (empty for n=1)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors.append(p)
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def totient(n: int) -> int:
    """Euler's totient of n."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    result = n
    for p in sorted(set(prime_factors(n))):
        result = result // p * (p - 1)
    return result


def multiplicative_order(k: int, n: int) -> int:
    """Smallest m >= 1 with k**m == 1 mod n.  Requires gcd(k, n) == 1."""
    if n < 1:
        raise ValueError(f"expected a positive modulus, got {n}")
    if gcd(k, n) != 1:
        raise ValueError(f"{k} is not invertible modulo {n}")
    if n == 1:
        return 1
    m = 1
    x = k % n
    while x != 1:
        x = x * k % n
        m += 1
    return m


def crt_lift(k: int, d: int, n: int) -> int:
    """Smallest positive k' coprime to n with k' == k mod d.

    d must divide n and k must be coprime to d; a qualifying k' always exists
    because the primes of n either divide d (and then miss k) or can be dodged
    by stepping through the congruence class.
    """
    if d < 1 or n < 1 or n % d != 0:
        raise ValueError(f"{d} must be a positive divisor of {n}")
    if gcd(k, d) != 1:
        raise ValueError(f"{k} is not coprime to {d}")
    c = k % d
    while c < 1 or gcd(c, n) != 1:
        c += d
    return c


def lcm_all(values) -> int:
    """Least common multiple of a sequence of positive integers; 1 if empty."""
    result = 1
    for v in values:
        if v < 1:
            raise ValueError(f"expected positive integers, got {v}")
        result = lcm(result, v)
    return result
