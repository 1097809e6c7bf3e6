"""Exact elementary number theory: primality, residue symbols, Mobius, prime search.

Everything here is deterministic and exact; no probabilistic shortcuts are
taken anywhere, because downstream certificates must never depend on a
randomized primality answer.  Inputs are restricted to the 64-bit range.
"""

from __future__ import annotations

import math
from collections.abc import Iterable

MAX_INPUT = 2**64 - 1

# Strong-pseudoprime witnesses; this set is known to be exact for every
# n < 3_317_044_064_679_887_385_961_981, which covers the full 64-bit range.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class BoundExceededError(RuntimeError):
    """A bounded search ran out of room before finding its target."""


def _check_range(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{name} must be an int, got {type(n).__name__}")
    if n > MAX_INPUT:
        raise ValueError(f"{name} = {n} exceeds the supported 64-bit range")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 2 <= n <= 2**64 - 1."""
    _check_range(n)
    if n < 2:
        raise ValueError(f"is_prime requires n >= 2, got {n}")
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_odd_prime(p: int, name: str = "p") -> int:
    """Validate that p is an odd prime and return it."""
    _check_range(p, name)
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{name} = {p} is not an odd prime")
    return p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p.

    Returns 0 when p divides a, +1 when a is a nonzero square mod p and -1
    otherwise, via the Euler criterion a**((p-1)/2) mod p.
    """
    check_odd_prime(p)
    _check_range(abs(a), "a")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)**(number of prime factors)."""
    _check_range(n)
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1 if d == 2 else 2
    if m > 1:
        result = -result
    return result


def next_prime_in_class(
    start: int,
    residue: int,
    modulus: int,
    avoid: Iterable[int] = (),
    bound: int = MAX_INPUT,
) -> int:
    """Smallest prime q >= start with q = residue (mod modulus), q not in avoid, q <= bound.

    Raises BoundExceededError when no such prime exists up to the bound.
    """
    _check_range(start, "start")
    _check_range(bound, "bound")
    if not 0 < residue < modulus:
        raise ValueError(f"residue must satisfy 0 < residue < modulus, got {residue} mod {modulus}")
    if math.gcd(residue, modulus) != 1:
        raise ValueError(f"residue {residue} and modulus {modulus} are not coprime")
    skip = set(avoid)
    q = start + ((residue - start) % modulus)
    while q <= bound:
        if q >= 2 and q not in skip and is_prime(q):
            return q
        q += modulus
    raise BoundExceededError(
        f"no prime = {residue} (mod {modulus}) in [{start}, {bound}] outside the avoid set"
    )
