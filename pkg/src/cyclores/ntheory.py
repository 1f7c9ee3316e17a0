"""Integer utilities: primality, sieves, orders, exact roots."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

__all__ = [
    "is_prime",
    "primes_upto",
    "factorize",
    "multiplicative_order",
    "primitive_root",
    "iroot",
    "kth_root_exact",
    "valuation",
]

# Miller-Rabin with this base set is deterministic below 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Trial division by small primes, then strong-pseudoprime tests."""
    if n < 2:
        return False
    for r in _TRIAL:
        if n == r:
            return True
        if n % r == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
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


@lru_cache(maxsize=16)
def primes_upto(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by a byte sieve."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for small n."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/p)^x, p prime."""
    a %= p
    if a == 0:
        raise ValueError("a must be invertible mod p")
    order = p - 1
    for r in factorize(p - 1):
        while order % r == 0 and pow(a, order // r, p) == 1:
            order //= r
    return order


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the prime p."""
    if p == 2:
        return 1
    fac = tuple(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac):
            return g
    raise ValueError(f"no primitive root found; is {p} prime?")


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0 (integer Newton iteration)."""
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x


def kth_root_exact(n: int, k: int) -> int | None:
    """Exact integer k-th root of n, or None.  Negative n ok for odd k."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = kth_root_exact(-n, k)
        return None if r is None else -r
    r = iroot(n, k)
    return r if r**k == n else None


def valuation(n: int, p: int) -> tuple[int, int]:
    """(v, n / p**v) with p**v the exact power of p dividing n != 0."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n
