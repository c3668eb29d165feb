"""Small number-theoretic helpers: prime sieve, prime-power tests."""

from __future__ import annotations


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a classic sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, e) with p prime and p**e == n, or None if n is not a prime power."""
    if n < 2:
        return None
    p = n
    for f in range(2, int(n**0.5) + 1):
        if n % f == 0:
            p = f
            break
    e = 0
    m = n
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        return None
    return (p, e)


def is_odd_prime_power(n: int) -> bool:
    return n % 2 == 1 and prime_power(n) is not None


def odd_prime_powers_up_to(n: int) -> list[int]:
    return [q for q in range(3, n + 1, 2) if prime_power(q) is not None]
