"""Integer number theory for the toy protocol groups.

Everything here is deterministic and desk-scale: primality is trial
division, multiplicative orders are found by walking the divisors of the
group order, and moduli stay far below anything that would call for
cleverer algorithms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import NotInvertibleError, ParameterError, SearchFailureError

# Retry budget for the randomized element-of-given-order search.
FIND_ORDER_RETRIES = 1000


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus, with exp == 0 giving 1 (empty product)."""
    if modulus < 2:
        raise ParameterError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ParameterError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def mod_inv(a: int, modulus: int) -> int:
    """The b in [1, modulus) with a*b == 1 (mod modulus)."""
    if modulus < 2:
        raise ParameterError(f"modulus must be >= 2, got {modulus}")
    g = math.gcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return pow(a, -1, modulus)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: multiplicity}."""
    if n < 1:
        raise ParameterError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    m = n
    i = 2
    while i * i <= m:
        while m % i == 0:
            out[i] = out.get(i, 0) + 1
            m //= i
        i += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    ds = [1]
    for prime, mult in factorize(n).items():
        ds = [d * prime**k for d in ds for k in range(mult + 1)]
    return sorted(ds)


def element_order(a: int, modulus: int) -> int:
    """Multiplicative order of a modulo a prime.

    Walks the divisors of modulus-1 in increasing order, so the first
    exponent that yields 1 is the order.
    """
    if not is_prime(modulus):
        raise ParameterError(f"modulus {modulus} is not prime")
    a %= modulus
    if a == 0:
        raise ParameterError("0 has no multiplicative order")
    for d in divisors(modulus - 1):
        if pow(a, d, modulus) == 1:
            return d
    raise AssertionError("unreachable: a**(modulus-1) == 1 by Fermat")


def find_element_of_order(target_order: int, modulus: int, rng: random.Random) -> int:
    """A residue of exact multiplicative order target_order modulo a prime.

    Raises a random residue to the cofactor power, which forces the order
    to divide target_order, and retries until it is exact.
    """
    if not is_prime(modulus):
        raise ParameterError(f"modulus {modulus} is not prime")
    if target_order < 1 or (modulus - 1) % target_order != 0:
        raise ParameterError(f"{target_order} does not divide {modulus - 1}")
    cofactor = (modulus - 1) // target_order
    for _ in range(FIND_ORDER_RETRIES):
        g = pow(rng.randrange(1, modulus), cofactor, modulus)
        if element_order(g, modulus) == target_order:
            return g
    raise SearchFailureError(
        f"no element of order {target_order} mod {modulus} "
        f"after {FIND_ORDER_RETRIES} tries"
    )


@dataclass(frozen=True)
class Semiprime:
    """A modulus n = p*q with distinct prime factors, plus its totient.

    Square-freeness is what makes x**(e*d) == x hold for every x mod n,
    not only for units; the signing pipeline leans on that.
    """

    p_factor: int
    q_factor: int
    n: int
    phi: int


def semiprime(p_factor: int, q_factor: int) -> Semiprime:
    """Build a Semiprime from two distinct primes."""
    if not is_prime(p_factor) or not is_prime(q_factor):
        raise ParameterError(f"factors must be prime, got {p_factor}, {q_factor}")
    if p_factor == q_factor:
        raise ParameterError(f"factors must be distinct, got {p_factor} twice")
    return Semiprime(
        p_factor, q_factor, p_factor * q_factor, (p_factor - 1) * (q_factor - 1)
    )
