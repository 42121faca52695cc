"""A toy symmetric bilinear pairing over tiny explicit groups.

WARNING: this pairing is computed via explicit discrete logarithms, which
is only possible because the groups are deliberately tiny.  It is
algebraically exact and cryptographically void.  The whole point is to
make small worked examples reproducible bit for bit; never use it to
protect anything.

The structure:

    G      the additive group Z_p for a prime p, with generator g
           (any nonzero residue generates it);
    G_tau  the order-p subgroup of Z_q^* for a prime q with p | q-1;
    e(a,b) = h ** (dlog(a) * dlog(b) mod p) mod q, where h = e(g, g)
           and dlog is division by g in Z_p.

Elements of G are ints in [0, p); elements of G_tau are ints in [1, q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParameterError, SearchFailureError
from .hashing import hash_to_nonzero
from .numtheory import element_order, find_element_of_order, is_prime, mod_inv

# How many candidates q = k*p + 1 to scan before giving up.
PRIME_SCAN_BUDGET = 10**6


@dataclass(frozen=True)
class PairingParams:
    """Public parameters for the pairing: (p, g, q, h) with h = e(g, g)."""

    p: int
    g: int
    q: int
    h: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"group order {self.p} is not prime")
        if not is_prime(self.q):
            raise ParameterError(f"ambient modulus {self.q} is not prime")
        if (self.q - 1) % self.p != 0:
            raise ParameterError(f"{self.p} does not divide {self.q} - 1")
        if not 1 <= self.g < self.p:
            raise ParameterError(f"generator {self.g} not in [1, {self.p})")
        if element_order(self.h, self.q) != self.p:
            raise ParameterError(f"{self.h} does not have order {self.p} mod {self.q}")


# Parameter sets matching the library's bundled worked examples.
_NAMED = {
    "paper-ex1": (11, 2, 23, 2),
    "paper-ex2": (53, 5, 107, 3),
}


def named_params(name: str) -> PairingParams:
    """One of the built-in parameter sets ("paper-ex1", "paper-ex2")."""
    try:
        return PairingParams(*_NAMED[name])
    except KeyError:
        raise ParameterError(f"unknown parameter set {name!r}") from None


def generate_params(p: int, rng: random.Random, g: int = 2) -> PairingParams:
    """Build pairing parameters for a given prime group order.

    q is the smallest prime congruent to 1 mod p above p, so generation is
    reproducible; h is a random element of order p in Z_q^*.
    """
    if not is_prime(p):
        raise ParameterError(f"group order {p} is not prime")
    q = 0
    for k in range(2, PRIME_SCAN_BUDGET):
        candidate = k * p + 1
        if is_prime(candidate):
            q = candidate
            break
    else:
        raise SearchFailureError(f"no prime q == 1 mod {p} within the scan budget")
    h = find_element_of_order(p, q, rng)
    return PairingParams(p=p, g=g % p if g % p else 2 % p, q=q, h=h)


def random_params(rng: random.Random, p_min: int = 11, p_max: int = 200) -> PairingParams:
    """Pairing parameters for a random prime order in [p_min, p_max]."""
    primes = [n for n in range(max(3, p_min), p_max + 1) if is_prime(n)]
    if not primes:
        raise ParameterError(f"no primes in [{p_min}, {p_max}]")
    return generate_params(rng.choice(primes), rng)


def dlog_additive(a: int, params: PairingParams) -> int:
    """The x with a == x*g in Z_p, i.e. modular division by g.

    This is the deliberate trapdoor that makes the toy pairing computable.
    """
    return a % params.p * mod_inv(params.g, params.p) % params.p


def pair(a: int, b: int, params: PairingParams) -> int:
    """The pairing e(a, b) = h**(dlog(a)*dlog(b) mod p) in G_tau."""
    x = dlog_additive(a, params)
    y = dlog_additive(b, params)
    return pow(params.h, x * y % params.p, params.q)


def hash_to_group(message: bytes, params: PairingParams) -> int:
    """Hash a message to a nonzero element of G."""
    return hash_to_nonzero(message, params.p)


def is_gt_element(value: int, params: PairingParams) -> bool:
    """True when value lies in the order-p subgroup of Z_q^*."""
    return 1 <= value < params.q and pow(value, params.p, params.q) == 1
