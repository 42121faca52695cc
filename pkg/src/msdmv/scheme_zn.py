"""Factoring + discrete-log signatures over Z_p^*, in two signing rounds.

System parameters put two generators in Z_p^*: g_A of semiprime order n_A
and g_B of order n_B, both dividing p-1.  Each member couples an
RSA-style exponent pair (e, d) modulo its own system's totient with a
discrete-log pair (x, y = g**x).  Signing runs in two rounds:

  round 1   each signer picks a nonce k and publishes
                r_i = g_A**k * (prod y_B)**-k,  s_i = g_B**k,  w_i = g_A**k
  challenge the coordinator aggregates r = prod r_i, s = (prod s_i)**r,
            w = (prod w_i)**r, hashes z = H(M, w) into [0, n_B), and
            locks it as t = z**(prod e_B) mod n_B
  round 2   each signer answers v_i = z*x_i + k_i*r (plain integer)
  finalize  v_bar = sum v_i mod n_A, u_bar = v_bar**(prod d_A) mod n_A

The signature is (r, s, t, u_bar).  Verifiers jointly strip the RSA
layers (a = u_bar**(prod e_A) recovers v_bar, b = t**(prod d_B) recovers
z), then check that c = g_A**a * (prod y_A)**-b equals r**r * prod z_j
with decode shares z_j = s**x_Bj, and that b hashes back to H(M, c).
Both checks reduce to c == w on an honest run.

The challenge hash is reduced into [0, n_B) before any use: the final
comparison and the exponent cancellation both need b and z to be equal as
plain integers, which only holds when z starts below n_B.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass

from .errors import ParameterError
from .hashing import challenge_hash
from .numtheory import (
    Semiprime,
    element_order,
    find_element_of_order,
    is_prime,
    mod_inv,
    semiprime,
)

__all__ = [
    "ZnParams",
    "ZnMemberKey",
    "Round1Share",
    "Challenge",
    "ZnSignature",
    "VerifyResult",
    "WeakChallengeWarning",
    "named_params",
    "generate_params",
    "random_params",
    "member_keygen",
    "sign_round1",
    "aggregate_challenge",
    "sign_round2",
    "finalize",
    "decode_share",
    "verify",
    "simulate_transcript",
    "verify_mirrored",
]


class WeakChallengeWarning(UserWarning):
    """A challenge of 0 or 1 leaks through its RSA locking trivially."""


@dataclass(frozen=True)
class ZnParams:
    """Shared prime p plus per-system semiprime orders and generators."""

    p: int
    semi_a: Semiprime
    semi_b: Semiprime
    g_a: int
    g_b: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")
        for semi in (self.semi_a, self.semi_b):
            if (self.p - 1) % semi.n != 0:
                raise ParameterError(f"{semi.n} does not divide {self.p} - 1")
        if element_order(self.g_a, self.p) != self.semi_a.n:
            raise ParameterError(f"g_a={self.g_a} does not have order {self.semi_a.n}")
        if element_order(self.g_b, self.p) != self.semi_b.n:
            raise ParameterError(f"g_b={self.g_b} does not have order {self.semi_b.n}")

    def swapped(self) -> "ZnParams":
        """The same parameters with the two systems' roles exchanged.

        Transcript simulation is exactly the signing flow on swapped
        parameters, and mirrored verification is plain verification on
        them.
        """
        return ZnParams(self.p, self.semi_b, self.semi_a, self.g_b, self.g_a)


@dataclass(frozen=True)
class ZnMemberKey:
    """RSA-style pair (e, d) mod the own-system totient + DL pair (x, y)."""

    e: int
    d: int
    x: int
    y: int


@dataclass(frozen=True)
class Round1Share:
    """One signer's public round-1 triple; the nonce k stays with the signer."""

    r: int
    s: int
    w: int


@dataclass(frozen=True)
class Challenge:
    """Aggregated round-1 values plus the locked challenge (z, t)."""

    r: int
    s: int
    w: int
    z: int
    t: int


@dataclass(frozen=True)
class ZnSignature:
    r: int
    s: int
    t: int
    u_bar: int


@dataclass(frozen=True)
class VerifyResult:
    """Verdict plus the unwrapped intermediates, for auditability.

    On an honest run a equals v_bar and b equals z exactly; tests pin
    those identities, which are sharper than accept/reject.
    """

    accepted: bool
    failures: tuple[str, ...]
    a: int
    b: int
    c: object

    @property
    def reason(self) -> str | None:
        return "; ".join(self.failures) if self.failures else None


_NAMED = {
    "paper-ex1": (211, (3, 5), (2, 7), 137, 63),
    "paper-ex2": (102103, (7, 13), (11, 17), 44494, 12733),
}


def named_params(name: str) -> ZnParams:
    """One of the built-in parameter sets ("paper-ex1", "paper-ex2")."""
    try:
        p, (pa, qa), (pb, qb), g_a, g_b = _NAMED[name]
    except KeyError:
        raise ParameterError(f"unknown parameter set {name!r}") from None
    return ZnParams(p, semiprime(pa, qa), semiprime(pb, qb), g_a, g_b)


def _semiprime_divisors(n: int) -> list[int]:
    """Divisors of n that are products of two distinct primes."""
    out = []
    for d in range(6, n + 1):
        if n % d:
            continue
        parts = []
        m = d
        f = 2
        while f * f <= m:
            while m % f == 0:
                parts.append(f)
                m //= f
            f += 1
        if m > 1:
            parts.append(m)
        if len(parts) == 2 and parts[0] != parts[1]:
            out.append(d)
    return out


def generate_params(
    p: int,
    rng: random.Random,
    semi_a: Semiprime | None = None,
    semi_b: Semiprime | None = None,
) -> ZnParams:
    """Build parameters for a prime p.

    With explicit semiprimes, both must divide p-1.  Without them, two
    distinct semiprime divisors of p-1 are drawn at random.
    """
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    if (semi_a is None) != (semi_b is None):
        raise ParameterError("provide both semiprimes or neither")
    if semi_a is None:
        candidates = _semiprime_divisors(p - 1)
        if len(candidates) < 2:
            raise ParameterError(f"p-1 = {p - 1} lacks two semiprime divisors")
        n_a, n_b = rng.sample(candidates, 2)
        semi_a = _semiprime_from_product(n_a)
        semi_b = _semiprime_from_product(n_b)
    g_a = find_element_of_order(semi_a.n, p, rng)
    g_b = find_element_of_order(semi_b.n, p, rng)
    return ZnParams(p, semi_a, semi_b, g_a, g_b)


def _semiprime_from_product(n: int) -> Semiprime:
    for f in range(2, n):
        if n % f == 0:
            return semiprime(f, n // f)
    raise ParameterError(f"{n} is not a semiprime")


_RANDOM_SEMIS = [(3, 5), (2, 7), (3, 7), (2, 5), (5, 7), (2, 11), (3, 11), (2, 13)]


def random_params(rng: random.Random) -> ZnParams:
    """A fresh small parameter set: two random semiprime orders and the
    smallest prime p with both dividing p-1."""
    (pa, qa), (pb, qb) = rng.sample(_RANDOM_SEMIS, 2)
    semi_a, semi_b = semiprime(pa, qa), semiprime(pb, qb)
    step = math.lcm(semi_a.n, semi_b.n)
    k = 1
    while not is_prime(k * step + 1):
        k += 1
    return generate_params(k * step + 1, rng, semi_a, semi_b)


def member_keygen(
    params: ZnParams,
    side: str,
    rng: random.Random | None = None,
    e: int | None = None,
    x: int | None = None,
) -> ZnMemberKey:
    """Key for one member of system "A" (signers) or "B" (verifiers).

    Pass explicit (e, x) to pin a known key; e must be a unit modulo the
    side's totient.
    """
    if side not in ("A", "B"):
        raise ParameterError(f"side must be 'A' or 'B', got {side!r}")
    semi = params.semi_a if side == "A" else params.semi_b
    g = params.g_a if side == "A" else params.g_b
    if e is None or x is None:
        if rng is None:
            raise ParameterError("either rng or explicit (e, x) is required")
        if e is None:
            while True:
                e = rng.randrange(1, semi.phi)
                if math.gcd(e, semi.phi) == 1:
                    break
        if x is None:
            x = rng.randrange(1, params.p)
    d = mod_inv(e, semi.phi)
    if not 1 <= x < params.p:
        raise ParameterError(f"x={x} not in [1, {params.p})")
    return ZnMemberKey(e=e, d=d, x=x, y=pow(g, x, params.p))


def _validate_nonce(k: int, p: int) -> None:
    if not 1 <= k < p:
        raise ParameterError(f"nonce k={k} not in [1, {p})")


def sign_round1(params: ZnParams, verifier_pubs: list[int], k: int) -> Round1Share:
    """One signer's round-1 triple for nonce k."""
    if not verifier_pubs:
        raise ParameterError("verifier public list is empty")
    _validate_nonce(k, params.p)
    p = params.p
    blind = 1
    for y in verifier_pubs:
        if not 1 <= y < p:
            raise ParameterError(f"verifier public {y} not in [1, {p})")
        blind = blind * y % p
    r = pow(params.g_a, k, p) * pow(mod_inv(blind, p), k, p) % p
    return Round1Share(r=r, s=pow(params.g_b, k, p), w=pow(params.g_a, k, p))


def aggregate_challenge(
    params: ZnParams,
    message: bytes,
    shares: list[Round1Share],
    verifier_rsa_pubs: list[int],
) -> Challenge:
    """Coordinator step: aggregate round-1 shares and lock the challenge."""
    if not shares:
        raise ParameterError("no round-1 shares to aggregate")
    if not verifier_rsa_pubs:
        raise ParameterError("verifier RSA public list is empty")
    p = params.p
    r = s = w = 1
    for share in shares:
        r = r * share.r % p
        s = s * share.s % p
        w = w * share.w % p
    s = pow(s, r, p)
    w = pow(w, r, p)
    z = challenge_hash(message, str(w), params.semi_b.n)
    if z < 2:
        warnings.warn(
            f"degenerate challenge z={z}: t reveals z regardless of the exponents",
            WeakChallengeWarning,
            stacklevel=2,
        )
    t = pow(z, math.prod(verifier_rsa_pubs), params.semi_b.n)
    return Challenge(r=r, s=s, w=w, z=z, t=t)


def sign_round2(challenge: Challenge, signer: ZnMemberKey, k: int) -> int:
    """One signer's round-2 answer v_i = z*x + k*r, as a plain integer.

    The nonce must be the one used in round 1; reduction mod n_A happens
    only at finalize.
    """
    if k < 1:
        raise ParameterError(f"nonce k={k} must be >= 1")
    return challenge.z * signer.x + k * challenge.r


def finalize(
    params: ZnParams,
    v_list: list[int],
    signer_rsa_privs: list[int],
    challenge: Challenge,
) -> ZnSignature:
    """Sum the round-2 answers and seal them under the signers' RSA keys."""
    if not v_list or not signer_rsa_privs:
        raise ParameterError("round-2 shares and signer keys must be nonempty")
    v_bar = sum(v_list) % params.semi_a.n
    u_bar = pow(v_bar, math.prod(signer_rsa_privs), params.semi_a.n)
    return ZnSignature(r=challenge.r, s=challenge.s, t=challenge.t, u_bar=u_bar)


def decode_share(params: ZnParams, signature: ZnSignature, verifier: ZnMemberKey) -> int:
    """A verifier's decode share z_j = s**x_j mod p."""
    return pow(signature.s, verifier.x, params.p)


def _validate_signature(params: ZnParams, signature: ZnSignature) -> None:
    if not 1 <= signature.r < params.p:
        raise ParameterError(f"signature r={signature.r} not in [1, {params.p})")
    if not 1 <= signature.s < params.p:
        raise ParameterError(f"signature s={signature.s} not in [1, {params.p})")
    if not 0 <= signature.t < params.semi_b.n:
        raise ParameterError(f"signature t={signature.t} not in [0, {params.semi_b.n})")
    if not 0 <= signature.u_bar < params.semi_a.n:
        raise ParameterError(
            f"signature u_bar={signature.u_bar} not in [0, {params.semi_a.n})"
        )


def verify(
    params: ZnParams,
    message: bytes,
    signature: ZnSignature,
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[int],
    verifier_rsa_privs: list[int],
    decode_shares: list[int],
) -> VerifyResult:
    """Joint verification from public signer data and verifier secrets.

    Malformed (out-of-range) signatures raise; a clean run that fails a
    check returns a rejection with the failed equation named.
    """
    _validate_signature(params, signature)
    if not signer_rsa_pubs or len(signer_rsa_pubs) != len(signer_dl_pubs):
        raise ParameterError("signer public lists are empty or mismatched")
    if not verifier_rsa_privs or len(verifier_rsa_privs) != len(decode_shares):
        raise ParameterError("verifier key/share lists are empty or mismatched")
    p = params.p
    a = pow(signature.u_bar, math.prod(signer_rsa_pubs), params.semi_a.n)
    b = pow(signature.t, math.prod(verifier_rsa_privs), params.semi_b.n)
    y_prod = 1
    for y in signer_dl_pubs:
        y_prod = y_prod * y % p
    c = pow(params.g_a, a, p) * pow(mod_inv(y_prod, p), b, p) % p
    rhs = pow(signature.r, signature.r, p)
    for z_j in decode_shares:
        rhs = rhs * z_j % p
    failures = []
    if c != rhs:
        failures.append("equation-c mismatch")
    if b != challenge_hash(message, str(c), params.semi_b.n):
        failures.append("hash mismatch")
    return VerifyResult(not failures, tuple(failures), a=a, b=b, c=c)


def simulate_transcript(
    params: ZnParams,
    message: bytes,
    verifier_keys: list[ZnMemberKey],
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[int],
    k_prime: int,
    mode: str = "corrected",
) -> ZnSignature:
    """Verifier-side transcript simulation: a signature-shaped tuple built
    from the verifiers' secrets and one shared nonce k'.

    Structurally this is the signing flow run on swapped() parameters with
    a single round-1 contribution.  The round-2 aggregation has two modes:
    "paper" adds the nonce term once per verifier (v' = z'*sum(x) +
    m*k'*r'), which mirrored verification rejects for m >= 2; "corrected"
    counts it once (v' = z'*sum(x) + k'*r'), which verifies for every m.
    The default is corrected.
    """
    if mode not in ("paper", "corrected"):
        raise ParameterError(f"mode must be 'paper' or 'corrected', got {mode!r}")
    if not verifier_keys:
        raise ParameterError("verifier key list is empty")
    sw = params.swapped()
    share = sign_round1(sw, signer_dl_pubs, k_prime)
    challenge = aggregate_challenge(sw, message, [share], signer_rsa_pubs)
    if mode == "paper":
        v_list = [sign_round2(challenge, vk, k_prime) for vk in verifier_keys]
    else:
        head, tail = verifier_keys[0], verifier_keys[1:]
        v_list = [sign_round2(challenge, head, k_prime)]
        v_list += [challenge.z * vk.x for vk in tail]
    return finalize(sw, v_list, [vk.d for vk in verifier_keys], challenge)


def verify_mirrored(
    params: ZnParams,
    message: bytes,
    simulated: ZnSignature,
    signer_keys: list[ZnMemberKey],
    verifier_keys: list[ZnMemberKey],
) -> VerifyResult:
    """Verification with the systems' roles exchanged, for simulated tuples.

    The signers act as decoders; the verifiers' public keys stand where
    the signers' publics normally do.
    """
    sw = params.swapped()
    shares = [decode_share(sw, simulated, sk) for sk in signer_keys]
    return verify(
        sw,
        message,
        simulated,
        signer_rsa_pubs=[vk.e for vk in verifier_keys],
        signer_dl_pubs=[vk.y for vk in verifier_keys],
        verifier_rsa_privs=[sk.d for sk in signer_keys],
        decode_shares=shares,
    )
