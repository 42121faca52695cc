"""Elliptic-curve variant of the two-round factoring + discrete-log scheme.

Same RSA-exponent machinery as the Z_p^* scheme, with the group work
moved onto a short-Weierstrass curve: products of residues become point
sums, and two twists disappear, namely the **r exponent on the s/w
aggregates and the *r factor in the round-2 answers (v_i = z*x_i + k_i
here).  Base points P and Q of semiprime orders n_A and n_B play the
roles of g_A and g_B.

Verification decodes a = u_bar**(prod e_A) mod n_A and b = t**(prod d_B)
mod n_B, then checks [a]P - [b](sum y_A) == r + sum z_j with decode
shares z_j = [x_Bj]s, and that b == H(M, c).  As in the Z_p^* scheme both
sides collapse to w = [sum k_i]P on an honest run, and the challenge hash
is reduced into [0, n_B) before any use.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass

from .eccurve import (
    INFINITY,
    Curve,
    Point,
    curve_order,
    find_point_of_order,
    is_on_curve,
    point_add,
    point_order,
    point_sub,
    scalar_mul,
)
from .errors import ParameterError, SearchFailureError
from .hashing import challenge_hash
from .numtheory import Semiprime, is_prime, mod_inv, semiprime
from .scheme_zn import VerifyResult, WeakChallengeWarning

__all__ = [
    "EcParams",
    "EcRound1Share",
    "EcChallenge",
    "EcSignature",
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


@dataclass(frozen=True)
class EcParams:
    """Curve plus base points P (order n_A) and Q (order n_B)."""

    curve: Curve
    P: Point
    Q: Point
    semi_a: Semiprime
    semi_b: Semiprime
    group_order: int

    def __post_init__(self):
        for n in (self.semi_a.n, self.semi_b.n):
            if self.group_order % n != 0:
                raise ParameterError(f"{n} does not divide |E| = {self.group_order}")
        if point_order(self.P, self.curve, self.group_order) != self.semi_a.n:
            raise ParameterError(f"P={self.P.encode()} does not have order {self.semi_a.n}")
        if point_order(self.Q, self.curve, self.group_order) != self.semi_b.n:
            raise ParameterError(f"Q={self.Q.encode()} does not have order {self.semi_b.n}")

    def swapped(self) -> "EcParams":
        """Role-exchanged parameters (P <-> Q), for transcript simulation."""
        return EcParams(
            self.curve, self.Q, self.P, self.semi_b, self.semi_a, self.group_order
        )


@dataclass(frozen=True)
class EcMemberKey:
    """Same shape as the Z_p^* member key, with a point as the DL public."""

    e: int
    d: int
    x: int
    y: Point


@dataclass(frozen=True)
class EcRound1Share:
    r: Point
    s: Point
    w: Point


@dataclass(frozen=True)
class EcChallenge:
    r: Point
    s: Point
    w: Point
    z: int
    t: int


@dataclass(frozen=True)
class EcSignature:
    r: Point
    s: Point
    t: int
    u_bar: int


_NAMED = {
    "paper-ex1": (419, 0, 2, (22, 151), (55, 156), (3, 5), (2, 7), 420),
    "paper-ex2": (6793, 0, 5, (3245, 4097), (5223, 4702), (7, 13), (2, 19), 6916),
}


def named_params(name: str) -> EcParams:
    """One of the built-in parameter sets ("paper-ex1", "paper-ex2")."""
    try:
        p, a, b, pt_p, pt_q, (pa, qa), (pb, qb), order = _NAMED[name]
    except KeyError:
        raise ParameterError(f"unknown parameter set {name!r}") from None
    return EcParams(
        Curve(p, a, b),
        Point(*pt_p),
        Point(*pt_q),
        semiprime(pa, qa),
        semiprime(pb, qb),
        order,
    )


def generate_params(
    curve: Curve,
    rng: random.Random,
    semi_a: Semiprime | None = None,
    semi_b: Semiprime | None = None,
) -> EcParams:
    """Parameters on a given curve.

    With explicit semiprimes, points of exactly those orders must exist
    (a divisor of |E| need not divide the group exponent, so the search
    can legitimately fail).  Without them, divisor pairs are tried in
    random order until one admits base points.
    """
    order = curve_order(curve)
    if (semi_a is None) != (semi_b is None):
        raise ParameterError("provide both semiprimes or neither")
    if semi_a is not None:
        return _build_params(curve, order, rng, semi_a, semi_b)
    candidates = _semiprime_divisors(order)
    if len(candidates) < 2:
        raise ParameterError(f"|E| = {order} lacks two semiprime divisors")
    pairs = [(a, b) for a in candidates for b in candidates if a != b]
    rng.shuffle(pairs)
    for n_a, n_b in pairs:
        try:
            return _build_params(
                curve, order, rng,
                _semiprime_from_product(n_a), _semiprime_from_product(n_b),
            )
        except SearchFailureError:
            continue
    raise ParameterError(f"|E| = {order} admits no realizable semiprime order pair")


def _build_params(curve, order, rng, semi_a, semi_b) -> EcParams:
    pt_p = find_point_of_order(semi_a.n, curve, order, rng)
    pt_q = find_point_of_order(semi_b.n, curve, order, rng)
    return EcParams(curve, pt_p, pt_q, semi_a, semi_b, order)


def _semiprime_divisors(n: int) -> list[int]:
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


def _semiprime_from_product(n: int) -> Semiprime:
    for f in range(2, n):
        if n % f == 0:
            return semiprime(f, n // f)
    raise ParameterError(f"{n} is not a semiprime")


def random_params(
    rng: random.Random, p_min: int = 50, p_max: int = 400
) -> EcParams:
    """A fresh small curve whose order carries two semiprime divisors."""
    primes = [n for n in range(p_min, p_max + 1) if is_prime(n) and n > 3]
    for _ in range(200):
        p = rng.choice(primes)
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a**3 + 27 * b**2) % p == 0:
            continue
        try:
            return generate_params(Curve(p, a, b), rng)
        except (ParameterError, SearchFailureError):
            continue
    raise ParameterError("no usable random curve found")


def member_keygen(
    params: EcParams,
    side: str,
    rng: random.Random | None = None,
    e: int | None = None,
    x: int | None = None,
) -> EcMemberKey:
    """Key for a signer (side "A", public [x]P) or verifier ("B", [x]Q)."""
    if side not in ("A", "B"):
        raise ParameterError(f"side must be 'A' or 'B', got {side!r}")
    semi = params.semi_a if side == "A" else params.semi_b
    base = params.P if side == "A" else params.Q
    if e is None or x is None:
        if rng is None:
            raise ParameterError("either rng or explicit (e, x) is required")
        if e is None:
            while True:
                e = rng.randrange(1, semi.phi)
                if math.gcd(e, semi.phi) == 1:
                    break
        if x is None:
            x = rng.randrange(1, params.curve.p)
    if not 1 <= x < params.curve.p:
        raise ParameterError(f"x={x} not in [1, {params.curve.p})")
    return EcMemberKey(
        e=e, d=mod_inv(e, semi.phi), x=x, y=scalar_mul(x, base, params.curve)
    )


def sign_round1(params: EcParams, verifier_pubs: list[Point], k: int) -> EcRound1Share:
    """One signer's round-1 triple ([k]P - [k](sum y_B), [k]Q, [k]P)."""
    if not verifier_pubs:
        raise ParameterError("verifier public list is empty")
    if not 1 <= k:
        raise ParameterError(f"nonce k={k} must be >= 1")
    curve = params.curve
    blind = INFINITY
    for y in verifier_pubs:
        blind = point_add(blind, y, curve)
    kp = scalar_mul(k, params.P, curve)
    return EcRound1Share(
        r=point_sub(kp, scalar_mul(k, blind, curve), curve),
        s=scalar_mul(k, params.Q, curve),
        w=kp,
    )


def aggregate_challenge(
    params: EcParams,
    message: bytes,
    shares: list[EcRound1Share],
    verifier_rsa_pubs: list[int],
) -> EcChallenge:
    """Aggregate round-1 shares by point sums and lock the challenge."""
    if not shares:
        raise ParameterError("no round-1 shares to aggregate")
    if not verifier_rsa_pubs:
        raise ParameterError("verifier RSA public list is empty")
    curve = params.curve
    r = s = w = INFINITY
    for share in shares:
        r = point_add(r, share.r, curve)
        s = point_add(s, share.s, curve)
        w = point_add(w, share.w, curve)
    z = challenge_hash(message, w.encode(), params.semi_b.n)
    if z < 2:
        warnings.warn(
            f"degenerate challenge z={z}: t reveals z regardless of the exponents",
            WeakChallengeWarning,
            stacklevel=2,
        )
    t = pow(z, math.prod(verifier_rsa_pubs), params.semi_b.n)
    return EcChallenge(r=r, s=s, w=w, z=z, t=t)


def sign_round2(challenge: EcChallenge, signer: EcMemberKey, k: int) -> int:
    """One signer's round-2 answer v_i = z*x + k (no r factor here)."""
    if k < 1:
        raise ParameterError(f"nonce k={k} must be >= 1")
    return challenge.z * signer.x + k


def finalize(
    params: EcParams,
    v_list: list[int],
    signer_rsa_privs: list[int],
    challenge: EcChallenge,
) -> EcSignature:
    if not v_list or not signer_rsa_privs:
        raise ParameterError("round-2 shares and signer keys must be nonempty")
    v_bar = sum(v_list) % params.semi_a.n
    u_bar = pow(v_bar, math.prod(signer_rsa_privs), params.semi_a.n)
    return EcSignature(r=challenge.r, s=challenge.s, t=challenge.t, u_bar=u_bar)


def decode_share(params: EcParams, signature: EcSignature, verifier: EcMemberKey) -> Point:
    """A verifier's decode share z_j = [x_j]s."""
    return scalar_mul(verifier.x, signature.s, params.curve)


def _validate_signature(params: EcParams, signature: EcSignature) -> None:
    if not is_on_curve(signature.r, params.curve):
        raise ParameterError(f"signature r={signature.r.encode()} is off-curve")
    if not is_on_curve(signature.s, params.curve):
        raise ParameterError(f"signature s={signature.s.encode()} is off-curve")
    if not 0 <= signature.t < params.semi_b.n:
        raise ParameterError(f"signature t={signature.t} not in [0, {params.semi_b.n})")
    if not 0 <= signature.u_bar < params.semi_a.n:
        raise ParameterError(
            f"signature u_bar={signature.u_bar} not in [0, {params.semi_a.n})"
        )


def verify(
    params: EcParams,
    message: bytes,
    signature: EcSignature,
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[Point],
    verifier_rsa_privs: list[int],
    decode_shares: list[Point],
) -> VerifyResult:
    """Joint verification; mirrors the Z_p^* layout with point arithmetic."""
    _validate_signature(params, signature)
    if not signer_rsa_pubs or len(signer_rsa_pubs) != len(signer_dl_pubs):
        raise ParameterError("signer public lists are empty or mismatched")
    if not verifier_rsa_privs or len(verifier_rsa_privs) != len(decode_shares):
        raise ParameterError("verifier key/share lists are empty or mismatched")
    curve = params.curve
    a = pow(signature.u_bar, math.prod(signer_rsa_pubs), params.semi_a.n)
    b = pow(signature.t, math.prod(verifier_rsa_privs), params.semi_b.n)
    y_sum = INFINITY
    for y in signer_dl_pubs:
        y_sum = point_add(y_sum, y, curve)
    c = point_sub(scalar_mul(a, params.P, curve), scalar_mul(b, y_sum, curve), curve)
    rhs = signature.r
    for z_j in decode_shares:
        rhs = point_add(rhs, z_j, curve)
    failures = []
    if c != rhs:
        failures.append("equation-c mismatch")
    if b != challenge_hash(message, c.encode(), params.semi_b.n):
        failures.append("hash mismatch")
    return VerifyResult(not failures, tuple(failures), a=a, b=b, c=c)


def simulate_transcript(
    params: EcParams,
    message: bytes,
    verifier_keys: list[EcMemberKey],
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[Point],
    k_prime: int,
    mode: str = "corrected",
) -> EcSignature:
    """Verifier-side transcript simulation on swapped base points.

    Modes as in the Z_p^* scheme: "paper" adds the nonce once per
    verifier (v' = z'*sum(x) + m*k'), "corrected" once in total.
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
    params: EcParams,
    message: bytes,
    simulated: EcSignature,
    signer_keys: list[EcMemberKey],
    verifier_keys: list[EcMemberKey],
) -> VerifyResult:
    """Verification with the systems' roles exchanged, for simulated tuples."""
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
