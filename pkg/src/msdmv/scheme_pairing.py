"""Pairing-based multi-signer designated multi-verifier signatures.

Each signer holds a scalar secret a_i with public point a_i*g; each
designated verifier holds b_j with public b_j*g.  The signer side
publishes only the aggregate u = sum of signer publics, the verifier side
publishes v = sum of verifier publics.  A signature share is

    sigma_i = e(H(M), a_i * v)

and the aggregate signature is the product of the shares in G_tau.  The
verifiers compute mirror shares zeta_j = e(H(M), b_j * u); the signature
is accepted exactly when sigma equals the product of the zeta_j.  Both
sides collapse to e(H(M), g) ** (sum a_i)(sum b_j), which is what makes
the scheme correct and also what makes a verifier transcript identical to
a signer transcript.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParameterError
from .pairing import PairingParams, hash_to_group, is_gt_element, pair

__all__ = [
    "PairingMember",
    "keygen",
    "aggregate_public",
    "sign_share",
    "combine_shares",
    "verify_share",
    "verify",
]


@dataclass(frozen=True)
class PairingMember:
    """A participant's scalar secret and its public point secret*g in G."""

    secret: int
    public_point: int


def keygen(
    params: PairingParams,
    rng: random.Random | None = None,
    secret: int | None = None,
) -> PairingMember:
    """Generate a member key; pass an explicit secret to pin a known key.

    Secrets live in [1, p): a zero secret would contribute the constant 1
    to every aggregate and nothing to security.
    """
    if secret is None:
        if rng is None:
            raise ParameterError("either rng or an explicit secret is required")
        secret = rng.randrange(1, params.p)
    if not 1 <= secret < params.p:
        raise ParameterError(f"secret {secret} not in [1, {params.p})")
    return PairingMember(secret, secret * params.g % params.p)


def aggregate_public(publics: list[int], params: PairingParams) -> int:
    """Sum of member publics in G (the published u or v)."""
    if not publics:
        raise ParameterError("cannot aggregate an empty list of publics")
    return sum(publics) % params.p


def sign_share(
    message: bytes, member: PairingMember, verifier_aggregate: int, params: PairingParams
) -> int:
    """A signer's share sigma_i = e(H(M), a_i * v)."""
    return pair(
        hash_to_group(message, params),
        member.secret * verifier_aggregate % params.p,
        params,
    )


def combine_shares(shares: list[int], params: PairingParams) -> int:
    """Product of shares in G_tau (the aggregate sigma or zeta)."""
    if not shares:
        raise ParameterError("cannot combine an empty list of shares")
    out = 1
    for share in shares:
        out = out * share % params.q
    return out


def verify_share(
    message: bytes, member: PairingMember, signer_aggregate: int, params: PairingParams
) -> int:
    """A verifier's share zeta_j = e(H(M), b_j * u)."""
    return pair(
        hash_to_group(message, params),
        member.secret * signer_aggregate % params.p,
        params,
    )


def verify(sigma: int, zeta_shares: list[int], params: PairingParams) -> bool:
    """Accept exactly when sigma equals the product of the verifier shares."""
    if not is_gt_element(sigma, params):
        raise ParameterError(f"sigma {sigma} is not in the order-{params.p} subgroup")
    return sigma == combine_shares(zeta_shares, params)
