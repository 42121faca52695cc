"""Composition of the pairing scheme with the Z_p^* scheme.

One prime p serves both layers: the pairing groups have order p and the
Z_p^* generators live in the same field.  A member key couples a pairing
scalar with a Z_p^* member key, the signature is the five-tuple
(sigma, r, s, t, u_bar), and acceptance is the conjunction of the two
component checks; rejection names which side failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import scheme_pairing, scheme_zn
from .errors import ParameterError
from .pairing import PairingParams, generate_params as _gen_pairing, is_gt_element
from .scheme_pairing import PairingMember
from .scheme_zn import (
    Challenge,
    Round1Share,
    VerifyResult,
    ZnMemberKey,
    ZnParams,
    ZnSignature,
)

__all__ = [
    "CombinedParams",
    "CombinedMemberKey",
    "CombinedSignature",
    "CombinedVerifyResult",
    "named_params",
    "generate_params",
    "member_keygen",
    "sign_round1",
    "aggregate_and_finalize",
    "verify",
    "simulate_transcript",
    "verify_mirrored",
]


@dataclass(frozen=True)
class CombinedParams:
    """Pairing layer and Z_p^* layer sharing one prime p."""

    pairing: PairingParams
    zn: ZnParams

    def __post_init__(self):
        if self.pairing.p != self.zn.p:
            raise ParameterError(
                f"layers disagree on p: {self.pairing.p} vs {self.zn.p}"
            )


@dataclass(frozen=True)
class CombinedMemberKey:
    pairing: PairingMember
    zn: ZnMemberKey


@dataclass(frozen=True)
class CombinedSignature:
    sigma: int
    r: int
    s: int
    t: int
    u_bar: int

    def zn_part(self) -> ZnSignature:
        return ZnSignature(r=self.r, s=self.s, t=self.t, u_bar=self.u_bar)


@dataclass(frozen=True)
class CombinedVerifyResult:
    """Overall verdict plus the two component verdicts."""

    accepted: bool
    pairing_ok: bool
    zn: VerifyResult

    @property
    def failures(self) -> tuple[str, ...]:
        out = () if self.pairing_ok else ("pairing check",)
        return out + (() if self.zn.accepted else ("zn check",))

    @property
    def reason(self) -> str | None:
        return "; ".join(self.failures) if self.failures else None


# Pairing layers pinned to the Z_p^* named sets: q is the smallest prime
# congruent to 1 mod p, h the smallest cofactor power of 2 of order p.
_NAMED_PAIRING = {
    "paper-ex1": (211, 2, 2111, 1024),
    "paper-ex2": (102103, 2, 408413, 16),
}


def named_params(name: str) -> CombinedParams:
    """One of the built-in parameter sets ("paper-ex1", "paper-ex2")."""
    try:
        pairing = PairingParams(*_NAMED_PAIRING[name])
    except KeyError:
        raise ParameterError(f"unknown parameter set {name!r}") from None
    return CombinedParams(pairing=pairing, zn=scheme_zn.named_params(name))


def generate_params(zn_params: ZnParams, rng: random.Random) -> CombinedParams:
    """Attach a freshly generated pairing layer to existing Z_p^* parameters."""
    return CombinedParams(pairing=_gen_pairing(zn_params.p, rng), zn=zn_params)


def member_keygen(
    params: CombinedParams, side: str, rng: random.Random
) -> CombinedMemberKey:
    return CombinedMemberKey(
        pairing=scheme_pairing.keygen(params.pairing, rng),
        zn=scheme_zn.member_keygen(params.zn, side, rng),
    )


def sign_round1(
    params: CombinedParams,
    member: CombinedMemberKey,
    verifier_aggregate: int,
    verifier_pubs: list[int],
    k: int,
    message: bytes,
) -> tuple[int, Round1Share]:
    """One signer's pairing share plus Z_p^* round-1 triple."""
    sigma_i = scheme_pairing.sign_share(
        message, member.pairing, verifier_aggregate, params.pairing
    )
    return sigma_i, scheme_zn.sign_round1(params.zn, verifier_pubs, k)


def aggregate_and_finalize(
    params: CombinedParams,
    message: bytes,
    sigma_shares: list[int],
    round1_shares: list[Round1Share],
    signers: list[CombinedMemberKey],
    nonces: list[int],
    verifier_rsa_pubs: list[int],
) -> tuple[CombinedSignature, Challenge]:
    """Coordinator steps: combine sigma, build the challenge, collect the
    round-2 answers from the signer keys and nonces, and finalize."""
    if len(signers) != len(nonces):
        raise ParameterError("one nonce per signer is required")
    sigma = scheme_pairing.combine_shares(sigma_shares, params.pairing)
    challenge = scheme_zn.aggregate_challenge(
        params.zn, message, round1_shares, verifier_rsa_pubs
    )
    v_list = [
        scheme_zn.sign_round2(challenge, member.zn, k)
        for member, k in zip(signers, nonces)
    ]
    zn_sig = scheme_zn.finalize(
        params.zn, v_list, [member.zn.d for member in signers], challenge
    )
    sig = CombinedSignature(
        sigma=sigma, r=zn_sig.r, s=zn_sig.s, t=zn_sig.t, u_bar=zn_sig.u_bar
    )
    return sig, challenge


def verify(
    params: CombinedParams,
    message: bytes,
    signature: CombinedSignature,
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[int],
    signer_aggregate: int,
    verifier_members: list[CombinedMemberKey],
) -> CombinedVerifyResult:
    """Both component checks; rejection reports which side failed."""
    if not is_gt_element(signature.sigma, params.pairing):
        raise ParameterError(
            f"sigma {signature.sigma} is not in the order-{params.pairing.p} subgroup"
        )
    if not verifier_members:
        raise ParameterError("verifier member list is empty")
    zeta_shares = [
        scheme_pairing.verify_share(message, vm.pairing, signer_aggregate, params.pairing)
        for vm in verifier_members
    ]
    pairing_ok = scheme_pairing.verify(signature.sigma, zeta_shares, params.pairing)
    zn_sig = signature.zn_part()
    decode = [
        scheme_zn.decode_share(params.zn, zn_sig, vm.zn) for vm in verifier_members
    ]
    zn_result = scheme_zn.verify(
        params.zn,
        message,
        zn_sig,
        signer_rsa_pubs=signer_rsa_pubs,
        signer_dl_pubs=signer_dl_pubs,
        verifier_rsa_privs=[vm.zn.d for vm in verifier_members],
        decode_shares=decode,
    )
    return CombinedVerifyResult(
        accepted=pairing_ok and zn_result.accepted,
        pairing_ok=pairing_ok,
        zn=zn_result,
    )


def simulate_transcript(
    params: CombinedParams,
    message: bytes,
    verifier_members: list[CombinedMemberKey],
    signer_rsa_pubs: list[int],
    signer_dl_pubs: list[int],
    signer_aggregate: int,
    k_prime: int,
    mode: str = "corrected",
) -> CombinedSignature:
    """Verifier-side simulated five-tuple (zeta, r', s', t', u').

    The pairing component zeta is built from the verifiers' own shares and
    equals an honest sigma by construction; the remaining components come
    from the Z_p^* transcript simulation.
    """
    zeta_shares = [
        scheme_pairing.verify_share(message, vm.pairing, signer_aggregate, params.pairing)
        for vm in verifier_members
    ]
    zeta = scheme_pairing.combine_shares(zeta_shares, params.pairing)
    sim = scheme_zn.simulate_transcript(
        params.zn,
        message,
        [vm.zn for vm in verifier_members],
        signer_rsa_pubs,
        signer_dl_pubs,
        k_prime,
        mode,
    )
    return CombinedSignature(sigma=zeta, r=sim.r, s=sim.s, t=sim.t, u_bar=sim.u_bar)


def verify_mirrored(
    params: CombinedParams,
    message: bytes,
    simulated: CombinedSignature,
    signer_members: list[CombinedMemberKey],
    verifier_members: list[CombinedMemberKey],
    verifier_aggregate: int,
) -> CombinedVerifyResult:
    """Role-exchanged verification of a simulated five-tuple.

    The pairing side compares the simulated zeta against the product of
    signer shares; the Z_p^* side runs mirrored verification.
    """
    sigma_shares = [
        scheme_pairing.sign_share(message, sm.pairing, verifier_aggregate, params.pairing)
        for sm in signer_members
    ]
    pairing_ok = scheme_pairing.verify(simulated.sigma, sigma_shares, params.pairing)
    zn_result = scheme_zn.verify_mirrored(
        params.zn,
        message,
        simulated.zn_part(),
        signer_keys=[sm.zn for sm in signer_members],
        verifier_keys=[vm.zn for vm in verifier_members],
    )
    return CombinedVerifyResult(
        accepted=pairing_ok and zn_result.accepted,
        pairing_ok=pairing_ok,
        zn=zn_result,
    )
