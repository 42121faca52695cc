"""Coordinator state machine for one signing/verification session.

A session models both trusted aggregation services at once: the signer
side collects round-1 shares, publishes the challenge, collects round-2
answers and finalizes; the verifier side receives the signature, collects
verdicts, and applies the denial threshold.  All cryptography is
delegated to a scheme backend; the session itself only sequences,
deduplicates, and tallies.

Phases move strictly forward:

    collecting_round1 -> challenge_published -> collecting_round2
      -> signed -> delivered -> verifying -> accepted | rejected_returned

Schemes without a second round (the pairing scheme) jump straight from
round-1 completion to signed.  Every submission is validated before any
state is touched, so a rejected message never mutates the session.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from . import scheme_combined, scheme_ec, scheme_pairing, scheme_zn
from .pairing import is_gt_element
from .errors import (
    DuplicateShareError,
    MembershipError,
    ParameterError,
    SequencingError,
)

__all__ = [
    "Phase",
    "ProtocolMessage",
    "Session",
    "create_session",
    "run_honest_session",
    "denial_threshold",
    "ROUND1",
    "ROUND2",
    "VERDICT",
]

ROUND1 = "round1"
ROUND2 = "round2"
VERDICT = "verdict"
VERDICT_VALUES = ("accept", "deny")


class Phase(str, Enum):
    COLLECTING_ROUND1 = "collecting_round1"
    CHALLENGE_PUBLISHED = "challenge_published"
    COLLECTING_ROUND2 = "collecting_round2"
    SIGNED = "signed"
    DELIVERED = "delivered"
    VERIFYING = "verifying"
    ACCEPTED = "accepted"
    REJECTED_RETURNED = "rejected_returned"


# Enum order doubles as the forward-only transition order.
PHASE_ORDER = {phase: i for i, phase in enumerate(Phase)}


@dataclass(frozen=True)
class ProtocolMessage:
    """Envelope for one submission: {session, sender, round, payload}."""

    session: str
    sender: str
    round: str
    payload: object


def denial_threshold(m: int) -> int:
    """Denials needed to bounce the signature back: ceil(m/2)."""
    if m < 1:
        raise ParameterError(f"verifier count must be >= 1, got {m}")
    return -(-m // 2)


class _PairingBackend:
    scheme = "s1"
    expects_round2 = False

    def __init__(self, params, signer_keys, verifier_keys):
        self.params = params
        self.signer_keys = signer_keys
        self.verifier_keys = verifier_keys
        self.u = scheme_pairing.aggregate_public(
            [k.public_point for k in signer_keys.values()], params
        )
        self.v = scheme_pairing.aggregate_public(
            [k.public_point for k in verifier_keys.values()], params
        )

    def validate_round1(self, payload):
        if not isinstance(payload, int) or not is_gt_element(payload, self.params):
            raise ParameterError("round-1 payload must be a G_tau element")

    def validate_round2(self, payload):
        raise ParameterError("this scheme has no second round")

    def honest_round1(self, member_id, rng, message):
        share = scheme_pairing.sign_share(
            message, self.signer_keys[member_id], self.v, self.params
        )
        return share, None

    def make_challenge(self, round1, message):
        return None

    def make_signature_no_round2(self, round1, message):
        return scheme_pairing.combine_shares(list(round1.values()), self.params)

    def verify_result(self, message, signature):
        zeta = [
            scheme_pairing.verify_share(message, vk, self.u, self.params)
            for vk in self.verifier_keys.values()
        ]
        ok = scheme_pairing.verify(signature, zeta, self.params)
        return PlainVerdict(accepted=ok)

    def verdict(self, message, signature):
        return "accept" if self.verify_result(message, signature).accepted else "deny"


@dataclass(frozen=True)
class PlainVerdict:
    accepted: bool


class _ZnBackend:
    scheme = "s2"
    expects_round2 = True

    def __init__(self, params, signer_keys, verifier_keys):
        self.params = params
        self.signer_keys = signer_keys
        self.verifier_keys = verifier_keys
        self.verifier_dl_pubs = [k.y for k in verifier_keys.values()]
        self.verifier_rsa_pubs = [k.e for k in verifier_keys.values()]

    def validate_round1(self, payload):
        if not isinstance(payload, scheme_zn.Round1Share):
            raise ParameterError("round-1 payload must be a Round1Share")

    def validate_round2(self, payload):
        if isinstance(payload, bool) or not isinstance(payload, int) or payload < 0:
            raise ParameterError("round-2 payload must be a nonnegative integer")

    def honest_round1(self, member_id, rng, message):
        k = rng.randrange(1, self.params.p)
        return scheme_zn.sign_round1(self.params, self.verifier_dl_pubs, k), k

    def honest_round2(self, member_id, nonce, challenge):
        return scheme_zn.sign_round2(challenge, self.signer_keys[member_id], nonce)

    def make_challenge(self, round1, message):
        return scheme_zn.aggregate_challenge(
            self.params, message, list(round1.values()), self.verifier_rsa_pubs
        )

    def make_signature(self, round1, round2, challenge, message):
        v_list = [round2[member_id] for member_id in self.signer_keys if member_id in round2]
        d_list = [self.signer_keys[member_id].d for member_id in self.signer_keys]
        return scheme_zn.finalize(self.params, v_list, d_list, challenge)

    def verify_result(self, message, signature):
        decode = [
            scheme_zn.decode_share(self.params, signature, vk)
            for vk in self.verifier_keys.values()
        ]
        return scheme_zn.verify(
            self.params,
            message,
            signature,
            signer_rsa_pubs=[k.e for k in self.signer_keys.values()],
            signer_dl_pubs=[k.y for k in self.signer_keys.values()],
            verifier_rsa_privs=[k.d for k in self.verifier_keys.values()],
            decode_shares=decode,
        )

    def verdict(self, message, signature):
        return "accept" if self.verify_result(message, signature).accepted else "deny"


class _EcBackend(_ZnBackend):
    scheme = "s3"

    def validate_round1(self, payload):
        if not isinstance(payload, scheme_ec.EcRound1Share):
            raise ParameterError("round-1 payload must be an EcRound1Share")

    def honest_round1(self, member_id, rng, message):
        k = rng.randrange(1, self.params.curve.p)
        return scheme_ec.sign_round1(self.params, self.verifier_dl_pubs, k), k

    def honest_round2(self, member_id, nonce, challenge):
        return scheme_ec.sign_round2(challenge, self.signer_keys[member_id], nonce)

    def make_challenge(self, round1, message):
        return scheme_ec.aggregate_challenge(
            self.params, message, list(round1.values()), self.verifier_rsa_pubs
        )

    def make_signature(self, round1, round2, challenge, message):
        v_list = [round2[member_id] for member_id in self.signer_keys if member_id in round2]
        d_list = [self.signer_keys[member_id].d for member_id in self.signer_keys]
        return scheme_ec.finalize(self.params, v_list, d_list, challenge)

    def verify_result(self, message, signature):
        decode = [
            scheme_ec.decode_share(self.params, signature, vk)
            for vk in self.verifier_keys.values()
        ]
        return scheme_ec.verify(
            self.params,
            message,
            signature,
            signer_rsa_pubs=[k.e for k in self.signer_keys.values()],
            signer_dl_pubs=[k.y for k in self.signer_keys.values()],
            verifier_rsa_privs=[k.d for k in self.verifier_keys.values()],
            decode_shares=decode,
        )


class _CombinedBackend:
    scheme = "combined"
    expects_round2 = True

    def __init__(self, params, signer_keys, verifier_keys):
        self.params = params
        self.signer_keys = signer_keys
        self.verifier_keys = verifier_keys
        self.u = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in signer_keys.values()], params.pairing
        )
        self.v = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in verifier_keys.values()], params.pairing
        )
        self.verifier_dl_pubs = [k.zn.y for k in verifier_keys.values()]
        self.verifier_rsa_pubs = [k.zn.e for k in verifier_keys.values()]

    def validate_round1(self, payload):
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and isinstance(payload[0], int)
            and isinstance(payload[1], scheme_zn.Round1Share)
        )
        if not ok:
            raise ParameterError("round-1 payload must be (sigma share, Round1Share)")

    def validate_round2(self, payload):
        if isinstance(payload, bool) or not isinstance(payload, int) or payload < 0:
            raise ParameterError("round-2 payload must be a nonnegative integer")

    def honest_round1(self, member_id, rng, message):
        k = rng.randrange(1, self.params.zn.p)
        payload = scheme_combined.sign_round1(
            self.params,
            self.signer_keys[member_id],
            self.v,
            self.verifier_dl_pubs,
            k,
            message,
        )
        return payload, k

    def honest_round2(self, member_id, nonce, challenge):
        return scheme_zn.sign_round2(challenge, self.signer_keys[member_id].zn, nonce)

    def make_challenge(self, round1, message):
        return scheme_zn.aggregate_challenge(
            self.params.zn,
            message,
            [share for _, share in round1.values()],
            self.verifier_rsa_pubs,
        )

    def make_signature(self, round1, round2, challenge, message):
        sigma = scheme_pairing.combine_shares(
            [sig for sig, _ in round1.values()], self.params.pairing
        )
        v_list = [round2[member_id] for member_id in self.signer_keys if member_id in round2]
        d_list = [self.signer_keys[member_id].zn.d for member_id in self.signer_keys]
        zn_sig = scheme_zn.finalize(self.params.zn, v_list, d_list, challenge)
        return scheme_combined.CombinedSignature(
            sigma=sigma, r=zn_sig.r, s=zn_sig.s, t=zn_sig.t, u_bar=zn_sig.u_bar
        )

    def verify_result(self, message, signature):
        return scheme_combined.verify(
            self.params,
            message,
            signature,
            signer_rsa_pubs=[k.zn.e for k in self.signer_keys.values()],
            signer_dl_pubs=[k.zn.y for k in self.signer_keys.values()],
            signer_aggregate=self.u,
            verifier_members=list(self.verifier_keys.values()),
        )

    def verdict(self, message, signature):
        return "accept" if self.verify_result(message, signature).accepted else "deny"


_BACKENDS = {
    "s1": _PairingBackend,
    "s2": _ZnBackend,
    "s3": _EcBackend,
    "combined": _CombinedBackend,
}


class Session:
    """One signing/verification run, driven by submitted messages."""

    def __init__(self, session_id, scheme, backend, roster_a, roster_b, message):
        self.session_id = session_id
        self.scheme = scheme
        self.backend = backend
        self.roster_a = tuple(roster_a)
        self.roster_b = tuple(roster_b)
        self.message = message
        self.phase = Phase.COLLECTING_ROUND1
        self.round1: dict[str, object] = {}
        self.round2: dict[str, object] = {}
        self.verdicts: dict[str, str] = {}
        self.challenge = None
        self.signature = None
        self.returned_signature = None
        self.events: list[dict] = []
        self._log("created", phase=self.phase.value)

    def _log(self, event, **fields):
        self.events.append({"event": event, **fields})

    def _advance(self, phase: Phase):
        if PHASE_ORDER[phase] < PHASE_ORDER[self.phase]:
            raise AssertionError(f"phase regression {self.phase} -> {phase}")
        self.phase = phase
        self._log("phase", phase=phase.value)

    def submit(self, message: ProtocolMessage) -> "Session":
        """Record one message; advances the phase when a round completes.

        Everything is validated before any mutation, so a raised error
        leaves the session exactly as it was.
        """
        if message.session != self.session_id:
            raise ParameterError(
                f"message for session {message.session!r} submitted to {self.session_id!r}"
            )
        if message.round == ROUND1:
            self._check_sender(message.sender, self.roster_a)
            if self.phase is not Phase.COLLECTING_ROUND1:
                raise SequencingError(f"round-1 share in phase {self.phase.value}")
            if message.sender in self.round1:
                raise DuplicateShareError(f"{message.sender} already sent a round-1 share")
            self.backend.validate_round1(message.payload)
            self.round1[message.sender] = message.payload
            self._log("share", sender=message.sender, round=ROUND1, payload=message.payload)
            if len(self.round1) == len(self.roster_a):
                self._finish_round1()
        elif message.round == ROUND2:
            self._check_sender(message.sender, self.roster_a)
            if self.phase not in (Phase.CHALLENGE_PUBLISHED, Phase.COLLECTING_ROUND2):
                raise SequencingError(f"round-2 share in phase {self.phase.value}")
            if message.sender in self.round2:
                raise DuplicateShareError(f"{message.sender} already sent a round-2 share")
            self.backend.validate_round2(message.payload)
            if self.phase is Phase.CHALLENGE_PUBLISHED:
                self._advance(Phase.COLLECTING_ROUND2)
            self.round2[message.sender] = message.payload
            self._log("share", sender=message.sender, round=ROUND2, payload=message.payload)
            if len(self.round2) == len(self.roster_a):
                self.signature = self.backend.make_signature(
                    self.round1, self.round2, self.challenge, self.message
                )
                self._advance(Phase.SIGNED)
        elif message.round == VERDICT:
            self._check_sender(message.sender, self.roster_b)
            if self.phase not in (Phase.DELIVERED, Phase.VERIFYING):
                raise SequencingError(f"verdict in phase {self.phase.value}")
            if message.sender in self.verdicts:
                raise DuplicateShareError(f"{message.sender} already voted")
            if message.payload not in VERDICT_VALUES:
                raise ParameterError(f"verdict must be one of {VERDICT_VALUES}")
            if self.phase is Phase.DELIVERED:
                self._advance(Phase.VERIFYING)
            self.verdicts[message.sender] = message.payload
            self._log("verdict", sender=message.sender, payload=message.payload)
            if len(self.verdicts) == len(self.roster_b):
                self._tally()
        else:
            raise ParameterError(f"unknown round tag {message.round!r}")
        return self

    def _check_sender(self, sender, roster):
        if sender not in roster:
            raise MembershipError(f"{sender!r} is not in the expected roster")

    def _finish_round1(self):
        challenge = self.backend.make_challenge(self.round1, self.message)
        if challenge is None:
            self.signature = self.backend.make_signature_no_round2(
                self.round1, self.message
            )
            self._log("signed")
            self._advance(Phase.SIGNED)
        else:
            self.challenge = challenge
            self._log("challenge", payload=challenge)
            self._advance(Phase.CHALLENGE_PUBLISHED)

    def deliver(self) -> "Session":
        """Hand the message and signature over to the verifier side."""
        if self.phase is not Phase.SIGNED:
            raise SequencingError(f"cannot deliver in phase {self.phase.value}")
        self._log("delivered")
        self._advance(Phase.DELIVERED)
        return self

    def _tally(self):
        denials = sum(1 for v in self.verdicts.values() if v == "deny")
        if denials >= denial_threshold(len(self.roster_b)):
            self.returned_signature = self.signature
            self._log("tally", denials=denials, outcome=Phase.REJECTED_RETURNED.value)
            self._advance(Phase.REJECTED_RETURNED)
        else:
            self._log("tally", denials=denials, outcome=Phase.ACCEPTED.value)
            self._advance(Phase.ACCEPTED)

    def tally(self) -> Phase:
        """Final outcome; raises while verdicts are still outstanding."""
        if self.phase in (Phase.ACCEPTED, Phase.REJECTED_RETURNED):
            return self.phase
        raise SequencingError(
            f"tally requested in phase {self.phase.value} "
            f"({len(self.verdicts)}/{len(self.roster_b)} verdicts in)"
        )


def create_session(
    scheme: str,
    params,
    signer_keys: dict[str, object],
    verifier_keys: dict[str, object],
    message: bytes,
    session_id: str = "session-0",
) -> Session:
    """Set up a session; rosters are the key dicts' id sets, in order."""
    if scheme not in _BACKENDS:
        raise ParameterError(f"unknown scheme {scheme!r}")
    if not signer_keys or not verifier_keys:
        raise ParameterError("both rosters must be nonempty")
    backend = _BACKENDS[scheme](params, dict(signer_keys), dict(verifier_keys))
    return Session(
        session_id, scheme, backend, signer_keys.keys(), verifier_keys.keys(), message
    )


def run_honest_session(
    scheme: str,
    params,
    signer_keys: dict[str, object],
    verifier_keys: dict[str, object],
    message: bytes,
    rng: random.Random,
    session_id: str = "session-0",
) -> Session:
    """Drive a full session with honest participants; ends accepted."""
    session = create_session(scheme, params, signer_keys, verifier_keys, message, session_id)
    nonces = {}
    for member_id in signer_keys:
        payload, nonce = session.backend.honest_round1(member_id, rng, message)
        nonces[member_id] = nonce
        session.submit(ProtocolMessage(session_id, member_id, ROUND1, payload))
    if session.backend.expects_round2:
        for member_id in signer_keys:
            payload = session.backend.honest_round2(
                member_id, nonces[member_id], session.challenge
            )
            session.submit(ProtocolMessage(session_id, member_id, ROUND2, payload))
    session.deliver()
    verdict = session.backend.verdict(message, session.signature)
    for member_id in verifier_keys:
        session.submit(ProtocolMessage(session_id, member_id, VERDICT, verdict))
    return session
