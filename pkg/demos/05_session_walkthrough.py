#!/usr/bin/env python3
"""Message-by-message tour of the session coordinator.

Shows the phase machine advancing as shares arrive, the errors raised for
duplicate / out-of-phase / foreign messages, and the denial threshold
bouncing a signature back to the signer side.
"""

import random

from msdmv import scheme_zn
from msdmv.errors import DuplicateShareError, MembershipError, SequencingError
from msdmv.session import (
    ROUND1,
    ROUND2,
    VERDICT,
    Phase,
    ProtocolMessage,
    create_session,
    denial_threshold,
)

params = scheme_zn.named_params("paper-ex1")
rng = random.Random(11)
signers = {f"S{i}": scheme_zn.member_keygen(params, "A", rng) for i in (1, 2, 3)}
verifiers = {f"D{j}": scheme_zn.member_keygen(params, "B", rng) for j in (1, 2)}

session = create_session("s2", params, signers, verifiers, b"batch 9", "demo")
print(f"created: phase = {session.phase.value}")

nonces = {}
first_payload = None
for member_id in signers:
    payload, k = session.backend.honest_round1(member_id, rng, session.message)
    nonces[member_id] = k
    if first_payload is None:
        first_payload = payload
        session.submit(ProtocolMessage("demo", member_id, ROUND1, payload))
        print(f"{member_id} sent round-1 share -> phase {session.phase.value}")
        print("S1 resubmits the same share:", end=" ")
        try:
            session.submit(ProtocolMessage("demo", "S1", ROUND1, payload))
        except DuplicateShareError as exc:
            print(f"rejected ({exc})")
    else:
        session.submit(ProtocolMessage("demo", member_id, ROUND1, payload))
        print(f"{member_id} sent round-1 share -> phase {session.phase.value}")

print(f"challenge published: z = {session.challenge.z}, r = {session.challenge.r}")

print("replaying S1's round-1 share after the challenge:", end=" ")
try:
    session.submit(ProtocolMessage("demo", "S1", ROUND1, first_payload))
except SequencingError as exc:
    print(f"rejected ({exc})")

print("verdict before delivery:", end=" ")
try:
    session.submit(ProtocolMessage("demo", "D1", VERDICT, "accept"))
except SequencingError as exc:
    print(f"rejected ({exc})")

for member_id in signers:
    answer = session.backend.honest_round2(member_id, nonces[member_id], session.challenge)
    session.submit(ProtocolMessage("demo", member_id, ROUND2, answer))
    print(f"{member_id} sent round-2 answer -> phase {session.phase.value}")

session.deliver()
print(f"signature delivered to the verifier side -> phase {session.phase.value}")

print("stranger tries to vote:", end=" ")
try:
    session.submit(ProtocolMessage("demo", "mallory", VERDICT, "deny"))
except MembershipError as exc:
    print(f"rejected ({exc})")

verdict = session.backend.verdict(session.message, session.signature)
for member_id in verifiers:
    session.submit(ProtocolMessage("demo", member_id, VERDICT, verdict))
    print(f"{member_id} voted {verdict} -> phase {session.phase.value}")
print(f"outcome: {session.tally().value}")

print("\n--- denial threshold: ceil(m/2) denials bounce the signature ---")
print("m:", list(range(1, 8)))
print("threshold:", [denial_threshold(m) for m in range(1, 8)])

session2 = create_session("s2", params, signers, verifiers, b"batch 10", "demo2")
for member_id in signers:
    payload, k = session2.backend.honest_round1(member_id, rng, session2.message)
    nonces[member_id] = k
    session2.submit(ProtocolMessage("demo2", member_id, ROUND1, payload))
for member_id in signers:
    session2.submit(ProtocolMessage(
        "demo2", member_id, ROUND2,
        session2.backend.honest_round2(member_id, nonces[member_id], session2.challenge)))
session2.deliver()
session2.submit(ProtocolMessage("demo2", "D1", VERDICT, "deny"))  # faulty verifier
session2.submit(ProtocolMessage("demo2", "D2", VERDICT, "accept"))
print(f"one denial out of two verifiers -> {session2.phase.value}")
assert session2.phase is Phase.REJECTED_RETURNED
print(f"the signature object is handed back: {session2.returned_signature is not None}")
