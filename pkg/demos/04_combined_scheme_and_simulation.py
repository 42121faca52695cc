#!/usr/bin/env python3
"""The combined scheme, and why designated verification is designated.

Part 1 runs the five-component signature (sigma, r, s, t, u_bar) whose
acceptance needs both the pairing equality and the Z_p^* equation chain.

Part 2 is the point of the whole construction: the verifiers can forge a
transcript that passes role-mirrored verification, so a signature
convinces them and nobody else.  The round-2 aggregation has two modes;
the per-verifier nonce accumulation breaks mirrored verification as soon
as there are two verifiers, the single-count aggregation works for any
number.
"""

import random

from msdmv import scheme_combined, scheme_pairing

params = scheme_combined.named_params("paper-ex1")
print(f"shared prime p = {params.zn.p}; pairing layer q = {params.pairing.q}, "
      f"h = {params.pairing.h}")

rng = random.Random(7)
signers = [scheme_combined.member_keygen(params, "A", rng) for _ in range(3)]
verifiers = [scheme_combined.member_keygen(params, "B", rng) for _ in range(2)]
u = scheme_pairing.aggregate_public(
    [m.pairing.public_point for m in signers], params.pairing)
v = scheme_pairing.aggregate_public(
    [m.pairing.public_point for m in verifiers], params.pairing)
print(f"aggregates u = {u}, v = {v}")

message = b"merged escrow release"
nonces = [rng.randrange(1, params.zn.p) for _ in signers]
round1 = [
    scheme_combined.sign_round1(params, member, v, [k.zn.y for k in verifiers], k, message)
    for member, k in zip(signers, nonces)
]
signature, challenge = scheme_combined.aggregate_and_finalize(
    params, message, [s for s, _ in round1], [sh for _, sh in round1],
    signers, nonces, [k.zn.e for k in verifiers],
)
print(f"signature: sigma={signature.sigma} r={signature.r} s={signature.s} "
      f"t={signature.t} u_bar={signature.u_bar}")

result = scheme_combined.verify(
    params, message, signature,
    [k.zn.e for k in signers], [k.zn.y for k in signers], u, verifiers,
)
print(f"verification: accepted={result.accepted} "
      f"(pairing ok: {result.pairing_ok}, zn ok: {result.zn.accepted})")
assert result.accepted

import dataclasses

bad_sigma = dataclasses.replace(
    signature, sigma=signature.sigma * params.pairing.h % params.pairing.q)
print("tamper sigma only  ->", scheme_combined.verify(
    params, message, bad_sigma,
    [k.zn.e for k in signers], [k.zn.y for k in signers], u, verifiers).reason)
bad_u = dataclasses.replace(
    signature, u_bar=(signature.u_bar + 1) % params.zn.semi_a.n)
print("tamper u_bar only  ->", scheme_combined.verify(
    params, message, bad_u,
    [k.zn.e for k in signers], [k.zn.y for k in signers], u, verifiers).reason)

print("\n--- transcript simulation by the verifier side ---")
for mode in ("corrected", "paper"):
    sim = scheme_combined.simulate_transcript(
        params, message, verifiers,
        [k.zn.e for k in signers], [k.zn.y for k in signers], u,
        k_prime=5, mode=mode,
    )
    mirrored = scheme_combined.verify_mirrored(
        params, message, sim, signers, verifiers, v)
    print(f"mode={mode:9s} simulated (zeta={sim.sigma}, r'={sim.r}, s'={sim.s}, "
          f"t'={sim.t}, u'={sim.u_bar}); mirrored verification: "
          f"{'accepted' if mirrored.accepted else 'rejected'}")
    assert sim.sigma == signature.sigma  # zeta equals the real sigma

# With a single designated verifier both aggregations coincide.
single = verifiers[:1]
sim = scheme_combined.simulate_transcript(
    params, message, single,
    [k.zn.e for k in signers], [k.zn.y for k in signers], u,
    k_prime=5, mode="paper",
)
mirrored = scheme_combined.verify_mirrored(
    params, message, sim, signers, single, single[0].pairing.public_point)
print(f"single verifier, mode=paper: mirrored verification "
      f"{'accepted' if mirrored.accepted else 'rejected'}")
