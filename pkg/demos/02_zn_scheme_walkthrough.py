#!/usr/bin/env python3
"""Walkthrough of the factoring + discrete-log scheme over Z_211.

Reproduces the bundled worked example: the key tables, the two signing
rounds, the four-component signature (r, s, t, u_bar), and the joint
verification with its internal identities a == v_bar and b == z.
"""

from msdmv import scheme_zn

params = scheme_zn.named_params("paper-ex1")
print(f"p = {params.p}, n_A = {params.semi_a.n} (phi {params.semi_a.phi}), "
      f"n_B = {params.semi_b.n} (phi {params.semi_b.phi})")
print(f"generators: g_A = {params.g_a} (order {params.semi_a.n}), "
      f"g_B = {params.g_b} (order {params.semi_b.n})")

signers = [scheme_zn.member_keygen(params, "A", e=e, x=x)
           for e, x in ((13, 7), (7, 16), (11, 21))]
verifiers = [scheme_zn.member_keygen(params, "B", e=e, x=x)
             for e, x in ((5, 19), (11, 17))]
for i, key in enumerate(signers, 1):
    print(f"  S{i}: e={key.e} d={key.d} x={key.x} y={key.y}")
for j, key in enumerate(verifiers, 1):
    print(f"  D{j}: e={key.e} d={key.d} x={key.x} y={key.y}")

message = b"quarterly statement"
nonces = (8, 12, 14)
verifier_pubs = [k.y for k in verifiers]

print("round 1 (per signer, nonce kept secret):")
shares = []
for key, k in zip(signers, nonces):
    share = scheme_zn.sign_round1(params, verifier_pubs, k)
    shares.append(share)
    print(f"  k={k}: r_i={share.r} s_i={share.s} w_i={share.w}")

challenge = scheme_zn.aggregate_challenge(params, message, shares,
                                          [k.e for k in verifiers])
print(f"challenge: r={challenge.r} s={challenge.s} w={challenge.w} "
      f"z={challenge.z} t={challenge.t}")

v_list = [scheme_zn.sign_round2(challenge, key, k) for key, k in zip(signers, nonces)]
print(f"round 2 answers v_i = z*x_i + k_i*r: {v_list}")

signature = scheme_zn.finalize(params, v_list, [k.d for k in signers], challenge)
v_bar = sum(v_list) % params.semi_a.n
print(f"v_bar = {v_bar}, signature = (r={signature.r}, s={signature.s}, "
      f"t={signature.t}, u_bar={signature.u_bar})")

decode = [scheme_zn.decode_share(params, signature, k) for k in verifiers]
print(f"verifier decode shares z_j = s**x_j: {decode}")

result = scheme_zn.verify(
    params, message, signature,
    signer_rsa_pubs=[k.e for k in signers],
    signer_dl_pubs=[k.y for k in signers],
    verifier_rsa_privs=[k.d for k in verifiers],
    decode_shares=decode,
)
print(f"verify: accepted={result.accepted}")
print(f"  unwrapped a = {result.a} (== v_bar {v_bar})")
print(f"  unwrapped b = {result.b} (== z {challenge.z})")
print(f"  c = {result.c} recovers w = {challenge.w}")
assert result.accepted and result.a == v_bar and result.b == challenge.z

# One flipped component is enough to fail both checks.
import dataclasses

bad = dataclasses.replace(signature, u_bar=(signature.u_bar + 1) % params.semi_a.n)
print("tampered u_bar:", scheme_zn.verify(
    params, message, bad,
    [k.e for k in signers], [k.y for k in signers],
    [k.d for k in verifiers], decode,
).reason)
