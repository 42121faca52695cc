#!/usr/bin/env python3
"""Walkthrough of the elliptic-curve variant on y^2 = x^3 + 2 over Z_419.

Same RSA-exponent machinery as the Z_p^* scheme; residue products become
point sums, and the round-2 answer drops the r factor (v_i = z*x_i + k).
"""

from msdmv import scheme_ec
from msdmv.eccurve import curve_order, point_order, scalar_mul

params = scheme_ec.named_params("paper-ex1")
curve = params.curve
print(f"curve: y^2 = x^3 + {curve.a}x + {curve.b} over Z_{curve.p}, "
      f"|E| = {curve_order(curve)}")
print(f"P = {params.P.encode()} of order "
      f"{point_order(params.P, curve, params.group_order)}, "
      f"Q = {params.Q.encode()} of order "
      f"{point_order(params.Q, curve, params.group_order)}")

signers = [scheme_ec.member_keygen(params, "A", e=e, x=x)
           for e, x in ((13, 7), (7, 16), (11, 21))]
verifiers = [scheme_ec.member_keygen(params, "B", e=e, x=x)
             for e, x in ((5, 19), (11, 17))]
for i, key in enumerate(signers, 1):
    print(f"  S{i}: e={key.e} d={key.d} x={key.x} y={key.y.encode()}")
for j, key in enumerate(verifiers, 1):
    print(f"  D{j}: e={key.e} d={key.d} x={key.x} y={key.y.encode()}")

message = b"custody transfer 4"
nonces = (8, 12, 14)
verifier_pubs = [k.y for k in verifiers]

shares = []
for k in nonces:
    share = scheme_ec.sign_round1(params, verifier_pubs, k)
    shares.append(share)
    print(f"round 1, k={k}: r_i={share.r.encode()} s_i={share.s.encode()} "
          f"w_i={share.w.encode()}")

challenge = scheme_ec.aggregate_challenge(params, message, shares,
                                          [k.e for k in verifiers])
print(f"challenge: r={challenge.r.encode()} s={challenge.s.encode()} "
      f"w={challenge.w.encode()} z={challenge.z} t={challenge.t}")
print(f"  (r aggregates to [4]P - [6]Q = "
      f"{scalar_mul(4, params.P, curve).encode()} - {scalar_mul(6, params.Q, curve).encode()})")

v_list = [scheme_ec.sign_round2(challenge, key, k) for key, k in zip(signers, nonces)]
signature = scheme_ec.finalize(params, v_list, [k.d for k in signers], challenge)
v_bar = sum(v_list) % params.semi_a.n
print(f"v_i = {v_list}, v_bar = {v_bar}, "
      f"u_bar = {signature.u_bar} (t = {signature.t})")

decode = [scheme_ec.decode_share(params, signature, k) for k in verifiers]
result = scheme_ec.verify(
    params, message, signature,
    signer_rsa_pubs=[k.e for k in signers],
    signer_dl_pubs=[k.y for k in signers],
    verifier_rsa_privs=[k.d for k in verifiers],
    decode_shares=decode,
)
print(f"verify: accepted={result.accepted}, a={result.a} b={result.b}, "
      f"c={result.c.encode()} recovers w")
assert result.accepted and result.a == v_bar and result.b == challenge.z
