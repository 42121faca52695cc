"""Shared helpers: key rosters, direct signing pipelines, and tampers."""

from __future__ import annotations

import dataclasses
import random
import warnings

from msdmv import pairing, scheme_combined, scheme_ec, scheme_pairing, scheme_zn
from msdmv.eccurve import point_add
from msdmv.scheme_zn import WeakChallengeWarning


def make_roster(scheme: str, params, n: int, m: int, rng: random.Random):
    """(signer key dict, verifier key dict) with ids S1.. / D1.."""
    if scheme == "s1":
        signers = {f"S{i}": scheme_pairing.keygen(params, rng) for i in range(1, n + 1)}
        verifiers = {f"D{j}": scheme_pairing.keygen(params, rng) for j in range(1, m + 1)}
    elif scheme == "s2":
        signers = {f"S{i}": scheme_zn.member_keygen(params, "A", rng) for i in range(1, n + 1)}
        verifiers = {f"D{j}": scheme_zn.member_keygen(params, "B", rng) for j in range(1, m + 1)}
    elif scheme == "s3":
        signers = {f"S{i}": scheme_ec.member_keygen(params, "A", rng) for i in range(1, n + 1)}
        verifiers = {f"D{j}": scheme_ec.member_keygen(params, "B", rng) for j in range(1, m + 1)}
    else:
        signers = {f"S{i}": scheme_combined.member_keygen(params, "A", rng) for i in range(1, n + 1)}
        verifiers = {f"D{j}": scheme_combined.member_keygen(params, "B", rng) for j in range(1, m + 1)}
    return signers, verifiers


@dataclasses.dataclass
class PipelineRun:
    """Everything a test wants to poke at after one direct signing run."""

    scheme: str
    params: object
    message: bytes
    signers: list
    verifiers: list
    signature: object
    challenge: object = None
    v_bar: int | None = None
    result: object = None


def run_pipeline(scheme, params, signer_keys, verifier_keys, message, rng) -> PipelineRun:
    """Drive the scheme functions directly (no session layer)."""
    signers = list(signer_keys.values())
    verifiers = list(verifier_keys.values())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakChallengeWarning)
        if scheme == "s1":
            v = scheme_pairing.aggregate_public([k.public_point for k in verifiers], params)
            u = scheme_pairing.aggregate_public([k.public_point for k in signers], params)
            sigma = scheme_pairing.combine_shares(
                [scheme_pairing.sign_share(message, k, v, params) for k in signers], params
            )
            zeta = [scheme_pairing.verify_share(message, k, u, params) for k in verifiers]
            ok = scheme_pairing.verify(sigma, zeta, params)
            run = PipelineRun(scheme, params, message, signers, verifiers, sigma)
            run.result = ok
            return run
        if scheme == "s2":
            ks = [rng.randrange(1, params.p) for _ in signers]
            shares = [scheme_zn.sign_round1(params, [k.y for k in verifiers], k) for k in ks]
            ch = scheme_zn.aggregate_challenge(params, message, shares, [k.e for k in verifiers])
            v_list = [scheme_zn.sign_round2(ch, s, k) for s, k in zip(signers, ks)]
            sig = scheme_zn.finalize(params, v_list, [k.d for k in signers], ch)
            dec = [scheme_zn.decode_share(params, sig, k) for k in verifiers]
            res = scheme_zn.verify(
                params, message, sig, [k.e for k in signers], [k.y for k in signers],
                [k.d for k in verifiers], dec,
            )
            return PipelineRun(
                scheme, params, message, signers, verifiers, sig,
                challenge=ch, v_bar=sum(v_list) % params.semi_a.n, result=res,
            )
        if scheme == "s3":
            ks = [rng.randrange(1, params.curve.p) for _ in signers]
            shares = [scheme_ec.sign_round1(params, [k.y for k in verifiers], k) for k in ks]
            ch = scheme_ec.aggregate_challenge(params, message, shares, [k.e for k in verifiers])
            v_list = [scheme_ec.sign_round2(ch, s, k) for s, k in zip(signers, ks)]
            sig = scheme_ec.finalize(params, v_list, [k.d for k in signers], ch)
            dec = [scheme_ec.decode_share(params, sig, k) for k in verifiers]
            res = scheme_ec.verify(
                params, message, sig, [k.e for k in signers], [k.y for k in signers],
                [k.d for k in verifiers], dec,
            )
            return PipelineRun(
                scheme, params, message, signers, verifiers, sig,
                challenge=ch, v_bar=sum(v_list) % params.semi_a.n, result=res,
            )
        # combined
        u = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in signers], params.pairing
        )
        v = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in verifiers], params.pairing
        )
        ks = [rng.randrange(1, params.zn.p) for _ in signers]
        round1 = [
            scheme_combined.sign_round1(params, member, v, [k.zn.y for k in verifiers], k, message)
            for member, k in zip(signers, ks)
        ]
        sig, ch = scheme_combined.aggregate_and_finalize(
            params, message, [s for s, _ in round1], [sh for _, sh in round1],
            signers, ks, [k.zn.e for k in verifiers],
        )
        res = scheme_combined.verify(
            params, message, sig, [k.zn.e for k in signers], [k.zn.y for k in signers],
            u, verifiers,
        )
        v_list = [scheme_zn.sign_round2(ch, member.zn, k) for member, k in zip(signers, ks)]
        return PipelineRun(
            scheme, params, message, signers, verifiers, sig,
            challenge=ch, v_bar=sum(v_list) % params.zn.semi_a.n, result=res,
        )


def bump(value: int, modulus: int) -> int:
    return (value + 1) % modulus


def wrap_unit(value: int, p: int) -> int:
    """value+1 kept inside [1, p)."""
    return value + 1 if value + 1 < p else 1


def tampered_variants(run: PipelineRun):
    """(label, signature, message) triples, each differing from the honest
    run in exactly one component."""
    sig, msg = run.signature, run.message
    if run.scheme == "s1":
        p = run.params
        return [
            ("sigma", sig * p.h % p.q, msg),
            ("message", sig, msg + b"?"),
        ]
    if run.scheme == "s2":
        p = run.params
        return [
            ("r", dataclasses.replace(sig, r=wrap_unit(sig.r, p.p)), msg),
            ("s", dataclasses.replace(sig, s=wrap_unit(sig.s, p.p)), msg),
            ("t", dataclasses.replace(sig, t=bump(sig.t, p.semi_b.n)), msg),
            ("u_bar", dataclasses.replace(sig, u_bar=bump(sig.u_bar, p.semi_a.n)), msg),
            ("message", sig, msg + b"?"),
        ]
    if run.scheme == "s3":
        p = run.params
        return [
            ("r", dataclasses.replace(sig, r=point_add(sig.r, p.P, p.curve)), msg),
            ("s", dataclasses.replace(sig, s=point_add(sig.s, p.Q, p.curve)), msg),
            ("t", dataclasses.replace(sig, t=bump(sig.t, p.semi_b.n)), msg),
            ("u_bar", dataclasses.replace(sig, u_bar=bump(sig.u_bar, p.semi_a.n)), msg),
            ("message", sig, msg + b"?"),
        ]
    p = run.params
    return [
        ("sigma", dataclasses.replace(sig, sigma=sig.sigma * p.pairing.h % p.pairing.q), msg),
        ("r", dataclasses.replace(sig, r=wrap_unit(sig.r, p.zn.p)), msg),
        ("s", dataclasses.replace(sig, s=wrap_unit(sig.s, p.zn.p)), msg),
        ("t", dataclasses.replace(sig, t=bump(sig.t, p.zn.semi_b.n)), msg),
        ("u_bar", dataclasses.replace(sig, u_bar=bump(sig.u_bar, p.zn.semi_a.n)), msg),
        ("message", sig, msg + b"?"),
    ]


def reverify(run: PipelineRun, signature, message) -> bool:
    """Run the scheme's verification against a (possibly tampered) pair."""
    if run.scheme == "s1":
        u = scheme_pairing.aggregate_public(
            [k.public_point for k in run.signers], run.params
        )
        zeta = [
            scheme_pairing.verify_share(message, k, u, run.params)
            for k in run.verifiers
        ]
        return scheme_pairing.verify(signature, zeta, run.params)
    if run.scheme == "s2":
        dec = [scheme_zn.decode_share(run.params, signature, k) for k in run.verifiers]
        return scheme_zn.verify(
            run.params, message, signature,
            [k.e for k in run.signers], [k.y for k in run.signers],
            [k.d for k in run.verifiers], dec,
        ).accepted
    if run.scheme == "s3":
        dec = [scheme_ec.decode_share(run.params, signature, k) for k in run.verifiers]
        return scheme_ec.verify(
            run.params, message, signature,
            [k.e for k in run.signers], [k.y for k in run.signers],
            [k.d for k in run.verifiers], dec,
        ).accepted
    u = scheme_pairing.aggregate_public(
        [k.pairing.public_point for k in run.signers], run.params.pairing
    )
    return scheme_combined.verify(
        run.params, message, signature,
        [k.zn.e for k in run.signers], [k.zn.y for k in run.signers],
        u, run.verifiers,
    ).accepted


def named_params_for(scheme: str, name: str):
    loaders = {
        "s1": pairing.named_params,
        "s2": scheme_zn.named_params,
        "s3": scheme_ec.named_params,
        "combined": scheme_combined.named_params,
    }
    return loaders[scheme](name)
