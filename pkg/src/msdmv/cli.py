"""Command-line simulator: parameter generation, key ceremonies, signing
sessions, verification, transcript simulation, vector replay, and the
ledger demo.

Exit codes: 0 success, 1 verification rejected, 2 usage error,
3 data or parameter error.  All randomness is seeded (default seed 0),
so identical invocations produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import (
    ledger,
    pairing,
    scheme_combined,
    scheme_ec,
    scheme_pairing,
    scheme_zn,
    serial,
    vectors,
)
from .eccurve import Curve
from .errors import MsdmvError
from .numtheory import semiprime
from .session import Phase, run_honest_session

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MsdmvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msdmv",
        description="Multi-signer designated multi-verifier signature simulator "
        "(toy parameters; nothing here is secure)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="parameter management")
    params_sub = p_params.add_subparsers(dest="params_command", required=True)
    p_gen = params_sub.add_parser("gen", help="generate or load parameters")
    _add_common(p_gen)
    p_gen.add_argument("--p", type=int, help="prime for custom generation")
    p_gen.add_argument("--na", help="signer-side semiprime as 'p,q' (s2/s3/combined)")
    p_gen.add_argument("--nb", help="verifier-side semiprime as 'p,q'")
    p_gen.add_argument("--a", type=int, default=0, help="curve coefficient a (s3)")
    p_gen.add_argument("--b", type=int, help="curve coefficient b (s3)")
    p_gen.set_defaults(handler=_cmd_params_gen)

    p_key = sub.add_parser("keygen", help="generate a roster of member keys")
    _add_common(p_key)
    p_key.add_argument("--params", required=True, help="params file")
    p_key.add_argument("--side", choices=("A", "B"), required=True)
    p_key.add_argument("--count", type=int, required=True)
    p_key.set_defaults(handler=_cmd_keygen)

    p_sign = sub.add_parser("sign", help="drive a full signing session")
    _add_common(p_sign)
    p_sign.add_argument("--params", required=True)
    p_sign.add_argument("--keys-a", required=True, help="signer key file")
    p_sign.add_argument("--keys-b", required=True, help="verifier key file")
    p_sign.add_argument("--message", required=True)
    p_sign.add_argument("--events", help="write the session event log here (JSON lines)")
    p_sign.set_defaults(handler=_cmd_sign)

    p_verify = sub.add_parser("verify", help="verify a signature file")
    _add_common(p_verify)
    p_verify.add_argument("--params", required=True)
    p_verify.add_argument("--keys-a", required=True)
    p_verify.add_argument("--keys-b", required=True)
    p_verify.add_argument("--message", required=True)
    p_verify.add_argument("--sig", required=True)
    p_verify.set_defaults(handler=_cmd_verify)

    p_sim = sub.add_parser("simulate", help="verifier-side transcript simulation")
    _add_common(p_sim)
    p_sim.add_argument("--params", required=True)
    p_sim.add_argument("--keys-a", required=True)
    p_sim.add_argument("--keys-b", required=True)
    p_sim.add_argument("--message", required=True)
    p_sim.add_argument("--mode", choices=("paper", "corrected"), default="corrected")
    p_sim.add_argument("--kprime", type=int, help="simulation nonce (default: seeded)")
    p_sim.set_defaults(handler=_cmd_simulate)

    p_vec = sub.add_parser("vectors", help="replay the bundled example vectors")
    _add_common(p_vec)
    # With no --scheme the replay covers every scheme.
    p_vec.set_defaults(handler=_cmd_vectors, scheme=None)

    p_ledger = sub.add_parser("ledger", help="mini-ledger demonstration")
    ledger_sub = p_ledger.add_subparsers(dest="ledger_command", required=True)
    p_demo = ledger_sub.add_parser("demo", help="build and verify the two-block chain")
    _add_common(p_demo)
    p_demo.set_defaults(handler=_cmd_ledger_demo)

    return parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scheme", choices=serial.SCHEMES, default="s2")
    p.add_argument("--set", dest="set_name", help="built-in parameter set name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file")
    p.add_argument("--json", action="store_true", help="machine-readable stdout")


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _emit(args, record: dict, human: str) -> None:
    if args.out:
        serial.write_json(args.out, record)
    if args.json:
        print(serial.dumps(record))
    else:
        print(human)
        if args.out:
            print(f"wrote {args.out}")


# ---------------------------------------------------------------- params

def _cmd_params_gen(args) -> int:
    rng = _rng(args)
    scheme = args.scheme
    if args.set_name:
        params = serial.named_params(scheme, args.set_name)
    elif scheme == "s1":
        if args.p is None:
            raise MsdmvError("s1 custom generation needs --p")
        params = pairing.generate_params(args.p, rng)
    elif scheme == "s2":
        if args.p is None:
            raise MsdmvError("s2 custom generation needs --p")
        semis = _parse_semis(args)
        params = scheme_zn.generate_params(args.p, rng, *semis)
    elif scheme == "s3":
        if args.p is None or args.b is None:
            raise MsdmvError("s3 custom generation needs --p and --b")
        semis = _parse_semis(args)
        params = scheme_ec.generate_params(Curve(args.p, args.a, args.b), rng, *semis)
    else:
        if args.p is None:
            raise MsdmvError("combined custom generation needs --p")
        semis = _parse_semis(args)
        zn = scheme_zn.generate_params(args.p, rng, *semis)
        params = scheme_combined.generate_params(zn, rng)
    record = serial.params_to_json(scheme, params)
    _emit(args, record, f"{scheme} parameters: {serial.dumps(record)}")
    return EXIT_OK


def _parse_semis(args):
    if (args.na is None) != (args.nb is None):
        raise MsdmvError("provide both --na and --nb or neither")
    if args.na is None:
        return (None, None)
    pa, qa = (int(v) for v in args.na.split(","))
    pb, qb = (int(v) for v in args.nb.split(","))
    return (semiprime(pa, qa), semiprime(pb, qb))


# ---------------------------------------------------------------- keygen

def _cmd_keygen(args) -> int:
    rng = _rng(args)
    params = serial.params_from_json(serial.read_json(args.params))
    if args.count < 1:
        raise MsdmvError("--count must be >= 1")
    prefix = "S" if args.side == "A" else "D"
    keys = {}
    for i in range(1, args.count + 1):
        member_id = f"{prefix}{i}"
        if args.scheme == "s1":
            keys[member_id] = scheme_pairing.keygen(params, rng)
        elif args.scheme == "s2":
            keys[member_id] = scheme_zn.member_keygen(params, args.side, rng)
        elif args.scheme == "s3":
            keys[member_id] = scheme_ec.member_keygen(params, args.side, rng)
        else:
            keys[member_id] = scheme_combined.member_keygen(params, args.side, rng)
    record = serial.roster_to_json(args.scheme, args.side, keys)
    _emit(args, record, f"generated {args.count} side-{args.side} keys ({args.scheme})")
    return EXIT_OK


def _load_context(args):
    params = serial.params_from_json(serial.read_json(args.params))
    scheme_a, _, keys_a = serial.roster_from_json(serial.read_json(args.keys_a))
    scheme_b, _, keys_b = serial.roster_from_json(serial.read_json(args.keys_b))
    if scheme_a != args.scheme or scheme_b != args.scheme:
        raise MsdmvError(
            f"key files are for schemes {scheme_a}/{scheme_b}, expected {args.scheme}"
        )
    return params, keys_a, keys_b


# ------------------------------------------------------------------ sign

def _cmd_sign(args) -> int:
    rng = _rng(args)
    params, keys_a, keys_b = _load_context(args)
    message = args.message.encode("utf-8")
    session = run_honest_session(
        args.scheme, params, keys_a, keys_b, message, rng,
        session_id=f"session-{args.seed}",
    )
    if args.scheme == "s1":
        record = serial.s1_signature_record(
            params, session.backend.u, session.backend.v, session.signature
        )
    else:
        record = serial.signature_to_json(args.scheme, session.signature)
    if args.events:
        with open(args.events, "w", encoding="ascii") as fh:
            fh.write(serial.events_to_jsonl(session.events))
    _emit(
        args,
        record,
        f"session {session.session_id}: phase={session.phase.value} "
        f"({len(keys_a)} signers, {len(keys_b)} verifiers)",
    )
    return EXIT_OK if session.phase is Phase.ACCEPTED else EXIT_REJECTED


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    params, keys_a, keys_b = _load_context(args)
    message = args.message.encode("utf-8")
    signature = serial.signature_from_json(serial.read_json(args.sig))
    if args.scheme == "s1":
        u = scheme_pairing.aggregate_public(
            [k.public_point for k in keys_a.values()], params
        )
        zeta = [
            scheme_pairing.verify_share(message, k, u, params) for k in keys_b.values()
        ]
        accepted = scheme_pairing.verify(signature, zeta, params)
        reason = None if accepted else "pairing check"
    elif args.scheme == "s2":
        decode = [scheme_zn.decode_share(params, signature, k) for k in keys_b.values()]
        result = scheme_zn.verify(
            params, message, signature,
            [k.e for k in keys_a.values()], [k.y for k in keys_a.values()],
            [k.d for k in keys_b.values()], decode,
        )
        accepted, reason = result.accepted, result.reason
    elif args.scheme == "s3":
        decode = [scheme_ec.decode_share(params, signature, k) for k in keys_b.values()]
        result = scheme_ec.verify(
            params, message, signature,
            [k.e for k in keys_a.values()], [k.y for k in keys_a.values()],
            [k.d for k in keys_b.values()], decode,
        )
        accepted, reason = result.accepted, result.reason
    else:
        u = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in keys_a.values()], params.pairing
        )
        result = scheme_combined.verify(
            params, message, signature,
            [k.zn.e for k in keys_a.values()], [k.zn.y for k in keys_a.values()],
            u, list(keys_b.values()),
        )
        accepted, reason = result.accepted, result.reason
    if args.json:
        print(serial.dumps({"accepted": accepted, "reason": reason}))
    elif accepted:
        print("accepted")
    else:
        print(f"rejected: {reason}")
    return EXIT_OK if accepted else EXIT_REJECTED


# -------------------------------------------------------------- simulate

def _cmd_simulate(args) -> int:
    rng = _rng(args)
    params, keys_a, keys_b = _load_context(args)
    message = args.message.encode("utf-8")
    if args.scheme == "s1":
        raise MsdmvError(
            "the pairing scheme's simulated signature equals the real one; "
            "use sign/verify to see it"
        )
    k_prime = args.kprime if args.kprime is not None else rng.randrange(2, 1000)
    verifier_keys = list(keys_b.values())
    if args.scheme == "s2":
        sim = scheme_zn.simulate_transcript(
            params, message, verifier_keys,
            [k.e for k in keys_a.values()], [k.y for k in keys_a.values()],
            k_prime, args.mode,
        )
        mirrored = scheme_zn.verify_mirrored(
            params, message, sim, list(keys_a.values()), verifier_keys
        )
    elif args.scheme == "s3":
        sim = scheme_ec.simulate_transcript(
            params, message, verifier_keys,
            [k.e for k in keys_a.values()], [k.y for k in keys_a.values()],
            k_prime, args.mode,
        )
        mirrored = scheme_ec.verify_mirrored(
            params, message, sim, list(keys_a.values()), verifier_keys
        )
    else:
        u = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in keys_a.values()], params.pairing
        )
        v = scheme_pairing.aggregate_public(
            [k.pairing.public_point for k in keys_b.values()], params.pairing
        )
        sim = scheme_combined.simulate_transcript(
            params, message, verifier_keys,
            [k.zn.e for k in keys_a.values()], [k.zn.y for k in keys_a.values()],
            u, k_prime, args.mode,
        )
        mirrored = scheme_combined.verify_mirrored(
            params, message, sim, list(keys_a.values()), verifier_keys, v
        )
    record = serial.signature_to_json(args.scheme, sim)
    record["mode"] = args.mode
    record["k_prime"] = str(k_prime)
    record["mirrored_verification"] = "accepted" if mirrored.accepted else "rejected"
    _emit(
        args,
        record,
        f"simulated transcript (mode={args.mode}, k'={k_prime}); "
        f"mirrored verification: {record['mirrored_verification']}",
    )
    return EXIT_OK


# --------------------------------------------------------------- vectors

def _cmd_vectors(args) -> int:
    checks = vectors.all_checks(scheme=args.scheme, set_name=args.set_name)
    if not checks:
        raise MsdmvError("no vectors match that scheme/set filter")
    failed = [c for c in checks if not c.ok]
    if args.json:
        print(
            serial.dumps(
                [
                    {
                        "scheme": c.scheme, "set": c.set_name, "name": c.name,
                        "expected": c.expected, "actual": c.actual,
                        "ok": c.ok, "note": c.note,
                    }
                    for c in checks
                ]
            )
        )
    else:
        for c in checks:
            status = "PASS" if c.ok else "FAIL"
            line = f"{status} {c.scheme}/{c.set_name} {c.name}: {c.actual}"
            if not c.ok:
                line += f" (expected {c.expected})"
            if c.note:
                line += f"  [note: {c.note}]"
            print(line)
        print(f"{len(checks) - len(failed)}/{len(checks)} vector checks passed")
    return EXIT_OK if not failed else EXIT_REJECTED


# ---------------------------------------------------------------- ledger

def _cmd_ledger_demo(args) -> int:
    blocks, params, keyring, roster = ledger.demo_chain(seed=args.seed)
    bad = ledger.verify_chain(blocks, params, keyring, roster)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(serial.chain_to_jsonl(blocks))
    if args.json:
        print(
            serial.dumps(
                {
                    "blocks": len(blocks),
                    "verified": bad is None,
                    "signers": [list(b.signer_ids) for b in blocks],
                }
            )
        )
    else:
        for i, block in enumerate(blocks, 1):
            print(
                f"block {i}: {len(block.transactions)} transactions, "
                f"signers {','.join(block.signer_ids)}"
            )
            print(f"  merkle root {block.header.merkle_root}")
            print(f"  header hash {block.header.hash()}")
        print("chain verification: " + ("ok" if bad is None else f"bad block {bad}"))
        if args.out:
            print(f"wrote {args.out}")
    return EXIT_OK if bad is None else EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
