"""JSON record formats for parameters, keys, signatures, and blocks.

Integers travel as decimal strings, curve points as {"x": ..., "y": ...}
objects (the identity as the literal "O"), digests as lowercase hex.
Files are dumped with sorted keys and fixed separators so the same inputs
always produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import asdict

from . import pairing as pairing_group
from . import scheme_combined, scheme_ec, scheme_zn
from .eccurve import Curve, Point
from .errors import ParameterError
from .ledger import Block, BlockHeader, Transaction
from .numtheory import semiprime
from .pairing import PairingParams
from .scheme_combined import CombinedMemberKey, CombinedParams, CombinedSignature
from .scheme_ec import EcMemberKey, EcParams, EcRound1Share, EcSignature
from .scheme_pairing import PairingMember
from .scheme_zn import Round1Share, ZnMemberKey, ZnParams, ZnSignature

SCHEMES = ("s1", "s2", "s3", "combined")


def _i(value: int) -> str:
    return str(value)


def _to_int(text) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParameterError(f"expected a decimal integer, got {text!r}") from None


def point_to_json(pt: Point):
    if pt.is_infinity:
        return "O"
    return {"x": _i(pt.x), "y": _i(pt.y)}


def point_from_json(obj) -> Point:
    if obj == "O":
        return Point()
    try:
        return Point(_to_int(obj["x"]), _to_int(obj["y"]))
    except (TypeError, KeyError):
        raise ParameterError(f"bad point record {obj!r}") from None


def _semi_to_json(semi):
    return {"p_factor": _i(semi.p_factor), "q_factor": _i(semi.q_factor)}


def _semi_from_json(obj):
    return semiprime(_to_int(obj["p_factor"]), _to_int(obj["q_factor"]))


# ---------------------------------------------------------------- params

def params_to_json(scheme: str, params) -> dict:
    if scheme == "s1":
        return {
            "scheme": "s1",
            "p": _i(params.p),
            "g": _i(params.g),
            "q": _i(params.q),
            "h": _i(params.h),
        }
    if scheme == "s2":
        return {
            "scheme": "s2",
            "p": _i(params.p),
            "n_a": _semi_to_json(params.semi_a),
            "n_b": _semi_to_json(params.semi_b),
            "g_a": _i(params.g_a),
            "g_b": _i(params.g_b),
        }
    if scheme == "s3":
        return {
            "scheme": "s3",
            "curve": {
                "p": _i(params.curve.p),
                "a": _i(params.curve.a),
                "b": _i(params.curve.b),
            },
            "P": point_to_json(params.P),
            "Q": point_to_json(params.Q),
            "n_a": _semi_to_json(params.semi_a),
            "n_b": _semi_to_json(params.semi_b),
            "group_order": _i(params.group_order),
        }
    if scheme == "combined":
        return {
            "scheme": "combined",
            "pairing": params_to_json("s1", params.pairing),
            "zn": params_to_json("s2", params.zn),
        }
    raise ParameterError(f"unknown scheme {scheme!r}")


def params_from_json(obj: dict):
    scheme = obj.get("scheme")
    if scheme == "s1":
        return PairingParams(
            p=_to_int(obj["p"]), g=_to_int(obj["g"]), q=_to_int(obj["q"]), h=_to_int(obj["h"])
        )
    if scheme == "s2":
        return ZnParams(
            p=_to_int(obj["p"]),
            semi_a=_semi_from_json(obj["n_a"]),
            semi_b=_semi_from_json(obj["n_b"]),
            g_a=_to_int(obj["g_a"]),
            g_b=_to_int(obj["g_b"]),
        )
    if scheme == "s3":
        curve = Curve(
            p=_to_int(obj["curve"]["p"]),
            a=_to_int(obj["curve"]["a"]),
            b=_to_int(obj["curve"]["b"]),
        )
        return EcParams(
            curve=curve,
            P=point_from_json(obj["P"]),
            Q=point_from_json(obj["Q"]),
            semi_a=_semi_from_json(obj["n_a"]),
            semi_b=_semi_from_json(obj["n_b"]),
            group_order=_to_int(obj["group_order"]),
        )
    if scheme == "combined":
        return CombinedParams(
            pairing=params_from_json(obj["pairing"]),
            zn=params_from_json(obj["zn"]),
        )
    raise ParameterError(f"unknown scheme {scheme!r} in params record")


def named_params(scheme: str, name: str):
    """Built-in parameter set lookup across schemes."""
    loaders = {
        "s1": pairing_group.named_params,
        "s2": scheme_zn.named_params,
        "s3": scheme_ec.named_params,
        "combined": scheme_combined.named_params,
    }
    if scheme not in loaders:
        raise ParameterError(f"unknown scheme {scheme!r}")
    return loaders[scheme](name)


# ------------------------------------------------------------------ keys

def member_to_json(scheme: str, key) -> dict:
    if scheme == "s1":
        return {"secret": _i(key.secret), "public": _i(key.public_point)}
    if scheme == "s2":
        return {"e": _i(key.e), "d": _i(key.d), "x": _i(key.x), "y": _i(key.y)}
    if scheme == "s3":
        return {"e": _i(key.e), "d": _i(key.d), "x": _i(key.x), "y": point_to_json(key.y)}
    if scheme == "combined":
        return {
            "pairing": member_to_json("s1", key.pairing),
            "zn": member_to_json("s2", key.zn),
        }
    raise ParameterError(f"unknown scheme {scheme!r}")


def member_from_json(scheme: str, obj: dict):
    if scheme == "s1":
        return PairingMember(secret=_to_int(obj["secret"]), public_point=_to_int(obj["public"]))
    if scheme == "s2":
        return ZnMemberKey(
            e=_to_int(obj["e"]), d=_to_int(obj["d"]), x=_to_int(obj["x"]), y=_to_int(obj["y"])
        )
    if scheme == "s3":
        return EcMemberKey(
            e=_to_int(obj["e"]),
            d=_to_int(obj["d"]),
            x=_to_int(obj["x"]),
            y=point_from_json(obj["y"]),
        )
    if scheme == "combined":
        return CombinedMemberKey(
            pairing=member_from_json("s1", obj["pairing"]),
            zn=member_from_json("s2", obj["zn"]),
        )
    raise ParameterError(f"unknown scheme {scheme!r}")


def roster_to_json(scheme: str, side: str, keys: dict[str, object]) -> dict:
    return {
        "scheme": scheme,
        "side": side,
        "members": [
            {"id": member_id, **member_to_json(scheme, key)}
            for member_id, key in keys.items()
        ],
    }


def roster_from_json(obj: dict) -> tuple[str, str, dict[str, object]]:
    scheme = obj.get("scheme")
    side = obj.get("side")
    keys = {}
    for entry in obj.get("members", []):
        keys[entry["id"]] = member_from_json(scheme, entry)
    if not keys:
        raise ParameterError("key file contains no members")
    return scheme, side, keys


# ------------------------------------------------------------ signatures

def signature_to_json(scheme: str, signature, extra: dict | None = None) -> dict:
    """Signature record; s1 records embed their context (params, u, v)."""
    if scheme == "s1":
        record = {"scheme": "s1", "sigma": _i(signature)}
        record.update(extra or {})
        return record
    if scheme == "s2":
        return {
            "scheme": "s2",
            "r": _i(signature.r),
            "s": _i(signature.s),
            "t": _i(signature.t),
            "u_bar": _i(signature.u_bar),
        }
    if scheme == "s3":
        return {
            "scheme": "s3",
            "r": point_to_json(signature.r),
            "s": point_to_json(signature.s),
            "t": _i(signature.t),
            "u_bar": _i(signature.u_bar),
        }
    if scheme == "combined":
        return {
            "scheme": "combined",
            "sigma": _i(signature.sigma),
            "r": _i(signature.r),
            "s": _i(signature.s),
            "t": _i(signature.t),
            "u_bar": _i(signature.u_bar),
        }
    raise ParameterError(f"unknown scheme {scheme!r}")


def s1_signature_record(params, u: int, v: int, sigma: int) -> dict:
    return signature_to_json(
        "s1",
        sigma,
        extra={
            "p": _i(params.p),
            "g": _i(params.g),
            "q": _i(params.q),
            "h": _i(params.h),
            "u": _i(u),
            "v": _i(v),
        },
    )


def signature_from_json(obj: dict):
    scheme = obj.get("scheme")
    if scheme == "s1":
        return _to_int(obj["sigma"])
    if scheme == "s2":
        return ZnSignature(
            r=_to_int(obj["r"]), s=_to_int(obj["s"]), t=_to_int(obj["t"]),
            u_bar=_to_int(obj["u_bar"]),
        )
    if scheme == "s3":
        return EcSignature(
            r=point_from_json(obj["r"]), s=point_from_json(obj["s"]),
            t=_to_int(obj["t"]), u_bar=_to_int(obj["u_bar"]),
        )
    if scheme == "combined":
        return CombinedSignature(
            sigma=_to_int(obj["sigma"]), r=_to_int(obj["r"]), s=_to_int(obj["s"]),
            t=_to_int(obj["t"]), u_bar=_to_int(obj["u_bar"]),
        )
    raise ParameterError(f"unknown scheme {scheme!r} in signature record")


# ------------------------------------------------------- session events

def payload_to_json(payload):
    """Best-effort payload encoding for the session event log."""
    if payload is None:
        return None
    if isinstance(payload, str):
        return payload
    if isinstance(payload, int):
        return _i(payload)
    if isinstance(payload, Point):
        return point_to_json(payload)
    if isinstance(payload, (Round1Share, ZnSignature)):
        return {k: _i(v) for k, v in asdict(payload).items()}
    if isinstance(payload, (EcRound1Share, EcSignature)):
        return {
            k: point_to_json(v) if isinstance(v, Point) else _i(v)
            for k, v in vars(payload).items()
        }
    if isinstance(payload, tuple):
        return [payload_to_json(item) for item in payload]
    if hasattr(payload, "__dataclass_fields__"):
        return {
            k: payload_to_json(v) for k, v in vars(payload).items()
        }
    return repr(payload)


def events_to_jsonl(events: list[dict]) -> str:
    """Session event log as JSON lines, one event per line."""
    lines = []
    for event in events:
        record = {
            k: payload_to_json(v) if k == "payload" else v for k, v in event.items()
        }
        lines.append(dumps(record))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------- ledger

def transaction_to_json(tx: Transaction) -> dict:
    return {
        "tx_id": tx.tx_id,
        "from": tx.sender,
        "to": tx.recipient,
        "amount_commitment": tx.amount_commitment,
    }


def transaction_from_json(obj: dict) -> Transaction:
    return Transaction(
        tx_id=obj["tx_id"],
        sender=obj["from"],
        recipient=obj["to"],
        amount_commitment=obj["amount_commitment"],
    )


def block_to_json(block: Block) -> dict:
    return {
        "header": {
            "block_version": block.header.block_version,
            "merkle_root": block.header.merkle_root,
            "timestamp": block.header.timestamp,
            "n_bits": block.header.n_bits,
            "nonce": block.header.nonce,
            "parent_hash": block.header.parent_hash,
        },
        "transactions": [transaction_to_json(t) for t in block.transactions],
        "signers": list(block.signer_ids),
        "attestation": signature_to_json("combined", block.attestation),
    }


def block_from_json(obj: dict) -> Block:
    h = obj["header"]
    return Block(
        header=BlockHeader(
            block_version=h["block_version"],
            merkle_root=h["merkle_root"],
            timestamp=h["timestamp"],
            n_bits=h["n_bits"],
            nonce=h["nonce"],
            parent_hash=h["parent_hash"],
        ),
        transactions=tuple(transaction_from_json(t) for t in obj["transactions"]),
        signer_ids=tuple(obj["signers"]),
        attestation=signature_from_json(obj["attestation"]),
    )


def chain_to_jsonl(blocks: list[Block]) -> str:
    return "\n".join(dumps(block_to_json(b)) for b in blocks) + "\n"


def chain_from_jsonl(text: str) -> list[Block]:
    return [block_from_json(json.loads(line)) for line in text.splitlines() if line.strip()]


# ------------------------------------------------------------------- io

def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_json(path, obj) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps(obj) + "\n")


def read_json(path) -> dict:
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)
