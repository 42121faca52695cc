"""Desk-scale permissioned ledger attested with the combined scheme.

Transactions commit to their amounts by digest only; each block batches
the transactions of one interval, carries a Merkle root over their leaf
digests, and is attested by a combined-scheme signature produced by the
transaction participants.  Whoever moves or receives value in a block
signs it; everyone else on the roster verifies.  Blocks chain by header
hash; nBits and nonce ride along as inert header fields since there is no
mining here.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, replace

from . import scheme_combined
from .errors import ParameterError, RejectedSessionError
from .scheme_combined import CombinedMemberKey, CombinedParams, CombinedSignature
from .scheme_pairing import PairingMember, keygen as pairing_keygen
from .scheme_zn import ZnMemberKey, member_keygen as zn_keygen
from .session import Phase, Session, run_honest_session

__all__ = [
    "Transaction",
    "BlockHeader",
    "Block",
    "ParticipantKeys",
    "GENESIS_PARENT",
    "commit_amount",
    "merkle_root",
    "build_block",
    "verify_chain",
    "participants_of",
    "demo_chain",
]

GENESIS_PARENT = "0" * 64


def _hex_digest(data: str) -> str:
    return hashlib.sha256(data.encode("ascii")).hexdigest()


def commit_amount(amount: int, tx_id: str) -> str:
    """Digest commitment to an amount, bound to its transaction id."""
    return _hex_digest(f"{tx_id}|{amount}")


@dataclass(frozen=True)
class Transaction:
    """One transfer: ids are public, the amount only as a commitment."""

    tx_id: str
    sender: str
    recipient: str
    amount_commitment: str

    def leaf(self) -> str:
        """Leaf digest entering the block's Merkle tree."""
        return _hex_digest(
            f"{self.tx_id}|{self.sender}|{self.recipient}|{self.amount_commitment}"
        )


def merkle_root(leaves: list[str]) -> str:
    """Binary Merkle root; an odd level duplicates its last node.

    A single leaf is also duplicated, so the root is always at least one
    hash away from the leaves.
    """
    if not leaves:
        raise ParameterError("cannot build a Merkle tree with no leaves")
    level = list(leaves)
    while True:
        if len(level) % 2:
            level.append(level[-1])
        level = [_hex_digest(level[i] + level[i + 1]) for i in range(0, len(level), 2)]
        if len(level) == 1:
            return level[0]


@dataclass(frozen=True)
class BlockHeader:
    block_version: int
    merkle_root: str
    timestamp: int
    n_bits: int
    nonce: int
    parent_hash: str

    def hash(self) -> str:
        return _hex_digest(
            f"{self.block_version}|{self.merkle_root}|{self.timestamp}"
            f"|{self.n_bits}|{self.nonce}|{self.parent_hash}"
        )


@dataclass(frozen=True)
class Block:
    header: BlockHeader
    transactions: tuple[Transaction, ...]
    signer_ids: tuple[str, ...]
    attestation: CombinedSignature


def participants_of(transactions: list[Transaction]) -> tuple[str, ...]:
    """Everyone who moved or received value, sorted by numeric suffix."""
    seen = {t.sender for t in transactions} | {t.recipient for t in transactions}
    return tuple(sorted(seen, key=_participant_sort_key))


def _participant_sort_key(pid: str):
    digits = "".join(ch for ch in pid if ch.isdigit())
    return (int(digits) if digits else 0, pid)


def build_block(
    prev_header: BlockHeader | None,
    transactions: list[Transaction],
    session: Session,
    *,
    block_version: int = 1,
    timestamp: int,
    n_bits: int = 0x207FFFFF,
    nonce: int = 0,
) -> Block:
    """Assemble a block from an accepted combined-scheme session."""
    if not transactions:
        raise ParameterError("a block needs at least one transaction")
    ids = [t.tx_id for t in transactions]
    if len(set(ids)) != len(ids):
        raise ParameterError("transaction ids must be unique within a block")
    if session.scheme != "combined":
        raise ParameterError(f"blocks are attested with the combined scheme, not {session.scheme!r}")
    if session.phase is not Phase.ACCEPTED:
        raise RejectedSessionError(
            f"session ended in phase {session.phase.value}; no block is built"
        )
    root = merkle_root([t.leaf() for t in transactions])
    if session.message != root.encode("ascii"):
        raise ParameterError("session did not attest this batch's Merkle root")
    header = BlockHeader(
        block_version=block_version,
        merkle_root=root,
        timestamp=timestamp,
        n_bits=n_bits,
        nonce=nonce,
        parent_hash=prev_header.hash() if prev_header else GENESIS_PARENT,
    )
    return Block(
        header=header,
        transactions=tuple(transactions),
        signer_ids=tuple(session.roster_a),
        attestation=session.signature,
    )


@dataclass(frozen=True)
class ParticipantKeys:
    """Key material letting one participant act on either side."""

    pairing: PairingMember
    zn_signer: ZnMemberKey
    zn_verifier: ZnMemberKey

    def as_signer(self) -> CombinedMemberKey:
        return CombinedMemberKey(pairing=self.pairing, zn=self.zn_signer)

    def as_verifier(self) -> CombinedMemberKey:
        return CombinedMemberKey(pairing=self.pairing, zn=self.zn_verifier)


def make_keyring(
    params: CombinedParams, roster: list[str], rng: random.Random
) -> dict[str, ParticipantKeys]:
    """Both-role keys for every roster member."""
    return {
        pid: ParticipantKeys(
            pairing=pairing_keygen(params.pairing, rng),
            zn_signer=zn_keygen(params.zn, "A", rng),
            zn_verifier=zn_keygen(params.zn, "B", rng),
        )
        for pid in roster
    }


def verify_chain(
    blocks: list[Block],
    params: CombinedParams,
    keyring: dict[str, ParticipantKeys],
    roster: list[str],
) -> int | None:
    """None when the whole chain checks out, else the 1-based index of the
    first block failing linkage, Merkle root, signer-set, or attestation."""
    if not blocks:
        raise ParameterError("empty chain")
    prev = None
    for index, block in enumerate(blocks, start=1):
        expected_parent = prev.header.hash() if prev else GENESIS_PARENT
        if block.header.parent_hash != expected_parent:
            return index
        if block.header.merkle_root != merkle_root([t.leaf() for t in block.transactions]):
            return index
        if block.signer_ids != participants_of(list(block.transactions)):
            return index
        signers = [keyring[pid] for pid in block.signer_ids]
        verifiers = [keyring[pid] for pid in roster if pid not in block.signer_ids]
        if not verifiers:
            return index
        message = _attestation_message(block)
        result = scheme_combined.verify(
            params,
            message,
            block.attestation,
            signer_rsa_pubs=[k.zn_signer.e for k in signers],
            signer_dl_pubs=[k.zn_signer.y for k in signers],
            signer_aggregate=sum(k.pairing.public_point for k in signers)
            % params.pairing.p,
            verifier_members=[k.as_verifier() for k in verifiers],
        )
        if not result.accepted:
            return index
        prev = block
    return None


def _attestation_message(block: Block) -> bytes:
    """What the signers attest: the block's Merkle root."""
    return block.header.merkle_root.encode("ascii")


# The bundled two-block scenario: 20 participants; in the first interval
# P1 pays P2/P3/P5/P7 and P9 pays P1/P3/P5/P11; in the second interval P7
# pays P13/P15, P4 pays P2/P7/P13, and P3 pays P4/P5/P11/P13.
_DEMO_TRANSFERS = [
    [
        ("P1", "P2"), ("P1", "P3"), ("P1", "P5"), ("P1", "P7"),
        ("P9", "P1"), ("P9", "P3"), ("P9", "P5"), ("P9", "P11"),
    ],
    [
        ("P7", "P13"), ("P7", "P15"),
        ("P4", "P2"), ("P4", "P7"), ("P4", "P13"),
        ("P3", "P4"), ("P3", "P5"), ("P3", "P11"), ("P3", "P13"),
    ],
]

_DEMO_BASE_TIMESTAMP = 1_700_000_000
_DEMO_INTERVAL = 600


def demo_chain(
    seed: int = 0, params: CombinedParams | None = None
) -> tuple[list[Block], CombinedParams, dict[str, ParticipantKeys], list[str]]:
    """Build and attest the bundled two-block scenario.

    Returns (blocks, params, keyring, roster); deterministic in the seed.
    """
    rng = random.Random(seed)
    if params is None:
        params = scheme_combined.named_params("paper-ex1")
    roster = [f"P{i}" for i in range(1, 21)]
    keyring = make_keyring(params, roster, rng)
    blocks: list[Block] = []
    prev = None
    for block_no, transfers in enumerate(_DEMO_TRANSFERS, start=1):
        txs = []
        for tx_no, (sender, recipient) in enumerate(transfers, start=1):
            tx_id = f"T_{block_no},{tx_no}"
            amount = rng.randrange(1, 10_000)
            txs.append(
                Transaction(tx_id, sender, recipient, commit_amount(amount, tx_id))
            )
        signer_ids = participants_of(txs)
        signer_keys = {pid: keyring[pid].as_signer() for pid in signer_ids}
        verifier_keys = {
            pid: keyring[pid].as_verifier() for pid in roster if pid not in signer_ids
        }
        root = merkle_root([t.leaf() for t in txs])
        session = run_honest_session(
            "combined",
            params,
            signer_keys,
            verifier_keys,
            root.encode("ascii"),
            rng,
            session_id=f"block-{block_no}",
        )
        block = build_block(
            prev,
            txs,
            session,
            timestamp=_DEMO_BASE_TIMESTAMP + _DEMO_INTERVAL * (block_no - 1),
        )
        blocks.append(block)
        prev = block.header
    return blocks, params, keyring, roster


def tamper_transaction(block: Block, tx_index: int) -> Block:
    """Copy of a block with one byte of one commitment flipped (header kept),
    for tamper-detection exercises."""
    tx = block.transactions[tx_index]
    flipped = ("0" if tx.amount_commitment[0] != "0" else "1") + tx.amount_commitment[1:]
    new_tx = replace(tx, amount_commitment=flipped)
    txs = list(block.transactions)
    txs[tx_index] = new_tx
    return Block(
        header=block.header,
        transactions=tuple(txs),
        signer_ids=block.signer_ids,
        attestation=block.attestation,
    )
