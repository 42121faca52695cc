"""SHA-256 based hash mappings shared by every scheme.

The primitive is fixed to SHA-256 and the input encodings are byte-exact,
so independently produced transcripts and vectors line up bit for bit.
"""

import hashlib

# Separator between the message and the bound transcript value.
SEPARATOR = b"\x1f"


def digest_int(data: bytes) -> int:
    """SHA-256 of data, read as a big-endian integer."""
    return int.from_bytes(hashlib.sha256(data).digest(), "big")


def hash_to_nonzero(message: bytes, modulus: int) -> int:
    """Map a message into [1, modulus-1].

    Zero is excluded on purpose: a zero hash point would turn every
    pairing share into the identity and make verification vacuous.
    """
    return digest_int(message) % (modulus - 1) + 1


def challenge_hash(message: bytes, binding: str, modulus: int) -> int:
    """Hash a message together with a transcript value into [0, modulus).

    The binding is the decimal string of a residue, or the "x,y" / "O"
    encoding of a curve point.  The reduction happens here, before the
    value is used anywhere, so the challenge and its round-tripped copy
    compare as plain integers.
    """
    return digest_int(message + SEPARATOR + binding.encode("ascii")) % modulus
