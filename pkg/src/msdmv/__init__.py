"""Multi-signer strong designated multi-verifier signatures, desk scale.

Four schemes over deliberately tiny groups: a pairing-based scheme, a
factoring + discrete-log scheme over Z_p^*, its elliptic-curve variant,
and the composition of the first two.  A session layer coordinates the
multi-round signing and verdict flow, and a mini-ledger demo attests
transaction batches with the combined scheme.

Everything here runs on toy parameters where discrete logarithms are
computable by construction.  The library exists to make the protocols'
algebra executable and auditable, not to protect data.
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    eccurve,
    errors,
    hashing,
    ledger,
    numtheory,
    pairing,
    scheme_combined,
    scheme_ec,
    scheme_pairing,
    scheme_zn,
    serial,
    session,
    vectors,
)
