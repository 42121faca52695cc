"""Exception types shared across the library."""


class MsdmvError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(MsdmvError):
    """An argument violates a documented precondition."""


class NotInvertibleError(ParameterError):
    """Modular inverse requested for a non-unit; carries the offending gcd."""

    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {gcd})")
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class SearchFailureError(MsdmvError):
    """A randomized search exhausted its retry budget."""


class SizeCapError(ParameterError):
    """An input is too large for the intended brute-force computation."""


class SessionError(MsdmvError):
    """Base class for signing-session protocol violations."""


class MembershipError(SessionError):
    """Message sender is not in the roster expected for this round."""


class DuplicateShareError(SessionError):
    """A member tried to contribute twice in the same round."""


class SequencingError(SessionError):
    """Message or operation does not match the session's current phase."""


class RejectedSessionError(MsdmvError):
    """A block was requested from a session that did not end in acceptance."""
