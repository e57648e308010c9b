"""Exception hierarchy shared by every module."""


class SignedGraphError(ValueError):
    """Malformed input: bad graph text, invalid vertex, broken precondition."""


class NotConnectedError(SignedGraphError):
    pass


class NotAutomorphismError(SignedGraphError):
    pass


class CapExceededError(RuntimeError):
    """A desk-scale resource cap (cycle space size, vertex count) was exceeded."""
