"""Exception hierarchy shared by every emvkit module."""


class EMVError(Exception):
    """Base class for all emvkit errors."""


class CarrierMismatch(EMVError, TypeError):
    """A payload does not belong to the carrier it was handed to."""


class ElementError(EMVError, ValueError):
    """An element is outside the algebra, or violates an operation's bounds."""


class ParseError(EMVError, ValueError):
    """Descriptor or literal text could not be parsed.

    ``offset`` is the byte offset of the offending character.
    """

    def __init__(self, message, text="", offset=0):
        self.text = text
        self.offset = offset
        self.byte_offset = len(text[:offset].encode("utf-8"))
        super().__init__(f"{message} (at byte {self.byte_offset})")


class NotExhaustive(EMVError):
    """A brute-force procedure was asked to run over a sampled enumeration."""


class HalfSumUndefined(EMVError):
    """The group half-sum (x + e)/2 does not exist in the carrier."""

    def __init__(self, x, e=None, message=None):
        self.x = x
        self.e = e
        super().__init__(message or f"half-sum undefined at {x!r}")


class SquareRootError(EMVError):
    """A candidate square root violates (Sq1) or (Sq2) on a sample."""

    def __init__(self, message, witness=()):
        self.witness = tuple(witness)
        super().__init__(message)


class TagMismatch(EMVError):
    """An operation was asked to act on the wrong classification tag."""


class HasTopError(EMVError):
    """The algebra already has a top element; it is its own representation."""


class RestrictionError(EMVError):
    """A square root on N does not map the embedded ideal into itself."""


class WellDefinednessError(EMVError):
    """f(x) = f(y) but f(r(x)) != f(r(y)) for a transported square root."""


class HomomorphismError(EMVError):
    """A map fails to preserve an EMV operation on a sample."""


class InvariantBreach(EMVError):
    """A proven theorem failed on a computed instance: something is broken."""
