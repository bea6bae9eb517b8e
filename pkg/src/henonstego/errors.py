"""Exception hierarchy. Every error raised by the library derives from StegoError."""


class StegoError(Exception):
    stage = "stego"


class DivergenceError(StegoError, ArithmeticError):
    """The orbit for a key escaped past DIVERGENCE_BOUND."""

    stage = "chaos"


class LengthError(StegoError, ValueError):
    """Keystream shorter than the bits it must mask."""

    stage = "mask"


class CapacityError(StegoError, ValueError):
    stage = "embed"


class LengthFieldError(StegoError, ValueError):
    """Decoded length header does not fit the image: wrong key or not a stego image."""

    stage = "extract"


class FormatError(StegoError, ValueError):
    stage = "pgm"


class DimensionMismatch(StegoError, ValueError):
    stage = "compare"
