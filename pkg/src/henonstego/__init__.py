"""Text steganography in grayscale image LSBs, masked by a Hénon-map keystream."""

from henonstego.chaos import (
    ChaosKey,
    ChaosOrbit,
    Keystream,
    DIVERGENCE_BOUND,
    bifurcation_sweep,
    binarize,
    generate_orbit,
    henon_step,
    keystream,
)
from henonstego.codec import (
    BitStream,
    EmbedReport,
    StegoPayload,
    bits_to_bytes,
    embed,
    embed_raw,
    extract,
    extract_raw,
    message_to_bits,
    xor_mask,
)
from henonstego.errors import (
    CapacityError,
    DimensionMismatch,
    DivergenceError,
    FormatError,
    LengthError,
    LengthFieldError,
    StegoError,
)
from henonstego.metrics import QualityReport, compare, histogram, mse, psnr_paper_formula, psnr_standard
from henonstego.pgm import GrayImage, read_pgm, write_pgm

__version__ = "0.1.0"

__all__ = [
    "ChaosKey", "ChaosOrbit", "Keystream", "DIVERGENCE_BOUND",
    "bifurcation_sweep", "binarize", "generate_orbit", "henon_step", "keystream",
    "BitStream", "EmbedReport", "StegoPayload", "bits_to_bytes", "embed", "embed_raw",
    "extract", "extract_raw", "message_to_bits", "xor_mask",
    "CapacityError", "DimensionMismatch", "DivergenceError", "FormatError",
    "LengthError", "LengthFieldError", "StegoError",
    "QualityReport", "compare", "histogram", "mse", "psnr_paper_formula", "psnr_standard",
    "GrayImage", "read_pgm", "write_pgm",
]
