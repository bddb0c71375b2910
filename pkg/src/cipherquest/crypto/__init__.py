"""Desk-scale cryptographic mechanisms backing the game's puzzles."""

from .classical import (
    ALPHABET,
    SubstitutionKey,
    TranspositionKey,
    caesar_shift,
    substitution_apply,
    substitution_invert,
    transposition_decrypt,
    transposition_encrypt,
)
from .ec import INFINITY, EcCurve, EcPoint, ec_add, ec_mul, teaching_curve
from .escrow import xor_combine, xor_split
from .feistel import (
    FeistelKey,
    InvalidPaddingError,
    cbc_decrypt,
    cbc_encrypt,
    feistel_decrypt_block,
    feistel_encrypt_block,
)
from .hashing import avalanche_score, hamming32, toy_hash
from .numbers import (
    MAX_DH_PRIME,
    MAX_RSA_PRIME,
    DhParams,
    RsaToyKey,
    dh_public,
    dh_shared,
    egcd,
    is_prime,
    modinv,
    modpow,
    rsa_apply,
    rsa_keygen_small,
)
from .stream import LfsrConfig, lfsr_keystream, lfsr_states, lfsr_step, stream_xor

__all__ = [
    "ALPHABET",
    "INFINITY",
    "MAX_DH_PRIME",
    "MAX_RSA_PRIME",
    "DhParams",
    "EcCurve",
    "EcPoint",
    "FeistelKey",
    "InvalidPaddingError",
    "LfsrConfig",
    "RsaToyKey",
    "SubstitutionKey",
    "TranspositionKey",
    "avalanche_score",
    "caesar_shift",
    "cbc_decrypt",
    "cbc_encrypt",
    "dh_public",
    "dh_shared",
    "ec_add",
    "ec_mul",
    "egcd",
    "feistel_decrypt_block",
    "feistel_encrypt_block",
    "hamming32",
    "is_prime",
    "lfsr_keystream",
    "lfsr_states",
    "lfsr_step",
    "modinv",
    "modpow",
    "rsa_apply",
    "rsa_keygen_small",
    "stream_xor",
    "substitution_apply",
    "substitution_invert",
    "teaching_curve",
    "toy_hash",
    "transposition_decrypt",
    "transposition_encrypt",
    "xor_combine",
    "xor_split",
]
