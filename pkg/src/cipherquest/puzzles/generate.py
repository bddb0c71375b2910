"""Seeded instance generation: same (spec, seed) always yields the same puzzle."""
from __future__ import annotations

import random
from typing import Any

from ..cipherscript import ScriptProgram, Stage, evaluate, format_program
from ..crypto import (
    DhParams,
    FeistelKey,
    LfsrConfig,
    SubstitutionKey,
    TranspositionKey,
    caesar_shift,
    cbc_encrypt,
    dh_public,
    dh_shared,
    ec_mul,
    is_prime,
    lfsr_keystream,
    modinv,
    rsa_apply,
    stream_xor,
    substitution_apply,
    teaching_curve,
    toy_hash,
    transposition_decrypt,
    transposition_encrypt,
    xor_split,
)
from .types import ANSWER_FORMS, PuzzleInstance, PuzzleKind, PuzzleSpec

_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_SMALL_ODD_PRIMES = tuple(n for n in range(3, 100) if is_prime(n))


def generate_instance(spec: PuzzleSpec, seed: int) -> PuzzleInstance:
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    rng = random.Random(seed)
    builder = _BUILDERS[spec.kind]
    challenge, solution, private = builder(spec, rng)
    return PuzzleInstance(
        spec_id=spec.id,
        kind=spec.kind,
        seed=seed,
        challenge=challenge,
        solution=solution,
        answer_form=ANSWER_FORMS[spec.kind],
        private=private,
    )


def _pick_message(spec: PuzzleSpec, rng: random.Random) -> str:
    return rng.choice(spec.plaintext_pool)


def _build_caesar(spec, rng):
    plaintext = _pick_message(spec, rng)
    shift = rng.randrange(1, 26)  # never 0: that would hand over the plaintext
    challenge = {"ciphertext": caesar_shift(plaintext, shift)}
    return challenge, plaintext, {"shift": shift}


def _build_mono_sub(spec, rng):
    plaintext = _pick_message(spec, rng)
    table = list(_ALPHABET)
    while True:
        rng.shuffle(table)
        key = SubstitutionKey("".join(table))
        ciphertext = substitution_apply(plaintext, key)
        if ciphertext != plaintext:
            break
    revealed_count = spec.parameter_ranges.get("revealed_pairs", 8)
    present = sorted(set(plaintext) - {" "})
    chosen = rng.sample(present, min(revealed_count, len(present)))
    pairs = [[key.table[ord(p) - 65], p] for p in sorted(chosen)]
    challenge = {"ciphertext": ciphertext, "revealed_pairs": pairs}
    return challenge, plaintext, {"table": key.table}


def _build_transposition(spec, rng):
    message = _pick_message(spec, rng).replace(" ", "")
    low = spec.parameter_ranges.get("min_columns", 3)
    high = spec.parameter_ranges.get("max_columns", 6)
    columns = rng.randrange(low, high + 1)
    while True:
        order = tuple(rng.sample(range(columns), columns))
        if order != tuple(range(columns)):
            break
    key = TranspositionKey(order)
    ciphertext = transposition_encrypt(message, key)
    solution = transposition_decrypt(ciphertext, key)  # message plus X padding
    challenge = {"ciphertext": ciphertext, "columns": columns}
    return challenge, solution, {"column_order": list(order)}


def _build_stream_xor(spec, rng):
    plaintext = _pick_message(spec, rng)
    seed_byte = rng.randrange(1, 256)
    data = plaintext.encode("ascii")
    keystream = lfsr_keystream(LfsrConfig(seed=seed_byte), len(data))
    challenge = {
        "ciphertext_hex": stream_xor(data, keystream).hex(),
        "keystream_seed_hex": f"{seed_byte:02x}",
    }
    return challenge, plaintext, {}


def _build_feistel_cbc(spec, rng):
    plaintext = _pick_message(spec, rng)
    key = rng.getrandbits(32)
    iv = rng.getrandbits(16)
    ciphertext = cbc_encrypt(plaintext.encode("ascii"), FeistelKey(key), iv)
    challenge = {
        "ciphertext_hex": ciphertext.hex(),
        "iv_hex": f"{iv:04x}",
        "key_hex": f"{key:08x}",
    }
    return challenge, plaintext, {}


def _build_dh(spec, rng):
    params = DhParams(spec.parameter_ranges["p"], spec.parameter_ranges["g"])
    a = rng.randrange(1, params.p - 1)
    b = rng.randrange(1, params.p - 1)
    challenge = {
        "p": params.p,
        "g": params.g,
        "alice_public": dh_public(params, a),
        "bob_public": dh_public(params, b),
    }
    shared = dh_shared(params, a, challenge["bob_public"])
    return challenge, str(shared), {"alice_secret": a, "bob_secret": b}


def _build_rsa(spec, rng):
    p = rng.choice(_SMALL_ODD_PRIMES)
    q = rng.choice(tuple(x for x in _SMALL_ODD_PRIMES if x != p))
    n = p * q
    phi = (p - 1) * (q - 1)
    candidates = [e for e in range(3, min(phi, 65)) if _gcd(e, phi) == 1]
    if not candidates:
        candidates = [e for e in range(3, phi) if _gcd(e, phi) == 1]
    e = rng.choice(candidates)
    d = modinv(e, phi)
    m = rng.randrange(2, n)
    challenge = {"n": n, "e": e, "ciphertext": rsa_apply(m, e, n)}
    return challenge, str(m), {"p": p, "q": q, "d": d}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _build_ec(spec, rng):
    curve = teaching_curve()
    scalar = rng.randrange(2, curve.group_order + 1)
    point = ec_mul(curve, scalar, curve.generator)
    challenge = {
        "p": curve.p,
        "a": curve.a,
        "b": curve.b,
        "generator": [curve.generator.x, curve.generator.y],
        "scalar": scalar,
    }
    solution = "infinity" if point.is_infinity else f"{point.x},{point.y}"
    return challenge, solution, {}


def _build_hash_preimage(spec, rng):
    bits = spec.parameter_ranges.get("bits", 12)
    mask = (1 << bits) - 1
    preimage = bytes(rng.randrange(256) for _ in range(2))
    challenge = {"bits": bits, "target": toy_hash(preimage) & mask}
    return challenge, preimage.hex(), {}


def _build_key_escrow(spec, rng):
    count = spec.parameter_ranges.get("shares", 3)
    width = spec.parameter_ranges.get("secret_bytes", 4)
    secret = bytes(rng.randrange(256) for _ in range(width))
    shares = xor_split(secret, count, seed=rng.getrandbits(63))
    challenge = {"shares_hex": [share.hex() for share in shares]}
    return challenge, secret.hex(), {}


_INVERSE_SHIFT = {"shift": lambda k: 26 - k}


def _build_script_pipeline(spec, rng):
    plaintext = _pick_message(spec, rng)
    shift = rng.randrange(1, 26)
    extras = rng.sample(["rev", "xor", "lfsr"], rng.randrange(1, 3))

    data = caesar_shift(plaintext, shift).encode("ascii")
    recipe: list[dict[str, Any]] = [{"op": "shift", "amount": shift}]
    inverse_stages = [Stage("shift", (26 - shift,))]
    for op in extras:
        if op == "rev":
            data = data[::-1]
            recipe.append({"op": "rev"})
            inverse_stages.append(Stage("rev"))
        elif op == "xor":
            key = bytes([rng.randrange(1, 256)])
            repeated = (key * len(data))[: len(data)]
            data = stream_xor(data, repeated)
            recipe.append({"op": "xor", "key_hex": key.hex()})
            inverse_stages.append(Stage("xor", (key,)))
        else:
            seed_byte = rng.randrange(1, 256)
            data = stream_xor(data, lfsr_keystream(LfsrConfig(seed=seed_byte), len(data)))
            recipe.append({"op": "lfsr", "seed_hex": f"{seed_byte:02x}"})
            inverse_stages.append(Stage("lfsr", (bytes([seed_byte]),)))

    solution_program = ScriptProgram(tuple(reversed(inverse_stages)))
    if evaluate(solution_program, data) != plaintext.encode("ascii"):
        raise RuntimeError("script pipeline construction is inconsistent")
    challenge = {"ciphertext_hex": data.hex(), "recipe": recipe}
    return challenge, format_program(solution_program), {"plaintext": plaintext}


_BUILDERS = {
    PuzzleKind.CAESAR: _build_caesar,
    PuzzleKind.MONO_SUB: _build_mono_sub,
    PuzzleKind.TRANSPOSITION: _build_transposition,
    PuzzleKind.STREAM_XOR: _build_stream_xor,
    PuzzleKind.FEISTEL_CBC: _build_feistel_cbc,
    PuzzleKind.DH_EXCHANGE: _build_dh,
    PuzzleKind.RSA_SMALL: _build_rsa,
    PuzzleKind.EC_SCALAR: _build_ec,
    PuzzleKind.HASH_PREIMAGE: _build_hash_preimage,
    PuzzleKind.KEY_ESCROW: _build_key_escrow,
    PuzzleKind.SCRIPT_PIPELINE: _build_script_pipeline,
}
