#!/usr/bin/env python3
"""Author the shipped campaign and write src/cipherquest/data/campaign.json.

Run from the repository root:

    python3 tools/build_campaign.py

The output is committed; this script exists so the content can be
regenerated and revalidated after edits.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from cipherquest.campaign import check_topic_coverage, load_campaign  # noqa: E402

POOL = [
    "THE COURIER LEAVES THE PACKAGE UNDER THE THIRD BENCH AT THE STATION",
    "MEET OUR CONTACT AT THE HARBOR WHEN THE EVENING BELL SOUNDS TWICE",
    "THE ENEMY CONVOY DEPARTS AT DAWN ALONG THE NORTHERN COAST ROAD",
    "BURN THESE ORDERS AFTER READING AND TELL NOBODY WHERE YOU HEARD THEM",
    "OUR AGENT INSIDE THE MINISTRY REPORTS THE CODE BOOKS HAVE BEEN MOVED",
    "THE SAFE HOUSE ON RIVER STREET IS COMPROMISED USE THE BAKERY INSTEAD",
    "DELIVER THE MICROFILM TO THE WOMAN WEARING A GREEN SCARF ON PLATFORM NINE",
    "RADIO SILENCE BEGINS AT MIDNIGHT AND HOLDS UNTIL THE OPERATION ENDS",
    "THE PASSWORD CHANGES EVERY THURSDAY ASK THE FLORIST FOR WHITE ROSES",
    "OUR NETWORK IN THE CAPITAL REMAINS INTACT DESPITE THE RECENT ARRESTS",
    "THE SUBMARINE SURFACES OFF THE HEADLAND FOR TEN MINUTES ONLY",
    "TRUST THE ENGINEER BUT SPEAK NOTHING OF THE LEDGER IN HIS PRESENCE",
    "THE TRAIN CARRYING THE GOLD RESERVES CROSSES THE BRIDGE AT NOON",
    "LEAVE A CHALK MARK ON THE LAMPPOST IF THE MEETING MUST BE DELAYED",
    "THE AMBASSADOR TRAVELS WITH TWO GUARDS AND NEITHER SPEAKS OUR LANGUAGE",
    "HIDE THE TRANSMITTER IN THE CELLAR BEHIND THE EMPTY WINE BARRELS",
    "OUR FRIENDS ACROSS THE BORDER EXPECT THE SHIPMENT BEFORE THE THAW",
    "THE INSPECTOR SUSPECTS NOTHING BUT AVOID THE CUSTOMS HALL ANYWAY",
    "SEND WORD THROUGH THE USUAL CHANNEL WHEN THE DOCUMENTS ARE COPIED",
    "THE LIGHTHOUSE KEEPER SIGNALS WITH THREE SHORT FLASHES AT HIGH TIDE",
    "ABANDON THE OBSERVATION POST IF THE PATROLS DOUBLE AFTER SUNSET",
    "THE ARCHIVIST WILL TRADE THE BLUEPRINTS FOR SAFE PASSAGE WEST",
    "EVERY MESSAGE FROM THE FIELD MUST CARRY THE AGREED SIGNATURE PHRASE",
    "THE GARRISON ROTATES ITS SENTRIES ON THE QUARTER HOUR AFTER DARK",
    "COLLECT THE FORGED PAPERS FROM THE TAILOR ON THE CORNER OF ELM STREET",
    "THE DIPLOMATIC POUCH CONTAINS MORE THAN LETTERS THIS TIME",
    "WATCH THE CLOCK TOWER A LAMP IN THE WINDOW MEANS THE ROUTE IS CLEAR",
    "OUR CIPHER CLERK DEFECTED TAKE NOTHING FURTHER TO THE OLD ADDRESS",
    "THE FISHING BOAT ANCHORED BY THE PIER BELONGS TO THE OPPOSITION",
    "MOVE THE PRISONERS BEFORE THE TRIBUNAL CONVENES ON FRIDAY MORNING",
    "THE ATTIC ROOM OF THE HOTEL OVERLOOKS THE ENTIRE MARKET SQUARE",
    "KEEP THE ENVELOPE SEALED UNTIL YOU ARE ALONE AND THE DOOR IS LOCKED",
]


def level(
    level_id: str,
    kind: str,
    prerequisites: list[str],
    topics: list[str],
    story_intro: str,
    story_outro: str,
    intro_text: str,
    success_text: str,
    codex_refs: list[str],
    hints: list[str],
    pool: bool = True,
    ranges: dict | None = None,
) -> dict:
    spec = {
        "intro_text": intro_text,
        "success_text": success_text,
        "codex_refs": codex_refs,
        "hint_texts": hints,
    }
    if pool:
        spec["plaintext_pool"] = POOL
    if ranges:
        spec["parameter_ranges"] = ranges
    return {
        "id": level_id,
        "kind": kind,
        "prerequisites": prerequisites,
        "story_intro": story_intro,
        "story_outro": story_outro,
        "topics": topics,
        "spec": spec,
    }


LEVELS = [
    level(
        "level-01", "CAESAR", [], ["Substitution Ciphers"],
        "Night one at the listening post. A courier's radio burst was caught on "
        "the wire, but every letter has been slid down the alphabet.",
        "The courier's route is ours now. Handler Vane nods: you can hear the "
        "alphabet turn.",
        "Each letter was rotated by the same secret amount. Turn the dial until "
        "the message reads as plain language, then submit the full text.",
        "Decrypted. A rotation is no lock at all once you try every key.",
        ["caesar-cipher", "modular-arithmetic"],
        [
            "The same shift moves every letter. Find one word and you have found them all.",
            "Single-letter words are almost always A or I. Line one up and read the rest.",
            "There are only twenty five possible shifts. Try each and keep the one that reads as language.",
        ],
    ),
    level(
        "level-02", "MONO_SUB", ["level-01"], ["Substitution Ciphers"],
        "The opposition learned their lesson: now every letter has its own "
        "disguise. A defector slipped us a few of the pairings.",
        "Vane pins the decrypt to the board. The disguises are off.",
        "Each plaintext letter maps to a fixed ciphertext letter. The revealed "
        "pairs show a few cipher-to-plain mappings. Recover the message.",
        "Recovered. Twenty six disguises, and frequency gave them all away.",
        ["substitution-cipher", "frequency-analysis"],
        [
            "Start from the revealed pairs and fill the common short words around them.",
            "The most frequent cipher letter almost certainly stands for E or T.",
            "Count letter frequencies in the ciphertext and match them against typical language frequencies.",
        ],
    ),
    level(
        "level-03", "TRANSPOSITION", ["level-02"], ["Transposition Ciphers"],
        "This intercept has every letter of the original, the analysts swear "
        "to it. They are just in the wrong order.",
        "Columns straightened, schedule exposed. The convoy never stood a chance.",
        "The message was written into a grid row by row and read out column by "
        "column in a secret order. You know the column count. Padding X letters "
        "fill the last row; include them in your answer.",
        "Unscrambled. Rearrangement hides nothing once the grid is rebuilt.",
        ["transposition-cipher"],
        [
            "Divide the length by the column count to get the column height.",
            "Cut the ciphertext into equal columns and slide them against each other until fragments of words appear.",
            "With few columns you can try every column order. Read row by row to check a candidate.",
        ],
        ranges={"min_columns": 3, "max_columns": 5},
    ),
    level(
        "level-04", "STREAM_XOR", ["level-03"], ["Stream Ciphers"],
        "The opposition has gone mechanical: a shift register spits out a "
        "keystream and the message is folded into it bit by bit.",
        "The register's rhythm is broken. Vane files the tap positions for the archive.",
        "The ciphertext is the message XORed with the keystream of an 8-bit "
        "LFSR whose seed you captured. Regenerate the keystream, undo the XOR, "
        "and submit the plaintext.",
        "Stream cancelled. XOR applied twice is nothing at all.",
        ["xor-truth-table", "lfsr-stream"],
        [
            "XOR is its own inverse: ciphertext XOR keystream gives back the plaintext.",
            "Clock the register eight steps per byte, collecting the output bit each step.",
            "Each step: output the low bit, XOR the tapped bits for feedback, shift right, feedback into the top bit.",
        ],
    ),
    level(
        "level-05", "FEISTEL_CBC", ["level-04"], ["Block Ciphers", "Key Management"],
        "A captured field unit encrypts in two-byte blocks, each chained to "
        "the last. We pulled its master key from the casing.",
        "Block by block the traffic opens up. The chaining bound them together; "
        "the key undid them all.",
        "Ciphertext blocks were made with a 4-round Feistel cipher in CBC mode. "
        "You hold the 32-bit master key and the IV. Decrypt in reverse round "
        "order, unchain each block, strip the padding, and submit the message.",
        "Unchained. A Feistel network runs backwards as easily as forwards.",
        ["feistel-network", "cbc-mode", "key-schedule"],
        [
            "Decryption uses the round keys in reverse order.",
            "After decrypting a block, XOR it with the previous ciphertext block; the first uses the IV.",
            "The four round keys are simply the four bytes of the master key, most significant first.",
        ],
    ),
    level(
        "level-06", "SCRIPT_PIPELINE", ["level-05"], ["Stream Ciphers"],
        "Too many intercepts, too little time. Vane slides a terminal across "
        "the desk: automate the desk work.",
        "Your script runs while you sleep. The station's backlog clears by morning.",
        "The recipe lists the operations the sender applied, in order. Write a "
        "CipherScript pipeline that inverts them (last step first) and submit "
        "the script itself. Stages: shift(n), xor(0x..), lfsr(0x..), rev.",
        "Pipeline verified. The machine now does the undoing for you.",
        ["cipherscript-basics"],
        [
            "Invert the recipe: undo the last operation first, then work backwards.",
            "xor, lfsr, and rev are their own inverses. Only shift needs a different amount.",
            "To undo shift(n), use shift(26 - n). Chain stages with the pipe character.",
        ],
    ),
    level(
        "level-07", "RSA_SMALL", ["level-06"], ["Encryption Algorithms"],
        "A lieutenant encrypts with the new public-key scheme but chose his "
        "primes from a schoolbook. The modulus is small enough to take apart "
        "by hand.",
        "The factored modulus goes up on the board, a warning to anyone who "
        "trusts small numbers.",
        "You have the public key (n, e) and a ciphertext. Factor n into its "
        "two primes, rebuild the private exponent, and decrypt. Submit the "
        "plaintext number.",
        "Broken. Public-key security is exactly the difficulty of the "
        "underlying problem, and this one was easy.",
        ["public-key-idea", "rsa-toy"],
        [
            "n is the product of two primes below one hundred. Trial division finds them fast.",
            "Compute phi = (p-1)(q-1); the private exponent d is the inverse of e modulo phi.",
            "Plaintext = ciphertext^d mod n. Square-and-multiply keeps the numbers small.",
        ],
        pool=False,
    ),
    level(
        "level-08", "EC_SCALAR", ["level-07"], ["Elliptic Curve Cryptography"],
        "The archivist's notebook is full of curves. One page holds a point, "
        "a multiplier, and a question mark.",
        "The notebook page resolves to a single point. The archivist "
        "underlines it twice.",
        "On the curve y^2 = x^3 + 2x + 2 over the integers mod 17, compute the "
        "scalar multiple of the generator. Submit the point as x,y or the word "
        "infinity.",
        "Point found. Addition on a curve is strange but it is still just "
        "arithmetic.",
        ["elliptic-curve-group"],
        [
            "Scalar multiplication is repeated point addition: 2G = G + G, 3G = 2G + G, and so on.",
            "Doubling uses the tangent slope (3x^2 + a) / 2y; adding distinct points uses (y2 - y1) / (x2 - x1), all mod 17.",
            "Division mod 17 means multiplying by the modular inverse. Build the table of G, 2G, 3G... and read off the answer.",
        ],
        pool=False,
    ),
    level(
        "level-09", "DH_EXCHANGE", ["level-08"],
        ["Diffie-Hellman Key Exchange", "Key Exchange Protocols"],
        "Two stations agreed on a key in plain sight, confident nobody could "
        "take a discrete logarithm. The numbers they chose are tiny.",
        "Their shared secret is on your desk before their next transmission. "
        "Vane calls it the quietest theft of the war.",
        "Alice and Bob exchanged public values over p = 23 with generator 5. "
        "Recover either secret exponent by brute force, then compute the "
        "shared key. Submit the number.",
        "Agreed and intercepted. The exchange is only as strong as the "
        "discrete log is hard.",
        ["diffie-hellman", "discrete-log"],
        [
            "Find the exponent a with g^a = A (mod p) by trying a = 1, 2, 3...",
            "Once you have one secret exponent, the shared key is the other side's public value raised to it.",
            "Both routes agree: A^b equals B^a mod p. Use that to check your answer.",
        ],
        pool=False,
        ranges={"p": 23, "g": 5},
    ),
    level(
        "level-10", "HASH_PREIMAGE", ["level-09"], ["Key Concepts", "Common Hash Functions"],
        "The dead drop is keyed to a checksum: the lockbox opens for any "
        "input whose digest ends in the right bits.",
        "The lockbox clicks open. Inside: the opposition's courier schedule "
        "and a lesson about short digests.",
        "Find any byte string whose 32-bit digest, truncated to the stated "
        "number of bits, equals the target. Submit the bytes as hex.",
        "Preimage found. A digest this short cannot protect anything for long.",
        ["hash-functions", "avalanche-effect"],
        [
            "Any input works if its truncated digest matches. Search small inputs first.",
            "One or two bytes of input are enough; iterate and hash each candidate.",
            "With only twelve bits of digest there are at most 4096 values; a few thousand tries must collide.",
        ],
        pool=False,
        ranges={"bits": 12},
    ),
    level(
        "level-11", "KEY_ESCROW", ["level-10"], ["Key Escrow"],
        "The master key was never stored whole: three custodians each hold a "
        "share. Tonight all three shares are in your hands.",
        "The reassembled key opens the annex vault. Vane logs the custodians' "
        "names and says nothing.",
        "The secret was split into XOR shares; every share is needed. XOR them "
        "all together and submit the recovered secret as hex.",
        "Reassembled. Escrow is trust arithmetic: all shares or nothing.",
        ["key-escrow", "xor-secret-sharing"],
        [
            "Combine the shares with XOR, byte by byte.",
            "Order does not matter: XOR is commutative and associative.",
            "Any share missing leaves the result uniformly random; with all of them the randomness cancels.",
        ],
        pool=False,
        ranges={"shares": 3, "secret_bytes": 4},
    ),
    level(
        "level-12", "DH_EXCHANGE", ["level-11"],
        ["Key Exchange Protocols", "Key Distribution Systems"],
        "The final exercise: the relay station distributes fresh keys each "
        "night over a bigger prime. Tonight you sit the distribution desk.",
        "The network's keys rotate under your hand. Vane signs the transfer "
        "order: the desk is yours.",
        "A full-size exchange this time: p = 2003, generator 5. Recover a "
        "secret exponent from a public value, derive the shared key, and "
        "submit it.",
        "Distribution complete. Every fresh key that moves through a network "
        "moves through arithmetic like this.",
        ["key-distribution"],
        [
            "The method scales unchanged: find the exponent, then raise the other public value to it.",
            "Brute force still works at this size; a loop over candidate exponents is enough.",
            "Square-and-multiply computes g^a mod p without ever holding a huge number.",
        ],
        pool=False,
        ranges={"p": 2003, "g": 5},
    ),
]

CODEX = [
    {
        "concept_id": "caesar-cipher",
        "title": "The Caesar Cipher",
        "body": "Rotate every letter of the alphabet by the same fixed amount: "
        "with shift 3, A becomes D and Z wraps to C. Formally each letter of "
        "index x encrypts to (x + k) mod 26. There are only 25 usable keys, so "
        "trying them all is always practical. It survives as the simplest "
        "example of a substitution cipher and of why key spaces must be large.",
        "unlocked_by": "level-01",
        "topics": ["Substitution Ciphers"],
    },
    {
        "concept_id": "modular-arithmetic",
        "title": "Modular Arithmetic",
        "body": "Arithmetic on a clock face: numbers wrap around at the "
        "modulus, so 24 mod 26 plus 5 is 3. Written a ≡ b (mod m) when m "
        "divides a - b. It is the number system behind almost everything "
        "here: letter rotation, exponentiation in Diffie-Hellman and RSA, and "
        "coordinates on elliptic curves.",
        "unlocked_by": "level-01",
        "topics": [],
    },
    {
        "concept_id": "substitution-cipher",
        "title": "Monoalphabetic Substitution",
        "body": "Each plaintext letter is replaced by a fixed partner letter, "
        "chosen by a secret permutation of the alphabet. The key space is 26 "
        "factorial, about 4 x 10^26, far too large to brute force. Yet the "
        "cipher falls to statistics, because the permutation never changes "
        "mid-message.",
        "unlocked_by": "level-02",
        "topics": ["Substitution Ciphers"],
    },
    {
        "concept_id": "frequency-analysis",
        "title": "Frequency Analysis",
        "body": "Language is not uniform: E, T, and A dominate typical text "
        "while Q and Z are rare. Counting symbol frequencies in a long enough "
        "ciphertext and matching the pattern to known letter statistics "
        "recovers a substitution key without ever searching the key space. It "
        "is the oldest published cryptanalytic technique.",
        "unlocked_by": "level-02",
        "topics": ["Substitution Ciphers"],
    },
    {
        "concept_id": "transposition-cipher",
        "title": "Columnar Transposition",
        "body": "Instead of disguising letters, rearrange them: write the "
        "message into a grid row by row, then read the columns out in a "
        "secret order. Every original letter is still present, which is "
        "itself a fingerprint: the letter frequencies of the ciphertext match "
        "plain language exactly. Short keys fall to trying every column "
        "order; longer ones to sliding columns against each other until words "
        "form.",
        "unlocked_by": "level-03",
        "topics": ["Transposition Ciphers"],
    },
    {
        "concept_id": "xor-truth-table",
        "title": "Exclusive Or",
        "body": "XOR compares two bits and outputs 1 exactly when they "
        "differ: 0^0=0, 0^1=1, 1^0=1, 1^1=0. Two properties make it the heart "
        "of stream ciphers: x ^ k ^ k = x, so the same operation encrypts and "
        "decrypts, and XOR with a uniformly random bit yields a uniformly "
        "random bit, so a truly random keystream gives perfect secrecy.",
        "unlocked_by": "level-04",
        "topics": ["Stream Ciphers"],
    },
    {
        "concept_id": "lfsr-stream",
        "title": "Linear Feedback Shift Registers",
        "body": "An LFSR holds n bits of state; each step it outputs one bit, "
        "XORs a fixed set of tapped bits into a feedback bit, and shifts. "
        "With taps chosen from a primitive polynomial the state walks through "
        "every nonzero value, giving the maximal period 2^n - 1 (255 for 8 "
        "bits). The output looks random but is linear, so a short stretch of "
        "known keystream betrays the whole register.",
        "unlocked_by": "level-04",
        "topics": ["Stream Ciphers"],
    },
    {
        "concept_id": "feistel-network",
        "title": "Feistel Networks",
        "body": "Split the block into halves L and R. Each round sets "
        "(L, R) <- (R, L ^ F(R, K)) for a round function F and round key K. "
        "The trick: this is invertible no matter what F is, because the XOR "
        "can always be undone with the same F output. Decryption is the same "
        "circuit with round keys in reverse order. DES is the classic "
        "instance.",
        "unlocked_by": "level-05",
        "topics": ["Block Ciphers"],
    },
    {
        "concept_id": "cbc-mode",
        "title": "Cipher Block Chaining",
        "body": "A block cipher alone encrypts identical blocks identically. "
        "CBC fixes this by XORing each plaintext block with the previous "
        "ciphertext block before encrypting; the first block uses a public "
        "initialization vector. Identical messages diverge after one block, "
        "and decryption reverses the chain: decrypt, then XOR the previous "
        "ciphertext block back out.",
        "unlocked_by": "level-05",
        "topics": ["Block Ciphers"],
    },
    {
        "concept_id": "key-schedule",
        "title": "Key Schedules",
        "body": "A block cipher needs a separate key for every round, derived "
        "from one master key by a key schedule. Here the schedule is the "
        "simplest possible: the four bytes of the 32-bit master key, most "
        "significant first. Real ciphers mix far more aggressively, because "
        "related round keys invite related-key attacks. Managing the master "
        "key itself, who holds it, how it travels, is half of symmetric "
        "cryptography.",
        "unlocked_by": "level-05",
        "topics": ["Key Management", "Block Ciphers"],
    },
    {
        "concept_id": "cipherscript-basics",
        "title": "CipherScript Pipelines",
        "body": "CipherScript is the station's toy language: stages joined by "
        "pipes, each transforming the bytes left to right, as in "
        "xor(0x3C) | shift(21). Because every stage is invertible, undoing an "
        "encryption is writing its mirror image: invert each stage and "
        "reverse their order. Automating the undo is the whole job of a "
        "working cryptanalyst.",
        "unlocked_by": "level-06",
        "topics": [],
    },
    {
        "concept_id": "public-key-idea",
        "title": "Public-Key Cryptography",
        "body": "Symmetric ciphers need both sides to share a secret first. "
        "Public-key schemes split the key in two: anyone may encrypt with the "
        "public half, only the private half decrypts. The split rests on "
        "one-way problems, multiplication is easy but factoring is hard, "
        "exponentiation is easy but discrete logarithms are hard. Security is "
        "exactly the hardness of that underlying problem.",
        "unlocked_by": "level-07",
        "topics": ["Encryption Algorithms"],
    },
    {
        "concept_id": "rsa-toy",
        "title": "RSA at Desk Scale",
        "body": "Pick primes p and q, publish n = pq and an exponent e "
        "coprime to phi = (p-1)(q-1); keep d = e^-1 mod phi private. "
        "Encryption is m^e mod n, decryption c^d mod n, which works because "
        "m^(ed) ≡ m (mod n) by Euler's theorem. With primes below one "
        "hundred, factoring n takes moments, which is the whole point: RSA's "
        "strength is purely the size of n.",
        "unlocked_by": "level-07",
        "topics": ["Encryption Algorithms"],
    },
    {
        "concept_id": "elliptic-curve-group",
        "title": "Elliptic Curve Groups",
        "body": "The points (x, y) satisfying y^2 = x^3 + ax + b over a "
        "finite field, plus a point at infinity, form a group. Adding two "
        "points means drawing the chord through them (or the tangent, when "
        "doubling), finding the third intersection with the curve, and "
        "reflecting it. Our teaching curve over the field of 17 elements has "
        "19 points, so 19 times the generator returns to infinity. The same "
        "chord-and-tangent law at 256-bit scale underlies modern key "
        "exchange.",
        "unlocked_by": "level-08",
        "topics": ["Elliptic Curve Cryptography"],
    },
    {
        "concept_id": "discrete-log",
        "title": "The Discrete Logarithm Problem",
        "body": "Given g and g^a mod p, find a. Exponentiation forward is "
        "cheap (square-and-multiply needs about log a steps) but no general "
        "shortcut is known for the reverse direction at cryptographic sizes. "
        "At our desk scale the exponent falls to a simple loop, which is "
        "exactly why real deployments use primes hundreds of digits long.",
        "unlocked_by": "level-09",
        "topics": ["Diffie-Hellman Key Exchange"],
    },
    {
        "concept_id": "diffie-hellman",
        "title": "Diffie-Hellman Key Exchange",
        "body": "Alice picks secret a and sends A = g^a mod p; Bob picks b "
        "and sends B = g^b. Each raises the other's value to their own "
        "secret: A^b = g^(ab) = B^a, a shared key computed without ever "
        "transmitting it. An eavesdropper sees g, p, A, B and must solve a "
        "discrete logarithm to intrude. It was the first published public-key "
        "technique and still opens most encrypted connections today.",
        "unlocked_by": "level-09",
        "topics": ["Diffie-Hellman Key Exchange", "Key Exchange Protocols"],
    },
    {
        "concept_id": "hash-functions",
        "title": "Cryptographic Hash Functions",
        "body": "A hash function condenses any input into a fixed-size "
        "digest. A cryptographic one must make three things impractical: "
        "finding an input for a given digest (preimage resistance), finding a "
        "second input matching a given input's digest, and finding any two "
        "inputs that collide. Our 32-bit toy follows the Merkle-Damgard "
        "pattern of real designs like SHA-256, absorbing the message a block "
        "at a time into a running state, but its short digest makes every "
        "resistance property breakable by enumeration.",
        "unlocked_by": "level-10",
        "topics": ["Key Concepts", "Common Hash Functions"],
    },
    {
        "concept_id": "avalanche-effect",
        "title": "The Avalanche Effect",
        "body": "Flip one input bit and a good hash flips about half its "
        "output bits, with no visible relation between which ones. Without "
        "avalanche, similar inputs give similar digests and an attacker can "
        "walk toward a target digest instead of searching blindly. Measured "
        "on our 32-bit toy, a single flipped input bit changes sixteen "
        "output bits on average.",
        "unlocked_by": "level-10",
        "topics": ["Key Concepts"],
    },
    {
        "concept_id": "key-escrow",
        "title": "Key Escrow",
        "body": "Escrow holds key material with custodians so it can be "
        "recovered under agreed conditions, a recovery scheme to its "
        "advocates, a built-in backdoor to its critics. Splitting the key "
        "among several custodians so that all must cooperate softens the "
        "trust problem: no single holder can act alone.",
        "unlocked_by": "level-11",
        "topics": ["Key Escrow"],
    },
    {
        "concept_id": "xor-secret-sharing",
        "title": "XOR Secret Splitting",
        "body": "To split a secret among n custodians, hand out n-1 uniformly "
        "random shares and one final share equal to the secret XOR all the "
        "others. Any subset short of the full n is statistically independent "
        "of the secret, pure noise, while XORing all n shares cancels the "
        "randomness exactly. It is the n-of-n case of secret sharing, with "
        "information-theoretic security.",
        "unlocked_by": "level-11",
        "topics": ["Key Escrow"],
    },
    {
        "concept_id": "key-distribution",
        "title": "Key Distribution",
        "body": "Ciphers are only as useful as the delivery of their keys. "
        "Historically that meant couriers and codebooks, single points of "
        "catastrophic failure. Modern systems either run an exchange protocol "
        "such as Diffie-Hellman to create keys on the spot, or lean on a "
        "trusted center that issues session keys. Rotating keys regularly "
        "limits how much any one compromise exposes.",
        "unlocked_by": "level-12",
        "topics": ["Key Distribution Systems", "Key Exchange Protocols"],
    },
]

CHAPTERS = [
    {"title": "Classical Cryptography", "levels": ["level-01", "level-02", "level-03"]},
    {"title": "Symmetric-Key Cryptography", "levels": ["level-04", "level-05", "level-06"]},
    {"title": "Public-Key Cryptography", "levels": ["level-07", "level-08", "level-09"]},
    {"title": "Cryptographic Hash Functions", "levels": ["level-10"]},
    {"title": "Key Management and Key Distribution", "levels": ["level-11", "level-12"]},
]


def main() -> int:
    document = {
        "version": 1,
        "chapters": CHAPTERS,
        "levels": LEVELS,
        "codex": CODEX,
    }
    text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    campaign = load_campaign(text, probe=True)
    missing = check_topic_coverage(campaign)
    if missing:
        print(f"coverage failure, topics unclaimed: {missing}", file=sys.stderr)
        return 1
    out = ROOT / "src" / "cipherquest" / "data" / "campaign.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"wrote {out} ({len(campaign.levels)} levels, "
          f"{len(campaign.codex_entries)} codex entries, all probe seeds solvable)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
