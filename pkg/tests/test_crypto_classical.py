import random

import pytest
from hypothesis import given, strategies as st

from cipherquest.crypto import (
    ALPHABET,
    SubstitutionKey,
    TranspositionKey,
    caesar_shift,
    substitution_apply,
    substitution_invert,
    transposition_decrypt,
    transposition_encrypt,
)

texts = st.text(alphabet=ALPHABET + " ", max_size=120)


class TestCaesar:
    def test_identity_shift(self):
        assert caesar_shift("HELLO", 0) == "HELLO"

    def test_full_cycle(self):
        assert caesar_shift("HELLO", 26) == "HELLO"

    def test_attack_shift_three(self):
        # hand lookup-table oracle: A->D, T->W, C->F, K->N
        assert caesar_shift("ATTACK", 3) == "DWWDFN"

    def test_spaces_pass_through(self):
        assert caesar_shift("MEET AT DAWN", 1) == "NFFU BU EBXO"

    def test_negative_and_large_shifts_reduce_mod_26(self):
        assert caesar_shift("ABC", -1) == "ZAB"
        assert caesar_shift("ABC", 29) == caesar_shift("ABC", 3)

    @pytest.mark.parametrize("bad", ["hello", "A1B", "A-Z", "é"])
    def test_rejects_unnormalized_input(self, bad):
        with pytest.raises(ValueError):
            caesar_shift(bad, 3)

    @given(texts, st.integers(-100, 100))
    def test_round_trip(self, text, shift):
        assert caesar_shift(caesar_shift(text, shift), -shift) == text


class TestSubstitution:
    def test_identity_key(self):
        key = SubstitutionKey.identity()
        assert substitution_apply("THE QUICK FOX", key) == "THE QUICK FOX"

    def test_rot13_self_inverse(self):
        # composing the mapping with itself gives the identity table
        rot13 = SubstitutionKey.from_shift(13)
        composed = substitution_apply(rot13.table, rot13)
        assert composed == ALPHABET
        assert substitution_apply(substitution_apply("WARGAMES", rot13), rot13) == "WARGAMES"

    def test_atbash_mapping_table(self):
        atbash = SubstitutionKey(ALPHABET[::-1])
        assert substitution_apply("AB", atbash) == "ZY"

    def test_invert_round_trip(self):
        key = SubstitutionKey("QWERTYUIOPASDFGHJKLZXCVBNM")
        assert substitution_apply(substitution_apply("SECRET MESSAGE", key), key.invert()) == "SECRET MESSAGE"
        assert substitution_invert(key) == key.invert()

    @pytest.mark.parametrize("table", ["ABC", "A" * 26, ALPHABET[:-1] + "A"])
    def test_rejects_non_bijective_key(self, table):
        with pytest.raises(ValueError):
            SubstitutionKey(table)

    @given(texts, st.randoms(use_true_random=False))
    def test_round_trip_random_keys(self, text, rnd):
        letters = list(ALPHABET)
        rnd.shuffle(letters)
        key = SubstitutionKey("".join(letters))
        assert substitution_apply(substitution_apply(text, key), key.invert()) == text


class TestTransposition:
    def test_single_column_identity(self):
        key = TranspositionKey((0,))
        assert transposition_encrypt("ANYTHING", key) == "ANYTHING"
        assert transposition_decrypt("ANYTHING", key) == "ANYTHING"

    def test_hand_grid_oracle(self):
        # 5x3 grid of WEAREDISCOVERED; columns WRIOR / EESVE / ADCED read as [2,0,1]
        key = TranspositionKey((2, 0, 1))
        assert transposition_encrypt("WEAREDISCOVERED", key) == "ADCEDWRIOREESVE"
        assert transposition_decrypt("ADCEDWRIOREESVE", key) == "WEAREDISCOVERED"

    def test_pads_with_x(self):
        key = TranspositionKey((1, 0))
        assert transposition_encrypt("ABC", key) == "BXAC"
        assert transposition_decrypt("BXAC", key) == "ABCX"

    def test_round_trip_500_random_cases(self):
        rng = random.Random(2024)
        for _ in range(500):
            k = rng.randint(1, 8)
            order = list(range(k))
            rng.shuffle(order)
            key = TranspositionKey(tuple(order))
            n = rng.randint(1, 10) * k
            text = "".join(rng.choice(ALPHABET) for _ in range(n))
            assert transposition_decrypt(transposition_encrypt(text, key), key) == text

    def test_rejects_empty_key(self):
        with pytest.raises(ValueError):
            TranspositionKey(())

    def test_rejects_wide_key(self):
        with pytest.raises(ValueError):
            TranspositionKey(tuple(range(13)))

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            TranspositionKey((0, 0, 1))

    def test_decrypt_rejects_ragged_length(self):
        with pytest.raises(ValueError):
            transposition_decrypt("ABCDE", TranspositionKey((1, 0)))
