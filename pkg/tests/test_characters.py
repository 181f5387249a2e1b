import pytest

from detstrata import (
    IntegerWeight,
    MatrixSpace,
    enumerate_in_rectangle,
    lambda_extension,
    member_general,
    member_skew,
    member_symmetric,
    multiplicity,
)

from helpers import (
    decompose_into_schur,
    dominant_box,
    sym2_weights,
    sym_power_character,
    wedge2_weights,
)


def W(*entries):
    return IntegerWeight(entries)


class TestLambdaExtension:
    def test_examples(self):
        assert lambda_extension(W(3, 1), 1, 3) == W(2, 1, 1)
        assert lambda_extension(W(2, 2), 2, 2) == W(2, 2)

    def test_rejects_non_dominant_result(self):
        # splicing 0s after the entry 2 would need 0 >= 2
        with pytest.raises(ValueError):
            lambda_extension(W(2), 0, 2)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            lambda_extension(W(1, 0), 3, 4)  # s > n
        with pytest.raises(ValueError):
            lambda_extension(W(1, 0, 0), 1, 2)  # n > m


class TestMemberGeneral:
    def test_examples(self):
        for n in range(1, 4):
            for m in range(n, 5):
                assert member_general(IntegerWeight((m,) * n), m, 0)
                assert member_general(IntegerWeight((0,) * n), m, n)
        assert not member_general(W(0, 0), 3, 0)
        assert not member_general(W(0, 0, 0), 3, 0)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            member_general(W(0, 0), 2, 3)
        with pytest.raises(ValueError):
            member_general(W(0, 0), 2, -1)
        with pytest.raises(ValueError):
            member_general(W(0, 0, 0), 2, 0)  # n > m

    def test_accepted_weights_extend_dominantly(self):
        for n in range(1, 6):
            for m in range(n, 6):
                for entries in dominant_box(n):
                    w = IntegerWeight(entries)
                    for p in range(n + 1):
                        if member_general(w, m, p):
                            lambda_extension(w, n - p, m)  # must not raise


class TestMemberSymmetric:
    def test_examples(self):
        assert member_symmetric(W(0, 0), 2)
        assert member_symmetric(W(2, 0), 1)
        assert not member_symmetric(W(1, 1), 1)

    def test_rejects_bad_stratum(self):
        with pytest.raises(ValueError):
            member_symmetric(W(0, 0), 3)

    def test_full_space_stratum_matches_classical_decomposition(self):
        # Sym(Sym^2 C^n) = sum of S_mu over even mu; the stratum-n predicate
        # must accept exactly the duals of those mu.
        for n in range(1, 4):
            for d in range(5):
                mults = decompose_into_schur(sym_power_character(sym2_weights(n), d), n)
                assert all(c == 1 for c in mults.values())
                brute = set(mults)
                predicted = {
                    mu.parts
                    for mu in enumerate_in_rectangle(n, 2 * d, 2 * d)
                    if member_symmetric(mu.to_weight(n).dual(), n)
                }
                assert brute == predicted, (n, d)


class TestMemberSkew:
    def test_examples(self):
        assert member_skew(W(0, 0, 0, 0), 2)
        assert member_skew(W(2, 2, 1, 1), 1)
        assert member_skew(W(4, 4, 4, 4, 4), 0)

    def test_more_frozen_values(self):
        # values of the n = 4 pairing conditions at stratum 1:
        # needs w2 >= 1, w3 <= 2 and the pairing w1 = w2, w3 = w4
        assert member_skew(W(1, 1, 0, 0), 1)
        assert member_skew(W(3, 3, 2, 2), 1)
        assert not member_skew(W(2, 1, 1, 0), 1)
        assert not member_skew(W(2, 2, 2, 0), 1)
        assert not member_skew(W(3, 3, 3, 3), 1)

    def test_rejects_bad_stratum(self):
        with pytest.raises(ValueError):
            member_skew(W(0, 0, 0, 0), 3)

    def test_full_space_stratum_matches_classical_decomposition(self):
        # Sym(wedge^2 C^n) = sum of S_mu over mu with even columns
        for n in range(2, 6):
            for d in range(5):
                mults = decompose_into_schur(sym_power_character(wedge2_weights(n), d), n)
                assert all(c == 1 for c in mults.values())
                brute = set(mults)
                predicted = {
                    mu.parts
                    for mu in enumerate_in_rectangle(n, 2 * d, 2 * d)
                    if member_skew(mu.to_weight(n).dual(), n // 2)
                }
                assert brute == predicted, (n, d)


class TestDisjointness:
    def test_general(self):
        for n in range(1, 6):
            for m in range(n, 6):
                for entries in dominant_box(n):
                    w = IntegerWeight(entries)
                    hits = [p for p in range(n + 1) if member_general(w, m, p)]
                    assert len(hits) <= 1, (m, n, entries, hits)

    def test_symmetric(self):
        for n in range(1, 6):
            for entries in dominant_box(n):
                w = IntegerWeight(entries)
                hits = [p for p in range(n + 1) if member_symmetric(w, p)]
                assert len(hits) <= 1, (n, entries, hits)

    def test_skew(self):
        for n in range(2, 6):
            for entries in dominant_box(n):
                w = IntegerWeight(entries)
                hits = [p for p in range(n // 2 + 1) if member_skew(w, p)]
                assert len(hits) <= 1, (n, entries, hits)


class TestMultiplicity:
    def test_examples(self):
        assert multiplicity(MatrixSpace.general(2, 2), 2, W(0, 0)) == 1
        assert multiplicity(MatrixSpace.symmetric(2), 1, W(1, 1)) == 0
        assert multiplicity(MatrixSpace.skew(4), 2, W(0, 0, 0, 0)) == 1

    def test_rejects_mismatched_weight_length(self):
        with pytest.raises(ValueError):
            multiplicity(MatrixSpace.symmetric(3), 1, W(0, 0))

    def test_rejects_bad_stratum(self):
        with pytest.raises(ValueError):
            multiplicity(MatrixSpace.skew(4), 3, W(0, 0, 0, 0))
