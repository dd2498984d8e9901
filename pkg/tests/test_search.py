"""Winner search: dynamic programs, repeatable windows, symmetry, certificates."""

import json
import random

import pytest

from germpack import (
    GREATER,
    LESS,
    REPEATABLE_WINDOW,
    SYMMETRIC_OFFSET,
    TWO_BLOCK_INDUCTION,
    Certificate,
    DistanceSet,
    IntPolynomial,
    RationalSet,
    SearchBudget,
    best_string,
    brute_best,
    brute_best_periodic,
    certify_two_block,
    dp_start,
    dp_step,
    find_repeatable_winner,
    find_winner,
    is_repeatable,
    poly_germ_compare,
    set_compare,
    symmetric_winner,
    symmetry_offset,
)
from helpers import all_distance_sets, random_bits

D35 = DistanceSet.of(3, 5)

# known germ-maximal avoiding strings, (distances, length) -> string
CATALOG = {
    ((3, 5), 6): "111000",
    ((3, 5), 8): "10101010",
    ((1, 3, 4), 7): "1010000",
    ((2, 3, 5), 7): "1100000",
    ((2, 3, 6), 9): "110001000",
    ((2, 3, 7), 10): "1100011000",
    ((3, 4, 7), 10): "1110000000",
    ((1, 2, 6), 7): "1001000",
    ((1, 2, 9), 10): "1001001000",
}


class TestBestString:
    @pytest.mark.parametrize("key,want", sorted(CATALOG.items()))
    def test_catalog(self, key, want):
        dset, length = key
        assert best_string(DistanceSet.of(*dset), length) == want

    def test_empty_distances_give_all_ones(self):
        assert best_string(DistanceSet(), 5) == "11111"

    def test_agrees_with_oracle_on_small_cases(self):
        for distances in all_distance_sets(4):
            for length in range(1, 11):
                assert best_string(distances, length) == brute_best(distances, length)

    def test_agrees_with_oracle_at_length_twenty(self):
        # lengths 19..20 for every distance set inside {1..6}; the acceptance
        # suite covers all lengths up to 18
        for distances in all_distance_sets(6):
            for length in (19, 20):
                assert best_string(distances, length) == brute_best(distances, length)

    def test_length_must_be_positive(self):
        with pytest.raises(ValueError):
            best_string(D35, 0)


class TestPrefixExtension:
    def test_greater_prefix_stays_greater(self):
        # germ order on equal-length strings survives any common extension
        rng = random.Random(31)
        for _ in range(500):
            n = rng.randrange(1, 20)
            a, b = random_bits(rng, n), random_bits(rng, n)
            x = random_bits(rng, rng.randrange(0, 12))
            before = poly_germ_compare(IntPolynomial.from_bits(a), IntPolynomial.from_bits(b))
            after = poly_germ_compare(
                IntPolynomial.from_bits(a + x), IntPolynomial.from_bits(b + x)
            )
            assert before == after


class TestDpTable:
    def test_stage_one_bests(self):
        assert dp_start(D35, 6).best() == "111000"
        assert dp_start(D35, 8).best() == "10101010"

    def test_step_grows_by_block_length(self):
        table = dp_start(D35, 6)
        stepped = dp_step(table)
        assert stepped.stage == 2
        assert all(len(s) == 12 and s.endswith(k) for k, s in stepped.entries.items())
        assert stepped.best() == best_string(D35, 12)

    def test_empty_distances(self):
        table = dp_step(dp_step(dp_start(DistanceSet(), 1)))
        assert table.best() == "111"

    def test_entries_stay_avoiding_and_optimal(self):
        from germpack import enumerate_avoiding, is_avoiding

        d = DistanceSet.of(1, 3)
        table = dp_step(dp_step(dp_start(d, 4)))
        assert table.stage == 3
        for suffix, bits in table.entries.items():
            assert is_avoiding(bits, d)
            assert bits.endswith(suffix)
            # no avoiding string of the same length with the same suffix beats it
            poly = IntPolynomial.from_bits(bits)
            for rival in enumerate_avoiding(d, 12):
                if rival.endswith(suffix):
                    assert poly_germ_compare(IntPolynomial.from_bits(rival), poly) != GREATER

    def test_block_length_must_exceed_norm(self):
        with pytest.raises(ValueError):
            dp_start(D35, 5)


class TestRepeatable:
    def test_alternating_window_repeats(self):
        assert is_repeatable("10101010", D35)

    def test_run_window_does_not(self):
        assert not is_repeatable("111000", D35)

    def test_single_one_per_period(self):
        assert is_repeatable("100", DistanceSet.of(1, 2))

    def test_short_window_rejected(self):
        with pytest.raises(ValueError):
            is_repeatable("10101", D35)


class TestFindRepeatableWinner:
    def test_three_five(self):
        cert = find_repeatable_winner(D35, 8)
        assert cert is not None and cert.kind == REPEATABLE_WINDOW
        assert cert.evidence == {"window_length": 8, "window": "10101010"}
        assert cert.winner == RationalSet("", "10")

    def test_two_three_six(self):
        cert = find_repeatable_winner(DistanceSet.of(2, 3, 6), 9)
        assert cert is not None
        assert cert.winner == RationalSet("", "110001000")

    def test_absent_for_nonperiodic_winner(self):
        assert find_repeatable_winner(DistanceSet.of(2, 4, 7), 12) is None

    def test_window_bound_validated(self):
        with pytest.raises(ValueError):
            find_repeatable_winner(D35, 5)


class TestSymmetry:
    def test_offset_examples(self):
        assert symmetry_offset(DistanceSet.of(1, 3, 6, 8)) == 9
        assert symmetry_offset(DistanceSet.of(1, 2, 5)) is None
        assert symmetry_offset(DistanceSet.of(2, 4, 7)) is None
        for k in (2, 3, 5, 8):
            assert symmetry_offset(DistanceSet.of(*range(1, k))) == k

    def test_offset_needs_nonempty_distances(self):
        with pytest.raises(ValueError):
            symmetry_offset(DistanceSet())

    def test_circulant_winner(self):
        cert = symmetric_winner(DistanceSet.of(1, 3, 6, 8))
        assert cert is not None and cert.kind == SYMMETRIC_OFFSET
        assert cert.evidence["offset"] == 9
        assert cert.winner == RationalSet("", "101010000")
        # residues 0, 2, 4 mod 9
        assert sorted(cert.winner.elements(18)) == [0, 2, 4, 9, 11, 13]

    def test_full_block_winner(self):
        cert = symmetric_winner(DistanceSet.of(1, 2))
        assert cert is not None
        assert cert.winner == RationalSet("", "100")

    def test_absent_without_offset(self):
        assert symmetric_winner(DistanceSet.of(2, 4, 7)) is None


class TestTwoBlock:
    def test_certifies_2_4_7(self):
        cert = certify_two_block(DistanceSet.of(2, 4, 7), "110000", "100100")
        assert cert is not None and cert.kind == TWO_BLOCK_INDUCTION
        assert cert.winner == RationalSet("110000", "100100")
        assert cert.winner == RationalSet("1100", "001")  # canonical form

    def test_certifies_2_4_13(self):
        cert = certify_two_block(DistanceSet.of(2, 4, 13), "110000" * 2, "100100" * 2)
        assert cert is not None
        assert cert.winner == RationalSet("110000" * 2, "100100" * 2)

    def test_degenerate_periodic_blocks(self):
        cert = certify_two_block(D35, "10101010", "10101010")
        assert cert is not None
        assert cert.winner == RationalSet("", "10")

    def test_wrong_blocks_fail_quietly(self):
        assert certify_two_block(DistanceSet.of(2, 4, 7), "110000", "000000") is None
        assert certify_two_block(DistanceSet.of(2, 4, 7), "100100", "100100") is None

    def test_malformed_blocks_raise(self):
        with pytest.raises(ValueError):
            certify_two_block(D35, "10101010", "1010")
        with pytest.raises(ValueError):
            certify_two_block(D35, "", "")
        with pytest.raises(ValueError):
            certify_two_block(D35, "10010000", "10101010")  # left block clashes


class TestFindWinner:
    def test_three_five_gives_evens(self):
        result = find_winner(D35)
        assert result.found
        assert result.certificate.winner == RationalSet("", "10")

    def test_two_four_seven_needs_two_blocks(self):
        result = find_winner(DistanceSet.of(2, 4, 7))
        assert result.certificate.kind == TWO_BLOCK_INDUCTION
        assert result.certificate.winner == RationalSet("110000", "100100")

    def test_empty_distances_give_naturals(self):
        result = find_winner(DistanceSet())
        assert result.certificate.winner == RationalSet.naturals()

    def test_inconclusive_is_reported_not_invented(self):
        result = find_winner(DistanceSet.of(4, 7, 11), SearchBudget(max_window=20, max_block=12))
        assert result.certificate is None
        assert len(result.attempts) == 3

    def test_strategies_name_the_same_winner(self):
        # any two certificates for one distance set must agree on the set
        for dset in [(3, 5), (1, 2), (1, 3, 6, 8)]:
            distances = DistanceSet.of(*dset)
            winners = set()
            cert = symmetric_winner(distances)
            if cert:
                winners.add(cert.winner)
            cert = find_repeatable_winner(distances, 4 * distances.norm)
            if cert:
                winners.add(cert.winner)
            size = len(cert.evidence["window"])
            doubled = best_string(distances, 2 * size)
            if doubled[:size] == cert.evidence["window"]:
                two = certify_two_block(distances, doubled[:size], doubled[size:])
                if two:
                    winners.add(two.winner)
            assert len(winners) == 1


class TestWinnerIntegration:
    def test_small_distance_sets_certify_and_dominate_periodic_rivals(self):
        # every D inside {1..5} certifies once the window budget is raised,
        # and each winner dominates every periodic avoiding set of period <= 8
        budget = SearchBudget(max_window=48)
        for distances in all_distance_sets(5):
            result = find_winner(distances, budget)
            assert result.certificate is not None, distances
            assert result.certificate.verify()
            rival = brute_best_periodic(distances, 8)
            assert set_compare(result.certificate.winner, rival) != LESS

    def test_certifying_window_can_sit_past_the_pair_sums(self):
        # for {2,4,5} no window up to 20 repeats (pair sums stop at 10), yet
        # the window of length 21 is (100)^7 and certifies the multiples of 3
        distances = DistanceSet.of(2, 4, 5)
        assert find_repeatable_winner(distances, 20) is None
        cert = find_repeatable_winner(distances, 21)
        assert cert is not None
        assert cert.evidence == {"window_length": 21, "window": "100" * 7}
        assert cert.winner == RationalSet("", "100")

    def test_resistant_set_stays_inconclusive(self):
        # {1,5,6}: best windows front-load and never repeat; the two-block
        # facts fail for every block split, so the honest answer is "unknown"
        result = find_winner(
            DistanceSet.of(1, 5, 6), SearchBudget(max_window=48, max_block=14)
        )
        assert result.certificate is None
        assert len(result.attempts) == 3


class TestCertificate:
    def _all_certificates(self):
        return [
            find_winner(DistanceSet.of(*d)).certificate
            for d in [(3, 5), (1, 3, 6, 8), (1, 2), (2, 4, 7), (2, 4, 13)]
        ]

    def test_verify_from_evidence_alone(self):
        for cert in self._all_certificates():
            assert cert.verify()

    def test_json_round_trip(self):
        for cert in self._all_certificates():
            data = json.loads(json.dumps(cert.to_json_dict()))
            again = Certificate.from_json_dict(data)
            assert again.kind == cert.kind
            assert again.winner == cert.winner
            assert again.distances == cert.distances
            assert again.verify()

    def test_tampered_certificates_fail(self):
        cert = find_winner(D35).certificate
        data = cert.to_json_dict()

        wrong_winner = dict(data, winner={"preperiod": "", "repetend": "01"})
        assert not Certificate.from_json_dict(wrong_winner).verify()

        wrong_window = dict(data, evidence={"offset": 8, "window": "10101000"})
        assert not Certificate.from_json_dict(wrong_window).verify()

        wrong_kind = dict(data, kind=TWO_BLOCK_INDUCTION, evidence={"block_a": "111000", "block_b": "000000"})
        assert not Certificate.from_json_dict(wrong_kind).verify()

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Certificate("Handwave", D35, RationalSet("", "10"), {})

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            Certificate.from_json_dict({"kind": REPEATABLE_WINDOW})
