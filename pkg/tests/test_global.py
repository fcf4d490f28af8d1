"""Global kernel computation, candidate place finding, and reciprocity."""

import random
from fractions import Fraction

import pytest

import chatelet.globalchow
from chatelet import (
    ContradictionError,
    FactorizationError,
    Subgroup3,
    candidate_places,
    global_chow,
    kernel_dimension,
    reciprocity_check,
)

# 1000003 * 1000033; both factors exceed the default trial division bound
HARD_COMPOSITE = 1000036000099


class TestCandidatePlaces:
    def test_unit_d(self):
        assert candidate_places(-1, 0, 1, 2) == ["real", 2]

    def test_prime_d_contributes(self):
        assert candidate_places(17, 0, 1, 2) == ["real", 2, 17]

    def test_square_d_gives_no_places(self):
        assert candidate_places(4, 0, 1, 2) == []
        assert candidate_places(Fraction(49, 4), 0, 1, 2) == []

    def test_denominators_contribute(self):
        assert candidate_places(Fraction(1, 3), 0, Fraction(1, 5), 2) == [
            "real",
            2,
            3,
            5,
        ]

    def test_root_differences_contribute(self):
        # 9 - 2 = 7 brings in p = 7 even though d and the roots avoid it
        assert 7 in candidate_places(-1, 2, 9, 1)

    def test_zero_d_rejected(self):
        with pytest.raises(ValueError):
            candidate_places(0, 0, 1, 2)

    def test_unfactorable_d(self):
        with pytest.raises(FactorizationError):
            candidate_places(HARD_COMPOSITE, 0, 1, 2)

    def test_trial_division_bound_override(self, monkeypatch):
        from chatelet.factorint import factorize

        monkeypatch.setenv("CHOW_TRIAL_DIVISION_BOUND", "2000000")
        assert factorize(HARD_COMPOSITE) == {1000003: 1, 1000033: 1}


class TestKernelDimension:
    def test_two_places_overlap(self):
        real = Subgroup3.span([(0, 1, 1)])
        dyadic = Subgroup3.span([(1, 0, 1), (0, 1, 1)])
        assert kernel_dimension([real, dyadic]) == 1

    def test_no_subgroups(self):
        assert kernel_dimension([]) == 0

    def test_single_place_has_trivial_kernel(self):
        assert kernel_dimension([Subgroup3.span([(1, 0, 1), (0, 1, 1)])]) == 0

    def test_identical_places_share_everything(self):
        sub = Subgroup3.span([(1, 0, 1), (0, 1, 1)])
        assert kernel_dimension([sub, sub]) == 2
        assert kernel_dimension([sub, sub, sub]) == 4

    def test_zero_basis_vector_rejected(self):
        with pytest.raises(ValueError, match="independent"):
            kernel_dimension([Subgroup3(((0, 0, 0),))])

    def test_dependent_basis_rejected(self):
        with pytest.raises(ValueError, match="independent"):
            kernel_dimension([Subgroup3(((0, 1, 1), (0, 1, 1)))])

    def test_non_sum_zero_rejected(self):
        with pytest.raises(ValueError, match="sum to zero"):
            kernel_dimension([Subgroup3(((1, 0, 0),))])


class TestGlobalChow:
    def test_unit_disc_frozen(self):
        rep = global_chow(-1, 0, 1, 2, rng=random.Random(7))
        assert rep.kernel_dim == 1
        assert rep.group == "(Z/2)^1"
        assert rep.place_orders == {"real": 2, 2: 4}
        assert rep.checked_places == ("real", 2)
        assert len(rep.sampled_primes) == 20
        assert all(p not in (2,) for p in rep.sampled_primes)

    def test_square_d_shortcut(self):
        rep = global_chow(4, 0, 1, 2)
        assert rep.kernel_dim == 0
        assert rep.local_reports == ()
        assert rep.checked_places == ()
        assert rep.sampled_primes == ()
        assert rep.group == "(Z/2)^0"

    def test_rational_square_shortcut(self):
        assert global_chow(Fraction(49, 4), 0, 1, 2).kernel_dim == 0

    def test_prime_d_trivial_kernel(self):
        rep = global_chow(17, 0, 1, 2, sample_primes=0)
        assert rep.kernel_dim == 0
        assert rep.place_orders == {17: 4}

    def test_d_two_trivial_kernel(self):
        rep = global_chow(2, 0, 1, 2, sample_primes=0)
        assert rep.kernel_dim == 0
        assert rep.place_orders == {2: 4}

    def test_three_place_overlap(self):
        rep = global_chow(-1, 0, 1, 9, sample_primes=0)
        assert rep.kernel_dim == 1
        assert rep.place_orders == {"real": 2, 2: 2, 3: 2}
        by_place = {r.place: r for r in rep.local_reports}
        assert by_place["real"].subgroup.basis == ((0, 1, 1),)
        assert by_place[2].case_label == "Prop3-i"
        assert by_place[2].subgroup.basis == ((0, 1, 1),)
        assert by_place[3].case_label == "Prop1-ii"
        assert by_place[3].subgroup.basis == ((1, 0, 1),)

    def test_rng_reproducible(self):
        a = global_chow(-1, 0, 1, 2, rng=random.Random(3))
        b = global_chow(-1, 0, 1, 2, rng=random.Random(3))
        assert a == b

    def test_sample_primes_zero(self):
        rep = global_chow(-1, 0, 1, 2, sample_primes=0)
        assert rep.sampled_primes == ()
        assert rep.kernel_dim == 1

    def test_zero_d_rejected(self):
        with pytest.raises(ValueError):
            global_chow(0, 0, 1, 2)

    def test_unfactorable_d(self):
        with pytest.raises(FactorizationError):
            global_chow(HARD_COMPOSITE, 0, 1, 2)

    def test_missing_candidate_place_is_caught(self, monkeypatch):
        # Hide p=3 from the candidate list; the trivial-at-sampled-primes
        # audit must notice the nontrivial local group there.
        monkeypatch.setattr(
            chatelet.globalchow,
            "candidate_places",
            lambda d, c1, c2, c3: ["real", 2],
        )

        class Pick3:
            @staticmethod
            def sample(pool, k):
                assert 3 in pool
                return [3]

        with pytest.raises(ContradictionError) as exc:
            global_chow(-1, 0, 1, 9, sample_primes=1, rng=Pick3())
        assert exc.value.enumerated_order == 2


class TestReciprocity:
    def test_minus_one_pair(self):
        rep = reciprocity_check(-1, -1)
        assert rep.symbols == {"real": 1, 2: 1}
        assert rep.total == 0
        assert rep.ok

    def test_two_five(self):
        rep = reciprocity_check(2, 5)
        assert rep.symbols == {"real": 0, 2: 1, 5: 1}
        assert rep.ok

    @pytest.mark.parametrize(
        "a,b",
        [(3, 5), (-7, 15), (Fraction(2, 3), Fraction(-5, 7)), (30, -42)],
    )
    def test_always_balances(self, a, b):
        assert reciprocity_check(a, b).ok

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            reciprocity_check(0, 5)
