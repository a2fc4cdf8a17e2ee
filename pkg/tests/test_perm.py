import itertools
import random

import pytest
from hypothesis import given, strategies as st

from strategies import perm_of, perms
from taskswap.errors import PermutationError, SizeMismatchError
from taskswap.perm import (
    Permutation,
    Transposition,
    apply_swap,
    compose,
    compose_all,
    cycle_permutation,
    disjoint_cycles,
    from_cycles,
    identity,
    inverse,
    inversion_number,
    transposition_permutation,
)

P = Permutation.of


def brute_inversions(p):
    m = p.mapping
    return sum(1 for i, j in itertools.combinations(range(len(m)), 2) if m[i] > m[j])


class TestConstruction:
    @pytest.mark.parametrize("n", [1, 4, 8])
    def test_identity(self, n):
        assert identity(n).mapping == tuple(range(1, n + 1))
        assert identity(n).is_identity()

    @pytest.mark.parametrize("bad", [(), (1, 1), (0, 1), (2, 3), (1, 2, 4)])
    def test_rejects_non_bijections(self, bad):
        with pytest.raises(PermutationError):
            Permutation(bad)

    def test_identity_needs_positive_n(self):
        with pytest.raises(PermutationError):
            identity(0)

    def test_call_is_one_based(self):
        p = P(3, 1, 2)
        assert [p(i) for i in (1, 2, 3)] == [3, 1, 2]
        with pytest.raises(PermutationError):
            p(0)

    def test_position_of(self):
        assert P(3, 1, 2).position_of(3) == 1

    def test_transposition_normalises(self):
        assert Transposition(5, 2) == Transposition(2, 5)
        assert Transposition(5, 2).to_list() == [2, 5]
        assert Transposition(2, 5).other(5) == 2

    @pytest.mark.parametrize("a,b", [(3, 3), (0, 2)])
    def test_bad_transposition(self, a, b):
        with pytest.raises(PermutationError):
            Transposition(a, b)


class TestAlgebra:
    def test_compose_line_example(self):
        assert compose(inverse(P(1, 6, 2, 3, 4, 5, 7, 8)), P(2, 5, 6, 3, 1, 4, 8, 7)) == P(3, 6, 2, 4, 1, 5, 8, 7)

    def test_compose_star_example(self):
        got = compose(inverse(P(5, 4, 2, 1, 6, 9, 7, 8, 3)), P(7, 8, 9, 2, 4, 5, 1, 6, 3))
        assert got == P(7, 8, 6, 3, 2, 1, 4, 5, 9)

    def test_inverse_examples(self):
        assert inverse(P(1, 2, 3, 4)) == P(1, 2, 3, 4)
        assert inverse(P(1, 6, 5, 2, 4, 3)) == P(1, 4, 6, 5, 3, 2)
        assert inverse(P(2, 1, 3)) == P(2, 1, 3)

    def test_compose_applies_right_factor_first(self):
        p, q = P(2, 3, 1), P(1, 3, 2)
        assert compose(p, q)(2) == p(q(2))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            compose(identity(3), identity(4))

    @given(perms())
    def test_identity_law(self, p):
        assert compose(p, identity(p.n)) == p == compose(identity(p.n), p)

    @given(perms())
    def test_inverse_law(self, p):
        assert compose(p, inverse(p)).is_identity()
        assert inverse(inverse(p)) == p

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(perm_of(n), perm_of(n), perm_of(n))))
    def test_associative(self, pqr):
        p, q, r = pqr
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    def test_compose_all_is_left_to_right(self):
        gs = [P(2, 1, 3), P(1, 3, 2)]
        assert compose_all(gs, 3) == compose(gs[0], gs[1])
        assert compose_all([], 4) == identity(4)


class TestSwaps:
    def test_apply_swap_examples(self):
        assert apply_swap(P(4, 2, 1, 3), Transposition(1, 2)) == P(2, 4, 1, 3)
        assert apply_swap(P(7, 5, 1, 4, 3, 2, 8, 6), Transposition(7, 8)) == P(7, 5, 1, 4, 3, 2, 6, 8)

    @given(perms(2, 8), st.data())
    def test_apply_swap_is_right_multiplication(self, p, data):
        a, b = data.draw(st.lists(st.integers(1, p.n), min_size=2, max_size=2, unique=True))
        t = Transposition(a, b)
        assert apply_swap(p, t) == compose(p, transposition_permutation(t, p.n))
        assert apply_swap(apply_swap(p, t), t) == p

    def test_swap_out_of_range(self):
        with pytest.raises(PermutationError):
            apply_swap(identity(3), Transposition(2, 4))


class TestCycles:
    def test_examples(self):
        d = disjoint_cycles(P(2, 1, 6, 3, 4, 5))
        assert d.cycles == ((1, 2), (3, 6, 5, 4)) and d.fixed_points == ()
        d = disjoint_cycles(P(1, 6, 5, 2, 4, 3))
        assert d.cycles == ((2, 6, 3, 5, 4),) and d.fixed_points == (1,)
        assert d.cycle_count_with_fixed == 2
        d = disjoint_cycles(identity(5))
        assert d.cycles == () and d.cycle_count_with_fixed == 5

    def test_str(self):
        assert str(disjoint_cycles(P(2, 1, 6, 3, 4, 5))) == "(1 2)(3 6 5 4)"
        assert str(disjoint_cycles(identity(3))) == "()"

    @given(perms(), st.randoms())
    def test_round_trip_in_any_order(self, p, rnd):
        cycles = list(disjoint_cycles(p).cycles)
        rnd.shuffle(cycles)
        assert from_cycles(cycles, p.n) == p

    @given(perms())
    def test_canonical_form(self, p):
        d = disjoint_cycles(p)
        assert all(c[0] == min(c) for c in d.cycles)
        assert [c[0] for c in d.cycles] == sorted(c[0] for c in d.cycles)
        assert d.n == p.n

    def test_cycle_permutation_validation(self):
        assert cycle_permutation((1, 3), 3) == P(3, 2, 1)
        with pytest.raises(PermutationError):
            cycle_permutation((1, 1), 3)
        with pytest.raises(PermutationError):
            cycle_permutation((1, 4), 3)


class TestInversions:
    def test_examples(self):
        assert inversion_number(identity(8)) == 0
        assert inversion_number(P(3, 6, 2, 4, 1, 5, 8, 7)) == 9

    @pytest.mark.parametrize("n", range(1, 9))
    def test_reverse_is_maximal(self, n):
        assert inversion_number(Permutation(tuple(range(n, 0, -1)))) == n * (n - 1) // 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_pair_count_exhaustively(self, n):
        for m in itertools.permutations(range(1, n + 1)):
            p = Permutation(m)
            assert inversion_number(p) == brute_inversions(p)

    def test_matches_pair_count_sampled(self):
        rng = random.Random(7)
        for _ in range(500):
            n = rng.randint(6, 7)
            m = list(range(1, n + 1))
            rng.shuffle(m)
            p = Permutation(tuple(m))
            assert inversion_number(p) == brute_inversions(p)

    @given(perms(2, 8), st.data())
    def test_adjacent_swap_changes_by_one(self, p, data):
        i = data.draw(st.integers(1, p.n - 1))
        delta = inversion_number(apply_swap(p, Transposition(i, i + 1))) - inversion_number(p)
        assert delta in (-1, 1)
