import itertools
from collections import Counter

import pytest

from narayana.dyck import DyckPath, descent_set, enumerate_paths, random_path
from narayana.posets import (
    FinitePoset,
    GradedBoundedPoset,
    alpha_table,
    chain_product_2xn,
    extension_to_path,
    flag_f,
    flag_h,
    flag_h_table,
    ideal_lattice,
    is_linear_extension,
    jordan_holder,
    linear_extensions,
    path_to_extension,
    permutation_descents,
    verify_theorem_main,
)
from narayana.qpoly import catalan, narayana


def chain(k: int) -> FinitePoset:
    return FinitePoset(range(k), [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> FinitePoset:
    return FinitePoset(range(k), [])


def brute_alpha(L, S: frozenset[int]) -> int:
    # oracle: test every subset of the proper part for being a chain with
    # rank set exactly S
    proper = [
        e for e in L.elements if 0 < L.rank(e) < L.top_rank
    ]
    count = 0
    for size in range(len(proper) + 1):
        for combo in itertools.combinations(proper, size):
            if {L.rank(e) for e in combo} != S or len(combo) != len(S):
                continue
            if all(
                L.leq(a, b) or L.leq(b, a)
                for a, b in itertools.combinations(combo, 2)
            ):
                count += 1
    return count


def test_finite_poset_basics():
    P = chain_product_2xn(2)
    assert P.p == 4
    assert len(P.covers) == 4
    assert P.leq((1, 1), (2, 2))
    assert P.leq((1, 1), (1, 1))
    assert not P.leq((2, 1), (1, 2))
    assert not P.less((1, 1), (1, 1))
    assert P.minimal_elements == ((1, 1),)
    assert P.maximal_elements == ((2, 2),)
    assert sorted(P.upper_covers((1, 1))) == [(1, 2), (2, 1)]
    assert sorted(P.lower_covers((2, 2))) == [(1, 2), (2, 1)]


def test_finite_poset_rejects_bad_input():
    with pytest.raises(ValueError, match="duplicate element"):
        FinitePoset([1, 1], [])
    with pytest.raises(ValueError, match="not an element"):
        FinitePoset([1, 2], [(1, 3)])
    with pytest.raises(ValueError, match="cycle"):
        FinitePoset([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(ValueError, match="cycle"):
        FinitePoset([1], [(1, 1)])
    with pytest.raises(ValueError, match="implied by others"):
        FinitePoset([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


def test_graded_bounded_validation():
    with pytest.raises(ValueError, match="unique minimum"):
        GradedBoundedPoset([1, 2], [])
    with pytest.raises(ValueError, match="unique maximum"):
        GradedBoundedPoset([0, 1, 2], [(0, 1), (0, 2)])
    with pytest.raises(ValueError, match="not graded"):
        GradedBoundedPoset(
            "abcde",
            [("a", "b"), ("b", "c"), ("c", "d"), ("a", "e"), ("e", "d")],
        )
    diamond = GradedBoundedPoset([0, 1, 2, 3], [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert diamond.zero_hat == 0
    assert diamond.one_hat == 3
    assert diamond.top_rank == 2
    assert diamond.elements_of_rank(1) == [1, 2]


def test_chain_product_shape():
    with pytest.raises(ValueError):
        chain_product_2xn(0)
    P1 = chain_product_2xn(1)
    assert P1.p == 2 and len(P1.covers) == 1
    P4 = chain_product_2xn(4)
    assert P4.p == 8
    assert P4.leq((1, 2), (2, 3))
    assert not P4.leq((2, 1), (1, 4)) and not P4.leq((1, 4), (2, 1))


def test_ideal_lattice_counts():
    assert ideal_lattice(antichain(2)).p == 4
    for n in range(1, 6):
        L = ideal_lattice(chain_product_2xn(n))
        assert L.p == (n + 1) * (n + 2) // 2
        assert L.zero_hat == frozenset()
        assert L.one_hat == frozenset(chain_product_2xn(n).elements)
        assert L.top_rank == 2 * n
        for ideal in L.elements:
            assert L.rank(ideal) == len(ideal)


def test_ideal_lattice_ideals_are_down_closed():
    base = chain_product_2xn(3)
    L = ideal_lattice(base)
    for ideal in L.elements:
        for e in ideal:
            for x in base.elements:
                if base.leq(x, e):
                    assert x in ideal


def test_linear_extension_counts():
    assert len(linear_extensions(chain(3))) == 1
    assert len(linear_extensions(antichain(3))) == 6
    for n in range(1, 7):
        assert len(linear_extensions(chain_product_2xn(n))) == catalan(n)


def test_linear_extensions_guard():
    with pytest.raises(ValueError, match="too large"):
        linear_extensions(antichain(17))


def test_is_linear_extension():
    P = chain_product_2xn(2)
    assert is_linear_extension(P, [(1, 1), (1, 2), (2, 1), (2, 2)])
    assert not is_linear_extension(P, [(1, 2), (1, 1), (2, 1), (2, 2)])
    assert not is_linear_extension(P, [(1, 1), (1, 2), (2, 1)])


def test_jordan_holder_small():
    assert jordan_holder(chain(3), (0, 1, 2)) == [(1, 2, 3)]
    assert sorted(jordan_holder(antichain(2), (0, 1))) == [(1, 2), (2, 1)]
    with pytest.raises(ValueError, match="not a linear extension"):
        jordan_holder(chain(3), (2, 1, 0))


def test_jordan_holder_descent_counts():
    P = chain_product_2xn(3)
    omega = path_to_extension(DyckPath("vvvhhh"))
    pis = jordan_holder(P, omega)
    counts = Counter(len(permutation_descents(pi)) for pi in pis)
    assert counts == {0: 1, 1: 3, 2: 1}


def test_permutation_descents():
    assert permutation_descents((1, 2, 3)) == frozenset()
    assert permutation_descents((3, 1, 2)) == {1}
    assert permutation_descents((2, 4, 1, 3)) == {2}


def test_flag_f_frozen():
    L = ideal_lattice(chain_product_2xn(2))
    assert flag_f(L, []) == 1
    assert flag_f(L, {2}) == 2
    L3 = ideal_lattice(chain_product_2xn(3))
    assert flag_f(L3, range(1, 6)) == catalan(3)
    for n in range(1, 5):
        L = ideal_lattice(chain_product_2xn(n))
        assert flag_f(L, range(1, 2 * n)) == catalan(n)


def test_flag_f_matches_brute_force():
    for n in (2, 3):
        L = ideal_lattice(chain_product_2xn(n))
        for size in range(2 * n):
            for S in itertools.combinations(range(1, 2 * n), size):
                assert flag_f(L, S) == brute_alpha(L, frozenset(S)), S


def test_flag_f_rank_out_of_range():
    L = ideal_lattice(chain_product_2xn(2))
    with pytest.raises(ValueError, match="rank out of range"):
        flag_f(L, {0})
    with pytest.raises(ValueError, match="rank out of range"):
        flag_f(L, {4})
    with pytest.raises(ValueError, match="rank out of range"):
        flag_h(L, {-1})


def test_flag_h_values():
    L = ideal_lattice(chain_product_2xn(3))
    assert flag_h(L, []) == 1
    assert flag_h(L, {1}) == 0
    # beta({3}) = alpha({3}) - alpha({}) = 2 - 1; the sole path with
    # descent set {3} is vvhvhh, and the sole chain witness is the ideal
    # pair column-sums (2,1) versus (3,0)
    assert flag_h(L, {3}) == 1
    assert sum(
        flag_h(L, S)
        for size in range(6)
        for S in itertools.combinations(range(1, 6), size)
    ) == catalan(3)


def test_flag_h_matches_descent_counts():
    for n in range(1, 5):
        L = ideal_lattice(chain_product_2xn(n))
        buckets = Counter(descent_set(w) for w in enumerate_paths(n))
        for size in range(2 * n):
            for S in itertools.combinations(range(1, 2 * n), size):
                assert flag_h(L, S) == buckets.get(frozenset(S), 0)


def test_tables_match_pointwise_ops():
    for n in (2, 3, 4):
        L = ideal_lattice(chain_product_2xn(n))
        alphas = alpha_table(L)
        betas = flag_h_table(L)
        assert len(alphas) == len(betas) == 1 << (2 * n - 1)
        for S in alphas:
            assert alphas[S] == flag_f(L, S)
            assert betas[S] == flag_h(L, S)


def test_narayana_from_flag_h():
    for n in range(1, 5):
        betas = flag_h_table(ideal_lattice(chain_product_2xn(n)))
        assert all(b >= 0 for b in betas.values())
        by_size = Counter()
        for S, b in betas.items():
            by_size[len(S)] += b
        for k in range(n):
            assert by_size[k] == narayana(n, k)


def test_extension_path_bijection_figure():
    sigma = ((1, 1), (1, 2), (2, 1), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4))
    assert extension_to_path(sigma).word == "vvhvvhhh"
    assert path_to_extension(DyckPath("vvhvvhhh")) == sigma


def test_extension_path_bijection_small():
    assert extension_to_path(((1, 1), (2, 1))).word == "vh"
    assert extension_to_path(
        ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3))
    ).word == "vvvhhh"
    for n in range(1, 6):
        for sigma in linear_extensions(chain_product_2xn(n)):
            assert path_to_extension(extension_to_path(sigma)) == sigma
        for w in enumerate_paths(n):
            assert extension_to_path(path_to_extension(w)) == w


def test_extension_to_path_rejects():
    with pytest.raises(ValueError, match="not a linear extension"):
        extension_to_path(((2, 1), (1, 1)))
    with pytest.raises(ValueError, match="not a linear extension"):
        extension_to_path(((1, 1), (1, 2), (2, 1)))


def test_verify_theorem_main_small():
    report = verify_theorem_main(1, DyckPath("vh"))
    assert report["passed"] is True
    assert report["entries"] == [
        {"s": [], "flag_h": 1, "paths": 1, "match": True},
        {"s": [1], "flag_h": 0, "paths": 0, "match": True},
    ]
    for word in ("vvvhhh", "vhvhvh"):
        report = verify_theorem_main(3, DyckPath(word))
        assert report["passed"] is True
        assert len(report["entries"]) == 32
        assert sum(e["flag_h"] for e in report["entries"]) == catalan(3)


def test_verify_theorem_main_random_reference_paths():
    for seed in range(5):
        W = random_path(4, seed)
        assert verify_theorem_main(4, W)["passed"] is True


def test_verify_theorem_main_guards():
    with pytest.raises(ValueError, match="too large"):
        verify_theorem_main(7, DyckPath("vh" * 7))
    with pytest.raises(ValueError, match="length mismatch"):
        verify_theorem_main(3, DyckPath("vh"))
    with pytest.raises(ValueError):
        verify_theorem_main(0, DyckPath(""))
