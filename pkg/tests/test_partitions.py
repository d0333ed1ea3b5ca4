from math import factorial

import pytest

from triharm.partitions import (
    character_value,
    conjugacy_classes,
    conjugate,
    cycle_type_representative,
    multinomial,
    num_standard_tableaux,
    partitions_of,
    z_of,
)


def brute_partitions(n):
    """Independent enumeration by exhaustive search over bounded tuples."""
    if n == 0:
        return {()}
    out = set()

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.add(tuple(prefix))
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], n, n)
    return out


def brute_syt_count(lam):
    """Standard tableaux by explicit backtracking."""
    n = sum(lam)
    if n == 0:
        return 1
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling = {}

    def rec(k):
        if k == n:
            return 1
        total = 0
        for (i, j) in cells:
            if (i, j) in filling:
                continue
            if j > 0 and (i, j - 1) not in filling:
                continue
            if i > 0 and (i - 1, j) not in filling:
                continue
            filling[(i, j)] = k
            total += rec(k + 1)
            del filling[(i, j)]
        return total

    return rec(0)


def test_partitions_of_basics():
    assert partitions_of(0) == ((),)
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("n", range(0, 9))
def test_partitions_of_complete_and_ordered(n):
    parts = partitions_of(n)
    assert set(parts) == brute_partitions(n)
    assert len(set(parts)) == len(parts)
    # reverse-lexicographic: strictly decreasing as tuples
    assert all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def test_z_of():
    assert z_of((1, 1, 1, 1)) == factorial(4)
    assert z_of((2, 1)) == 2
    assert z_of((3,)) == 3
    for n in range(1, 7):
        assert sum(factorial(n) // z_of(lam) for lam in partitions_of(n)) == factorial(n)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    for n in range(0, 8):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_multinomial():
    assert multinomial(3, (3,)) == 1
    assert multinomial(3, (1, 1, 1)) == 6
    assert multinomial(3, (2, 1)) == 3
    with pytest.raises(ValueError):
        multinomial(3, (2, 2))


def test_character_trivial_and_sign():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert character_value((n,), mu) == 1
            assert character_value((1,) * n, mu) == (-1) ** (n - len(mu))


def test_character_dimension_is_tableau_count():
    for n in range(1, 7):
        for lam in partitions_of(n):
            f = num_standard_tableaux(lam)
            assert f == brute_syt_count(lam)
            assert character_value(lam, (1,) * n) == f


def test_character_against_powersum_expansion():
    """p_mu = sum over lam of chi^lam(mu) s_lam; the right side is an
    independent route through monomial expansions and Kostka
    elimination."""
    from triharm.symfunc import SymFunc

    for n in range(1, 7):
        for mu in partitions_of(n):
            schur = SymFunc.basis_element("p", mu).in_basis("s")
            for lam in partitions_of(n):
                assert schur.coefficient(lam) == character_value(lam, mu), (lam, mu)


def test_character_orthogonality():
    for n in range(1, 6):
        classes = conjugacy_classes(n)
        for l1 in partitions_of(n):
            for l2 in partitions_of(n):
                dot = sum(
                    size * character_value(l1, mu) * character_value(l2, mu)
                    for mu, size in classes
                )
                assert dot == (factorial(n) if l1 == l2 else 0)


def test_cycle_type_representative():
    perm = cycle_type_representative((3, 2))
    # orbits sizes are the cycle type
    seen, sizes = set(), []
    for start in range(5):
        if start in seen:
            continue
        size, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            size += 1
        sizes.append(size)
    assert sorted(sizes, reverse=True) == [3, 2]
