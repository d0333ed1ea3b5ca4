"""Integer partitions, compositions, and symmetric group characters.

Partitions and compositions are plain tuples of positive integers; a
partition is weakly decreasing.  All functions are pure and exact.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_composition(parts) -> bool:
    return all(p >= 1 for p in parts)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse-lexicographic order ((n) first, (1^n) last)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam: tuple[int, ...]) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def z_of(lam: tuple[int, ...]) -> int:
    """Centralizer order prod_i i^{d_i} d_i! for d_i parts of size i."""
    z = 1
    for part, d in multiplicities(lam).items():
        z *= part**d * factorial(d)
    return z


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def multinomial(n: int, comp: tuple[int, ...]) -> int:
    if sum(comp) != n:
        raise ValueError("composition weight mismatch")
    num = factorial(n)
    for c in comp:
        num //= factorial(c)
    return num


def sort_to_partition(values) -> tuple[int, ...]:
    """Drop zeros and sort decreasingly."""
    return tuple(sorted((v for v in values if v), reverse=True))


@lru_cache(maxsize=None)
def character_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible character chi^lam on the class of cycle type mu.

    Murnaghan-Nakayama recursion over border strips, using first-column
    hook lengths (beta-numbers): a strip of length t is removable at row
    i iff beta_i - t >= 0 and is not already a beta-number; its height is
    the number of beta-numbers strictly between beta_i - t and beta_i.
    """
    if sum(lam) != sum(mu):
        raise ValueError("weight mismatch")
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    betas = [lam[i] + (len(lam) - 1 - i) for i in range(len(lam))]
    beta_set = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = sorted([nb if j == i else c for j, c in enumerate(betas)], reverse=True)
        new_lam = tuple(
            c - (len(new_betas) - 1 - j) for j, c in enumerate(new_betas)
        )
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * character_value(new_lam, rest)
    return total


@lru_cache(maxsize=None)
def num_standard_tableaux(lam: tuple[int, ...]) -> int:
    """f_lam by the hook length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    num = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j + conj[j] - i - 1
    return num


def conjugacy_classes(n: int) -> list[tuple[tuple[int, ...], int]]:
    """Cycle types of S_n with class sizes n!/z_lam."""
    return [(lam, factorial(n) // z_of(lam)) for lam in partitions_of(n)]


def class_sign(mu: tuple[int, ...]) -> int:
    return (-1) ** (sum(mu) - len(mu))


def cycle_type_representative(mu: tuple[int, ...]) -> tuple[int, ...]:
    """A permutation of cycle type mu, as a 0-indexed image tuple."""
    n = sum(mu)
    perm = list(range(n))
    pos = 0
    for part in mu:
        for k in range(part):
            perm[pos + k] = pos + (k + 1) % part
        pos += part
    return tuple(perm)


def frac_str(x) -> str:
    """Canonical "num/den" form used in all JSON output."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
