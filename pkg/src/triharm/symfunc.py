"""Exact symmetric function arithmetic in the w-alphabet.

A SymFunc of degree d is a coefficient map over partitions of d in one
of the bases m, e, h, p, s.  The monomial basis is canonical: a basis
element of degree d is expanded by direct enumeration in exactly d
indeterminates (enough variables for degree d), and conversions back
out of the monomial basis use unitriangularity with respect to
dominance order.  Coefficients may be ints, Fractions, or QPoly3.

Fundamental quasisymmetric polynomials are kept as coefficient vectors
over weak compositions (they are not symmetric individually); sums that
are known to be symmetric are converted to SymFunc with an exactness
check.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import frac_str, multiplicities, partitions_of, sort_to_partition
from .qpoly import QPoly3, _ssyt_contents

BASES = ("m", "e", "h", "p", "s")


def _distinct_perms(lam: tuple[int, ...], nvars: int):
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return set(permutations(padded))


@lru_cache(maxsize=None)
def _mono_dict(lam: tuple[int, ...], nvars: int) -> tuple:
    """m_lam as explicit exponent vectors in nvars variables."""
    if len(lam) > nvars:
        return ()
    return tuple(_distinct_perms(lam, nvars))


def _mul_mdicts(f: dict, g: dict, nvars: int) -> dict:
    """Multiply two monomial-basis coefficient maps exactly, working in
    nvars explicit variables (callers pass nvars = sum of degrees)."""
    fx: dict = {}
    for lam, c in f.items():
        for v in _mono_dict(lam, nvars):
            fx[v] = c
    gx: dict = {}
    for mu, c in g.items():
        for v in _mono_dict(mu, nvars):
            gx[v] = c
    prod: dict = {}
    for a, ca in fx.items():
        for b, cb in gx.items():
            v = tuple(x + y for x, y in zip(a, b))
            s = prod.get(v, 0) + ca * cb
            if s:
                prod[v] = s
            else:
                prod.pop(v, None)
    out: dict = {}
    for v, c in prod.items():
        lam = sort_to_partition(v)
        if v == tuple(lam) + (0,) * (nvars - len(lam)):
            out[lam] = c
    return out


@lru_cache(maxsize=None)
def basis_to_monomial_dict(basis: str, lam: tuple[int, ...]) -> tuple:
    """Monomial expansion of e_lam / h_lam / p_lam / s_lam, as a tuple of
    (partition, int) pairs."""
    n = sum(lam)
    if basis == "s":
        out: dict = {}
        for content in _ssyt_contents(tuple(lam), max(n, 1)):
            mu = sort_to_partition(content)
            if content == tuple(mu) + (0,) * (len(content) - len(mu)):
                out[mu] = out.get(mu, 0) + 1
        return tuple(sorted(out.items()))
    if basis not in ("e", "h", "p"):
        raise ValueError(f"unknown basis {basis!r}")
    result = {(): 1}
    deg = 0
    for part in lam:
        if basis == "e":
            piece = {(1,) * part: 1}
        elif basis == "p":
            piece = {(part,): 1}
        else:
            piece = {mu: 1 for mu in partitions_of(part)}
        deg += part
        result = _mul_mdicts(result, piece, max(deg, 1))
    return tuple(sorted(result.items()))


class SymFunc:
    """Degree-graded symmetric function with exact coefficients."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: dict):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        self.coeffs = {tuple(lam): c for lam, c in coeffs.items() if c}
        for lam in self.coeffs:
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")

    @staticmethod
    def zero(degree: int) -> "SymFunc":
        return SymFunc(degree, "m", {})

    @staticmethod
    def basis_element(basis: str, lam: tuple[int, ...]) -> "SymFunc":
        return SymFunc(sum(lam), basis, {tuple(lam): 1})

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        if self.basis != other.basis:
            return self.to_monomial() + other.to_monomial()
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        if not c:
            return SymFunc.zero(self.degree)
        return SymFunc(self.degree, self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def to_monomial(self) -> "SymFunc":
        if self.basis == "m":
            return self
        out: dict = {}
        for lam, c in self.coeffs.items():
            for mu, k in basis_to_monomial_dict(self.basis, lam):
                s = out.get(mu, 0) + c * k
                if s:
                    out[mu] = s
                else:
                    out.pop(mu, None)
        return SymFunc(self.degree, "m", out)

    def in_basis(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        m = self.to_monomial()
        if basis == "m":
            return m
        if basis == "s":
            return _monomial_to_schur(m)
        if basis == "e":
            return _monomial_to_elementary(m)
        if basis == "p":
            return _monomial_to_powersum(m)
        if basis == "h":
            twisted = _monomial_to_elementary(omega(m).to_monomial())
            return SymFunc(self.degree, "h", twisted.coeffs)
        raise ValueError(f"unknown basis {basis!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.to_monomial().coeffs == other.to_monomial().coeffs

    def coefficient(self, lam: tuple[int, ...]):
        return self.coeffs.get(tuple(lam), 0)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {lam: fn(c) for lam, c in self.coeffs.items()})

    def sorted_terms(self) -> list:
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        return sorted(self.coeffs.items(), key=lambda t: order[t[0]])

    def to_json(self) -> dict:
        terms = []
        for lam, c in self.sorted_terms():
            coeff = c.to_json() if isinstance(c, QPoly3) else frac_str(c)
            terms.append({"partition": list(lam), "coeff": coeff})
        return {"degree": self.degree, "basis": self.basis, "terms": terms}

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for lam, c in self.sorted_terms():
            name = f"{self.basis}[{','.join(map(str, lam))}]"
            cs = c.text() if isinstance(c, QPoly3) else str(c)
            bits.append(f"({cs})*{name}" if (isinstance(c, QPoly3) or c != 1) else name)
        return " + ".join(bits)

    def __repr__(self):
        return f"SymFunc({self.text()})"


def _lead_partition(coeffs: dict, largest: bool) -> tuple[int, ...]:
    return (max if largest else min)(coeffs)


def _monomial_to_schur(m: SymFunc) -> SymFunc:
    rem = dict(m.coeffs)
    out: dict = {}
    while rem:
        lam = _lead_partition(rem, largest=True)
        c = rem[lam]
        out[lam] = c
        for mu, k in basis_to_monomial_dict("s", lam):
            s = rem.get(mu, 0) - c * k
            if s:
                rem[mu] = s
            else:
                rem.pop(mu, None)
    return SymFunc(m.degree, "s", out)


def _monomial_to_elementary(m: SymFunc) -> SymFunc:
    from .partitions import conjugate

    rem = dict(m.coeffs)
    out: dict = {}
    while rem:
        lam = _lead_partition(rem, largest=True)
        c = rem[lam]
        target = conjugate(lam)
        out[target] = out.get(target, 0) + c
        for mu, k in basis_to_monomial_dict("e", target):
            s = rem.get(mu, 0) - c * k
            if s:
                rem[mu] = s
            else:
                rem.pop(mu, None)
    return SymFunc(m.degree, "e", out)


def _monomial_to_powersum(m: SymFunc) -> SymFunc:
    from math import factorial

    rem = dict(m.coeffs)
    out: dict = {}
    while rem:
        lam = _lead_partition(rem, largest=False)
        denom = 1
        for d in multiplicities(lam).values():
            denom *= factorial(d)
        c = rem[lam] * Fraction(1, denom)
        out[lam] = c
        for mu, k in basis_to_monomial_dict("p", lam):
            s = rem.get(mu, 0) - c * k
            if s:
                rem[mu] = s
            else:
                rem.pop(mu, None)
    return SymFunc(m.degree, "p", out)


def omega(f: SymFunc) -> SymFunc:
    """The involution with omega(h_lam) = e_lam, i.e. p_k -> (-1)^(k-1) p_k."""
    if f.basis == "e":
        return SymFunc(f.degree, "h", f.coeffs)
    if f.basis == "h":
        return SymFunc(f.degree, "e", f.coeffs)
    p = f.in_basis("p")
    out = {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in p.coeffs.items()}
    return SymFunc(f.degree, "p", out)


def plethystic_point_eval(f: SymFunc, phi):
    """Expand f in power sums and substitute p_k -> phi(k).

    phi may be a callable or a map defined for 1 <= k <= degree(f);
    values may be rationals or QPoly3.
    """
    getter = phi if callable(phi) else phi.__getitem__
    p = f.in_basis("p")
    total = 0
    for lam, c in p.coeffs.items():
        term = c
        for k in lam:
            term = term * getter(k)
        total = term + total
    return total


def schur_coeffs(f: SymFunc) -> dict[tuple[int, ...], object]:
    return dict(f.in_basis("s").coeffs)


# ---------------------------------------------------------------------------
# Fundamental quasisymmetric polynomials


def descent_set(comp: tuple[int, ...]) -> frozenset[int]:
    acc, out = 0, []
    for c in comp[:-1]:
        acc += c
        out.append(acc)
    return frozenset(out)


def composition_from_descents(descents, n: int) -> tuple[int, ...]:
    ds = sorted(descents)
    out, prev = [], 0
    for d in ds:
        out.append(d - prev)
        prev = d
    out.append(n - prev)
    return tuple(out)


def fundamental_vector(comp: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Q_comp expanded in n = |comp| variables, as a map from exponent
    vectors (weak compositions of n into n parts) to coefficients."""
    n = sum(comp)
    if n < 1:
        raise ValueError("composition must have positive weight")
    strict_after = descent_set(comp)
    out: dict[tuple[int, ...], int] = {}
    expo = [0] * n

    def walk(pos: int, letter: int):
        if pos == n:
            key = tuple(expo)
            out[key] = out.get(key, 0) + 1
            return
        lo = letter + 1 if pos in strict_after else letter
        for v in range(lo, n + 1):
            expo[v - 1] += 1
            walk(pos + 1, v)
            expo[v - 1] -= 1

    walk(0, 1)
    return out


def vector_is_symmetric(vec: dict[tuple[int, ...], int]) -> bool:
    for expo, c in vec.items():
        rep = tuple(sorted(expo, reverse=True))
        if vec.get(rep, 0) != c:
            return False
    return True


def symmetric_vector_to_symfunc(vec: dict, n: int) -> SymFunc:
    """Convert an n-variable coefficient vector that represents a
    symmetric polynomial of degree n into monomial-basis form; raises if
    the vector is not symmetric or does not reassemble exactly."""
    coeffs: dict = {}
    for lam in partitions_of(n):
        rep = tuple(lam) + (0,) * (n - len(lam))
        c = vec.get(rep, 0)
        if c:
            coeffs[lam] = c
    rebuilt: dict = {}
    for lam, c in coeffs.items():
        for v in _mono_dict(lam, n):
            rebuilt[v] = c
    if rebuilt != {k: v for k, v in vec.items() if v}:
        raise ValueError("coefficient vector is not a symmetric function")
    return SymFunc(n, "m", coeffs)


def fundamental_sum_to_symfunc(weighted_comps) -> SymFunc:
    """Sum coeff * Q_comp over (comp, coeff) pairs; the total must be
    symmetric (each comp must have the same weight)."""
    total: dict = {}
    n = None
    for comp, coeff in weighted_comps:
        if n is None:
            n = sum(comp)
        elif sum(comp) != n:
            raise ValueError("mixed weights in fundamental sum")
        for expo, c in fundamental_vector(tuple(comp)).items():
            s = total.get(expo, 0) + coeff * c
            if s:
                total[expo] = s
            else:
                total.pop(expo, None)
    if n is None:
        raise ValueError("empty fundamental sum")
    return symmetric_vector_to_symfunc(total, n)


def fundamental_as_symmetric(comp: tuple[int, ...]) -> SymFunc:
    """Q_comp as a SymFunc, for the compositions where it happens to be
    symmetric (raises otherwise)."""
    return fundamental_sum_to_symfunc([(comp, 1)])


# ---------------------------------------------------------------------------
# Alphabet evaluations used by the Cauchy-identity checks


def powersum_alphabet_q3(k: int) -> QPoly3:
    """p_k evaluated on the 3-letter alphabet q1,q2,q3."""
    return QPoly3({(k, 0, 0): 1, (0, k, 0): 1, (0, 0, k): 1})


def elementary_alphabet_q3(k: int) -> QPoly3:
    """e_k evaluated on the 3-letter alphabet q1,q2,q3 (zero for k > 3)."""
    from .qpoly import schur_q3

    if k == 0:
        return QPoly3.one()
    if k > 3:
        return QPoly3.zero()
    return schur_q3((1,) * k)
