"""Exact polynomials in the three parameters q1, q2, q3.

QPoly3 is a sparse map from exponent triples to exact coefficients
(ints or Fractions).  Schur polynomials s_mu(q1,q2,q3) are expanded by
enumeration of semistandard tableaux in the 3-letter alphabet, and
symmetric polynomials are decomposed back into Schur polynomials by
leading-monomial subtraction.
"""

import warnings
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import frac_str


class QPoly3:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[tuple(exp)] = self.terms.get(tuple(exp), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @staticmethod
    def zero() -> "QPoly3":
        return QPoly3()

    @staticmethod
    def one() -> "QPoly3":
        return QPoly3({(0, 0, 0): 1})

    @staticmethod
    def constant(c) -> "QPoly3":
        return QPoly3({(0, 0, 0): c})

    @staticmethod
    def var(i: int, power: int = 1) -> "QPoly3":
        exp = [0, 0, 0]
        exp[i] = power
        return QPoly3({tuple(exp): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly3):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "QPoly3":
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = QPoly3()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "QPoly3":
        res = QPoly3()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other) -> "QPoly3":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly3":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QPoly3":
        if isinstance(other, (int, Fraction)):
            if not other:
                return QPoly3()
            res = QPoly3()
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if not isinstance(other, QPoly3):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = QPoly3()
        res.terms = out
        return res

    __rmul__ = __mul__

    def evaluate(self, q1, q2, q3):
        return sum(
            (c * q1**e[0] * q2**e[1] * q3**e[2] for e, c in self.terms.items()),
            start=0,
        )

    def set_q3(self, value) -> "QPoly3":
        """Substitute a scalar for q3, collapsing onto (q1,q2) exponents."""
        out: dict = {}
        for (a, b, c), coeff in self.terms.items():
            e = (a, b, 0)
            s = out.get(e, 0) + coeff * value**c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = QPoly3()
        res.terms = out
        return res

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for p in permutations(e):
                if self.terms.get(p, 0) != c:
                    return False
        return True

    def homogeneous_degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def homogeneous_part(self, d: int) -> "QPoly3":
        res = QPoly3()
        res.terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return res

    def swap_vars(self, perm: tuple[int, int, int]) -> "QPoly3":
        """Permute the variables: new exponent at slot perm[i] is old slot i."""
        out = {}
        for e, c in self.terms.items():
            ne = [0, 0, 0]
            for i in range(3):
                ne[perm[i]] = e[i]
            out[tuple(ne)] = c
        res = QPoly3()
        res.terms = out
        return res

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], object]]:
        """Deterministic order: total degree, then lexicographically
        decreasing exponent triples (so q1 before q2 before q3)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def to_json(self) -> list[dict]:
        return [
            {"exp": list(e), "coeff": frac_str(c)} for e, c in self.sorted_terms()
        ]

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"q{i+1}" + (f"^{e[i]}" if e[i] > 1 else "")
                for i in range(3)
                if e[i] > 0
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"QPoly3({self.text()})"


def _coerce(x) -> QPoly3:
    if isinstance(x, QPoly3):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly3.constant(x)
    raise TypeError(f"cannot coerce {type(x)} to QPoly3")


def _ssyt_contents(shape: tuple[int, ...], nletters: int):
    """Yield content vectors of semistandard tableaux of the given shape
    with entries in 1..nletters (rows weakly increase, columns strictly)."""
    rows = len(shape)
    if rows == 0:
        yield (0,) * nletters
        return
    tableau = [[0] * r for r in shape]
    content = [0] * nletters
    cells = [(i, j) for i in range(rows) for j in range(shape[i])]

    def fill(k):
        if k == len(cells):
            yield tuple(content)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, tableau[i][j - 1])
        if i > 0:
            lo = max(lo, tableau[i - 1][j] + 1)
        for v in range(lo, nletters + 1):
            tableau[i][j] = v
            content[v - 1] += 1
            yield from fill(k + 1)
            content[v - 1] -= 1

    yield from fill(0)


@lru_cache(maxsize=None)
def schur_q3(mu: tuple[int, ...]) -> QPoly3:
    """Schur polynomial s_mu(q1,q2,q3); zero (with a warning) for more
    than three rows."""
    if len(mu) > 3:
        warnings.warn(f"s_{mu} vanishes in three variables", stacklevel=2)
        return QPoly3.zero()
    out: dict = {}
    for content in _ssyt_contents(tuple(mu), 3):
        out[content] = out.get(content, 0) + 1
    return QPoly3(out)


def schur_q3_at_111(mu: tuple[int, ...]):
    """s_mu(1,1,1) via the GL_3 dimension product formula."""
    a = mu[0] if len(mu) > 0 else 0
    b = mu[1] if len(mu) > 1 else 0
    c = mu[2] if len(mu) > 2 else 0
    if len(mu) > 3:
        return 0
    val = Fraction((a - b + 1) * (b - c + 1) * (a - c + 2), 2)
    assert val.denominator == 1
    return int(val)


def schur_decompose_q3(p: QPoly3) -> dict[tuple[int, ...], object]:
    """Write a symmetric polynomial as sum of c_mu s_mu(q1,q2,q3).

    Per homogeneous degree, repeatedly subtract the Schur polynomial led
    by the lexicographically greatest remaining exponent (sorted to a
    partition); exact reconstruction is checked by construction since
    the remainder must reach zero.
    """
    if not p.is_symmetric():
        raise ValueError("polynomial is not symmetric in q1,q2,q3")
    coeffs: dict[tuple[int, ...], object] = {}
    for d in p.homogeneous_degrees():
        rem = p.homogeneous_part(d)
        while rem:
            lead = max(rem.terms, key=lambda e: tuple(sorted(e, reverse=True)))
            mu = tuple(x for x in sorted(lead, reverse=True) if x)
            c = rem.terms[lead]
            coeffs[mu] = coeffs.get(mu, 0) + c
            rem = rem - schur_q3(mu) * c
    return {mu: c for mu, c in coeffs.items() if c}


def schur_recompose_q3(coeffs: dict[tuple[int, ...], object]) -> QPoly3:
    out = QPoly3.zero()
    for mu, c in coeffs.items():
        out = out + schur_q3(tuple(mu)) * c
    return out
