"""The n=3 nabla operator over the two-row Schur ring.

Scalars live in the ring of symmetric functions modulo the ideal
spanned by Schur functions with at least three rows; since every
Littlewood-Richardson component of s_mu * s_nu contains mu, that span
is an ideal and products may be truncated term by term.  Products are
computed through the two-row Pieri rule and the Jacobi-Trudi expansion
s_(c,d) = h_c h_d - h_{c+1} h_{d-1}.

The operator itself is a 3x3 matrix over this ring with respect to the
basis (S_3, S_21, S_111).  The orientation is pinned by the published
values of the first two iterates and by the s_11 eigenvector: the
matrix rows, not its columns, list the images of the basis elements.
"""

from fractions import Fraction

from .qpoly import QPoly3, schur_q3, schur_q3_at_111


class TwoRowElem:
    """Integer combination of Schur functions s_(a,b) with a >= b >= 0."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                a, b = (key if len(key) == 2 else (key + (0, 0))[:2]) if key else (0, 0)
                if a < b or b < 0:
                    raise ValueError(f"{key} is not a two-row partition")
                if c:
                    self.terms[(a, b)] = self.terms.get((a, b), 0) + c
            self.terms = {k: c for k, c in self.terms.items() if c}

    @staticmethod
    def zero() -> "TwoRowElem":
        return TwoRowElem()

    @staticmethod
    def schur(a: int, b: int = 0) -> "TwoRowElem":
        return TwoRowElem({(a, b): 1})

    @staticmethod
    def one() -> "TwoRowElem":
        return TwoRowElem.schur(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TwoRowElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TwoRowElem") -> "TwoRowElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = TwoRowElem()
        res.terms = out
        return res

    def __neg__(self) -> "TwoRowElem":
        res = TwoRowElem()
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "TwoRowElem") -> "TwoRowElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            res = TwoRowElem()
            if other:
                res.terms = {k: c * other for k, c in self.terms.items()}
            return res
        return tworow_mul(self, other)

    __rmul__ = __mul__

    def to_qpoly3(self) -> QPoly3:
        out = QPoly3.zero()
        for (a, b), c in self.terms.items():
            mu = tuple(x for x in (a, b) if x)
            out = out + schur_q3(mu) * c
        return out

    def at_111(self):
        return sum(c * schur_q3_at_111(tuple(x for x in k if x)) for k, c in self.terms.items())

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            name = "1" if (a, b) == (0, 0) else (f"s[{a}]" if b == 0 else f"s[{a},{b}]")
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self):
        return f"TwoRowElem({self.text()})"


def _pieri_h(elem: TwoRowElem, k: int) -> TwoRowElem:
    """Multiply by h_k, keeping at most two rows: add a horizontal strip
    of size k, with the row-2 extension limited to the old row-1 length."""
    if k < 0:
        return TwoRowElem.zero()
    if k == 0:
        return elem
    out: dict = {}
    for (a, b), c in elem.terms.items():
        for j in range(0, min(k, a - b) + 1):
            key = (a + k - j, b + j)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    res = TwoRowElem()
    res.terms = out
    return res


def tworow_mul(u: TwoRowElem, v: TwoRowElem) -> TwoRowElem:
    """Littlewood-Richardson product truncated to two-row terms."""
    out = TwoRowElem.zero()
    for (c, d), coeff in v.terms.items():
        part = _pieri_h(_pieri_h(u, c), d)
        if d >= 1:
            part = part - _pieri_h(_pieri_h(u, c + 1), d - 1)
        out = out + part * coeff
    return out


def t_poly(m: int, k: int) -> TwoRowElem:
    """T_{mk} = s_m + s_{m-2,1} + ... + s_{m-2k,k}, dropping the terms
    where m-2j < j (no partition)."""
    out = TwoRowElem.zero()
    for j in range(k + 1):
        if m - 2 * j >= j >= 0:
            out = out + TwoRowElem.schur(m - 2 * j, j)
    return out


class FrobVector3:
    """Element of the rank-3 module with basis (S_3, S_21, S_111)."""

    __slots__ = ("c3", "c21", "c111")

    def __init__(self, c3: TwoRowElem, c21: TwoRowElem, c111: TwoRowElem):
        self.c3, self.c21, self.c111 = c3, c21, c111

    @staticmethod
    def basis(which: str) -> "FrobVector3":
        z, o = TwoRowElem.zero(), TwoRowElem.one()
        return FrobVector3(
            o if which == "3" else z,
            o if which == "21" else z,
            o if which == "111" else z,
        )

    def coords(self) -> tuple[TwoRowElem, TwoRowElem, TwoRowElem]:
        return (self.c3, self.c21, self.c111)

    def __eq__(self, other):
        return (
            isinstance(other, FrobVector3)
            and self.c3 == other.c3
            and self.c21 == other.c21
            and self.c111 == other.c111
        )

    def __add__(self, other: "FrobVector3") -> "FrobVector3":
        return FrobVector3(self.c3 + other.c3, self.c21 + other.c21, self.c111 + other.c111)

    def __sub__(self, other: "FrobVector3") -> "FrobVector3":
        return FrobVector3(self.c3 - other.c3, self.c21 - other.c21, self.c111 - other.c111)

    def scale(self, s: TwoRowElem) -> "FrobVector3":
        return FrobVector3(s * self.c3, s * self.c21, s * self.c111)

    def is_zero(self) -> bool:
        return not (self.c3 or self.c21 or self.c111)

    def to_json(self) -> dict:
        def enc(e: TwoRowElem):
            return [
                {"partition": [a, b] if b else ([a] if a else []), "coeff": c}
                for (a, b), c in sorted(e.terms.items())
            ]

        return {"S3": enc(self.c3), "S21": enc(self.c21), "S111": enc(self.c111)}

    def __repr__(self):
        return f"FrobVector3(S3: {self.c3.text()}; S21: {self.c21.text()}; S111: {self.c111.text()})"


def _s(a, b=0):
    return TwoRowElem.schur(a, b)


# Images of (S_3, S_21, S_111); the rows of the printed matrix.
_NABLA_IMAGES = (
    (TwoRowElem.zero(), _s(2, 2), _s(3, 2)),
    (TwoRowElem.zero(), -_s(2, 1), -_s(3, 1)),
    (TwoRowElem.one(), _s(1) + _s(2), _s(1, 1) + _s(3)),
)


def nabla_apply(v: FrobVector3) -> FrobVector3:
    cs = v.coords()
    out = [TwoRowElem.zero()] * 3
    for i, c in enumerate(cs):
        if not c:
            continue
        img = _NABLA_IMAGES[i]
        for j in range(3):
            out[j] = out[j] + tworow_mul(c, img[j])
    return FrobVector3(*out)


def h3(r: int) -> FrobVector3:
    """Graded Frobenius of the r-th space at n=3: r-fold nabla on S_111."""
    if r < 0:
        raise ValueError("r must be >= 0")
    v = FrobVector3.basis("111")
    for _ in range(r):
        v = nabla_apply(v)
    return v


def h3_closed(r: int) -> FrobVector3:
    """Closed form: T_{3(r-1),r-1} S_3 + (T_{3r-2,r-1} + T_{3r-1,r-1}) S_21
    + T_{3r,r} S_111."""
    if r < 1:
        raise ValueError("closed form needs r >= 1")
    return FrobVector3(
        t_poly(3 * (r - 1), r - 1),
        t_poly(3 * r - 2, r - 1) + t_poly(3 * r - 1, r - 1),
        t_poly(3 * r, r),
    )


def charpoly_residual() -> tuple[FrobVector3, FrobVector3, FrobVector3]:
    """Apply nabla^3 - (s_3 - s_21 + s_11) nabla^2 + (s_41 + s_33 - s_32)
    nabla - s_44 to each basis vector; Cayley-Hamilton says all three
    results vanish."""
    c2 = _s(3) - _s(2, 1) + _s(1, 1)
    c1 = _s(4, 1) + _s(3, 3) - _s(3, 2)
    c0 = _s(4, 4)
    out = []
    for which in ("3", "21", "111"):
        v = FrobVector3.basis(which)
        n1 = nabla_apply(v)
        n2 = nabla_apply(n1)
        n3 = nabla_apply(n2)
        out.append(n3 - n2.scale(c2) + n1.scale(c1) - v.scale(c0))
    return tuple(out)


def eigenvector() -> FrobVector3:
    return FrobVector3(TwoRowElem.one(), _s(1), _s(1, 1))


def eigen_check() -> bool:
    """nabla fixes S_3 + s_1 S_21 + s_11 S_111 up to the factor s_11."""
    v = eigenvector()
    return nabla_apply(v) == v.scale(_s(1, 1))


def specialize_q111(v: FrobVector3) -> tuple:
    """Evaluate every s_(a,b) at q1=q2=q3=1 via the dimension product
    (b+1)(a+2)(a-b+1)/2."""
    return tuple(c.at_111() for c in v.coords())


def specialize_q3(v: FrobVector3, value) -> tuple[QPoly3, QPoly3, QPoly3]:
    """Coefficients as (q1,q2)-polynomials after substituting q3."""
    return tuple(c.to_qpoly3().set_q3(value) for c in v.coords())


def tnk_direct_111(m: int, k: int) -> int:
    """T_{mk}(1,1,1) by direct summation of the dimension products."""
    return t_poly(m, k).at_111()


def tnk_printed_111(m: int, k: int) -> Fraction:
    """The published closed form for T_{mk}(1,1,1); see tnk_erratum_report."""
    return Fraction((k + 1) * (k + 2) * (k * k - (13 + 10 * m) * k + 3 * (m + 1) * (m + 2)), 12)


def tnk_erratum_report(max_m: int = 9, max_k: int = 3) -> dict:
    """Compare direct summation of T_{mk}(1,1,1) against the published
    polynomial.  The two disagree (first at (m,k) = (3,1): direct 13,
    printed 9), so the direct value is authoritative and the printed
    polynomial is flagged as erroneous."""
    mismatches = []
    for m in range(0, max_m + 1):
        for k in range(0, max_k + 1):
            direct = tnk_direct_111(m, k)
            printed = tnk_printed_111(m, k)
            if printed != direct:
                mismatches.append(
                    {"m": m, "k": k, "direct": direct, "printed": str(printed)}
                )
    anchor = {
        "m": 3,
        "k": 1,
        "direct": tnk_direct_111(3, 1),
        "printed": str(tnk_printed_111(3, 1)),
    }
    return {
        "erratum": bool(mismatches),
        "statement": "printed closed form for T_nk(1,1,1) does not match direct summation;"
        " direct summation is used throughout",
        "anchor": anchor,
        "first_mismatch": mismatches[0] if mismatches else None,
        "mismatches": mismatches,
    }
