"""Trivariate diagonal harmonics by exact linear algebra.

Polynomials live in three rows of n variables; a monomial is stored as
a flat exponent tuple of length 3n (x-row, then y-row, then z-row) and
its tri-degree is the triple of row sums.  The harmonic space is the
joint kernel of the polarized power-sum operators P_alpha for
1 <= |alpha| <= n.

The |alpha| = 1 operators are eliminated structurally: their joint
kernel in each row is exactly the polynomials in the differences
v_i - v_n, so each tri-degree component is computed inside the span of
difference monomials in 3(n-1) variables, and only the operators with
|alpha| >= 2 contribute matrix rows.  Components at permuted
tri-degrees are images of each other under permuting the three variable
sets, so only sorted degrees are solved.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

from .linalg import IntEchelon, exact_rref, int_nullspace
from .partitions import (
    conjugacy_classes,
    cycle_type_representative,
    num_standard_tableaux,
    partitions_of,
)
from .qpoly import QPoly3

SETS = "xyz"


def _row(varset: str) -> int:
    try:
        return SETS.index(varset)
    except ValueError:
        raise ValueError(f"variable set must be one of {SETS!r}") from None


class XPoly:
    """Sparse exact polynomial in x_1..x_n, y_1..y_n, z_1..z_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for expo, c in terms.items():
                if c:
                    self.terms[tuple(expo)] = self.terms.get(tuple(expo), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @staticmethod
    def zero(n: int) -> "XPoly":
        return XPoly(n)

    @staticmethod
    def one(n: int) -> "XPoly":
        return XPoly(n, {(0,) * (3 * n): 1})

    @staticmethod
    def variable(n: int, varset: str, index: int, power: int = 1) -> "XPoly":
        expo = [0] * (3 * n)
        expo[_row(varset) * n + index - 1] = power
        return XPoly(n, {tuple(expo): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.n == other.n and self.terms == other.terms

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = XPoly(self.n)
        res.terms = out
        return res

    def __neg__(self):
        res = XPoly(self.n)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            res = XPoly(self.n)
            if other:
                res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = XPoly(self.n)
        res.terms = out
        return res

    __rmul__ = __mul__

    def tri_degrees(self) -> set[tuple[int, int, int]]:
        return {monomial_tridegree(e, self.n) for e in self.terms}

    def __repr__(self):
        bits = []
        for e, c in sorted(self.terms.items()):
            names = []
            for pos, p in enumerate(e):
                if p:
                    names.append(f"{SETS[pos // self.n]}{pos % self.n + 1}" + (f"^{p}" if p > 1 else ""))
            bits.append(f"{c}*{'*'.join(names) or '1'}")
        return " + ".join(bits) or "0"


def monomial_tridegree(expo: tuple[int, ...], n: int) -> tuple[int, int, int]:
    return (sum(expo[:n]), sum(expo[n : 2 * n]), sum(expo[2 * n :]))


def differentiate(p: XPoly, varset: str, index: int, order: int = 1) -> XPoly:
    """Exact order-th partial derivative with respect to one variable."""
    if order < 1:
        raise ValueError("order must be >= 1")
    pos = _row(varset) * p.n + index - 1
    out: dict = {}
    for e, c in p.terms.items():
        k = e[pos]
        if k < order:
            continue
        fall = 1
        for t in range(order):
            fall *= k - t
        ne = list(e)
        ne[pos] = k - order
        ne = tuple(ne)
        s = out.get(ne, 0) + c * fall
        if s:
            out[ne] = s
        else:
            out.pop(ne, None)
    res = XPoly(p.n)
    res.terms = out
    return res


def p_alpha_apply(alpha: tuple[int, int, int], p: XPoly) -> XPoly:
    """The polarized power sum operator sum_j dx_j^a dy_j^b dz_j^c."""
    a, b, c = alpha
    if a + b + c < 1:
        raise ValueError("need |alpha| >= 1")
    n = p.n
    out: dict = {}
    for e, coeff in p.terms.items():
        for j in range(n):
            ex, ey, ez = e[j], e[n + j], e[2 * n + j]
            if ex < a or ey < b or ez < c:
                continue
            fall = 1
            for t in range(a):
                fall *= ex - t
            for t in range(b):
                fall *= ey - t
            for t in range(c):
                fall *= ez - t
            ne = list(e)
            ne[j] -= a
            ne[n + j] -= b
            ne[2 * n + j] -= c
            ne = tuple(ne)
            s = out.get(ne, 0) + coeff * fall
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
    res = XPoly(n)
    res.terms = out
    return res


def e_op_apply(u: str, v: str, k: int, p: XPoly) -> XPoly:
    """Polarization operator E_uv^(k) = sum_i u_i dv_i^k."""
    if u == v:
        raise ValueError("polarization needs two distinct variable sets")
    if k < 1:
        raise ValueError("k must be >= 1")
    ru, rv = _row(u), _row(v)
    n = p.n
    out: dict = {}
    for e, coeff in p.terms.items():
        for i in range(n):
            ev = e[rv * n + i]
            if ev < k:
                continue
            fall = 1
            for t in range(k):
                fall *= ev - t
            ne = list(e)
            ne[rv * n + i] -= k
            ne[ru * n + i] += 1
            ne = tuple(ne)
            s = out.get(ne, 0) + coeff * fall
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
    res = XPoly(n)
    res.terms = out
    return res


def monomial_factorial(expo: tuple[int, ...]) -> int:
    out = 1
    for e in expo:
        out *= factorial(e)
    return out


def scalar_product(p: XPoly, g: XPoly):
    """<X^A, X^B> = A! [A == B], extended bilinearly."""
    small, big = (p.terms, g.terms) if len(p.terms) <= len(g.terms) else (g.terms, p.terms)
    total = 0
    for e, c in small.items():
        if e in big:
            total += c * big[e] * monomial_factorial(e)
    return total


def apply_diff_operator(f: XPoly, g: XPoly) -> XPoly:
    """f(dX) applied to g(X)."""
    out = XPoly.zero(g.n)
    for e, c in f.terms.items():
        part = g
        for pos, k in enumerate(e):
            if not part:
                break
            if k:
                part = differentiate(part, SETS[pos // g.n], pos % g.n + 1, k)
        out = out + part * c
    return out


def vandermonde(n: int, varset: str = "x") -> XPoly:
    """det(v_i^j) for 0 <= j <= n-1 in the chosen variable set."""
    row = _row(varset)
    out: dict = {}
    for sigma in permutations(range(n)):
        sign = perm_sign(sigma)
        expo = [0] * (3 * n)
        for i in range(n):
            expo[row * n + i] = sigma[i]
        out[tuple(expo)] = sign
    return XPoly(n, out)


def perm_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def diagonal_action(sigma, p: XPoly) -> XPoly:
    """Replace column i by column sigma(i) simultaneously in all rows;
    sigma is 0-indexed."""
    n = p.n
    out: dict = {}
    for e, c in p.terms.items():
        ne = [0] * (3 * n)
        for row in range(3):
            for i in range(n):
                ne[row * n + sigma[i]] = e[row * n + i]
        out[tuple(ne)] = c
    res = XPoly(n)
    res.terms = out
    return res


def antisymmetrize(n: int, matrix) -> XPoly:
    """R^+- applied to X^A: the signed sum of the diagonal orbit of the
    monomial with exponent columns given by the 3 x n matrix."""
    expo = [0] * (3 * n)
    for row in range(3):
        for i in range(n):
            expo[row * n + i] = matrix[row][i]
    base = XPoly(n, {tuple(expo): 1})
    out = XPoly.zero(n)
    for sigma in permutations(range(n)):
        out = out + diagonal_action(sigma, base) * perm_sign(sigma)
    return out


def commutator_check(alpha, k: int, pair: tuple[str, str], p: XPoly) -> bool:
    """[P_alpha(dX), E_uv^(k)] equals alpha_u * P_beta(dX) with beta
    obtained from alpha by adding k to the v slot and removing one from
    the u slot; checked exactly on p."""
    u, v = pair
    ru, rv = _row(u), _row(v)
    if alpha[ru] < 1:
        raise ValueError("the decremented component of alpha must be >= 1")
    lhs = p_alpha_apply(alpha, e_op_apply(u, v, k, p)) - e_op_apply(u, v, k, p_alpha_apply(alpha, p))
    beta = list(alpha)
    beta[rv] += k
    beta[ru] -= 1
    rhs = p_alpha_apply(tuple(beta), p) * alpha[ru]
    return lhs == rhs


# ---------------------------------------------------------------------------
# Graded spaces


@dataclass
class GradedSpace:
    """Tri-graded space with an exact integer basis per tri-degree.

    Basis vectors are sparse maps from flat exponent tuples to ints.
    """

    n: int
    components: dict = field(default_factory=dict)

    def dimension(self, d=None) -> int:
        if d is not None:
            return len(self.components.get(tuple(d), ()))
        return sum(len(v) for v in self.components.values())

    def dims_by_degree(self) -> dict[tuple[int, int, int], int]:
        return {d: len(v) for d, v in sorted(self.components.items()) if v}

    def hilbert_series(self) -> QPoly3:
        return QPoly3({d: len(v) for d, v in self.components.items()})

    def vectors(self, d) -> list[dict]:
        return self.components.get(tuple(d), [])

    def xpolys(self, d) -> list[XPoly]:
        return [XPoly(self.n, v) for v in self.vectors(d)]


def sorted_degrees_upto(total: int) -> list[tuple[int, int, int]]:
    out = []
    for s in range(total + 1):
        for d1 in range(s, -1, -1):
            for d2 in range(min(d1, s - d1), -1, -1):
                d3 = s - d1 - d2
                if d3 <= d2:
                    out.append((d1, d2, d3))
    return out


def _row_monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in _row_monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _difference_row_expansions(n: int, degree: int) -> list[tuple[tuple[int, ...], dict]]:
    """Monomials of the given degree in the n-1 differences v_i - v_n,
    with their expansions as maps over n-variable exponent tuples."""
    out = []
    for expo in _row_monomials(n - 1, degree):
        terms: dict = {(0,) * n: 1}
        for i, e in enumerate(expo):
            if not e:
                continue
            new: dict = {}
            for t in range(e + 1):
                c = comb(e, t) * (-1) ** (e - t)
                for mono, mc in terms.items():
                    lst = list(mono)
                    lst[i] += t
                    lst[n - 1] += e - t
                    key = tuple(lst)
                    s = new.get(key, 0) + mc * c
                    if s:
                        new[key] = s
                    else:
                        new.pop(key, None)
            terms = new
        out.append((expo, terms))
    return out


def _difference_basis(n: int, d: tuple[int, int, int]) -> list[dict]:
    """Expansions (as 3n-exponent maps) of the products of difference
    monomials with row degrees d; this spans the joint kernel of the
    three first-order polarized power sums in tri-degree d."""
    rows = [_difference_row_expansions(n, di) for di in d]
    basis = []
    for (_, tx), (_, ty), (_, tz) in product(*rows):
        terms: dict = {}
        for ex, cx in tx.items():
            for ey, cy in ty.items():
                for ez, cz in tz.items():
                    terms[ex + ey + ez] = cx * cy * cz
        basis.append(terms)
    return basis


def _alphas(n: int, d: tuple[int, int, int], min_norm: int = 2):
    for a in range(min(n, d[0]) + 1):
        for b in range(min(n - a, d[1]) + 1):
            for c in range(min(n - a - b, d[2]) + 1):
                if min_norm <= a + b + c <= n:
                    yield (a, b, c)


def kernel_component(n: int, d: tuple[int, int, int]) -> list[dict]:
    """Exact integer basis of the harmonic component in tri-degree d."""
    basis = _difference_basis(n, tuple(d))
    if not basis:
        return []
    constraints: dict = {}
    for alpha in _alphas(n, tuple(d)):
        for j, vec in enumerate(basis):
            img = p_alpha_apply(alpha, XPoly(n, vec))
            for mono, c in img.terms.items():
                constraints.setdefault((alpha, mono), {})[j] = c
    ncols = len(basis)
    rows = []
    for key in sorted(constraints):
        rowdict = constraints[key]
        rows.append([rowdict.get(j, 0) for j in range(ncols)])
    kernel = int_nullspace(rows, ncols)
    out = []
    for coeffs in kernel:
        terms: dict = {}
        for j, c in enumerate(coeffs):
            if not c:
                continue
            for mono, bc in basis[j].items():
                s = terms.get(mono, 0) + c * bc
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        out.append(terms)
    return out


def _permute_vector_rows(vec: dict, n: int, perm: tuple[int, int, int]) -> dict:
    """Send row i of each exponent matrix to row perm[i]."""
    out = {}
    for e, c in vec.items():
        ne = [0] * (3 * n)
        for row in range(3):
            ne[perm[row] * n : (perm[row] + 1) * n] = e[row * n : (row + 1) * n]
        out[tuple(ne)] = c
    return out


def kernel_space(n: int, max_total: int | None = None) -> GradedSpace:
    """All harmonic components with |d| <= C(n,2) (or a given cap).

    Only sorted tri-degrees are solved; permuted degrees are images
    under permuting the three variable sets.
    """
    if n > 5:
        raise ValueError("kernel_space is desk-scale: n <= 5")
    cap = comb(n, 2) if max_total is None else max_total
    space = GradedSpace(n)
    for d in sorted_degrees_upto(cap):
        vecs = kernel_component(n, d)
        seen = {d}
        space.components[d] = vecs
        for perm in permutations((0, 1, 2)):
            nd = tuple(d[list(perm).index(i)] for i in range(3))
            if nd in seen:
                continue
            seen.add(nd)
            space.components[nd] = [_permute_vector_rows(v, n, perm) for v in vecs]
    return space


def hilbert_series(space: GradedSpace) -> QPoly3:
    return space.hilbert_series()


def _component_trace(vectors: list[dict], n: int, sigma) -> Fraction:
    """Trace of the diagonal action of sigma on the span of the given
    independent integer vectors; raises if the span is not stable."""
    if not vectors:
        return Fraction(0)
    k = len(vectors)
    ech = IntEchelon()
    for v in vectors:
        if not ech.insert(v):
            raise ValueError("component basis is not independent")
    pivots = sorted(ech.pivots)
    piv_index = {m: i for i, m in enumerate(pivots)}
    mat_rows = [[Fraction(v.get(m, 0)) for v in vectors] for m in pivots]
    images = []
    for v in vectors:
        img = diagonal_action(sigma, XPoly(n, v)).terms
        images.append(img)
    rhs = [[Fraction(img.get(m, 0)) for img in images] for m in pivots]
    from .linalg import solve_exact

    sols = solve_exact(mat_rows, rhs, k)
    if sols is None:
        raise ValueError("component is not stable under the diagonal action")
    # residual check on every monomial, not only the pivot rows
    for jcol, img in enumerate(images):
        recon: dict = {}
        for i, v in enumerate(vectors):
            c = sols[i][jcol]
            if not c:
                continue
            for m, vc in v.items():
                s = recon.get(m, 0) + c * vc
                if s:
                    recon[m] = s
                else:
                    recon.pop(m, None)
        if recon != {m: Fraction(c) for m, c in img.items()}:
            raise ValueError("diagonal action does not preserve the component")
    return sum((sols[i][i] for i in range(k)), start=Fraction(0))


def graded_frobenius(space: GradedSpace) -> dict[tuple[int, ...], QPoly3]:
    """Multiplicity of each irreducible S_lambda(w) as a polynomial in q.

    Uses one representative per conjugacy class; the trace of a class on
    each sorted component is reused for permuted tri-degrees.
    """
    n = space.n
    classes = conjugacy_classes(n)
    reps = {mu: cycle_type_representative(mu) for mu, _ in classes}
    traces: dict[tuple[int, int, int], dict] = {}
    for d, vectors in space.components.items():
        if not vectors:
            continue
        sd = tuple(sorted(d, reverse=True))
        if sd not in traces:
            traces[sd] = {
                mu: _component_trace(space.components[sd], n, reps[mu]) for mu, _ in classes
            }
    from .partitions import character_value

    out: dict[tuple[int, ...], dict] = {lam: {} for lam in partitions_of(n)}
    order = factorial(n)
    for d, vectors in space.components.items():
        if not vectors:
            continue
        tr = traces[tuple(sorted(d, reverse=True))]
        for lam in partitions_of(n):
            m = sum(size * character_value(lam, mu) * tr[mu] for mu, size in classes)
            m = Fraction(m, order)
            if m:
                if m.denominator != 1 or m < 0:
                    raise ValueError(f"non-integral multiplicity {m} at degree {d}")
                out[lam][d] = int(m)
    return {lam: QPoly3(vals) for lam, vals in out.items() if vals}


def frobenius_dimension_check(frob: dict, hilb: QPoly3) -> bool:
    """Replacing each S_lambda by f_lambda must reproduce the Hilbert
    series."""
    total = QPoly3.zero()
    for lam, poly in frob.items():
        total = total + poly * num_standard_tableaux(lam)
    return total == hilb


# ---------------------------------------------------------------------------
# Operator closure of the Vandermonde


def closure_space(n: int, seed: XPoly | None = None) -> GradedSpace:
    """Smallest tri-graded space containing Delta_n(x), closed under all
    partial derivatives and all E_uv^(k); exact fixpoint iteration."""
    if seed is None:
        seed = vandermonde(n, "x")
    echelons: dict[tuple[int, int, int], IntEchelon] = {}
    queue: list[XPoly] = []

    def push(p: XPoly):
        if not p:
            return
        degs = p.tri_degrees()
        if len(degs) != 1:
            raise ValueError("closure vectors must be homogeneous")
        d = degs.pop()
        ech = echelons.setdefault(d, IntEchelon())
        if ech.insert(dict(p.terms)):
            queue.append(p)

    push(seed)
    while queue:
        p = queue.pop()
        d = p.tri_degrees().pop()
        for varset in SETS:
            for i in range(1, n + 1):
                push(differentiate(p, varset, i))
        for u in SETS:
            for v in SETS:
                if u == v:
                    continue
                maxk = d[_row(v)]
                for k in range(1, maxk + 1):
                    push(e_op_apply(u, v, k, p))
    space = GradedSpace(n)
    for d, ech in sorted(echelons.items()):
        space.components[d] = ech.basis()
    return space


# ---------------------------------------------------------------------------
# Higher spaces H_n^(r) = (A^(r-1)) cap (A^(r-1) I)^perp


def alternant_generators(n: int, max_tdeg: int) -> list[XPoly]:
    """Nonzero R^+-(X^A) for exponent matrices with pairwise distinct
    columns in decreasing lexicographic order, up to the degree cutoff."""
    cols: list[tuple[int, int, int]] = []
    for t in range(max_tdeg + 1):
        for a in range(t, -1, -1):
            for b in range(t - a, -1, -1):
                cols.append((a, b, t - a - b))
    out = []

    def build(chosen: list, start: int, remaining: int):
        if len(chosen) == n:
            matrix = [[col[row] for col in chosen] for row in range(3)]
            out.append(antisymmetrize(n, matrix))
            return
        for idx in range(start, len(cols)):
            col = cols[idx]
            if sum(col) <= remaining:
                build(chosen + [col], idx + 1, remaining - sum(col))

    build([], 0, max_tdeg)
    return [g for g in out if g]


def _monomials_of_tridegree(n: int, d: tuple[int, int, int]) -> list[tuple[int, ...]]:
    out = []
    for ex in _row_monomials(n, d[0]):
        for ey in _row_monomials(n, d[1]):
            for ez in _row_monomials(n, d[2]):
                out.append(ex + ey + ez)
    return out


def _power_sum_poly(n: int, alpha: tuple[int, int, int]) -> XPoly:
    out: dict = {}
    for j in range(n):
        expo = [0] * (3 * n)
        expo[j] = alpha[0]
        expo[n + j] = alpha[1]
        expo[2 * n + j] = alpha[2]
        out[tuple(expo)] = out.get(tuple(expo), 0) + 1
    return XPoly(n, out)


def _span_products(n: int, gens: list[XPoly], nfactors: int, d: tuple[int, int, int]) -> list[XPoly]:
    """Products of nfactors alternant generators (as a multiset) times a
    free monomial, homogeneous of tri-degree d."""
    degs = []
    usable = []
    for g in gens:
        gd = next(iter(g.tri_degrees()))
        if all(gd[i] <= d[i] for i in range(3)):
            usable.append(g)
            degs.append(gd)
    results: list[XPoly] = []

    def rec(start: int, level: int, acc: XPoly, accdeg: tuple[int, int, int]):
        if level == nfactors:
            rem = tuple(d[i] - accdeg[i] for i in range(3))
            for mono in _monomials_of_tridegree(n, rem):
                results.append(acc * XPoly(n, {mono: 1}))
            return
        for idx in range(start, len(usable)):
            gd = degs[idx]
            nd = tuple(accdeg[i] + gd[i] for i in range(3))
            if any(nd[i] > d[i] for i in range(3)):
                continue
            rec(idx, level + 1, acc * usable[idx], nd)

    rec(0, 0, XPoly.one(n), (0, 0, 0))
    return results


def higher_component(n: int, r: int, d: tuple[int, int, int], gens: list[XPoly]) -> list[dict]:
    """Basis of the tri-degree d component of H_n^(r)."""
    big = _span_products(n, gens, r - 1, d)
    vbasis = _independent_subset(big)
    if not vbasis:
        return []
    constraints: list[XPoly] = []
    alphas = [
        (a, b, c)
        for a in range(n + 1)
        for b in range(n + 1)
        for c in range(n + 1)
        if 1 <= a + b + c <= n
    ]
    for alpha in alphas:
        rem = tuple(d[i] - alpha[i] for i in range(3))
        if any(x < 0 for x in rem):
            continue
        pa = _power_sum_poly(n, alpha)
        for w in _span_products(n, gens, r - 1, rem):
            constraints.append(w * pa)
    rows = []
    for w in constraints:
        rows.append([scalar_product(XPoly(n, v), w) for v in vbasis])
    kernel = int_nullspace(rows, len(vbasis))
    out = []
    for coeffs in kernel:
        terms: dict = {}
        for j, c in enumerate(coeffs):
            if not c:
                continue
            for mono, bc in vbasis[j].items():
                s = terms.get(mono, 0) + c * bc
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        out.append(terms)
    return out


def _independent_subset(polys: list[XPoly]) -> list[dict]:
    ech = IntEchelon()
    out = []
    for p in polys:
        v = dict(p.terms)
        if ech.insert(v):
            out.append(v)
    return out


def higher_space(n: int, r: int, cutoff: int | None = None) -> GradedSpace:
    """H_n^(r) per tri-degree up to the cutoff (default r*C(n,2)).

    r = 1 is the plain harmonic space: A^0 spans the whole ring, and the
    orthogonality conditions against I_n cut out the kernel of the
    polarized power sums.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    cap = r * comb(n, 2) if cutoff is None else cutoff
    if cap < r * comb(n, 2):
        import warnings

        warnings.warn(
            f"cutoff {cap} cannot certify the top degree {r * comb(n, 2)}", stacklevel=2
        )
    gens = alternant_generators(n, cap) if r > 1 else []
    space = GradedSpace(n)
    for d in sorted_degrees_upto(cap):
        vecs = higher_component(n, r, d, gens)
        seen = {d}
        space.components[d] = vecs
        for perm in permutations((0, 1, 2)):
            nd = tuple(d[list(perm).index(i)] for i in range(3))
            if nd in seen:
                continue
            seen.add(nd)
            space.components[nd] = [_permute_vector_rows(v, n, perm) for v in vecs]
    return space


def isotypic_split_n2(space: GradedSpace, r: int) -> tuple[int, int]:
    """(invariant, alternant) dimensions of H_2^(r) via the trace of the
    transposition.

    For even r the diagonal action on the space is twisted by the sign
    representation, so the invariant component carries plain character
    sign^(r-1) and the alternant component sign^r.
    """
    if space.n != 2:
        raise ValueError("isotypic split implemented for n = 2 only")
    swap = (1, 0)
    plain_triv = plain_sign = 0
    for _, vectors in space.components.items():
        if not vectors:
            continue
        tr = _component_trace(vectors, 2, swap)
        k = len(vectors)
        di = Fraction(k + tr, 2)
        da = Fraction(k - tr, 2)
        assert di.denominator == 1 and da.denominator == 1
        plain_triv += int(di)
        plain_sign += int(da)
    if r % 2 == 0:
        return plain_sign, plain_triv
    return plain_triv, plain_sign
