"""Certified exact integer nullspaces.

Small systems go straight to exact row reduction over Fractions.  Large
systems first run a mod-p elimination (vectorized) to locate pivot rows
and columns, then reduce only the selected pivot rows exactly, and
finally certify the candidate kernel vectors against every original row
by exact integer dot products.  A mod-p rank is a lower bound on the
rational rank, so once cols - rank_p verified vectors are in hand the
kernel is exactly determined; if certification ever fails the system
falls back to the fully exact path.
"""

from fractions import Fraction
from math import gcd

import numpy as np

_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579)


def _modp_pivots(rows: list, ncols: int, p: int):
    """Row-reduce mod p; returns (pivot_cols, original indices of the
    rows supplying each pivot)."""
    mat = np.array(rows, dtype=np.int64) % p
    nrows = mat.shape[0]
    orig = list(range(nrows))
    piv_cols: list[int] = []
    piv_rows: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(mat[r:, col])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            mat[[r, sel]] = mat[[sel, r]]
            orig[r], orig[sel] = orig[sel], orig[r]
        inv = pow(int(mat[r, col]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        below = np.nonzero(mat[r + 1 :, col])[0]
        if below.size:
            idx = below + r + 1
            mat[idx] = (mat[idx] - np.outer(mat[idx, col], mat[r])) % p
        piv_cols.append(col)
        piv_rows.append(orig[r])
        r += 1
    return piv_cols, piv_rows


def exact_rref(rows: list, ncols: int):
    """Reduced row echelon form over Fractions.

    Returns (pivot_cols, rref_rows); each returned row has a leading 1
    in its pivot column and zeros in every other pivot column.
    """
    echelon: dict[int, list] = {}
    for row in rows:
        work = [Fraction(x) for x in row]
        for col in sorted(echelon):
            if work[col]:
                f = work[col]
                piv = echelon[col]
                for cidx in range(col, ncols):
                    if piv[cidx]:
                        work[cidx] -= f * piv[cidx]
        lead = next((c for c in range(ncols) if work[c]), None)
        if lead is None:
            continue
        inv = work[lead]
        work = [x / inv for x in work]
        for col, piv in echelon.items():
            if piv[lead]:
                f = piv[lead]
                for cidx in range(ncols):
                    if work[cidx]:
                        piv[cidx] -= f * work[cidx]
        echelon[lead] = work
    piv_cols = sorted(echelon)
    return piv_cols, [echelon[c] for c in piv_cols]


def _kernel_from_rref(piv_cols: list[int], rref: list, ncols: int) -> list[tuple[int, ...]]:
    pivset = set(piv_cols)
    free_cols = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for prow, pcol in zip(rref, piv_cols):
            vec[pcol] = -prow[f]
        lcm = 1
        for x in vec:
            if x.denominator != 1:
                g = gcd(lcm, x.denominator)
                lcm = lcm // g * x.denominator
        ints = [int(x * lcm) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        g = g or 1
        ints = [x // g for x in ints]
        first = next(x for x in ints if x)
        if first < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def _verify(rows: list, vec: tuple[int, ...]) -> bool:
    for row in rows:
        if sum(r * v for r, v in zip(row, vec) if r and v):
            return False
    return True


def int_nullspace(rows: list, ncols: int) -> list[tuple[int, ...]]:
    """Exact nullspace basis (primitive integer vectors) of an integer
    matrix given as a list of dense rows."""
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        basis = []
        for f in range(ncols):
            v = [0] * ncols
            v[f] = 1
            basis.append(tuple(v))
        return basis
    if ncols <= 48 or len(rows) <= 48:
        piv_cols, rref = exact_rref(rows, ncols)
        return _kernel_from_rref(piv_cols, rref, ncols)
    for p in _PRIMES:
        piv_cols_p, piv_row_idx = _modp_pivots(rows, ncols, p)
        subset = [rows[i] for i in piv_row_idx]
        piv_cols, rref = exact_rref(subset, ncols)
        if piv_cols != piv_cols_p:
            continue
        basis = _kernel_from_rref(piv_cols, rref, ncols)
        if all(_verify(rows, v) for v in basis):
            # rank_p <= exact rank and len(basis) independent exact kernel
            # vectors force equality: the kernel is certified.
            return basis
    piv_cols, rref = exact_rref(rows, ncols)
    return _kernel_from_rref(piv_cols, rref, ncols)


def int_rank(rows: list, ncols: int) -> int:
    """Exact rank of an integer matrix (certified via the same route)."""
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        return 0
    return ncols - len(int_nullspace(rows, ncols))


class IntEchelon:
    """Incremental integer row echelon over sparse dict vectors, used to
    maintain bases of growing spaces (closure iteration, span ranks)."""

    def __init__(self):
        self.pivots: dict = {}

    def _reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for key in sorted(self.pivots):
            if key in vec and vec[key]:
                piv = self.pivots[key]
                a, b = vec[key], piv[key]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                out = {}
                for m, c in vec.items():
                    out[m] = c * ma
                for m, c in piv.items():
                    s = out.get(m, 0) - c * mb
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
                vec = out
        return vec

    def insert(self, vec: dict) -> bool:
        """Reduce and insert; returns True when the vector was new."""
        vec = self._reduce(vec)
        if not vec:
            return False
        g = 0
        for c in vec.values():
            g = gcd(g, abs(c))
        g = g or 1
        vec = {m: c // g for m, c in vec.items()}
        lead = min(vec)
        if vec[lead] < 0:
            vec = {m: -c for m, c in vec.items()}
        self.pivots[lead] = vec
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> list[dict]:
        return [self.pivots[k] for k in sorted(self.pivots)]


def solve_exact(mat_rows: list, rhs_cols: list, ncols: int):
    """Solve M x = b for several right-hand sides at once over Fractions;
    returns the solution list or None when inconsistent.  M is given by
    dense rows; must have full column rank."""
    aug = [list(row) + list(r) for row, r in zip(mat_rows, rhs_cols)]
    nrhs = len(rhs_cols[0]) if rhs_cols else 0
    piv_cols, rref = exact_rref(aug, ncols + nrhs)
    sols = [[Fraction(0)] * nrhs for _ in range(ncols)]
    for pcol, prow in zip(piv_cols, rref):
        if pcol >= ncols:
            return None
        for j in range(nrhs):
            sols[pcol][j] = prow[ncols + j]
    if len(piv_cols) < ncols:
        free = [c for c in range(ncols) if c not in set(piv_cols)]
        raise ValueError(f"system is underdetermined in columns {free}")
    return sols
