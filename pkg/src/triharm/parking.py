"""r-parking functions: rearrangement, shape, descents, dinv.

Values are 0-based, matching the smallest value 0 in the length-3 lists
of the r=2 case.  A sequence f is an r-parking function when its sorted
values satisfy b_k <= r(k-1); the sorted profile is its shape, an
r-Dyck path.
"""

from dataclasses import dataclass, field

from .tamari import DyckPath


def rearrange(f, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lex-increasing rearrangement: stable sort of (position, value)
    pairs by value; returns (alpha, beta) = (positions, sorted values),
    with positions 1-based."""
    pairs = sorted(((v, i + 1) for i, v in enumerate(f)))
    alpha = tuple(p for _, p in pairs)
    beta = tuple(v for v, _ in pairs)
    return alpha, beta


def is_parking(f, r: int) -> bool:
    if any(v < 0 for v in f):
        return False
    b = sorted(f)
    return all(b[k] <= r * k for k in range(len(b)))


def diagonal_offsets(beta: tuple[int, ...], r: int) -> tuple[int, ...]:
    """c_i = r*i - b_i with rows numbered from 1."""
    return tuple(r * (i + 1) - b for i, b in enumerate(beta))


def reading_word(f, r: int) -> tuple[int, ...]:
    """Cars read along diagonals: rows ordered by (c_i, i) increasing.

    The descent composition of the inverse of this word is the one whose
    shapewise fundamental sums reproduce h_co(beta); the naive descent
    set of alpha(f) itself does not.
    """
    alpha, beta = rearrange(f, r)
    c = diagonal_offsets(beta, r)
    order = sorted(range(len(f)), key=lambda i: (c[i], i))
    return tuple(alpha[i] for i in order)


@dataclass(frozen=True)
class ParkingFunction:
    r: int
    f: tuple[int, ...]
    alpha: tuple[int, ...] = field(init=False)
    beta: tuple[int, ...] = field(init=False)
    offsets: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not is_parking(self.f, self.r):
            raise ValueError(f"{self.f} is not an {self.r}-parking function")
        alpha, beta = rearrange(self.f, self.r)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "offsets", diagonal_offsets(beta, self.r))

    @property
    def n(self) -> int:
        return len(self.f)

    def to_json(self) -> dict:
        return {
            "f": list(self.f),
            "shape": list(self.beta),
            "co": list(descent_composition(self.f, self.r)),
            "dinv": dinv(self.f, self.r),
        }


def shape(f, r: int) -> DyckPath:
    if not is_parking(f, r):
        raise ValueError(f"{tuple(f)} is not an {r}-parking function")
    return DyckPath(r, len(f), tuple(sorted(f)))


def descent_composition(f, r: int) -> tuple[int, ...]:
    """Composition recording the descents of the rearrangement of f,
    read through the diagonal reading word (see reading_word)."""
    if not is_parking(f, r):
        raise ValueError(f"{tuple(f)} is not an {r}-parking function")
    w = reading_word(f, r)
    pos = {car: i for i, car in enumerate(w)}
    n = len(f)
    out, prev = [], 0
    for k in range(1, n):
        if pos[k + 1] < pos[k]:
            out.append(k - prev)
            prev = k
    out.append(n - prev)
    return tuple(out)


def dinv(f, r: int) -> int:
    """Number of D-inversion triples (i, j, d), 1 <= i < j <= n and
    0 <= d <= r-1, of the rearranged two-line array."""
    if not is_parking(f, r):
        raise ValueError(f"{tuple(f)} is not an {r}-parking function")
    alpha, beta = rearrange(f, r)
    c = diagonal_offsets(beta, r)
    n = len(f)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            for d in range(r):
                t = c[i] - c[j] + d
                if t == 0 and alpha[i] < alpha[j]:
                    count += 1
                elif 1 <= t <= r - 1:
                    count += 1
                elif t == r and alpha[i] > alpha[j]:
                    count += 1
    return count


def _multiset_perms(values: tuple[int, ...]):
    """Distinct permutations of a sorted value tuple, lexicographic."""
    n = len(values)
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    out: list[int] = [0] * n

    def place(k):
        if k == n:
            yield tuple(out)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                out[k] = v
                yield from place(k + 1)
                counts[v] += 1

    yield from place(0)


def pf_of_shape(beta: DyckPath) -> list[ParkingFunction]:
    """All parking functions of the given shape: the distinct
    rearrangements of the path's value sequence."""
    return [ParkingFunction(beta.r, f) for f in _multiset_perms(beta.a)]


def all_parking(n: int, r: int) -> list[ParkingFunction]:
    from .tamari import enumerate_paths

    out = []
    for beta in enumerate_paths(n, r):
        out.extend(pf_of_shape(beta))
    return out


def count_parking(n: int, r: int) -> int:
    return (r * n + 1) ** (n - 1)
