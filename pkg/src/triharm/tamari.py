"""r-Dyck paths and the r-Tamari poset.

A path of height n is stored as its left-boundary sequence (a_1,..,a_n)
with 0 <= a_1 <= ... <= a_n and a_i <= r(i-1).  The poset on all such
paths is generated by the covering relation that decrements a primitive
subsequence at a rise; its largest element is 00..0.  Indices in the
public functions are 1-based, matching the boundary-sequence notation.
"""

import json
import os
from dataclasses import dataclass, field
from math import comb


@dataclass(frozen=True)
class DyckPath:
    r: int
    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1 or self.n < 1 or len(self.a) != self.n:
            raise ValueError("bad path parameters")
        prev = 0
        for i, ai in enumerate(self.a):
            if ai < prev or ai > self.r * i:
                raise ValueError(f"{self.a} is not an {self.r}-Dyck path")
            prev = ai

    def __str__(self):
        if all(x <= 9 for x in self.a):
            return "".join(map(str, self.a))
        return ",".join(map(str, self.a))

    @staticmethod
    def parse(text: str, r: int) -> "DyckPath":
        vals = [int(x) for x in text.split(",")] if "," in text else [int(ch) for ch in text]
        return DyckPath(r, len(vals), tuple(vals))


def enumerate_paths(n: int, r: int) -> list[DyckPath]:
    """All r-Dyck paths of height n, lexicographic in the a-sequence."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    seqs: list[tuple[int, ...]] = [()]
    for i in range(n):
        seqs = [s + (v,) for s in seqs for v in range((s[-1] if s else 0), r * i + 1)]
    return [DyckPath(r, n, s) for s in seqs]


def fuss_catalan(n: int, r: int) -> int:
    return comb((r + 1) * n, n) // (r * n + 1)


def co_path(beta: DyckPath) -> tuple[int, ...]:
    """Composition of run lengths of equal consecutive values."""
    runs = []
    run = 1
    for i in range(1, beta.n):
        if beta.a[i] == beta.a[i - 1]:
            run += 1
        else:
            runs.append(run)
            run = 1
    runs.append(run)
    return tuple(runs)


def area(beta: DyckPath) -> int:
    return beta.r * comb(beta.n, 2) - sum(beta.a)


def primitive_end(beta: DyckPath, i: int) -> int:
    """Last index k of the primitive subsequence starting at i (1-based):
    the path stays strictly above the slope line through (a_i, i) until
    its first return."""
    if not 1 <= i <= beta.n:
        raise ValueError("index out of range")
    a = beta.a
    k = i
    for j in range(i + 1, beta.n + 1):
        if a[j - 1] - a[i - 1] < beta.r * (j - i):
            k = j
        else:
            break
    return k


def up_covers(alpha: DyckPath) -> list[DyckPath]:
    """Elements covering alpha: decrement positions i..primitive_end(i)
    for each rise a_{i-1} < a_i."""
    out = []
    a = alpha.a
    for i in range(2, alpha.n + 1):
        if a[i - 2] < a[i - 1]:
            k = primitive_end(alpha, i)
            b = list(a)
            for j in range(i - 1, k):
                b[j] -= 1
            out.append(DyckPath(alpha.r, alpha.n, tuple(b)))
    return out


@dataclass
class TamariPoset:
    """Cover DAG over all r-Dyck paths of height n.

    up_cover_lists[i] holds indices of elements covering element i; the
    element order is the lexicographic enumeration order.  Downsets are
    bitmasks computed on demand; longest-chain tables are per-target DP
    results, memoized.
    """

    r: int
    n: int
    elements: list[DyckPath]
    up_cover_lists: list[list[int]]
    index: dict = field(repr=False)
    _downsets: list[int] | None = field(default=None, repr=False)
    _dist_cache: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.elements)

    def idx(self, p: DyckPath) -> int:
        return self.index[p.a]

    def _topo_by_sum_desc(self) -> list[int]:
        return sorted(range(len(self.elements)), key=lambda i: -sum(self.elements[i].a))

    def upsets(self) -> list[int]:
        """Bitmask per element of everything reachable upward (inclusive)."""
        masks = [0] * len(self.elements)
        for i in sorted(range(len(self.elements)), key=lambda i: sum(self.elements[i].a)):
            m = 1 << i
            for j in self.up_cover_lists[i]:
                m |= masks[j]
            masks[i] = m
        return masks

    def downsets(self) -> list[int]:
        if self._downsets is None:
            masks = [0] * len(self.elements)
            for i, up in enumerate(self.upsets()):
                bit = 1 << i
                while up:
                    lsb = up & -up
                    masks[lsb.bit_length() - 1] |= bit
                    up ^= lsb
            self._downsets = masks
        return self._downsets

    def leq(self, alpha: DyckPath, beta: DyckPath) -> bool:
        return bool(self.downsets()[self.idx(beta)] >> self.idx(alpha) & 1)

    def _distances_to(self, b: int) -> dict[int, int]:
        """Longest-chain length d(alpha, beta) for every alpha <= beta."""
        if b in self._dist_cache:
            return self._dist_cache[b]
        down = self.downsets()[b]
        members = [i for i in range(len(self.elements)) if down >> i & 1]
        members.sort(key=lambda i: sum(self.elements[i].a))
        dist = {b: 0}
        for i in members:
            if i == b:
                continue
            best = -1
            for j in self.up_cover_lists[i]:
                if j in dist:
                    best = max(best, dist[j])
            dist[i] = best + 1
        self._dist_cache[b] = dist
        return dist

    def longest_chain_length(self, alpha: DyckPath, beta: DyckPath) -> int:
        ia, ib = self.idx(alpha), self.idx(beta)
        dist = self._distances_to(ib)
        if ia not in dist:
            raise ValueError("not comparable")
        return dist[ia]

    def interval_poly(self, beta: DyckPath) -> tuple[int, ...]:
        """Coefficients of i_beta(q) = sum over alpha <= beta of
        q^d(alpha,beta), constant term first."""
        dist = self._distances_to(self.idx(beta))
        coeffs = [0] * (max(dist.values()) + 1)
        for d in dist.values():
            coeffs[d] += 1
        return tuple(coeffs)

    def interval_count(self, beta: DyckPath) -> int:
        return sum(self.interval_poly(beta))


def build_poset(n: int, r: int, cache_dir: str | None = None) -> TamariPoset:
    """Construct (or load from the JSON cover cache) the r-Tamari poset."""
    elements = enumerate_paths(n, r)
    index = {p.a: i for i, p in enumerate(elements)}
    cache_path = None
    if cache_dir is None:
        cache_dir = os.environ.get("TAMARI_CACHE_DIR")
    if cache_dir:
        cache_path = os.path.join(cache_dir, f"tamari_n{n}_r{r}.json")
        if os.path.exists(cache_path):
            with open(cache_path) as fh:
                data = json.load(fh)
            if data.get("schema_version") != 1 or data.get("n") != n or data.get("r") != r:
                raise ValueError(f"bad cache file {cache_path}")
            lists: list[list[int]] = [[] for _ in elements]
            for i, j in data["covers"]:
                lists[i].append(j)
            return TamariPoset(r, n, elements, lists, index)
    lists = [[index[c.a] for c in up_covers(p)] for p in elements]
    if cache_path:
        os.makedirs(cache_dir, exist_ok=True)
        covers = sorted((i, j) for i, lst in enumerate(lists) for j in lst)
        payload = {"schema_version": 1, "n": n, "r": r, "covers": [list(c) for c in covers]}
        with open(cache_path, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
    return TamariPoset(r, n, elements, lists, index)


def minimal_path(n: int, r: int) -> DyckPath:
    return DyckPath(r, n, tuple(r * i for i in range(n)))


def maximal_path(n: int, r: int) -> DyckPath:
    return DyckPath(r, n, (0,) * n)
