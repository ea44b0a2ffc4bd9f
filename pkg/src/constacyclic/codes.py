"""Linear codes over GF(q): duals, minimum distance, weight enumeration and
the self-orthogonal / dual-containing / LCD / self-dual / reversible /
two-weight property battery."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .cosets import CCParams, CosetError
from .gf import GF
from .polyring import Poly, divides

DEFAULT_CAP = 2**26


class CodeError(ValueError):
    pass


def rref(F: GF, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(q) with zero rows removed."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise CodeError("expected a matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if not len(nz):
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = F.vmul(F.inv(int(R[r, c])), R[r])
        col = R[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if len(others):
            R[others] = F.vsub(R[others], F.vmul(col[others, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: GF, A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


@dataclass(frozen=True, eq=False)
class LinearCode:
    """The row space of ``G`` (k x n, full row rank) over ``F``.

    ``lower``/``upper`` carry distance bounds known from a construction.
    """

    F: GF
    G: np.ndarray
    lower: int | None = None
    upper: int | None = None

    def __post_init__(self):
        G = np.asarray(self.G, dtype=np.int64)
        if G.ndim != 2:
            raise CodeError("generator must be a 2-d array")
        object.__setattr__(self, "G", G)
        if G.shape[0] and rank(self.F, G) != G.shape[0]:
            raise CodeError("generator rows are linearly dependent")

    @classmethod
    def from_rows(cls, F: GF, rows, n: int | None = None, **bounds) -> "LinearCode":
        """Code spanned by arbitrary (possibly dependent) rows."""
        A = np.asarray(rows, dtype=np.int64)
        if A.size == 0:
            return cls(F, np.zeros((0, n if n is not None else (A.shape[1] if A.ndim == 2 else 0)), dtype=np.int64), **bounds)
        R, _ = rref(F, A)
        return cls(F, R, **bounds)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @cached_property
    def _rref(self) -> tuple[np.ndarray, list[int]]:
        if self.k == 0:
            return np.zeros((0, self.n), dtype=np.int64), []
        return rref(self.F, self.G)

    @property
    def rref(self) -> np.ndarray:
        return self._rref[0]

    @property
    def pivots(self) -> list[int]:
        return self._rref[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.F is other.F
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.rref, other.rref)
        )

    __hash__ = None  # type: ignore[assignment]

    def solve(self, v) -> np.ndarray | None:
        """Message x with x G_rref = v, or None if v is not a codeword."""
        v = np.asarray(v, dtype=np.int64)
        R, piv = self._rref
        x = v[piv]
        if self.k:
            recon = self.F.matmul(x[None, :], R)[0]
        else:
            recon = np.zeros(self.n, dtype=np.int64)
        return x if np.array_equal(recon, v) else None

    def contains(self, v) -> bool:
        return self.solve(v) is not None

    def contains_code(self, other: "LinearCode") -> bool:
        if other.n != self.n:
            return False
        return all(self.contains(row) for row in other.G)

    def encode(self, msgs: np.ndarray) -> np.ndarray:
        return self.F.matmul(np.atleast_2d(msgs), self.G)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.F.q})"


@dataclass(frozen=True)
class DistanceResult:
    d: int
    exact: bool
    lower: int
    upper: int
    method: str
    words: int = 0


@dataclass(frozen=True)
class PropertySet:
    selfOrthogonal: bool
    dualContaining: bool
    lcd: bool
    selfDual: bool
    reversible: bool
    twoWeight: bool | None
    weightValues: tuple[int, ...] | None
    hullDimension: int

    def as_dict(self) -> dict:
        return {
            "selfOrthogonal": self.selfOrthogonal,
            "dualContaining": self.dualContaining,
            "lcd": self.lcd,
            "selfDual": self.selfDual,
            "reversible": self.reversible,
            "twoWeight": self.twoWeight,
            "weightValues": list(self.weightValues) if self.weightValues is not None else None,
            "hullDimension": self.hullDimension,
        }


# ---------------------------------------------------------------------------
# Constructors


def cc_code(params: CCParams, g: Poly) -> LinearCode:
    """Constacyclic code <g>: rows x^i g, i < k = n - deg g."""
    F, n = params.F, params.n
    if g.F is not F:
        raise CodeError("field mismatch")
    if g.is_zero() or not divides(g, params.x_n_minus_a):
        raise CosetError("g does not divide x^n - a")
    if g.degree >= n:
        raise CodeError("deg g must be < n")
    k = n - g.degree
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + g.degree + 1] = g.coeffs
    C = LinearCode(F, G)
    for row in G[: min(k, 4)]:
        if not C.contains(constacyclic_shift(F, row, params.a)):
            raise AssertionError("code is not closed under the constacyclic shift")
    return C


def constacyclic_shift(F: GF, c: np.ndarray, a: int) -> np.ndarray:
    """(c0, ..., c_{n-1}) -> (a c_{n-1}, c0, ..., c_{n-2})."""
    out = np.roll(np.asarray(c, dtype=np.int64), 1)
    out[0] = F.mul(a, int(out[0]))
    return out


def dual(C: LinearCode) -> LinearCode:
    F, n, k = C.F, C.n, C.k
    if k == 0:
        return LinearCode(F, np.eye(n, dtype=np.int64))
    R, piv = C._rref
    free = [j for j in range(n) if j not in set(piv)]
    H = np.zeros((n - k, n), dtype=np.int64)
    for i, j in enumerate(free):
        H[i, j] = 1
        H[i, piv] = F.vneg(R[:, j])
    return LinearCode(F, H)


# ---------------------------------------------------------------------------
# Enumeration


def _span(F: GF, rows: np.ndarray) -> np.ndarray:
    """All q^len(rows) combinations of rows."""
    n = rows.shape[1]
    words = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        scaled = np.stack([F.vmul(c, row) for c in range(F.q)])  # q x n
        words = F.vadd(words[None, :, :], scaled[:, None, :]).reshape(-1, n)
    return words


def _iter_chunks(C: LinearCode, chunk: int = 2**16) -> Iterator[np.ndarray]:
    """Yield blocks of codewords that together cover C exactly once."""
    F, k = C.F, C.k
    k1 = k
    while k1 > 0 and F.q**k1 > chunk:
        k1 -= 1
    base = _span(F, C.G[:k1]) if k1 else np.zeros((1, C.n), dtype=np.int64)
    rest = C.G[k1:]
    for coeffs in itertools.product(range(F.q), repeat=k - k1):
        if rest.shape[0]:
            v = F.matmul(np.array(coeffs, dtype=np.int64)[None, :], rest)[0]
            yield F.vadd(base, v[None, :])
        else:
            yield base


def weight_distribution(C: LinearCode, cap: int = DEFAULT_CAP, chunk: int = 2**16) -> dict[int, int]:
    """Exact weight distribution by enumerating all q^k codewords."""
    if C.F.q**C.k > cap:
        raise CodeError(f"q^k = {C.F.q}^{C.k} exceeds the enumeration cap {cap}")
    hist = np.zeros(C.n + 1, dtype=np.int64)
    for block in _iter_chunks(C, chunk):
        hist += np.bincount(np.count_nonzero(block, axis=1), minlength=C.n + 1)
    return {w: int(c) for w, c in enumerate(hist) if c}


def _information_sets(C: LinearCode) -> list[tuple[np.ndarray, int]]:
    """Systematic generators on successive (as far as possible disjoint)
    information sets, with the number of fresh pivot columns in each."""
    F, n = C.F, C.n
    used: list[int] = []
    out = []
    while len(used) < n:
        unused = [j for j in range(n) if j not in set(used)]
        order = unused + used
        R, piv = rref(F, C.G[:, order])
        fresh = [order[p] for p in piv if p < len(unused)]
        if not fresh:
            break
        inv = np.argsort(order)
        out.append((R[:, inv], len(fresh)))
        used.extend(fresh)
    return out


def _coeff_combos(F: GF, w: int) -> np.ndarray:
    """Nonzero coefficient vectors of length w with leading entry 1."""
    if w == 0:
        return np.zeros((1, 0), dtype=np.int64)
    tails = list(itertools.product(range(1, F.q), repeat=w - 1))
    return np.array([(1,) + t for t in tails], dtype=np.int64)


def _combos_min_weight(F: GF, R: np.ndarray, w: int, batch: int, limit: int | None = None) -> tuple[int, int, bool]:
    """Min weight over all codewords whose message has weight exactly w.

    Stops early (third value False) once more than ``limit`` words were
    generated.
    """
    k, n = R.shape
    coef = _coeff_combos(F, w)
    best = n + 1
    count = 0
    subsets = itertools.combinations(range(k), w)
    per = max(1, batch // max(1, len(coef)))
    while True:
        block = list(itertools.islice(subsets, per))
        if not block:
            break
        idx = np.array(block, dtype=np.int64)
        rows = R[idx]  # s x w x n
        if F.is_prime:
            words = np.matmul(coef[None, :, :], rows) % F.p  # s x c x n
        else:
            words = np.zeros((len(idx), len(coef), n), dtype=np.int64)
            for i in range(w):
                words = F.ADD[words, F.MUL[coef[None, :, i, None], rows[:, None, i, :]]]
        wt = np.count_nonzero(words, axis=2)
        best = min(best, int(wt.min()))
        count += wt.size
        if limit is not None and count > limit:
            return best, count, False
    return best, count, True


def min_distance(
    C: LinearCode,
    cap: int = DEFAULT_CAP,
    budget: int = 10**8,
    chunk: int = 2**16,
    method: str = "auto",
) -> DistanceResult:
    """Minimum distance.

    Full enumeration when q^k <= cap, otherwise information-set enumeration
    over successive information sets until the bounds meet or ``budget``
    codewords have been generated.
    """
    F, n, k = C.F, C.n, C.k
    if k == 0:
        raise CodeError("minimum distance of the zero code is undefined")
    if method == "auto":
        method = "enumeration" if F.q**k <= cap else "information-set"
    if method == "enumeration":
        best = n
        words = 0
        for block in _iter_chunks(C, chunk):
            wt = np.count_nonzero(block, axis=1)
            wt = wt[wt > 0]
            if len(wt):
                best = min(best, int(wt.min()))
            words += len(block)
        return DistanceResult(best, True, best, best, "enumeration", words)
    if method != "information-set":
        raise ValueError(f"unknown method {method!r}")
    return _brouwer_zimmermann(C, budget, chunk)


def _brouwer_zimmermann(C: LinearCode, budget: int, batch: int) -> DistanceResult:
    F, n, k = C.F, C.n, C.k
    sets = _information_sets(C)
    upper = n - k + 1
    for R, _ in sets:
        wt = np.count_nonzero(R, axis=1)
        upper = min(upper, int(wt.min()))
    lower = 1
    words = 0
    for w in range(1, k + 1):
        if lower >= upper:
            break
        for R, fresh in sets:
            best, cnt, complete = _combos_min_weight(F, R, w, batch, budget - words)
            words += cnt
            upper = min(upper, best)
            if not complete:
                return DistanceResult(upper, lower >= upper, min(lower, upper), upper, "information-set", words)
        lower = max(lower, sum(max(0, w + 1 - (k - fresh)) for _, fresh in sets))
    exact = lower >= upper
    return DistanceResult(upper, exact, min(lower, upper), upper, "information-set", words)


# ---------------------------------------------------------------------------
# Properties


def gram(C: LinearCode) -> np.ndarray:
    return C.F.matmul(C.G, C.G.T)


def hull_dimension(C: LinearCode) -> int:
    """dim(C and its dual), from the rank defect of G G^T."""
    if C.k == 0:
        return 0
    return C.k - rank(C.F, gram(C))


def hull_dimension_by_intersection(C: LinearCode) -> int:
    """dim(C and its dual) = k + (n - k) - rank [G; H]."""
    D = dual(C)
    stacked = np.vstack([C.G, D.G]) if C.k and D.k else (C.G if C.k else D.G)
    return C.k + D.k - rank(C.F, stacked)


def is_reversible(C: LinearCode) -> bool:
    rev = LinearCode(C.F, C.G[:, ::-1])
    return np.array_equal(C.rref, rev.rref)


def classify(C: LinearCode, cap: int = DEFAULT_CAP) -> PropertySet:
    F, n, k = C.F, C.n, C.k
    Gm = gram(C) if k else np.zeros((0, 0), dtype=np.int64)
    so = not np.any(Gm)
    D = dual(C)
    dual_containing = C.contains_code(D)
    hull = hull_dimension(C)
    lcd = hull == 0
    two_weight = None
    values = None
    if F.q**k <= cap:
        dist = weight_distribution(C, cap)
        values = tuple(sorted(w for w in dist if w > 0))
        two_weight = len(values) <= 2
    return PropertySet(
        selfOrthogonal=so,
        dualContaining=dual_containing,
        lcd=lcd,
        selfDual=so and 2 * k == n,
        reversible=is_reversible(C),
        twoWeight=two_weight,
        weightValues=values,
        hullDimension=hull,
    )
