"""Coset-based equivalence test for constacyclic codes and the partition of
all divisors of x^n - a into detected equivalence classes.

The test is one-sided: a positive verdict comes with an exponent map
z -> e z + b (gcd(e, M) = 1, e + b = 1 mod r) carrying one root multiset
onto the other, which certifies equivalence.  A negative verdict only means
no such map exists.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import numpy as np

from .cosets import CCParams, CosetMultiset, LinearMapWitness, cc_params, multiset_to_poly, signature
from .gf import GF
from .polyring import Poly

DEFAULT_MAX_TOTAL = 2**25

STAGE_DEGREE = "degree-sum"
STAGE_DISTRIBUTION = "distribution"
STAGE_MAP = "map-search"


class PartitionTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    witness: LinearMapWitness | None
    prefilter: str
    ms1: CosetMultiset | None = None
    ms2: CosetMultiset | None = None

    def __post_init__(self):
        if self.equivalent != (self.witness is not None):
            raise ValueError("witness must be present exactly when equivalent")


@dataclass
class PartitionResult:
    params: CCParams
    total: int
    new: int
    multisets: list[CosetMultiset]
    generators: list[Poly] = field(default_factory=list)
    # classes[i - 1] = index (into multisets) of the class of candidate i
    classes: np.ndarray | None = None

    def candidate(self, i: int) -> CosetMultiset:
        """Multiset of candidate i (1 <= i <= total)."""
        if not 1 <= i <= self.total:
            raise IndexError(i)
        C = len(self.params.cosets)
        return CosetMultiset.from_digits(self.params, _digits(i, self.params.pt + 1, C))

    @property
    def net(self) -> int:
        return self.total - self.new


def distribution(params: CCParams, ms: CosetMultiset) -> Counter:
    """Histogram of (coset size, multiplicity) over cosets present in ms."""
    hist: Counter = Counter()
    for c in params.cosets:
        m = ms[c[0]]
        if m:
            hist[(len(c), m)] += 1
    return hist


def units_mod(M: int) -> list[int]:
    return [e for e in range(1, M + 1) if math.gcd(e, M) == 1] if M > 1 else [1]


def exists_linear_map(ms1: CosetMultiset, ms2: CosetMultiset, M: int, r: int) -> LinearMapWitness | None:
    """Search z -> e z + b with mult2[e z + b] = mult1[z] for every z.

    The image of the smallest exponent of ms1 is anchored to each exponent of
    ms2 carrying the same multiplicity, which fixes b for a given e.
    """
    if ms1.total != ms2.total or len(ms1.mult) != len(ms2.mult):
        return None
    if not ms1.mult:
        return LinearMapWitness(1, 0, M)
    items = list(ms1.mult.items())
    z0, m0 = items[0]
    targets = [w for w, m in ms2.mult.items() if m == m0]
    mult2 = ms2.mult
    for e in units_mod(M):
        e %= M
        for w in targets:
            b = (w - e * z0) % M
            if (e + b - 1) % r:
                continue
            if all(mult2.get((e * z + b) % M) == m for z, m in items):
                return LinearMapWitness(e, b, M)
    return None


def coset_eq(params: CCParams, ms1: CosetMultiset, ms2: CosetMultiset) -> EquivVerdict:
    """The three-stage test on two root multisets."""
    if ms1.total != ms2.total:
        return EquivVerdict(False, None, STAGE_DEGREE, ms1, ms2)
    if distribution(params, ms1) != distribution(params, ms2):
        return EquivVerdict(False, None, STAGE_DISTRIBUTION, ms1, ms2)
    w = exists_linear_map(ms1, ms2, params.M, params.r)
    if w is not None and w.apply(ms1) != ms2:
        raise AssertionError("witness does not carry ms1 onto ms2")
    return EquivVerdict(w is not None, w, STAGE_MAP, ms1, ms2)


def cc_coset_eq(q: int | GF, n: int, a: int, g1: Poly, g2: Poly) -> EquivVerdict:
    """Decide (sufficiently) whether <g1> and <g2> are equivalent codes."""
    params = cc_params(q, n, a)
    delta = params.delta
    ms1 = signature(params, delta, g1)
    ms2 = signature(params, delta, g2)
    return coset_eq(params, ms1, ms2)


# ---------------------------------------------------------------------------
# Partition


def _group_maps(params: CCParams) -> np.ndarray:
    """Exponent maps e z + b as position permutations of ``params.elements``.

    Multipliers that differ by a power of q act identically on coset-closed
    multisets, so only one e per coset of <q> in the unit group is kept.
    """
    M, r, q = params.M, params.r, params.F.q
    pos = {z: i for i, z in enumerate(params.elements)}
    seen: set[int] = set()
    es = []
    for e in units_mod(M):
        e %= M
        if e in seen:
            continue
        es.append(e)
        w = e
        while True:
            seen.add(w)
            w = w * q % M
            if w == e:
                break
    Z = np.array(params.elements, dtype=np.int64)
    perms = []
    for e in es:
        for b in range(M):
            if (e + b - 1) % r:
                continue
            perms.append([pos[int(z)] for z in (e * Z + b) % M])
    return np.array(perms, dtype=np.int64)


def _digits(i: int, base: int, C: int) -> np.ndarray:
    return np.array([(i // base**j) % base for j in range(C)], dtype=np.int64)


def partition(
    q: int | GF,
    n: int,
    a: int,
    parallelism: int = 1,
    max_total: int = DEFAULT_MAX_TOTAL,
    with_generators: bool = True,
    method: str = "orbit",
) -> PartitionResult:
    """Split the nontrivial divisors of x^n - a into detected classes.

    Candidates are enumerated as i = 1..total, digit j of i in base p^t + 1
    (least significant first) giving the multiplicity of coset j.  A
    candidate becomes a new representative when no earlier representative
    maps onto it.  ``method="fold"`` runs that comparison literally with the
    three-stage test; ``method="orbit"`` (default) marks, for each new
    representative, every valid image under the map group, which decides the
    same predicate because the maps form a group.
    """
    params = cc_params(q, n, a)
    C = len(params.cosets)
    base = params.pt + 1
    total = base**C - 2
    if total > max_total:
        raise PartitionTooLarge(f"{total} divisors exceeds the cap {max_total}")
    if method == "fold":
        reps, labels = _partition_fold(params, total)
    elif method == "orbit":
        reps, labels = _partition_orbit(params, total, parallelism)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = PartitionResult(params, total, len(reps), reps, classes=labels[1 : total + 1])
    if with_generators:
        delta = params.delta
        result.generators = [multiset_to_poly(params, delta, ms).monic() for ms in reps]
    return result


def _partition_fold(params: CCParams, total: int) -> tuple[list[CosetMultiset], np.ndarray]:
    C = len(params.cosets)
    base = params.pt + 1
    buckets: dict[tuple, list[tuple[int, CosetMultiset]]] = {}
    reps: list[CosetMultiset] = []
    labels = np.full(total + 2, -1, dtype=np.int64)
    for i in range(1, total + 1):
        ms = CosetMultiset.from_digits(params, _digits(i, base, C))
        key = (ms.total, tuple(sorted(distribution(params, ms).items())))
        bucket = buckets.setdefault(key, [])
        for j, old in bucket:
            if exists_linear_map(old, ms, params.M, params.r) is not None:
                labels[i] = j
                break
        else:
            labels[i] = len(reps)
            bucket.append((len(reps), ms))
            reps.append(ms)
    return reps, labels


def _partition_orbit(params: CCParams, total: int, parallelism: int) -> tuple[list[CosetMultiset], np.ndarray]:
    C = len(params.cosets)
    base = params.pt + 1
    pos = {z: i for i, z in enumerate(params.elements)}
    cid = np.empty(len(params.elements), dtype=np.int64)
    for j, c in enumerate(params.cosets):
        for z in c:
            cid[pos[z]] = j
    lead = np.array([pos[c[0]] for c in params.cosets], dtype=np.int64)
    powers = base ** np.arange(C, dtype=np.int64)
    perms = _group_maps(params)
    inv = np.argsort(perms, axis=1)
    labels = np.full(total + 2, -1, dtype=np.int64)
    chunks = np.array_split(inv, max(1, parallelism)) if parallelism > 1 else [inv]

    def images(block: np.ndarray, ms: np.ndarray) -> np.ndarray:
        rows = ms[block]
        d = rows[:, lead]
        ok = (rows == d[:, cid]).all(axis=1)
        return d[ok] @ powers

    pool = ThreadPoolExecutor(parallelism) if parallelism > 1 else None
    reps = []
    try:
        for i in range(1, total + 1):
            if labels[i] >= 0:
                continue
            digits = _digits(i, base, C)
            j = len(reps)
            reps.append(CosetMultiset.from_digits(params, digits))
            ms = digits[cid]
            if pool is None:
                labels[images(inv, ms)] = j
            else:
                for idx in pool.map(lambda blk: images(blk, ms), chunks):
                    labels[idx] = j
    finally:
        if pool is not None:
            pool.shutdown()
    return reps, labels
