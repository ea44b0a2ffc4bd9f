"""Derived codes (extend, puncture, shorten, Construction X) and the
recursive extend/puncture/shorten search against a table of best known
minimum distances."""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Protocol

import numpy as np

from .codes import CodeError, DistanceResult, LinearCode, min_distance, rank

OPS = ("extend", "puncture", "shorten", "constructionX")
SUFFIX = {"extend": "e", "puncture": "p", "shorten": "s"}


class BklcError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Elementary constructions


def extend(C: LinearCode) -> LinearCode:
    """Append a check coordinate making every codeword sum to zero."""
    F = C.F
    if C.k == 0:
        return LinearCode(F, np.zeros((0, C.n + 1), dtype=np.int64))
    s = np.zeros(C.k, dtype=np.int64)
    for j in range(C.n):
        s = F.vadd(s, C.G[:, j])
    G = np.hstack([C.G, F.vneg(s)[:, None]])
    return LinearCode(F, G)


def _check_pos(C: LinearCode, pos: int) -> None:
    if C.n < 2:
        raise CodeError("length must be at least 2")
    if not 0 <= pos < C.n:
        raise IndexError(f"position {pos} out of range for length {C.n}")


def puncture(C: LinearCode, pos: int) -> LinearCode:
    """Delete coordinate ``pos`` (the dimension drops only if some codeword
    was supported on ``pos`` alone)."""
    _check_pos(C, pos)
    return LinearCode.from_rows(C.F, np.delete(C.G, pos, axis=1), n=C.n - 1)


def shorten(C: LinearCode, pos: int) -> LinearCode:
    """Keep the codewords vanishing at ``pos`` and delete that coordinate."""
    _check_pos(C, pos)
    if C.k == 0:
        raise CodeError("cannot shorten the zero code")
    F = C.F
    G = C.G.copy()
    nz = np.nonzero(G[:, pos])[0]
    if len(nz):
        i = nz[0]
        G[i] = F.vmul(F.inv(int(G[i, pos])), G[i])
        others = nz[1:]
        if len(others):
            G[others] = F.vsub(G[others], F.vmul(G[others, pos][:, None], G[i][None, :]))
        G = np.delete(G, i, axis=0)
    return LinearCode(F, np.delete(G, pos, axis=1))


@dataclass(frozen=True)
class Candidate:
    """A derived code with the distance figure used to rank it."""

    code: LinearCode
    d: int | None
    exact: bool
    pos: int | None = None


def _evaluate(C: LinearCode, budget: int) -> DistanceResult:
    return min_distance(C, budget=budget)


def _best(C: LinearCode, op: Callable[[LinearCode, int], LinearCode], budget: int, threads: int) -> Candidate:
    def score(pos: int) -> Candidate:
        D = op(C, pos)
        r = _evaluate(D, budget)
        return Candidate(D, r.d if r.exact else r.lower, r.exact, pos)

    positions = range(C.n)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            cands = list(pool.map(score, positions))
    else:
        cands = [score(p) for p in positions]
    # max d, lowest index on ties (max keeps the first maximum)
    return max(cands, key=lambda c: c.d if c.d is not None else -1)


def best_puncture(C: LinearCode, budget: int = 10**7, threads: int = 1) -> tuple[LinearCode, int]:
    c = _best(C, puncture, budget, threads)
    return c.code, c.pos


def best_shorten(C: LinearCode, budget: int = 10**7, threads: int = 1) -> tuple[LinearCode, int]:
    c = _best(C, shorten, budget, threads)
    return c.code, c.pos


def construction_x(
    parent: LinearCode,
    subcode: LinearCode,
    aux: LinearCode,
    d_parent: int | None = None,
    d_sub: int | None = None,
    d_aux: int | None = None,
) -> LinearCode:
    """Construction X.

    The subcode is padded with zeros; a complement of the subcode inside the
    parent is glued row by row onto the generators of ``aux``.  The result has
    length n + n_aux, dimension dim(parent), and minimum distance at least
    min(d_sub, d_parent + d_aux); that bound is stored as ``lower`` when all
    three inputs are known (explicitly or through the codes' own ``lower``).
    """
    F = parent.F
    if subcode.F is not F or aux.F is not F:
        raise CodeError("field mismatch")
    if subcode.n != parent.n:
        raise CodeError("parent and subcode lengths differ")
    if not parent.contains_code(subcode):
        raise CodeError("subcode is not contained in parent")
    if parent.k - subcode.k != aux.k:
        raise CodeError(f"dim(parent) - dim(subcode) = {parent.k - subcode.k} != dim(aux) = {aux.k}")
    reps = []
    basis = subcode.G
    for row in parent.rref:
        trial = np.vstack([basis, row]) if basis.shape[0] else row[None, :]
        if rank(F, trial) > basis.shape[0]:
            reps.append(row)
            basis = trial
    assert len(reps) == aux.k
    top = np.hstack([subcode.G, np.zeros((subcode.k, aux.n), dtype=np.int64)])
    if reps:
        bottom = np.hstack([np.array(reps, dtype=np.int64), aux.G])
        G = np.vstack([top, bottom])
    else:
        G = top
    d_parent = d_parent if d_parent is not None else parent.lower
    d_sub = d_sub if d_sub is not None else subcode.lower
    d_aux = d_aux if d_aux is not None else aux.lower
    if aux.k == 0:
        d_aux = 0 if d_aux is None else d_aux
    lower = None
    if None not in (d_parent, d_sub, d_aux):
        lower = min(d_sub, d_parent + d_aux) if aux.k else d_sub
    return LinearCode(F, G, lower=lower)


# ---------------------------------------------------------------------------
# Best-known table


@dataclass
class BklcTable:
    """Best known minimum distances keyed by (q, n, k)."""

    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (q, n, k), d in self.entries.items():
            self._validate(q, n, k, d)

    @staticmethod
    def _validate(q: int, n: int, k: int, d: int, where: str = "") -> None:
        if not (q >= 2 and n >= 1 and 0 <= k <= n and d >= 0):
            raise BklcError(f"{where}invalid entry q={q} n={n} k={k} d={d}")
        if k >= 1 and d > n - k + 1:
            raise BklcError(f"{where}d={d} exceeds the Singleton bound n-k+1={n - k + 1}")

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        try:
            return self.entries[key]
        except KeyError:
            raise BklcError(f"no table entry for (q, n, k) = {key}") from None

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, q: int, n: int, k: int) -> int:
        return self[(q, n, k)]

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int, int, int]]) -> "BklcTable":
        entries: dict[tuple[int, int, int], int] = {}
        for q, n, k, d in rows:
            if (q, n, k) in entries:
                raise BklcError(f"duplicate entry for (q, n, k) = {(q, n, k)}")
            entries[(q, n, k)] = d
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path) -> "BklcTable":
        """Read a ``q,n,k,d`` CSV; errors carry the offending line number."""
        entries: dict[tuple[int, int, int], int] = {}
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = None
            for row in reader:
                line = reader.line_num
                if not row or all(not c.strip() for c in row):
                    continue
                if header is None:
                    header = [c.strip() for c in row]
                    if header != ["q", "n", "k", "d"]:
                        raise BklcError(f"line {line}: expected header q,n,k,d, got {','.join(row)}")
                    continue
                if len(row) != 4:
                    raise BklcError(f"line {line}: expected 4 fields, got {len(row)}")
                try:
                    q, n, k, d = (int(c) for c in row)
                except ValueError:
                    raise BklcError(f"line {line}: non-integer field in {','.join(row)}") from None
                cls._validate(q, n, k, d, f"line {line}: ")
                if (q, n, k) in entries:
                    raise BklcError(f"line {line}: duplicate entry for (q, n, k) = {(q, n, k)}")
                entries[(q, n, k)] = d
        return cls(entries)

    def dump(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["q", "n", "k", "d"])
            for (q, n, k), d in sorted(self.entries.items()):
                w.writerow([q, n, k, d])


# ---------------------------------------------------------------------------
# Recursive modification


@dataclass(frozen=True)
class DerivationStep:
    op: str
    positions: tuple[int, ...] | None
    resultParams: tuple[int, int, int | None]

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown op {self.op!r}")


@dataclass
class Derived:
    name: str
    steps: list[DerivationStep]
    code: LinearCode
    d: int
    exact: bool

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.code.n, self.code.k, self.d)


class Chooser(Protocol):
    """Produces the extended / best punctured / best shortened child of a
    node together with its distance figure."""

    def child(self, name: str, C: LinearCode, op: str) -> Candidate: ...


@dataclass
class DistanceChooser:
    """Computes distances (exact, or the information-set lower bound when
    the budget runs out)."""

    budget: int = 10**7
    threads: int = 1

    def child(self, name: str, C: LinearCode, op: str) -> Candidate:
        if op == "extend":
            D = extend(C)
            r = _evaluate(D, self.budget)
            return Candidate(D, r.d if r.exact else r.lower, r.exact, None)
        fn = puncture if op == "puncture" else shorten
        return _best(C, fn, self.budget, self.threads)


@dataclass
class LabelledChooser:
    """Distances supplied per lineage name (e.g. reference values for codes
    too large for exact computation).  The derived code itself is still
    built, at position ``pos``, so its length and dimension are real; names
    without a label count as "not better"."""

    labels: Mapping[str, int]
    pos: int = 0

    def child(self, name: str, C: LinearCode, op: str) -> Candidate:
        if op == "extend":
            return Candidate(extend(C), self.labels.get(name), False, None)
        fn = puncture if op == "puncture" else shorten
        return Candidate(fn(C, self.pos), self.labels.get(name), False, self.pos)


def recursively_modify(
    C: LinearCode,
    table: BklcTable,
    max_depth: int | None = None,
    *,
    name: str = "C",
    d: int | None = None,
    chooser: Chooser | None = None,
    shorten_limit: int = 1,
    strict: bool = True,
) -> list[Derived]:
    """Depth-first search over extend / best puncture / best shorten.

    A child is reported (and explored further) when its distance figure
    beats the table entry for its (q, n, k) and its (n, k, d) does not occur
    among its ancestors.  Children are tried in the order extend, puncture,
    shorten and named by appending e / p / s to the parent's name.
    ``shorten_limit`` is accepted for interface compatibility; one position
    is shortened per step.  With ``strict=False`` children whose (q, n, k)
    is missing from the table are skipped instead of raising.
    """
    del shorten_limit
    chooser = chooser or DistanceChooser()
    q = C.F.q
    if d is None:
        r = min_distance(C)
        d = r.d if r.exact else r.lower
    out: list[Derived] = []

    def visit(node: LinearCode, node_name: str, node_d: int, steps: list[DerivationStep], seen: frozenset, depth: int):
        seen = seen | {(node.n, node.k, node_d)}
        if max_depth is not None and depth >= max_depth:
            return
        for op in ("extend", "puncture", "shorten"):
            if op != "extend" and node.n < 2:
                continue
            if op == "shorten" and node.k < 2:
                continue
            child_name = node_name + SUFFIX[op]
            cand = chooser.child(child_name, node, op)
            if cand.d is None:
                continue
            key = (q, cand.code.n, cand.code.k)
            if key not in table and not strict:
                continue
            if cand.d <= table[key]:
                continue
            params = (cand.code.n, cand.code.k, cand.d)
            if params in seen:
                continue
            step = DerivationStep(op, (cand.pos,) if cand.pos is not None else None, params)
            chain = steps + [step]
            out.append(Derived(child_name, chain, cand.code, cand.d, cand.exact))
            visit(cand.code, child_name, cand.d, chain, seen, depth + 1)

    visit(C, name, d, [], frozenset(), 0)
    return out
