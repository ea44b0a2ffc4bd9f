"""Executable versions of the bundled reference tables.

Each check yields :class:`Check` records (one per table row / claim) that
the ``verify-paper`` command renders as a CSV pass/fail matrix.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .codes import classify, min_distance, weight_distribution
from .constructions import LabelledChooser, construction_x, recursively_modify
from .cosets import cc_params
from .equiv import cc_coset_eq, partition
from .fixtures import (
    bklc_gf7,
    construction_x_inputs,
    equivalence_rows,
    find_property_row,
    partition_rows,
    recursive_labels,
    recursive_root,
)
from .gf import GF
from .grammar import parse_element, parse_poly

# rows whose `new` column is checked by default (the others are optional)
NEW_ROWS = ((5, 124, 2), (3, 122, 2), (5, 104, 2), (3, 146, 2))
SELF_DUAL = ((7, 8, 4, 5), (3, 28, 14, 9))
BATTERY = (
    ((4, 7, 3, 4), ("self-orthogonal", "two-weight")),
    ((2, 10, 4, 4), ("self-orthogonal", "two-weight", "reversible")),
    ((3, 12, 4, 6), ("self-orthogonal", "two-weight")),
    ((4, 17, 4, 12), ("lcd", "two-weight")),
    ((5, 26, 4, 20), ("lcd", "two-weight")),
    ((7, 7, 3, 5), ("self-orthogonal", "reversible")),
)
FLAG = {
    "self-orthogonal": "selfOrthogonal",
    "dual-containing": "dualContaining",
    "lcd": "lcd",
    "self-dual": "selfDual",
    "reversible": "reversible",
    "two-weight": "twoWeight",
}


@dataclass(frozen=True)
class Check:
    criterion: int
    item: str
    expected: str
    observed: str
    ok: bool
    seconds: float

    def row(self) -> list:
        return [self.criterion, self.item, self.expected, self.observed, "PASS" if self.ok else "FAIL", f"{self.seconds:.3f}"]


HEADER = ["criterion", "item", "expected", "observed", "status", "seconds"]


def _timed(fn: Callable):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def check_equivalence() -> Iterator[Check]:
    for row in equivalence_rows():
        F = GF(row.q)

        def run():
            return cc_coset_eq(F, row.n, parse_element(row.a, F), parse_poly(row.g1, F), parse_poly(row.g2, F))

        v, dt = _timed(run)
        yield Check(1, f"equiv q={row.q} n={row.n} a={row.a}", str(row.equivalent), str(v.equivalent), v.equivalent == row.equivalent and dt < 5, dt)


def check_partition(all_new: bool = False, threads: int = 1) -> Iterator[Check]:
    for row in partition_rows():
        key = (row.q, row.n, row.a)
        params, dt = _timed(lambda: cc_params(row.q, row.n, row.a))
        total = (params.pt + 1) ** len(params.cosets) - 2
        dt_total = dt
        yield Check(2, f"total q={row.q} n={row.n} a={row.a}", str(row.total), str(total), total == row.total, dt_total)
        yield Check(8, f"count identity q={row.q} n={row.n} a={row.a}", str(row.total), str(total), total == row.total, dt_total)
        if all_new or key in NEW_ROWS:
            res, dt = _timed(lambda: partition(row.q, row.n, row.a, parallelism=threads, with_generators=False))
            yield Check(2, f"new q={row.q} n={row.n} a={row.a}", str(row.new), str(res.new), res.new == row.new, dt)


def check_self_dual() -> Iterator[Check]:
    for q, n, k, d in SELF_DUAL:
        row = find_property_row(q, n, k, d)

        def run():
            C = row.build()
            return C, classify(C, cap=1), min_distance(C, method="enumeration")

        (C, props, dist), dt = _timed(run)
        observed = f"[{C.n},{C.k},{dist.d}] selfDual={props.selfDual}"
        ok = (C.n, C.k, dist.d) == (n, k, d) and dist.exact and props.selfDual
        yield Check(3, f"self-dual [{n},{k},{d}]_{q}", f"[{n},{k},{d}] selfDual=True", observed, ok, dt)


def check_battery() -> Iterator[Check]:
    for (q, n, k, d), flags in BATTERY:
        row = find_property_row(q, n, k, d)

        def run():
            C = row.build()
            return C, classify(C), min_distance(C)

        (C, props, dist), dt = _timed(run)
        got = props.as_dict()
        ok = (C.n, C.k, dist.d) == (n, k, d) and dist.exact and all(got[FLAG[f]] for f in flags)
        observed = f"[{C.n},{C.k},{dist.d}] " + " ".join(f"{f}={got[FLAG[f]]}" for f in flags)
        expected = f"[{n},{k},{d}] " + " ".join(f"{f}=True" for f in flags)
        yield Check(4, f"properties [{n},{k},{d}]_{q}", expected, observed, ok, dt)


def check_construction_x() -> Iterator[Check]:
    def run():
        parent, sub, aux, data = construction_x_inputs()
        contained = parent.contains_code(sub)
        X = construction_x(parent, sub, aux, d_parent=data["parent"]["d"], d_sub=data["subcode"]["d"], d_aux=data["aux"]["d"])
        return parent, sub, X, contained, data

    (parent, sub, X, contained, data), dt = _timed(run)
    bound = min(data["subcode"]["d"], data["parent"]["d"] + data["aux"]["d"])
    r = data["result"]
    yield Check(5, "subcode containment", "True", str(contained), contained and (parent.k, sub.k) == (51, 50), dt)
    yield Check(5, "construction X output", f"[{r['n']},{r['k']}] lower={bound}", f"[{X.n},{X.k}] lower={X.lower}", (X.n, X.k) == (r["n"], r["k"]) and X.lower == bound, 0.0)


def check_recursive() -> Iterator[Check]:
    def run():
        C1, data = recursive_root()
        chooser = LabelledChooser(recursive_labels(data))
        return recursively_modify(C1, bklc_gf7(), name="C1", d=data["root"]["d"], chooser=chooser), data

    (found, data), dt = _timed(run)
    got = {f.name: (f.code.n, f.code.k) for f in found}
    listed = {name: (n, k) for name, n, k, _ in data["listed"]}
    implied = {name for name, *_ in data["implied"]}
    missing = [nm for nm in listed if got.get(nm) != listed[nm]]
    extra = sorted(set(got) - set(listed) - implied)
    ok = not missing and not extra
    yield Check(6, "derivation list (n,k) + lineage", f"{len(listed) + 1} names", f"{len(set(got) & set(listed)) + 1} names, missing={missing}, extra={extra}", ok, dt)


def run_all(all_new: bool = False, threads: int = 1) -> list[Check]:
    checks: list[Check] = []
    for gen in (
        check_equivalence(),
        check_partition(all_new, threads),
        check_self_dual(),
        check_battery(),
        check_construction_x(),
        check_recursive(),
    ):
        checks.extend(gen)
    return checks


def battery_weight_distributions() -> dict[str, dict[int, int]]:
    out = {}
    for (q, n, k, d), _ in BATTERY:
        C = find_property_row(q, n, k, d).build()
        out[f"[{n},{k},{d}]_{q}"] = weight_distribution(C)
    return out
