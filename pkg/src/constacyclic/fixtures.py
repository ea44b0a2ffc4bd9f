"""Reference data bundled with the package: reference equivalence verdicts,
partition counts, property-tagged codes, the Construction X chain and the
recursive-modification lineage."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .codes import LinearCode, cc_code, dual
from .constructions import BklcTable
from .cosets import cc_params
from .gf import GF
from .grammar import parse_element, parse_poly, parse_poly_string
from .polyring import generator_from_check

PROPERTY_NAMES = ("self-orthogonal", "dual-containing", "lcd", "self-dual", "reversible", "two-weight")


def _open(name: str):
    return resources.files(__package__).joinpath("data", name).open("r", newline="")


def data_path(name: str):
    return resources.files(__package__).joinpath("data", name)


@dataclass(frozen=True)
class EquivRow:
    q: int
    n: int
    a: str
    g1: str
    g2: str
    equivalent: bool


@dataclass(frozen=True)
class PartitionRow:
    q: int
    n: int
    a: int
    total: int
    new: int
    net: int
    percent: float


@dataclass(frozen=True)
class PropertyRow:
    group: tuple[str, ...]
    q: int
    n: int
    k: int
    d: int
    a: str
    kind: str
    poly: str

    def build(self) -> LinearCode:
        F = GF(self.q)
        params = cc_params(F, self.n, parse_element(self.a, F))
        ps = parse_poly_string(self.poly, F)
        g = generator_from_check(F, self.n, params.a, ps.poly) if self.kind == "h" else ps.poly
        C = cc_code(params, g)
        return dual(C) if ps.dual else C


@lru_cache(maxsize=None)
def equivalence_rows() -> tuple[EquivRow, ...]:
    with _open("equivalence.csv") as fh:
        return tuple(
            EquivRow(int(r["q"]), int(r["n"]), r["a"], r["g1"], r["g2"], r["equivalent"] == "True")
            for r in csv.DictReader(fh)
        )


@lru_cache(maxsize=None)
def partition_rows() -> tuple[PartitionRow, ...]:
    with _open("partition.csv") as fh:
        return tuple(
            PartitionRow(int(r["q"]), int(r["n"]), int(r["a"]), int(r["total"]), int(r["new"]), int(r["net"]), float(r["percent"]))
            for r in csv.DictReader(fh)
        )


@lru_cache(maxsize=None)
def property_rows() -> tuple[PropertyRow, ...]:
    with _open("properties.csv") as fh:
        return tuple(
            PropertyRow(tuple(r["group"].split(";")), int(r["q"]), int(r["n"]), int(r["k"]), int(r["d"]), r["a"], r["kind"], r["poly"])
            for r in csv.DictReader(fh)
        )


def find_property_row(q: int, n: int, k: int, d: int) -> PropertyRow:
    for r in property_rows():
        if (r.q, r.n, r.k, r.d) == (q, n, k, d):
            return r
    raise KeyError((q, n, k, d))


def construction_x_data() -> dict:
    with _open("construction_x.json") as fh:
        return json.load(fh)


def recursive_data() -> dict:
    with _open("recursive.json") as fh:
        return json.load(fh)


def bklc_gf7() -> BklcTable:
    with resources.as_file(data_path("bklc_gf7.csv")) as p:
        return BklcTable.load(p)


def repetition_code(F: GF, n: int) -> LinearCode:
    return LinearCode(F, np.ones((1, n), dtype=np.int64), lower=n)


def construction_x_inputs() -> tuple[LinearCode, LinearCode, LinearCode, dict]:
    data = construction_x_data()
    F = GF(data["q"])
    params = cc_params(F, data["n"], parse_element(data["a"], F))
    parent = cc_code(params, parse_poly(data["parent"]["g"], F))
    sub = cc_code(params, parse_poly(data["subcode"]["g"], F))
    aux = repetition_code(F, data["aux"]["n"])
    return parent, sub, aux, data


def recursive_root() -> tuple[LinearCode, dict]:
    data = recursive_data()
    F = GF(data["q"])
    params = cc_params(F, data["n"], parse_element(data["a"], F))
    return cc_code(params, parse_poly(data["g"], F)), data


def recursive_labels(data: dict | None = None) -> dict[str, int]:
    data = data or recursive_data()
    return {name: d for name, _, _, d in data["listed"] + data["implied"]}
