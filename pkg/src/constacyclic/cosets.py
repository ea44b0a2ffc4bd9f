"""Constacyclic context, q-cyclotomic cosets and coset-multiset signatures.

For x^n - a over GF(q) with n = n' p^t, gcd(n', p) = 1, write
x^n - a = (x^n' - b)^(p^t) with b^(p^t) = a.  Let r be the order of a (and
of b) and M = n' r.  If delta has order M and delta^n' = b, the roots of
x^n' - b are delta^z for z in the exponent set {1 + i r mod M : 0 <= i < n'},
and every divisor of x^n - a is recorded by the multiplicity of each root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from . import gf
from .gf import GF, ExtensionField, element_order, mult_order_mod, pt_root
from .polyring import Poly, PolyError, divides, ef_poly_mul_linear, poly_mul, poly_pow, root_multiplicity


class CosetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CCParams:
    """Everything derived from (q, n, a)."""

    F: GF
    n: int
    a: int
    r: int
    nprime: int
    t: int
    pt: int
    M: int
    b: int

    @property
    def q(self) -> int:
        return self.F.q

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.F.q, self.n, self.a)

    @cached_property
    def elements(self) -> tuple[int, ...]:
        """Exponents 1 + i r (mod M), i = 0..n'-1, in that order."""
        return tuple((1 + i * self.r) % self.M for i in range(self.nprime))

    @cached_property
    def extension_degree(self) -> int:
        return mult_order_mod(self.F.q, self.M)

    @cached_property
    def extension(self) -> ExtensionField:
        return gf.extension_field(self.F, self.extension_degree)

    @cached_property
    def delta(self) -> np.ndarray:
        return find_delta(self, self.extension)

    @cached_property
    def cosets(self) -> tuple[tuple[int, ...], ...]:
        return cyclotomic_cosets(self)

    @cached_property
    def coset_of(self) -> dict[int, int]:
        return {z: j for j, c in enumerate(self.cosets) for z in c}

    @cached_property
    def x_n_minus_a(self) -> Poly:
        return Poly.x_n_minus_a(self.F, self.n, self.a)

    @cached_property
    def _delta_powers(self) -> list[np.ndarray]:
        EF = self.extension
        out = [EF.one()]
        for _ in range(self.M - 1):
            out.append(EF.mul(out[-1], self.delta))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, CCParams) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return (
            f"CCParams(q={self.q}, n={self.n}, a={self.a}, r={self.r}, n'={self.nprime}, "
            f"p^t={self.pt}, M={self.M})"
        )


@dataclass(frozen=True)
class CosetMultiset:
    """Multiplicity of each root exponent z (mod M); zeros are omitted."""

    M: int
    mult: Mapping[int, int] = field(default_factory=dict)

    def __init__(self, M: int, mult: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mult.items() if isinstance(mult, Mapping) else mult
        clean = {int(z) % M: int(m) for z, m in items if m}
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "mult", dict(sorted(clean.items())))

    def __getitem__(self, z: int) -> int:
        return self.mult.get(z % self.M, 0)

    @property
    def total(self) -> int:
        return sum(self.mult.values())

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.mult)

    def __hash__(self) -> int:
        return hash((self.M, tuple(self.mult.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, CosetMultiset) and self.M == other.M and self.mult == other.mult

    @classmethod
    def from_digits(cls, params: CCParams, digits: Iterable[int]) -> "CosetMultiset":
        """One multiplicity per coset, in ``params.cosets`` order."""
        mult = {}
        for c, d in zip(params.cosets, digits):
            if d:
                for z in c:
                    mult[z] = d
        return cls(params.M, mult)

    def digits(self, params: CCParams) -> tuple[int, ...]:
        return tuple(self[c[0]] for c in params.cosets)


@dataclass(frozen=True)
class LinearMapWitness:
    """The exponent map z -> e z + b (mod M)."""

    e: int
    b: int
    M: int

    def __call__(self, z: int) -> int:
        return (self.e * z + self.b) % self.M

    def apply(self, ms: CosetMultiset) -> CosetMultiset:
        return CosetMultiset(self.M, {self(z): m for z, m in ms.mult.items()})


def cc_params(q: int | GF, n: int, a: int) -> CCParams:
    F = q if isinstance(q, GF) else GF(q)
    if n < 2:
        raise CosetError("length must be at least 2")
    if not 0 < a < F.q:
        raise CosetError("shift constant must be a nonzero field element")
    r = element_order(F, a)
    nprime, t = n, 0
    while nprime % F.p == 0:
        nprime //= F.p
        t += 1
    pt = F.p**t
    b = pt_root(F, a, pt)
    if element_order(F, b) != r:
        raise AssertionError("order of the p^t-th root differs from the order of a")
    return CCParams(F=F, n=n, a=a, r=r, nprime=nprime, t=t, pt=pt, M=nprime * r, b=b)


def find_delta(params: CCParams, EF: ExtensionField | None = None) -> np.ndarray:
    """delta of order exactly M with delta^n' = b.

    Deterministic: take the first element zeta of order M found by
    ``EF.element_of_order`` and return zeta^u for the smallest u >= 1 with
    gcd(u, M) = 1 and (zeta^u)^n' = b.
    """
    EF = EF or params.extension
    M, n1 = params.M, params.nprime
    zeta = EF.element_of_order(M)
    target = EF.embed(params.b)
    base = EF.pow(zeta, n1)  # an element of order r
    cur = base
    for u in range(1, M + 1):
        if math.gcd(u, M) == 1 and EF.eq(cur, target):
            return EF.pow(zeta, u)
        cur = EF.mul(cur, base)
    raise CosetError("no root of unity matching b")  # pragma: no cover


def cyclotomic_cosets(params: CCParams) -> tuple[tuple[int, ...], ...]:
    """Orbits of z -> q z (mod M) on the exponent set, sorted by smallest
    member; each coset is listed from that member as z, qz, q^2 z, ..."""
    q, M = params.F.q, params.M
    seen: set[int] = set()
    out = []
    for z in sorted(params.elements):
        if z in seen:
            continue
        orbit = [z]
        w = z * q % M
        while w != z:
            orbit.append(w)
            w = w * q % M
        seen.update(orbit)
        out.append(tuple(orbit))
    return tuple(out)


def signature(params: CCParams, delta: np.ndarray, g: Poly) -> CosetMultiset:
    """Root multiplicities of a divisor g of x^n - a."""
    if g.F is not params.F:
        raise PolyError("field mismatch")
    if g.is_zero() or not divides(g, params.x_n_minus_a):
        raise CosetError("g does not divide x^n - a")
    EF = params.extension
    if delta is params.delta:
        powers = params._delta_powers
    else:
        powers = [EF.pow(delta, z) for z in range(params.M)]
    mult = {}
    for z in params.elements:
        y = root_multiplicity(g, powers[z], EF) if g.degree > 0 else 0
        if y:
            mult[z] = y
    ms = CosetMultiset(params.M, mult)
    if ms.total != g.degree:
        raise CosetError("root multiplicities do not account for deg g")
    return ms


def coset_poly(params: CCParams, delta: np.ndarray, coset: Iterable[int]) -> Poly:
    """P(S) = prod_{z in S} (x - delta^z), mapped back into GF(q)[x]."""
    EF = params.extension
    acc = [EF.one()]
    for z in coset:
        acc = ef_poly_mul_linear(EF, acc, EF.pow(delta, z))
    coeffs = []
    for c in acc:
        x = EF.unembed(c)
        if x is None:
            raise CosetError("coefficients do not lie in the base field (set is not coset-closed)")
        coeffs.append(x)
    return Poly(params.F, coeffs)


def _coset_polys(params: CCParams, delta: np.ndarray) -> list[Poly]:
    cache = params.__dict__.setdefault("_coset_poly_cache", {})
    key = params.extension.key(delta)
    if key not in cache:
        cache[key] = [coset_poly(params, delta, c) for c in params.cosets]
    return cache[key]


def multiset_to_poly(params: CCParams, delta: np.ndarray, ms: CosetMultiset) -> Poly:
    """The divisor prod (x - delta^z)^mult[z] of x^n - a."""
    check_multiset(params, ms)
    polys = _coset_polys(params, delta)
    out = Poly(params.F, [1])
    for j, c in enumerate(params.cosets):
        m = ms[c[0]]
        if m:
            out = poly_mul(out, poly_pow(polys[j], m))
    return out


def check_multiset(params: CCParams, ms: CosetMultiset) -> None:
    """Raise unless ms is a union of whole cosets with multiplicities <= p^t."""
    if ms.M != params.M:
        raise CosetError("modulus mismatch")
    for z in ms.support:
        if z not in params.coset_of:
            raise CosetError(f"exponent {z} is not of the form 1 + i r")
    for c in params.cosets:
        ms_vals = {ms[z] for z in c}
        if len(ms_vals) != 1:
            raise CosetError(f"multiplicity not uniform on coset {c}")
        if ms_vals.pop() > params.pt:
            raise CosetError("multiplicity exceeds p^t")


def num_divisors(params: CCParams) -> int:
    return (params.pt + 1) ** len(params.cosets)
