"""Dense univariate polynomials over GF(q), lowest degree first."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .gf import GF, ExtensionField


class PolyError(ValueError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial over ``F``; ``coeffs[i]`` is the coefficient of x^i.

    The zero polynomial has ``coeffs == ()``; no other polynomial carries
    trailing zeros.
    """

    F: GF
    coeffs: tuple[int, ...]

    def __init__(self, F: GF, coeffs: Iterable[int] = ()):
        c = _strip(int(x) for x in coeffs)
        if any(x < 0 or x >= F.q for x in c):
            raise PolyError(f"coefficient outside GF({F.q})")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, F: GF, deg: int, c: int = 1) -> "Poly":
        return cls(F, [0] * deg + [c])

    @classmethod
    def x_n_minus_a(cls, F: GF, n: int, a: int) -> "Poly":
        return cls(F, [F.neg(a)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.F.inv(self.lead)
        return self.scale(inv)

    def scale(self, c: int) -> "Poly":
        F = self.F
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    def __call__(self, x: int) -> int:
        F = self.F
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __pow__(self, e: int) -> "Poly":
        return poly_pow(self, e)

    def __repr__(self) -> str:
        return f"Poly(GF({self.F.q}), {list(self.coeffs)})"


def _check(f: Poly, g: Poly) -> GF:
    if f.F is not g.F:
        raise PolyError(f"field mismatch: GF({f.F.q}) vs GF({g.F.q})")
    return f.F


def poly_add(f: Poly, g: Poly) -> Poly:
    F = _check(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (n - len(f.coeffs))
    b = g.coeffs + (0,) * (n - len(g.coeffs))
    return Poly(F, [F.add(x, y) for x, y in zip(a, b)])


def poly_sub(f: Poly, g: Poly) -> Poly:
    F = _check(f, g)
    return poly_add(f, Poly(F, [F.neg(x) for x in g.coeffs]))


def poly_mul(f: Poly, g: Poly) -> Poly:
    F = _check(f, g)
    if f.is_zero() or g.is_zero():
        return Poly(F)
    if F.is_prime:
        c = np.convolve(np.array(f.coeffs, dtype=np.int64), np.array(g.coeffs, dtype=np.int64))
        return Poly(F, (c % F.p).tolist())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    mul, add = F.MUL, F.ADD
    for i, x in enumerate(f.coeffs):
        if x:
            row = mul[x]
            for j, y in enumerate(g.coeffs):
                out[i + j] = int(add[out[i + j], row[y]])
    return Poly(F, out)


def poly_pow(f: Poly, e: int) -> Poly:
    result = Poly(f.F, [1])
    base = f
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    F = _check(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) <= dg:
        return Poly(F), f
    inv_lead = F.inv(g.lead)
    quot = [0] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t = F.mul(c, inv_lead)
        quot[k - dg] = t
        for j, y in enumerate(gc):
            if y:
                rem[k - dg + j] = F.sub(rem[k - dg + j], F.mul(t, y))
    return Poly(F, quot), Poly(F, rem[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    _check(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_arith(op: str, f: Poly, g: Poly):
    """Dispatch for the four ring operations by name."""
    ops = {"add": poly_add, "sub": poly_sub, "mul": poly_mul, "divmod": poly_divmod, "gcd": poly_gcd}
    if op not in ops:
        raise PolyError(f"unknown operation {op!r}")
    return ops[op](f, g)


def reduce_mod(f: Poly, n: int, a: int) -> Poly:
    """f mod (x^n - a) by folding x^n -> a."""
    F = f.F
    c = list(f.coeffs)
    for k in range(len(c) - 1, n - 1, -1):
        if c[k]:
            c[k - n] = F.add(c[k - n], F.mul(a, c[k]))
            c[k] = 0
    return Poly(F, c[:n])


def mulmod(f: Poly, g: Poly, n: int, a: int) -> Poly:
    """Product in GF(q)[x]/(x^n - a) computed directly on residues."""
    F = _check(f, g)
    out = [0] * n
    for i, x in enumerate(f.coeffs):
        if not x:
            continue
        for j, y in enumerate(g.coeffs):
            if not y:
                continue
            k = i + j
            t = F.mul(x, y)
            while k >= n:
                k -= n
                t = F.mul(t, a)
            out[k] = F.add(out[k], t)
    return Poly(F, out)


def generator_from_check(F: GF, n: int, a: int, h: Poly) -> Poly:
    """g = (x^n - a) / h; raises if h is not a check polynomial."""
    if h.F is not F:
        raise PolyError("field mismatch")
    quot, rem = poly_divmod(Poly.x_n_minus_a(F, n, a), h)
    if not rem.is_zero():
        raise PolyError("not a check polynomial: h does not divide x^n - a")
    return quot


def divides(g: Poly, f: Poly) -> bool:
    return poly_divmod(f, g)[1].is_zero()


# ---------------------------------------------------------------------------
# Polynomials with coefficients in an extension field (lists of vectors).


def embed_poly(EF: ExtensionField, f: Poly) -> list[np.ndarray]:
    return [EF.embed(c) for c in f.coeffs]


def root_multiplicity(g: Poly, rho: np.ndarray, EF: ExtensionField) -> int:
    """Largest y with (x - rho)^y | g, rho in the extension EF of g's field."""
    if g.is_zero():
        raise PolyError("root multiplicity in the zero polynomial")
    coeffs = embed_poly(EF, g)
    y = 0
    while len(coeffs) > 1:
        # synthetic division by (x - rho), high degree first
        quot = []
        acc = EF.zero()
        for c in reversed(coeffs):
            acc = EF.add(EF.mul(acc, rho), c)
            quot.append(acc)
        rem = quot.pop()
        if not EF.is_zero(rem):
            break
        y += 1
        coeffs = quot[::-1]
    return y


def ef_poly_mul_linear(EF: ExtensionField, f: Sequence[np.ndarray], root: np.ndarray) -> list[np.ndarray]:
    """f(x) * (x - root) over EF."""
    out = [EF.zero() for _ in range(len(f) + 1)]
    for i, c in enumerate(f):
        out[i + 1] = EF.add(out[i + 1], c)
        out[i] = EF.sub(out[i], EF.mul(c, root))
    return out
