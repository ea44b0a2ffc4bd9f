"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: fields are built from
explicit modulus polynomials with schoolbook multiplication, codes are
spanned by brute force.
"""

from __future__ import annotations

import itertools
from collections import Counter

MODULI = {4: (2, [1, 1, 1]), 8: (2, [1, 1, 0, 1]), 9: (3, [2, 2, 1])}  # low -> high


class NaiveField:
    def __init__(self, q: int):
        self.q = q
        if q in MODULI:
            self.p, self.f = MODULI[q]
            self.m = len(self.f) - 1
        else:
            self.p, self.f, self.m = q, None, 1

    def _vec(self, x):
        return [(x // self.p**i) % self.p for i in range(self.m)]

    def _int(self, v):
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, x, y):
        return self._int([(a + b) % self.p for a, b in zip(self._vec(x), self._vec(y))])

    def neg(self, x):
        return self._int([(-a) % self.p for a in self._vec(x)])

    def mul(self, x, y):
        if self.f is None:
            return x * y % self.p
        a, b = self._vec(x), self._vec(y)
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % self.p
        for d in range(len(prod) - 1, self.m - 1, -1):
            c = prod[d]
            if c:
                for i, fi in enumerate(self.f):
                    prod[d - self.m + i] = (prod[d - self.m + i] - c * fi) % self.p
        return self._int(prod[: self.m])

    def inv(self, x):
        for y in range(1, self.q):
            if self.mul(x, y) == 1:
                return y
        raise ZeroDivisionError

    def order(self, x):
        k, y = 1, x
        while y != 1:
            y = self.mul(y, x)
            k += 1
        return k


def span(K: NaiveField, rows, n: int | None = None) -> set[tuple]:
    rows = [tuple(r) for r in rows]
    n = len(rows[0]) if rows else n
    words = set()
    for coeffs in itertools.product(range(K.q), repeat=len(rows)):
        w = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                for j in range(n):
                    w[j] = K.add(w[j], K.mul(c, r[j]))
        words.add(tuple(w))
    return words


def weight_hist(words) -> dict[int, int]:
    return dict(Counter(sum(1 for x in w if x) for w in words))


def min_weight(words) -> int:
    return min(sum(1 for x in w if x) for w in words if any(w))


def dot(K: NaiveField, u, v) -> int:
    s = 0
    for a, b in zip(u, v):
        s = K.add(s, K.mul(a, b))
    return s


def dual_words(K: NaiveField, words, n: int) -> set[tuple]:
    return {v for v in itertools.product(range(K.q), repeat=n) if all(dot(K, v, c) == 0 for c in words)}


def permutation_classes(codes: list[set[tuple]], n: int) -> int:
    """Number of classes of binary codes under coordinate permutations."""
    perms = list(itertools.permutations(range(n)))
    canon = set()
    for words in codes:
        best = min(tuple(sorted(tuple(w[p] for p in perm) for w in words)) for perm in perms)
        canon.add(best)
    return len(canon)


def poly_divmod(K: NaiveField, f, g) -> tuple[list, list]:
    """Schoolbook long division of coefficient lists (lowest degree first)."""
    f = list(f)
    while g and g[-1] == 0:
        g = g[:-1]
    dg = len(g) - 1
    inv = K.inv(g[-1])
    quot = [0] * max(1, len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            t = K.mul(c, inv)
            quot[k - dg] = t
            for j, y in enumerate(g):
                f[k - dg + j] = K.add(f[k - dg + j], K.neg(K.mul(t, y)))
    return quot, f[:dg]


def substitute_power(K: NaiveField, f, e: int, n: int, a: int) -> list:
    """f(x^e) reduced modulo x^n - a (x^n is replaced by a)."""
    out = [0] * n
    for i, c in enumerate(f):
        if c:
            k, t = i * e, c
            while k >= n:
                k -= n
                t = K.mul(t, a)
            out[k] = K.add(out[k], t)
    return out


def binary_weight_hist(rows) -> dict[int, int]:
    """Weight distribution of the binary span of ``rows`` by Gray-code walk."""
    masks = [sum(1 << j for j, x in enumerate(r) if x) for r in rows]
    hist: Counter = Counter({0: 1})
    w = 0
    for i in range(1, 1 << len(masks)):
        w ^= masks[(i & -i).bit_length() - 1]
        hist[bin(w).count("1")] += 1
    return dict(hist)
