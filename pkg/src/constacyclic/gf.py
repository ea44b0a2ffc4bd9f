"""Finite fields GF(q), q <= 9, and the extension fields that host roots of unity.

Base-field elements are plain ints.  For a prime field the int is the residue
mod p.  For GF(p^m), m > 1, the int packs the coefficients of a polynomial in
the generator ``A`` over GF(p): digit j (base p) is the coefficient of A^j.
So in GF(4) the element ``A`` is the int 2 and ``A^2 = A + 1`` is the int 3.

Fixed conventions (all text I/O depends on them):

====  =========================  =====================
q     modulus                    generator ``A``
====  =========================  =====================
2     --                         1
3     --                         2
4     x^2 + x + 1                x
5     --                         2
7     --                         3
8     x^3 + x + 1                x
9     x^2 + 2x + 2               x
====  =========================  =====================

These are the Conway polynomials; for prime fields ``A`` is the smallest
primitive root.

Extension fields GF(q^s) are built directly over the prime field as
GF(p^(m*s)) with an explicit embedding of GF(q); their elements are numpy
int64 coefficient vectors.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# q -> (p, m, modulus coefficients low->high, generator int)
_FIELD_TABLE = {
    2: (2, 1, None, 1),
    3: (3, 1, None, 2),
    4: (2, 2, (1, 1, 1), 2),
    5: (5, 1, None, 2),
    7: (7, 1, None, 3),
    8: (2, 3, (1, 1, 0, 1), 2),
    9: (3, 2, (2, 2, 1), 3),
}


class FieldError(ValueError):
    pass


def _prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


class GF:
    """The base field GF(q) with table-driven arithmetic.

    Elements are ints in ``range(q)``; see the module docstring for the
    encoding.  Instances are immutable and cached per ``q``.
    """

    _cache: dict[int, "GF"] = {}

    def __new__(cls, q: int) -> "GF":
        if q in cls._cache:
            return cls._cache[q]
        if q not in _FIELD_TABLE:
            raise FieldError(f"unsupported field size q={q}; expected one of {SUPPORTED_Q}")
        self = super().__new__(cls)
        self._build(q)
        cls._cache[q] = self
        return self

    def _build(self, q: int) -> None:
        p, m, modulus, gen = _FIELD_TABLE[q]
        self.q = q
        self.p = p
        self.m = m
        self.modulus = modulus
        self.generator = gen
        # Vector view: each element as m digits over GF(p).
        digits = np.array([[(x // p**j) % p for j in range(m)] for x in range(q)], dtype=np.int64)
        place = p ** np.arange(m)

        def raw_mul(a: int, b: int) -> int:
            if m == 1:
                return a * b % p
            da, db = digits[a], digits[b]
            prod = np.convolve(da, db) % p
            for deg in range(len(prod) - 1, m - 1, -1):
                c = prod[deg]
                if c:
                    # x^m = -(modulus[:m]) since modulus is monic
                    for j in range(m):
                        prod[deg - m + j] = (prod[deg - m + j] - c * modulus[j]) % p
                    prod[deg] = 0
            return int(prod[:m] @ place)

        add = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = int(((digits[a] + digits[b]) % p) @ place)
        mul = np.array([[raw_mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        neg = np.array([int(((-digits[a]) % p) @ place) for a in range(q)], dtype=np.int64)
        exp = [1]
        for _ in range(q - 2):
            exp.append(int(mul[exp[-1], gen]))
        if len(set(exp)) != q - 1:
            raise FieldError(f"generator of GF({q}) is not primitive")
        log = {x: i for i, x in enumerate(exp)}
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            inv[x] = exp[(-log[x]) % (q - 1)]
        sub = add[:, neg]
        for arr in (add, sub, mul, neg, inv):
            arr.flags.writeable = False
        self.digits = digits
        self.ADD, self.SUB, self.MUL, self.NEG, self.INV = add, sub, mul, neg, inv
        self.exp = tuple(exp)
        self.log = log

    # -- scalar arithmetic -------------------------------------------------
    @property
    def is_prime(self) -> bool:
        return self.m == 1

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.ADD[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.SUB[a, b])

    def neg(self, a: int) -> int:
        return int(self.NEG[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.MUL[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.INV[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def power_index(self, a: int) -> int:
        """Return i with a = A^i (0 <= i < q-1)."""
        if a == 0:
            raise FieldError("zero has no power index")
        return self.log[a]

    def from_power(self, i: int) -> int:
        return self.exp[i % (self.q - 1)]

    def subfield_int(self, a: int) -> int | None:
        """The integer digit naming ``a`` if it lies in the prime subfield."""
        return a if a < self.p else None

    def embed(self, a: int) -> int:
        return a

    # -- vectorised arithmetic on numpy arrays of elements -----------------
    def vadd(self, a, b):
        if self.is_prime:
            return (a + b) % self.p
        return self.ADD[a, b]

    def vsub(self, a, b):
        if self.is_prime:
            return (a - b) % self.p
        return self.SUB[a, b]

    def vmul(self, a, b):
        if self.is_prime:
            return (a * b) % self.p
        return self.MUL[a, b]

    def vneg(self, a):
        if self.is_prime:
            return (-a) % self.p
        return self.NEG[a]

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Matrix product over GF(q)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.is_prime:
            return (A @ B) % self.p
        # Decompose into GF(p) digit planes: x*y is bilinear in the digits.
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for i in range(A.shape[1]):
            out = self.ADD[out, self.MUL[A[:, i, None], B[None, i, :]]]
        return out

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __reduce__(self):
        return (GF, (self.q,))


def field_make(q: int) -> GF:
    """Return the fixed GF(q) for q in {2,3,4,5,7,8,9}."""
    return GF(q)


def element_order(F: GF, x: int) -> int:
    """Multiplicative order of a nonzero element."""
    if x == 0:
        raise FieldError("zero has no multiplicative order")
    return (F.q - 1) // math.gcd(F.q - 1, F.power_index(x))


def pt_root(F: GF, a: int, pt: int) -> int:
    """The unique b with b**pt == a, for pt a power of the characteristic."""
    if a == 0:
        raise FieldError("pt_root of zero")
    k = pt
    while k % F.p == 0:
        k //= F.p
    if k != 1:
        raise FieldError(f"{pt} is not a power of the characteristic {F.p}")
    # x -> x^pt permutes GF(q)^*; invert the exponent mod q-1.
    e = pow(pt, -1, F.q - 1) if F.q > 2 else 1
    b = F.pow(a, e)
    assert F.pow(b, pt) == a
    assert element_order(F, b) == element_order(F, a)
    return b


def mult_order_mod(q: int, M: int) -> int:
    """Smallest s >= 1 with q^s = 1 (mod M)."""
    if M < 1 or math.gcd(q, M) != 1:
        raise ValueError(f"gcd({q}, {M}) != 1")
    if M == 1:
        return 1
    s, x = 1, q % M
    while x != 1:
        x = x * q % M
        s += 1
    return s


# ---------------------------------------------------------------------------
# Prime-field polynomial helpers used to build extension fields.


def _polymod_p(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    """Reduce a (low->high) mod monic f over GF(p)."""
    a = a.copy() % p
    d = len(f) - 1
    for deg in range(len(a) - 1, d - 1, -1):
        c = a[deg]
        if c:
            a[deg - d : deg + 1] = (a[deg - d : deg + 1] - c * f) % p
    return _trim(a[:d] if len(a) >= d else a)


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if len(nz) else a[:0]


def _gcd_p(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a, b = _trim(a % p), _trim(b % p)
    while len(b):
        inv = pow(int(b[-1]), -1, p)
        bm = (b * inv) % p
        a, b = b, _polymod_p(a, bm, p)
    return a


class _ModRing:
    """GF(p)[x]/(f) with numpy vectors of length D."""

    def __init__(self, f: np.ndarray, p: int):
        self.f = f
        self.p = p
        self.D = D = len(f) - 1
        # Row k holds x^(D+k) mod f.
        red = np.zeros((max(D - 1, 1), D), dtype=np.int64)
        cur = np.zeros(D, dtype=np.int64)
        cur[:] = (-f[:D]) % p  # x^D
        for k in range(D - 1):
            red[k] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1]))
            if top:
                cur = (cur - top * f[:D]) % p
        self.red = red

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        c = np.convolve(a, b)
        D = self.D
        if len(c) <= D:
            out = np.zeros(D, dtype=np.int64)
            out[: len(c)] = c
            return out % self.p
        return (c[:D] + c[D:] @ self.red[: len(c) - D]) % self.p

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros(self.D, dtype=np.int64)
        result[0] = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result


def _int_to_poly(x: int, p: int, length: int) -> np.ndarray:
    out = np.zeros(length, dtype=np.int64)
    i = 0
    while x:
        out[i] = x % p
        x //= p
        i += 1
    return out


def is_irreducible_p(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    f = np.asarray(f, dtype=np.int64) % p
    D = len(f) - 1
    if D < 1 or f[-1] != 1:
        return False
    if D == 1:
        return True
    ring = _ModRing(f, p)
    x = np.zeros(D, dtype=np.int64)
    x[1] = 1
    frob = [x]
    cur = x
    for _ in range(D):
        cur = ring.pow(cur, p)
        frob.append(cur)
    if not np.array_equal(frob[D], x):
        return False
    for ell in _prime_factors(D):
        h = (frob[D // ell] - x) % p
        g = _gcd_p(f.copy(), h, p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, D: int) -> np.ndarray:
    """Lexicographically first monic irreducible of degree D over GF(p).

    Candidates x^D + c(x) are scanned with c encoded as an integer in base p,
    starting from c = 1; this fixes the modulus of every extension field.
    """
    for code in range(1, p**D):
        f = np.concatenate((_int_to_poly(code, p, D), [1]))
        if f[0] == 0:
            continue
        if is_irreducible_p(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {D} over GF({p})")


class ExtensionField:
    """GF(q^s) realised as GF(p)[x]/(f), deg f = m*s, with GF(q) embedded.

    Elements are numpy int64 vectors of length ``D = m*s``.
    """

    def __init__(self, base: GF, s: int):
        if s < 1:
            raise FieldError("extension degree must be >= 1")
        self.base = base
        self.s = s
        self.p = base.p
        self.D = base.m * s
        self.order = base.q**s
        self.modulus = first_irreducible(self.p, self.D)
        self.ring = _ModRing(self.modulus, self.p)
        self._embed_table = self._build_embedding()
        self._unembed = {self.key(v): x for x, v in enumerate(self._embed_table)}

    # -- elements ---------------------------------------------------------
    def zero(self) -> np.ndarray:
        return np.zeros(self.D, dtype=np.int64)

    def one(self) -> np.ndarray:
        out = self.zero()
        out[0] = 1
        return out

    def from_int(self, code: int) -> np.ndarray:
        return _int_to_poly(code, self.p, self.D)

    def key(self, a: np.ndarray) -> bytes:
        return np.asarray(a, dtype=np.int64).tobytes()

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        return self.ring.pow(a, e)

    def inv(self, a):
        if not np.any(a):
            raise ZeroDivisionError("inverse of zero")
        return self.ring.pow(a, self.order - 2)

    def eq(self, a, b) -> bool:
        return bool(np.array_equal(a, b))

    def is_zero(self, a) -> bool:
        return not np.any(a)

    def is_one(self, a) -> bool:
        return bool(a[0] == 1 and not np.any(a[1:]))

    def element_order(self, a, M: int | None = None) -> int:
        """Order of a; if M is given it must be a known multiple of the order."""
        n = self.order - 1 if M is None else M
        for ell in _prime_factors(n):
            while n % ell == 0 and self.is_one(self.pow(a, n // ell)):
                n //= ell
        return n

    def candidates(self) -> Iterator[np.ndarray]:
        """Deterministic scan of nonzero elements: non-constants first
        (x, x+1, ...), then the constants (needed when the degree is 1)."""
        for code in range(self.p, self.order):
            yield self.from_int(code)
        for code in range(1, self.p):
            yield self.from_int(code)

    def element_of_order(self, M: int) -> np.ndarray:
        """First element (scan order) of multiplicative order exactly M."""
        if (self.order - 1) % M:
            raise FieldError(f"{M} does not divide |GF({self.order})^*|")
        cof = (self.order - 1) // M
        primes = _prime_factors(M) if M > 1 else []
        if M == 1:
            return self.one()
        for c in self.candidates():
            z = self.pow(c, cof)
            if all(not self.is_one(self.pow(z, M // ell)) for ell in primes):
                return z
        raise FieldError(f"no element of order {M}")

    # -- embedding of the base field -------------------------------------
    def _build_embedding(self) -> list[np.ndarray]:
        F = self.base
        if F.m == 1:
            table = []
            for x in range(F.q):
                v = self.zero()
                v[0] = x
                table.append(v)
            return table
        omega = self.element_of_order(F.q - 1)
        mod = F.modulus
        for j in range(1, F.q - 1):
            if math.gcd(j, F.q - 1) != 1:
                continue
            gamma = self.pow(omega, j)
            acc = self.zero()
            for c in reversed(mod):
                acc = self.add(self.mul(acc, gamma), self._const(c))
            if self.is_zero(acc):
                break
        else:  # pragma: no cover - a root always exists
            raise FieldError("failed to embed base field")
        table = [self.zero()]
        for i in range(F.q - 1):
            table.append(None)
        cur = self.one()
        for i in range(F.q - 1):
            table[F.exp[i]] = cur
            cur = self.mul(cur, gamma)
        return table

    def _const(self, c: int) -> np.ndarray:
        v = self.zero()
        v[0] = c % self.p
        return v

    def embed(self, x: int) -> np.ndarray:
        return self._embed_table[x]

    def unembed(self, a: np.ndarray) -> int | None:
        """Preimage in the base field, or None if ``a`` is not in it."""
        return self._unembed.get(self.key(a))

    def __repr__(self) -> str:
        return f"GF({self.base.q}^{self.s})"


def extension_field(F: GF, s: int) -> ExtensionField:
    """GF(q^s) with the embedding of F.  For s == 1 this is F itself, realised
    in the same vector form so callers can treat all extensions uniformly."""
    return _extension_cached(F.q, s)


_EXT_CACHE: dict[tuple[int, int], ExtensionField] = {}


def _extension_cached(q: int, s: int) -> ExtensionField:
    key = (q, s)
    if key not in _EXT_CACHE:
        _EXT_CACHE[key] = ExtensionField(GF(q), s)
    return _EXT_CACHE[key]
