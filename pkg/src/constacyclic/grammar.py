"""Text grammar for field elements and polynomials.

A polynomial is written as its coefficient list, constant term first:
``0123`` over GF(5) is x + 2x^2 + 3x^3.  Each coefficient token is either a
digit naming a prime-subfield element, or ``A`` / ``A^k`` naming a power of
the field generator (extension fields only).  A leading ``(D)`` marks the
string as describing the dual of the code generated by the polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import GF
from .polyring import Poly


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"A(?:\^(\d))?|(\d)")
DUAL_MARK = "(D)"


@dataclass(frozen=True)
class PolyString:
    """A parsed polynomial string: the polynomial plus its dual marker."""

    poly: Poly
    dual: bool = False


def _element(F: GF, tok: re.Match) -> int:
    if tok.group(2) is not None:
        d = int(tok.group(2))
        if d >= F.p:
            raise ParseError(f"digit {d} out of range for GF({F.q})")
        return d
    if F.is_prime:
        raise ParseError(f"'A' is not an element of the prime field GF({F.q})")
    e = int(tok.group(1)) if tok.group(1) is not None else 1
    return F.from_power(e)


def parse_element(s: str, F: GF) -> int:
    """Parse a single token ("3", "A", "A^5")."""
    s = s.strip()
    m = _TOKEN.fullmatch(s)
    if m is None:
        if s.isdigit() and F.is_prime and int(s) < F.q:
            return int(s)
        raise ParseError(f"invalid field element {s!r}")
    return _element(F, m)


def parse_poly_string(s: str, F: GF) -> PolyString:
    raw = s.strip()
    dual = raw.startswith(DUAL_MARK)
    if dual:
        raw = raw[len(DUAL_MARK):]
    raw = raw.strip("[]$ ")
    if not raw:
        raise ParseError("empty polynomial string")
    coeffs = []
    pos = 0
    while pos < len(raw):
        m = _TOKEN.match(raw, pos)
        if m is None:
            raise ParseError(f"invalid token at position {pos} in {s!r}")
        coeffs.append(_element(F, m))
        pos = m.end()
    return PolyString(Poly(F, coeffs), dual)


def parse_poly(s: str, F: GF) -> Poly:
    """Parse a coefficient string; a dual marker is accepted and dropped."""
    return parse_poly_string(s, F).poly


def print_element(x: int, F: GF) -> str:
    if x < F.p:
        return str(x)
    e = F.power_index(x)
    return "A" if e == 1 else f"A^{e}"


def print_poly(f: Poly, dual: bool = False) -> str:
    """Inverse of ``parse_poly`` (zero prints as "0")."""
    body = "".join(print_element(c, f.F) for c in f.coeffs) or "0"
    return (DUAL_MARK if dual else "") + body
