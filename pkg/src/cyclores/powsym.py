"""p-th power residue symbols, recorded as exponents modulo p.

The symbol of alpha at a prime ideal q_K above q is the unique p-th root
of unity congruent to alpha^((N(q_K)-1)/p) mod q_K, N(q_K) = q^f.  We
work with its exponent e in [0, p): the multiplicative value is zeta^e,
so e = 0 is the trivial symbol (written "= 1" in multiplicative
notation), and symbols compose additively,
symbol(a*b) = symbol(a) + symbol(b) mod p.

The symbol depends on the choice of ideal above q (equivalently on the
root w), so the ideal is always an explicit argument.  Symbols beyond
residue degree 1 are supported for f <= 4 with q^f below 2^128; larger
fields are rejected rather than silently mishandled.
"""

from __future__ import annotations

from typing import Sequence

from .cycint import ContextMismatchError, CycInt, InternalError
from .resfield import PrimeIdealRep, residue

__all__ = [
    "SymbolExp",
    "NotCoprimeError",
    "UnsupportedIdealError",
    "symbol",
    "zeta_symbol",
    "symbol_vector",
]

#: A residue symbol value: the exponent e in [0, p) with symbol = zeta^e.
SymbolExp = int


class NotCoprimeError(ValueError):
    """The element reduces to zero modulo the ideal."""


class UnsupportedIdealError(ValueError):
    """Symbol computation is limited to f <= 4 with q^f < 2^128."""


def _check_supported(ideal: PrimeIdealRep) -> None:
    if ideal.f > 4 or ideal.q**ideal.f >= 1 << 128:
        raise UnsupportedIdealError(
            f"residue degree f={ideal.f} over q={ideal.q} is out of the supported range"
        )


def symbol(a: CycInt, ideal: PrimeIdealRep) -> SymbolExp:
    """Exponent e with a^((q^f-1)/p) = w^e modulo the ideal."""
    if a.ctx != ideal.ctx:
        raise ContextMismatchError("element and ideal live in different fields")
    _check_supported(ideal)
    r0 = residue(a, ideal)
    if r0.is_zero():
        raise NotCoprimeError("element is not coprime to the ideal")
    r = (r0**ideal.euler_exponent).value
    if ideal.f == 1:
        e = ideal._dlog.get(r[0])
    else:
        e = ideal._dlog.get(r)
    if e is None:
        raise InternalError("symbol value is not a power of w; broken ideal data")
    return e


def zeta_symbol(ideal: PrimeIdealRep) -> SymbolExp:
    """Symbol exponent of zeta itself: (q^f - 1)/p reduced mod p."""
    _check_supported(ideal)
    return ideal.euler_exponent % ideal.ctx.p


def symbol_vector(items: Sequence[CycInt], ideal: PrimeIdealRep) -> list[SymbolExp]:
    """Elementwise symbols, sharing the precomputed exponent (q^f-1)/p."""
    _check_supported(ideal)
    exponent = ideal.euler_exponent
    residues = [residue(a, ideal) for a in items]
    bad = [i for i, r in enumerate(residues) if r.is_zero()]
    if bad:
        raise NotCoprimeError(f"items at indices {bad} are not coprime to the ideal")
    out = []
    for r0 in residues:
        r = (r0**exponent).value
        e = ideal._dlog.get(r[0] if ideal.f == 1 else r)
        if e is None:
            raise InternalError("symbol value is not a power of w; broken ideal data")
        out.append(e)
    return out
