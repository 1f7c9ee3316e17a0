"""Regularity data for prime cyclotomic fields.

Exact Bernoulli numbers (two independent algorithms), irregular pairs,
the relative class number h^- by the analytic class number formula, and
one-sided witnesses that a cyclotomic-unit eigencomponent is not a p-th
power.

The witness search is one-sided by design: a nonzero residue symbol of
the eigencomponent proves it is not a p-th power in the field, while an
all-zero result is merely inconclusive and is never reported as a
failure of Vandiver's conjecture.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from mpmath import mp

from .cycint import FieldCtx, cyc_new, field_ctx, galois
from .cycunits import unit_minus
from .ntheory import is_prime, primitive_root
from .powsym import symbol
from .resfield import split_prime

__all__ = [
    "BigRational",
    "IrregularPair",
    "VandiverWitness",
    "PrecisionError",
    "bernoulli",
    "bernoulli_akiyama_tanigawa",
    "irregular_pairs",
    "h_minus",
    "vandiver_witness",
]

#: Exact rationals are plain :class:`fractions.Fraction` values
#: (reduced, positive denominator — exactly the invariants needed).
BigRational = Fraction


class PrecisionError(RuntimeError):
    """h^- evaluation hit the precision cap without a certified rounding."""


@dataclass(frozen=True)
class IrregularPair:
    """(p, k): even k in [2, p-3] with p dividing the numerator of B_k."""

    p: int
    k: int


@dataclass(frozen=True)
class VandiverWitness:
    """Certificate (q, w, e): at the degree-1 ideal of root w above q the
    k-eigencomponent of the cyclotomic units has symbol exponent e != 0."""

    pair: IrregularPair
    q: int
    w: int
    e: int


_bern: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bern_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact B_n (convention B_1 = -1/2) via the binomial recurrence.

    sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1; results are memoized.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        while len(_bern) <= n:
            m = len(_bern)
            s = sum(comb(m + 1, j) * _bern[j] for j in range(m))
            _bern.append(-s / (m + 1))
    return _bern[n]


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa triangle; independent of `bernoulli`.

    The raw triangle produces the B_1 = +1/2 convention; the sign is
    flipped at n = 1 so both routines agree everywhere.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return row[0]


def irregular_pairs(p: int) -> list[IrregularPair]:
    """All even k in [2, p-3] with p | numerator(B_k); empty iff p regular."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    return [
        IrregularPair(p, k)
        for k in range(2, p - 2, 2)
        if bernoulli(k).numerator % p == 0
    ]


_H_MINUS_PREC_CAP = 1 << 16


def h_minus(p: int, precision: int | None = None) -> int:
    """Relative class number h^- of the p-th cyclotomic field.

    Evaluates 2p * prod over odd characters chi of (-B_{1,chi}/2) with
    arbitrary-precision complex arithmetic, certifying that the
    accumulated error bound is below 0.25 before rounding; on failure
    the working precision doubles, up to a hard cap.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    if p == 3:
        return 1
    prec = precision if precision else 128
    while prec <= _H_MINUS_PREC_CAP:
        value = _h_minus_at(p, prec)
        if value is not None:
            return value
        prec *= 2
    raise PrecisionError(f"h^-({p}) did not certify below precision cap")


def _h_minus_at(p: int, prec: int) -> int | None:
    n = p - 1
    g = primitive_root(p)
    # walk the group as powers of g: chi_j(g^t) = omega^(jt), odd chi <=> odd j
    a_of_t = [1] * n
    for t in range(1, n):
        a_of_t[t] = a_of_t[t - 1] * g % p
    with mp.workprec(prec):
        omega = [mp.expjpi(mp.mpf(2 * m) / n) for m in range(n)]
        eps = mp.mpf(2) ** (1 - prec)
        term_err = 2 * p * p * eps  # crude bound: p^2-size sums of unit terms
        prod = mp.mpc(1)
        rel = mp.mpf(0)
        for j in range(1, n, 2):
            s = mp.mpc(0)
            for t in range(n):
                s += a_of_t[t] * omega[j * t % n]
            term = -s / (2 * p)
            mag = abs(term)
            if mag < 16 * term_err:
                return None
            rel += term_err / mag
            prod *= term
        if rel > mp.mpf(1) / 16:
            return None
        h = 2 * p * prod
        real = mp.re(h)
        bound = abs(h) * rel * 2 + abs(mp.im(h))
        nearest = mp.nint(real)
        if bound >= mp.mpf(1) / 4 or abs(real - nearest) > bound:
            return None
        return int(nearest)


def vandiver_witness(p: int, k: int, q_candidates: int) -> VandiverWitness | None:
    """Search the first q_candidates primes q = 1 mod p for a witness.

    Fixes g = smallest primitive root mod p and the exponent vector
    n_a = a^(-k) mod p (representatives in [0, p)); the eigencomponent
    is prod_a s_a(u)^(n_a) for u the index-g minus-family unit, and its
    symbol exponent is accumulated term by term in the residue field —
    the power product itself is never expanded in Z[zeta].  Changing the
    representatives n_a alters e only by p-th-power contributions, so
    whether e vanishes does not depend on that choice.

    Returns the first (q, ideal) certificate with e != 0, or None if
    every candidate yields 0 (inconclusive).
    """
    pairs = {pair.k for pair in irregular_pairs(p)}
    if k not in pairs:
        raise ValueError(f"({p}, {k}) is not an irregular pair")
    if q_candidates < 1:
        raise ValueError("q_candidates must be >= 1")
    ctx = field_ctx(p)
    g = primitive_root(p)
    u = unit_minus(ctx, g)
    conjugates = {a: galois(u, a) for a in range(1, p)}
    exps = {a: pow(pow(a, k, p), -1, p) for a in range(1, p)}
    seen = 0
    m = 2
    while seen < q_candidates:
        q = m * p + 1
        m += 2
        if not is_prime(q):
            continue
        seen += 1
        for ideal in split_prime(ctx, q):
            e = sum(exps[a] * symbol(conjugates[a], ideal) for a in range(1, p)) % p
            if e:
                return VandiverWitness(IrregularPair(p, k), q, ideal.w, e)
    return None


def eigencomponent_symbol(ctx: FieldCtx, k: int, ideal) -> int:
    """Symbol exponent of the k-eigencomponent unit at the given ideal.

    Same accumulation as the witness search, exposed so certificates can
    be re-checked against any ideal.
    """
    p = ctx.p
    g = primitive_root(p)
    u = unit_minus(ctx, g)
    return (
        sum(
            pow(pow(a, k, p), -1, p) * symbol(galois(u, a), ideal)
            for a in range(1, p)
        )
        % p
    )
