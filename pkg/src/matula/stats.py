"""Tree statistics computed directly from the Matula number.

Every statistic is defined by a case split on n: a base value at n = 1
(and sometimes n = 2), a rule for prime n = p_t in terms of the index t,
and a rule for composite n = r*s in terms of the two parts.  The engine
memoizes by (statistic, n); the composite split is always r = smallest
prime factor, which keeps r prime (required by the BV and TW rules) and
makes the recursion shape canonical.

Multiplicative statistics (NK, MZ1, MZ2) pass through exact rationals
internally and are asserted integral before leaving the engine.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import primes
from .errors import InternalIntegrityError, InvalidInput, UnsupportedName
from .poly import IntPolynomial, ONE, X, ZERO
from .primes import PrimeSieve

_monomial = IntPolynomial.monomial


class StatName(enum.Enum):
    V = "V"
    E = "E"
    H = "H"
    LLL = "LLL"
    LV = "LV"
    MD = "MD"
    DM = "DM"
    PL = "PL"
    EPL = "EPL"
    BV = "BV"
    PV = "PV"
    SP = "SP"
    VL = "VL"
    RST = "RST"
    ST = "ST"
    W = "W"
    TW = "TW"
    Z1 = "Z1"
    Z2 = "Z2"
    NK = "NK"
    MZ1 = "MZ1"
    MZ2 = "MZ2"
    A_ALPHA = "A_ALPHA"
    R_ALPHA = "R_ALPHA"
    PWP = "PWP"
    WP = "WP"
    DSP = "DSP"
    EDP = "EDP"
    HYPER_W = "HYPER_W"
    MULT_W = "MULT_W"
    POLARITY = "POLARITY"
    SUM_EVEN = "SUM_EVEN"
    SUM_ODD = "SUM_ODD"
    EXIT_SUM = "EXIT_SUM"
    EXIT_MAX = "EXIT_MAX"
    EXIT_MAX_COUNT = "EXIT_MAX_COUNT"
    LEVEL_COUNT = "LEVEL_COUNT"

    @classmethod
    def from_string(cls, s: str) -> "StatName":
        key = s.strip().upper()
        alias = _NAME_ALIASES.get(key, key)
        try:
            return cls[alias]
        except KeyError:
            raise UnsupportedName(f"unknown statistic name {s!r}") from None


_NAME_ALIASES = {
    "A": "A_ALPHA",
    "R": "R_ALPHA",
    "RANDIC": "R_ALPHA",
}

SCALAR_STATS = frozenset(
    StatName[x]
    for x in (
        "V E H LLL LV MD DM PL EPL BV PV SP VL RST ST W TW Z1 Z2".split()
    )
)
MULTIPLICATIVE_STATS = frozenset({StatName.NK, StatName.MZ1, StatName.MZ2})
ALPHA_STATS = frozenset({StatName.A_ALPHA, StatName.R_ALPHA})
POLY_STATS = frozenset({StatName.PWP, StatName.WP, StatName.DSP, StatName.EDP})
DERIVED_STATS = frozenset(
    StatName[x]
    for x in (
        "HYPER_W MULT_W POLARITY SUM_EVEN SUM_ODD "
        "EXIT_SUM EXIT_MAX EXIT_MAX_COUNT LEVEL_COUNT".split()
    )
)

#: Short human description of each statistic.
DESCRIPTIONS: dict[StatName, str] = {
    StatName.V: "number of vertices",
    StatName.E: "number of edges",
    StatName.H: "height (maximum level)",
    StatName.LLL: "level of the lowest leaf",
    StatName.LV: "number of leaves",
    StatName.MD: "maximum vertex degree",
    StatName.DM: "diameter",
    StatName.PL: "path length (sum of levels)",
    StatName.EPL: "external path length (sum of leaf levels)",
    StatName.BV: "number of branching vertices (degree >= 3)",
    StatName.PV: "number of pendant vertices (degree 1)",
    StatName.SP: "number of sibling pairs",
    StatName.VL: "visitation length (vertices + path length)",
    StatName.RST: "number of subtrees containing the root",
    StatName.ST: "number of subtrees (connected subgraphs)",
    StatName.W: "Wiener index (sum of all pairwise distances)",
    StatName.TW: "terminal Wiener index (pendant pairs only)",
    StatName.Z1: "first Zagreb index (sum of squared degrees)",
    StatName.Z2: "second Zagreb index (sum of degree products over edges)",
    StatName.NK: "Narumi-Katayama index (product of degrees)",
    StatName.MZ1: "first multiplicative Zagreb index (product of squared degrees)",
    StatName.MZ2: "second multiplicative Zagreb index (product over edges)",
    StatName.A_ALPHA: "sum of degree^alpha over level-1 vertices",
    StatName.R_ALPHA: "general Randic index (sum over edges of (deg*deg)^alpha)",
    StatName.PWP: "partial Wiener polynomial with respect to the root",
    StatName.WP: "Wiener polynomial (vertex pairs by distance)",
    StatName.DSP: "degree sequence polynomial (vertices by degree)",
    StatName.EDP: "exit-distance polynomial (vertices by exit distance)",
    StatName.HYPER_W: "hyper-Wiener index",
    StatName.MULT_W: "multiplicative Wiener index (product of pairwise distances)",
    StatName.POLARITY: "Wiener polarity index (pairs at distance k, default 3)",
    StatName.SUM_EVEN: "sum of even pairwise distances",
    StatName.SUM_ODD: "sum of odd pairwise distances",
    StatName.EXIT_SUM: "sum of exit distances over all vertices",
    StatName.EXIT_MAX: "maximum exit distance",
    StatName.EXIT_MAX_COUNT: "number of vertices attaining the maximum exit distance",
    StatName.LEVEL_COUNT: "number of non-root vertices at level k",
}

#: OEIS sequence ids, kept as data.  None where no single sequence applies.
OEIS_IDS: dict[StatName, str | None] = {
    StatName.V: "A061775",
    StatName.E: "A196050",
    StatName.H: "A109082",
    StatName.LLL: "A184166",
    StatName.LV: "A109129",
    StatName.MD: "A196046",
    StatName.DM: "A196058",
    StatName.PL: "A196047",
    StatName.EPL: "A196048",
    StatName.BV: "A196049",
    StatName.PV: "A196067",
    StatName.SP: "A196057",
    StatName.VL: "A196068",
    StatName.RST: "A184160",
    StatName.ST: "A184161",
    StatName.W: "A196051",
    StatName.TW: "A196055",
    StatName.Z1: "A196053",
    StatName.Z2: "A196054",
    StatName.NK: "A196063",
    StatName.MZ1: "A196065",
    StatName.MZ2: "A196064",
    StatName.A_ALPHA: "A196052",
    StatName.R_ALPHA: None,
    StatName.PWP: "A196056",
    StatName.WP: "A196059",
    StatName.DSP: "A182907",
    StatName.EDP: "A184167",
    StatName.HYPER_W: "A196060",
    StatName.MULT_W: "A196061",
    StatName.POLARITY: "A184156",
    StatName.SUM_EVEN: "A184157",
    StatName.SUM_ODD: "A184158",
    StatName.EXIT_SUM: "A184168",
    StatName.EXIT_MAX: "A184169",
    StatName.EXIT_MAX_COUNT: "A184170",
    StatName.LEVEL_COUNT: None,
}

StatValue = Any  # int | Fraction | IntPolynomial | float


@dataclass(frozen=True)
class _Rule:
    base: dict[int, Any]
    prime: Callable[["StatsEngine", int], Any]
    composite: Callable[["StatsEngine", int, int], Any]
    prime_split: bool = False  # composite rule assumes r is prime
    integral: bool = False  # rational intermediates; result must be integral


def _require_integral(v, name: StatName, n: int) -> int:
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise InternalIntegrityError(f"{name.value}({n}) came out non-integral: {v}")
        return int(v)
    return v


def _simplify(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _pow(base: int, a, exact: bool):
    return Fraction(base) ** a if exact else float(base) ** a


def _tw_prime(e: "StatsEngine", t: int):
    v = e._val(StatName.TW, t) + e._val(StatName.LV, t)
    if e._omega(t) == 1:
        return v
    return v + e._val(StatName.EPL, t)


def _tw_composite(e: "StatsEngine", r: int, s: int):
    # r is prime, so the root of the r-part was pendant and its pair
    # distances (summing to EPL(r)) must be removed; same for the s-part
    # only when s is prime.
    v = e._val(StatName.TW, r) - e._val(StatName.EPL, r) + e._val(StatName.TW, s)
    if e._omega(s) == 1:
        v -= e._val(StatName.EPL, s)
    return (
        v
        + e._val(StatName.EPL, r) * e._val(StatName.LV, s)
        + e._val(StatName.EPL, s) * e._val(StatName.LV, r)
    )


def _z1_composite(e: "StatsEngine", r: int, s: int):
    wr, ws = e._omega(r), e._omega(s)
    return (
        e._val(StatName.Z1, r)
        + e._val(StatName.Z1, s)
        - wr**2
        - ws**2
        + (wr + ws) ** 2
    )


def _z2_prime(e: "StatsEngine", t: int):
    return e._val(StatName.Z2, t) + e._a1(t) + e._omega(t) + 1


def _z2_composite(e: "StatsEngine", r: int, s: int):
    return (
        e._val(StatName.Z2, r)
        + e._val(StatName.Z2, s)
        + e._a1(r) * e._omega(s)
        + e._a1(s) * e._omega(r)
    )


def _nk_prime(e: "StatsEngine", t: int):
    return e._val(StatName.NK, t) * (1 + Fraction(1, e._omega(t)))


def _nk_composite(e: "StatsEngine", r: int, s: int):
    return (
        e._val(StatName.NK, r)
        * e._val(StatName.NK, s)
        * (Fraction(1, e._omega(r)) + Fraction(1, e._omega(s)))
    )


def _mz1_prime(e: "StatsEngine", t: int):
    return e._val(StatName.MZ1, t) * (1 + Fraction(1, e._omega(t))) ** 2


def _mz1_composite(e: "StatsEngine", r: int, s: int):
    return (
        e._val(StatName.MZ1, r)
        * e._val(StatName.MZ1, s)
        * (Fraction(1, e._omega(r)) + Fraction(1, e._omega(s))) ** 2
    )


def _mz2_prime(e: "StatsEngine", t: int):
    w = e._omega(t)
    return e._val(StatName.MZ2, t) * Fraction((1 + w) ** (1 + w), w**w)


def _mz2_composite(e: "StatsEngine", r: int, s: int):
    wr, ws = e._omega(r), e._omega(s)
    wn = wr + ws
    return (
        e._val(StatName.MZ2, r)
        * e._val(StatName.MZ2, s)
        * Fraction(wn**wn, wr**wr * ws**ws)
    )


def _dsp_prime(e: "StatsEngine", t: int):
    return e._val(StatName.DSP, t) + _monomial(e._omega(t)) * (X - 1) + X


def _dsp_composite(e: "StatsEngine", r: int, s: int):
    wr, ws = e._omega(r), e._omega(s)
    return (
        e._val(StatName.DSP, r)
        + e._val(StatName.DSP, s)
        - _monomial(wr)
        - _monomial(ws)
        + _monomial(wr + ws)
    )


_S = StatName

_RULES: dict[StatName, _Rule] = {
    _S.V: _Rule(
        {1: 1},
        lambda e, t: 1 + e._val(_S.V, t),
        lambda e, r, s: e._val(_S.V, r) + e._val(_S.V, s) - 1,
    ),
    _S.E: _Rule(
        {1: 0},
        lambda e, t: 1 + e._val(_S.E, t),
        lambda e, r, s: e._val(_S.E, r) + e._val(_S.E, s),
    ),
    _S.H: _Rule(
        {1: 0},
        lambda e, t: 1 + e._val(_S.H, t),
        lambda e, r, s: max(e._val(_S.H, r), e._val(_S.H, s)),
    ),
    # LLL(1) = 0 by convention: the single vertex has no leaf, and this
    # base makes LLL(2) = 1 come out right.
    _S.LLL: _Rule(
        {1: 0},
        lambda e, t: 1 + e._val(_S.LLL, t),
        lambda e, r, s: min(e._val(_S.LLL, r), e._val(_S.LLL, s)),
    ),
    _S.LV: _Rule(
        {1: 0, 2: 1},
        lambda e, t: e._val(_S.LV, t),
        lambda e, r, s: e._val(_S.LV, r) + e._val(_S.LV, s),
    ),
    _S.MD: _Rule(
        {1: 0},
        lambda e, t: max(e._val(_S.MD, t), 1 + e._omega(t)),
        lambda e, r, s: max(
            e._val(_S.MD, r), e._val(_S.MD, s), e._omega(r) + e._omega(s)
        ),
    ),
    _S.DM: _Rule(
        {1: 0},
        lambda e, t: max(e._val(_S.DM, t), 1 + e._val(_S.H, t)),
        lambda e, r, s: max(
            e._val(_S.DM, r),
            e._val(_S.DM, s),
            e._val(_S.H, r) + e._val(_S.H, s),
        ),
    ),
    _S.PL: _Rule(
        {1: 0},
        lambda e, t: e._val(_S.PL, t) + e._val(_S.V, t),
        lambda e, r, s: e._val(_S.PL, r) + e._val(_S.PL, s),
    ),
    _S.EPL: _Rule(
        {1: 0, 2: 1},
        lambda e, t: e._val(_S.EPL, t) + e._val(_S.LV, t),
        lambda e, r, s: e._val(_S.EPL, r) + e._val(_S.EPL, s),
    ),
    _S.BV: _Rule(
        {1: 0},
        lambda e, t: e._val(_S.BV, t) + (1 if e._omega(t) == 2 else 0),
        lambda e, r, s: e._val(_S.BV, r)
        + e._val(_S.BV, s)
        + (1 if e._omega(s) == 2 else 0),
        prime_split=True,
    ),
    _S.PV: _Rule(
        {1: 0, 2: 2},
        lambda e, t: 1 + e._val(_S.LV, t),
        lambda e, r, s: e._val(_S.LV, r) + e._val(_S.LV, s),
    ),
    _S.SP: _Rule(
        {1: 0},
        lambda e, t: e._val(_S.SP, t),
        lambda e, r, s: e._val(_S.SP, r)
        + e._val(_S.SP, s)
        + e._omega(r) * e._omega(s),
    ),
    _S.VL: _Rule(
        {1: 1},
        lambda e, t: e._val(_S.VL, t) + e._val(_S.V, t) + 1,
        lambda e, r, s: e._val(_S.VL, r) + e._val(_S.VL, s) - 1,
    ),
    _S.RST: _Rule(
        {1: 1},
        lambda e, t: 1 + e._val(_S.RST, t),
        lambda e, r, s: e._val(_S.RST, r) * e._val(_S.RST, s),
    ),
    _S.ST: _Rule(
        {1: 1},
        lambda e, t: 1 + e._val(_S.ST, t) + e._val(_S.RST, t),
        lambda e, r, s: e._val(_S.ST, r)
        + e._val(_S.ST, s)
        + (e._val(_S.RST, r) - 1) * (e._val(_S.RST, s) - 1)
        - 1,
    ),
    _S.W: _Rule(
        {1: 0},
        lambda e, t: e._val(_S.W, t) + e._val(_S.PL, t) + e._val(_S.E, t) + 1,
        lambda e, r, s: e._val(_S.W, r)
        + e._val(_S.W, s)
        + e._val(_S.PL, r) * e._val(_S.E, s)
        + e._val(_S.PL, s) * e._val(_S.E, r),
    ),
    _S.TW: _Rule({1: 0, 2: 1}, _tw_prime, _tw_composite, prime_split=True),
    _S.Z1: _Rule(
        {1: 0},
        lambda e, t: e._val(_S.Z1, t) + 2 + 2 * e._omega(t),
        _z1_composite,
    ),
    _S.Z2: _Rule({1: 0}, _z2_prime, _z2_composite),
    _S.NK: _Rule({1: 0, 2: 1}, _nk_prime, _nk_composite, integral=True),
    _S.MZ1: _Rule({1: 0, 2: 1}, _mz1_prime, _mz1_composite, integral=True),
    _S.MZ2: _Rule({1: 0, 2: 1}, _mz2_prime, _mz2_composite, integral=True),
    _S.PWP: _Rule(
        {1: ZERO},
        lambda e, t: X + X * e._val(_S.PWP, t),
        lambda e, r, s: e._val(_S.PWP, r) + e._val(_S.PWP, s),
    ),
    _S.WP: _Rule(
        {1: ZERO},
        lambda e, t: e._val(_S.WP, t) + X * e._val(_S.PWP, t) + X,
        lambda e, r, s: e._val(_S.WP, r)
        + e._val(_S.WP, s)
        + e._val(_S.PWP, r) * e._val(_S.PWP, s),
    ),
    _S.DSP: _Rule({1: ONE}, _dsp_prime, _dsp_composite),
    _S.EDP: _Rule(
        {1: ONE},
        lambda e, t: e._val(_S.EDP, t) + _monomial(1 + e._val(_S.LLL, t)),
        lambda e, r, s: e._val(_S.EDP, r)
        + e._val(_S.EDP, s)
        - _monomial(max(e._val(_S.LLL, r), e._val(_S.LLL, s))),
    ),
}


class StatsEngine:
    """Memoized evaluator for all statistics.

    Not thread-safe: use one engine per thread (the underlying sieve is
    shared safely).  Values are memoized per (statistic, n); exact-alpha
    values per (statistic, n, alpha).  Float-alpha computations are not
    cached.
    """

    def __init__(self, sieve: PrimeSieve | None = None):
        self._sieve = sieve if sieve is not None else primes.default_sieve()
        self._memo: dict[tuple[StatName, int], Any] = {}
        self._alpha_memo: dict[tuple[StatName, int, int], Any] = {}

    # -- internals ----------------------------------------------------

    def _check_n(self, n) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidInput(f"n must be a positive integer, got {n!r}")

    def _omega(self, m: int) -> int:
        return self._sieve.factorize(m).omega

    def _val(self, name: StatName, n: int):
        key = (name, n)
        if key in self._memo:
            return self._memo[key]
        rule = _RULES[name]
        v = rule.base.get(n)
        if v is None:
            fz = self._sieve.factorize(n)
            if fz.omega == 1:
                v = rule.prime(self, self._sieve.prime_index(n))
            else:
                r = fz.factors[0][0]
                v = rule.composite(self, r, n // r)
            if rule.integral:
                v = _require_integral(v, name, n)
        self._memo[key] = v
        return v

    def _a1(self, n: int) -> int:
        return self._a_value(n, 1, True)

    def _a_value(self, n: int, a, exact: bool):
        if exact:
            key = (StatName.A_ALPHA, n, a)
            if key in self._alpha_memo:
                return self._alpha_memo[key]
        if n == 1:
            v = 0 if exact else 0.0
        else:
            fz = self._sieve.factorize(n)
            if fz.omega == 1:
                t = self._sieve.prime_index(n)
                v = _pow(1 + self._omega(t), a, exact)
            else:
                r = fz.factors[0][0]
                v = self._a_value(r, a, exact) + self._a_value(n // r, a, exact)
        if exact:
            v = _simplify(v)
            self._alpha_memo[key] = v
        return v

    def _r_value(self, n: int, a, exact: bool):
        if exact:
            key = (StatName.R_ALPHA, n, a)
            if key in self._alpha_memo:
                return self._alpha_memo[key]
        if n == 1:
            v = 0 if exact else 0.0
        else:
            fz = self._sieve.factorize(n)
            if fz.omega == 1:
                t = self._sieve.prime_index(n)
                wt = self._omega(t)
                v = self._r_value(t, a, exact) + _pow(1 + wt, a, exact)
                at = self._a_value(t, a, exact)
                if at:  # guard: 0**a is undefined for negative a, and at=0 kills the term
                    v += at * (_pow(1 + wt, a, exact) - _pow(wt, a, exact))
            else:
                r = fz.factors[0][0]
                v = self._r_composite(r, n // r, a, exact)
        if exact:
            v = _simplify(v)
            self._alpha_memo[key] = v
        return v

    def _r_composite(self, r: int, s: int, a, exact: bool):
        wr, ws = self._omega(r), self._omega(s)
        wn = wr + ws
        return (
            self._r_value(r, a, exact)
            + self._r_value(s, a, exact)
            + self._a_value(r, a, exact) * (_pow(wn, a, exact) - _pow(wr, a, exact))
            + self._a_value(s, a, exact) * (_pow(wn, a, exact) - _pow(ws, a, exact))
        )

    def _dsp_degree_product(self, n: int, exponent_of_degree) -> Fraction:
        """Product over the degree multiset read off DSP(n); cross-check path."""
        dsp = self._val(StatName.DSP, n)
        out = Fraction(1)
        for deg, count in enumerate(dsp.coeffs):
            if count:
                out *= Fraction(deg) ** (exponent_of_degree(deg) * count)
        return out

    # -- public operations ---------------------------------------------

    def scalar_stat(self, name: StatName, n: int) -> int:
        self._check_n(n)
        if name not in SCALAR_STATS:
            raise InvalidInput(f"{name.value} is not a scalar statistic")
        return self._val(name, n)

    def multiplicative_stat(self, name: StatName, n: int) -> int:
        self._check_n(n)
        if name not in MULTIPLICATIVE_STATS:
            raise InvalidInput(f"{name.value} is not a multiplicative statistic")
        v = self._val(name, n)
        if n >= 2:
            # Defense in depth: recompute from the degree multiset.
            if name is StatName.NK:
                check = self._dsp_degree_product(n, lambda d: 1)
            elif name is StatName.MZ1:
                check = self._dsp_degree_product(n, lambda d: 2)
            else:
                check = self._dsp_degree_product(n, lambda d: d)
            if check != v:
                raise InternalIntegrityError(
                    f"{name.value}({n}): recursion gave {v}, degree multiset gives {check}"
                )
        return v

    def a_alpha(self, n: int, alpha) -> StatValue:
        self._check_n(n)
        exact, a = _alpha_mode(alpha)
        return self._a_value(n, a, exact)

    def randic(self, n: int, alpha) -> StatValue:
        self._check_n(n)
        exact, a = _alpha_mode(alpha)
        return self._r_value(n, a, exact)

    def poly_stat(self, name: StatName, n: int) -> IntPolynomial:
        self._check_n(n)
        if name not in POLY_STATS:
            raise InvalidInput(f"{name.value} is not a polynomial statistic")
        return self._val(name, n)

    def derived_stat(self, name: StatName, n: int, k: int | None = None) -> int:
        self._check_n(n)
        if name not in DERIVED_STATS:
            raise InvalidInput(f"{name.value} is not a derived statistic")
        if name is StatName.POLARITY:
            k = 3 if k is None else k
        elif name is StatName.LEVEL_COUNT:
            if k is None:
                raise InvalidInput("LEVEL_COUNT requires k")
        elif k is not None:
            raise InvalidInput(f"{name.value} takes no k parameter")
        if k is not None and k < 0:
            raise InvalidInput(f"k must be >= 0, got {k}")

        if name is StatName.HYPER_W:
            g = self._val(StatName.WP, n)
            d1 = g.derivative()
            v = d1.eval_at_one() + Fraction(d1.derivative().eval_at_one(), 2)
            if v.denominator != 1:
                raise InternalIntegrityError(f"HYPER_W({n}) came out non-integral: {v}")
            return int(v)
        if name is StatName.MULT_W:
            g = self._val(StatName.WP, n)
            out = 1
            for dist, count in enumerate(g.coeffs):
                if dist > 1 and count:
                    out *= dist**count
            return out
        if name is StatName.POLARITY:
            return self._val(StatName.WP, n).coefficient(k)
        if name is StatName.SUM_EVEN:
            return self._val(StatName.WP, n).even_part().derivative().eval_at_one()
        if name is StatName.SUM_ODD:
            return self._val(StatName.WP, n).odd_part().derivative().eval_at_one()
        if name is StatName.EXIT_SUM:
            return self._val(StatName.EDP, n).derivative().eval_at_one()
        if name is StatName.EXIT_MAX:
            return self._val(StatName.EDP, n).degree()
        if name is StatName.EXIT_MAX_COUNT:
            return self._val(StatName.EDP, n).leading_coefficient()
        if name is StatName.LEVEL_COUNT:
            return self._val(StatName.PWP, n).coefficient(k)
        raise UnsupportedName(f"no derived rule for {name.value}")

    def compute(
        self, name: StatName, n: int, alpha=None, k: int | None = None
    ) -> StatValue:
        """Dispatch to the right operation for any statistic name."""
        if name in ALPHA_STATS:
            if k is not None:
                raise InvalidInput(f"{name.value} takes no k parameter")
            if alpha is None:
                alpha = 1 if name is StatName.A_ALPHA else Fraction(-1, 2)
            if name is StatName.A_ALPHA:
                return self.a_alpha(n, alpha)
            return self.randic(n, alpha)
        if alpha is not None:
            raise InvalidInput(f"{name.value} takes no alpha parameter")
        if name in SCALAR_STATS:
            if k is not None:
                raise InvalidInput(f"{name.value} takes no k parameter")
            return self.scalar_stat(name, n)
        if name in MULTIPLICATIVE_STATS:
            if k is not None:
                raise InvalidInput(f"{name.value} takes no k parameter")
            return self.multiplicative_stat(name, n)
        if name in POLY_STATS:
            if k is not None:
                raise InvalidInput(f"{name.value} takes no k parameter")
            return self.poly_stat(name, n)
        if name in DERIVED_STATS:
            return self.derived_stat(name, n, k)
        raise UnsupportedName(f"no rule for {name.value}")

    def composite_value(self, name: StatName, r: int, s: int, alpha=None) -> StatValue:
        """Evaluate a statistic's composite-case rule at the split n = r*s.

        Sub-values are taken from the canonical (memoized) recursion; this
        exists so split-invariance can be checked against arbitrary splits.
        """
        if r < 2 or s < 2:
            raise InvalidInput("both parts of a split must be >= 2")
        if name in ALPHA_STATS:
            if alpha is None:
                raise InvalidInput(f"{name.value} requires alpha")
            exact, a = _alpha_mode(alpha)
            if name is StatName.A_ALPHA:
                return _simplify(
                    self._a_value(r, a, exact) + self._a_value(s, a, exact)
                )
            return _simplify(self._r_composite(r, s, a, exact))
        rule = _RULES.get(name)
        if rule is None:
            raise InvalidInput(f"{name.value} has no composite-case rule")
        if rule.prime_split and self._omega(r) != 1:
            raise InvalidInput(f"the {name.value} composite rule requires a prime r")
        v = rule.composite(self, r, s)
        if rule.integral:
            v = _require_integral(v, name, r * s)
        return v


def _alpha_mode(alpha) -> tuple[bool, Any]:
    """Split alpha into (exact?, normalized value): ints are exact, the rest float."""
    if isinstance(alpha, bool):
        raise InvalidInput("alpha must be a number")
    if isinstance(alpha, int):
        return True, alpha
    if isinstance(alpha, Fraction):
        if alpha.denominator == 1:
            return True, int(alpha)
        return False, float(alpha)
    if isinstance(alpha, float):
        if alpha.is_integer():
            return True, int(alpha)
        return False, alpha
    raise InvalidInput(f"alpha must be a number, got {alpha!r}")


_default_engine: StatsEngine | None = None
_default_engine_lock = threading.Lock()


def default_engine() -> StatsEngine:
    """Shared engine for one-shot use (CLI); its memo grows unboundedly."""
    global _default_engine
    if _default_engine is None:
        with _default_engine_lock:
            if _default_engine is None:
                _default_engine = StatsEngine()
    return _default_engine
