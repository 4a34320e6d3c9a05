"""End-to-end parameter generation: lambda enumeration, gamma, M, M', bounds.

A generation run for one (p, n, lambda) is: find gamma, reduce the
parity-appropriate lattice basis, walk the M candidates shortest-first,
and for each candidate fix rho as the smallest power of two satisfying
both the reduction bound (rho >= 2|lambda| n sigma) and the digit bound
(rho^n > p), then accept the candidate when phi = 2^k covers
2 (delta+1)^2 |lambda| n rho and the 2k-bit accumulator guard holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .errors import GammaUnavailableError, InfeasibleBoundsError
from .lattice import build_basis_even, build_basis_odd, enumerate_m_candidates, lll_reduce
from .modmath import (
    PrimeField,
    int_nth_root_ceil,
    nth_root_any,
    nth_root_gcd1,
    nth_root_unity,
)
from .polyring import ReductionPoly, hensel_inverse_neg
from .system import AmnsSystem, PrecompTables


@dataclass(frozen=True)
class EnumConfig:
    """Word size k, extra-limb allowance c; bounds the lambda search."""

    k: int = 64
    c: int = 2


def _log2(p: int) -> float:
    # float(p) overflows beyond ~2^1023; rescale through the top 53 bits.
    shift = max(p.bit_length() - 53, 0)
    return math.log2(p >> shift) + shift


def omega(cfg: EnumConfig, p: int) -> float:
    """Bit-size bound on |lambda| for word size k and limb allowance c."""
    lg = _log2(p)
    return cfg.k + math.log2(cfg.k) - math.log2(lg) - (cfg.k * lg) / (lg + cfg.k * cfg.c + cfg.k)


def two_term_lambdas(bound: int) -> set[int]:
    """All +-2^i +- 2^j with distinct i, j below the bound."""
    vals: set[int] = set()
    for i in range(bound):
        for j in range(i + 1, bound):
            hi, lo = 1 << j, 1 << i
            vals.update((hi + lo, hi - lo, -(hi + lo), -(hi - lo)))
    return vals


def enumerate_lambda(cfg: EnumConfig, p: int) -> list[int]:
    """Deduplicated lambda candidates in increasing |lambda| order.

    The two-term shapes +-2^i +- 2^j are the core set; +-1 and the bare
    powers +-2^i are included as an extension (see lambda_shape).
    """
    w = int(omega(cfg, p))
    if w < 1:
        raise ValueError("omega < 1: no admissible lambda shapes")
    vals = two_term_lambdas(w)
    for i in range(w):
        vals.update((1 << i, -(1 << i)))
    vals.update((1, -1))
    vals.discard(0)
    ordered = sorted(v for v in vals if abs(v) < p)
    ordered.sort(key=lambda v: (abs(v), v < 0))
    return ordered


def lambda_shape(lam: int, cfg: EnumConfig, p: int) -> str:
    """"two-term" when lam = +-2^i +- 2^j fits below omega, else "extended-shape"."""
    w = int(omega(cfg, p))
    return "two-term" if lam in two_term_lambdas(w) else "extended-shape"


@dataclass(frozen=True)
class GeneratedAmns:
    system: AmnsSystem
    tables: PrecompTables


def _resolve_gamma(p: int, n: int, lam: int, seed: int, gamma: int | None) -> int:
    field = PrimeField(p)
    if gamma is not None:
        if not 0 < gamma < p or pow(gamma, n, p) != lam % p:
            raise ValueError("supplied gamma is not an nth root of lambda mod p")
        return gamma
    if math.gcd(n, p - 1) == 1:
        return nth_root_gcd1(n, lam, field)
    if lam % p == 1:
        return nth_root_unity(n, field, seed)
    root = nth_root_any(n, lam, field, seed)
    if root is None:
        raise GammaUnavailableError(
            f"lambda = {lam} has no degree-{n} root mod p")
    return root


def _rho_exponent(p: int, n: int, lam: int, sigma: int) -> int:
    base = max(2 * abs(lam) * n * sigma, int_nth_root_ceil(p, n) // 2 + 1)
    exp = max((base - 1).bit_length(), 1)
    while (1 << (exp * n)) <= p:
        exp += 1
    return exp


def generate(
    p: int,
    n: int,
    lam: int,
    k: int = 64,
    delta: int = 0,
    seed: int = 0,
    max_systems: int | None = None,
    gamma: int | None = None,
) -> list[GeneratedAmns]:
    """Every feasible parameter set for (p, n, lambda), shortest-M first.

    Raises GammaUnavailableError when lambda has no nth root, and
    InfeasibleBoundsError (naming the failed inequality) when no candidate
    M fits the word size. Deterministic for fixed (p, n, lam, k, delta, seed).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if lam == 0 or abs(lam) >= p:
        raise ValueError("lambda must be non-zero with |lambda| < p")
    if k < 2:
        raise ValueError("word size k must be >= 2")
    if delta < 0:
        raise ValueError("delta must be >= 0")
    g = _resolve_gamma(p, n, lam, seed, gamma)
    e = ReductionPoly(n, lam)
    basis = build_basis_even(p, g, n) if lam % 2 == 0 else build_basis_odd(p, g, n)
    reduced = lll_reduce(basis)
    candidates = enumerate_m_candidates(reduced, e)

    phi = 1 << k
    out: list[GeneratedAmns] = []
    first_failure: str | None = None
    for cand in candidates:
        rho_exp = _rho_exponent(p, n, lam, cand.norm_inf)
        rho = 1 << rho_exp
        need_phi = 2 * (delta + 1) ** 2 * abs(lam) * n * rho
        if phi < need_phi:
            if first_failure is None:
                first_failure = (f"phi >= 2(delta+1)^2|lambda|n*rho: "
                                 f"2^{k} < {need_phi:#x}")
            continue
        guard = n * abs(lam) * (delta + 1) ** 2 * rho * rho
        if guard >= 1 << (2 * k - 1):
            if first_failure is None:
                first_failure = (f"n|lambda|(delta+1)^2*rho^2 < 2^(2k-1): "
                                 f"{guard:#x} >= 2^{2 * k - 1}")
            continue
        mprime = hensel_inverse_neg(cand.poly, e, k)
        sys = AmnsSystem.create(p, n, g, lam, k, rho_exp, delta,
                                cand.poly, tuple(mprime))
        out.append(GeneratedAmns(sys, precompute_tables(sys)))
        if max_systems is not None and len(out) >= max_systems:
            break
    if not out:
        raise InfeasibleBoundsError(first_failure or "no M candidate available")
    return out


def precompute_tables(sys: AmnsSystem) -> PrecompTables:
    """Conversion tables for the system.

    R = convert(rho) evaluates to rho*phi; one reduction turns it into a
    plain representative of rho, and repeated multiplication by R walks up
    the powers (the phi factors cancel one per product).
    """
    r = arith.to_amns_m2(sys.rho % sys.p, sys)
    reps: list[tuple[int, ...]] = []
    if sys.n >= 2:
        current = arith.AmnsElement(arith.red_coeff(r.coeffs, sys))
        reps.append(current.coeffs)
        for _ in range(2, sys.n):
            current = arith.amns_mul(current, r, sys)
            reps.append(current.coeffs)
    g = tuple(pow(sys.gamma, i, sys.p) for i in range(sys.n))
    return PrecompTables(P=tuple(reps), T=pow(sys.phi, sys.n, sys.p), g=g)
