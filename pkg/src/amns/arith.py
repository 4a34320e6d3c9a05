"""Runtime AMNS arithmetic: coefficient reduction, multiplication, bounded
addition, conversions in both directions, and the masked (DPA) conversions.

Control flow in the hot operations depends only on the system parameters
(n, and the public zero-structure of M and M'), never on operand values;
the only data-dependent raise is the exact-divisibility net, which cannot
fire for well-formed parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AccumulatorOverflowError, DepthBudgetError, InternalInvariantError
from .system import AmnsSystem, PrecompTables


@dataclass(frozen=True)
class AmnsElement:
    """n signed coefficients plus the element's addition depth.

    Freshly reduced elements have theta = 0 and coefficients below rho;
    each addition deepens theta and may grow coefficients up to
    (theta + 1) * rho.
    """

    coeffs: tuple[int, ...]
    theta: int = 0


def element(coeffs: Sequence[int], sys: AmnsSystem, theta: int = 0) -> AmnsElement:
    coeffs = tuple(coeffs)
    if len(coeffs) != sys.n:
        raise ValueError(f"expected {sys.n} coefficients, got {len(coeffs)}")
    return AmnsElement(coeffs, theta)


def zero(sys: AmnsSystem) -> AmnsElement:
    return AmnsElement((0,) * sys.n)


def _mul_sparse(nonzeros, v, n, lam) -> list[int]:
    # Product by a fixed sparse polynomial, folded mod X^n - lam. The loop
    # structure depends only on the public nonzero positions.
    out = [0] * n
    for i, c in nonzeros:
        wrap = n - i
        for j in range(wrap):
            out[i + j] += c * v[j]
        cl = c * lam
        for j in range(wrap, n):
            out[i + j - n] += cl * v[j]
    return out


def red_coeff(v: Sequence[int], sys: AmnsSystem) -> tuple[int, ...]:
    """Montgomery-style coefficient reduction.

    Q = V*M' mod (E, phi); R = V + Q*M mod E is divisible by phi
    coefficientwise; returns S = R/phi with S(gamma) = V(gamma)/phi mod p.
    """
    n, k, lam = sys.n, sys.k, sys.lam
    mask = sys.phi_mask
    v_low = [c & mask for c in v]
    q = [c & mask for c in _mul_sparse(sys.mprime_nonzeros, v_low, n, lam)]
    r = _mul_sparse(sys.m_nonzeros, q, n, lam)
    out = []
    for i in range(n):
        ri = r[i] + v[i]
        if ri & mask:
            raise InternalInvariantError("reduction residue not divisible by phi")
        out.append(ri >> k)
    return tuple(out)


def amns_mul(a: AmnsElement, b: AmnsElement, sys: AmnsSystem) -> AmnsElement:
    """S with S(gamma) = A(gamma)*B(gamma)/phi mod p; output depth 0."""
    if a.theta > sys.delta or b.theta > sys.delta:
        raise DepthBudgetError(
            f"operand depth {max(a.theta, b.theta)} exceeds delta = {sys.delta}")
    n, lam = sys.n, sys.lam
    ac, bc = a.coeffs, b.coeffs
    prod = [0] * (2 * n - 1)
    for i in range(n):
        ai = ac[i]
        for j in range(n):
            prod[i + j] += ai * bc[j]
    v = prod[:n]
    for i in range(n, 2 * n - 1):
        v[i - n] += lam * prod[i]
    limit = 1 << (2 * sys.k - 1)
    for c in v:
        if not -limit <= c < limit:
            raise AccumulatorOverflowError("product exceeds the 2k-bit accumulator")
    return AmnsElement(red_coeff(v, sys))


def amns_add(a: AmnsElement, b: AmnsElement, sys: AmnsSystem) -> AmnsElement:
    """Coefficientwise sum, no reduction; tracks the addition depth."""
    theta = a.theta + b.theta + 1
    if theta > sys.delta:
        raise DepthBudgetError(
            f"addition depth {theta} exceeds delta = {sys.delta}; "
            "multiply by the Montgomery one to reduce first")
    return AmnsElement(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), theta)


def _digits(b: int, sys: AmnsSystem) -> list[int]:
    # Unsigned radix-rho digits; rho is a power of two so this is mask/shift.
    mask = sys.rho - 1
    shift = sys.rho_exp
    out = []
    for _ in range(sys.n):
        out.append(b & mask)
        b >>= shift
    return out


def _from_digits(b: int, sys: AmnsSystem, tables: PrecompTables) -> AmnsElement:
    digits = _digits(b, sys)
    u = [0] * sys.n
    u[0] = digits[0]  # rho^0 is represented by the constant polynomial 1
    for i in range(1, sys.n):
        di = digits[i]
        rep = tables.P[i - 1]
        for j in range(sys.n):
            u[j] += di * rep[j]
    return AmnsElement(red_coeff(u, sys))


def to_amns_m1(a: int, sys: AmnsSystem, tables: PrecompTables) -> AmnsElement:
    """Convert via precomputed rho-power representatives (table method).

    a*phi^2 mod p is decomposed in radix rho; the digit combination of the
    P_i tables evaluates to a*phi^2, and one reduction lands on the
    Montgomery representative (evaluation a*phi mod p).
    """
    if not 0 <= a < sys.p:
        raise ValueError("value out of range [0, p)")
    b = a * pow(sys.phi, 2, sys.p) % sys.p
    return _from_digits(b, sys, tables)


def to_amns_m2(a: int, sys: AmnsSystem, tables: PrecompTables | None = None) -> AmnsElement:
    """Convert via repeated reduction (storage-free method).

    Starts from the constant a*T with T = phi^n mod p and applies n-1
    reductions; each reduction divides the evaluation by phi, ending at
    a*phi mod p.
    """
    if not 0 <= a < sys.p:
        raise ValueError("value out of range [0, p)")
    t = tables.T if tables is not None else pow(sys.phi, sys.n, sys.p)
    coeffs: tuple[int, ...] = (a * t % sys.p,) + (0,) * (sys.n - 1)
    for _ in range(sys.n - 1):
        coeffs = red_coeff(coeffs, sys)
    return AmnsElement(coeffs)


def from_amns_horner(a: AmnsElement, sys: AmnsSystem) -> int:
    """Residue represented by the element: one reduction, then Horner mod p."""
    reduced = red_coeff(a.coeffs, sys)
    acc = 0
    for c in reversed(reduced):
        acc = (acc * sys.gamma + c) % sys.p
    return acc


def from_amns_powers(a: AmnsElement, sys: AmnsSystem, tables: PrecompTables) -> int:
    """Same residue via precomputed gamma powers and a single final reduction.

    The accumulator stays within about log2(n) + log2(rho) + log2(p) bits,
    so only one modular reduction is needed at the end.
    """
    reduced = red_coeff(a.coeffs, sys)
    acc = 0
    for c, gi in zip(reduced, tables.g):
        acc += c * gi
    return acc % sys.p


def mont_one(sys: AmnsSystem, tables: PrecompTables | None = None) -> AmnsElement:
    """Representative of 1 (evaluates to phi mod p); multiplying by it
    reduces a post-addition element back to depth 0."""
    return to_amns_m2(1, sys, tables)


def dpa_to_amns(a: int, beta: int, sys: AmnsSystem, tables: PrecompTables) -> AmnsElement:
    """Masked conversion: the output represents a*beta instead of a."""
    if beta % sys.p == 0:
        raise ValueError("beta must be a unit mod p")
    if not 0 <= a < sys.p:
        raise ValueError("value out of range [0, p)")
    b = a * beta % sys.p * pow(sys.phi, 2, sys.p) % sys.p
    return _from_digits(b, sys, tables)


def dpa_from_amns(a: AmnsElement, beta: int, sys: AmnsSystem) -> int:
    """Unmasking conversion: returns (represented residue) * beta mod p."""
    if beta % sys.p == 0:
        raise ValueError("beta must be a unit mod p")
    return from_amns_horner(a, sys) * beta % sys.p
