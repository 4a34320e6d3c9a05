"""Polynomial arithmetic modulo E(X) = X^n - lambda, over Z, Z/2^k and F2.

Polynomials are coefficient lists, index i holding the coefficient of X^i.
F2[X] elements are plain ints used as coefficient bitmasks.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import AmnsError, InternalInvariantError


class ReductionPoly(NamedTuple):
    """The degree-reduction polynomial E(X) = X^n - lam."""

    n: int
    lam: int


def eval_poly_mod(coeffs: Sequence[int], x: int, p: int) -> int:
    """Horner evaluation of the polynomial at x, reduced mod p."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def poly_degree(coeffs: Sequence[int]) -> int:
    """Logical degree; -1 for the zero polynomial."""
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i
    return -1


def ext_reduce(v: Sequence[int], e: ReductionPoly) -> list[int]:
    """Fold X^n -> lam once: valid for inputs of degree <= 2n-2."""
    n, lam = e
    if len(v) > 2 * n - 1:
        raise ValueError(f"degree {len(v) - 1} exceeds 2n-2 = {2 * n - 2}")
    out = list(v[:n]) + [0] * (n - len(v))
    for i in range(n, len(v)):
        out[i - n] += lam * v[i]
    return out


def poly_mul_mod_e(a: Sequence[int], b: Sequence[int], e: ReductionPoly) -> list[int]:
    """Schoolbook product reduced mod E; exact arbitrary-precision arithmetic."""
    n = e.n
    if poly_degree(a) >= n or poly_degree(b) >= n:
        raise ValueError("operands must have degree < n")
    prod = [0] * (2 * n - 1)
    for i in range(min(len(a), n)):
        ai = a[i]
        for j in range(min(len(b), n)):
            prod[i + j] += ai * b[j]
    return ext_reduce(prod, e)


# ---------------------------------------------------------------------------
# Resultant via Sylvester matrix and fraction-free (Bareiss) elimination.
# ---------------------------------------------------------------------------

def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    size = len(m)
    sign = 1
    prev = 1
    for col in range(size - 1):
        if m[col][col] == 0:
            for r in range(col + 1, size):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[col][col]
        for r in range(col + 1, size):
            for c in range(col + 1, size):
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def resultant_with_e(m: Sequence[int], e: ReductionPoly) -> int:
    """Res(E, M) for E = X^n - lam: determinant of the Sylvester matrix."""
    dm = poly_degree(m)
    if dm < 0:
        raise ValueError("resultant with the zero polynomial")
    n, lam = e
    ecoeffs = [-lam] + [0] * (n - 1) + [1]  # ascending
    if dm == 0:
        return m[0] ** n
    size = n + dm
    rows: list[list[int]] = []
    for i in range(dm):  # shifted copies of E
        row = [0] * size
        for j, c in enumerate(reversed(ecoeffs)):
            row[i + j] = c
        rows.append(row)
    mdesc = [m[d] for d in range(dm, -1, -1)]
    for i in range(n):  # shifted copies of M
        row = [0] * size
        for j, c in enumerate(mdesc):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


# ---------------------------------------------------------------------------
# F2[X] on bitmasks.
# ---------------------------------------------------------------------------

def f2_from_poly(coeffs: Sequence[int]) -> int:
    bits = 0
    for i, c in enumerate(coeffs):
        if c & 1:
            bits |= 1 << i
    return bits


def f2_deg(a: int) -> int:
    return a.bit_length() - 1


def f2_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("F2[X] division by zero")
    q = 0
    db = f2_deg(b)
    while a and f2_deg(a) >= db:
        shift = f2_deg(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def f2_gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("f2_gcd(0, 0) is undefined")
    while b:
        a, b = b, f2_divmod(a, b)[1]
    return a


def f2_ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) over F2[X] with u*a + v*b = g."""
    r0, r1 = a, b
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1:
        q, r = f2_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 ^ f2_mul(q, u1)
        v0, v1 = v1, v0 ^ f2_mul(q, v1)
    return r0, u0, v0


def invertible_mod_e_phi(m: Sequence[int], e: ReductionPoly) -> bool:
    """Whether M is invertible mod (E, 2^k), k >= 1.

    Inversion mod a power of two only depends on the mod-2 image: for even
    lam it reduces to the constant term being odd; for odd lam to the mod-2
    image being coprime to X^n + 1.
    """
    if e.lam % 2 == 0:
        return bool(m[0] & 1) if m else False
    mbar = f2_from_poly(m)
    if mbar == 0:
        return False
    return f2_gcd(mbar, (1 << e.n) | 1) == 1


def hensel_inverse_neg(m: Sequence[int], e: ReductionPoly, k: int) -> list[int]:
    """M' = -M^{-1} mod (E, 2^k), coefficients canonical in [0, 2^k).

    Inverts the mod-2 image with an F2[X] extended gcd, then Newton-lifts
    W <- W * (2 - M*W) doubling the 2-adic precision until it reaches k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = e.n
    if not invertible_mod_e_phi(m, e):
        raise AmnsError("M is not invertible mod (E, 2^k)")
    ebar = (1 << n) | (e.lam & 1)
    g, u, _ = f2_ext_gcd(f2_from_poly(m), ebar)
    if g != 1:  # unreachable once invertible_mod_e_phi holds
        raise InternalInvariantError("mod-2 inverse does not exist")
    w_bits = f2_divmod(u, ebar)[1]
    w = [(w_bits >> i) & 1 for i in range(n)]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        mod = 1 << prec
        mw = poly_mul_mod_e(m, w, e)
        corr = [(2 - c if i == 0 else -c) % mod for i, c in enumerate(mw)]
        w = [c % mod for c in poly_mul_mod_e(w, corr, e)]
    phi = 1 << k
    return [(-c) % phi for c in w]
