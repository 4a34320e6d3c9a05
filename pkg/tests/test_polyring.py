import random

import pytest

from amns.errors import AmnsError
from amns.polyring import (
    ReductionPoly,
    bareiss_det,
    eval_poly_mod,
    ext_reduce,
    f2_divmod,
    f2_ext_gcd,
    f2_from_poly,
    f2_gcd,
    f2_mul,
    hensel_inverse_neg,
    invertible_mod_e_phi,
    poly_mul_mod_e,
    resultant_with_e,
)

M521 = (1 << 521) - 1


def _schoolbook_mod_e(a, b, n, lam):
    """Independent reference: plain convolution then single fold."""
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    return [prod[i] + (lam * prod[i + n] if i + n < len(prod) else 0) for i in range(n)]


def test_ext_reduce_monomial_xn():
    for n, lam in ((3, 2), (4, -1), (10, 2)):
        v = [0] * n + [1]
        assert ext_reduce(v, ReductionPoly(n, lam)) == [lam] + [0] * (n - 1)


def test_ext_reduce_square_plus_x_plus_one():
    # X^2 + X + 1 mod (X^2 + 1) = X: lambda = -1 folds X^2 to -1.
    assert ext_reduce([1, 1, 1], ReductionPoly(2, -1)) == [0, 1]


def test_ext_reduce_x10_matches_gamma_power():
    e = ReductionPoly(10, 2)
    reduced = ext_reduce([0] * 10 + [1], e)
    assert reduced == [2] + [0] * 9
    gamma = pow(2, 469, M521)
    assert pow(gamma, 10, M521) == 2
    assert eval_poly_mod(reduced, gamma, M521) == 2


def test_ext_reduce_preserves_evaluation():
    rng = random.Random(1)
    cases = [(17, 3, 2, 8), (17, 2, -1, 4), (97, 3, 28, 5)]
    for p, n, lam, gamma in cases:
        assert pow(gamma, n, p) == lam % p
        e = ReductionPoly(n, lam)
        for _ in range(50):
            v = [rng.randrange(-50, 51) for _ in range(2 * n - 1)]
            assert eval_poly_mod(ext_reduce(v, e), gamma, p) == eval_poly_mod(v, gamma, p)


def test_ext_reduce_degree_limit():
    with pytest.raises(ValueError):
        ext_reduce([1] * 6, ReductionPoly(2, 1))


def test_poly_mul_identity():
    e = ReductionPoly(4, -1)
    a = [3, -2, 7, 1]
    assert poly_mul_mod_e(a, [1, 0, 0, 0], e) == a


def test_poly_mul_sparse_appendix_shape():
    # (2^52 X - 1)(2^52 X + 1) mod (X^10 - 2) = 2^104 X^2 - 1: no wraparound.
    e = ReductionPoly(10, 2)
    a = [-1, 1 << 52] + [0] * 8
    b = [1, 1 << 52] + [0] * 8
    assert poly_mul_mod_e(a, b, e) == [-1, 0, 1 << 104] + [0] * 7


def test_poly_mul_matches_schoolbook():
    rng = random.Random(7)
    e = ReductionPoly(3, 2)
    for _ in range(200):
        a = [rng.randrange(-10, 11) for _ in range(3)]
        b = [rng.randrange(-10, 11) for _ in range(3)]
        assert poly_mul_mod_e(a, b, e) == _schoolbook_mod_e(a, b, 3, 2)


def test_poly_mul_degree_error():
    with pytest.raises(ValueError):
        poly_mul_mod_e([1, 2, 3], [1], ReductionPoly(2, 1))


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def test_resultant_known_values():
    # Res(X^6 + 1, X^4 + X^2 + 1) = 16: the classic non-invertible example.
    assert resultant_with_e([1, 0, 1, 0, 1], ReductionPoly(6, -1)) == 16
    assert resultant_with_e([1], ReductionPoly(5, 3)) == 1
    assert resultant_with_e([-2, 1], ReductionPoly(2, 2)) == 2


def test_resultant_degree_one_sylvester_crosscheck():
    # Sylvester matrix of E = X^2 - 2 (one shifted row) and M = X - 2 (two).
    syl = [[1, 0, -2], [1, -2, 0], [0, 1, -2]]
    assert _det3(syl) == 2
    assert resultant_with_e([-2, 1], ReductionPoly(2, 2)) == _det3(syl)


def test_resultant_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(2, 5)
        lam = rng.choice([v for v in range(-3, 4) if v])
        m = [rng.randrange(-4, 5) for _ in range(n)]
        if not any(m):
            continue
        e_poly = sympy.Poly(x**n - lam, x)
        m_poly = sympy.Poly(sum(c * x**i for i, c in enumerate(m)), x)
        want = int(sympy.resultant(e_poly, m_poly))
        assert resultant_with_e(m, ReductionPoly(n, lam)) == want


def test_resultant_zero_poly_rejected():
    with pytest.raises(ValueError):
        resultant_with_e([0, 0], ReductionPoly(2, 1))


def test_bareiss_det_matches_cofactor():
    rng = random.Random(11)
    for _ in range(50):
        m = [[rng.randrange(-9, 10) for _ in range(3)] for _ in range(3)]
        assert bareiss_det(m) == _det3(m)
    assert bareiss_det([[2, 0], [0, 0]]) == 0


def test_f2_gcd_examples():
    # X^3 + 1 = (X + 1)(X^2 + X + 1) over F2.
    assert f2_gcd(0b111, 0b1001) == 0b111
    assert f2_gcd(0b10, 0b1001) == 1  # X is a unit mod X^3 + 1
    assert f2_gcd(0b1101, 0b1101) == 0b1101
    with pytest.raises(ValueError):
        f2_gcd(0, 0)


def _f2_divisors(a):
    return [d for d in range(1, 1 << (a.bit_length())) if f2_divmod(a, d)[1] == 0]


def test_f2_gcd_is_greatest_common_divisor():
    rng = random.Random(5)
    for _ in range(40):
        a = rng.randrange(1, 1 << 8)
        b = rng.randrange(1, 1 << 8)
        g = f2_gcd(a, b)
        assert f2_divmod(a, g)[1] == 0 and f2_divmod(b, g)[1] == 0
        for d in _f2_divisors(a):
            if f2_divmod(b, d)[1] == 0:
                assert f2_divmod(g, d)[1] == 0


def test_f2_ext_gcd_identity():
    rng = random.Random(9)
    for _ in range(60):
        a = rng.randrange(1, 1 << 10)
        b = rng.randrange(1, 1 << 10)
        g, u, v = f2_ext_gcd(a, b)
        assert f2_mul(u, a) ^ f2_mul(v, b) == g == f2_gcd(a, b)


def test_invertibility_parity_cases():
    assert not invertible_mod_e_phi([2, 1, 1], ReductionPoly(3, 2))  # even constant
    assert not invertible_mod_e_phi([1, 1, 1], ReductionPoly(3, 1))  # gcd = X^2+X+1
    assert invertible_mod_e_phi([-1, 1 << 52] + [0] * 8, ReductionPoly(10, 2))


def test_invertibility_iff_resultant_odd_small():
    e = ReductionPoly(3, -1)
    for m0 in range(-2, 3):
        for m1 in range(-2, 3):
            for m2 in range(-2, 3):
                m = [m0, m1, m2]
                if not any(m):
                    continue
                assert invertible_mod_e_phi(m, e) == (resultant_with_e(m, e) % 2 == 1)


def test_hensel_inverse_trivial_minus_one():
    for e in (ReductionPoly(3, 2), ReductionPoly(4, -1)):
        for k in (8, 64):
            assert hensel_inverse_neg([-1] + [0] * (e.n - 1), e, k) == [1] + [0] * (e.n - 1)


def test_hensel_inverse_property_random():
    rng = random.Random(21)
    found = 0
    while found < 40:
        n = rng.randrange(2, 6)
        lam = rng.choice([v for v in range(-5, 6) if v])
        m = [rng.randrange(-50, 51) for _ in range(n)]
        e = ReductionPoly(n, lam)
        if not any(m) or not invertible_mod_e_phi(m, e):
            continue
        found += 1
        for k in (16, 64):
            phi = 1 << k
            mp = hensel_inverse_neg(m, e, k)
            assert all(0 <= c < phi for c in mp)
            prod = [c % phi for c in poly_mul_mod_e(m, mp, e)]
            assert prod == [phi - 1] + [0] * (n - 1)


def test_hensel_inverse_rejects_non_invertible():
    with pytest.raises(AmnsError):
        hensel_inverse_neg([2, 1, 1], ReductionPoly(3, 2), 16)
