"""Tests for polynomial rings, generators and the so(n) action."""

import random
from fractions import Fraction

import pytest

from weilcoh.polyring import (
    FockRing,
    SkRing,
    c_gen,
    laplacian,
    minor,
    monomials_of_degree,
    q_gen,
    r_gen,
    sk_evaluate,
    son_act,
)


def random_poly(ring, rng, max_deg=3, nterms=4):
    out = ring.zero()
    for _ in range(nterms):
        term = ring.one().scale(rng.randint(-3, 3))
        for _ in range(rng.randint(0, max_deg)):
            term = term * ring.var(rng.randrange(ring.nvars))
        out = out + term
    return out


def test_arith_basic():
    R = FockRing(1, 1)
    p = R.z_var(1, 1) * R.w_var(1)
    assert len(p.terms) == 1 and p.coefficient((1, 1)) == 1

    s = R.z_var(1, 1) + R.w_var(1)
    sq = s * s
    assert sq.coefficient((2, 0)) == 1
    assert sq.coefficient((1, 1)) == 2
    assert sq.coefficient((0, 2)) == 1


def test_arith_r_squared():
    R = FockRing(2, 1)
    p = r_gen(R, 1, 1) * r_gen(R, 1, 1)
    # (z11^2 + z21^2)^2 has 3 terms
    assert len(p.terms) == 3
    assert p.coefficient((2, 2, 0)) == 2


def test_ring_mismatch():
    with pytest.raises(ValueError):
        FockRing(1, 1).one() + FockRing(2, 1).one()


def test_partial():
    R = FockRing(1, 1)
    p = R.z_var(1, 1) * R.z_var(1, 1) * R.w_var(1)
    assert p.partial(R.z(1, 1)) == (R.z_var(1, 1) * R.w_var(1)).scale(2)

    R2 = FockRing(1, 2)
    assert not R2.w_var(2).partial(R2.z(1, 1))
    q1 = q_gen(R2, 1)
    assert q1.partial(R2.z(1, 1)).partial(R2.w(1)) == R2.one()


def test_monomials_of_degree():
    R = FockRing(1, 1)
    assert len(monomials_of_degree(R, 1)) == 2

    R2 = FockRing(2, 1)
    zvars = range(2)
    ms = monomials_of_degree(R2, 2, zvars)
    assert len(ms) == 3
    assert len(set(ms)) == 3

    S2 = SkRing(2)
    assert len(monomials_of_degree(S2, 2)) == 6
    # weighted degree check
    for e in monomials_of_degree(S2, 3):
        assert S2.monomial_degree(e) == 3


def test_monomials_counting_oracle():
    # degree-d monomials in v weight-1 variables number C(d+v-1, d)
    from math import comb

    R = FockRing(3, 2)
    for d in range(5):
        assert len(monomials_of_degree(R, d)) == comb(d + R.nvars - 1, d)


def test_laplacian():
    R = FockRing(1, 1)
    p = R.z_var(1, 1) * R.z_var(1, 1)
    assert laplacian(p, 1, 1) == R.one().scale(2)

    R22 = FockRing(2, 2)
    assert not laplacian(minor(R22, (1, 2), (1, 2)), 1, 2)

    R31 = FockRing(3, 1)
    assert laplacian(r_gen(R31, 1, 1), 1, 1) == R31.one().scale(6)


def test_minors_harmonic_small():
    for n in range(1, 4):
        for k in range(1, 4):
            R = FockRing(n, k)
            import itertools

            for l in range(1, min(n, k) + 1):
                for I in itertools.combinations(range(1, n + 1), l):
                    for J in itertools.combinations(range(1, k + 1), l):
                        f = minor(R, I, J)
                        for i in range(1, k + 1):
                            for j in range(i, k + 1):
                                assert not laplacian(f, i, j), (n, k, I, J)


def test_generators():
    R = FockRing(1, 2)
    q1 = q_gen(R, 1)
    assert q1 == R.z_var(1, 1) * R.w_var(1) + R.z_var(1, 2) * R.w_var(2)

    R22 = FockRing(2, 2)
    m = minor(R22, (1, 2), (1, 2))
    expect = R22.z_var(1, 1) * R22.z_var(2, 2) - R22.z_var(1, 2) * R22.z_var(2, 1)
    assert m == expect

    R11 = FockRing(1, 1)
    c1 = c_gen(R11, 1)
    assert c1 == R11.z_var(1, 1) * R11.z_var(1, 1) * R11.w_var(1)


def test_generator_grading():
    R = FockRing(3, 2)
    for i in range(1, 3):
        for j in range(i, 3):
            g = r_gen(R, i, j)
            assert g.is_homogeneous() and g.degree() == 2
    for a in range(1, 4):
        g = q_gen(R, a)
        assert g.is_homogeneous() and g.degree() == 2
    for j in range(1, 3):
        g = c_gen(R, j)
        assert g.is_homogeneous() and g.degree() == 3
    m = minor(R, (1, 2), (1, 2))
    assert m.is_homogeneous() and m.degree() == 2


def test_sk_evaluate():
    S1 = SkRing(1)
    R21 = FockRing(2, 1)
    p = sk_evaluate(S1.rhat_var(1, 1), R21)
    assert p == r_gen(R21, 1, 1)

    R11 = FockRing(1, 1)
    p = sk_evaluate(S1.what_var(1) * S1.rhat_var(1, 1), R11)
    assert p == c_gen(R11, 1)

    with pytest.raises(ValueError):
        sk_evaluate(S1.what_var(1), FockRing(1, 2))


def test_sk_evaluate_homomorphism():
    rng = random.Random(17)
    S2 = SkRing(2)
    R = FockRing(3, 2)
    for _ in range(5):
        a = random_poly(S2, rng)
        b = random_poly(S2, rng)
        assert sk_evaluate(a + b, R) == sk_evaluate(a, R) + sk_evaluate(b, R)
        assert sk_evaluate(a * b, R) == sk_evaluate(a, R) * sk_evaluate(b, R)


def test_sk_evaluate_preserves_degree():
    S2 = SkRing(2)
    R = FockRing(3, 2)
    p = S2.rhat_var(1, 2) * S2.what_var(1)
    assert p.degree() == 3
    assert sk_evaluate(p, R).degree() == 3


def test_son_act_basics():
    R = FockRing(2, 1)
    assert not son_act(1, 2, r_gen(R, 1, 1))
    assert son_act(1, 2, R.z_var(1, 1)) == R.z_var(2, 1)
    assert son_act(1, 2, R.z_var(2, 1)) == -R.z_var(1, 1)
    with pytest.raises(ValueError):
        son_act(2, 1, R.z_var(1, 1))


def test_son_act_q_span():
    R = FockRing(2, 1)
    got = son_act(1, 2, q_gen(R, 1))
    assert got == q_gen(R, 2)
    assert son_act(1, 2, q_gen(R, 2)) == -q_gen(R, 1)


def test_son_act_derivation():
    rng = random.Random(5)
    R = FockRing(3, 2)
    for _ in range(6):
        p = random_poly(R, rng)
        q = random_poly(R, rng)
        a, b = sorted(rng.sample(range(1, 4), 2))
        lhs = son_act(a, b, p * q)
        rhs = son_act(a, b, p) * q + p * son_act(a, b, q)
        assert lhs == rhs


def test_son_act_kills_all_r():
    R = FockRing(4, 3)
    for a in range(1, 5):
        for b in range(a + 1, 5):
            for i in range(1, 4):
                for j in range(i, 4):
                    assert not son_act(a, b, r_gen(R, i, j))


def test_equivariance_rational_rotation():
    # g = [[3/5,-4/5],[4/5,3/5]] acting on the rows of the z-matrix;
    # f |-> f(g^{-1} Z).  r is fixed (g orthogonal), the 1x1 minors mix
    # by the matrix of g^{-1}, and the top minor is fixed (det g = 1).
    R = FockRing(2, 2)
    g = [[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]
    ginv = [[g[0][0], g[1][0]], [g[0][1], g[1][1]]]  # inverse = transpose
    images = []
    for i in range(1, 3):
        for a in range(1, 3):
            img = R.zero()
            for b in range(1, 3):
                img = img + R.z_var(b, i).scale(ginv[a - 1][b - 1])
            images.append(img)
    images += [R.w_var(1), R.w_var(2)]

    for i in range(1, 3):
        for j in range(i, 3):
            r = r_gen(R, i, j)
            assert r.compose(images) == r

    for j in range(1, 3):
        for a in range(1, 3):
            got = minor(R, (a,), (j,)).compose(images)
            expect = R.zero()
            for b in range(1, 3):
                expect = expect + minor(R, (b,), (j,)).scale(ginv[a - 1][b - 1])
            assert got == expect

    top = minor(R, (1, 2), (1, 2))
    assert top.compose(images) == top


def test_minor_index_validation():
    R = FockRing(2, 2)
    with pytest.raises(ValueError):
        minor(R, (2, 1), (1, 2))
    with pytest.raises(ValueError):
        minor(R, (1,), (1, 2))
    with pytest.raises(ValueError):
        minor(R, (1, 3), (1, 2))
