"""Tests for the polynomial-degree spectral sequence."""

from fractions import Fraction

from weilcoh.fock import invariant_quotient_dims
from weilcoh.linalg import SparseRationalMatrix
from weilcoh.polyring import FockRing, q_gen
from weilcoh.spectral import (
    PageData,
    SpectralComputer,
    e1_dims,
    einf_and_converge,
    page_step,
    regrade,
    unregrade,
)


def test_regrade_round_trip():
    for ell in range(-1, 6):
        for t in range(0, 12):
            assert unregrade(*regrade(ell, t)) == (ell, t)
    # the diagonal cochain classes sit at q = 0, the volume row at q = -n
    assert regrade(3, 3) == (3, 0)
    assert regrade(4, 0) == (8, -4)


def test_e1_concentration_k_less_n():
    # (n,k) = (3,2): the +1 part lives on the ell = k row with binomial
    # dims 1, 3 at degrees 2, 4; the -1 part on the ell = n row with the
    # quotient dims 1, 2, 6, 8, 16 at degrees 0..4
    R = FockRing(3, 2)
    plus = e1_dims(R, "plus", 4)
    assert plus.dims == {regrade(2, 2): 1, regrade(2, 4): 3}
    minus = e1_dims(R, "minus", 4)
    expect = {regrade(3, t): d for t, d in enumerate([1, 2, 6, 8, 16])}
    assert minus.dims == expect


def test_e1_top_row_is_invariant_quotient():
    # k >= n: the top row of E_1 is the invariant part of P_k/(q)
    R = FockRing(2, 2)
    got = e1_dims(R, "full", 4)
    quo = invariant_quotient_dims(R, [q_gen(R, 1), q_gen(R, 2)], 4)
    expect = {regrade(2, t): d for t, d in quo.items() if d}
    assert got.dims == expect
    # and nothing below the top row
    assert all(unregrade(p, q)[0] == 2 for (p, q) in got.dims)


def test_page_step_full_rank_differential_kills_both_cells():
    cur = PageData(2, dims={(0, 0): 1, (2, -1): 1}, window=(3, 6))
    d = SparseRationalMatrix(1, 1)
    d.set(0, 0, Fraction(5))
    nxt = page_step(cur, {(0, 0): d})
    assert nxt.r == 3
    assert nxt.dims == {}


def test_page_step_zero_differentials_copy_page():
    cur = PageData(1, dims={(1, 1): 4, (3, 0): 2}, window=(3, 6))
    nxt = page_step(cur, {})
    assert nxt.dims == cur.dims and nxt.r == 2


def test_page_step_flags_out_of_window_sources():
    # the incoming arrow for (p, q) starts at (p - r, q + r - 1); when that
    # cell is inside the complex but past the degree window and no matrix
    # is supplied, the target must be reported unknown, not guessed
    cur = PageData(2, dims={(0, 3): 1}, window=(3, 4))
    src = (-2, 4)  # ell = 2, polydeg = 6 > 4
    assert 0 <= unregrade(*src)[0] <= 3 and unregrade(*src)[1] > 4
    nxt = page_step(cur, {})
    assert (0, 3) in nxt.unknown and (0, 3) not in nxt.dims


def test_pages_monotone_and_stable():
    comp = SpectralComputer(FockRing(3, 1), "full", 3)
    pages = {r: comp.page(r).dims for r in (1, 2, 3, 5, 7)}
    cells = set().union(*pages.values())
    rs = sorted(pages)
    for a, b in zip(rs, rs[1:]):
        for c in cells:
            assert pages[b].get(c, 0) <= pages[a].get(c, 0)
    # this example degenerates immediately
    assert pages[1] == pages[7]


def test_converge_n3_k1():
    R = FockRing(3, 1)
    rep = einf_and_converge(R, "full", 4)
    assert rep.ok and not rep.inconclusive
    # E_infinity = E_1 here
    assert rep.einf.dims == e1_dims(R, "full", 4).dims
    # and both match the graded direct cohomology
    assert rep.einf.dims == rep.gr_dims


def test_converge_n2_k2_small_window():
    rep = einf_and_converge(FockRing(2, 2), "full", 2)
    assert rep.ok and not rep.inconclusive
    assert rep.einf.dims == rep.gr_dims
    assert rep.gr_dims == {regrade(2, t): d for t, d in
                           enumerate([1, 2, 7])}
