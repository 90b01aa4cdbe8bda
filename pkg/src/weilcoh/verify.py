"""Bundled verification suites behind the `verify` subcommand.

Each suite runs a batch of exact checks at the requested (n, k) and
returns a list of verdicts {"name", "pass", "detail"}.  Randomized
checks draw integer coefficients uniformly from {-3..3} with the stated
seed, so any failure is replayable from the command line.
"""

from __future__ import annotations

import itertools
import random

from .exterior import bits_of, tuple_sign, wedge_bits
from .fock import (
    Cochain,
    Phi_J,
    diff,
    invariant_family,
    invariant_quotient_dims,
    involution,
    named_cochain,
    outer_product,
    phi1,
    pm_basis_vectors,
    son_act_cochain,
    star_Phi_J,
)
from .fock import invariant_dim
from .koszul import (
    KoszulSpec,
    ci_hilbert,
    ideal_quotient_dims,
    regular_sequence_check,
)
from .linalg import Eliminator
from .polyring import FockRing, SkRing, c_gen, laplacian, minor, q_gen, \
    sk_evaluate
from .spectral import e1_dims, einf_and_converge, regrade

__all__ = ["SUITES", "run_suite"]


def _random_cochain(ring, rng, ell, nterms=3, max_deg=3):
    c = Cochain(ring, ell)
    for _ in range(nterms):
        I = tuple(sorted(rng.sample(range(1, ring.n + 1), ell)))
        p = ring.one().scale(rng.randint(-3, 3))
        for _ in range(rng.randint(0, max_deg)):
            p = p * ring.var(rng.randrange(ring.nvars))
        c = c + Cochain(ring, ell, {bits_of(I): p} if p else {})
    return c


def _random_invariant_cochain(ring, rng, ell, max_deg=3):
    c = Cochain(ring, ell)
    fam = invariant_family(ring, "full", ell, range(max_deg + 1))
    for d in range(max_deg + 1):
        for v in fam[d]:
            x = rng.randint(-3, 3)
            if x:
                c = c + v.scale(x)
    return c


def _verdict(results, name, ok, detail=""):
    results.append({"name": name, "pass": bool(ok), "detail": detail})


def suite_signs(n, k, seed, trials=10):
    """Sign discipline: wedge antisymmetry, the outer-product Leibniz
    rule, and commutation of d with the involutions."""
    rng = random.Random(seed)
    results = []

    bad = 0
    for _ in range(trials):
        a = rng.randrange(1 << n)
        b = rng.randrange(1 << n)
        sa, ab = wedge_bits(a, b)
        sb, ba = wedge_bits(b, a)
        if sa == 0:
            ok = (sb == 0) if a != 0 and b != 0 and (a & b) else True
        else:
            pa = bin(a).count("1")
            pb = bin(b).count("1")
            ok = ab == ba and sa == sb * (-1) ** (pa * pb)
        bad += not ok
    _verdict(results, "wedge antisymmetry", bad == 0, "%d violations" % bad)

    bad = 0
    for _ in range(trials):
        ka = rng.randint(1, max(1, k - 1)) if k > 1 else 1
        kb = max(1, k - ka)
        a = _random_cochain(FockRing(n, ka), rng, rng.randint(0, n - 1))
        b = _random_cochain(FockRing(n, kb), rng, rng.randint(0, n - 1))
        lhs = diff(outer_product(a, b))
        rhs = outer_product(diff(a), b) + \
            outer_product(a, diff(b)).scale((-1) ** a.ell)
        bad += lhs != rhs
    _verdict(results, "outer-product Leibniz rule", bad == 0,
             "%d violations" % bad)

    R = FockRing(n, k)
    bad = 0
    for _ in range(trials):
        c = _random_cochain(R, rng, rng.randint(0, n))
        for which in ("iota", "iota_prime"):
            if involution(diff(c), which) != diff(involution(c, which)):
                bad += 1
    _verdict(results, "d commutes with the involutions", bad == 0,
             "%d violations" % bad)
    return results


def suite_closedness(n, k, seed, trials=10):
    """d phi_k = 0; d^2 = 0 and the anticommutator identity on the
    invariant complex; d2^2 = dm2^2 = 0 everywhere."""
    rng = random.Random(seed)
    results = []
    R = FockRing(n, k)

    if k <= n:
        _verdict(results, "phi_k is closed", not diff(named_cochain(
            "phik", R)), "(n,k)=(%d,%d)" % (n, k))

    bad2 = badm2 = 0
    for _ in range(trials):
        c = _random_cochain(R, rng, rng.randint(0, n - 1))
        bad2 += bool(diff(diff(c, "d2"), "d2"))
        badm2 += bool(diff(diff(c, "dm2"), "dm2"))
    _verdict(results, "degree +2 piece squares to zero", bad2 == 0,
             "%d violations" % bad2)
    _verdict(results, "degree -2 piece squares to zero", badm2 == 0,
             "%d violations" % badm2)

    badf = bada = 0
    for _ in range(trials):
        c = _random_invariant_cochain(R, rng, rng.randint(0, n - 1))
        badf += bool(diff(diff(c)))
        anti = diff(diff(c, "d2"), "dm2") + diff(diff(c, "dm2"), "d2")
        bada += bool(anti)
    _verdict(results, "d squares to zero on invariants", badf == 0,
             "%d violations" % badf)
    _verdict(results, "pieces anticommute on invariants", bada == 0,
             "%d violations" % bada)
    return results


def suite_invariance(n, k, seed, trials=10):
    """The so(n) generators kill the named cochains and commute with d."""
    rng = random.Random(seed)
    results = []
    R = FockRing(n, k)
    gens = [(a, a + 1) for a in range(1, n)]

    bad = 0
    for a, b in gens:
        if son_act_cochain(a, b, phi1(R)):
            bad += 1
        if k <= n and son_act_cochain(a, b, named_cochain("phik", R)):
            bad += 1
    _verdict(results, "named cochains are so(n)-invariant", bad == 0,
             "%d violations" % bad)

    bad = 0
    for _ in range(trials):
        c = _random_cochain(R, rng, rng.randint(0, n - 1))
        for a, b in gens:
            if diff(son_act_cochain(a, b, c)) != son_act_cochain(
                    a, b, diff(c)):
                bad += 1
    _verdict(results, "d commutes with so(n)", bad == 0,
             "%d violations" % bad)
    return results


def suite_bases(n, k, seed, max_degree=4):
    """The Phi / *Phi families are independent and jointly span the
    invariants in every (ell, degree) cell of the window (k < n only);
    the minors are harmonic."""
    results = []
    R = FockRing(n, k)

    bad = 0
    for lsize in range(1, min(n, k) + 1):
        for I in itertools.combinations(range(1, n + 1), lsize):
            for J in itertools.combinations(range(1, k + 1), lsize):
                f = minor(R, I, J)
                for i in range(1, k + 1):
                    for j in range(1, k + 1):
                        if laplacian(f, i, j):
                            bad += 1
    _verdict(results, "minors are harmonic", bad == 0, "%d violations" % bad)

    if k < n:
        bad = []
        for ell in range(n + 1):
            for d in range(max_degree + 1):
                plus = pm_basis_vectors(R, "plus", ell, d)
                minus = pm_basis_vectors(R, "minus", ell, d)
                ep, em, eb = Eliminator(), Eliminator(), Eliminator()
                for v in plus:
                    ep.add_row(v.to_row())
                    eb.add_row(v.to_row())
                for v in minus:
                    em.add_row(v.to_row())
                    eb.add_row(v.to_row())
                indep = (ep.rank == len(plus) and em.rank == len(minus)
                         and eb.rank == len(plus) + len(minus))
                if not indep or eb.rank != invariant_dim(R, ell, d):
                    bad.append((ell, d))
        _verdict(results, "determinantal families are a basis", not bad,
                 "failing cells: %s" % bad if bad else
                 "all cells to degree %d" % max_degree)
    return results


def suite_koszul(n, k, seed, max_degree=4):
    """Regularity of the q-sequence (k >= n only: for k < n the q's have
    evident syzygies) and of the abstract c-sequence, with
    Hilbert-series agreement for the quotients."""
    results = []
    if k >= n:
        R = FockRing(n, k)
        spec = KoszulSpec(R, [q_gen(R, a) for a in range(1, n + 1)])
        cert = regular_sequence_check(spec, max_degree)
        _verdict(results, "q-sequence is regular through the window",
                 cert.regular, "failures at %s" % cert.failure_degree
                 if not cert.regular else "degree %d" % max_degree)
        quo = ideal_quotient_dims(spec, max_degree)
        try:
            expect = ci_hilbert((1,) * R.nvars, (2,) * n, max_degree)
            agree = [quo[t] for t in range(max_degree + 1)] == expect
            detail = ""
        except ValueError as exc:
            agree, detail = False, str(exc)
        _verdict(results, "quotient dims match the Hilbert series", agree,
                 detail)

    kk = min(k, 2)
    S = SkRing(kk)
    cs = []
    for j in range(1, kk + 1):
        f = S.zero()
        for i in range(1, kk + 1):
            f = f + S.rhat_var(i, j) * S.what_var(i)
        cs.append(f)
    cert = regular_sequence_check(KoszulSpec(S, cs), max_degree + 2)
    _verdict(results, "c-sequence is regular through the window",
             cert.regular, "k=%d" % kk)
    return results


def suite_spectral(n, k, seed, max_degree=None):
    """E_infinity agrees with the graded direct cohomology on a small
    window; in the k < n case E_1 already equals E_infinity.

    The page formulas look 2*max_degree + 2n + 2 degrees up the complex,
    so the default window shrinks as n grows to stay inside the default
    resource cap.
    """
    results = []
    if max_degree is None:
        max_degree = 2 if n <= 2 else 1
    R = FockRing(n, k)
    # for k < n the complex splits, and the eigenparts are much smaller
    parts = ("plus", "minus") if k < n else ("full",)
    for part in parts:
        rep = einf_and_converge(R, part, max_degree)
        _verdict(results,
                 "E_infinity matches graded cohomology (%s)" % part,
                 rep.ok and not rep.inconclusive,
                 "mismatches %s, inconclusive %s" % (rep.mismatches,
                                                     rep.inconclusive))
        if k < n:
            e1 = e1_dims(R, part, max_degree)
            _verdict(results, "degeneration at E_1 (%s)" % part,
                     e1.dims == rep.einf.dims,
                     "E_1 %s vs E_inf %s" % (sorted(e1.dims.items()),
                                             sorted(rep.einf.dims.items())))
    return results


SUITES = {
    "signs": suite_signs,
    "closedness": suite_closedness,
    "invariance": suite_invariance,
    "bases": suite_bases,
    "koszul": suite_koszul,
    "spectral": suite_spectral,
}


def run_suite(name, n, k, seed=0):
    """Run one named suite (or `all`) and return its verdicts."""
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, n, k, seed))
        return out
    if name not in SUITES:
        raise ValueError("unknown suite %r" % name)
    return SUITES[name](n, k, seed)
