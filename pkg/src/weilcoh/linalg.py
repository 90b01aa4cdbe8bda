"""Sparse exact linear algebra over the rationals.

Everything downstream (graded cohomology, Koszul homology, invariant
dimensions) reduces to ranks and kernels of sparse matrices whose entries
are small integers but whose sizes can reach the tens of thousands.  The
workhorse is an insertion-based fraction-free elimination: rows are kept as
integer dictionaries keyed by an arbitrary sortable column label, each new
row is reduced against the stored pivot rows by integer cross-multiplication
(with a gcd strip after every combination), and a row that survives becomes
a new pivot row.  No floating point, no modular shortcuts.

Column labels may be any mutually comparable hashable values -- integers for
plain matrices, or structured keys such as (form-index, monomial) tuples
when a matrix is assembled directly over an ambient basis.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

__all__ = [
    "ResourceCapError",
    "Eliminator",
    "SparseRationalMatrix",
    "rank",
    "kernel_basis",
    "rank_of_rows",
    "windowed_span_dim",
    "span_intersect_window",
    "DEFAULT_MAX_ENTRIES",
]

DEFAULT_MAX_ENTRIES = 2_000_000


class ResourceCapError(Exception):
    """Raised when an elimination exceeds the configured entry cap."""

    def __init__(self, entries, cap):
        self.entries = entries
        self.cap = cap
        super().__init__(
            "elimination exceeded resource cap: %d stored entries > cap %d"
            % (entries, cap)
        )


def resolve_max_entries(max_entries=None):
    """The effective entry cap: explicit argument, else WEILCOH_MAX_ENTRIES,
    else the built-in default."""
    if max_entries is not None:
        return max_entries
    env = os.environ.get("WEILCOH_MAX_ENTRIES")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_ENTRIES


def _integerize(row):
    """Clear denominators and strip the content of a {col: Fraction|int} row.

    Returns a {col: int} dictionary with gcd 1 (empty for the zero row).
    """
    items = [(c, v) for c, v in row.items() if v]
    if not items:
        return {}
    lcm = 1
    for _, v in items:
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
    out = {}
    for c, v in items:
        out[c] = int(v * lcm)
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        for c in out:
            out[c] //= g
    return out


class Eliminator:
    """Incremental fraction-free row reduction.

    Stored state is a map pivot-column -> integer row whose smallest nonzero
    column is that pivot.  Rows are inserted one at a time; the rank is the
    number of stored pivot rows.  Determinism: within a row the pivot is
    always its smallest column label, and combination order follows the
    column order, so a fixed insertion order yields a fixed reduction.
    """

    def __init__(self, max_entries=None):
        self.pivots = {}  # pivot col -> {col: int}
        self._entries = 0
        self._cap = resolve_max_entries(max_entries)

    @property
    def rank(self):
        return len(self.pivots)

    def _check_cap(self, extra):
        if self._entries + extra > self._cap:
            raise ResourceCapError(self._entries + extra, self._cap)

    def reduce(self, row):
        """Reduce a {col: Fraction|int} row against the stored pivots.

        Returns the residual integer row (possibly empty) without storing it.
        """
        r = _integerize(row)
        while r:
            c = min(r)
            if c not in self.pivots:
                return r
            p = self.pivots[c]
            a, b = p[c], r[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            # r := ma*r - mb*p  (kills column c)
            new = {}
            for col, v in r.items():
                new[col] = ma * v
            for col, v in p.items():
                nv = new.get(col, 0) - mb * v
                if nv:
                    new[col] = nv
                elif col in new:
                    del new[col]
            self._check_cap(len(new))
            g2 = 0
            for v in new.values():
                g2 = gcd(g2, v)
            if g2 > 1:
                for col in new:
                    new[col] //= g2
            r = new
        return r

    def add_row(self, row):
        """Insert a row; returns True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        self._check_cap(len(r))
        self.pivots[min(r)] = r
        self._entries += len(r)
        return True

    def contains(self, row):
        """True iff the row lies in the span of the inserted rows."""
        return not self.reduce(row)

    def echelon_rows(self):
        """Stored pivot rows in increasing pivot order."""
        return [self.pivots[c] for c in sorted(self.pivots)]

    def rref(self):
        """Fully reduced echelon rows over Fraction, pivot entries 1."""
        cols = sorted(self.pivots)
        rows = []
        for c in cols:
            r = self.pivots[c]
            lead = Fraction(r[c])
            rows.append({col: Fraction(v) / lead for col, v in r.items()})
        # eliminate upward: clear each pivot column from the earlier rows
        for i in range(len(cols) - 1, -1, -1):
            c = cols[i]
            for j in range(i):
                rj = rows[j]
                coef = rj.get(c)
                if coef:
                    for col, v in rows[i].items():
                        nv = rj.get(col, Fraction(0)) - coef * v
                        if nv:
                            rj[col] = nv
                        elif col in rj:
                            del rj[col]
        return cols, rows


class SparseRationalMatrix:
    """Coordinate-sparse matrix over the rationals.

    entries maps (row, col) -> Fraction; zeros are never stored.
    """

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                self.set(i, j, v)

    def set(self, i, j, v):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry (%d,%d) out of bounds" % (i, j))
        v = Fraction(v)
        if v:
            self.entries[(i, j)] = v
        else:
            self.entries.pop((i, j), None)

    def get(self, i, j):
        return self.entries.get((i, j), Fraction(0))

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self):
        t = SparseRationalMatrix(self.cols, self.rows)
        for (i, j), v in self.entries.items():
            t.entries[(j, i)] = v
        return t

    def mul_vector(self, vec):
        """Matrix times a length-cols vector (list of Fractions)."""
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            out[i] += v * vec[j]
        return out


def rank_of_rows(rows, max_entries=None):
    """Rank of a family of {col: value} rows."""
    e = Eliminator(max_entries)
    for r in rows:
        e.add_row(r)
    return e.rank


def rank(m, max_entries=None):
    """Rank of a SparseRationalMatrix over the rationals."""
    return rank_of_rows(m.row_dicts(), max_entries)


def kernel_basis(m, max_entries=None):
    """A basis of {v : m v = 0} as lists of Fractions, one per free column.

    The count always equals cols - rank(m); each vector has a 1 in its free
    coordinate, which makes the family visibly independent.
    """
    e = Eliminator(max_entries)
    for r in m.row_dicts():
        e.add_row(r)
    pivot_cols, rows = e.rref()
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for c, r in zip(pivot_cols, rows):
            coef = r.get(f)
            if coef:
                v[c] = -coef
        basis.append(v)
    return basis


def windowed_span_dim(vectors, in_window, max_entries=None):
    """dim( span(vectors) ∩ {v supported inside the window} ).

    vectors are {col: value} rows; in_window is a predicate on column
    labels.  Equals rank(V) minus the rank of V with the in-window
    coordinates deleted (the kernel dimension of projecting the span onto
    the out-of-window coordinates).
    """
    full = Eliminator(max_entries)
    outside = Eliminator(max_entries)
    for v in vectors:
        full.add_row(v)
        outside.add_row({c: x for c, x in v.items() if not in_window(c)})
    return full.rank - outside.rank


def span_intersect_window(vectors, in_window, max_entries=None):
    """A basis (list of {col: int} rows) of span(vectors) ∩ window.

    Works by re-sorting columns so that out-of-window labels come first;
    echelon rows whose pivot is in-window then have no out-of-window
    support at all, and there are exactly windowed_span_dim of them.
    """
    e = Eliminator(max_entries)
    for v in vectors:
        e.add_row({((0, c) if not in_window(c) else (1, c)): x
                   for c, x in v.items()})
    out = []
    for r in e.echelon_rows():
        flag, _ = min(r)
        if flag == 1:
            out.append({c: x for (_, c), x in r.items()})
    return out
