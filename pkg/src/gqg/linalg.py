"""Exact linear algebra over Q(zeta_n).

Vectors are sparse dicts {index: CycScalar}; matrices are lists of rows.
"""
from __future__ import annotations


def axpy(y: dict, a, x: dict) -> None:
    """y += a*x in place, dropping zeros."""
    for k, v in x.items():
        if k in y:
            s = y[k] + a * v
            if s:
                y[k] = s
            else:
                del y[k]
        else:
            s = a * v
            if s:
                y[k] = s


def scaled(a, x: dict) -> dict:
    return {k: a * v for k, v in x.items()} if a else {}


def dense_to_sparse(row) -> dict:
    return {k: v for k, v in enumerate(row) if v}


def rank_bareiss(matrix, zero=None) -> int:
    """Rank by fraction-free (Bareiss) elimination on a dense matrix."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    prev = None
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            new = []
            for j in range(n):
                v = p * rows[i][j] - a * rows[r][j]
                if prev is not None and v:
                    v = v / prev
                new.append(v)
            rows[i] = new
        prev = p
        r += 1
        if r == m:
            break
    return r


class IncrementalBasis:
    """Greedy basis selection with expressions of dependent vectors.

    ``add(v)`` returns ``(index, coords)``: index is the position of v among
    accepted vectors (None when v is dependent) and coords expresses v in
    terms of the accepted vectors.
    """

    def __init__(self):
        self._rows = []  # (pivot col, echelon vector with pivot 1, combination dict)
        self.size = 0

    def reduce(self, v: dict):
        res = dict(v)
        expr = {}
        for col, row, comb in self._rows:
            f = res.get(col)
            if f:
                axpy(res, -f, row)
                axpy(expr, f, comb)
        return res, expr

    def add(self, v: dict):
        res, expr = self.reduce(v)
        if not res:
            return None, expr
        idx = self.size
        self.size += 1
        col = min(res)
        inv = res[col].inverse()
        comb = {idx: inv}
        axpy(comb, -inv, expr)
        self._rows.append((col, scaled(inv, res), comb))
        return idx, {idx: res[col].field.one}

    def express(self, v: dict):
        """Coordinates of v in the accepted vectors, or None if outside the span."""
        res, expr = self.reduce(v)
        return None if res else expr


def rref(rows: list, ncols: int | None = None):
    """Reduced row echelon form of sparse rows; returns (rows, pivot columns)."""
    work = [dict(r) for r in rows if r]
    pivots = []
    out = []
    for row in work:
        for col, prow in zip(pivots, out):
            f = row.get(col)
            if f:
                axpy(row, -f, prow)
        if not row:
            continue
        col = min(row)
        inv = row[col].inverse()
        row = scaled(inv, row)
        for k, prow in enumerate(out):
            f = prow.get(col)
            if f:
                axpy(prow, -f, row)
        out.append(row)
        pivots.append(col)
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [out[k] for k in order], [pivots[k] for k in order]


def rank(rows: list) -> int:
    return len(rref(rows)[0])


def nullspace(rows: list, ncols: int, one) -> list:
    """Basis of {x : A x = 0} as sparse dicts, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: one}
        for col, row in zip(pivots, red):
            v = row.get(free)
            if v:
                vec[col] = -v
        basis.append(vec)
    return basis


def solve(rows: list, rhs: list, ncols: int, one):
    """One solution of A x = b and the nullspace basis; x is None when inconsistent.

    Returns (x, null_basis, bad_row) where bad_row indexes an equation that
    cannot be satisfied (only meaningful when x is None).
    """
    aug = []
    for k, (row, b) in enumerate(zip(rows, rhs)):
        r = dict(row)
        if b:
            r[ncols] = b
        aug.append(r)
    red, pivots = rref(aug)
    for row, col in zip(red, pivots):
        if col == ncols:
            # locate an original equation responsible for the inconsistency
            bad = _first_inconsistent(rows, rhs, ncols)
            return None, [], bad
    x = {}
    for row, col in zip(red, pivots):
        b = row.get(ncols)
        if b:
            x[col] = b
    null = nullspace(rows, ncols, one)
    return x, null, None


def _first_inconsistent(rows, rhs, ncols):
    for k in range(1, len(rows) + 1):
        aug = []
        for row, b in zip(rows[:k], rhs[:k]):
            r = dict(row)
            if b:
                r[ncols] = b
            aug.append(r)
        _, pivots = rref(aug)
        if ncols in pivots:
            return k - 1
    return None


def in_span(vectors: list, v: dict) -> bool:
    basis = IncrementalBasis()
    for w in vectors:
        basis.add(w)
    return basis.express(v) is not None
