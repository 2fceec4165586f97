"""Exact linear algebra: fraction-free ranks, nullspaces, span membership."""

from __future__ import annotations

import bisect
import math
from fractions import Fraction
from functools import reduce

from .scalars import normalize


def _is_rational_matrix(rows) -> bool:
    return all(isinstance(x, (int, Fraction)) for row in rows for x in row)


def _integerize(row):
    den = reduce(math.lcm, (Fraction(x).denominator for x in row), 1)
    return [int(Fraction(x) * den) for x in row]


def _exact_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("non-exact division in Bareiss elimination")
    return q


def bareiss_rank(rows, div=None) -> int:
    """Rank via fraction-free (Bareiss) elimination with column skipping.

    ``div`` performs the exact division step; integer matrices use checked
    floor division, field matrices use true division.
    """
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    div = div or _exact_div
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = div(p * row[j] - f * prow[j], prev)
            row[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def exact_rank(rows) -> int:
    """Rank of a matrix (list of rows) over its exact coefficient field."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if _is_rational_matrix(rows):
        return bareiss_rank([_integerize(r) for r in rows])
    return bareiss_rank(rows, div=lambda x, y: x / y)


def transpose(rows):
    return [list(col) for col in zip(*rows)]


class SparseEchelon:
    """Incremental fraction-free row echelon form over Q for sparse rows.

    Rows are dicts column -> rational; columns must be mutually comparable.
    Each stored pivot row has integer entries with content 1, and its
    leading (largest) column is unique among pivots.
    """

    def __init__(self):
        self.pivots: dict = {}
        self._cols: list = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @staticmethod
    def _primitive(row):
        den = reduce(math.lcm, (Fraction(v).denominator for v in row.values()), 1)
        ints = {k: int(Fraction(v) * den) for k, v in row.items()}
        g = reduce(math.gcd, ints.values(), 0)
        return {k: v // g for k, v in ints.items()} if g > 1 else ints

    def reduce(self, row: dict) -> dict:
        row = self._primitive({k: v for k, v in row.items() if v})
        cols = self._cols
        hi = len(cols)
        while row:
            top = max(row)
            # walk pivot columns from top down
            i = bisect.bisect_right(cols, top, 0, hi) - 1
            if i < 0:
                break
            c = cols[i]
            hi = i
            f = row.get(c)
            if f is None:
                continue
            piv = self.pivots[c]
            p = piv[c]
            new = {k: v * p for k, v in row.items()}
            for k, v in piv.items():
                s = new.get(k, 0) - f * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = self._primitive(new) if new else {}
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True if it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        lead = max(r)
        if r[lead] < 0:
            r = {k: -v for k, v in r.items()}
        self.pivots[lead] = r
        bisect.insort(self._cols, lead)
        return True


def sparse_rank(rows) -> int:
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def rref(rows):
    """Reduced row echelon form over a field; returns (matrix, pivot columns)."""
    a = [[normalize(Fraction(x)) if isinstance(x, (int, Fraction)) else x for x in r] for r in rows]
    if not a:
        return a, []
    m, n = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv if isinstance(inv, (int, Fraction)) is False else normalize(Fraction(x) / inv)
                for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [normalize(x - f * y) if isinstance(x, (int, Fraction)) else x - f * y
                        for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def nullspace(rows, ncols: int | None = None):
    """Basis of {v : M v = 0} as a list of column vectors (lists)."""
    if not rows:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    n = len(rows[0])
    a, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = normalize(-a[i][fcol]) if isinstance(a[i][fcol], (int, Fraction)) else -a[i][fcol]
        basis.append(v)
    return basis


def in_span(vectors, target) -> bool:
    """Whether ``target`` is a linear combination of ``vectors``."""
    if not vectors:
        return not any(target)
    return exact_rank(list(vectors) + [list(target)]) == exact_rank(vectors)


def solve_combination(vectors, target):
    """Coefficients c with sum c_i vectors[i] == target, or None."""
    k = len(vectors)
    n = len(target)
    aug = [[vectors[i][j] for i in range(k)] + [target[j]] for j in range(n)]
    a, pivots = rref(aug)
    if k in pivots:
        return None
    sol = [0] * k
    for i, pc in enumerate(pivots):
        sol[pc] = a[i][k]
    return sol
