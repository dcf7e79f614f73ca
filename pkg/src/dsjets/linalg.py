"""Exact rank computations over the integers.

``bareiss_rank`` is the dense fraction-free elimination used for small
matrices (Jacobians).  ``sparse_rank`` handles the large, very sparse
derivation matrices of the invariant oracles: rows are dicts, eliminations
are integer cross-multiplications followed by removal of the row content.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = ["clear_denominators", "bareiss_rank", "sparse_rank"]


def clear_denominators(row):
    """Scale a sequence (or dict) of rationals to integers with no common factor."""
    values = list(row.values()) if isinstance(row, dict) else list(row)
    den = 1
    for v in values:
        v = Fraction(v)
        den = lcm(den, v.denominator)
    scaled = [int(Fraction(v) * den) for v in values]
    g = 0
    for v in scaled:
        g = gcd(g, v)
    if g > 1:
        scaled = [v // g for v in scaled]
    if isinstance(row, dict):
        return dict(zip(row.keys(), scaled))
    return scaled


def bareiss_rank(matrix) -> int:
    """Rank of a dense rational matrix by Bareiss fraction-free elimination."""
    rows = [clear_denominators(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                # exact division is guaranteed by Sylvester's identity
                row_r[c] = (p * row_r[c] - a * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def sparse_rank(rows) -> int:
    """Rank of a sparse integer matrix given as an iterable of ``{col: value}`` dicts."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                rank += 1
                break
            a, p = row[lead], piv[lead]
            g = gcd(a, p)
            fa, fp = p // g, a // g
            new = {c: v * fa for c, v in row.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - fp * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            row = new
    return rank
