"""
Exact Linear Algebra
Sparse Gaussian elimination over the rationals on row dictionaries
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


def echelonize(rows: Iterable[Row]) -> Dict[int, Row]:
    """
    Reduce rows {col: coeff} to echelon form.
    Returns pivots mapping pivot column -> row normalized so the pivot coefficient is 1.
    """
    pivots: Dict[int, Row] = {}
    # sparsest rows first keeps fill-in down
    ordered: List[Row] = sorted((dict(r) for r in rows if r), key=len)
    for row in ordered:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            pivot_row = pivots.get(col)
            if pivot_row is None:
                inv = 1 / r[col]
                pivots[col] = {c: v * inv for c, v in r.items()}
                break
            factor = r[col]
            for c, v in pivot_row.items():
                updated = r.get(c, 0) - factor * v
                if updated:
                    r[c] = updated
                else:
                    r.pop(c, None)
    return pivots


def exact_rank(rows: Iterable[Row]) -> int:
    return len(echelonize(rows))


def sparse_product(left: List[Row], right: List[Row]) -> List[Row]:
    """Rows of (left · right) where row i of left is a combination of rows of right"""
    out: List[Row] = []
    for row in left:
        acc: Row = {}
        for k, v in row.items():
            for c, w in right[k].items():
                acc[c] = acc.get(c, 0) + v * w
        out.append({c: v for c, v in acc.items() if v})
    return out
