"""
Quasilocal Cohomology
Cochain complexes of l-quasilocal (m,n)-operations on the circle and their
cohomology dimensions by exact rank
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from repository.circle_complex import CircleComplex
from repository.exceptions import ArgumentError, ContractError
from repository.linalg import Row, exact_rank, sparse_product
from repository.operations import CellTuple, commutator_with_d, matrix_unit

logger = logging.getLogger(__name__)

Unit = Tuple[CellTuple, CellTuple]


@dataclass
class QlocSpace:
    N: int
    m: int
    n: int
    ell: int
    p: int
    complex: CircleComplex
    basis: List[Unit] = field(default_factory=list)
    index: Dict[Unit, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.basis)

    def operations(self):
        """The basis as matrix-unit operations"""
        for inputs, outputs in self.basis:
            yield matrix_unit(self.complex, inputs, outputs)


def _neighbourhoods(complex: CircleComplex, ell: int) -> List[frozenset]:
    """near[y] = cells x with distance(x -> y) <= ell"""
    return [frozenset(x for x in range(complex.size) if complex.distance(x, y) <= ell) for y in range(complex.size)]


def qloc_basis(N: int, m: int, n: int, ell: int, p: int, complex: Optional[CircleComplex] = None) -> QlocSpace:
    if m < 1 or n < 1:
        raise ArgumentError(f"Arity must be at least (1,1), got ({m},{n})")
    if ell < 0:
        raise ArgumentError(f"Quasilocality radius must be non-negative, got {ell}")
    complex = complex or CircleComplex(N)
    space = QlocSpace(N=N, m=m, n=n, ell=ell, p=p, complex=complex)
    if not -m <= p <= n:
        return space

    near = _neighbourhoods(complex, ell)
    cells = range(complex.size)
    for outputs in itertools.product(cells, repeat=n):
        in_degree = sum(c & 1 for c in outputs) - p
        if not 0 <= in_degree <= m:
            continue
        allowed = frozenset.intersection(*(near[y] for y in outputs))
        if not allowed:
            continue
        for inputs in itertools.product(sorted(allowed), repeat=m):
            if sum(c & 1 for c in inputs) == in_degree:
                space.basis.append((inputs, outputs))
    space.basis.sort()
    space.index = {unit: i for i, unit in enumerate(space.basis)}
    logger.debug(f"qloc_{ell}({m},{n}) degree {p} on N={N}: {len(space)} matrix units")
    return space


def differential_matrix(source: QlocSpace, target: QlocSpace) -> List[Row]:
    """Rows of [d, -] from degree p to p+1, expressed in the target basis"""
    if target.p != source.p + 1:
        raise ArgumentError("Target space must sit one degree above the source")
    rows: List[Row] = []
    for inputs, outputs in source.basis:
        image = commutator_with_d(matrix_unit(source.complex, inputs, outputs))
        row: Row = {}
        for inp, out, value in image.items():
            col = target.index.get((inp, out))
            if col is None:
                raise ContractError(
                    f"[d, -] leaves qloc_{source.ell}: {inputs}->{outputs} hits {inp}->{out}",
                )
            row[col] = value
        rows.append(row)
    return rows


def expected_dims(m: int, n: int) -> Dict[int, int]:
    """H(S1) shifted by 1-n: one class in degrees n-1 and n"""
    return {p: 1 if p in (n - 1, n) else 0 for p in range(-m, n + 1)}


def cohomology_dims(N: int, m: int, n: int, ell: int) -> Dict[int, int]:
    complex = CircleComplex(N)
    spaces = {p: qloc_basis(N, m, n, ell, p, complex) for p in range(-m, n + 2)}
    ranks: Dict[int, int] = {-m - 1: 0}
    for p in range(-m, n + 1):
        rows = differential_matrix(spaces[p], spaces[p + 1])
        ranks[p] = exact_rank(rows)
        logger.info(f"qloc_{ell}({m},{n}) N={N} degree {p}: dim {len(spaces[p])}, rank {ranks[p]}")
    return {p: len(spaces[p]) - ranks[p] - ranks[p - 1] for p in range(-m, n + 1)}


def d_squared_check(N: int, m: int, n: int, ell: int, p: int) -> bool:
    """The product of consecutive differential matrices vanishes"""
    complex = CircleComplex(N)
    s0, s1, s2 = (qloc_basis(N, m, n, ell, q, complex) for q in (p, p + 1, p + 2))
    first = differential_matrix(s0, s1)
    second = differential_matrix(s1, s2)
    return all(not row for row in sparse_product(first, second))


def breakdown_cutoff(N: int, m: int, n: int, max_ell: Optional[int] = None) -> Optional[int]:
    """The first l >= 1 at which the dims stop matching the small-l answer, or None"""
    expected = expected_dims(m, n)
    for ell in range(1, (max_ell if max_ell is not None else N) + 1):
        dims = cohomology_dims(N, m, n, ell)
        if dims != expected:
            logger.info(f"qloc({m},{n}) on N={N} deviates at l={ell}: {dims}")
            return ell
    return None
