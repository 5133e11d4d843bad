"""
Circle Complex
Cellular cochains on the N-cell subdivision of the circle, in doubled coordinates
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Tuple, Union

from models.cohomology import CohClass
from repository.exceptions import ArgumentError, ContractError
from repository.graded import Degree, as_rat

logger = logging.getLogger(__name__)

# Even doubled index 2x is the vertex f_x, odd index 2x+1 is the edge g_{x+1/2}.
CellIndex = int


class CircleComplex:
    """The cochain complex C(S1) for a subdivision into N vertices and N edges"""

    def __init__(self, N: int):
        if N < 3:
            raise ArgumentError(f"Circle subdivision needs at least 3 cells, got N={N}")
        self.N = N
        self.size = 2 * N
        self._distance = self._build_distance_table()
        logger.debug(f"Built circle complex with N={N} ({self.size} cells)")

    def __repr__(self) -> str:
        return f"CircleComplex(N={self.N})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CircleComplex) and other.N == self.N

    def __hash__(self) -> int:
        return hash(("CircleComplex", self.N))

    # Cells

    def vertex(self, x: int) -> CellIndex:
        return (2 * x) % self.size

    def edge(self, x: int) -> CellIndex:
        """The edge g_{x+1/2} between vertices x and x+1"""
        return (2 * x + 1) % self.size

    @staticmethod
    def cell_degree(c: CellIndex) -> Degree:
        return c & 1

    def cells(self, degree: Union[Degree, None] = None) -> List[CellIndex]:
        if degree is None:
            return list(range(self.size))
        return [c for c in range(self.size) if c & 1 == degree]

    def cell_label(self, c: CellIndex) -> str:
        c %= self.size
        if c & 1:
            return f"g_{c}/2"
        return f"f_{c // 2}"

    def rotate_cell(self, c: CellIndex, k: int = 1) -> CellIndex:
        """Translate a cell by x -> x+k"""
        return (c + 2 * k) % self.size

    def d_cell(self, c: CellIndex) -> List[Tuple[CellIndex, int]]:
        """d f_x = g_{x-1/2} - g_{x+1/2}; edges are closed"""
        if c & 1:
            return []
        return [((c - 1) % self.size, 1), ((c + 1) % self.size, -1)]

    def d_preimages(self, c: CellIndex) -> List[Tuple[CellIndex, int]]:
        """Vertices whose differential contains the edge c, with the coefficient it appears with"""
        if not c & 1:
            return []
        return [((c - 1) % self.size, -1), ((c + 1) % self.size, 1)]

    # Quasilocality metric

    def _points(self, c: CellIndex) -> Tuple[int, ...]:
        if c & 1:
            return ((c - 1) % self.size, c, (c + 1) % self.size)
        return (c,)

    def _circular(self, a: int, b: int) -> int:
        diff = abs(a - b) % self.size
        return min(diff, self.size - diff)

    def _build_distance_table(self) -> List[List[int]]:
        table = []
        for a in range(self.size):
            row = []
            for b in range(self.size):
                doubled = max(min(self._circular(p, q) for q in self._points(b)) for p in self._points(a))
                row.append(doubled // 2)
            table.append(row)
        return table

    def distance(self, a: CellIndex, b: CellIndex) -> int:
        """Nonsymmetric distance from cell a to cell b, in cells"""
        return self._distance[a][b]

    # Cochains

    def cochain(self, degree: Degree, coeffs: Mapping[CellIndex, Union[int, str, Fraction]]) -> "Cochain":
        return Cochain(self, degree, coeffs)

    def basis_cochain(self, c: CellIndex) -> "Cochain":
        c %= self.size
        return Cochain(self, c & 1, {c: 1})

    def zero(self, degree: Degree) -> "Cochain":
        return Cochain(self, degree, {})

    def unit_cochain(self) -> "Cochain":
        """Representative of 1 in H0: the sum of all vertices"""
        return Cochain(self, 0, {self.vertex(x): 1 for x in range(self.N)})

    def omega_cochain(self) -> "Cochain":
        """Representative of ω in H1: the single edge g_{1/2}"""
        return Cochain(self, 1, {self.edge(0): 1})


class Cochain:
    """A homogeneous cochain with sparse exact coefficients"""

    __slots__ = ("complex", "degree", "_coeffs")

    def __init__(self, complex: CircleComplex, degree: Degree, coeffs: Mapping[CellIndex, Union[int, str, Fraction]]):
        # degree 2 is the zero space that d lands in from edges
        if degree not in (0, 1, 2):
            raise ArgumentError(f"Cochains on the circle live in degree 0 or 1, got {degree}")
        cleaned: Dict[CellIndex, Fraction] = {}
        for cell, value in coeffs.items():
            if not 0 <= cell < complex.size:
                raise ArgumentError(f"Cell index {cell} outside 0..{complex.size - 1}")
            if cell & 1 != degree:
                raise ArgumentError(f"Cell {complex.cell_label(cell)} does not have degree {degree}")
            value = as_rat(value)
            if value:
                cleaned[cell] = value
        self.complex = complex
        self.degree = degree
        self._coeffs = cleaned

    @property
    def coeffs(self) -> Dict[CellIndex, Fraction]:
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[CellIndex, Fraction]]:
        return iter(self._coeffs.items())

    def coefficient(self, c: CellIndex) -> Fraction:
        return self._coeffs.get(c, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_compatible(self, other: "Cochain") -> None:
        if other.complex != self.complex or other.degree != self.degree:
            raise ArgumentError(f"Cannot combine cochains of degrees {self.degree} and {other.degree} on different or mismatched complexes")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        for c, v in other.items():
            coeffs[c] = coeffs.get(c, 0) + v
        return Cochain(self.complex, self.degree, coeffs)

    def __neg__(self) -> "Cochain":
        return Cochain(self.complex, self.degree, {c: -v for c, v in self.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, scalar) -> "Cochain":
        r = as_rat(scalar)
        return Cochain(self.complex, self.degree, {c: r * v for c, v in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.complex == other.complex
        return self.complex == other.complex and self.degree == other.degree and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = [f"{v}·{self.complex.cell_label(c)}" for c, v in sorted(self._coeffs.items())]
        return " + ".join(terms)


def new_complex(N: int) -> CircleComplex:
    return CircleComplex(N)


def differential(c: Cochain) -> Cochain:
    """Apply d; the result has degree c.degree + 1 and edges go to zero"""
    coeffs: Dict[CellIndex, Fraction] = {}
    for cell, value in c.items():
        for target, sign in c.complex.d_cell(cell):
            coeffs[target] = coeffs.get(target, 0) + sign * value
    return Cochain(c.complex, c.degree + 1, coeffs)


def is_closed(c: Cochain) -> bool:
    return differential(c).is_zero()


def cohomology_class(c: Cochain) -> CohClass:
    """Read the class of a closed cochain against the unit and g_{1/2}"""
    if not is_closed(c):
        raise ContractError(f"cohomology_class needs a closed cochain, got {c!r}")
    if c.degree == 0:
        values = {c.coefficient(c.complex.vertex(x)) for x in range(c.complex.N)}
        # closed 0-cochains are constant around the circle
        (h0,) = values
        return CohClass(h0=h0, h1=0)
    if c.degree == 1:
        return CohClass(h0=0, h1=sum((v for _, v in c.items()), Fraction(0)))
    return CohClass()


def is_exact(c: Cochain) -> bool:
    """True iff c lies in the image of d"""
    if not is_closed(c):
        raise ContractError(f"is_exact needs a closed cochain, got {c!r}")
    if c.degree == 0:
        return c.is_zero()
    return cohomology_class(c).is_zero()
