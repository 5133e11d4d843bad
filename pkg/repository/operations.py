"""
Operation Algebra
Graded multilinear operations on the circle complex: differential commutator,
properadic composition, symmetric-group actions and quasilocality
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from models.cohomology import QRadius
from repository.circle_complex import CellIndex, CircleComplex, Cochain, cohomology_class
from repository.exceptions import ArgumentError, ContractError
from repository.graded import Degree, Permutation, as_rat, koszul_sign

logger = logging.getLogger(__name__)

CellTuple = Tuple[CellIndex, ...]
Tensor = Dict[CellTuple, Fraction]
Entry = Tuple[CellTuple, CellTuple, Fraction]
SlotLabel = Tuple[str, int]


def _degrees(cells: Sequence[CellIndex]) -> List[Degree]:
    return [c & 1 for c in cells]


def _tuple_degree(cells: Sequence[CellIndex]) -> Degree:
    return sum(c & 1 for c in cells)


class Operation:
    """An m-to-n operation of fixed degree stored as sparse matrix entries"""

    __slots__ = ("complex", "m", "n", "degree", "_entries")

    def __init__(self, complex: CircleComplex, m: int, n: int, degree: Degree,
                 entries: Optional[Dict[CellTuple, Dict[CellTuple, Union[int, str, Fraction]]]] = None):
        if m < 1 or n < 1:
            raise ArgumentError(f"Operations need at least one input and one output, got ({m},{n})")
        self.complex = complex
        self.m = m
        self.n = n
        self.degree = degree
        self._entries: Dict[CellTuple, Dict[CellTuple, Fraction]] = {}
        for inp, row in (entries or {}).items():
            for out, value in row.items():
                self._store(tuple(inp), tuple(out), as_rat(value))

    def _store(self, inp: CellTuple, out: CellTuple, value: Fraction) -> None:
        if len(inp) != self.m or len(out) != self.n:
            raise ArgumentError(f"Entry {inp} -> {out} does not have arity ({self.m},{self.n})")
        for c in inp + out:
            if not 0 <= c < self.complex.size:
                raise ArgumentError(f"Cell index {c} outside 0..{self.complex.size - 1}")
        if _tuple_degree(out) - _tuple_degree(inp) != self.degree:
            raise ArgumentError(
                f"Entry {self._label(inp)} -> {self._label(out)} has degree "
                f"{_tuple_degree(out) - _tuple_degree(inp)}, operation declares {self.degree}"
            )
        if value:
            self._entries.setdefault(inp, {})[out] = value

    @classmethod
    def from_items(cls, complex: CircleComplex, m: int, n: int, degree: Degree, items: Iterable[Entry]) -> "Operation":
        """Accumulate (inputs, outputs, coefficient) triples, dropping cancelled entries"""
        acc: Dict[CellTuple, Dict[CellTuple, Fraction]] = defaultdict(dict)
        for inp, out, value in items:
            row = acc[inp]
            row[out] = row.get(out, 0) + value
        op = cls(complex, m, n, degree)
        for inp, row in acc.items():
            for out, value in row.items():
                if value:
                    op._store(inp, out, value)
        return op

    def _label(self, cells: Sequence[CellIndex]) -> str:
        return "⊗".join(self.complex.cell_label(c) for c in cells)

    def items(self) -> Iterator[Entry]:
        for inp, row in self._entries.items():
            for out, value in row.items():
                yield inp, out, value

    def row(self, inp: CellTuple) -> Dict[CellTuple, Fraction]:
        return dict(self._entries.get(tuple(inp), {}))

    def coefficient(self, inp: CellTuple, out: CellTuple) -> Fraction:
        return self._entries.get(tuple(inp), {}).get(tuple(out), Fraction(0))

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._entries.values())

    def is_zero(self) -> bool:
        return not self._entries

    def signature(self) -> Tuple[int, int, Degree]:
        return self.m, self.n, self.degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operation):
            return NotImplemented
        return (self.complex == other.complex and self.signature() == other.signature()
                and self._entries == other._entries)

    def __add__(self, other: "Operation") -> "Operation":
        return add(self, other)

    def __neg__(self) -> "Operation":
        return scale(self, -1)

    def __sub__(self, other: "Operation") -> "Operation":
        return add(self, scale(other, -1))

    def __mul__(self, r) -> "Operation":
        return scale(self, r)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        head = f"Operation({self.m}->{self.n}, deg {self.degree}, N={self.complex.N}"
        if self.is_zero():
            return head + ", zero)"
        return head + f", {self.nnz} entries)"

    def describe(self, limit: int = 20) -> str:
        """Human-readable listing of the first few entries"""
        lines = []
        for inp, out, value in sorted(self.items())[:limit]:
            lines.append(f"{self._label(inp)} -> {value} {self._label(out)}")
        if self.nnz > limit:
            lines.append(f"... ({self.nnz - limit} more)")
        return "\n".join(lines) if lines else "0"


# Constructors

def zero_op(complex: CircleComplex, m: int, n: int, degree: Degree) -> Operation:
    return Operation(complex, m, n, degree)


def id_op(complex: CircleComplex) -> Operation:
    return Operation(complex, 1, 1, 0, {(c,): {(c,): 1} for c in range(complex.size)})


def differential_op(complex: CircleComplex) -> Operation:
    """d as a (1,1) operation of degree 1"""
    items = []
    for c in complex.cells(0):
        for target, sign in complex.d_cell(c):
            items.append(((c,), (target,), Fraction(sign)))
    return Operation.from_items(complex, 1, 1, 1, items)


def matrix_unit(complex: CircleComplex, inputs: Sequence[CellIndex], outputs: Sequence[CellIndex]) -> Operation:
    inputs, outputs = tuple(inputs), tuple(outputs)
    degree = _tuple_degree(outputs) - _tuple_degree(inputs)
    return Operation(complex, len(inputs), len(outputs), degree, {inputs: {outputs: 1}})


# Linear structure

def add(P: Operation, Q: Operation) -> Operation:
    if P.complex != Q.complex or P.signature() != Q.signature():
        raise ArgumentError(f"Cannot add operations with signatures {P.signature()} and {Q.signature()}")
    return Operation.from_items(P.complex, P.m, P.n, P.degree, list(P.items()) + list(Q.items()))


def scale(P: Operation, r) -> Operation:
    r = as_rat(r)
    return Operation.from_items(P.complex, P.m, P.n, P.degree, ((i, o, r * v) for i, o, v in P.items()))


# Action on cochains

def apply_tensor(P: Operation, tensor: Tensor) -> Tensor:
    """Apply P to a formal sum of input basis tuples"""
    result: Tensor = {}
    for inp, coeff in tensor.items():
        if len(inp) != P.m:
            raise ArgumentError(f"Input tuple of length {len(inp)} does not match arity {P.m}")
        for out, value in P._entries.get(tuple(inp), {}).items():
            result[out] = result.get(out, 0) + coeff * value
    return {out: v for out, v in result.items() if v}


def tensor_of(cochains: Sequence[Cochain]) -> Tensor:
    """Expand c1 ⊗ ... ⊗ ck into a formal sum of basis tuples"""
    tensor: Tensor = {(): Fraction(1)}
    for c in cochains:
        tensor = {cells + (cell,): coeff * value for cells, coeff in tensor.items() for cell, value in c.items()}
    return tensor


def apply(P: Operation, t: Sequence[Cochain]) -> Tensor:
    """Apply P to a tensor product of m cochains"""
    if len(t) != P.m:
        raise ArgumentError(f"Operation takes {P.m} inputs, got {len(t)}")
    for c in t:
        if c.complex != P.complex:
            raise ArgumentError("Cochain lives on a different circle complex")
    return apply_tensor(P, tensor_of(t))


def tensor_to_cochain(complex: CircleComplex, tensor: Tensor, degree: Degree) -> Cochain:
    """Read a formal sum of 1-tuples as a single cochain"""
    coeffs: Dict[CellIndex, Fraction] = {}
    for cells, value in tensor.items():
        if len(cells) != 1:
            raise ArgumentError(f"Expected single-cell outputs, got {cells}")
        coeffs[cells[0]] = coeffs.get(cells[0], 0) + value
    return Cochain(complex, degree, coeffs)


# Differential

def commutator_with_d(P: Operation) -> Operation:
    """D(P) = d∘P - (-1)^p P∘d with Koszul signs on tensor powers"""
    cx = P.complex
    sign_p = -1 if P.degree % 2 else 1
    items: List[Entry] = []
    for inp, out, value in P.items():
        prefix = 0
        for j, y in enumerate(out):
            parity = -1 if prefix % 2 else 1
            for target, s in cx.d_cell(y):
                items.append((inp, out[:j] + (target,) + out[j + 1:], value * s * parity))
            prefix += y & 1
        prefix = 0
        for i, x in enumerate(inp):
            parity = -1 if prefix % 2 else 1
            for source, s in cx.d_preimages(x):
                items.append((inp[:i] + (source,) + inp[i + 1:], out, -sign_p * value * s * parity))
            prefix += x & 1
    return Operation.from_items(cx, P.m, P.n, P.degree + 1, items)


def is_closed(P: Operation) -> bool:
    return commutator_with_d(P).is_zero()


# Symmetric group actions

def permute_inputs(P: Operation, sigma: Permutation) -> Operation:
    if sigma.size != P.m:
        raise ArgumentError(f"Permutation of size {sigma.size} cannot act on {P.m} inputs")
    items = ((sigma.apply(inp), out, value * koszul_sign(sigma, _degrees(inp))) for inp, out, value in P.items())
    return Operation.from_items(P.complex, P.m, P.n, P.degree, items)


def permute_outputs(P: Operation, sigma: Permutation) -> Operation:
    if sigma.size != P.n:
        raise ArgumentError(f"Permutation of size {sigma.size} cannot act on {P.n} outputs")
    items = ((inp, sigma.apply(out), value * koszul_sign(sigma, _degrees(out))) for inp, out, value in P.items())
    return Operation.from_items(P.complex, P.m, P.n, P.degree, items)


# Composition

def _placement(canonical: List[SlotLabel], requested: Optional[Sequence[SlotLabel]], side: str) -> Permutation:
    """Permutation carrying the canonical slot order to the requested one"""
    if requested is None:
        return Permutation.identity(len(canonical))
    requested = [tuple(label) for label in requested]
    if sorted(requested) != sorted(canonical):
        raise ArgumentError(f"{side} order {requested} is not a rearrangement of the free slots {canonical}")
    return Permutation([requested.index(label) for label in canonical])


def compose(P: Operation, Q: Operation, matching: Sequence[Tuple[int, int]],
            input_order: Optional[Sequence[SlotLabel]] = None,
            output_order: Optional[Sequence[SlotLabel]] = None) -> Operation:
    """
    Feed outputs of Q into inputs of P along matching = [(Q output slot, P input slot), ...].

    Free slots are labelled ("q", i) / ("p", j). The canonical input order is Q's inputs
    followed by P's unmatched inputs; the canonical output order is Q's unmatched outputs
    followed by P's outputs. input_order / output_order rearrange these with Koszul signs.
    """
    if P.complex != Q.complex:
        raise ArgumentError("Cannot compose operations on different circle complexes")
    if not matching:
        raise ArgumentError("Composition needs at least one edge; disconnected composition is not supported")
    q_outs = [int(q) for q, _ in matching]
    p_ins = [int(p) for _, p in matching]
    if len(set(q_outs)) != len(q_outs) or len(set(p_ins)) != len(p_ins):
        raise ArgumentError(f"Slot collision in matching {list(matching)}")
    if any(not 0 <= q < Q.n for q in q_outs) or any(not 0 <= p < P.m for p in p_ins):
        raise ArgumentError(f"Matching {list(matching)} out of range for arities Q({Q.m},{Q.n}), P({P.m},{P.n})")

    q_free = [i for i in range(Q.n) if i not in q_outs]
    p_free = [j for j in range(P.m) if j not in p_ins]
    canon_in: List[SlotLabel] = [("q", i) for i in range(Q.m)] + [("p", j) for j in p_free]
    canon_out: List[SlotLabel] = [("q", i) for i in q_free] + [("p", j) for j in range(P.n)]
    if not canon_out:
        raise ArgumentError("Composition leaves no outputs")
    in_perm = _placement(canon_in, input_order, "input")
    out_perm = _placement(canon_out, output_order, "output")

    # (Q outputs ⊗ P free inputs) -> (Q free outputs ⊗ P inputs in slot order)
    feed = {p: ("q", q) for q, p in zip(q_outs, p_ins)}
    source: List[SlotLabel] = [("q", i) for i in range(Q.n)] + [("p", j) for j in p_free]
    target: List[SlotLabel] = [("q", i) for i in q_free] + [feed.get(j, ("p", j)) for j in range(P.m)]
    mid_perm = Permutation([target.index(label) for label in source])

    p_rows: Dict[CellTuple, List[Entry]] = defaultdict(list)
    for p_in, p_out, pc in P.items():
        p_rows[tuple(p_in[j] for j in p_ins)].append((p_in, p_out, pc))

    items: List[Entry] = []
    for q_in, q_out, qc in Q.items():
        rows = p_rows.get(tuple(q_out[i] for i in q_outs))
        if not rows:
            continue
        free_q = tuple(q_out[i] for i in q_free)
        # id ⊗ P passes P across the free Q outputs
        p_sign = -1 if (P.degree * _tuple_degree(free_q)) % 2 else 1
        for p_in, p_out, pc in rows:
            free_p = tuple(p_in[j] for j in p_free)
            canonical_in = q_in + free_p
            canonical_out = free_q + p_out
            sign = (p_sign
                    * koszul_sign(in_perm, _degrees(canonical_in))
                    * koszul_sign(mid_perm, _degrees(q_out + free_p))
                    * koszul_sign(out_perm, _degrees(canonical_out)))
            items.append((in_perm.apply(canonical_in), out_perm.apply(canonical_out), qc * pc * sign))
    return Operation.from_items(P.complex, len(canon_in), len(canon_out), P.degree + Q.degree, items)


# Quasilocality

def quasilocality_radius(P: Operation) -> QRadius:
    dist = P.complex.distance
    radius = 0
    for inp, out, _ in P.items():
        for x in inp:
            for y in out:
                d = dist(x, y)
                if d > radius:
                    radius = d
    return QRadius(value=radius)


def rotate(P: Operation, k: int = 1) -> Operation:
    """Conjugate P by the rotation x -> x+k"""
    rot = P.complex.rotate_cell
    items = ((tuple(rot(c, k) for c in inp), tuple(rot(c, k) for c in out), v) for inp, out, v in P.items())
    return Operation.from_items(P.complex, P.m, P.n, P.degree, items)


# Cohomology

def cohomology_action_11(P: Operation) -> Tuple[Fraction, Fraction]:
    """Scalars by which a degree-0 chain map acts on H0 and H1"""
    if P.signature() != (1, 1, 0):
        raise ContractError(f"cohomology_action_11 needs a (1,1) degree-0 operation, got {P.signature()}")
    if not is_closed(P):
        raise ContractError("cohomology_action_11 needs a chain map (D(P) != 0)")
    cx = P.complex
    h0 = cohomology_class(tensor_to_cochain(cx, apply(P, [cx.unit_cochain()]), 0)).h0
    h1 = cohomology_class(tensor_to_cochain(cx, apply(P, [cx.omega_cochain()]), 1)).h1
    return h0, h1
