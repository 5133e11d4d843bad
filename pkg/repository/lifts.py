"""
Lift Verifier
Explicit cellular lifts of the low-weight Frobenius generators, their homotopy
equations, and the genus-two obstruction
"""

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from repository.circle_complex import CircleComplex
from repository.exceptions import ArgumentError, VerificationError
from repository.graded import Permutation
from repository.operations import (
    Entry,
    Operation,
    cohomology_action_11,
    commutator_with_d,
    compose,
    id_op,
    is_closed,
    permute_inputs,
    permute_outputs,
    quasilocality_radius,
    rotate,
    scale,
)

logger = logging.getLogger(__name__)

HOMOTOPY_IDS = ("associator", "coassociator", "frobeniator", "d_gen", "a_gen")
GENERATOR_IDS = HOMOTOPY_IDS + ("b_gen",)
MIN_CELLS = 5

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
SIXTH = Fraction(1, 6)
TWELFTH = Fraction(1, 12)


@dataclass(frozen=True)
class LiftSet:
    mult: Operation
    comult: Operation
    associator: Operation
    coassociator: Operation
    frobeniator: Operation
    d_gen: Operation
    a_gen: Operation
    N: int

    @property
    def complex(self) -> CircleComplex:
        return self.mult.complex

    def operations(self) -> Dict[str, Operation]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "N"}

    def homotopy(self, which: str) -> Operation:
        if which not in HOMOTOPY_IDS:
            raise ArgumentError(f"Unknown homotopy {which!r}; expected one of {HOMOTOPY_IDS}")
        return getattr(self, which)


class _Cells:
    """Shorthand for f_x and g_{x±1/2} on one complex"""

    def __init__(self, complex: CircleComplex):
        self.cx = complex

    def f(self, x: int) -> int:
        return self.cx.vertex(x)

    def g(self, x: int, side: int) -> int:
        """g_{x+1/2} for side=+1, g_{x-1/2} for side=-1"""
        return self.cx.edge(x) if side > 0 else self.cx.edge(x - 1)

    def sites(self) -> Iterator[Tuple[int, int]]:
        for x in range(self.cx.N):
            for side in (1, -1):
                yield x, side


def build_lifts(N: int) -> LiftSet:
    if N < MIN_CELLS:
        raise ArgumentError(f"Lifts need N >= {MIN_CELLS} so radius-1 supports do not wrap, got N={N}")
    cx = CircleComplex(N)
    c = _Cells(cx)

    mult, comult, assoc, coassoc, frob, d_gen, a_gen = ([] for _ in range(7))
    for x in range(N):
        f = c.f(x)
        minus, plus = c.g(x, -1), c.g(x, 1)
        mult.append(((f, f), (f,), Fraction(1)))
        comult.append(((plus,), (plus, plus), Fraction(1)))
        for g in (minus, plus):
            comult.append(((f,), (g, f), HALF))
            comult.append(((f,), (f, g), -HALF))
        for g, s in ((minus, 1), (plus, -1)):
            # δ_x = g_{x-1/2} - g_{x+1/2}
            coassoc.append(((f,), (g, f, f), s * TWELFTH))
            coassoc.append(((f,), (f, g, f), -s * SIXTH))
            coassoc.append(((f,), (f, f, g), s * TWELFTH))
        d_gen.append(((plus, plus), (plus,), -TWELFTH))
        a_gen.append(((f,), (f, f), TWELFTH))
    for x, side in c.sites():
        f, g = c.f(x), c.g(x, side)
        mult.append(((f, g), (g,), HALF))
        mult.append(((g, f), (g,), HALF))
        assoc.append(((g, g, f), (g,), side * TWELFTH))
        assoc.append(((g, f, g), (g,), side * SIXTH))
        assoc.append(((f, g, g), (g,), side * TWELFTH))
        frob.append(((f, g), (f, g), -side * QUARTER))

    lifts = LiftSet(
        mult=Operation.from_items(cx, 2, 1, 0, mult),
        comult=Operation.from_items(cx, 1, 2, 1, comult),
        associator=Operation.from_items(cx, 3, 1, -1, assoc),
        coassociator=Operation.from_items(cx, 1, 3, 1, coassoc),
        frobeniator=Operation.from_items(cx, 2, 2, 0, frob),
        d_gen=Operation.from_items(cx, 2, 1, -1, d_gen),
        a_gen=Operation.from_items(cx, 1, 2, 0, a_gen),
        N=N,
    )
    logger.info(f"Built cellular lifts for N={N}")
    return lifts


def rhs_from_tables(which: str, N: int) -> Operation:
    """The explicit right-hand side each homotopy must bound, as written out entry by entry"""
    if which not in GENERATOR_IDS:
        raise ArgumentError(f"Unknown generator {which!r}; expected one of {GENERATOR_IDS}")
    if N < MIN_CELLS:
        raise ArgumentError(f"Tables need N >= {MIN_CELLS}, got N={N}")
    cx = CircleComplex(N)
    c = _Cells(cx)
    items: List[Entry] = []

    if which == "b_gen":
        return scale(id_op(cx), -TWELFTH)

    for x, side in c.sites():
        f, g = c.f(x), c.g(x, side)
        other = c.g(x, -side)
        neighbour = c.f(x + side)
        if which == "associator":
            items += [
                ((g, f, f), (g,), QUARTER),
                ((f, f, g), (g,), -QUARTER),
                ((g, f, neighbour), (g,), -QUARTER),
                ((f, neighbour, g), (g,), QUARTER),
            ]
        elif which == "coassociator":
            items += [
                ((f,), (g, g, f), -QUARTER),
                ((f,), (g, other, f), QUARTER),
                ((f,), (f, g, g), QUARTER),
                ((f,), (f, g, other), -QUARTER),
            ]
        elif which == "frobeniator":
            items += [
                ((f, f), (f, g), -QUARTER),
                ((f, g), (g, g), QUARTER),
                ((f, g), (other, g), -QUARTER),
                ((f, neighbour), (f, g), QUARTER),
            ]
        elif which == "d_gen":
            items += [
                ((f, g), (g,), side * TWELFTH),
                ((g, f), (g,), -side * TWELFTH),
            ]
        elif which == "a_gen":
            # δ_x ⊗ f_x + f_x ⊗ δ_x with δ_x = g_{x-1/2} - g_{x+1/2}
            s = -side
            items += [
                ((f,), (g, f), s * TWELFTH),
                ((f,), (f, g), s * TWELFTH),
            ]

    signature = {
        "associator": (3, 1, 0),
        "coassociator": (1, 3, 2),
        "frobeniator": (2, 2, 1),
        "d_gen": (2, 1, 0),
        "a_gen": (1, 2, 1),
    }[which]
    return Operation.from_items(cx, *signature, items)


def rhs_from_compositions(which: str, lifts: LiftSet) -> Operation:
    """The derivative of each generator assembled from the lifts by properadic composition"""
    if which not in GENERATOR_IDS:
        raise ArgumentError(f"Unknown generator {which!r}; expected one of {GENERATOR_IDS}")
    m, dl = lifts.mult, lifts.comult

    if which == "associator":
        left = compose(m, m, [(0, 0)])
        right = compose(m, m, [(0, 1)], input_order=[("p", 0), ("q", 0), ("q", 1)])
        return right - left

    if which == "coassociator":
        left = compose(dl, dl, [(0, 0)], output_order=[("p", 0), ("p", 1), ("q", 1)])
        right = compose(dl, dl, [(1, 0)])
        return -(left + right)

    if which == "frobeniator":
        comult_after_mult = compose(dl, m, [(0, 0)])
        zigzag = compose(m, dl, [(1, 0)])
        return comult_after_mult - zigzag

    if which == "d_gen":
        # both legs of the comultiplication (or frobeniator) glued into the upper box; inputs swapped
        swapped = [("p", 2), ("q", 0)]
        assoc_capped = compose(lifts.associator, dl, [(0, 0), (1, 1)], input_order=swapped)
        frob_capped = compose(m, lifts.frobeniator, [(0, 0), (1, 1)], input_order=[("q", 1), ("q", 0)])
        return assoc_capped + frob_capped

    if which == "a_gen":
        coassoc_capped = compose(m, lifts.coassociator, [(1, 0), (2, 1)])
        frob_on_comult = compose(lifts.frobeniator, dl, [(0, 0), (1, 1)])
        return coassoc_capped - frob_on_comult

    d_capped = compose(lifts.d_gen, dl, [(0, 0), (1, 1)])
    a_capped = compose(m, lifts.a_gen, [(0, 0), (1, 1)])
    return d_capped - a_capped + scale(stacked_term(lifts), Fraction(1, 3))


def stacked_term(lifts: LiftSet) -> Operation:
    """Coassociator feeding all three outputs into the associator"""
    return compose(lifts.associator, lifts.coassociator, [(0, 0), (1, 1), (2, 2)])


def verify_homotopy(h: Operation, rhs: Operation) -> bool:
    """True iff [d, h] equals rhs exactly"""
    if h.complex != rhs.complex or (h.m, h.n, h.degree + 1) != rhs.signature():
        logger.warning(f"Homotopy signature {h.signature()} cannot bound a right-hand side of signature {rhs.signature()}")
        return False
    return commutator_with_d(h) == rhs


def first_difference(P: Operation, Q: Operation):
    """The first entry (inputs, outputs, P value, Q value) where two operations disagree"""
    keys = {(i, o) for i, o, _ in P.items()} | {(i, o) for i, o, _ in Q.items()}
    for inp, out in sorted(keys):
        a, b = P.coefficient(inp, out), Q.coefficient(inp, out)
        if a != b:
            return inp, out, a, b
    return None


def b_obstruction(lifts: LiftSet) -> Operation:
    """The genus-two obstruction; asserts it is -1/12·id and acts nontrivially on cohomology"""
    for which in HOMOTOPY_IDS:
        if not verify_homotopy(lifts.homotopy(which), rhs_from_compositions(which, lifts)):
            raise VerificationError(f"Lift {which} does not satisfy its homotopy equation")
    obstruction = rhs_from_compositions("b_gen", lifts)
    expected = scale(id_op(lifts.complex), -TWELFTH)
    diff = first_difference(obstruction, expected)
    if diff is not None:
        inp, out, got, want = diff
        cx = lifts.complex
        entry = f"{'⊗'.join(cx.cell_label(i) for i in inp)} -> {'⊗'.join(cx.cell_label(o) for o in out)}: {got} != {want}"
        raise VerificationError("Obstruction is not -1/12·id", entry=entry)
    if not is_closed(obstruction):
        raise VerificationError("Obstruction is not closed")
    action = cohomology_action_11(obstruction)
    if action != (-TWELFTH, -TWELFTH):
        raise VerificationError("Obstruction acts with the wrong scalars on cohomology", entry=action)
    logger.info(f"Genus-two obstruction for N={lifts.N} acts as {action[0]} on H0 and {action[1]} on H1")
    return obstruction


def _cyclic_sum_vanishes(op: Operation, act) -> bool:
    c = Permutation.cycle(3)
    total = op
    power = c
    for _ in range(2):
        total = total + act(op, power)
        power = c.compose(power)
    return total.is_zero()


def s3_symmetry_check(lifts: LiftSet, associator: Optional[Operation] = None,
                      coassociator: Optional[Operation] = None) -> bool:
    """(1 + c + c²) kills the associator's inputs and the coassociator's outputs"""
    assoc = associator if associator is not None else lifts.associator
    coassoc = coassociator if coassociator is not None else lifts.coassociator
    return _cyclic_sum_vanishes(assoc, permute_inputs) and _cyclic_sum_vanishes(coassoc, permute_outputs)


def translation_invariance_check(lifts: LiftSet) -> bool:
    return all(rotate(op, 1) == op for op in lifts.operations().values())


def lift_radii(lifts: LiftSet) -> Dict[str, int]:
    return {name: int(quasilocality_radius(op)) for name, op in lifts.operations().items()}


def perturb(op: Operation, delta=Fraction(1, 7)) -> Operation:
    """Shift the first stored coefficient; a negative control for the exact checks"""
    items = sorted(op.items())
    if not items:
        raise ArgumentError("Cannot perturb the zero operation")
    inp, out, value = items[0]
    bumped = [(inp, out, value + delta)] + items[1:]
    return Operation.from_items(op.complex, op.m, op.n, op.degree, bumped)
