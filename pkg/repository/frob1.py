"""
Frob1 Symbolic
The one-dimensional components of the Frob1 dioperad, the H(S1) homology model
and the generator bookkeeping of the properadic resolution
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from models.frob1 import Frob1Elem, GenStats, HElem
from repository.exceptions import ArgumentError
from repository.graded import Permutation

logger = logging.getLogger(__name__)


# Frob1 components

def e(m: int, n: int, coeff=1) -> Frob1Elem:
    return Frob1Elem(m=m, n=n, coeff=coeff)


def frob1_compose(a: Frob1Elem, b: Frob1Elem, out_perm: Optional[Permutation] = None,
                  input_slot: int = 0, output_slot: int = 0, edges: int = 1) -> Frob1Elem:
    """
    Plug output `output_slot` of b into input `input_slot` of a.

    The result's standard output order is a's outputs followed by b's remaining outputs.
    Inputs carry the trivial action and outputs the sign action, so reordering
    b's outputs or applying out_perm only contributes a sign.
    """
    if edges < 1:
        raise ArgumentError("Composition needs at least one edge")
    m1, n2 = a.m - edges, b.n - edges
    if m1 < 0 or n2 < 0:
        raise ArgumentError(f"Cannot join e_{{{a.m},{a.n}}} to e_{{{b.m},{b.n}}} along {edges} edges")
    if not 0 <= input_slot < a.m or not 0 <= output_slot < b.n:
        raise ArgumentError(f"Slots ({input_slot}, {output_slot}) out of range")
    m, n = m1 + b.m, a.n + n2
    if out_perm is not None and out_perm.size != n:
        raise ArgumentError(f"Output permutation of size {out_perm.size} for {n} outputs")
    if edges > 1:
        # genus-raising compositions vanish in Frob1
        return Frob1Elem(m=m, n=n, coeff=0)
    sign = -1 if output_slot % 2 else 1
    if out_perm is not None:
        sign *= out_perm.sign()
    return Frob1Elem(m=m, n=n, coeff=a.coeff * b.coeff * sign)


def interleave_permutation(n1: int, n2: int) -> Permutation:
    """Output order with the top vertex's n1 outputs placed just before the bottom vertex's last output"""
    if n1 < 1 or n2 < 1:
        raise ArgumentError("interleave_permutation needs n1, n2 >= 1")
    # blocks [A: n1][B: n2-1][c: 1] -> [B][A][c]
    images = [n2 - 1 + i for i in range(n1)] + list(range(n2 - 1)) + [n1 + n2 - 1]
    return Permutation(images)


class GraphShape(str, Enum):
    CHAIN = "chain"   # c feeds b feeds a
    MERGE = "merge"   # b and c both feed a
    SPLIT = "split"   # a feeds both b and c


def _koszul(x: Frob1Elem, y: Frob1Elem) -> int:
    return -1 if (x.degree * y.degree) % 2 else 1


Leg = Tuple[str, int]
Node = Tuple[Frob1Elem, List[Leg]]
Composer = Callable[..., Frob1Elem]


def _vertex(name: str, x: Frob1Elem) -> Node:
    return x, [(name, i) for i in range(x.n)]


def _attach(top: Node, bottom: Node, leg: Leg, compose: Composer) -> Node:
    """Plug the output `leg` of bottom into top; the legs follow the composite's output order"""
    (x, x_legs), (y, y_legs) = top, bottom
    z = compose(x, y, output_slot=y_legs.index(leg))
    return z, x_legs + [other for other in y_legs if other != leg]


def _canonical_coeff(node: Node) -> Fraction:
    """Coefficient once the outputs are sorted by vertex and leg, using the sign action on outputs"""
    z, legs = node
    order = sorted(range(len(legs)), key=lambda i: legs[i])
    images = [0] * len(legs)
    for position, i in enumerate(order):
        images[i] = position
    return z.coeff * Permutation(images).sign()


def frob1_associativity_check(triple: Tuple[Frob1Elem, Frob1Elem, Frob1Elem], shape: GraphShape,
                              slots: Tuple[int, int] = (0, 0), compose: Composer = frob1_compose) -> bool:
    """
    Compose a three-vertex dioperadic graph in both possible orders and compare.

    slots names the output legs used by the two lower vertices (CHAIN: b's leg into a,
    c's leg into b; MERGE: b's leg, c's leg; SPLIT: the two legs of a feeding b and c).
    Each order tracks where every output leg ends up; both results are read in the
    canonical leg order, and attaching b and c in the opposite order costs their Koszul sign.
    """
    a, b, c = triple
    s1, s2 = slots
    shape = GraphShape(shape)
    A, B, C = _vertex("a", a), _vertex("b", b), _vertex("c", c)

    if shape == GraphShape.CHAIN:
        if b.m < 1 or s1 >= b.n or s2 >= c.n:
            raise ArgumentError("Invalid chain shape")
        first = _attach(_attach(A, B, ("b", s1), compose), C, ("c", s2), compose)
        second = _attach(A, _attach(B, C, ("c", s2), compose), ("b", s1), compose)
        sign = 1
    elif shape == GraphShape.MERGE:
        if a.m < 2 or s1 >= b.n or s2 >= c.n:
            raise ArgumentError("Invalid merge shape: the top vertex needs two inputs")
        first = _attach(_attach(A, B, ("b", s1), compose), C, ("c", s2), compose)
        second = _attach(_attach(A, C, ("c", s2), compose), B, ("b", s1), compose)
        sign = _koszul(b, c)
    elif shape == GraphShape.SPLIT:
        if a.n < 2 or s1 == s2 or not (0 <= s1 < a.n and 0 <= s2 < a.n) or b.m < 1 or c.m < 1:
            raise ArgumentError("Invalid split shape: the bottom vertex needs two distinct outputs")
        first = _attach(C, _attach(B, A, ("a", s1), compose), ("a", s2), compose)
        second = _attach(B, _attach(C, A, ("a", s2), compose), ("a", s1), compose)
        sign = _koszul(b, c)
    else:
        raise ArgumentError(f"Unknown graph shape {shape}")

    (x, _), (y, _) = first, second
    return (x.m, x.n) == (y.m, y.n) and _canonical_coeff(first) == sign * _canonical_coeff(second)


def associativity_sweep(max_total: int = 8, compose: Composer = frob1_compose) -> Tuple[int, List[str]]:
    """Check every three-vertex shape whose vertices have total arity <= max_total"""
    arities = [(m, n) for m in range(1, max_total) for n in range(1, max_total) if m + n <= max_total - 4]
    checked, failures = 0, []
    for ma, na in arities:
        for mb, nb in arities:
            for mc, nc in arities:
                if ma + na + mb + nb + mc + nc > max_total:
                    continue
                triple = (e(ma, na), e(mb, nb), e(mc, nc))
                for shape in GraphShape:
                    for slots in _slot_choices(shape, triple):
                        try:
                            ok = frob1_associativity_check(triple, shape, slots, compose)
                        except ArgumentError:
                            continue
                        checked += 1
                        if not ok:
                            failures.append(f"{shape.value} {[(x.m, x.n) for x in triple]} slots={slots}")
    logger.info(f"Frob1 associativity sweep: {checked} shapes, {len(failures)} failures")
    return checked, failures


def _slot_choices(shape: GraphShape, triple) -> List[Tuple[int, int]]:
    a, b, c = triple
    if shape == GraphShape.SPLIT:
        return [(i, j) for i in range(a.n) for j in range(a.n) if i != j]
    return [(i, j) for i in range(b.n) for j in range(c.n)]


# Homology model H(S1)

ONE, OMEGA = "1", "ω"
H_DEGREE = {ONE: 0, OMEGA: 1}
HTensor = Dict[Tuple[str, ...], Fraction]

_MULT = {(ONE, ONE): ONE, (ONE, OMEGA): OMEGA, (OMEGA, ONE): OMEGA}
_COMULT: Dict[str, HTensor] = {
    OMEGA: {(OMEGA, OMEGA): Fraction(1)},
    ONE: {(ONE, OMEGA): Fraction(-1), (OMEGA, ONE): Fraction(1)},
}
# degree of each structure map
_OP_DEGREE = {"mult": 0, "comult": 1}


def h_basis(label: str) -> HElem:
    return HElem(c1=1) if label == ONE else HElem(cw=1)


def _components(a: HElem) -> List[Tuple[str, Fraction]]:
    return [(label, coeff) for label, coeff in ((ONE, a.c1), (OMEGA, a.cw)) if coeff]


def h_mult(a: HElem, b: HElem) -> HElem:
    c1 = a.c1 * b.c1
    cw = a.c1 * b.cw + a.cw * b.c1
    return HElem(c1=c1, cw=cw)


def h_comult(a: HElem) -> HTensor:
    out: HTensor = {}
    for label, coeff in _components(a):
        for key, value in _COMULT[label].items():
            out[key] = out.get(key, 0) + coeff * value
    return {k: v for k, v in out.items() if v}


def h_tensor(*elems: HElem) -> HTensor:
    tensor: HTensor = {(): Fraction(1)}
    for x in elems:
        tensor = {key + (label,): coeff * c for key, coeff in tensor.items() for label, c in _components(x)}
    return {k: v for k, v in tensor.items() if v}


def h_apply_at(tensor: HTensor, op: str, position: int) -> HTensor:
    """Apply mult (consuming two factors) or comult at a tensor position, with the Koszul sign"""
    if op not in _OP_DEGREE:
        raise ArgumentError(f"Unknown structure map {op!r}")
    out: HTensor = {}
    for key, coeff in tensor.items():
        width = 2 if op == "mult" else 1
        if position < 0 or position + width > len(key):
            raise ArgumentError(f"Position {position} out of range for a {len(key)}-fold tensor")
        passed = sum(H_DEGREE[label] for label in key[:position])
        sign = -1 if (_OP_DEGREE[op] * passed) % 2 else 1
        head, tail = key[:position], key[position + width:]
        if op == "mult":
            product = _MULT.get(key[position:position + 2])
            if product is None:
                continue
            images = {(product,): Fraction(1)}
        else:
            images = _COMULT[key[position]]
        for middle, value in images.items():
            new_key = head + middle + tail
            out[new_key] = out.get(new_key, 0) + sign * coeff * value
    return {k: v for k, v in out.items() if v}


def coassociativity_sides(a: HElem) -> Tuple[HTensor, HTensor]:
    """((Δ⊗id)∘Δ)(a) and ((id⊗Δ)∘Δ)(a)"""
    once = h_comult(a)
    return h_apply_at(once, "comult", 0), h_apply_at(once, "comult", 1)


def frobenius_sides(a: HElem, b: HElem) -> Tuple[HTensor, HTensor, HTensor]:
    """Δ∘mult, (id⊗mult)∘(Δ⊗id) and (mult⊗id)∘(id⊗Δ) evaluated on a⊗b"""
    ab = h_tensor(a, b)
    left = h_comult(h_mult(a, b))
    right = h_apply_at(h_apply_at(ab, "comult", 0), "mult", 1)
    other = h_apply_at(h_apply_at(ab, "comult", 1), "mult", 0)
    return left, right, other


def format_htensor(tensor: HTensor) -> str:
    if not tensor:
        return "0"
    terms = []
    for key, coeff in sorted(tensor.items()):
        word = "⊗".join(key)
        terms.append(word if coeff == 1 else f"-{word}" if coeff == -1 else f"{coeff}·{word}")
    return " + ".join(terms).replace("+ -", "- ")


# Generator bookkeeping

GENERATOR_NAMES = {
    (2, 1, 0): "mult",
    (1, 2, 0): "comult",
    (3, 1, 0): "associator",
    (1, 3, 0): "coassociator",
    (2, 2, 0): "frobeniator",
    (2, 1, 1): "D",
    (1, 2, 1): "A",
    (1, 1, 2): "B",
}


def generator_stats(m: int, n: int, beta: int) -> GenStats:
    if m < 1 or n < 1 or beta < 0:
        raise ArgumentError(f"Inadmissible generator (m={m}, n={n}, beta={beta})")
    n_mult, n_comult = beta + m - 1, beta + n - 1
    if n_mult < 0 or n_comult < 0 or n_mult + n_comult == 0:
        raise ArgumentError(f"(m={m}, n={n}, beta={beta}) is not built from any vertices")
    return GenStats(m=m, n=n, beta=beta, n_mult=n_mult, n_comult=n_comult,
                    coh_degree=2 - (beta + m), name=GENERATOR_NAMES.get((m, n, beta)))


def low_weight_generators(max_total: int = 4) -> List[GenStats]:
    """Generators with m+n+beta <= max_total; genus-one (1,1) vanishes since its only graph is zero"""
    out = []
    for total in range(2, max_total + 1):
        for beta in range(0, total - 1):
            for m in range(1, total - beta):
                n = total - beta - m
                if n < 1 or ((m, n) == (1, 1) and beta <= 1):
                    continue
                out.append(generator_stats(m, n, beta))
    return out


def obstruction_possible(stats: GenStats) -> bool:
    """qloc(m,n) has cohomology in degrees n-1 and n, so an obstruction in degree coh_degree+1 can survive"""
    return stats.coh_degree + 1 in (stats.n - 1, stats.n)


def choice_possible(stats: GenStats) -> bool:
    return stats.coh_degree in (stats.n - 1, stats.n)


def _graph_degree(stats: GenStats) -> int:
    """Degree read off the graph: one per comultiplication vertex, minus one per internal edge of a tree"""
    return stats.n_comult - (stats.n_mult + stats.n_comult - 1)


def degree_argument(max_total: int = 7) -> Tuple[Dict[int, Dict[str, int]], List[str]]:
    """
    Sweep generators up to m+n+beta = max_total and tabulate, per total, how many
    can carry an obstruction or an inequivalent choice.

    Obstructions need m+n+beta in {3, 4} and choices need {2, 3}; any generator
    breaking that, or whose graph degree disagrees with 2-(beta+m), is reported.
    """
    table: Dict[int, Dict[str, int]] = {}
    failures: List[str] = []
    for stats in low_weight_generators(max_total):
        total = stats.m + stats.n + stats.beta
        row = table.setdefault(total, {"generators": 0, "obstructable": 0, "choices": 0, "genus0": 0})
        row["generators"] += 1
        row["obstructable"] += obstruction_possible(stats)
        row["choices"] += choice_possible(stats)
        row["genus0"] += stats.beta == 0
        label = f"({stats.m},{stats.n},β={stats.beta})"
        if _graph_degree(stats) != stats.coh_degree:
            failures.append(f"{label}: graph degree {_graph_degree(stats)} != {stats.coh_degree}")
        if obstruction_possible(stats) != (total in (3, 4)):
            failures.append(f"{label}: obstruction possible at total {total}")
        if choice_possible(stats) != (total in (2, 3)):
            failures.append(f"{label}: choice possible at total {total}")
    logger.info(f"Degree argument up to total {max_total}: {len(failures)} failures")
    return table, failures
