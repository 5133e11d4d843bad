"""
Verification Suites
Runs each group of checks and collects the outcomes into reports
"""

import logging
import random
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import config
from models.frob1 import HElem
from models.report import CheckRecord, Report, RunSummary
from repository import derham
from repository.circle_complex import CircleComplex
from repository.frob1 import (
    OMEGA,
    ONE,
    HTensor,
    associativity_sweep,
    coassociativity_sides,
    degree_argument,
    e,
    format_htensor,
    frob1_compose,
    frobenius_sides,
    generator_stats,
    h_basis,
    h_comult,
    h_mult,
    interleave_permutation,
    low_weight_generators,
    obstruction_possible,
)
from repository.graded import Permutation, koszul_sign
from repository.lifts import (
    HOMOTOPY_IDS,
    MIN_CELLS,
    b_obstruction,
    build_lifts,
    lift_radii,
    perturb,
    rhs_from_compositions,
    rhs_from_tables,
    s3_symmetry_check,
    stacked_term,
    translation_invariance_check,
    verify_homotopy,
)
from repository.operations import (
    Operation,
    cohomology_action_11,
    commutator_with_d,
    compose,
    permute_inputs,
    permute_outputs,
    quasilocality_radius,
    zero_op,
)
from repository.qloc import breakdown_cutoff, cohomology_dims, d_squared_check, expected_dims
from repository.sampling import random_operation

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, Any]

DISCRETE_SIZES = range(MIN_CELLS, 11)
LEDGER_CELLS = 12
EPSILON_SWEEP = (0.05, 0.1, 0.2)
BREAKDOWN_CELLS = 6
QLOC_CELLS = 12
QLOC_ARITIES = ((1, 1), (2, 1), (1, 2), (2, 2))
QLOC_RADII = (1, 2)
DEGREE_SWEEP_TOTAL = 7

# Signed expansions of the homology-model example, keyed by input
_COASSOC_TABLE: Dict[str, Tuple[HTensor, HTensor]] = {
    # ((Δ⊗id)Δ, (id⊗Δ)Δ)
    OMEGA: ({(OMEGA, OMEGA, OMEGA): Fraction(1)}, {(OMEGA, OMEGA, OMEGA): Fraction(-1)}),
    ONE: (
        {(ONE, OMEGA, OMEGA): Fraction(1), (OMEGA, ONE, OMEGA): Fraction(-1), (OMEGA, OMEGA, ONE): Fraction(1)},
        {(ONE, OMEGA, OMEGA): Fraction(-1), (OMEGA, ONE, OMEGA): Fraction(1), (OMEGA, OMEGA, ONE): Fraction(-1)},
    ),
}
_FROBENIUS_TABLE: Dict[Tuple[str, str], HTensor] = {
    (ONE, ONE): {(ONE, OMEGA): Fraction(-1), (OMEGA, ONE): Fraction(1)},
    (ONE, OMEGA): {(OMEGA, OMEGA): Fraction(1)},
    (OMEGA, ONE): {(OMEGA, OMEGA): Fraction(1)},
    (OMEGA, OMEGA): {},
}


def _close(actual: float, expected: float, tol: float) -> CheckResult:
    return abs(actual - expected) <= tol, f"{actual:.12g}"


class VerificationRunner:
    def __init__(self, cells: int = config.DEFAULT_CELLS, ell: int = config.DEFAULT_ELL,
                 epsilon: float = config.DEFAULT_EPSILON, step_div: int = config.DEFAULT_STEP_DIV,
                 seed: int = config.DEFAULT_SEED, property_cases: int = config.PROPERTY_CASES,
                 random_pairs: int = config.RANDOM_PAIRS):
        """Initialize the runner with the run parameters"""
        self.cells = cells
        self.ell = ell
        self.epsilon = epsilon
        self.step_div = step_div
        self.seed = seed
        self.property_cases = property_cases
        self.random_pairs = random_pairs

    def _check(self, report: Report, name: str, fn: Callable[[], CheckResult],
               expected: Any = None, tolerance: Optional[float] = None) -> CheckRecord:
        expected_text = None if expected is None else str(expected)
        try:
            passed, actual = fn()
            record = CheckRecord(name=name, expected=expected_text, actual=str(actual),
                                 tolerance=tolerance, passed=bool(passed))
        except Exception as e:
            logger.error(f"Check {name} raised: {e}")
            record = CheckRecord(name=name, expected=expected_text, tolerance=tolerance, passed=False, error=str(e))
        if not record.passed:
            logger.warning(f"Check failed: {record.to_text()}")
        report.checks.append(record)
        return record

    def _finish(self, report: Report, started: float) -> Report:
        report.duration_seconds = time.perf_counter() - started
        logger.info(f"Suite {report.suite} finished: {len(report.checks)} checks, "
                    f"{len(report.failing())} failing, {report.duration_seconds:.2f}s")
        return report

    # Discrete cellular model

    def verify_discrete(self) -> Report:
        started = time.perf_counter()
        sizes = sorted(set(DISCRETE_SIZES) | {self.cells})
        report = Report(suite="verify-discrete",
                        parameters={"cells": sizes, "seed": self.seed, "cases": self.property_cases})
        for N in sizes:
            self._discrete_at(report, N)
        self._properties(report)
        self._radius_ledger(report)
        return self._finish(report, started)

    def _discrete_at(self, report: Report, N: int) -> None:
        try:
            lifts = build_lifts(N)
        except Exception as e:
            logger.error(f"Could not build lifts for N={N}: {e}")
            report.checks.append(CheckRecord(name=f"N={N} build lifts", passed=False, error=str(e)))
            return

        radii = lift_radii(lifts)
        self._check(report, f"N={N} mult/comult radius",
                    lambda: (radii["mult"] == 0 and radii["comult"] == 0, (radii["mult"], radii["comult"])),
                    expected=(0, 0))
        self._check(report, f"N={N} homotopy radii",
                    lambda: (max(radii.values()) <= 1, max(radii.values())), expected="<= 1")

        for which in HOMOTOPY_IDS:
            table = rhs_from_tables(which, N)
            self._check(report, f"N={N} D({which}) == table",
                        lambda w=which, t=table: (verify_homotopy(lifts.homotopy(w), t), "equal"),
                        expected="equal")
            self._check(report, f"N={N} table == compositions for {which}",
                        lambda w=which, t=table: (rhs_from_compositions(w, lifts) == t, "equal"),
                        expected="equal")
        self._check(report, f"N={N} obstruction table == compositions",
                    lambda: (rhs_from_compositions("b_gen", lifts) == rhs_from_tables("b_gen", N), "equal"),
                    expected="equal")
        self._check(report, f"N={N} stacked term vanishes",
                    lambda: (stacked_term(lifts).is_zero(), stacked_term(lifts)), expected="zero")
        self._check(report, f"N={N} D(d_gen) has no g⊗g entries",
                    lambda: self._no_odd_pairs(rhs_from_compositions("d_gen", lifts)), expected="none")
        self._check(report, f"N={N} S3 symmetry",
                    lambda: (s3_symmetry_check(lifts), "cyclic sums vanish"), expected="cyclic sums vanish")
        self._check(report, f"N={N} perturbed associator breaks S3 symmetry",
                    lambda: (not s3_symmetry_check(lifts, associator=perturb(lifts.associator)), "rejected"),
                    expected="rejected")
        self._check(report, f"N={N} associator does not bound zero",
                    lambda: (not verify_homotopy(lifts.associator, zero_op(lifts.complex, 3, 1, 0)), "rejected"),
                    expected="rejected")
        self._check(report, f"N={N} translation invariance",
                    lambda: (translation_invariance_check(lifts), "invariant"), expected="invariant")

        def obstruction_action() -> CheckResult:
            action = cohomology_action_11(b_obstruction(lifts))
            return action == (Fraction(-1, 12), Fraction(-1, 12)), action
        self._check(report, f"N={N} obstruction action on H0, H1", obstruction_action,
                    expected=(Fraction(-1, 12), Fraction(-1, 12)))

    @staticmethod
    def _no_odd_pairs(op: Operation) -> CheckResult:
        hits = [(inp, out) for inp, out, _ in op.items() if all(c & 1 for c in inp)]
        return not hits, hits[:3] if hits else "none"

    def _properties(self, report: Report) -> None:
        rng = random.Random(self.seed)
        cx = CircleComplex(max(self.cells, MIN_CELLS))
        cases = self.property_cases

        def d_squared() -> CheckResult:
            for _ in range(cases):
                m, n = rng.randint(1, 3), rng.randint(1, 3)
                P = random_operation(cx, m, n, rng.randint(-m, n), rng)
                if not commutator_with_d(commutator_with_d(P)).is_zero():
                    return False, P.describe()
            return True, f"{cases} cases"

        def leibniz() -> CheckResult:
            for _ in range(cases):
                pm, pn, qm, qn = rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 3)
                P = random_operation(cx, pm, pn, rng.randint(-pm, pn), rng, entries=6)
                Q = random_operation(cx, qm, qn, rng.randint(-qm, qn), rng, entries=6)
                matching = [(rng.randrange(Q.n), rng.randrange(P.m))]
                lhs = commutator_with_d(compose(P, Q, matching))
                sign = -1 if P.degree % 2 else 1
                rhs = compose(commutator_with_d(P), Q, matching) + compose(P, commutator_with_d(Q), matching) * sign
                if lhs != rhs:
                    return False, f"P={P!r}, Q={Q!r}, matching={matching}"
            return True, f"{cases} cases"

        def group_action() -> CheckResult:
            for _ in range(cases):
                m, n = rng.randint(1, 4), rng.randint(1, 4)
                P = random_operation(cx, m, n, rng.randint(-m, n), rng)
                s1, t1 = self._random_perm(rng, m), self._random_perm(rng, m)
                s2, t2 = self._random_perm(rng, n), self._random_perm(rng, n)
                if permute_inputs(permute_inputs(P, t1), s1) != permute_inputs(P, s1.compose(t1)):
                    return False, f"inputs {s1} ∘ {t1} on {P!r}"
                if permute_outputs(permute_outputs(P, t2), s2) != permute_outputs(P, s2.compose(t2)):
                    return False, f"outputs {s2} ∘ {t2} on {P!r}"
                if permute_inputs(commutator_with_d(P), s1) != commutator_with_d(permute_inputs(P, s1)):
                    return False, f"D does not commute with {s1} on {P!r}"
            return True, f"{cases} cases"

        def koszul_multiplicative() -> CheckResult:
            for _ in range(cases):
                k = rng.randint(1, 6)
                sigma, tau = self._random_perm(rng, k), self._random_perm(rng, k)
                degrees = [rng.randint(0, 1) for _ in range(k)]
                whole = koszul_sign(sigma.compose(tau), degrees)
                staged = koszul_sign(tau, degrees) * koszul_sign(sigma, tau.apply(degrees))
                if whole != staged:
                    return False, f"{sigma} ∘ {tau} on {degrees}"
            return True, f"{cases} cases"

        self._check(report, "D² = 0 on random operations", d_squared, expected="0")
        self._check(report, "Leibniz rule for composition", leibniz, expected="D(P∘Q) = DP∘Q ± P∘DQ")
        self._check(report, "permutation group action", group_action, expected="action laws")
        self._check(report, "koszul_sign multiplicativity", koszul_multiplicative, expected="cocycle")

    @staticmethod
    def _random_perm(rng: random.Random, k: int) -> Permutation:
        images = list(range(k))
        rng.shuffle(images)
        return Permutation(images)

    def _radius_ledger(self, report: Report) -> None:
        rng = random.Random(self.seed + 1)
        cx = CircleComplex(LEDGER_CELLS)

        def ledger() -> CheckResult:
            worst = 0
            for _ in range(self.random_pairs):
                operadic = rng.random() < 0.5
                if operadic:
                    # Q's single output feeds P
                    Q = random_operation(cx, rng.randint(1, 2), 1, rng.randint(-1, 1), rng, entries=6, window=2)
                    P = random_operation(cx, rng.randint(1, 3), rng.randint(1, 2), 0, rng, entries=6, window=2)
                    matching = [(0, rng.randrange(P.m))]
                else:
                    # P's single input is fed by Q
                    Q = random_operation(cx, rng.randint(1, 2), rng.randint(1, 3), 0, rng, entries=6, window=2)
                    P = random_operation(cx, 1, rng.randint(1, 2), 0, rng, entries=6, window=2)
                    matching = [(rng.randrange(Q.n), 0)]
                composite = compose(P, Q, matching)
                bound = int(quasilocality_radius(P)) + int(quasilocality_radius(Q)) + 1
                radius = int(quasilocality_radius(composite))
                worst = max(worst, radius - bound)
                if radius > bound:
                    return False, f"radius {radius} > {bound} for P={P!r}, Q={Q!r}"
            return True, f"{self.random_pairs} pairs, max slack {-worst}"

        def general_shapes() -> CheckResult:
            for _ in range(self.random_pairs):
                Q = random_operation(cx, rng.randint(1, 2), rng.randint(1, 2), 0, rng, entries=6, window=2)
                P = random_operation(cx, rng.randint(1, 2), rng.randint(1, 2), 0, rng, entries=6, window=2)
                matching = [(rng.randrange(Q.n), rng.randrange(P.m))]
                bound = 2 * (int(quasilocality_radius(P)) + int(quasilocality_radius(Q)) + 2)
                radius = quasilocality_radius(compose(P, Q, matching))
                if not radius.within(bound):
                    return False, f"radius {radius} > {bound} for P={P!r}, Q={Q!r}"
            return True, f"{self.random_pairs} pairs"

        self._check(report, f"radius subadditivity, operadic shapes (N={LEDGER_CELLS})", ledger,
                    expected="r(P∘Q) <= r(P)+r(Q)+1")
        self._check(report, f"radius bound, general single-edge shapes (N={LEDGER_CELLS})", general_shapes,
                    expected="r(P∘Q) <= 2(r(P)+r(Q)+2)")

    # Homology model and Frob1

    def verify_homology_model(self) -> Report:
        started = time.perf_counter()
        report = Report(suite="verify-homology-model")
        one, omega = h_basis(ONE), h_basis(OMEGA)
        products = {(ONE, ONE): one, (ONE, OMEGA): omega, (OMEGA, ONE): omega, (OMEGA, OMEGA): HElem()}
        for (a, b), want in products.items():
            self._check(report, f"{a}·{b}",
                        lambda a=a, b=b, want=want: (h_mult(h_basis(a), h_basis(b)) == want,
                                                      h_mult(h_basis(a), h_basis(b))),
                        expected=want)
        self._check(report, "Δ(1)", lambda: (h_comult(one) == _FROBENIUS_TABLE[(ONE, ONE)],
                                             format_htensor(h_comult(one))),
                    expected=format_htensor(_FROBENIUS_TABLE[(ONE, ONE)]))

        for label, (left_want, right_want) in _COASSOC_TABLE.items():
            def coassoc(label=label, left_want=left_want, right_want=right_want) -> CheckResult:
                left, right = coassociativity_sides(h_basis(label))
                return left == left_want and right == right_want, f"{format_htensor(left)} | {format_htensor(right)}"
            self._check(report, f"coassociativity expansions on {label}", coassoc,
                        expected=f"{format_htensor(left_want)} | {format_htensor(right_want)}")

        for (a, b), want in _FROBENIUS_TABLE.items():
            def frobenius(a=a, b=b, want=want) -> CheckResult:
                sides = frobenius_sides(h_basis(a), h_basis(b))
                return all(side == want for side in sides), " | ".join(format_htensor(s) for s in sides)
            self._check(report, f"Frobenius relation on {a}⊗{b}", frobenius, expected=format_htensor(want))
        return self._finish(report, started)

    def verify_frob1(self) -> Report:
        started = time.perf_counter()
        report = Report(suite="verify-frob1")
        self._check(report, "standard wiring of e_{2,1} into e_{1,2}",
                    lambda: (frob1_compose(e(1, 2), e(2, 1)) == e(2, 2), frob1_compose(e(1, 2), e(2, 1)).coeff),
                    expected=1)

        def interleave_signs() -> CheckResult:
            bad = []
            for n1 in range(1, 5):
                for n2 in range(1, 5):
                    got = frob1_compose(e(2, n1), e(1, n2 + 1), out_perm=interleave_permutation(n1, n2)).coeff
                    if got != (-1) ** (n1 * (n2 - 1)):
                        bad.append((n1, n2, got))
            return not bad, bad or "all 16 signs match"
        self._check(report, "interleaving sign (-1)^{n1(n2-1)}", interleave_signs, expected="all 16 signs match")
        self._check(report, "two-edge composition vanishes",
                    lambda: (frob1_compose(e(2, 1), e(1, 2), edges=2).is_zero(), "0"), expected="0")

        def sweep() -> CheckResult:
            checked, failures = associativity_sweep(8)
            return checked > 0 and not failures, f"{checked} shapes, failures {failures[:3]}"
        self._check(report, "dioperadic associativity, total arity <= 8", sweep, expected="no failures")

        for (m, n, beta), want in {(1, 1, 2): (2, 2, -1), (2, 1, 0): (1, 0, 0), (1, 2, 1): (1, 2, 0)}.items():
            def stats(m=m, n=n, beta=beta, want=want) -> CheckResult:
                s = generator_stats(m, n, beta)
                got = (s.n_mult, s.n_comult, s.coh_degree)
                return got == want, got
            self._check(report, f"generator stats ({m},{n},β={beta})", stats, expected=want)

        def generators() -> CheckResult:
            gens = low_weight_generators()
            names = sorted(g.name or "?" for g in gens)
            obstructed = sorted(g.name or "?" for g in gens if obstruction_possible(g))
            return len(gens) == 8 and "?" not in names and "B" in obstructed, f"{names}; obstructable {obstructed}"
        self._check(report, "low-weight generators", generators, expected="8 named generators, B obstructable")

        def degrees() -> CheckResult:
            table, failures = degree_argument(DEGREE_SWEEP_TOTAL)
            obstructable = {total: row["obstructable"] for total, row in sorted(table.items())}
            tower_free = all(row["obstructable"] == 0 for total, row in table.items() if total >= 5)
            return not failures and tower_free, f"obstructable per m+n+β {obstructable}; failures {failures[:3]}"
        self._check(report, f"degree argument up to m+n+β = {DEGREE_SWEEP_TOTAL}", degrees,
                    expected="obstructions only at 3, 4; choices only at 2, 3; unobstructed beyond 4")
        return self._finish(report, started)

    # Quasilocal cohomology

    def qloc_dims(self, m: int = 1, n: int = 1, cells: Optional[int] = None, ell: Optional[int] = None,
                  breakdown: bool = True) -> Report:
        started = time.perf_counter()
        N = cells if cells is not None else self.cells
        ell = ell if ell is not None else self.ell
        report = Report(suite="qloc-dims", parameters={"cells": N, "m": m, "n": n, "ell": ell})
        want = {p: d for p, d in expected_dims(m, n).items() if d}

        def dims() -> CheckResult:
            got = cohomology_dims(N, m, n, ell)
            nonzero = {p: d for p, d in got.items() if d}
            return nonzero == want, nonzero
        self._check(report, f"H qloc_{ell}({m},{n}) on N={N}", dims, expected=want)

        for p in range(-m, n):
            self._check(report, f"d² = 0 in degree {p}",
                        lambda p=p: (d_squared_check(N, m, n, ell, p), "zero"), expected="zero")

        if breakdown and m + n <= 3:
            def cutoff() -> CheckResult:
                found = breakdown_cutoff(BREAKDOWN_CELLS, m, n)
                return found is not None, found
            self._check(report, f"breakdown cutoff observed on N={BREAKDOWN_CELLS}", cutoff, expected="some l <= N")
        return self._finish(report, started)

    # Smooth model

    def verify_derham(self) -> Report:
        started = time.perf_counter()
        eps, K = self.epsilon, self.step_div
        report = Report(suite="verify-derham", parameters={"epsilon": eps, "step_div": K})
        values: Dict[str, float] = {}

        def evaluate() -> CheckResult:
            values.update(derham.evaluate_all(eps, K))
            return True, f"{len(values)} quantities"
        if not self._check(report, "evaluate smooth integrals", evaluate).passed:
            return self._finish(report, started)

        for key, want, tol in (
            ("mass", 1.0, 1e-12),
            ("m1", 0.5, 1e-8),
            ("m2", 1.0 / 3.0, 1e-8),
            ("A0", 1.0, 1e-8),
            ("B", -0.5, 1e-8),
            ("C0_residual", 0.0, 1e-8),
            ("total", 0.0, 1e-6),
            ("half", -1.0 / 12.0, 1e-6),
            ("direct_half", -1.0 / 12.0, 1e-4),
            ("direct_total", 0.0, 1e-4),
        ):
            self._check(report, key, lambda k=key, w=want, t=tol: _close(values[k], w, t),
                        expected=f"{want:.12g}", tolerance=tol)
        self._check(report, "reduced and direct half-plane agree",
                    lambda: _close(values["direct_half"], values["half"], 1e-4), tolerance=1e-4)

        grid = derham.make_grid(eps, K)
        phi = derham.bump_profile(eps, grid)
        F = derham.primitive(phi)
        self._check(report, "F - Θ supported in (-ε, ε)", lambda: (derham.theta_support_check(F, eps), "supported"),
                    expected="supported", tolerance=1e-12)

        def c_residuals() -> CheckResult:
            worst = 0.0
            for j in (-2, -1, 0, 1, 2):
                y = grid.points[grid.mid + j * (K // 4)]
                _, _, C = derham.u_integrals(y, phi, F, eps)
                worst = max(worst, abs(C + 1.0 - F.values[grid.index_of(y)]))
            return worst <= 1e-8, f"{worst:.3e}"
        self._check(report, "C(y) + (1 - F(y)) at five points", c_residuals, expected="0", tolerance=1e-8)

        def sweep() -> CheckResult:
            halves = {}
            for e_ in EPSILON_SWEEP:
                for shape in derham.BUMP_SHAPES:
                    g = derham.make_grid(e_, K)
                    p = derham.bump_profile(e_, g, shape)
                    halves[(e_, shape)] = derham.mu_total_and_halfplane(p, derham.primitive(p), e_)[1]
            spread = max(halves.values()) - min(halves.values())
            return spread <= 1e-5 and abs(halves[(EPSILON_SWEEP[0], "mollifier")] + 1.0 / 12.0) <= 1e-6, f"spread {spread:.3e}"
        self._check(report, "independent of ε and bump shape", sweep, expected="spread <= 1e-05", tolerance=1e-5)

        def convergence() -> CheckResult:
            changes = derham.convergence_check(eps, K)
            worst = max(changes, key=changes.get)
            return changes[worst] <= 1e-4, f"largest change {changes[worst]:.3e} in {worst}"
        self._check(report, "stable under halving h", convergence, expected="changes <= 1e-4", tolerance=1e-4)
        return self._finish(report, started)

    # Obstruction

    def obstruction(self) -> Report:
        started = time.perf_counter()
        N = self.cells
        report = Report(suite="obstruction", parameters={"cells": N})
        state: Dict[str, Operation] = {}

        def compute() -> CheckResult:
            state["b"] = b_obstruction(build_lifts(N))
            return True, state["b"]
        if not self._check(report, "b_obstruction = -1/12·id", compute, expected="-1/12·id").passed:
            return self._finish(report, started)

        b = state["b"]
        cx = b.complex
        f0, g0 = cx.vertex(0), cx.edge(0)
        twelfth = Fraction(-1, 12)
        self._check(report, "entry f_0", lambda: (b.coefficient((f0,), (f0,)) == twelfth, b.coefficient((f0,), (f0,))),
                    expected=twelfth)
        self._check(report, "entry g_1/2", lambda: (b.coefficient((g0,), (g0,)) == twelfth, b.coefficient((g0,), (g0,))),
                    expected=twelfth)
        action = cohomology_action_11(b)
        self._check(report, "h0", lambda: (action[0] == twelfth, action[0]), expected=twelfth)
        self._check(report, "h1", lambda: (action[1] == twelfth, action[1]), expected=twelfth)
        self._check(report, "not exact (nonzero on cohomology)",
                    lambda: (action != (0, 0), "nonzero"), expected="nonzero")
        return self._finish(report, started)

    # Everything

    def run_all(self, fail_fast: bool = False) -> RunSummary:
        summary = RunSummary()
        steps: List[Callable[[], Report]] = [
            self.obstruction,
            self.verify_homology_model,
            self.verify_frob1,
            self.verify_discrete,
        ]
        steps += [lambda m=m, n=n, ell=ell: self.qloc_dims(m, n, cells=QLOC_CELLS, ell=ell, breakdown=ell == 1)
                  for ell in QLOC_RADII for m, n in QLOC_ARITIES]
        steps.append(self.verify_derham)
        for step in steps:
            report = step()
            summary.reports.append(report)
            if fail_fast and not report.passed:
                logger.warning(f"Stopping after failing suite {report.suite}")
                break
        return summary
