"""
Independent verification: seeded random generators, a brute-force order
oracle, and the property suites run by `selftest`.

Every trial draws from its own generator derived from (seed, property, trial),
so results do not depend on trial order or on how trials are partitioned.
"""

import time
import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
import psutil
from tqdm import tqdm

from config import *
from src.braid_words import BraidWord, Letter, LetterKind, concat, invert_word
from src.crystal import (
    eta,
    eta_pure_rank,
    hn_generator,
    in_image_eta,
    project_hn_quotient,
    pure_braid_generator_word,
    quotient_mul,
    writhe,
)
from src.errors import UVBError
from src.free2 import F2Word, f2_inv, f2_mul, solve_alpha_coboundary, swap_alpha
from src.perms import Permutation, perm_order
from src.torsion import order_of, torsion_conjugator, verify_conjugator
from src.uvb import (
    NormalForm,
    check_relations,
    conjugate,
    iota,
    is_identity,
    lambda_generator_word,
    nf_inv,
    nf_mul,
    nf_of_pure,
    normal_form,
)
from src.uvp import PureElement, uvp_commutator, uvp_mul

logger = logging.getLogger(__name__)


class Rng:
    """Deterministic stream over numpy's counter-based Philox generator"""

    def __init__(self, seed: int):
        self.seed = seed
        self._generator = np.random.Generator(np.random.Philox(seed))

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return int(self._generator.integers(low, high + 1))

    def sign(self) -> int:
        """+1 or -1 with equal probability"""
        return 1 if self.integer(0, 1) else -1

    def permutation(self, n: int) -> List[int]:
        """Uniform shuffle of 0..n-1"""
        return [int(x) for x in self._generator.permutation(n)]

    def derive(self, *keys: int) -> "Rng":
        """Independent child stream keyed by (seed, *keys)"""
        state = np.random.SeedSequence([self.seed, *keys]).generate_state(1, dtype=np.uint64)
        return Rng(int(state[0]))


def random_perm(rng: Rng, n: int) -> Permutation:
    """Uniform over S_n"""
    return Permutation(tuple(x + 1 for x in rng.permutation(n)))


def random_involution(rng: Rng, n: int) -> Permutation:
    """A product of 1..n//2 disjoint transpositions on uniformly chosen points"""
    points = [x + 1 for x in rng.permutation(n)]
    count = rng.integer(1, n // 2)
    images = list(range(1, n + 1))
    for k in range(count):
        a, b = points[2 * k], points[2 * k + 1]
        images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images))


def random_f2_word(rng: Rng, pair, length: int) -> F2Word:
    """`length` uniform letters λ_{i,j}^{±1}, λ_{j,i}^{±1}, then freely reduced"""
    i, j = pair
    labels = ((i, j), (j, i))
    syllables = [(labels[rng.integer(0, 1)], rng.sign()) for _ in range(length)]
    return F2Word.from_syllables(pair, syllables)


def random_pure_element(rng: Rng, n: int, length: int) -> PureElement:
    """Product of `length` uniform generators λ_{a,b}^{±1}, a ≠ b"""
    pure = PureElement.identity(n)
    if n < 2:
        return pure
    for _ in range(length):
        a = rng.integer(1, n)
        b = rng.integer(1, n - 1)
        if b >= a:
            b += 1
        pure = uvp_mul(pure, PureElement.generator(n, a, b, rng.sign()))
    return pure


def random_element(rng: Rng, n: int, pure_len: int, rho_count: int) -> NormalForm:
    """Random pure part of `pure_len` letters times `rho_count` uniform adjacent transpositions"""
    perm = Permutation.identity(n)
    for _ in range(rho_count if n >= 2 else 0):
        i = rng.integer(1, n - 1)
        perm = perm * Permutation.transposition(n, i, i + 1)
    return NormalForm(random_pure_element(rng, n, pure_len), perm)


def random_sigma_word(rng: Rng, n: int, length: int) -> BraidWord:
    """`length` uniform letters σ_i^{±1}"""
    if n < 2:
        return BraidWord(n)
    kinds = (LetterKind.SIGMA, LetterKind.SIGMA_INV)
    return BraidWord(n, tuple(Letter(kinds[rng.integer(0, 1)], rng.integer(1, n - 1)) for _ in range(length)))


def random_braid_word(rng: Rng, n: int, length: int) -> BraidWord:
    """`length` letters drawn uniformly from σ_i, σ_i^{-1} and ρ_i"""
    if n < 2:
        return BraidWord(n)
    kinds = (LetterKind.SIGMA, LetterKind.SIGMA_INV, LetterKind.RHO)
    return BraidWord(n, tuple(Letter(kinds[rng.integer(0, 2)], rng.integer(1, n - 1)) for _ in range(length)))


def random_torsion_element(rng: Rng, n: int, pure_len: int) -> NormalForm:
    """g·ι(s)·g^{-1} for random pure g and uniform s"""
    g = nf_of_pure(random_pure_element(rng, n, pure_len))
    return conjugate(g, iota(random_perm(rng, n)))


def brute_force_order(v: NormalForm, max_k: int) -> Optional[int]:
    """Smallest k ≤ max_k with v^k = 1 by repeated multiplication, else None"""
    power = v
    for k in range(1, max_k + 1):
        if is_identity(power):
            return k
        power = nf_mul(power, v)
    return None


def _pure_presentation_failures(n: int) -> Tuple[int, int]:
    """(checked, failed) over all pairs of λ generators: only λ_{i,j}, λ_{j,i} fail to commute"""
    generators = list(permutations(range(1, n + 1), 2))
    checked = failed = 0
    for (a, b), (c, d) in combinations(generators, 2):
        x = normal_form(lambda_generator_word(a, b, n))
        y = normal_form(lambda_generator_word(c, d, n))
        commutator = nf_mul(nf_mul(x, y), nf_mul(nf_inv(x), nf_inv(y)))
        should_commute = {a, b} != {c, d}
        checked += 1
        if is_identity(commutator) != should_commute:
            logger.error(f"λ_{a},{b} and λ_{c},{d}: commutator triviality is {not should_commute}")
            failed += 1
    return checked, failed


def verify_presentation(n: int) -> bool:
    """Defining relations of UVB_n plus the commutation pattern of the λ generators"""
    if not check_relations(n).all_passed:
        return False
    _, failed = _pure_presentation_failures(n)
    return failed == 0


def resident_memory_mb() -> float:
    """Resident set size of the running process, in MiB"""
    return psutil.Process().memory_info().rss / (1 << 20)


@dataclass
class SelfTestBudgets:
    torsion_trials: int = TORSION_TRIALS
    brute_force_trials: int = BRUTE_FORCE_TRIALS
    even_order_trials: int = EVEN_ORDER_TRIALS
    coboundary_trials: int = COBOUNDARY_TRIALS
    lift_trials: int = LIFT_TRIALS
    homomorphism_trials: int = HOMOMORPHISM_TRIALS
    max_pure_length: int = MAX_PURE_LENGTH
    max_f2_length: int = MAX_F2_LENGTH
    presentation_max_n: int = SELFTEST_PRESENTATION_MAX_N


@dataclass
class PropertyResult:
    """Outcome of one selftest property"""
    name: str
    trials: int
    failures: int
    seconds: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class SelfTestReport:
    """All property outcomes of one selftest run"""
    seed: int
    max_n: int
    results: List[PropertyResult] = field(default_factory=list)
    memory_mb: float = 0.0

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def to_frame(self) -> pd.DataFrame:
        """One row per property, for printing"""
        return pd.DataFrame(
            [
                {
                    "property": result.name,
                    "trials": result.trials,
                    "failures": result.failures,
                    "seconds": round(result.seconds, 3),
                    "status": "PASS" if result.passed else "FAIL",
                }
                for result in self.results
            ],
            columns=["property", "trials", "failures", "seconds", "status"],
        )

    def to_record(self) -> Dict[str, Any]:
        # timings and memory vary between runs, so they stay out of the machine-readable form
        return {
            "seed": self.seed,
            "max_n": self.max_n,
            "passed": self.passed,
            "properties": [
                {"name": result.name, "trials": result.trials, "failures": result.failures}
                for result in self.results
            ],
        }


def _run_trials(name: str, rng: Rng, trials: int, check: Callable[[Rng], bool]) -> PropertyResult:
    start_time = time.time()
    failures = 0
    for trial in tqdm(range(trials), desc=name, unit="trial", disable=not SHOW_PROGRESS, leave=False):
        trial_rng = rng.derive(trial)
        try:
            ok = check(trial_rng)
        except UVBError as e:
            logger.error(f"{name}: trial {trial} raised {e}")
            ok = False
        if not ok:
            logger.warning(f"{name}: trial {trial} failed (seed {trial_rng.seed})")
            failures += 1
    return PropertyResult(name, trials, failures, time.time() - start_time)


def _presentation_soundness(max_n: int) -> PropertyResult:
    start_time = time.time()
    checked = failed = 0
    for n in range(2, max_n + 1):
        report = check_relations(n)
        checked += len(report.checks)
        failed += len(report.failures())
    return PropertyResult("presentation_soundness", checked, failed, time.time() - start_time)


def _pure_presentation(max_n: int) -> PropertyResult:
    start_time = time.time()
    checked = failed = 0
    for n in range(2, max_n + 1):
        c, f = _pure_presentation_failures(n)
        checked += c
        failed += f
    return PropertyResult("pure_presentation", checked, failed, time.time() - start_time)


def _lambda_word_consistency(max_n: int) -> PropertyResult:
    start_time = time.time()
    checked = failed = 0
    for n in range(2, max_n + 1):
        for a, b in permutations(range(1, n + 1), 2):
            expected = nf_of_pure(PureElement.generator(n, a, b))
            checked += 1
            if normal_form(lambda_generator_word(a, b, n)) != expected:
                logger.error(f"λ-word for ({a},{b}) on n={n} does not normalize to the generator")
                failed += 1
    return PropertyResult("lambda_word_consistency", checked, failed, time.time() - start_time)


def _eta_kernel_and_rank(max_n: int) -> PropertyResult:
    start_time = time.time()
    checked = failed = 0
    for n in range(2, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        words = {pair: pure_braid_generator_word(*pair, n) for pair in pairs}
        for p, q in combinations(pairs, 2):
            x, y = words[p], words[q]
            commutator = concat(concat(x, y), concat(invert_word(x), invert_word(y)))
            checked += 1
            if not is_identity(eta(commutator)):
                logger.error(f"η does not kill [a_{p}, a_{q}] on n={n}")
                failed += 1
            checked += 1
            if not uvp_commutator(eta(x).pure, eta(y).pure).is_identity():
                logger.error(f"η(a_{p}) and η(a_{q}) do not commute on n={n}")
                failed += 1
        checked += 1
        if eta_pure_rank(n) != n * (n - 1) // 2:
            logger.error(f"η(P_{n}) has rank {eta_pure_rank(n)}, expected {n * (n - 1) // 2}")
            failed += 1
    return PropertyResult("eta_kernel_and_rank", checked, failed, time.time() - start_time)


def _hn_generators_killed(max_n: int) -> PropertyResult:
    start_time = time.time()
    checked = failed = 0
    for n in range(2, max_n + 1):
        for i, j in combinations(range(1, n + 1), 2):
            checked += 1
            if not project_hn_quotient(nf_of_pure(hn_generator(n, i, j))).is_identity():
                failed += 1
    return PropertyResult("hn_generators_killed", checked, failed, time.time() - start_time)


def run_selftest(seed: int = DEFAULT_SEED, max_n: int = SELFTEST_MAX_N,
                 budgets: Optional[SelfTestBudgets] = None) -> SelfTestReport:
    """Run every acceptance property with fixed seeds and trial budgets"""
    budgets = budgets or SelfTestBudgets()
    root = Rng(seed)
    report = SelfTestReport(seed=seed, max_n=max_n)
    presentation_n = min(max_n, budgets.presentation_max_n)

    def pick_n(rng: Rng, low: int = 2) -> int:
        return rng.integer(low, max(low, max_n))

    def torsion_round_trip(rng: Rng) -> bool:
        n = pick_n(rng)
        g = nf_of_pure(random_pure_element(rng, n, rng.integer(0, budgets.max_pure_length)))
        s = random_perm(rng, n)
        x = conjugate(g, iota(s))
        return order_of(x) == perm_order(s) and verify_conjugator(x, torsion_conjugator(x))

    def torsion_vs_brute_force(rng: Rng) -> bool:
        n = pick_n(rng)
        if rng.integer(0, 1):
            v = random_torsion_element(rng, n, rng.integer(0, 8))
        else:
            v = random_element(rng, n, rng.integer(0, 4), rng.integer(0, 6))
        return order_of(v) == brute_force_order(v, perm_order(v.perm))

    def no_even_order_in_eta(rng: Rng) -> bool:
        n = pick_n(rng)
        w = random_sigma_word(rng, n, rng.integer(1, 12))
        while perm_order(normal_form(w).perm) % 2:
            w = concat(w, random_sigma_word(rng, n, 1))
        return order_of(eta(w)) is None

    def order_two_outside_eta(rng: Rng) -> bool:
        n = pick_n(rng)
        g = nf_of_pure(random_pure_element(rng, n, rng.integer(0, budgets.max_pure_length)))
        return not in_image_eta(conjugate(g, iota(random_involution(rng, n))))

    def alpha_coboundary_round_trip(rng: Rng) -> bool:
        u = random_f2_word(rng, (1, 2), rng.integer(0, budgets.max_f2_length))
        w = f2_mul(u, swap_alpha(f2_inv(u)))
        if not f2_mul(w, swap_alpha(w)).is_identity():
            return False
        solution = solve_alpha_coboundary(w)
        return f2_mul(solution, swap_alpha(f2_inv(solution))) == w

    def lift_independence(rng: Rng) -> bool:
        n = pick_n(rng)
        if rng.integer(0, 1):
            v = eta(random_sigma_word(rng, n, rng.integer(0, 12)))
        else:
            v = random_element(rng, n, rng.integer(0, 8), rng.integer(0, 8))
        return in_image_eta(v, "insertion") == in_image_eta(v, "bubble")

    def writhe_additive(rng: Rng) -> bool:
        n = pick_n(rng)
        a = random_element(rng, n, rng.integer(0, 10), rng.integer(0, 6))
        b = random_element(rng, n, rng.integer(0, 10), rng.integer(0, 6))
        return writhe(nf_mul(a, b)) == writhe(a) + writhe(b)

    def writhe_word_agrees(rng: Rng) -> bool:
        w = random_braid_word(rng, pick_n(rng), rng.integer(0, 20))
        return writhe(w) == writhe(normal_form(w))

    def hn_projection_multiplicative(rng: Rng) -> bool:
        n = pick_n(rng)
        a = random_element(rng, n, rng.integer(0, 10), rng.integer(0, 6))
        b = random_element(rng, n, rng.integer(0, 10), rng.integer(0, 6))
        return project_hn_quotient(nf_mul(a, b)) == quotient_mul(project_hn_quotient(a), project_hn_quotient(b))

    logger.info(f"Running selftest with seed {seed} on n <= {max_n}")
    report.results.append(_presentation_soundness(max_n))
    report.results.append(_pure_presentation(presentation_n))
    report.results.append(_lambda_word_consistency(max_n))

    randomized = [
        ("torsion_round_trip", budgets.torsion_trials, torsion_round_trip),
        ("torsion_vs_brute_force", budgets.brute_force_trials, torsion_vs_brute_force),
        ("no_even_order_in_eta", budgets.even_order_trials, no_even_order_in_eta),
        ("order_two_outside_eta", budgets.even_order_trials, order_two_outside_eta),
        ("alpha_coboundary_round_trip", budgets.coboundary_trials, alpha_coboundary_round_trip),
        ("lift_independence", budgets.lift_trials, lift_independence),
        ("writhe_additive", budgets.homomorphism_trials, writhe_additive),
        ("writhe_word_agrees", budgets.homomorphism_trials, writhe_word_agrees),
        ("hn_projection_multiplicative", budgets.homomorphism_trials, hn_projection_multiplicative),
    ]
    for index, (name, trials, check) in enumerate(randomized):
        report.results.append(_run_trials(name, root.derive(index), trials, check))

    report.results.append(_eta_kernel_and_rank(presentation_n))
    report.results.append(_hn_generators_killed(max_n))
    report.memory_mb = resident_memory_mb()

    for result in report.results:
        if result.passed:
            logger.info(f"  ✓ {result.name}: {result.trials} trials ({result.seconds:.1f}s)")
        else:
            logger.error(f"  ✗ {result.name}: {result.failures}/{result.trials} failures")
    return report
