"""
Normal forms for UVB_n ≅ UVP_n ⋊ S_n.

An element is the pair (pure part P, permutation s) standing for P·ι(s).
Words are folded left to right; the state never leaves canonical form, so
two words are equal in UVB_n exactly when their normal forms are equal.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Tuple

from src.braid_words import BraidWord, Letter, LetterKind, render
from src.errors import PreconditionError, StrandCountError
from src.free2 import render_f2
from src.perms import Permutation, compose, render_permutation
from src.uvp import PureElement, act_perm, pure_to_record, uvp_inv, uvp_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalForm:
    pure: PureElement
    perm: Permutation

    def __post_init__(self):
        if self.pure.n != self.perm.n:
            raise StrandCountError(f"Pure part on {self.pure.n} strands with a permutation of degree {self.perm.n}")

    @property
    def n(self) -> int:
        return self.perm.n

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return nf_mul(self, other)


def nf_identity(n: int) -> NormalForm:
    """The identity element of UVB_n"""
    return NormalForm(PureElement.identity(n), Permutation.identity(n))


def nf_of_pure(pure: PureElement) -> NormalForm:
    """A pure element viewed in UVB_n, with trivial permutation"""
    return NormalForm(pure, Permutation.identity(pure.n))


def iota(s: Permutation) -> NormalForm:
    """The section ι: S_n → UVB_n, s_i ↦ ρ_i"""
    return NormalForm(PureElement.identity(s.n), s)


def _letter_contribution(letter: Letter, n: int) -> NormalForm:
    i = letter.index
    s_i = Permutation.transposition(n, i, i + 1)
    if letter.kind is LetterKind.SIGMA:
        # σ_i = λ_{i,i+1}^{-1} ρ_i
        return NormalForm(PureElement.generator(n, i, i + 1, -1), s_i)
    if letter.kind is LetterKind.SIGMA_INV:
        # σ_i^{-1} = λ_{i+1,i} ρ_i
        return NormalForm(PureElement.generator(n, i + 1, i, 1), s_i)
    return iota(s_i)


def normal_form(w: BraidWord) -> NormalForm:
    """Fold the word left to right into (pure part, permutation)"""
    pure = PureElement.identity(w.n)
    perm = Permutation.identity(w.n)
    contributions = {}
    for letter in w.letters:
        if letter not in contributions:
            contributions[letter] = _letter_contribution(letter, w.n)
        step = contributions[letter]
        if not step.pure.is_identity():
            pure = uvp_mul(pure, act_perm(perm, step.pure))
        perm = compose(perm, step.perm)
    return NormalForm(pure, perm)


def _check_same_n(a: NormalForm, b: NormalForm):
    if a.n != b.n:
        raise StrandCountError(f"Normal forms over {a.n} and {b.n} strands")


def nf_mul(a: NormalForm, b: NormalForm) -> NormalForm:
    """Group product of normal forms: (P1·s1)(P2·s2) = P1·s1(P2) · s1∘s2"""
    _check_same_n(a, b)
    return NormalForm(uvp_mul(a.pure, act_perm(a.perm, b.pure)), compose(a.perm, b.perm))


def nf_inv(a: NormalForm) -> NormalForm:
    """Inverse: (P·s)^{-1} = s^{-1}(P^{-1}) · s^{-1}"""
    inverse = a.perm.inverse()
    return NormalForm(act_perm(inverse, uvp_inv(a.pure)), inverse)


def nf_pow(a: NormalForm, k: int) -> NormalForm:
    """a^k for any integer k"""
    base = a if k >= 0 else nf_inv(a)
    result = nf_identity(a.n)
    for _ in range(abs(k)):
        result = nf_mul(result, base)
    return result


def conjugate(g: NormalForm, x: NormalForm) -> NormalForm:
    """g·x·g^{-1}"""
    return nf_mul(nf_mul(g, x), nf_inv(g))


def nf_equals(a: NormalForm, b: NormalForm) -> bool:
    """Word problem: equal elements have equal normal forms"""
    _check_same_n(a, b)
    return a == b


def is_identity(a: NormalForm) -> bool:
    """True when both the pure part and the permutation are trivial"""
    return a.pure.is_identity() and a.perm.is_identity()


def _sigma(i: int) -> Letter:
    return Letter(LetterKind.SIGMA, i)


def _sigma_inv(i: int) -> Letter:
    return Letter(LetterKind.SIGMA_INV, i)


def _rho(i: int) -> Letter:
    return Letter(LetterKind.RHO, i)


def lambda_generator_word(a: int, b: int, n: int) -> BraidWord:
    """
    A word for λ_{a,b}: λ_{i,i+1} = ρ_i σ_i^{-1}, λ_{i+1,i} = σ_i^{-1} ρ_i, and
    longer pairs are conjugated out by ρ_{j-1} ⋯ ρ_{i+1}.
    """
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise StrandCountError(f"λ_{{{a},{b}}} is not a generator of UVP_{n}")
    i, j = min(a, b), max(a, b)
    if a < b:
        core = [_rho(i), _sigma_inv(i)]
    else:
        core = [_sigma_inv(i), _rho(i)]
    outer = [_rho(k) for k in range(j - 1, i, -1)]
    return BraidWord(n, tuple(outer + core + outer[::-1]))


@dataclass(frozen=True)
class RelationFamily:
    name: str
    # instances(n) yields (indices, lhs letters, rhs letters)
    instances: Callable[[int], Iterable[Tuple[Tuple[int, ...], List[Letter], List[Letter]]]]


def _br1(n):
    for i in range(1, n - 1):
        yield (i,), [_sigma(i), _sigma(i + 1), _sigma(i)], [_sigma(i + 1), _sigma(i), _sigma(i + 1)]


def _br2(n):
    for i in range(1, n):
        for j in range(i + 2, n):
            yield (i, j), [_sigma(i), _sigma(j)], [_sigma(j), _sigma(i)]


def _sr1(n):
    for i in range(1, n - 1):
        yield (i,), [_rho(i), _rho(i + 1), _rho(i)], [_rho(i + 1), _rho(i), _rho(i + 1)]


def _sr2(n):
    for i in range(1, n):
        for j in range(i + 2, n):
            yield (i, j), [_rho(i), _rho(j)], [_rho(j), _rho(i)]


def _sr3(n):
    for i in range(1, n):
        yield (i,), [_rho(i), _rho(i)], []


def _mr1(n):
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                yield (i, j), [_sigma(i), _rho(j)], [_rho(j), _sigma(i)]


def _mr2(n):
    for i in range(1, n - 1):
        yield (i,), [_rho(i), _rho(i + 1), _sigma(i)], [_sigma(i + 1), _rho(i), _rho(i + 1)]


def _oc(n):
    for i in range(1, n - 1):
        yield (i,), [_rho(i), _sigma(i + 1), _sigma(i)], [_sigma(i + 1), _sigma(i), _rho(i + 1)]


def _uc(n):
    for i in range(1, n - 1):
        yield (i,), [_rho(i + 1), _sigma(i), _sigma(i + 1)], [_sigma(i), _sigma(i + 1), _rho(i)]


RELATIONS = (
    RelationFamily("BR1", _br1),
    RelationFamily("BR2", _br2),
    RelationFamily("SR1", _sr1),
    RelationFamily("SR2", _sr2),
    RelationFamily("SR3", _sr3),
    RelationFamily("MR1", _mr1),
    RelationFamily("MR2", _mr2),
    RelationFamily("OC", _oc),
    RelationFamily("UC", _uc),
)


@dataclass(frozen=True)
class RelationCheck:
    family: str
    indices: Tuple[int, ...]
    lhs: str
    rhs: str
    passed: bool


@dataclass
class RelationReport:
    n: int
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        """True when every relation instance held"""
        return all(check.passed for check in self.checks)

    @property
    def families(self) -> List[str]:
        """Names of the relation families that had at least one instance"""
        return sorted({check.family for check in self.checks})

    def failures(self) -> List[RelationCheck]:
        """The instances whose two sides differ"""
        return [check for check in self.checks if not check.passed]

    def to_record(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "all_passed": self.all_passed,
            "checks": [
                {
                    "family": check.family,
                    "indices": list(check.indices),
                    "lhs": check.lhs,
                    "rhs": check.rhs,
                    "passed": check.passed,
                }
                for check in self.checks
            ],
        }


def check_relations(n: int) -> RelationReport:
    """Normalize both sides of every instance of every defining relation of UVB_n"""
    if n < 2:
        raise PreconditionError(f"Relation checks need n >= 2, got {n}")

    report = RelationReport(n)
    for family in RELATIONS:
        for indices, lhs, rhs in family.instances(n):
            left, right = BraidWord(n, tuple(lhs)), BraidWord(n, tuple(rhs))
            passed = normal_form(left) == normal_form(right)
            if not passed:
                logger.error(f"Relation {family.name}{indices} fails on n={n}: {render(left)} != {render(right)}")
            report.checks.append(RelationCheck(family.name, indices, render(left), render(right), passed))

    logger.info(f"Checked {len(report.checks)} relation instances on n={n}: "
                f"{len(report.failures())} failures")
    return report


def nf_to_record(a: NormalForm) -> Dict[str, Any]:
    """JSON-ready dict with keys n, perm and pure"""
    return {"n": a.n, "perm": list(a.perm.images), "pure": pure_to_record(a.pure)}


def to_json(record: Any) -> str:
    """Canonical text form: sorted keys, no insignificant whitespace"""
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def describe_pure(pure: PureElement) -> str:
    """Human-readable components, `1` for the identity"""
    if pure.is_identity():
        return "1"
    return "; ".join(f"F{i},{j}: {render_f2(word)}" for (i, j), word in pure.items())


def describe_normal_form(a: NormalForm) -> str:
    """Two-line text form: permutation, then pure part"""
    return f"perm {render_permutation(a.perm)}\npure {describe_pure(a.pure)}"
