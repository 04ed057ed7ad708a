"""
The crystallographic layer.

B_n/[P_n,P_n] is modelled by its image under η: B_n → UVB_n, σ_i ↦ σ_i.
The quotient UVB_n/⟨⟨H_n⟩⟩ ≅ Z^{n(n-1)/2} ⋊ S_n is modelled by
CrystalQuotientElement, where x_{i,j} = x_{j,i}.
"""

import logging
from dataclasses import dataclass, field
from functools import singledispatch
from itertools import combinations
from typing import Any, Dict, Mapping

import numpy as np

from src.braid_words import BraidWord, Letter, LetterKind, is_sigma_only, rho_to_sigma
from src.errors import PreconditionError, StrandCountError
from src.free2 import F2Word, Pair, cyclic_member
from src.perms import Permutation, adjacent_lift, compose, render_permutation
from src.uvb import NormalForm, nf_inv, nf_mul, normal_form
from src.uvp import PureElement, epsilon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrystalQuotientElement:
    perm: Permutation
    vector: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), coefficient in self.vector.items():
            if not 1 <= i < j <= self.perm.n:
                raise StrandCountError(f"Pair {(i, j)} out of range for n={self.perm.n}")
            if coefficient == 0:
                raise ValueError(f"Zero coefficient stored for x_{i},{j}")

    def __hash__(self) -> int:
        return hash((self.perm, tuple(sorted(self.vector.items()))))

    @property
    def n(self) -> int:
        return self.perm.n

    def is_identity(self) -> bool:
        return not self.vector and self.perm.is_identity()


def _quotient(perm: Permutation, vector: Mapping[Pair, int]) -> CrystalQuotientElement:
    return CrystalQuotientElement(perm, {pair: c for pair, c in sorted(vector.items()) if c != 0})


def gamma_generator(n: int, i: int, j: int) -> PureElement:
    """λ_{i,j}^{-1} λ_{j,i}^{-1}, the image of a_{i,j} under η (i<j)"""
    return PureElement.from_components(n, {(i, j): F2Word.from_syllables((i, j), [((i, j), -1), ((j, i), -1)])})


def hn_generator(n: int, i: int, j: int) -> PureElement:
    """λ_{i,j} λ_{j,i}^{-1}, a generator of H_n (i<j)"""
    return PureElement.from_components(n, {(i, j): F2Word.from_syllables((i, j), [((i, j), 1), ((j, i), -1)])})


def _in_cyclic_sum(pure: PureElement, generator_of) -> bool:
    """Every component lies in the cyclic group of its own factor's generator"""
    for pair, word in pure.items():
        g = generator_of(pure.n, *pair).components[pair]
        if cyclic_member(word, g) is None:
            return False
    return True


def pure_braid_generator_word(i: int, j: int, n: int) -> BraidWord:
    """a_{i,j} = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1}"""
    if not 1 <= i < j <= n:
        raise StrandCountError(f"a_{{{i},{j}}} is not a generator of P_{n}")
    outer = [Letter(LetterKind.SIGMA, k) for k in range(j - 1, i, -1)]
    core = [Letter(LetterKind.SIGMA, i), Letter(LetterKind.SIGMA, i)]
    closing = [Letter(LetterKind.SIGMA_INV, k) for k in range(i + 1, j)]
    return BraidWord(n, tuple(outer + core + closing))


def eta(w: BraidWord) -> NormalForm:
    """The homomorphism η: B_n → UVB_n, σ_i ↦ σ_i"""
    if not is_sigma_only(w):
        raise PreconditionError("η is defined on braid words; the word contains ρ letters")
    return normal_form(w)


def crystal_equals(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality in B_n/[P_n,P_n]"""
    return eta(w1) == eta(w2)


def eta_residual(v: NormalForm, lift_method: str = "insertion") -> PureElement:
    """η(β)^{-1}·v for the σ-lift β of v's permutation; always pure"""
    beta = rho_to_sigma(adjacent_lift(v.perm, lift_method))
    residual = nf_mul(nf_inv(eta(beta)), v)
    return residual.pure


def in_image_eta(v: NormalForm, lift_method: str = "insertion") -> bool:
    """v ∈ Im(η) iff the residual lies in Γ = ⊕⟨λ_{i,j}^{-1} λ_{j,i}^{-1}⟩"""
    return _in_cyclic_sum(eta_residual(v, lift_method), gamma_generator)


def in_cn(v: NormalForm) -> bool:
    """v ∈ C_n = H_n ⋊ Im(ι)"""
    return _in_cyclic_sum(v.pure, hn_generator)


def project_hn_quotient(v: NormalForm) -> CrystalQuotientElement:
    """Image in UVB_n/⟨⟨H_n⟩⟩: each component collapses to its ε total"""
    return _quotient(v.perm, {pair: epsilon(v.pure, pair) for pair, _ in v.pure.items()})


def quotient_mul(x: CrystalQuotientElement, y: CrystalQuotientElement) -> CrystalQuotientElement:
    """(a, s)(b, t) = (a + s·b, s∘t) with s·x_{i,j} = x_{s(i),s(j)}"""
    if x.n != y.n:
        raise StrandCountError(f"Quotient elements over {x.n} and {y.n} strands")
    vector = dict(x.vector)
    for (i, j), coefficient in y.vector.items():
        a, b = x.perm(i), x.perm(j)
        key = (min(a, b), max(a, b))
        vector[key] = vector.get(key, 0) + coefficient
    return _quotient(compose(x.perm, y.perm), vector)


def theta(w: BraidWord) -> CrystalQuotientElement:
    """The composite B_n → UVB_n → UVB_n/⟨⟨H_n⟩⟩"""
    return project_hn_quotient(eta(w))


@singledispatch
def writhe(value) -> int:
    """Exponent sum of σ letters; defined on words and on normal forms"""
    raise TypeError(f"Writhe is defined on braid words and normal forms, not {type(value).__name__}")


@writhe.register
def _(value: BraidWord) -> int:
    total = 0
    for letter in value.letters:
        if letter.kind is LetterKind.SIGMA:
            total += 1
        elif letter.kind is LetterKind.SIGMA_INV:
            total -= 1
    return total


@writhe.register
def _(value: NormalForm) -> int:
    return -sum(epsilon(value.pure, pair) for pair, _ in value.pure.items())


def eta_pure_rank(n: int) -> int:
    """
    Rank of the ε-exponent vectors of η(a_{i,j}), which are also the θ(a_{i,j});
    n(n-1)/2 exactly when η(P_n) is free Abelian of full rank.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    if not pairs:
        return 0
    rows = [[theta(pure_braid_generator_word(i, j, n)).vector.get(pair, 0) for pair in pairs] for i, j in pairs]
    return int(np.linalg.matrix_rank(np.array(rows, dtype=np.int64)))


def quotient_to_record(x: CrystalQuotientElement) -> Dict[str, Any]:
    """JSON-ready dict with keys perm and vector, nonzero coefficients only"""
    return {
        "perm": list(x.perm.images),
        "vector": [{"pair": [i, j], "coeff": c} for (i, j), c in sorted(x.vector.items())],
    }


def describe_quotient(x: CrystalQuotientElement) -> str:
    """Two-line text form: permutation, then the coefficient vector"""
    vector = " ".join(f"x{i},{j}={c}" for (i, j), c in sorted(x.vector.items())) or "0"
    return f"perm {render_permutation(x.perm)}\nvector {vector}"
