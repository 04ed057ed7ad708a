"""
The pure subgroup UVP_n as the direct sum of the rank-2 free groups F_{i,j}.

An element is a sparse map from canonical pairs (i<j) to nonempty reduced
F2Words; components on distinct pairs commute.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Tuple

from src.errors import StrandCountError
from src.free2 import (
    F2Word,
    Pair,
    canonical_pair,
    exponent_pair,
    f2_inv,
    f2_mul,
    f2_relabel,
)
from src.perms import OrbitBlock, Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PureElement:
    n: int
    components: Mapping[Pair, F2Word] = field(default_factory=dict)

    def __post_init__(self):
        for pair, word in self.components.items():
            i, j = pair
            if not 1 <= i < j <= self.n:
                raise StrandCountError(f"Pair {pair} out of range for n={self.n}")
            if word.pair != pair:
                raise StrandCountError(f"Word of F_{word.pair} stored under pair {pair}")
            if word.is_identity():
                raise ValueError(f"Trivial component stored under pair {pair}")

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.components.items()))))

    @classmethod
    def identity(cls, n: int) -> "PureElement":
        return cls(n, {})

    @classmethod
    def from_components(cls, n: int, components: Mapping[Pair, F2Word]) -> "PureElement":
        """Drop trivial components and key everything by its canonical pair"""
        kept = {word.pair: word for word in components.values() if not word.is_identity()}
        return cls(n, dict(sorted(kept.items())))

    @classmethod
    def generator(cls, n: int, a: int, b: int, exponent: int = 1) -> "PureElement":
        """λ_{a,b}^exponent"""
        return cls.from_components(n, {canonical_pair(a, b): F2Word.generator(a, b, exponent)})

    def is_identity(self) -> bool:
        return not self.components

    def items(self) -> Iterator[Tuple[Pair, F2Word]]:
        return iter(sorted(self.components.items()))

    def __mul__(self, other: "PureElement") -> "PureElement":
        return uvp_mul(self, other)


def _check_same_n(a: PureElement, b: PureElement):
    if a.n != b.n:
        raise StrandCountError(f"Pure elements over {a.n} and {b.n} strands")


def _check_pair(n: int, pair: Pair) -> Pair:
    i, j = pair
    canonical = canonical_pair(i, j)
    if not (1 <= canonical[0] and canonical[1] <= n):
        raise StrandCountError(f"Pair {pair} out of range for n={n}")
    return canonical


def uvp_mul(a: PureElement, b: PureElement) -> PureElement:
    """Componentwise product; components on distinct pairs commute"""
    _check_same_n(a, b)
    components = dict(a.components)
    for pair, word in b.components.items():
        components[pair] = f2_mul(components[pair], word) if pair in components else word
    return PureElement.from_components(a.n, components)


def uvp_inv(a: PureElement) -> PureElement:
    """Componentwise inverse"""
    return PureElement(a.n, {pair: f2_inv(word) for pair, word in a.items()})


def uvp_pow(a: PureElement, k: int) -> PureElement:
    """a^k for any integer k"""
    base = a if k >= 0 else uvp_inv(a)
    result = PureElement.identity(a.n)
    for _ in range(abs(k)):
        result = uvp_mul(result, base)
    return result


def uvp_commutator(a: PureElement, b: PureElement) -> PureElement:
    """The commutator a·b·a^{-1}·b^{-1}"""
    return uvp_mul(uvp_mul(a, b), uvp_mul(uvp_inv(a), uvp_inv(b)))


def act_perm(s: Permutation, a: PureElement) -> PureElement:
    """ι(s)·a·ι(s)^{-1}: every λ_{a,b} becomes λ_{s(a),s(b)}"""
    if s.n != a.n:
        raise StrandCountError(f"Permutation of degree {s.n} acting on UVP_{a.n}")
    moved = [f2_relabel(word, s) for _, word in a.items()]
    return PureElement.from_components(a.n, {word.pair: word for word in moved})


def component(a: PureElement, pair: Pair) -> F2Word:
    """The projection π_{i,j}; empty when the pair is outside the support"""
    canonical = _check_pair(a.n, pair)
    return a.components.get(canonical, F2Word.identity(canonical))


def epsilon(a: PureElement, pair: Pair) -> int:
    """Evaluation ε_{i,j}: total exponent on λ_{i,j} and λ_{j,i} in the (i,j) component"""
    forward, backward = exponent_pair(component(a, pair))
    return forward + backward


def restrict_to_block(a: PureElement, block: OrbitBlock) -> PureElement:
    """The F_{O_k} part of a for one orbit block"""
    pairs = block.pairs
    return PureElement(a.n, {pair: word for pair, word in a.items() if pair in pairs})


def pure_to_record(a: PureElement) -> List[Dict[str, Any]]:
    """JSON-ready list of {pair, word} entries in pair order"""
    return [
        {"pair": [i, j], "word": [[x, y, exponent] for (x, y), exponent in word.syllables]}
        for (i, j), word in a.items()
    ]
