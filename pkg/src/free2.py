"""
Exact arithmetic in the rank-2 free groups F_{i,j} = F(λ_{i,j}, λ_{j,i}).

Words are stored as syllables (ordered pair label, nonzero exponent), freely
reduced, with adjacent syllables always carrying different labels.
"""

import re
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from src.errors import BraidWordError, PreconditionError, StrandCountError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Syllable = Tuple[Pair, int]

_SYLLABLE = re.compile(r'^l(\d+),(\d+)(?:\^(-?\d+))?$')


def canonical_pair(a: int, b: int) -> Pair:
    """The pair (min, max) naming the free factor that holds λ_{a,b}"""
    if a == b:
        raise StrandCountError(f"A pair needs two distinct indices, got ({a},{b})")
    return (a, b) if a < b else (b, a)


def _reduce(syllables: Iterable[Syllable], stack: Optional[List[Syllable]] = None) -> Tuple[Syllable, ...]:
    out = stack if stack is not None else []
    for label, exponent in syllables:
        if exponent == 0:
            continue
        if out and out[-1][0] == label:
            merged = out.pop()[1] + exponent
            if merged != 0:
                out.append((label, merged))
        else:
            out.append((label, exponent))
    return tuple(out)


@dataclass(frozen=True)
class F2Word:
    pair: Pair
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        i, j = self.pair
        if not i < j:
            raise StrandCountError(f"Component pair must be written with i<j, got {self.pair}")
        previous = None
        for label, exponent in self.syllables:
            if label not in ((i, j), (j, i)):
                raise StrandCountError(f"Letter l{label[0]},{label[1]} does not belong to F_{i},{j}")
            if exponent == 0 or label == previous:
                raise ValueError(f"Syllables {self.syllables} are not freely reduced")
            previous = label

    @classmethod
    def from_syllables(cls, pair: Pair, syllables: Iterable[Syllable]) -> "F2Word":
        """Freely reduce the syllables into a word of F_pair"""
        return cls(pair, _reduce(syllables))

    @classmethod
    def identity(cls, pair: Pair) -> "F2Word":
        """The empty word of F_pair"""
        return cls(pair)

    @classmethod
    def generator(cls, a: int, b: int, exponent: int = 1) -> "F2Word":
        """λ_{a,b}^exponent, living in F_{min,max}"""
        return cls.from_syllables(canonical_pair(a, b), [((a, b), exponent)])

    @property
    def letter_length(self) -> int:
        """Number of letters, counting |exponent| per syllable"""
        return sum(abs(exponent) for _, exponent in self.syllables)

    def is_identity(self) -> bool:
        """True for the empty word"""
        return not self.syllables

    def letters(self) -> List[Syllable]:
        """Flat letters, each with exponent ±1"""
        flat = []
        for label, exponent in self.syllables:
            step = 1 if exponent > 0 else -1
            flat.extend([(label, step)] * abs(exponent))
        return flat

    def __mul__(self, other: "F2Word") -> "F2Word":
        return f2_mul(self, other)

    def __invert__(self) -> "F2Word":
        return f2_inv(self)

    def __str__(self) -> str:
        return render_f2(self)


def f2_mul(a: F2Word, b: F2Word) -> F2Word:
    """Concatenate and freely reduce"""
    if a.pair != b.pair:
        raise StrandCountError(f"Cannot multiply words of F_{a.pair} and F_{b.pair}")
    return F2Word(a.pair, _reduce(b.syllables, list(a.syllables)))


def f2_inv(a: F2Word) -> F2Word:
    """Reverse the syllables and negate their exponents"""
    return F2Word(a.pair, tuple((label, -exponent) for label, exponent in reversed(a.syllables)))


def f2_pow(a: F2Word, k: int) -> F2Word:
    """a^k for any integer k"""
    base = a if k >= 0 else f2_inv(a)
    result = F2Word.identity(a.pair)
    for _ in range(abs(k)):
        result = f2_mul(result, base)
    return result


def f2_commutator(a: F2Word, b: F2Word) -> F2Word:
    """The commutator a·b·a^{-1}·b^{-1}"""
    return f2_mul(f2_mul(a, b), f2_mul(f2_inv(a), f2_inv(b)))


def swap_alpha(w: F2Word) -> F2Word:
    """The automorphism α exchanging λ_{i,j} and λ_{j,i}"""
    return F2Word(w.pair, tuple(((b, a), exponent) for (a, b), exponent in w.syllables))


def f2_relabel(w: F2Word, image: Callable[[int], int]) -> F2Word:
    """Letterwise λ_{a,b} ↦ λ_{image(a),image(b)} for a bijection `image` of the indices"""
    if w.is_identity():
        return F2Word.identity(canonical_pair(image(w.pair[0]), image(w.pair[1])))
    syllables = tuple(((image(a), image(b)), exponent) for (a, b), exponent in w.syllables)
    return F2Word(canonical_pair(image(w.pair[0]), image(w.pair[1])), syllables)


def exponent_pair(w: F2Word) -> Tuple[int, int]:
    """(exponent sum on λ_{i,j}, exponent sum on λ_{j,i}) with i<j"""
    forward = sum(exponent for label, exponent in w.syllables if label == w.pair)
    backward = sum(exponent for label, exponent in w.syllables if label != w.pair)
    return forward, backward


def _prefix(w: F2Word, length: int) -> F2Word:
    syllables = []
    remaining = length
    for label, exponent in w.syllables:
        if remaining == 0:
            break
        take = min(remaining, abs(exponent))
        syllables.append((label, take if exponent > 0 else -take))
        remaining -= take
    return F2Word(w.pair, tuple(syllables))


def solve_alpha_coboundary(w: F2Word) -> F2Word:
    """
    Return u with w = u·α(u^{-1}), given w·α(w) = 1.

    Full cancellation in w·α(w) pairs letter k of w with letter 2T+1-k, so
    the first half of the reduced word is a solution.
    """
    if not f2_mul(w, swap_alpha(w)).is_identity():
        raise PreconditionError(f"{render_f2(w)} does not satisfy w·α(w) = 1")
    return _prefix(w, w.letter_length // 2)


def _cyclic_core(g: F2Word) -> Tuple[int, int]:
    """(length of t, length of c) for g = t·c·t^{-1} with c cyclically reduced"""
    letters = g.letters()
    start, end = 0, len(letters)
    while end - start >= 2:
        (first_label, first_sign), (last_label, last_sign) = letters[start], letters[end - 1]
        if first_label != last_label or first_sign != -last_sign:
            break
        start += 1
        end -= 1
    return start, end - start


def cyclic_member(w: F2Word, g: F2Word) -> Optional[int]:
    """The k with w = g^k, or None when w is not in ⟨g⟩"""
    if g.is_identity():
        raise PreconditionError("Cyclic membership needs a nontrivial generator")
    if w.pair != g.pair:
        return None
    if w.is_identity():
        return 0

    conjugator, core = _cyclic_core(g)
    excess = w.letter_length - 2 * conjugator
    if excess <= 0 or excess % core != 0:
        return None
    magnitude = excess // core

    w_sums, g_sums = exponent_pair(w), exponent_pair(g)
    if g_sums != (0, 0):
        # exponent sums are additive, so they fix the sign of k
        if (w_sums[0] * g_sums[0] + w_sums[1] * g_sums[1]) > 0:
            candidates = [magnitude]
        else:
            candidates = [-magnitude]
    else:
        candidates = [magnitude, -magnitude]

    for k in candidates:
        if f2_pow(g, k) == w:
            return k
    return None


def render_f2(w: F2Word) -> str:
    """Text form such as `l1,2^2 l2,1^-1`; the empty word renders as an empty string"""
    parts = []
    for (a, b), exponent in w.syllables:
        parts.append(f"l{a},{b}" if exponent == 1 else f"l{a},{b}^{exponent}")
    return " ".join(parts)


def parse_f2(text: str, pair: Optional[Pair] = None) -> F2Word:
    """Parse space-separated syllables `l<a>,<b>^<e>`; `pair` is needed for the empty word"""
    syllables = []
    for token in text.split():
        match = _SYLLABLE.match(token)
        if not match:
            raise BraidWordError(f"Malformed syllable {token!r}")
        a, b, exponent = int(match.group(1)), int(match.group(2)), int(match.group(3) or 1)
        syllables.append(((a, b), exponent))
        if pair is None:
            pair = canonical_pair(a, b)
    if pair is None:
        raise BraidWordError("The empty word needs an explicit component pair")
    return F2Word.from_syllables(pair, syllables)
