import re
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from config import *
from src.errors import BraidWordError, StrandCountError

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'^([sSrR])([0-9]+)$')
_SEPARATORS = re.compile(r'[\s.]+')


class LetterKind(Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    RHO = "r"


@dataclass(frozen=True)
class Letter:
    kind: LetterKind
    index: int

    def inverse(self) -> "Letter":
        """σ_i and σ_i^{-1} swap, ρ_i is its own inverse"""
        if self.kind is LetterKind.SIGMA:
            return Letter(LetterKind.SIGMA_INV, self.index)
        if self.kind is LetterKind.SIGMA_INV:
            return Letter(LetterKind.SIGMA, self.index)
        return self

    def render(self) -> str:
        """Token form: s<i>, S<i> or r<i>"""
        return f"{self.kind.value}{self.index}"


@dataclass(frozen=True)
class BraidWord:
    """A word over σ_i^{±1}, ρ_i on n strands; the empty word is the identity"""
    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise StrandCountError(f"Strand count must be at least 1, got {self.n}")
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise StrandCountError(f"Letter {letter.render()} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)


def parse(text: str, n: Optional[int] = None, max_length: int = MAX_WORD_LENGTH) -> BraidWord:
    """Parse whitespace- or dot-separated tokens s<i>, S<i>, r<i>, R<i> into a BraidWord"""
    if n is not None and n < 1:
        raise BraidWordError(f"Strand count must be at least 1, got n={n}")

    tokens = [token for token in _SEPARATORS.split(text.strip()) if token]
    if len(tokens) > max_length:
        raise BraidWordError(f"Word has {len(tokens)} letters, limit is {max_length}")

    letters = []
    for position, token in enumerate(tokens):
        match = _TOKEN.match(token)
        if not match:
            raise BraidWordError(f"Malformed token {token!r} at position {position}")
        symbol, digits = match.groups()
        index = int(digits)
        if index == 0:
            raise BraidWordError(f"Generator index must be positive in token {token!r}")
        if symbol == "s":
            kind = LetterKind.SIGMA
        elif symbol == "S":
            kind = LetterKind.SIGMA_INV
        else:
            # ρ_i^2 = 1, so R<i> is just ρ_i
            kind = LetterKind.RHO
        letters.append(Letter(kind, index))

    if n is None:
        n = 1 + max((letter.index for letter in letters), default=0)
    elif letters:
        top = max(letter.index for letter in letters)
        if top >= n:
            raise BraidWordError(f"Generator index {top} needs at least {top + 1} strands, got n={n}")

    return BraidWord(n, tuple(letters))


def render(w: BraidWord) -> str:
    """Space-separated tokens; the empty word renders as an empty string"""
    return " ".join(letter.render() for letter in w.letters)


def invert_word(w: BraidWord) -> BraidWord:
    """Reverse the word and invert every letter"""
    return BraidWord(w.n, tuple(letter.inverse() for letter in reversed(w.letters)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    """Juxtapose two words on the same number of strands"""
    if a.n != b.n:
        raise StrandCountError(f"Cannot concatenate words on {a.n} and {b.n} strands")
    return BraidWord(a.n, a.letters + b.letters)


def is_sigma_only(w: BraidWord) -> bool:
    """True when the word is a classical braid word"""
    return all(letter.kind is not LetterKind.RHO for letter in w.letters)


def is_rho_only(w: BraidWord) -> bool:
    """True when the word only permutes strands"""
    return all(letter.kind is LetterKind.RHO for letter in w.letters)


def rho_to_sigma(w: BraidWord) -> BraidWord:
    """Replace every ρ_i by σ_i, leaving σ letters alone"""
    letters = tuple(
        Letter(LetterKind.SIGMA, letter.index) if letter.kind is LetterKind.RHO else letter
        for letter in w.letters
    )
    return BraidWord(w.n, letters)
