"""
Symmetric group arithmetic in one-line notation, 1-based.

Composition is (s∘t)(x) = s(t(x)) everywhere in the engine; the action
formulas of the pure subgroup are written against this convention.
"""

import math
import logging
from dataclasses import dataclass
from typing import List, Set, Tuple

from src.braid_words import BraidWord, Letter, LetterKind
from src.errors import BraidWordError, StrandCountError

logger = logging.getLogger(__name__)

OrderedPair = Tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) < 1:
            raise StrandCountError("A permutation needs at least one point")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise StrandCountError(f"{list(self.images)} is not a bijection of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """The identity of S_n"""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """The transposition swapping i and j"""
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        """Inverse permutation"""
        images = [0] * self.n
        for x, image in enumerate(self.images, start=1):
            images[image - 1] = x
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(image == x for x, image in enumerate(self.images, start=1))


@dataclass(frozen=True)
class OrbitBlock:
    """
    One orbit O_k of ⟨s⟩ on unordered pairs. `cycle` holds the ordered pairs
    (i0,j0), (s(i0),s(j0)), ... of length `size`; `epsilon` is 2 when the
    ordered orbit of (i0,j0) also contains (j0,i0).
    """
    representative: OrderedPair
    size: int
    epsilon: int
    cycle: Tuple[OrderedPair, ...]

    @property
    def pairs(self) -> Set[OrderedPair]:
        return {(min(a, b), max(a, b)) for a, b in self.cycle}


@dataclass(frozen=True)
class OrbitPartition:
    blocks: Tuple[OrbitBlock, ...]

    def __len__(self) -> int:
        return len(self.blocks)


def compose(s: Permutation, t: Permutation) -> Permutation:
    """s∘t, applying t first"""
    if s.n != t.n:
        raise StrandCountError(f"Cannot compose permutations of degree {s.n} and {t.n}")
    return Permutation(tuple(s(t(x)) for x in range(1, s.n + 1)))


def perm_order_and_cycles(s: Permutation) -> Tuple[int, List[Tuple[int, ...]]]:
    """Cycles ordered by least element, each starting at its least element; fixed points included"""
    cycles = []
    seen = set()
    for start in range(1, s.n + 1):
        if start in seen:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = s(x)
        cycles.append(tuple(cycle))
    order = math.lcm(*(len(cycle) for cycle in cycles))
    return order, cycles


def perm_order(s: Permutation) -> int:
    """Order of s in S_n"""
    return perm_order_and_cycles(s)[0]


def pair_orbits(s: Permutation) -> OrbitPartition:
    """Orbits of ⟨s⟩ on unordered pairs, one block per orbit in lexicographic order of representatives"""
    if s.n < 2:
        raise StrandCountError("Pair orbits need at least two points")

    blocks = []
    visited = set()
    for i in range(1, s.n + 1):
        for j in range(i + 1, s.n + 1):
            if (i, j) in visited:
                continue
            # (i, j) is the lexicographically least ordered pair of its block
            ordered_orbit = [(i, j)]
            a, b = s(i), s(j)
            while (a, b) != (i, j):
                ordered_orbit.append((a, b))
                a, b = s(a), s(b)
            epsilon = 2 if (j, i) in ordered_orbit else 1
            size = len(ordered_orbit) // epsilon
            cycle = tuple(ordered_orbit[:size])
            visited.update((min(p), max(p)) for p in cycle)
            blocks.append(OrbitBlock(representative=(i, j), size=size, epsilon=epsilon, cycle=cycle))

    return OrbitPartition(tuple(blocks))


def _insertion_swaps(images: List[int]) -> List[int]:
    swaps = []
    for i in range(1, len(images)):
        j = i
        while j > 0 and images[j - 1] > images[j]:
            images[j - 1], images[j] = images[j], images[j - 1]
            swaps.append(j)
            j -= 1
    return swaps


def _bubble_swaps(images: List[int]) -> List[int]:
    # right-to-left passes, so the sequence differs from insertion sort in general
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(images) - 1, 0, -1):
            if images[j - 1] > images[j]:
                images[j - 1], images[j] = images[j], images[j - 1]
                swaps.append(j)
                changed = True
    return swaps


def adjacent_lift(s: Permutation, method: str = "insertion") -> BraidWord:
    """
    A ρ-only word whose permutation is s.

    Sorting the one-line notation by adjacent swaps at positions j1, ..., jk
    gives s∘s_{j1}∘...∘s_{jk} = id, hence s = s_{jk}∘...∘s_{j1}.
    """
    if method == "insertion":
        swaps = _insertion_swaps(list(s.images))
    elif method == "bubble":
        swaps = _bubble_swaps(list(s.images))
    else:
        raise ValueError(f"Unknown lift method: {method}")
    letters = tuple(Letter(LetterKind.RHO, j) for j in reversed(swaps))
    return BraidWord(s.n, letters)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation such as `[2,1,3]`"""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise BraidWordError(f"Permutation must be written as [a,b,...], got {text!r}")
    try:
        images = tuple(int(part) for part in body[1:-1].split(",") if part.strip())
    except ValueError:
        raise BraidWordError(f"Non-integer entry in permutation {text!r}")
    try:
        return Permutation(images)
    except StrandCountError as e:
        raise BraidWordError(str(e))


def render_permutation(s: Permutation) -> str:
    """One-line notation without spaces, e.g. `[2,1,3]`"""
    return "[" + ",".join(str(image) for image in s.images) + "]"
