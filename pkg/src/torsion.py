"""
Orders of elements of UVB_n and conjugation of torsion elements to permutations.

For w = u·ι(s) the k-th power is u·s(u)⋯s^{k-1}(u)·ι(s^k). UVP_n is torsion
free, so w has finite order exactly when the cocycle product over one period
r = o(s) is trivial, and then the order is r.
"""

import logging
from typing import Dict, Optional, Tuple

from src.errors import PreconditionError
from src.free2 import F2Word, Pair, canonical_pair, f2_mul, f2_relabel, render_f2, solve_alpha_coboundary
from src.perms import OrbitBlock, pair_orbits, perm_order
from src.uvb import NormalForm, conjugate, iota, nf_of_pure
from src.uvp import PureElement, act_perm, component, uvp_mul

logger = logging.getLogger(__name__)


def cocycle_product(w: NormalForm, k: int) -> PureElement:
    """u·s(u)⋯s^{k-1}(u), the pure part of w^k"""
    product = PureElement.identity(w.n)
    shifted = w.pure
    for _ in range(k):
        product = uvp_mul(product, shifted)
        shifted = act_perm(w.perm, shifted)
    return product


def order_of(w: NormalForm) -> Optional[int]:
    """The order of w, or None when w has infinite order"""
    r = perm_order(w.perm)
    if cocycle_product(w, r).is_identity():
        return r
    return None


def _solve_block(w: NormalForm, block: OrbitBlock) -> Dict[Pair, F2Word]:
    """
    Solve u_j = v_j · s(v_{j-1})^{-1} around one orbit block.

    u_j is the component of w at the j-th pair of the block cycle. The
    recursion v_j = u_j · s(v_{j-1}) closes up exactly when
    W = u_0 · s(u_{n1-1}) · s²(u_{n1-2}) ⋯ s^{n1-1}(u_1) equals v_0·s^{n1}(v_0)^{-1},
    where s^{n1} is the identity (ε=1) or α (ε=2) on F_{i0,j0}.
    """
    s = w.perm
    cycle = [canonical_pair(a, b) for a, b in block.cycle]
    u = [component(w.pure, pair) for pair in cycle]

    # Step 1: closing word W, folded from the right: W = u_0 · s(u_{n1-1} · s(u_{n1-2} ⋯ s(u_1)))
    closing = u[0]
    if block.size > 1:
        tail = u[1]
        for j in range(2, block.size):
            tail = f2_mul(u[j], f2_relabel(tail, s))
        closing = f2_mul(u[0], f2_relabel(tail, s))

    # Step 2: seed v_0
    if block.epsilon == 1:
        if not closing.is_identity():
            raise PreconditionError(f"Block {block.representative} does not close up: {render_f2(closing)}")
        seed = F2Word.identity(cycle[0])
    else:
        seed = solve_alpha_coboundary(closing)

    # Step 3: propagate v_j = u_j · s(v_{j-1}) around the cycle
    solution = {cycle[0]: seed}
    previous = seed
    for j in range(1, block.size):
        previous = f2_mul(u[j], f2_relabel(previous, s))
        solution[cycle[j]] = previous
    return solution


def torsion_conjugator(w: NormalForm) -> PureElement:
    """
    Λ ∈ UVP_n with Λ·ι(s)·Λ^{-1} = w for a torsion element w = u·ι(s).

    Orbit blocks of s on pairs are independent direct summands, so each is
    solved on its own and the pieces are assembled componentwise.
    """
    if order_of(w) is None:
        raise PreconditionError("Element has infinite order; it is not conjugate to a permutation")
    if w.n < 2:
        return PureElement.identity(w.n)

    components = {}
    for block in pair_orbits(w.perm).blocks:
        components.update(_solve_block(w, block))
    conjugator = PureElement.from_components(w.n, components)
    logger.debug(f"Conjugator with {len(conjugator.components)} nontrivial components")
    return conjugator


def verify_conjugator(w: NormalForm, conjugator: PureElement) -> bool:
    """Check Λ·ι(s)·Λ^{-1} = w by direct multiplication"""
    return conjugate(nf_of_pure(conjugator), iota(w.perm)) == w


def order_two_decomposition(w: NormalForm) -> Tuple[PureElement, NormalForm]:
    """(g, ρ) with ρ = ι(s) of order 2 and w = g·ρ·g^{-1}"""
    if order_of(w) != 2:
        raise PreconditionError("Element does not have order 2")
    return torsion_conjugator(w), iota(w.perm)
