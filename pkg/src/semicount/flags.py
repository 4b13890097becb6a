"""Flags of subspaces and canonical basis adaptation.

Adapting an ordered basis e to a subspace U picks, for each position j
where the chain U ∩ span{e_(j+1), ..., e_(g-1)} drops in dimension, the
unique vector u_j of U whose e-coordinates have a 1 at j, zeros before j,
and zeros at the other drop positions.  Those drop positions J are exactly
the pivot columns of the reduced row echelon form of U written in
e-coordinates, and the u_j are its rows: the echelon normal form IS the
adapted set, which is why `linalg.rref` (leftmost-pivot convention) is the
engine here.  The adapted ordered basis lists the untouched e_j first
(increasing j) and then the u_j (increasing j), so its final dim(U)
vectors are a basis of U; and if the last n input vectors already lie in
U they are returned unchanged.

Adapting to a whole flag iterates this from the smallest member upward;
because each step freezes the tail that lies in the smaller member, the
result is simultaneously adapted to every member, and it is unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FiniteField
from .linalg import (
    Matrix,
    Vector,
    in_span,
    mat_apply,
    mat_inverse,
    matrix_from_cols,
    matrix_from_rows,
    rref,
    rref_basis,
    span_dim,
    standard_basis,
)
from .semilinear import SemilinearMap, apply, compose, identity_map


@dataclass(frozen=True)
class Flag:
    """Strictly decreasing chain of subspaces, V = V_0 ⊋ V_1 ⊋ ...

    Members are stored as canonical rref bases (the zero subspace is the
    empty tuple), so flags compare equal iff the subspace chains agree.
    The last member may be nonzero: image flags stabilize at the terminal
    image of the map that produced them.
    """

    ctx: FiniteField
    g: int
    subspaces: tuple[tuple[Vector, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.subspaces)


def make_flag(ctx: FiniteField, g: int, members) -> Flag:
    """Validate and canonicalize a chain of subspace bases into a Flag.

    The full space is prepended when absent.  Dimensions must be strictly
    decreasing and each member must contain the next.
    """
    canon = []
    for basis in members:
        basis = [tuple(v) for v in basis]
        if any(len(v) != g for v in basis):
            raise ValueError("flag member vector of wrong length")
        normal = rref_basis(ctx, basis)
        if len(normal) != len(basis):
            raise ValueError("flag member basis is linearly dependent")
        canon.append(normal)
    full = tuple(standard_basis(g))
    if not canon or len(canon[0]) < g:
        canon.insert(0, full)
    dims = [len(m) for m in canon]
    if any(d2 >= d1 for d1, d2 in zip(dims, dims[1:])):
        raise ValueError(f"flag dimensions must strictly decrease, got {dims}")
    for upper, lower in zip(canon, canon[1:]):
        if any(not in_span(ctx, list(upper), v) for v in lower):
            raise ValueError("flag members are not nested")
    return Flag(ctx, g, tuple(canon))


@dataclass(frozen=True)
class AdaptedBasis:
    """Ordered basis adapted to a flag, plus the pivot set of every step.

    `pivot_sets[i]` is the 0-based pivot index set J produced while
    adapting to `flag.subspaces[i + 1]` (one entry per proper member, in
    flag order, largest first).  For each member of dimension d, the last
    d basis vectors span it.
    """

    vectors: tuple[Vector, ...]
    pivot_sets: tuple[tuple[int, ...], ...]


def adapt_to_subspace(
    ctx: FiniteField,
    e_basis,
    u_basis,
    frozen_tail: int = 0,
) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Adapt an ordered basis of V to the subspace U = span(u_basis).

    Returns the new ordered basis and the pivot index set J (0-based,
    relative to positions in `e_basis`).  With `frozen_tail = n`, the last
    n vectors of `e_basis` must already lie in U and come back unchanged.
    """
    e_basis = [tuple(v) for v in e_basis]
    u_basis = [tuple(v) for v in u_basis]
    g = len(e_basis)
    if span_dim(ctx, e_basis) != g:
        raise ValueError("e_basis is not a basis")
    E = matrix_from_cols(ctx, e_basis)
    E_inv = mat_inverse(E)
    if not u_basis:
        return tuple(e_basis), ()
    # coordinates of U relative to the current ordered basis
    coords = [mat_apply(E_inv, u) for u in u_basis]
    m = len(u_basis)
    if span_dim(ctx, coords) != m:
        raise ValueError("u_basis is linearly dependent")
    if frozen_tail:
        if frozen_tail > m:
            raise ValueError("frozen tail longer than dim U")
        tail_units = [tuple(1 if i == j else 0 for i in range(g))
                      for j in range(g - frozen_tail, g)]
        if any(not in_span(ctx, coords, unit) for unit in tail_units):
            raise ValueError("frozen-tail precondition violated: "
                             "last vectors of e_basis do not lie in U")
    R, pivots = rref(matrix_from_rows(ctx, coords))
    pivot_set = set(pivots)
    adapted = [e_basis[j] for j in range(g) if j not in pivot_set]
    for i in range(m):
        # row i of the rref, mapped back to ambient coordinates
        adapted.append(mat_apply(E, R.row(i)))
    return tuple(adapted), tuple(pivots)


def adapt_to_flag(ctx: FiniteField, e_basis, flag: Flag) -> AdaptedBasis:
    """Canonical basis simultaneously adapted to every member of the flag.

    Proper members are processed smallest first; each round freezes the
    tail spanning the previously adapted member, so earlier adaptations
    survive later ones.
    """
    e_basis = [tuple(v) for v in e_basis]
    basis = tuple(e_basis)
    pivot_sets: list[tuple[int, ...]] = []
    prev_dim = 0
    for member in reversed(flag.subspaces[1:]):
        basis, pivots = adapt_to_subspace(ctx, basis, member, frozen_tail=prev_dim)
        pivot_sets.append(pivots)
        prev_dim = len(member)
    return AdaptedBasis(basis, tuple(reversed(pivot_sets)))


def image_flag(F: SemilinearMap) -> Flag:
    """The chain V ⊋ F(V) ⊋ F²(V) ⊋ ... down to the terminal image."""
    ctx = F.ctx
    g = F.g
    members = [tuple(standard_basis(g))]
    current = identity_map(ctx, g)
    prev_dim = g
    for _ in range(g):
        current = compose(F, current)
        basis = rref_basis(ctx, [current.mat.col(j) for j in range(g)])
        if len(basis) == prev_dim:
            break
        members.append(basis)
        prev_dim = len(basis)
    return Flag(ctx, g, tuple(members))
