"""Pseudo-symplectic structure over GF(2^e).

The ambient space is the row-vector space F_q^(2v+d), q even, d in {1, 2},
carrying the non-alternate symmetric form

    S_1 = diag(K, 1),    S_2 = diag(K, [[0,1],[1,1]]),

where K is the 2v x 2v hyperbolic block pairing coordinate i with v+i.
A subspace P is classified by the congruence class of its Gram matrix
G = B S ~B (B the canonical basis): in characteristic 2 the class is
determined by the rank of G together with whether G is alternate (all-zero
diagonal), plus the flag recording membership of the distinguished vector
e_{2v+1}.  The resulting tuple is (dim, 2s+tau, s, tau, eps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import GF2e
from .linalg import (
    Matrix,
    Subspace,
    contains,
    left_kernel,
    mat_mul,
    rref,
    span,
    transpose,
    unit_vector,
)


@dataclass(frozen=True)
class PsSpace:
    """Ambient pseudo-symplectic space: dimensions, field, and form matrix."""

    field: GF2e
    nu: int
    delta: int
    n: int
    form: Matrix

    @property
    def special_index(self) -> int:
        """0-indexed position of the distinguished coordinate e_{2v+1}."""
        return 2 * self.nu


def hyperbolic_form(nu: int) -> Matrix:
    """The 2v x 2v block [[0, I],[I, 0]] of mutually pairing coordinates."""
    n = 2 * nu
    rows = []
    for i in range(n):
        partner = i + nu if i < nu else i - nu
        rows.append(tuple(1 if j == partner else 0 for j in range(n)))
    return tuple(rows)


def build_space(field: GF2e, nu: int, delta: int) -> PsSpace:
    """Assemble the form matrix for the given v and d in {1, 2}."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")
    n = 2 * nu + delta
    k = hyperbolic_form(nu)
    rows = [list(r) + [0] * delta for r in k]
    if delta == 1:
        tail = [0] * n
        tail[n - 1] = 1
        rows.append(tail)
    else:
        tail1 = [0] * n
        tail1[n - 1] = 1
        tail2 = [0] * n
        tail2[n - 2] = 1
        tail2[n - 1] = 1
        rows.append(tail1)
        rows.append(tail2)
    return PsSpace(field=field, nu=nu, delta=delta, n=n, form=tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SubspaceType:
    """Classification tuple (dim, 2s+tau, s, tau, eps) of a subspace."""

    dim: int
    form_rank: int
    s_index: int
    tau: int
    eps: int

    def __post_init__(self) -> None:
        if self.tau not in (0, 1, 2):
            raise ValueError(f"tau must be 0, 1 or 2, got {self.tau}")
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        if self.form_rank != 2 * self.s_index + self.tau:
            raise ValueError(
                f"form rank {self.form_rank} != 2*{self.s_index} + {self.tau}"
            )
        if not 0 <= self.form_rank <= self.dim:
            raise ValueError(f"form rank {self.form_rank} outside [0, {self.dim}]")

    def __str__(self) -> str:
        return f"({self.dim},{self.form_rank},{self.s_index},{self.eps})"


def gram(space: PsSpace, sub: Subspace) -> Matrix:
    """The dim x dim symmetric matrix B S ~B for the canonical basis B."""
    if sub.ambient != space.n:
        raise ValueError(f"ambient mismatch: {sub.ambient} != {space.n}")
    bs = mat_mul(space.field, sub.basis, space.form)
    return mat_mul(space.field, bs, transpose(sub.basis))


def classify(space: PsSpace, sub: Subspace) -> SubspaceType:
    """Type of a subspace from rank and alternacy of its Gram matrix.

    Alternate Gram of rank 2s gives (m, 2s, s); a non-alternate Gram gives
    (m, 2s+1, s) or (m, 2s+2, s) by rank parity.  An alternate matrix of odd
    rank cannot exist in characteristic 2, so that case is a hard failure.
    """
    g = gram(space, sub)
    _, rank = rref(space.field, g)
    alternate = all(g[i][i] == 0 for i in range(len(g)))
    if alternate:
        if rank % 2 != 0:
            raise ArithmeticError(
                f"alternate Gram matrix with odd rank {rank}; classification is broken"
            )
        s_index, tau = rank // 2, 0
    elif rank % 2 == 1:
        s_index, tau = (rank - 1) // 2, 1
    else:
        s_index, tau = (rank - 2) // 2, 2
    special = unit_vector(space.n, space.special_index)
    eps = 1 if contains(space.field, sub, special) else 0
    return SubspaceType(dim=sub.dim, form_rank=rank, s_index=s_index, tau=tau, eps=eps)


def perp(space: PsSpace, sub: Subspace) -> Subspace:
    """All vectors orthogonal to the subspace; dimension n - dim always."""
    if sub.ambient != space.n:
        raise ValueError(f"ambient mismatch: {sub.ambient} != {space.n}")
    # y is orthogonal to every basis row b iff y . (S ~B) = 0.
    constraints = mat_mul(space.field, space.form, transpose(sub.basis))
    coeffs = left_kernel(space.field, constraints, sub.dim)
    out = span(space.field, space.n, coeffs)
    if out.dim != space.n - sub.dim:
        raise AssertionError(
            f"perp dimension {out.dim} != {space.n - sub.dim}; form is degenerate?"
        )
    return out
