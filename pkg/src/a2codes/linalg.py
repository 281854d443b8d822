"""Row spaces over GF(2^e): reduction, rank, membership, sum, intersection.

Vectors are tuples of field elements (packed ints); matrices are tuples of
row tuples.  A Subspace is the canonical reduced-row-echelon basis of a row
space, so two Subspace values are equal exactly when they are the same
subspace, and any set or dict keyed on them deduplicates correctly.

Everything here is pure and immutable; nothing depends on a bilinear form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import GF2e

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def _add_scaled(field: GF2e, dst: Sequence[int], src: Sequence[int], c: int) -> list[int]:
    # dst + c*src; addition is XOR in characteristic 2
    if c == 0:
        return list(dst)
    if c == 1:
        return [x ^ y for x, y in zip(dst, src)]
    mul = field.mul
    return [x ^ mul(c, y) for x, y in zip(dst, src)]


def rref(field: GF2e, rows: Iterable[Sequence[int]]) -> tuple[Matrix, int]:
    """Unique reduced row echelon form and rank; the input is not modified."""
    work = [list(r) for r in rows]
    if not work:
        return (), 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pval = work[rank][col]
        if pval != 1:
            pinv = field.inv(pval)
            mul = field.mul
            work[rank] = [mul(pinv, x) for x in work[rank]]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                work[i] = _add_scaled(field, work[i], prow, work[i][col])
        rank += 1
        if rank == len(work):
            break
    return tuple(tuple(r) for r in work), rank


def rank_of(field: GF2e, rows: Iterable[Sequence[int]]) -> int:
    return rref(field, rows)[1]


@dataclass(frozen=True, order=True)
class Subspace:
    """A row space given by its canonical RREF basis with zero rows dropped.

    Ordering is lexicographic on (ambient, basis); within a family of equal
    shape that is the flattened-entry order used for deterministic output.
    """

    ambient: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, basis={list(map(list, self.basis))})"


def span(field: GF2e, ambient: int, rows: Iterable[Sequence[int]]) -> Subspace:
    """Subspace spanned by the given rows (each of length ambient)."""
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != ambient:
            raise ValueError(f"row of length {len(r)} in ambient dimension {ambient}")
        for x in r:
            field.check(x)
    reduced, rank = rref(field, rows)
    return Subspace(ambient, reduced[:rank])


def zero_subspace(ambient: int) -> Subspace:
    return Subspace(ambient, ())


def full_subspace(ambient: int) -> Subspace:
    ident = tuple(tuple(1 if j == i else 0 for j in range(ambient)) for i in range(ambient))
    return Subspace(ambient, ident)


def _pivot(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x != 0:
            return j
    raise ValueError("zero row has no pivot")


def contains(field: GF2e, sub: Subspace, vec: Sequence[int]) -> bool:
    """True iff vec lies in sub, by reduction against the RREF basis."""
    if len(vec) != sub.ambient:
        raise ValueError(f"vector length {len(vec)} != ambient {sub.ambient}")
    v = list(vec)
    for row in sub.basis:
        c = v[_pivot(row)]
        if c != 0:
            v = _add_scaled(field, v, row, c)
    return not any(v)


def subset(field: GF2e, a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b."""
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: {a.ambient} != {b.ambient}")
    return all(contains(field, b, row) for row in a.basis)


def subspace_sum(field: GF2e, a: Subspace, b: Subspace) -> Subspace:
    """Span of the union a + b."""
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: {a.ambient} != {b.ambient}")
    return span(field, a.ambient, a.basis + b.basis)


def left_kernel(field: GF2e, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {z : z . rows = 0}, the left kernel of the stacked matrix.

    Row-reduces [rows | I] pivoting only inside the first ncols columns;
    the identity part of the rows whose data part vanished is the kernel.
    """
    nrows = len(rows)
    if nrows == 0:
        return ()
    aug = [list(row) + [1 if j == i else 0 for j in range(nrows)] for i, row in enumerate(rows)]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        pval = aug[rank][col]
        if pval != 1:
            pinv = field.inv(pval)
            mul = field.mul
            aug[rank] = [mul(pinv, x) for x in aug[rank]]
        prow = aug[rank]
        for i in range(nrows):
            if i != rank and aug[i][col] != 0:
                aug[i] = _add_scaled(field, aug[i], prow, aug[i][col])
        rank += 1
        if rank == nrows:
            break
    return tuple(tuple(row[ncols:]) for row in aug if not any(row[:ncols]))


def subspace_intersect(field: GF2e, a: Subspace, b: Subspace) -> Subspace:
    """Exact intersection, via the left kernel of the stacked bases."""
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: {a.ambient} != {b.ambient}")
    stack = a.basis + b.basis
    vectors = []
    for coeff in left_kernel(field, stack, a.ambient):
        v = [0] * a.ambient
        for c, row in zip(coeff[: a.dim], a.basis):
            if c != 0:
                v = _add_scaled(field, v, row, c)
        vectors.append(v)
    return span(field, a.ambient, vectors)


def mat_mul(field: GF2e, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    """Matrix product over the field; b given row-major."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a[0])} columns vs {len(b)} rows")
    out = []
    for row in a:
        acc = [0] * (len(b[0]) if b else 0)
        for c, brow in zip(row, b):
            if c != 0:
                acc = _add_scaled(field, acc, brow, c)
        out.append(tuple(acc))
    return tuple(out)


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def unit_vector(ambient: int, index: int) -> Vector:
    """Standard basis row vector with a 1 in the given 0-indexed position."""
    if not 0 <= index < ambient:
        raise ValueError(f"index {index} outside ambient dimension {ambient}")
    return tuple(1 if j == index else 0 for j in range(ambient))


def vector_span(field: GF2e, sub: Subspace) -> frozenset[Vector]:
    """Every vector of the subspace; only sensible for small q**dim."""
    vecs = {(0,) * sub.ambient}
    for row in sub.basis:
        new = set()
        for v in vecs:
            for c in field.elements():
                new.add(tuple(_add_scaled(field, v, row, c)))
        vecs = new
    return frozenset(vecs)
