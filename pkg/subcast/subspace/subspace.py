from dataclasses import dataclass
import functools
from typing import Iterable, Sequence

from ..errors import AmbientMismatchError, SingularMatrixError
from ..gf.field import FieldSpec, field_for_order
from ..gf.matrix import Matrix, vecmat
from .linalg import Vector, combine, left_kernel, rank, rref

SubspaceDocType = list[list[int]]


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^m held by its canonical RREF basis, so equality of
    values is equality of subspaces."""

    q: int
    m: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> FieldSpec:
        return field_for_order(self.q)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.dim, tuple(x for row in self.basis for x in row))

    def __lt__(self, other: "Subspace") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.basis:
            return "<0>"
        return "<" + ", ".join("".join(str(x) for x in row) for row in self.basis) + ">"

    def to_json(self) -> SubspaceDocType:
        return [list(row) for row in self.basis]

    @classmethod
    def from_json(cls, q: int, m: int, doc: SubspaceDocType) -> "Subspace":
        if not isinstance(doc, list) or not all(isinstance(row, list) for row in doc):
            raise ValueError(f"a subspace is a list of basis rows, got {doc!r}")
        for row in doc:
            # bool is an int subclass
            if any(isinstance(x, bool) or not isinstance(x, int) for x in row):
                raise ValueError(f"basis row entries must be integers: {row!r}")
        return from_generators(q, m, doc)


def from_generators(q: int, m: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    spec = field_for_order(q)
    rows = []
    for v in vectors:
        if len(v) != m:
            raise AmbientMismatchError("vector length", len(v), m)
        if any(x < 0 or x >= q for x in v):
            raise ValueError(f"vector entries must lie in [0, {q}): {tuple(v)}")
        rows.append(tuple(v))
    return Subspace(q, m, rref(spec, rows, m))


def zero(q: int, m: int) -> Subspace:
    return Subspace(q, m, ())


def full(q: int, m: int) -> Subspace:
    return Subspace(q, m, tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m)))


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if (u.q, u.m) != (v.q, v.m):
        raise AmbientMismatchError("ambient space", (u.q, u.m), (v.q, v.m))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace(u.q, u.m, rref(u.field, u.basis + v.basis, u.m))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    if not u.basis or not v.basis:
        return zero(u.q, u.m)
    spec = u.field
    stacked = u.basis + v.basis
    # (a | b) with a*B_U + b*B_V = 0 gives a*B_U in U and V
    gens = [combine(spec, c[: u.dim], u.basis, u.m) for c in left_kernel(spec, stacked, u.m)]
    return Subspace(u.q, u.m, rref(spec, gens, u.m))


def contains(u: Subspace, v: Subspace) -> bool:
    """Whether ``v`` is a subspace of ``u``."""
    _check_ambient(u, v)
    return rank(u.field, u.basis + v.basis, u.m) == u.dim


@functools.lru_cache(maxsize=1 << 16)
def distance(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    # dim(U+V) - dim(U∩V) = 2 dim(U+V) - dim U - dim V
    s = rank(u.field, u.basis + v.basis, u.m)
    return 2 * s - u.dim - v.dim


def apply_matrix(a: Matrix, u: Subspace) -> Subspace:
    if len(a) != u.m or any(len(row) != u.m for row in a):
        raise AmbientMismatchError("matrix shape", (len(a), len(a[0]) if a else 0), (u.m, u.m))
    spec = u.field
    if rank(spec, a, u.m) != u.m:
        raise SingularMatrixError()
    return Subspace(u.q, u.m, rref(spec, (vecmat(spec, row, a) for row in u.basis), u.m))
