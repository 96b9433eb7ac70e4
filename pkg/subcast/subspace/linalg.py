"""Row reduction over GF(q) on integer-encoded field elements."""

from typing import Iterable, Sequence

from ..gf.field import FieldSpec, tables

Vector = tuple[int, ...]


def rref(spec: FieldSpec, rows: Iterable[Sequence[int]], width: int) -> tuple[Vector, ...]:
    """Canonical reduced row-echelon form of the row space: nonzero rows only,
    leading entries 1, pivot columns cleared elsewhere."""

    t = tables(spec)
    add, mul, neg, inv = t.add, t.mul, t.neg, t.inv
    mat = [list(r) for r in rows if any(r)]
    nrows = len(mat)
    pivot_row = 0
    for col in range(width):
        if pivot_row == nrows:
            break
        sel = next((r for r in range(pivot_row, nrows) if mat[r][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        prow = mat[pivot_row]
        lead = prow[col]
        if lead != 1:
            scale = mul[inv[lead]]
            prow = [scale[x] for x in prow]
            mat[pivot_row] = prow
        for r in range(nrows):
            if r == pivot_row:
                continue
            row = mat[r]
            f = row[col]
            if f == 0:
                continue
            nf = mul[neg[f]]
            mat[r] = [add[row[j]][nf[prow[j]]] for j in range(width)]
        pivot_row += 1
    return tuple(tuple(r) for r in mat[:pivot_row])


def rank(spec: FieldSpec, rows: Iterable[Sequence[int]], width: int) -> int:
    return len(rref(spec, rows, width))


def left_kernel(spec: FieldSpec, rows: Sequence[Sequence[int]], width: int) -> list[Vector]:
    """Basis of ``{c : sum(c_i * rows_i) = 0}`` via reduction of ``[rows | I]``."""

    k = len(rows)
    augmented = [
        tuple(row) + tuple(1 if i == j else 0 for j in range(k))
        for i, row in enumerate(rows)
    ]
    reduced = rref(spec, augmented, width + k)
    return [r[width:] for r in reduced if not any(r[:width])]


def combine(
    spec: FieldSpec,
    coeffs: Sequence[int],
    rows: Sequence[Sequence[int]],
    width: int,
) -> Vector:
    t = tables(spec)
    out = [0] * width
    for c, row in zip(coeffs, rows):
        if c == 0:
            continue
        mrow = t.mul[c]
        for j in range(width):
            out[j] = t.add[out[j]][mrow[row[j]]]
    return tuple(out)
