"""Dense matrices over GF(q), stored as tuples of rows of integer-encoded
field elements. Vectors are rows and act on the left: ``v -> v A``."""

from typing import Sequence

import galois

from .field import FieldSpec, tables

Matrix = tuple[tuple[int, ...], ...]


def identity(m: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def vecmat(spec: FieldSpec, v: Sequence[int], a: Matrix) -> tuple[int, ...]:
    t = tables(spec)
    cols = len(a[0]) if a else 0
    out = [0] * cols
    for i, vi in enumerate(v):
        if vi == 0:
            continue
        row = a[i]
        mrow = t.mul[vi]
        for j in range(cols):
            if row[j]:
                out[j] = t.add[out[j]][mrow[row[j]]]
    return tuple(out)


def matmul(spec: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vecmat(spec, row, b) for row in a)


def matrix_power(spec: FieldSpec, a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative matrix powers are not supported")
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(spec, result, base)
        k >>= 1
        if k:
            base = matmul(spec, base, base)
    return result


def companion_matrix(spec: FieldSpec, coeffs: Sequence[int]) -> Matrix:
    """Matrix of multiplication by x on GF(q)[x]/(f) in the basis
    1, x, ..., x^(m-1), where ``coeffs`` is the monic ``f`` low-degree first."""

    m = len(coeffs) - 1
    neg = tables(spec).neg
    rows = [tuple(1 if j == i + 1 else 0 for j in range(m)) for i in range(m - 1)]
    rows.append(tuple(neg[c] for c in coeffs[:m]))
    return tuple(rows)


def matrix_order(spec: FieldSpec, a: Matrix, group_exponent: int) -> int | None:
    """Smallest ``d`` dividing ``group_exponent`` with ``a^d = I``, or None if
    ``a^group_exponent`` is not the identity."""

    ident = identity(len(a))
    if matrix_power(spec, a, group_exponent) != ident:
        return None
    order = group_exponent
    primes, _ = galois.factors(group_exponent) if group_exponent > 1 else ([], [])
    for p in primes:
        p = int(p)
        while order % p == 0 and matrix_power(spec, a, order // p) == ident:
            order //= p
    return order
