import functools
from typing import Final

from ..errors import FieldError
from .field import FieldSpec, int_to_digits
from .matrix import Matrix, companion_matrix, matrix_order

MAX_SINGER_ORDER: Final = 2**20


@functools.cache
def singer_modulus(base: FieldSpec, m: int) -> tuple[int, ...]:
    """First monic degree-``m`` polynomial over ``base`` whose companion matrix
    has order q^m - 1, searched in the same order as default field moduli."""

    if m < 1:
        raise FieldError(f"extension degree must be positive, got {m}")
    q = base.order
    group_order = q**m - 1
    if group_order + 1 > MAX_SINGER_ORDER:
        raise FieldError(f"q^m = {q}^{m} exceeds the supported maximum {MAX_SINGER_ORDER}")

    for v in range(q**m):
        coeffs = int_to_digits(v, q, m) + (1,)
        if coeffs[0] == 0:
            # x divides f, so the companion matrix is singular
            continue
        c = companion_matrix(base, coeffs)
        if matrix_order(base, c, group_order) == group_order:
            return coeffs
    raise FieldError(f"no primitive polynomial of degree {m} over GF({q})")


@functools.cache
def singer_matrix(base: FieldSpec, m: int) -> Matrix:
    """Multiplication by a primitive element of GF(q^m), as an m x m matrix over
    GF(q) acting on row vectors."""

    return companion_matrix(base, singer_modulus(base, m))
