from .field import (
    FieldElement,
    FieldSpec,
    add,
    element,
    element_from_int,
    element_order,
    field_for_order,
    field_new,
    inv,
    mul,
    primitive_element,
)
from .matrix import Matrix, companion_matrix, identity, matmul, matrix_order, matrix_power
from .singer import singer_matrix, singer_modulus

__all__ = [
    "FieldElement",
    "FieldSpec",
    "Matrix",
    "add",
    "companion_matrix",
    "element",
    "element_from_int",
    "element_order",
    "field_for_order",
    "field_new",
    "identity",
    "inv",
    "matmul",
    "matrix_order",
    "matrix_power",
    "mul",
    "primitive_element",
    "singer_matrix",
    "singer_modulus",
]
