"""Exact arithmetic in GF(p^e).

Elements are canonical coefficient vectors ``(c_0, ..., c_{e-1})`` over the
prime field, read low-degree first. Every element also has an integer
encoding ``sum(c_i * p**i)``; that encoding defines the canonical element
ordering and indexes the precomputed operation tables that the linear
algebra layers use on their hot paths.
"""

from dataclasses import dataclass
import functools
from typing import Any, Final, Iterator, NamedTuple, Sequence, TypedDict

import galois
import numpy as np

from ..errors import FieldError

# Operation tables are q x q, so the field order must stay at desk scale.
MAX_FIELD_ORDER: Final = 4096


class FieldSpecDocType(TypedDict):
    p: int
    e: int
    modulus: list[int]


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    degree: int
    modulus: tuple[int, ...]
    """Monic modulus, low-degree coefficient first; length is ``degree + 1``."""

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    def __str__(self) -> str:
        return f"GF({self.order}) mod {format_poly(self.modulus)}"

    def to_json(self) -> FieldSpecDocType:
        return {
            "p": self.characteristic,
            "e": self.degree,
            "modulus": list(self.modulus),
        }

    @classmethod
    def from_json(cls, doc: FieldSpecDocType) -> "FieldSpec":
        return field_new(int(doc["p"]), int(doc["e"]), [int(c) for c in doc["modulus"]])

    def elements(self) -> Iterator["FieldElement"]:
        """Yields all field elements in canonical order."""
        for i in range(self.order):
            yield element_from_int(self, i)


def format_poly(coeffs: Sequence[int]) -> str:
    terms: list[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if c == 1 or i == 0:
            terms.append(mono if c == 1 else str(c))
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def int_to_digits(v: int, base: int, width: int) -> tuple[int, ...]:
    digits = []
    for _ in range(width):
        v, d = divmod(v, base)
        digits.append(d)
    return tuple(digits)


def _galois_poly(coeffs: Sequence[int], gf: type[galois.FieldArray]) -> galois.Poly:
    # galois wants the highest-degree coefficient first
    return galois.Poly(list(reversed(coeffs)), field=gf)


def _is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
    return bool(_galois_poly(coeffs, galois.GF(p)).is_irreducible())


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    # monic candidates in increasing integer encoding of (c_0, ..., c_{e-1}),
    # i.e. compared from the highest free coefficient downwards
    for v in range(p**e):
        coeffs = int_to_digits(v, p, e) + (1,)
        if _is_irreducible(p, coeffs):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")


def field_new(
    characteristic: int,
    degree: int,
    modulus: Sequence[int] | None = None,
) -> FieldSpec:
    if degree < 1:
        raise FieldError(f"degree must be positive, got {degree}")
    if characteristic < 2 or not galois.is_prime(characteristic):
        raise FieldError(f"characteristic {characteristic} is not prime")
    if characteristic**degree > MAX_FIELD_ORDER:
        raise FieldError(
            f"field order {characteristic}^{degree} exceeds the supported maximum {MAX_FIELD_ORDER}"
        )

    if modulus is None:
        return FieldSpec(characteristic, degree, _default_modulus(characteristic, degree))

    coeffs = tuple(int(c) for c in modulus)
    if len(coeffs) != degree + 1:
        raise FieldError(
            f"modulus must have {degree + 1} coefficients for degree {degree}, got {len(coeffs)}"
        )
    if coeffs[-1] != 1:
        raise FieldError(f"modulus {format_poly(coeffs)} is not monic")
    if any(c < 0 or c >= characteristic for c in coeffs):
        raise FieldError(f"modulus coefficients must lie in [0, {characteristic})")
    if not _is_irreducible(characteristic, coeffs):
        raise FieldError(
            f"modulus {format_poly(coeffs)} is reducible over GF({characteristic})"
        )
    return FieldSpec(characteristic, degree, coeffs)


@functools.cache
def field_for_order(q: int) -> FieldSpec:
    """The default field of prime-power order ``q``."""

    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return field_new(int(primes[0]), int(exponents[0]))


@functools.cache
def galois_field(spec: FieldSpec) -> type[galois.FieldArray]:
    base = galois.GF(spec.characteristic)
    if spec.degree == 1:
        return base
    return galois.GF(spec.order, irreducible_poly=_galois_poly(spec.modulus, base))


class FieldTables(NamedTuple):
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]
    """``inv[0]`` is a placeholder 0 and must never be consulted."""


def _as_int_rows(a: Any) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in np.asarray(a).tolist())


@functools.cache
def tables(spec: FieldSpec) -> FieldTables:
    gf = galois_field(spec)
    elems = gf.elements
    add_t = _as_int_rows((elems[:, np.newaxis] + elems[np.newaxis, :]).view(np.ndarray))
    mul_t = _as_int_rows((elems[:, np.newaxis] * elems[np.newaxis, :]).view(np.ndarray))
    neg_t = tuple(int(x) for x in (-elems).view(np.ndarray).tolist())
    inv_t = (0,) + tuple(int(x) for x in np.reciprocal(elems[1:]).view(np.ndarray).tolist())
    return FieldTables(add_t, mul_t, neg_t, inv_t)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.spec.degree:
            raise FieldError(
                f"element needs {self.spec.degree} coefficients, got {len(self.coeffs)}"
            )
        p = self.spec.characteristic
        if any(c < 0 or c >= p for c in self.coeffs):
            raise FieldError(f"coefficients must lie in [0, {p})")

    def __int__(self) -> int:
        p = self.spec.characteristic
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __neg__(self) -> "FieldElement":
        return element_from_int(self.spec, tables(self.spec).neg[int(self)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def element(spec: FieldSpec, coeffs: Sequence[int]) -> FieldElement:
    return FieldElement(spec, tuple(int(c) for c in coeffs))


def element_from_int(spec: FieldSpec, v: int) -> FieldElement:
    if v < 0 or v >= spec.order:
        raise FieldError(f"{v} does not encode an element of GF({spec.order})")
    return FieldElement(spec, int_to_digits(v, spec.characteristic, spec.degree))


def _check_same_spec(a: FieldElement, b: FieldElement) -> None:
    if a.spec != b.spec:
        raise FieldError(f"operands belong to different fields: {a.spec} vs {b.spec}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_spec(a, b)
    return element_from_int(a.spec, tables(a.spec).add[int(a)][int(b)])


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_spec(a, b)
    return element_from_int(a.spec, tables(a.spec).mul[int(a)][int(b)])


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise FieldError("inversion of zero")
    return element_from_int(a.spec, tables(a.spec).inv[int(a)])


def element_order(a: FieldElement) -> int:
    if a.is_zero():
        raise FieldError("zero has no multiplicative order")
    gf = galois_field(a.spec)
    return int(gf(int(a)).multiplicative_order())


@functools.cache
def primitive_element(spec: FieldSpec) -> FieldElement:
    """The smallest element, in canonical order, of multiplicative order q - 1."""

    gf = galois_field(spec)
    orders = gf.elements[1:].multiplicative_order()
    for i, o in enumerate(np.asarray(orders).tolist(), start=1):
        if int(o) == spec.order - 1:
            return element_from_int(spec, i)
    raise FieldError(f"{spec} has no primitive element")  # unreachable for a field
