"""Dense real Euclidean Clifford algebra Cl(n).

A multivector is a flat array of 2**n coefficients, one per basis
blade.  Blades are indexed by n-bit words: bit k-1 of the word records
whether the orthonormal generator b_k is present, so b_1 is word
0b001, b_1 b_2 is word 0b011 and the scalar blade is word 0.  Every
module in this package states coefficients in this one convention.

Generators square to +1 and anticommute, so the product of two blades
lands on the XOR of their words; the sign is (-1)**T where T counts
the transpositions needed to sort the merged generator sequence.  A
slow symbolic reordering oracle in the test suite pins this rule down
independently.
"""

from __future__ import annotations

import math
import numbers
from functools import lru_cache

import numpy as np

MAX_DIM = 16

# Full sign/index tables are materialized up to this dimension; larger
# algebras fall back to a pairwise loop over nonzero coefficients.
_TABLE_DIM_LIMIT = 8


def _check_dim(dim) -> None:
    if not isinstance(dim, numbers.Integral) or isinstance(dim, bool):
        raise ValueError(f"dimension must be an integer, got {dim!r}")
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be in [1, {MAX_DIM}], got {dim}")


def blade_product(m1: int, m2: int, dim: int) -> tuple[int, int]:
    """Multiply two basis blades given as bit words.

    Returns ``(word, sign)`` with ``word = m1 ^ m2``.  The sign counts,
    for each generator of ``m2``, the generators of ``m1`` sitting
    strictly above it: each such pair costs one anticommuting swap.
    Repeated generators annihilate with a +1 square.
    """
    _check_dim(dim)
    size = 1 << dim
    if not (0 <= m1 < size and 0 <= m2 < size):
        raise ValueError(f"blade word out of range for Cl({dim}): {m1}, {m2}")
    swaps = 0
    shifted = m1 >> 1
    while shifted:
        swaps += (shifted & m2).bit_count()
        shifted >>= 1
    return m1 ^ m2, (-1 if swaps & 1 else 1)


class Multivector:
    """Immutable element of Cl(dim) with dense float64 coefficients.

    ``coeffs[m]`` is the coefficient of the blade with word ``m``; the
    backing array is read-only and coefficients must be finite.
    """

    __slots__ = ("_dim", "_coeffs")

    def __init__(self, coeffs, dim: int | None = None):
        arr = np.array(coeffs, dtype=np.float64).reshape(-1)
        if dim is None:
            n = int(arr.size).bit_length() - 1
            if arr.size != (1 << n):
                raise ValueError(
                    f"coefficient count must be a power of two, got {arr.size}"
                )
            dim = n
        _check_dim(dim)
        if arr.size != (1 << dim):
            raise ValueError(
                f"expected {1 << dim} coefficients for Cl({dim}), got {arr.size}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.flags.writeable = False
        self._dim = int(dim)
        self._coeffs = arr

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        _check_dim(dim)
        return cls(np.zeros(1 << dim), dim)

    @classmethod
    def scalar(cls, value: float, dim: int) -> "Multivector":
        _check_dim(dim)
        arr = np.zeros(1 << dim)
        arr[0] = value
        return cls(arr, dim)

    @classmethod
    def blade(cls, word: int, dim: int, coeff: float = 1.0) -> "Multivector":
        _check_dim(dim)
        if not 0 <= word < (1 << dim):
            raise ValueError(f"blade word out of range for Cl({dim}): {word}")
        arr = np.zeros(1 << dim)
        arr[word] = coeff
        return cls(arr, dim)

    @classmethod
    def basis_vector(cls, k: int, dim: int) -> "Multivector":
        """The generator b_k, 1-based."""
        _check_dim(dim)
        if not 1 <= k <= dim:
            raise ValueError(f"generator index must be in [1, {dim}], got {k}")
        return cls.blade(1 << (k - 1), dim)

    def grade(self, g: int) -> "Multivector":
        return grade_projection(self, g)

    def norm(self) -> float:
        """Euclidean length of the coefficient vector."""
        return float(math.sqrt(float(np.dot(self._coeffs, self._coeffs))))

    def isclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        if not isinstance(other, Multivector) or other._dim != self._dim:
            return False
        return bool(np.max(np.abs(self._coeffs - other._coeffs)) <= tol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._dim == other._dim and bool(
            np.array_equal(self._coeffs, other._coeffs)
        )

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other._dim != self._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
        return Multivector(self._coeffs + other._coeffs, self._dim)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other._dim != self._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
        return Multivector(self._coeffs - other._coeffs, self._dim)

    def __neg__(self):
        return Multivector(-self._coeffs, self._dim)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, numbers.Real):
            return Multivector(self._coeffs * float(other), self._dim)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector(self._coeffs * float(other), self._dim)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector(self._coeffs / float(other), self._dim)
        return NotImplemented

    def __repr__(self) -> str:
        terms = []
        for word in np.nonzero(self._coeffs)[0]:
            c = self._coeffs[word]
            label = _blade_label(int(word))
            terms.append(f"{c:g}" if label == "1" else f"{c:g} {label}")
        expr = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"Multivector(dim={self._dim}: {expr})"


def _blade_label(word: int) -> str:
    if word == 0:
        return "1"
    indices = [k + 1 for k in range(MAX_DIM) if (word >> k) & 1]
    if indices[-1] <= 9:
        return "b" + "".join(str(k) for k in indices)
    return "b[" + ",".join(str(k) for k in indices) + "]"


def _check_same_dim(a: Multivector, b: Multivector) -> int:
    if not isinstance(a, Multivector) or not isinstance(b, Multivector):
        raise TypeError("expected Multivector operands")
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.dim


@lru_cache(maxsize=None)
def _product_tables(dim: int) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << dim
    words = np.arange(size)
    idx = np.bitwise_xor.outer(words, words)
    sign = np.empty((size, size), dtype=np.float64)
    for i in range(size):
        for j in range(size):
            sign[i, j] = blade_product(i, j, dim)[1]
    idx.flags.writeable = False
    sign.flags.writeable = False
    return idx, sign


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the blade product to whole multivectors."""
    dim = _check_same_dim(a, b)
    out = np.zeros(1 << dim)
    if dim <= _TABLE_DIM_LIMIT:
        idx, sign = _product_tables(dim)
        np.add.at(out, idx, sign * np.outer(a.coeffs, b.coeffs))
    else:
        ca, cb = a.coeffs, b.coeffs
        for i in np.nonzero(ca)[0]:
            ai = ca[i]
            for j in np.nonzero(cb)[0]:
                word, s = blade_product(int(i), int(j), dim)
                out[word] += s * ai * cb[j]
    return Multivector(out, dim)


def inner_product(a: Multivector, b: Multivector) -> Multivector:
    """Symmetrized half of the geometric product, (ab + ba)/2.

    On grade-1 arguments this is the usual scalar-valued dot product;
    for general arguments the symmetrized form is taken as the
    definition, which differs from grade-projection-based inner
    products once grades mix.
    """
    return (geometric_product(a, b) + geometric_product(b, a)) * 0.5


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    """Antisymmetrized half of the geometric product, (ab - ba)/2.

    Matches the usual wedge on grade-1 arguments; for general
    arguments the commutator form is the definition, so commuting
    inputs (for example b1 and b2 b3) wedge to zero here.
    """
    return (geometric_product(a, b) - geometric_product(b, a)) * 0.5


@lru_cache(maxsize=None)
def _word_grades(dim: int) -> np.ndarray:
    grades = np.array([w.bit_count() for w in range(1 << dim)], dtype=np.int64)
    grades.flags.writeable = False
    return grades


def grade_projection(a: Multivector, g: int) -> Multivector:
    """Keep only the coefficients of blades with exactly g generators."""
    if not isinstance(a, Multivector):
        raise TypeError("expected a Multivector")
    if not isinstance(g, numbers.Integral) or isinstance(g, bool):
        raise ValueError(f"grade must be an integer, got {g!r}")
    if not 0 <= g <= a.dim:
        raise ValueError(f"grade must be in [0, {a.dim}], got {g}")
    mask = _word_grades(a.dim) == g
    return Multivector(np.where(mask, a.coeffs, 0.0), a.dim)
