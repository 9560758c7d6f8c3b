"""Exact integer-coefficient polynomials in the formal variables q and t.

Coefficients are Python ints (arbitrary precision).  Exponents may be
negative in intermediate results (Laurent terms); every generating
function produced by this package ends up with nonnegative exponents.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

Scalar = Union[int, float, complex]


class QTPoly:
    """Immutable polynomial sum(c * q^a * t^b) stored as {(a, b): c}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            if c:
                key = (a, b)
                new = canon.get(key, 0) + c
                if new:
                    canon[key] = new
                elif key in canon:
                    del canon[key]
        self._terms = canon
        self._hash: int | None = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "QTPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "QTPoly":
        return cls({(a, b): c})

    @classmethod
    def q(cls) -> "QTPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "QTPoly":
        return cls({(0, 1): 1})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "QTPoly | int") -> "QTPoly":
        other = _coerce(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            new = terms.get(key, 0) + c
            if new:
                terms[key] = new
            elif key in terms:
                del terms[key]
        out = QTPoly.__new__(QTPoly)
        out._terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "QTPoly":
        out = QTPoly.__new__(QTPoly)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "QTPoly | int") -> "QTPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "QTPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "QTPoly | int") -> "QTPoly":
        if isinstance(other, int):
            if other == 0:
                return QTPoly()
            out = QTPoly.__new__(QTPoly)
            out._terms = {k: c * other for k, c in self._terms.items()}
            out._hash = None
            return out
        terms: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                elif key in terms:
                    del terms[key]
        out = QTPoly.__new__(QTPoly)
        out._terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QTPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = QTPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- queries --------------------------------------------------------------

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def terms(self) -> dict[tuple[int, int], int]:
        """Copy of the canonical term mapping."""
        return dict(self._terms)

    def q_slice(self, a: int) -> dict[int, int]:
        """Coefficients of q^a as a map from t-exponent to coefficient."""
        return {b: c for (qa, b), c in self._terms.items() if qa == a}

    def q_exponents(self) -> list[int]:
        return sorted({a for a, _ in self._terms})

    def evaluate(self, q: Scalar = 1, t: Scalar = 1) -> Scalar:
        """Evaluate at numeric q and t (exact when both are ints)."""
        return sum(c * q**a * t**b for (a, b), c in self._terms.items())

    def subs_q(self, value: int) -> "QTPoly":
        """Exact substitution q = value, leaving t formal."""
        return QTPoly((((0, b), c * value**a) for (a, b), c in self._terms.items()))

    def subs_t(self, value: int) -> "QTPoly":
        """Exact substitution t = value, leaving q formal."""
        return QTPoly((((a, 0), c * value**b) for (a, b), c in self._terms.items()))

    # -- external forms -------------------------------------------------------

    def __str__(self) -> str:
        """Text form: monomials "c*q^a*t^b" sorted by (a, b), joined by " + "."""
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}*q^{a}*t^{b}" for (a, b), c in sorted(self._terms.items())
        )

    def __repr__(self) -> str:
        return f"QTPoly({self._terms!r})"

    def to_triples(self) -> list[list[int]]:
        """JSON form: [a, b, c] triples sorted by (a, b)."""
        return [[a, b, c] for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "QTPoly":
        return cls({(a, b): c for a, b, c in triples})


def _coerce(x: "QTPoly | int") -> QTPoly:
    return x if isinstance(x, QTPoly) else QTPoly.const(x)


ZERO = QTPoly()
ONE = QTPoly.const(1)


def q_int(m: int) -> QTPoly:
    """The q-analogue [m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("q-integer of a negative number")
    return QTPoly({(a, 0): 1 for a in range(m)})


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> QTPoly:
    """The Gaussian binomial [n choose k]_t, exact in t.

    Pascal recurrence: [n,k] = [n-1,k-1] + t^k [n-1,k].
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return gaussian_binomial(n - 1, k - 1) + QTPoly.monomial(0, k) * gaussian_binomial(
        n - 1, k
    )


def gaussian_multinomial(parts: Iterable[int]) -> QTPoly:
    """The Gaussian multinomial [n choose c_1,...,c_m]_t with n = sum(c_i)."""
    result = ONE
    total = 0
    for c in parts:
        if c < 0:
            raise ValueError("negative multinomial part")
        total += c
        result = result * gaussian_binomial(total, c)
    return result


def multinomial(parts: Iterable[int]) -> int:
    """Ordinary multinomial coefficient (sum(parts) choose parts)."""
    result = 1
    total = 0
    for c in parts:
        total += c
        result *= comb(total, c)
    return result
