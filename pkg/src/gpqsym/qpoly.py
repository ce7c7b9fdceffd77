"""Dense integer polynomials in a single formal variable ``q``."""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Union

IntLike = Union[int, "QPolynomial"]


class QPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored in ascending powers of ``q`` with trailing zeros
    stripped, so the zero polynomial has an empty coefficient tuple.

    >>> p = QPolynomial([1, 0, 3])
    >>> p
    QPolynomial(1+3q^2)
    >>> p(2)
    13
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for zero."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __call__(self, q0: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * q0 + c
        return acc

    def evaluate(self, q0: int) -> int:
        return self(q0)

    def negate_variable(self) -> QPolynomial:
        """Substitute ``q -> -q``."""
        return QPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def coefficient(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    @staticmethod
    def _coerce(other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial(a + b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return QPolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = QPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("QPolynomial", self._coeffs))
        return self._hash

    def to_str(self, var: str = "q", explicit: bool = False) -> str:
        """Render as text.

        With ``explicit=True`` every power is written out, zero or not, as
        ``11q^0+0q^1``; otherwise the usual compact form is produced.
        """
        if explicit:
            if not self._coeffs:
                return f"0{var}^0"
            parts = [f"{c}{var}^{i}" for i, c in enumerate(self._coeffs)]
            return "+".join(parts).replace("+-", "-")
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = var
            else:
                mono = f"{var}^{i}"
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = f"{c}{mono}"
            parts.append(body)
        return "+".join(parts).replace("+-", "-")

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"QPolynomial({self.to_str()})"

    def to_json(self) -> list[str]:
        """Ascending coefficients as decimal strings."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Iterable) -> QPolynomial:
        return cls(int(x) for x in data)


ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))
