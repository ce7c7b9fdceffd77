"""Quasisymmetric functions in the monomial basis over Z[q].

An element is a finite linear combination of monomial quasisymmetric
functions ``M_alpha`` indexed by compositions, with coefficients in
:class:`~gpqsym.qpoly.QPolynomial`.  Compositions are plain tuples of
positive integers; ``()`` indexes the unit ``M_()``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Optional, Union

from .qpoly import ONE, QPolynomial

Composition = tuple
Scalar = Union[int, QPolynomial]


def composition_key(alpha: Composition) -> tuple:
    """Sort key for the canonical order: weight, then length, then parts."""
    return (sum(alpha), len(alpha), tuple(alpha))


def check_composition(alpha: Iterable[int]) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in canonical order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    out = []
    # compositions of n <-> subsets of the n-1 cut points
    for mask in range(1 << (n - 1)):
        parts, last = [], 0
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(i + 1 - last)
                last = i + 1
        parts.append(n - last)
        out.append(tuple(parts))
    out.sort(key=composition_key)
    yield from out


def coarsenings(alpha: Composition) -> Iterator[Composition]:
    """Compositions obtained from ``alpha`` by summing runs of adjacent parts."""
    k = len(alpha)
    if k == 0:
        yield ()
        return
    for mask in range(1 << (k - 1)):
        parts, acc = [], alpha[0]
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                parts.append(acc)
                acc = alpha[i]
            else:
                acc += alpha[i]
        parts.append(acc)
        yield tuple(parts)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def binomial(m: int, k: int) -> int:
    """Binomial coefficient extended polynomially in ``m`` (any integer ``m``)."""
    if k < 0:
        return 0
    if m >= 0:
        return comb(m, k)
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


def _as_poly(c: Scalar) -> QPolynomial:
    if isinstance(c, QPolynomial):
        return c
    return QPolynomial((int(c),))


class QSymExpr(Mapping):
    """Immutable element of QSym[q] in the monomial basis.

    Behaves as a read-only mapping from compositions to nonzero
    :class:`QPolynomial` coefficients; iteration follows the canonical
    composition order.

    >>> M(1) * M(1)
    QSymExpr(2*M(1,1) + M(2))
    """

    __slots__ = ("_terms", "_keys")

    def __init__(self, terms: Optional[Mapping[Composition, Scalar]] = None):
        clean = {}
        if terms:
            for alpha, c in terms.items():
                c = _as_poly(c)
                if c:
                    clean[check_composition(alpha)] = c
        self._terms = clean
        self._keys = None

    @classmethod
    def _from_clean(cls, terms: dict) -> QSymExpr:
        obj = cls.__new__(cls)
        obj._terms = {a: c for a, c in terms.items() if c}
        obj._keys = None
        return obj

    # mapping protocol
    def __getitem__(self, alpha) -> QPolynomial:
        return self._terms[tuple(alpha)]

    def get(self, alpha, default=None):
        return self._terms.get(tuple(alpha), default)

    def coefficient(self, alpha) -> QPolynomial:
        return self._terms.get(tuple(alpha), QPolynomial())

    def __iter__(self) -> Iterator[Composition]:
        if self._keys is None:
            self._keys = sorted(self._terms, key=composition_key)
        return iter(self._keys)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, QSymExpr):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def homogeneous_degree(self) -> Optional[int]:
        """Common weight of all keys, or ``None`` if mixed or empty."""
        weights = {sum(a) for a in self._terms}
        return weights.pop() if len(weights) == 1 else None

    # arithmetic
    def __add__(self, other: QSymExpr) -> QSymExpr:
        if not isinstance(other, QSymExpr):
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out[a] + c if a in out else c
        return QSymExpr._from_clean(out)

    def __neg__(self) -> QSymExpr:
        return QSymExpr._from_clean({a: -c for a, c in self._terms.items()})

    def __sub__(self, other: QSymExpr) -> QSymExpr:
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> QSymExpr:
        c = _as_poly(c)
        return QSymExpr._from_clean({a: v * c for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QSymExpr):
            return quasi_shuffle(self, other)
        if isinstance(other, (int, QPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> QSymExpr:
        out = unit()
        for _ in range(k):
            out = quasi_shuffle(out, self)
        return out

    def __repr__(self) -> str:
        return f"QSymExpr({self.to_str()})"

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for alpha in self:
            c = self._terms[alpha]
            name = "M(" + ",".join(map(str, alpha)) + ")"
            if c == ONE:
                parts.append(name)
            elif len([x for x in c.coeffs if x]) == 1:
                parts.append(f"{c.to_str()}*{name}")
            else:
                parts.append(f"({c.to_str()})*{name}")
        return " + ".join(parts)

    def items(self):
        return [(a, self._terms[a]) for a in self]

    def by_q_power(self) -> dict[int, QSymExpr]:
        """Split into the integer-coefficient parts multiplying each ``q^k``."""
        rows: dict[int, dict] = {}
        for alpha, c in self._terms.items():
            for k, v in enumerate(c.coeffs):
                if v:
                    rows.setdefault(k, {})[alpha] = v
        return {k: QSymExpr(rows[k]) for k in sorted(rows)}

    def to_json(self) -> dict:
        return {
            "degree": self.homogeneous_degree,
            "terms": [
                {"composition": list(a), "coeffs": self._terms[a].to_json()} for a in self
            ],
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> QSymExpr:
        if isinstance(data, str):
            data = json.loads(data)
        expr = cls(
            {
                tuple(t["composition"]): QPolynomial.from_json(t["coeffs"])
                for t in data["terms"]
            }
        )
        deg = data.get("degree")
        if deg is not None and expr and expr.homogeneous_degree != deg:
            raise ValueError("degree field does not match terms")
        return expr


def M(*parts: int, coeff: Scalar = 1) -> QSymExpr:
    """Monomial quasisymmetric function ``coeff * M_parts``."""
    return QSymExpr({tuple(parts): coeff})


def unit() -> QSymExpr:
    return QSymExpr({(): 1})


def zero() -> QSymExpr:
    return QSymExpr()


@lru_cache(maxsize=None)
def _qsh(a: Composition, b: Composition) -> tuple:
    """Quasi-shuffle of two compositions as a tuple of (composition, count)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = {}
    for head, rest_a, rest_b in (
        (a[0], a[1:], b),
        (b[0], a, b[1:]),
        (a[0] + b[0], a[1:], b[1:]),
    ):
        for gamma, c in _qsh(rest_a, rest_b):
            key = (head,) + gamma
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


def quasi_shuffle(f: QSymExpr, g: QSymExpr) -> QSymExpr:
    """Product in QSym (overlapping shuffle on monomials)."""
    out: dict = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            cab = ca * cb
            for gamma, n in _qsh(a, b):
                term = cab * n
                out[gamma] = out[gamma] + term if gamma in out else term
    return QSymExpr._from_clean(out)


def concat_product(f: QSymExpr, g: QSymExpr) -> QSymExpr:
    """Bilinear extension of ``M_a o M_b = M_ab``."""
    out: dict = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            gamma = a + b
            term = ca * cb
            out[gamma] = out[gamma] + term if gamma in out else term
    return QSymExpr._from_clean(out)


def shift(f: QSymExpr, r: int) -> QSymExpr:
    """Append the part ``r`` to every composition: ``M_a -> M_(a, r)``."""
    if r < 1:
        raise ValueError(f"shift requires r >= 1, got {r}")
    return QSymExpr._from_clean({a + (r,): c for a, c in f._terms.items()})


def coproduct(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """All deconcatenations of ``alpha`` in order (k(alpha) + 1 of them)."""
    alpha = tuple(alpha)
    return [(alpha[:i], alpha[i:]) for i in range(len(alpha) + 1)]


@lru_cache(maxsize=None)
def _antipode_monomial(alpha: Composition) -> tuple:
    sign = -1 if len(alpha) % 2 else 1
    return tuple((beta, sign) for beta in coarsenings(alpha[::-1]))


def antipode(f: QSymExpr) -> QSymExpr:
    """Antipode via ``S(M_a) = (-1)^k(a) sum of M_b over coarsenings b of rev(a)``."""
    out: dict = {}
    for a, c in f._terms.items():
        for beta, s in _antipode_monomial(a):
            term = c * s
            out[beta] = out[beta] + term if beta in out else term
    return QSymExpr._from_clean(out)


@lru_cache(maxsize=None)
def _antipode_recursive_monomial(alpha: Composition) -> QSymExpr:
    if not alpha:
        return unit()
    # m o (S x id) o Delta = unit o counit, solved for the beta = alpha term
    acc = zero()
    for beta, gamma in coproduct(alpha):
        if beta == alpha:
            continue
        acc = acc + quasi_shuffle(_antipode_recursive_monomial(beta), M(*gamma))
    return -acc


def antipode_recursive(f: QSymExpr) -> QSymExpr:
    """Antipode derived from the coproduct and the antipode axiom alone."""
    out = zero()
    for a, c in f._terms.items():
        out = out + _antipode_recursive_monomial(a).scale(c)
    return out


def principal_specialization(f: QSymExpr, m: int) -> QPolynomial:
    """``ps(f)(m)``: set ``x_1 = ... = x_m = 1`` and the rest to zero.

    Uses ``ps(M_a)(m) = C(m, k(a))`` with the binomial extended to negative ``m``.
    """
    out = QPolynomial()
    for a, c in f._terms.items():
        b = binomial(m, len(a))
        if b:
            out = out + c * b
    return out


def reverse(f: QSymExpr) -> QSymExpr:
    return QSymExpr._from_clean({a[::-1]: c for a, c in f._terms.items()})


def eval_q(f: QSymExpr, q0: int) -> dict[Composition, int]:
    """Substitute ``q = q0``; returns the nonzero integer coefficients in canonical order."""
    out = {}
    for a in f:
        v = f._terms[a](q0)
        if v:
            out[a] = v
    return out


def from_int_coeffs(coeffs: Mapping[Composition, int]) -> QSymExpr:
    return QSymExpr(dict(coeffs))


def power_of_m1(n: int) -> QSymExpr:
    """``(M_1)^n = sum over compositions a of n of multinomial(a) M_a``."""
    return QSymExpr({a: multinomial(a) for a in compositions(n)})
