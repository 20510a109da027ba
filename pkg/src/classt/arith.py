"""Exact arithmetic foundation.

Extended gcd, modular inverses, dense univariate polynomials over the
rationals, squarefree (multiplicity) decomposition, and the
negative-regular continued fractions that drive cyclic quotient
resolutions.  Everything here is exact: rationals are
``fractions.Fraction`` values (arbitrary precision, automatically
reduced, positive denominator) and no code path touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .errors import BadInput, NonInvertible, ZeroPolynomial

# Rational quantities throughout the package are plain Fractions.
Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, string like "3/2", or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclidean algorithm.

    Returns ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and
    ``a*x + b*y == g``.  The degenerate pair ``(0, 0)`` maps to
    ``(0, 0, 0)``.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(m: int, n: int) -> int:
    """Inverse of ``m`` modulo ``n >= 1``.

    Returns the unique ``u`` in ``{1, ..., n-1}`` with
    ``m*u == 1 (mod n)``, and ``0`` for the trivial modulus ``n == 1``.
    Raises NonInvertible when ``gcd(m, n) != 1``.
    """
    if n < 1:
        raise NonInvertible(f"modulus must be positive, got {n}")
    if gcd(m, n) != 1:
        raise NonInvertible(f"{m} has no inverse modulo {n}")
    if n == 1:
        return 0
    return pow(m, -1, n)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q.

    ``coeffs[i]`` holds the coefficient of ``z**i``; the highest entry is
    nonzero and the zero polynomial is the empty tuple.  Instances are
    immutable and compare structurally.
    """

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def of(values: Iterable[RationalLike]) -> "UniPoly":
        cs = [as_fraction(v) for v in values]
        while cs and cs[-1] == 0:
            cs.pop()
        return UniPoly(tuple(cs))

    @staticmethod
    def constant(value: RationalLike) -> "UniPoly":
        return UniPoly.of([value])

    @staticmethod
    def variable() -> "UniPoly":
        return UniPoly.of([0, 1])

    @staticmethod
    def from_roots(pairs: Iterable[tuple[RationalLike, int]]) -> "UniPoly":
        """Monic product of ``(z - root) ** multiplicity`` factors."""
        p = UniPoly.of([1])
        for root, mult in pairs:
            if mult < 0:
                raise BadInput(f"negative multiplicity {mult}")
            factor = UniPoly.of([-as_fraction(root), 1])
            for _ in range(mult):
                p = p * factor
        return p

    @property
    def degree(self) -> int:
        """Degree, with the convention ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return UniPoly.of(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | RationalLike") -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = as_fraction(other)
            if s == 0:
                return UniPoly()
            return UniPoly(tuple(c * s for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly.of(out)

    def __rmul__(self, other: RationalLike) -> "UniPoly":
        return self * other

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise BadInput(f"negative exponent {exponent}")
        result = UniPoly.of([1])
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly.of([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.leading()
        if lead == 1:
            return self
        return self * (Fraction(1) / lead)

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return UniPoly.of(q), UniPoly.of(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise BadInput("exact division left a remainder")
        return q

    def __call__(self, x: RationalLike) -> Fraction:
        value = Fraction(0)
        xf = as_fraction(x)
        for c in reversed(self.coeffs):
            value = value * xf + c
        return value

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("z" if c == 1 else f"{c}*z")
            else:
                parts.append(f"z^{i}" if c == 1 else f"{c}*z^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def eval_poly(p: UniPoly, x: RationalLike) -> Fraction:
    """Horner evaluation of ``p`` at an exact rational point."""
    return p(x)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q; ``poly_gcd(0, 0)`` is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm over Q.

    Returns monic pairwise-coprime squarefree factors with their
    multiplicities, so that ``p`` equals its leading coefficient times
    the product of ``factor ** multiplicity``.  Constant input yields
    the empty list; zero input raises ZeroPolynomial.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    out: list[tuple[UniPoly, int]] = []
    g = poly_gcd(f, f.derivative())
    c = f.exact_div(g)
    d = f.derivative().exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def multiplicity_profile(p: UniPoly) -> list[tuple[int, int]]:
    """Degrees and multiplicities of the squarefree factors of ``p``.

    Each entry is ``(degree of factor, multiplicity)``, sorted by
    multiplicity then degree.  The multiplicity-weighted degrees sum to
    ``deg p``.
    """
    profile = [(q.degree, m) for q, m in squarefree_decomposition(p)]
    profile.sort()
    profile.sort(key=lambda t: t[1])
    return profile


def hj_expand(numerator: int, denominator: int) -> list[int]:
    """Negative-regular continued fraction of ``numerator/denominator``.

    For coprime ``numerator > denominator >= 1`` returns the unique
    ``[b_1, ..., b_s]`` with every ``b_i >= 2`` such that

        numerator/denominator = b_1 - 1/(b_2 - 1/(... - 1/b_s)).
    """
    n, d = numerator, denominator
    if d < 1 or n <= d:
        raise BadInput(f"expansion needs numerator > denominator >= 1, got {n}/{d}")
    if gcd(n, d) != 1:
        raise BadInput(f"{n}/{d} is not in lowest terms")
    entries = []
    while d:
        b = -(-n // d)
        entries.append(b)
        n, d = d, b * d - n
    return entries


def hj_evaluate(entries: Iterable[int]) -> Fraction:
    """Evaluate ``b_1 - 1/(b_2 - 1/(...))`` exactly."""
    value: Fraction | None = None
    for b in reversed(list(entries)):
        if value is None:
            value = Fraction(b)
        else:
            value = Fraction(b) - Fraction(1) / value
    if value is None:
        raise BadInput("empty continued fraction")
    return value
