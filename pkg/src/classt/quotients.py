"""Cyclic quotient surface singularities and rational double points.

A germ ``1/r(q1, q2)`` is the quotient of the affine plane by the cyclic
group of order ``r`` acting with weights ``(q1, q2)`` on the
coordinates; freeness away from the origin forces both weights to be
prime to ``r``.  Every such germ normalizes to the standard form
``1/r(1, q)``, its minimal resolution is a chain of rational curves
read off the negative-regular continued fraction of ``r/q``, and two
germs are isomorphic exactly when their normalized parameters agree or
are inverse to each other modulo the order.

The singularities that admit Q-Gorenstein smoothings with Milnor number
zero form a short list: the rational double points ``A_k, D_k, E6, E7,
E8`` and the cyclic germs ``1/(d*n^2)(1, d*n*m - 1)`` with ``m`` prime
to ``n``.  detect_class_T recognizes the cyclic members from a
normalized germ; rdp_data catalogues the hypersurface equations and
monomial Milnor bases of the double points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Mapping, Union

from .arith import RationalLike, as_fraction, hj_evaluate, hj_expand, mod_inverse
from .errors import BadInput, InvalidIndex, NotFree, SmoothPoint


@dataclass(frozen=True)
class QuotientSingularity:
    """Cyclic quotient germ ``1/order(weights[0], weights[1])``."""

    order: int
    weights: tuple[int, int]

    def __post_init__(self):
        if self.order < 1:
            raise BadInput(f"group order must be positive, got {self.order}")
        if len(self.weights) != 2:
            raise BadInput("a surface germ takes exactly two weights")
        for w in self.weights:
            if gcd(w, self.order) != 1:
                raise NotFree(
                    f"weight {w} shares a factor with the order {self.order}; "
                    "the action is not free on the punctured plane"
                )

    def is_smooth(self) -> bool:
        return self.order == 1

    def label(self) -> str:
        q1, q2 = self.weights
        return f"1/{self.order}({q1},{q2})"


def normalize(s: QuotientSingularity) -> QuotientSingularity:
    """Standard form ``1/r(1, q)`` with ``q = q2 * q1^(-1) mod r``.

    A smooth germ (order one) normalizes to ``1/1(1, 1)``.
    """
    r = s.order
    if r == 1:
        return QuotientSingularity(1, (1, 1))
    q1, q2 = s.weights
    q = (q2 * mod_inverse(q1, r)) % r
    return QuotientSingularity(r, (1, q))


def is_equivalent(s1: QuotientSingularity, s2: QuotientSingularity) -> bool:
    """Isomorphism of germs: equal normalized forms, or inverse ones.

    Swapping the two coordinates replaces ``q`` by its inverse mod
    ``r``, so ``1/r(1, q)`` and ``1/r(1, q')`` agree as germs iff
    ``q' == q`` or ``q * q' == 1 (mod r)``.
    """
    a = normalize(s1)
    b = normalize(s2)
    if a.order != b.order:
        return False
    q = a.weights[1]
    qq = b.weights[1]
    return q == qq or (q * qq) % a.order == 1 % a.order


@dataclass(frozen=True)
class HJChain:
    """Resolution chain; entry ``b_i`` means a curve of self-intersection ``-b_i``."""

    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def value(self) -> Fraction:
        """The continued fraction the chain expands."""
        return hj_evaluate(self.entries)

    def self_intersections(self) -> tuple[int, ...]:
        return tuple(-b for b in self.entries)


def hj_resolution(s: QuotientSingularity) -> HJChain:
    """Minimal resolution chain of a cyclic germ.

    The germ is normalized to ``1/r(1, q)`` first; the chain entries are
    the negative-regular continued fraction of ``r/q``.  A smooth germ
    raises SmoothPoint.
    """
    n = normalize(s)
    if n.is_smooth():
        raise SmoothPoint(f"{s.label()} is a smooth point; nothing to resolve")
    return HJChain(tuple(hj_expand(n.order, n.weights[1])))


@dataclass(frozen=True)
class CyclicTDescriptor:
    """Reading of a germ as ``1/(d*n^2)(1, d*n*m - 1)`` with gcd(m, n) = 1.

    ``u`` is the inverse of ``m`` modulo ``n`` (zero when ``n == 1``).
    ``solutions`` lists every valid ``(d, n, m)`` reading, largest ``n``
    first; the descriptor's own parameters are the first entry.  The
    ``n == 1`` reading exists exactly for the double point ``A_(d-1)``.
    """

    d: int
    n: int
    m: int
    u: int
    solutions: tuple[tuple[int, int, int], ...]

    @property
    def order(self) -> int:
        return self.d * self.n * self.n

    @property
    def is_a_type(self) -> bool:
        return self.n == 1

    def label(self) -> str:
        if self.is_a_type:
            return f"A_{self.d - 1}"
        return f"1/{self.order}(1,{self.d * self.n * self.m - 1})"


@dataclass(frozen=True)
class RdpDescriptor:
    """ADE label of a rational double point."""

    ade: str
    index: int

    def __post_init__(self):
        _validate_ade(self.ade, self.index)

    def label(self) -> str:
        return f"{self.ade}_{self.index}" if self.ade != "E" else f"E{self.index}"


ClassTDescriptor = Union[CyclicTDescriptor, RdpDescriptor]


def class_t_solutions(r: int, q: int) -> list[tuple[int, int, int]]:
    """All ``(d, n, m)`` with ``r = d*n^2`` and ``q == d*n*m - 1 (mod r)``.

    Candidates are ordered by decreasing ``n``.  For fixed ``n`` the
    congruence pins ``m`` modulo ``n``, so each ``n`` contributes at
    most one solution; the ``n == 1`` candidate ``(r, 1, 1)`` appears
    exactly when ``q == r - 1 (mod r)``.
    """
    sols: list[tuple[int, int, int]] = []
    for n in range(isqrt(r), 1, -1):
        if r % (n * n):
            continue
        d = r // (n * n)
        if (q + 1) % (d * n):
            continue
        m = ((q + 1) // (d * n)) % n
        if gcd(m, n) != 1:
            continue
        sols.append((d, n, m))
    if (q + 1) % r == 0:
        sols.append((r, 1, 1))
    return sols


def detect_class_T(s: QuotientSingularity) -> CyclicTDescriptor | None:
    """Recognize a cyclic germ of class T, or return None.

    The germ is normalized first.  When several ``(d, n, m)`` readings
    exist the one with maximal ``n`` is primary; the full list is kept
    on the descriptor.
    """
    std = normalize(s)
    r = std.order
    q = std.weights[1]
    sols = class_t_solutions(r, q)
    if not sols:
        return None
    d, n, m = sols[0]
    u = mod_inverse(m, n)
    return CyclicTDescriptor(d=d, n=n, m=m, u=u, solutions=tuple(sols))


class TriPoly:
    """Sparse polynomial in three variables with exact coefficients.

    Terms map exponent triples ``(i, j, k)`` for ``x^i y^j z^k`` to
    nonzero Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], RationalLike] | None = None):
        clean: dict[tuple[int, int, int], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            i, j, k = exps
            if i < 0 or j < 0 or k < 0:
                raise BadInput(f"negative exponent in {exps}")
            c = as_fraction(coeff)
            if c != 0:
                clean[(i, j, k)] = c
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def monomial(coeff: RationalLike, i: int = 0, j: int = 0, k: int = 0) -> "TriPoly":
        return TriPoly({(i, j, k): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j + k for i, j, k in self.terms)

    def __add__(self, other: "TriPoly") -> "TriPoly":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return TriPoly(out)

    def __neg__(self) -> "TriPoly":
        return TriPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TriPoly") -> "TriPoly":
        return self + (-other)

    def __mul__(self, other: "TriPoly | RationalLike") -> "TriPoly":
        if not isinstance(other, TriPoly):
            s = as_fraction(other)
            return TriPoly({e: c * s for e, c in self.terms.items()})
        out: dict[tuple[int, int, int], Fraction] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return TriPoly(out)

    def __rmul__(self, other: RationalLike) -> "TriPoly":
        return self * other

    def diff(self, var: int) -> "TriPoly":
        """Partial derivative with respect to variable 0, 1, or 2."""
        out: dict[tuple[int, int, int], Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[var]
            if e == 0:
                continue
            new = list(exps)
            new[var] = e - 1
            out[tuple(new)] = c * e
        return TriPoly(out)

    def eval(self, x: RationalLike, y: RationalLike, z: RationalLike) -> Fraction:
        xf, yf, zf = as_fraction(x), as_fraction(y), as_fraction(z)
        total = Fraction(0)
        for (i, j, k), c in self.terms.items():
            total += c * xf**i * yf**j * zf**k
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            _term_str(exps, c) for exps, c in sorted(self.terms.items(), reverse=True)
        ).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TriPoly({self})"


def _term_str(exps: tuple[int, int, int], coeff: Fraction) -> str:
    names = "xyz"
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def monomial_str(exps: tuple[int, int, int]) -> str:
    """Human form of an exponent triple, e.g. ``(1, 2, 0) -> "x*y^2"``."""
    s = _term_str(exps, Fraction(1))
    return s if s != "1" else "1"


@dataclass(frozen=True)
class RDPData:
    """Hypersurface equation and Milnor data of a rational double point.

    ``milnor_basis`` lists exponent triples of monomials whose residue
    classes span the Milnor algebra ``C[x,y,z]/(f, f_x, f_y, f_z)``;
    its length is the Milnor number.
    """

    ade: str
    index: int
    defining_poly: TriPoly
    milnor_basis: tuple[tuple[int, int, int], ...]

    @property
    def milnor_number(self) -> int:
        return len(self.milnor_basis)

    def label(self) -> str:
        return f"{self.ade}_{self.index}" if self.ade != "E" else f"E{self.index}"

    def basis_polys(self) -> tuple[TriPoly, ...]:
        return tuple(TriPoly.monomial(1, *e) for e in self.milnor_basis)


def _validate_ade(ade: str, index: int) -> None:
    if ade == "A":
        if index < 1:
            raise InvalidIndex(f"A-type index must be >= 1, got {index}")
    elif ade == "D":
        if index < 4:
            raise InvalidIndex(f"D-type index must be >= 4, got {index}")
    elif ade == "E":
        if index not in (6, 7, 8):
            raise InvalidIndex(f"E-type index must be 6, 7 or 8, got {index}")
    else:
        raise InvalidIndex(f"unknown type {ade!r}; expected A, D or E")


def rdp_data(ade: str, index: int) -> RDPData:
    """Equation and monomial Milnor basis for ``A_k``, ``D_k`` (k >= 4),
    ``E6``, ``E7``, ``E8``.

    Conventions: ``A_k: x*y + z^(k+1)``, ``D_k: x^2*y + y^(k-1) + z^2``,
    ``E6: x^4 + y^3 + z^2``, ``E7: x^3*y + y^3 + z^2``,
    ``E8: x^5 + y^3 + z^2``.  The Milnor number equals the index.
    """
    _validate_ade(ade, index)
    if ade == "A":
        poly = TriPoly({(1, 1, 0): 1, (0, 0, index + 1): 1})
        basis = tuple((0, 0, t) for t in range(index))
    elif ade == "D":
        poly = TriPoly({(2, 1, 0): 1, (0, index - 1, 0): 1, (0, 0, 2): 1})
        basis = ((0, 0, 0), (1, 0, 0)) + tuple((0, t, 0) for t in range(1, index - 1))
    elif index == 6:
        poly = TriPoly({(4, 0, 0): 1, (0, 3, 0): 1, (0, 0, 2): 1})
        basis = tuple((i, j, 0) for j in range(2) for i in range(3))
    elif index == 7:
        poly = TriPoly({(3, 1, 0): 1, (0, 3, 0): 1, (0, 0, 2): 1})
        basis = ((0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 2, 0), (1, 2, 0))
    else:
        poly = TriPoly({(5, 0, 0): 1, (0, 3, 0): 1, (0, 0, 2): 1})
        basis = tuple((i, j, 0) for j in range(2) for i in range(4))
    return RDPData(ade=ade, index=index, defining_poly=poly, milnor_basis=basis)
