"""Log del Pezzo compactifications of smoothings of class T singularities.

The cyclic germ ``1/(d*n^2)(1, d*n*m - 1)`` admits one-parameter
smoothings whose Milnor fibre compactifies to a hypersurface

    x*y = prod_j (z^n - a_j * w^c)^(k_j),   sum k_j = d,

of degree ``d*n*c`` in ``P(a, b, c, n)``, where the weights must satisfy
three conditions:

    hom:     a + b = d*n*c                  (the equation is homogeneous)
    action:  a*m == c (mod n)               (compatible with the group action)
    div:     gcd(c, n) = 1 and gcd(a, c) = 1

The boundary curve ``C = (w = 0)`` has ``C^2 = d*n^2/(a*b)`` and carries
the two quotient points ``R1 = 1/a(c, n)`` and ``R2 = 1/b(c, n)``; the
anticanonical proportionality is ``-K = beta * C`` with
``beta = (c + n)/n``.  Repeated roots ``k_j >= 2`` leave interior
rational double points ``A_(k_j - 1)`` on the fibre.

The double points ``D_k, E6, E7, E8`` play the same game in one stroke:
their natural quasi-homogeneous equations, deformed along a monomial
Milnor basis and homogenized by a weight-one variable ``w``, give
hypersurfaces in ``P(a, b, c, 1)`` with ``beta = 2`` and three quotient
points on the boundary curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Union

from .arith import RationalLike, UniPoly, as_fraction, mod_inverse, multiplicity_profile
from .errors import (
    BadInput,
    CoefficientCountMismatch,
    ConditionViolated,
    InvalidIndex,
    NotCyclicVariant,
    RootsInvalid,
)
from .quotients import (
    CyclicTDescriptor,
    HJChain,
    QuotientSingularity,
    RDPData,
    RdpDescriptor,
    TriPoly,
    hj_resolution,
    normalize,
    rdp_data,
)
from .wps import HypersurfaceClass, WeightedProjectiveSpace, adjunction_class, hypersurface_intersection, well_formed_reduction


@dataclass(frozen=True)
class RootConfig:
    """Nonzero distinct roots ``a_j`` with multiplicities ``k_j >= 1``."""

    roots: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.roots:
            raise RootsInvalid("at least one root is required")
        if len(self.roots) != len(self.multiplicities):
            raise RootsInvalid("roots and multiplicities must pair up")
        if any(r == 0 for r in self.roots):
            raise RootsInvalid("roots must be nonzero")
        if len(set(self.roots)) != len(self.roots):
            raise RootsInvalid(f"roots must be distinct, got {self.roots}")
        if any(k < 1 for k in self.multiplicities):
            raise RootsInvalid("multiplicities must be positive")

    @staticmethod
    def of(pairs: Iterable[tuple[RationalLike, int]]) -> "RootConfig":
        items = [(as_fraction(r), int(k)) for r, k in pairs]
        return RootConfig(tuple(r for r, _ in items), tuple(k for _, k in items))

    @staticmethod
    def simple(roots: Iterable[RationalLike]) -> "RootConfig":
        rs = tuple(as_fraction(r) for r in roots)
        return RootConfig(rs, (1,) * len(rs))

    @staticmethod
    def parse(text: str) -> "RootConfig":
        """Parse ``"a1:k1,a2:k2,..."``; a bare ``a`` means multiplicity one."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                raise BadInput("empty root entry")
            root, _, mult = chunk.partition(":")
            try:
                r = as_fraction(root.strip())
                k = int(mult.strip()) if mult.strip() else 1
            except (ValueError, ZeroDivisionError) as exc:
                raise BadInput(f"cannot parse root entry {chunk!r}") from exc
            pairs.append((r, k))
        return RootConfig.of(pairs)

    @property
    def total(self) -> int:
        """Sum of multiplicities; the ``d`` of the model the roots fit."""
        return sum(self.multiplicities)

    @cached_property
    def _pair_tuple(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple(zip(self.roots, self.multiplicities))

    def pairs(self) -> tuple[tuple[Fraction, int], ...]:
        return self._pair_tuple

    @cached_property
    def _expanded(self) -> UniPoly:
        return UniPoly.from_roots(self.pairs())

    def polynomial(self) -> UniPoly:
        """The monic polynomial ``P(z) = prod (z - a_j)^(k_j)``."""
        return self._expanded

    def as_text(self) -> str:
        return ",".join(f"{r}:{k}" for r, k in self.pairs())


@dataclass(frozen=True)
class CurveAtInfinity:
    """Rational boundary curve with its orbifold point orders."""

    self_intersection: Fraction
    orbifold_points: tuple[int, ...]
    genus: int = 0

    def __post_init__(self):
        if self.self_intersection <= 0:
            raise BadInput("the boundary curve must have positive self-intersection")
        if any(r < 2 for r in self.orbifold_points):
            raise BadInput("orbifold point orders must be at least 2")


@dataclass(frozen=True)
class TopologyInvariants:
    pi1_order_M: int
    b2_M: int
    b2_Mbar: int
    chi_M: int
    chi_Mbar: int


@dataclass(frozen=True)
class CompactificationModel:
    """A compactified smoothing, either cyclic-variant or a D/E model.

    ``weights_abc`` are the first three ambient weights ``(a, b, c)``;
    the fourth is ``n`` (cyclic) or ``1`` (D/E).  Interior singularities
    are pairs ``(label, k)`` meaning an ``A_k`` point; for D/E models
    the list is empty (generic fibres are smooth inside, and locating
    double points of special coefficient choices is not attempted).
    """

    kind: str
    descriptor: Union[CyclicTDescriptor, RdpDescriptor]
    ambient: WeightedProjectiveSpace
    degree: int
    weights_abc: tuple[int, int, int]
    beta: Fraction
    curve: CurveAtInfinity
    infinity_singularities: tuple[tuple[str, QuotientSingularity], ...]
    interior_singularities: tuple[tuple[str, int], ...]
    roots: RootConfig | None = None
    rdp: RDPData | None = None
    coefficients: tuple[Fraction, ...] | None = None
    deformed_poly: TriPoly | None = None

    @property
    def is_cyclic(self) -> bool:
        return self.kind == "cyclic"

    @property
    def a(self) -> int:
        return self.weights_abc[0]

    @property
    def b(self) -> int:
        return self.weights_abc[1]

    @property
    def c(self) -> int:
        return self.weights_abc[2]

    @property
    def n(self) -> int:
        return self.ambient.weights[3]

    @property
    def d(self) -> int:
        if self.is_cyclic:
            return self.descriptor.d
        raise NotCyclicVariant("d is a cyclic-variant parameter")

    def fiber_polynomial(self) -> UniPoly:
        if self.roots is None:
            raise NotCyclicVariant("only cyclic-variant models carry a root polynomial")
        return self.roots.polynomial()

    def label(self) -> str:
        if self.is_cyclic:
            dsc = self.descriptor
            return f"cyclic(d={dsc.d},n={dsc.n},m={dsc.m},c={self.c},a={self.a})"
        return f"rdp({self.descriptor.label()})"

    def equation_str(self) -> str:
        if self.is_cyclic:
            factors = []
            for r, k in self.roots.pairs():
                zc = f"z^{self.n}" if self.n > 1 else "z"
                wc = f"w^{self.c}" if self.c > 1 else "w"
                coef = "" if r == 1 else f"{r}*"
                body = f"({zc} - {coef}{wc})"
                factors.append(body if k == 1 else f"{body}^{k}")
            return "x*y - " + "*".join(factors)
        parts = []
        for (i, j, k, l), coeff in self.homogenized_terms():
            names = ("x", "y", "z", "w")
            mono = "*".join(
                nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, (i, j, k, l)) if e > 0
            )
            if not mono:
                mono = "1"
            parts.append(mono if coeff == 1 else f"{coeff}*{mono}" if coeff != -1 else f"-{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def homogenized_terms(self) -> tuple[tuple[tuple[int, int, int, int], Fraction], ...]:
        """Terms of the degree-``N`` equation of a D/E model, as
        ``((i, j, k, l), coeff)`` for ``x^i y^j z^k w^l``."""
        if self.is_cyclic:
            raise NotCyclicVariant("cyclic models use the root-product form")
        a, b, c = self.weights_abc
        out = []
        for (i, j, k), coeff in sorted(self.deformed_poly.terms.items(), reverse=True):
            l = self.degree - (i * a + j * b + k * c)
            if l < 0:
                raise BadInput(f"term x^{i} y^{j} z^{k} exceeds degree {self.degree}")
            out.append(((i, j, k, l), coeff))
        return tuple(out)


@dataclass(frozen=True)
class WeightPair:
    """One admissible weight choice ``(a, b)`` at ambient ``c``."""

    a: int
    b: int
    c: int
    reduced_from: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class WeightEnumeration:
    """All weight solutions for fixed ``(d, n, m, c)``.

    ``pairs`` are the solutions of the congruence ``a == c*u (mod n)``
    with ``gcd(a, c) = 1``, listed by increasing ``a``; these are the
    weights usable at the requested ``c`` as they stand.  Candidates
    sharing a factor with ``c`` become well-formed models only after
    dividing that factor out of ``(a, b, c)``; their reductions are
    collected in ``reduced`` (deduplicated, each recording its raw
    source).  ``raw_count`` counts all congruence candidates with
    ``a, b >= 1``.
    """

    d: int
    n: int
    m: int
    c: int
    u: int
    pairs: tuple[WeightPair, ...]
    reduced: tuple[WeightPair, ...]
    raw_count: int

    def pair_tuples(self) -> list[tuple[int, int]]:
        return [(p.a, p.b) for p in self.pairs]


def enumerate_weights(d: int, n: int, m: int, c: int) -> WeightEnumeration:
    """Enumerate weights ``(a, b)`` for the cyclic model of given
    ``(d, n, m)`` at third weight ``c``.

    For ``n >= 2`` and ``c = 1`` the solutions form the ``d``-member
    family ``a = u + k*n``, ``b = (d - k)*n - u`` for ``k = 0..d-1``,
    where ``u`` is the inverse of ``m`` mod ``n``.
    """
    if d < 1 or n < 1 or c < 1:
        raise BadInput(f"d, n, c must be positive, got ({d}, {n}, {c})")
    if gcd(m, n) != 1:
        raise BadInput(f"m = {m} must be prime to n = {n}")
    if gcd(c, n) != 1:
        raise BadInput(f"c = {c} must be prime to n = {n}")
    m_c = m % n if n > 1 else 1
    u = mod_inverse(m_c, n)
    degree = d * n * c
    if n == 1:
        candidates = list(range(1, degree))
    else:
        target = (c * u) % n
        first = target if target else n
        candidates = list(range(first, degree, n))
    primary = []
    reduced = []
    seen = set()
    for a in candidates:
        b = degree - a
        if gcd(a, c) == 1:
            primary.append(WeightPair(a=a, b=b, c=c))
            continue
        space = well_formed_reduction(WeightedProjectiveSpace((a, b, c, n)), (0, 1, 2))
        ra, rb, rc = space.weights[0], space.weights[1], space.weights[2]
        if (ra, rb, rc) not in seen:
            seen.add((ra, rb, rc))
            reduced.append(WeightPair(a=ra, b=rb, c=rc, reduced_from=(a, b, c)))
    return WeightEnumeration(
        d=d,
        n=n,
        m=m_c,
        c=c,
        u=u,
        pairs=tuple(primary),
        reduced=tuple(reduced),
        raw_count=len(candidates),
    )


def build_cyclic(d: int, n: int, m: int, c: int, a: int, roots: RootConfig) -> CompactificationModel:
    """Compactified smoothing of ``1/(d*n^2)(1, d*n*m - 1)``.

    Checks the weight conditions by name: "hom" (``1 <= a <= d*n*c - 1``
    so both ``a`` and ``b = d*n*c - a`` are positive), "action"
    (``a*m == c mod n``), "div" (``gcd(c, n) = gcd(a, c) = 1``), and
    "man-cond" (the root total equals ``d``, roots nonzero and
    distinct).
    """
    if d < 1 or n < 1 or c < 1:
        raise BadInput(f"d, n, c must be positive, got ({d}, {n}, {c})")
    if gcd(m, n) != 1:
        raise BadInput(f"m = {m} must be prime to n = {n}")
    if gcd(c, n) != 1:
        raise ConditionViolated("div", f"gcd(c, n) = gcd({c}, {n}) != 1")
    degree = d * n * c
    b = degree - a
    if a < 1 or b < 1:
        raise ConditionViolated(
            "hom", f"a + b = {degree} forces 1 <= a <= {degree - 1}, got a = {a}"
        )
    m_c = m % n if n > 1 else 1
    if (a * m_c - c) % n:
        raise ConditionViolated("action", f"a*m = {a}*{m_c} != c = {c} (mod {n})")
    if gcd(a, c) != 1:
        raise ConditionViolated("div", f"gcd(a, c) = gcd({a}, {c}) != 1")
    if roots.total != d:
        raise RootsInvalid(f"multiplicities must sum to d = {d}, got {roots.total}")

    u = mod_inverse(m_c, n)
    ambient = WeightedProjectiveSpace((a, b, c, n))
    X = HypersurfaceClass(ambient, degree)
    # beta and C^2 are read off the ambient intersection theory rather
    # than restated: K = O(t) with t = -(c + n), C = O(n) restricted.
    t = adjunction_class(X)
    beta = Fraction(-t, n)
    csq = hypersurface_intersection(X, n, n)
    r1 = normalize(QuotientSingularity(a, (c, n)))
    r2 = normalize(QuotientSingularity(b, (c, n)))
    interior = tuple(
        (f"S_{j + 1}", k - 1) for j, (_, k) in enumerate(roots.pairs()) if k >= 2
    )
    curve = CurveAtInfinity(
        self_intersection=csq,
        orbifold_points=tuple(sorted(o for o in (a, b) if o > 1)),
    )
    descriptor = CyclicTDescriptor(
        d=d, n=n, m=m_c, u=u, solutions=((d, n, m_c),)
    )
    return CompactificationModel(
        kind="cyclic",
        descriptor=descriptor,
        ambient=ambient,
        degree=degree,
        weights_abc=(a, b, c),
        beta=beta,
        curve=curve,
        infinity_singularities=(("R1", r1), ("R2", r2)),
        interior_singularities=interior,
        roots=roots,
    )


_RDP_WEIGHTS = {
    ("E", 6): (3, 4, 6),
    ("E", 7): (4, 6, 9),
    ("E", 8): (6, 10, 15),
}

_RDP_INFINITY = {
    ("E", 6): (3, 3, 2),
    ("E", 7): (2, 3, 4),
    ("E", 8): (2, 3, 5),
}


def _rdp_weights(ade: str, index: int) -> tuple[int, int, int]:
    if ade == "D":
        return (index - 2, 2, index - 1)
    return _RDP_WEIGHTS[(ade, index)]


def _rdp_infinity_orders(ade: str, index: int) -> tuple[int, int, int]:
    if ade == "D":
        return (2, 2, index - 2)
    return _RDP_INFINITY[(ade, index)]


def build_rdp(
    ade: str, index: int, coefficients: Iterable[RationalLike] | None = None
) -> CompactificationModel:
    """Compactified deformation of a ``D`` or ``E`` double point.

    The equation is the quasi-homogeneous normal form minus a linear
    combination of the Milnor basis monomials, homogenized by the
    weight-one variable ``w``; ``coefficients`` (default all zero) pair
    with the basis in catalogue order.  A-type inputs belong to the
    cyclic builder (``n = 1``, ``d = k + 1``) and are rejected here.
    """
    if ade == "A":
        raise InvalidIndex(
            "A-type models are cyclic: use the cyclic builder with n = 1, d = index + 1"
        )
    data = rdp_data(ade, index)
    a, b, c = _rdp_weights(ade, index)
    degree = a + b + c - 1
    if coefficients is None:
        coeffs = (Fraction(0),) * data.milnor_number
    else:
        coeffs = tuple(as_fraction(v) for v in coefficients)
        if len(coeffs) != data.milnor_number:
            raise CoefficientCountMismatch(
                f"{data.label()} needs {data.milnor_number} coefficients, got {len(coeffs)}"
            )
    deformed = data.defining_poly
    for coeff, exps in zip(coeffs, data.milnor_basis):
        deformed = deformed - TriPoly.monomial(coeff, *exps)
    ambient = WeightedProjectiveSpace((a, b, c, 1))
    X = HypersurfaceClass(ambient, degree)
    beta = Fraction(-adjunction_class(X), 1)
    csq = hypersurface_intersection(X, 1, 1)
    orders = _rdp_infinity_orders(ade, index)
    infinity = tuple(
        (f"P{i + 1}", QuotientSingularity(r, (1, 1))) for i, r in enumerate(orders)
    )
    curve = CurveAtInfinity(
        self_intersection=csq,
        orbifold_points=tuple(sorted(orders)),
    )
    return CompactificationModel(
        kind="rdp",
        descriptor=RdpDescriptor(ade=ade, index=index),
        ambient=ambient,
        degree=degree,
        weights_abc=(a, b, c),
        beta=beta,
        curve=curve,
        infinity_singularities=infinity,
        interior_singularities=(),
        rdp=data,
        coefficients=coeffs,
        deformed_poly=deformed,
    )


@dataclass(frozen=True)
class FiberStatus:
    """Interior smoothness of a cyclic-variant fibre."""

    smooth: bool
    a_indices: tuple[int, ...]


def smoothness_status(roots: RootConfig) -> FiberStatus:
    """Interior double points read off the expanded root polynomial.

    Runs the squarefree decomposition of ``P(z)`` and converts each
    multiplicity-``k`` factor of degree ``e`` into ``e`` double points
    ``A_(k-1)``; this is deliberately independent of the multiplicity
    list the configuration was built from.
    """
    indices: list[int] = []
    for deg, mult in multiplicity_profile(roots.polynomial()):
        if mult >= 2:
            indices.extend([mult - 1] * deg)
    indices.sort()
    return FiberStatus(smooth=not indices, a_indices=tuple(indices))


def topology(model: CompactificationModel) -> TopologyInvariants:
    """Topological invariants of the fibre ``M`` and its
    compactification.

    Cyclic variant: ``M`` has the homotopy type of the Milnor fibre
    with ``b_2 = d - 1`` and fundamental group of order ``n``; adding
    the boundary curve caps it to a simply connected surface with
    ``b_2 = d`` and ``chi = d + 2``.  D/E of index ``k``: the Milnor
    fibre is simply connected with ``b_2 = k``.
    """
    if model.is_cyclic:
        d = model.descriptor.d
        return TopologyInvariants(
            pi1_order_M=model.descriptor.n,
            b2_M=d - 1,
            b2_Mbar=d,
            chi_M=d,
            chi_Mbar=d + 2,
        )
    k = model.descriptor.index
    return TopologyInvariants(
        pi1_order_M=1,
        b2_M=k,
        b2_Mbar=k + 1,
        chi_M=k + 1,
        chi_Mbar=k + 3,
    )


@dataclass(frozen=True)
class ResolvedModel:
    """Model with its interior double points replaced by (-2)-chains."""

    base: CompactificationModel
    exceptional_chains: tuple[tuple[str, HJChain], ...]

    @property
    def beta(self) -> Fraction:
        return self.base.beta

    @property
    def curve(self) -> CurveAtInfinity:
        return self.base.curve

    @property
    def infinity_singularities(self) -> tuple[tuple[str, QuotientSingularity], ...]:
        return self.base.infinity_singularities

    @property
    def interior_singularities(self) -> tuple[tuple[str, int], ...]:
        return ()


def minimal_resolution(model: CompactificationModel) -> ResolvedModel:
    """Resolve the interior ``A_k`` points; the boundary data is
    untouched (the quotient points at infinity stay as they are, and the
    anticanonical proportionality survives pullback)."""
    chains = []
    for lbl, k in model.interior_singularities:
        chain = hj_resolution(QuotientSingularity(k + 1, (1, k)))
        chains.append((lbl, chain))
    return ResolvedModel(base=model, exceptional_chains=tuple(chains))
