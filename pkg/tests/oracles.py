"""Independent oracles used by the test suite.

The Milnor oracle computes the dimension of C[x,y,z]/(f, f_x, f_y, f_z)
from scratch: a textbook Buchberger loop in graded lexicographic order,
followed by a staircase count of standard monomials.  Nothing here
shares code with the catalogued bases it is used to validate; only the
sparse polynomial arithmetic type is reused.
"""

from __future__ import annotations

from fractions import Fraction

from classt.quotients import TriPoly

Monomial = tuple[int, int, int]
Terms = dict[Monomial, Fraction]


def _key(e: Monomial) -> tuple[int, Monomial]:
    return (e[0] + e[1] + e[2], e)


def _leading(terms: Terms) -> Monomial:
    return max(terms, key=_key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _sub_shift(p: Terms, factor: Fraction, shift: Monomial, g: Terms) -> Terms:
    out = dict(p)
    for e, c in g.items():
        key = (e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])
        v = out.get(key, Fraction(0)) - factor * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def normal_form(terms: Terms, basis: list[Terms]) -> Terms:
    """Full multivariate division remainder of ``terms`` by ``basis``."""
    p = dict(terms)
    remainder: Terms = {}
    while p:
        lt = _leading(p)
        for g in basis:
            ltg = _leading(g)
            if _divides(ltg, lt):
                factor = p[lt] / g[ltg]
                shift = (lt[0] - ltg[0], lt[1] - ltg[1], lt[2] - ltg[2])
                p = _sub_shift(p, factor, shift, g)
                break
        else:
            remainder[lt] = p.pop(lt)
    return remainder


def _s_poly(f: Terms, g: Terms) -> Terms:
    lf, lg = _leading(f), _leading(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(l - a for l, a in zip(lcm, lf))
    sg = tuple(l - a for l, a in zip(lcm, lg))
    out: Terms = {}
    for e, c in f.items():
        key = (e[0] + sf[0], e[1] + sf[1], e[2] + sf[2])
        out[key] = out.get(key, Fraction(0)) + c / f[lf]
    for e, c in g.items():
        key = (e[0] + sg[0], e[1] + sg[1], e[2] + sg[2])
        v = out.get(key, Fraction(0)) - c / g[lg]
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return {e: c for e, c in out.items() if c}


def groebner_basis(gens: list[Terms]) -> list[Terms]:
    basis = [dict(g) for g in gens if g]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        lf, lg = _leading(basis[i]), _leading(basis[j])
        # Buchberger's coprimality criterion: disjoint leading supports
        # reduce to zero automatically.
        if all(min(a, b) == 0 for a, b in zip(lf, lg)):
            continue
        r = normal_form(_s_poly(basis[i], basis[j]), basis)
        if r:
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return basis


def standard_monomials(basis: list[Terms]) -> list[Monomial]:
    """Monomials outside the leading-term ideal; raises if infinite."""
    leads = [_leading(g) for g in basis]
    bounds = []
    for axis in range(3):
        pures = [
            l[axis]
            for l in leads
            if all(l[k] == 0 for k in range(3) if k != axis)
        ]
        if not pures:
            raise ValueError("quotient is not finite dimensional")
        bounds.append(min(pures))
    out = []
    for i in range(bounds[0]):
        for j in range(bounds[1]):
            for k in range(bounds[2]):
                e = (i, j, k)
                if not any(_divides(l, e) for l in leads):
                    out.append(e)
    out.sort(key=_key)
    return out


def milnor_quotient_dim(f: TriPoly) -> int:
    """Dimension of the quotient by ``(f, f_x, f_y, f_z)``."""
    gens = [dict(p.terms) for p in (f, f.diff(0), f.diff(1), f.diff(2))]
    return len(standard_monomials(groebner_basis(gens)))


def monomials_independent(monomials: list[Monomial], f: TriPoly) -> bool:
    """Are the residue classes of the monomials linearly independent in
    the quotient by ``(f, f_x, f_y, f_z)``?"""
    gens = [dict(p.terms) for p in (f, f.diff(0), f.diff(1), f.diff(2))]
    gb = groebner_basis(gens)
    std = standard_monomials(gb)
    index = {e: i for i, e in enumerate(std)}
    rows = []
    for mono in monomials:
        nf = normal_form({tuple(mono): Fraction(1)}, gb)
        row = [Fraction(0)] * len(std)
        for e, c in nf.items():
            if e not in index:
                return False
            row[index[e]] = c
        rows.append(row)
    return _rank(rows) == len(monomials)


def _rank(rows: list[list[Fraction]]) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [v - factor * p for v, p in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def exhaustive_inverse(m: int, n: int) -> int | None:
    """Search {1..n-1} directly for the inverse; None when absent."""
    if n == 1:
        return 0
    for u in range(1, n):
        if (m * u) % n == 1:
            return u
    return None
