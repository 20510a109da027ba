"""Integer, polynomial, and continued-fraction primitives."""

import random
from fractions import Fraction
from math import gcd

import pytest

from classt.arith import (
    UniPoly,
    eval_poly,
    ext_gcd,
    hj_evaluate,
    hj_expand,
    mod_inverse,
    multiplicity_profile,
    poly_gcd,
    squarefree_decomposition,
)
from classt.errors import BadInput, NonInvertible, ZeroPolynomial

from oracles import exhaustive_inverse


def test_ext_gcd_frozen_values():
    assert ext_gcd(35, 64) == (1, 11, -6)
    g, x, y = ext_gcd(12, 18)
    assert g == 6 and 12 * x + 18 * y == 6
    assert ext_gcd(0, 0) == (0, 0, 0)


def test_ext_gcd_identity_sweep():
    for a in range(-25, 26):
        for b in range(-25, 26):
            g, x, y = ext_gcd(a, b)
            assert g == gcd(a, b)
            assert a * x + b * y == g


def test_mod_inverse_frozen_values():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(5, 1) == 0


def test_mod_inverse_matches_exhaustive_search():
    for n in range(1, 61):
        for m in range(-2 * n, 2 * n + 1):
            expected = exhaustive_inverse(m, n) if gcd(m, n) == 1 else None
            if expected is None:
                with pytest.raises(NonInvertible):
                    mod_inverse(m, n)
            else:
                got = mod_inverse(m, n)
                assert got == expected
                if n > 1:
                    assert 1 <= got < n and (m * got) % n == 1


def test_mod_inverse_rejects_bad_modulus():
    with pytest.raises(NonInvertible):
        mod_inverse(3, 0)
    with pytest.raises(NonInvertible):
        mod_inverse(4, 6)


def test_from_roots_expansion_frozen():
    p = UniPoly.from_roots([(1, 2), (2, 1)])
    assert p.coeffs == (Fraction(-2), Fraction(5), Fraction(-4), Fraction(1))
    assert eval_poly(p, 3) == 4
    assert eval_poly(p, Fraction(1, 2)) == Fraction(-3, 8)


def test_eval_matches_termwise_sum():
    rng = random.Random(5)
    for _ in range(40):
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 7))]
        p = UniPoly.of(coeffs)
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        direct = sum((c * x**i for i, c in enumerate(p.coeffs)), Fraction(0))
        assert p(x) == direct


def test_divmod_and_gcd():
    rng = random.Random(11)
    for _ in range(30):
        a = UniPoly.of([rng.randint(-3, 3) for _ in range(rng.randint(1, 6))])
        b = UniPoly.of([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            with pytest.raises(ZeroPolynomial):
                divmod(a, b)
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree
    left = UniPoly.from_roots([(1, 1), (2, 1)])
    right = UniPoly.from_roots([(1, 1), (3, 1)])
    assert poly_gcd(left, right) == UniPoly.from_roots([(1, 1)])


def test_derivative_product_rule():
    p = UniPoly.of([1, 2, 3])
    q = UniPoly.of([-1, 0, 0, 2])
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_squarefree_decomposition_frozen():
    p = UniPoly.from_roots([(1, 2), (2, 1)])
    decomp = squarefree_decomposition(p)
    assert decomp == [
        (UniPoly.from_roots([(2, 1)]), 1),
        (UniPoly.from_roots([(1, 1)]), 2),
    ]
    assert multiplicity_profile(p) == [(1, 1), (1, 2)]


def test_multiplicity_profile_reconstructs_input():
    rng = random.Random(23)
    for _ in range(25):
        root_count = rng.randint(1, 4)
        roots = rng.sample(range(-6, 7), root_count)
        pairs = [(Fraction(r), rng.randint(1, 3)) for r in roots]
        p = UniPoly.from_roots(pairs)
        decomp = squarefree_decomposition(p)
        rebuilt = UniPoly.of([1])
        for factor, mult in decomp:
            rebuilt = rebuilt * factor**mult
        assert rebuilt == p.monic()
        assert sum(deg * mult for deg, mult in multiplicity_profile(p)) == p.degree
        by_mult = {}
        for _, k in pairs:
            by_mult[k] = by_mult.get(k, 0) + 1
        assert multiplicity_profile(p) == sorted(
            ((deg, mult) for mult, deg in by_mult.items()), key=lambda t: (t[1], t[0])
        )


def test_multiplicity_profile_edge_cases():
    with pytest.raises(ZeroPolynomial):
        multiplicity_profile(UniPoly())
    assert multiplicity_profile(UniPoly.of([5])) == []


def test_hj_expand_frozen():
    assert hj_expand(3, 2) == [2, 2]
    assert hj_expand(4, 1) == [4]
    assert hj_expand(7, 5) == [2, 2, 3]


def test_hj_expand_rejects_bad_input():
    with pytest.raises(BadInput):
        hj_expand(4, 2)
    with pytest.raises(BadInput):
        hj_expand(3, 3)
    with pytest.raises(BadInput):
        hj_expand(3, 0)


def test_hj_roundtrip_sweep():
    for r in range(2, 61):
        for q in range(1, r):
            if gcd(q, r) != 1:
                continue
            entries = hj_expand(r, q)
            assert all(b >= 2 for b in entries)
            assert len(entries) <= r - 1
            assert hj_evaluate(entries) == Fraction(r, q)


def test_hj_evaluate_empty():
    with pytest.raises(BadInput):
        hj_evaluate([])
