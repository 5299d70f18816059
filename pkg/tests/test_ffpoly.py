"""Field arithmetic in GF(5^k), polynomial gcds, fifth roots, root finding."""

import random

import pytest

from charfive.ffpoly import (
    GF,
    GFPoly,
    MODULI,
    SplittingFieldError,
    _f5_is_irreducible,
    _search_modulus,
    embedding,
    field_arithmetic,
    format_poly_literal,
    is_squarefree,
    parse_poly_literal,
    poly_gcd,
    roots_in_extension,
    roots_in_field,
    subfield_degree,
)

F5 = GF(1)
F25 = GF(2)


def test_prime_field_basics():
    assert field_arithmetic(F5, F5.elem(2), F5.elem(4), "add") == F5.elem(1)
    assert field_arithmetic(F5, F5.elem(2), None, "inv") == F5.elem(3)
    assert field_arithmetic(F5, F5.elem(3), F5.elem(4), "mul") == F5.elem(2)
    assert field_arithmetic(F5, F5.elem(2), 4, "pow") == F5.elem(1)
    with pytest.raises(ValueError):
        field_arithmetic(F5, F5.elem(1), F5.elem(1), "xor")
    with pytest.raises(ZeroDivisionError):
        F5.inv(F5.zero)


def test_field_axioms_random():
    rng = random.Random(12)
    for k in (1, 2, 3, 4):
        fld = GF(k)
        for _ in range(200):
            a = fld.rand_elem(rng)
            b = fld.rand_elem(rng)
            c = fld.rand_elem(rng)
            assert fld.mul(fld.mul(a, b), c) == fld.mul(a, fld.mul(b, c))
            assert fld.add(fld.add(a, b), c) == fld.add(a, fld.add(b, c))
            assert fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c))
            assert fld.mul(a, b) == fld.mul(b, a)
            if any(a):
                assert fld.mul(a, fld.inv(a)) == fld.one
            assert fld.sub(fld.add(a, b), b) == a


def test_moduli_are_the_canonical_data():
    for k, mod in MODULI.items():
        assert _f5_is_irreducible(list(mod))
        assert _search_modulus(k) == mod


def test_gf_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        GF(2, (1, 0, 1))          # t^2 + 1 = (t-2)(t-3) over F5


def test_poly_gcd_examples():
    u = GFPoly.from_ints(F5, [4, 0, 1])      # x^2 + 4 = (x-1)(x+1)
    v = GFPoly.from_ints(F5, [4, 1])         # x + 4 = x - 1
    assert poly_gcd(u, v) == v.monic()
    zero = GFPoly(F5, [])
    w = GFPoly.from_ints(F5, [0, 3])
    assert poly_gcd(w, zero) == w.monic()
    with pytest.raises(ValueError):
        poly_gcd(zero, zero)


def test_poly_gcd_divides_both():
    rng = random.Random(9)
    for _ in range(100):
        fld = GF(rng.choice((1, 2)))
        u = GFPoly(fld, [fld.rand_elem(rng) for _ in range(rng.randint(1, 7))])
        v = GFPoly(fld, [fld.rand_elem(rng) for _ in range(rng.randint(1, 7))])
        if u.is_zero() and v.is_zero():
            continue
        g = poly_gcd(u, v)
        if not u.is_zero():
            assert (u % g).is_zero()
        if not v.is_zero():
            assert (v % g).is_zero()


def test_poly_divmod_roundtrip():
    rng = random.Random(10)
    for _ in range(100):
        fld = GF(rng.choice((1, 2, 3)))
        u = GFPoly(fld, [fld.rand_elem(rng) for _ in range(rng.randint(0, 8))])
        v = GFPoly(fld, [fld.rand_elem(rng) for _ in range(rng.randint(1, 5))])
        if v.is_zero():
            continue
        q, r = divmod(u, v)
        assert q * v + r == u
        assert r.is_zero() or r.degree < v.degree


def test_is_squarefree_examples():
    assert not is_squarefree(GFPoly.from_ints(F5, [1, 0, 0, 0, 0, 1]))  # (x+1)^5
    assert is_squarefree(GFPoly.from_ints(F5, [0, 2, 0, 0, 0, 1]))      # x^5 + 2x
    assert not is_squarefree(GFPoly.from_ints(F5, [0, 0, 1]))           # x^2
    assert is_squarefree(GFPoly.from_ints(F5, [3]))
    with pytest.raises(ValueError):
        is_squarefree(GFPoly(F5, []))


def test_fifth_root():
    for c in range(5):
        assert F5.fifth_root(F5.elem(c)) == F5.elem(c)    # Fermat: c^5 = c
    assert F25.fifth_root(F25.zero) == F25.zero
    for a in F25.iter_elements():
        r = F25.fifth_root(a)
        assert F25.pow(r, 5) == a
    rng = random.Random(4)
    f125 = GF(3)
    for _ in range(100):
        a = f125.rand_elem(rng)
        b = f125.rand_elem(rng)
        assert f125.fifth_root(f125.mul(a, b)) \
            == f125.mul(f125.fifth_root(a), f125.fifth_root(b))


def test_roots_in_field_exhaustive_and_cz():
    u = GFPoly.from_ints(F5, [0, 2, 0, 0, 0, 1])          # x(x^4 + 2)
    assert roots_in_field(u) == [(F5.zero, 1)]
    big = GF(6)
    rng = random.Random(8)
    for _ in range(10):
        a = big.rand_elem(rng)
        b = big.rand_elem(rng)
        if a == b:
            continue
        poly = GFPoly(big, [big.mul(a, b), big.neg(big.add(a, b)), big.one])
        assert [r for r, _ in roots_in_field(poly)] == sorted([a, b])


def test_roots_in_extension_quintic():
    u = GFPoly.from_ints(F5, [0, 2, 0, 0, 0, 1])          # x^5 + 2x
    recs = roots_in_extension(u, 8)
    assert len(recs) == 5
    assert all(r.multiplicity == 1 for r in recs)
    assert recs[0].value == F5.zero and recs[0].subfield_degree == 1
    assert all(r.subfield_degree == 4 for r in recs[1:])
    # independent oracle: exhaustive evaluation over the 625-element field
    f625 = GF(4)
    emb = embedding(F5, f625)
    u625 = u.map_coeffs(emb, f625)
    brute = sorted(a for a in f625.iter_elements() if not any(u625.eval(a)))
    assert sorted(emb(r.value) if r.field.degree == 1 else r.value
                  for r in recs) == brute


def test_roots_in_extension_multiplicity():
    u = GFPoly.from_ints(F5, [1, 0, 0, 0, 0, 1])          # (x+1)^5
    recs = roots_in_extension(u, 3)
    assert len(recs) == 1
    assert recs[0].value == F5.elem(4)
    assert recs[0].multiplicity == 5
    assert recs[0].subfield_degree == 1


def test_roots_in_extension_quadratic():
    u = GFPoly.from_ints(F5, [1, 0, 1])                   # x^2 + 1
    recs = roots_in_extension(u, 2)
    assert [r.value for r in recs] == [F5.elem(2), F5.elem(3)]


def test_roots_in_extension_reconstruction():
    u = GFPoly.from_ints(F5, [0, 2, 0, 0, 0, 1])
    recs = roots_in_extension(u, 8)
    top = max(recs, key=lambda r: r.field.degree).field
    prod = GFPoly(top, [top.one])
    u_top = u.map_coeffs(embedding(F5, top), top)
    for rec in recs:
        val = embedding(rec.field, top)(rec.value)
        lin = GFPoly(top, [top.neg(val), top.one])
        for _ in range(rec.multiplicity):
            prod = prod * lin
    assert prod == u_top.monic()


def test_roots_in_extension_partial_error():
    u = GFPoly.from_ints(F5, [2, 0, 0, 0, 1])             # irreducible quartic
    with pytest.raises(SplittingFieldError) as exc:
        roots_in_extension(u, 3)
    assert exc.value.partial == []
    assert exc.value.remaining == u.monic()


def test_embedding_properties():
    rng = random.Random(15)
    src, dst = F25, GF(4)
    emb = embedding(src, dst)
    # the image of the generator is a root of the source modulus
    gen_img = emb(src.elem([0, 1]))
    mod = GFPoly.from_ints(dst, list(src.modulus))
    assert not any(mod.eval(gen_img))
    for _ in range(100):
        a = src.rand_elem(rng)
        b = src.rand_elem(rng)
        assert emb(src.add(a, b)) == dst.add(emb(a), emb(b))
        assert emb(src.mul(a, b)) == dst.mul(emb(a), emb(b))
    with pytest.raises(ValueError):
        embedding(F25, GF(3))


def test_subfield_degree():
    assert subfield_degree(F25, F25.elem(3)) == 1
    assert subfield_degree(F25, F25.elem([0, 1])) == 2
    f16 = GF(4)
    emb = embedding(F25, f16)
    assert subfield_degree(f16, emb(F25.elem([0, 1]))) == 2


def test_literals_roundtrip():
    p = parse_poly_literal("[0,0,1,0,0,0,1]@5")
    assert p.field == F5 and p.degree == 6
    assert format_poly_literal(p) == "[0,0,1,0,0,0,1]@5"
    q = parse_poly_literal("[[1,2],[0,1],3]@5^2")
    assert q.field == F25 and q.degree == 2
    assert parse_poly_literal(format_poly_literal(q)) == q
    custom = parse_poly_literal("[1,2]@5^2;mod=[1,1,1]")
    assert custom.field.modulus == (1, 1, 1)
    assert parse_poly_literal(format_poly_literal(custom)) == custom
    with pytest.raises(ValueError):
        parse_poly_literal("[1,2,3]")
    with pytest.raises(ValueError):
        parse_poly_literal("[1]@7")


def test_poly_shift():
    rng = random.Random(21)
    for _ in range(50):
        fld = GF(rng.choice((1, 2)))
        p = GFPoly(fld, [fld.rand_elem(rng) for _ in range(rng.randint(0, 6))])
        a = fld.rand_elem(rng)
        x0 = fld.rand_elem(rng)
        assert p.shift(a).eval(x0) == p.eval(fld.add(x0, a))
