import random

import pytest

from llclab.errors import InsufficientPrecision, ZeroInput
from llclab.laurent import LocalField


# dict-based polynomial arithmetic, written independently of the series
# class, used as the oracle for exact products and the small norm forms
def d_of(x):
    return {x.val + i: c for i, c in enumerate(x.coeffs) if c}


def d_add(ff, A, B):
    out = dict(A)
    for e, c in B.items():
        out[e] = ff.add(out.get(e, 0), c)
    return {e: c for e, c in out.items() if c}


def d_mul(ff, A, B):
    out = {}
    for e1, c1 in A.items():
        for e2, c2 in B.items():
            e = e1 + e2
            out[e] = ff.add(out.get(e, 0), ff.mul(c1, c2))
    return {e: c for e, c in out.items() if c}


def random_exact(rng, field, min_val=-3, max_len=6):
    val = rng.randrange(min_val, 4)
    length = rng.randrange(1, max_len + 1)
    coeffs = [rng.randrange(field.residue.q) for _ in range(length)]
    return field.elem(val, coeffs)


def test_exact_ring_ops_match_dict_oracle():
    rng = random.Random(9157)
    for q in (3, 5, 9):
        F = LocalField.base_field(q)
        ff = F.residue
        for _ in range(40):
            x = random_exact(rng, F)
            y = random_exact(rng, F)
            assert d_of(x * y) == d_mul(ff, d_of(x), d_of(y))
            assert d_of(x + y) == d_add(ff, d_of(x), d_of(y))
            assert d_of(x - y) == d_add(ff, d_of(x), d_of(-y))


def test_normalization_strips_zeros():
    F = LocalField.base_field(5)
    x = F.elem(2, (0, 0, 3, 0, 1, 0, 0))
    assert x.val == 4 and x.coeffs == (3, 0, 1)
    z = F.elem(7, ())
    assert z.is_zero_at_prec() and z.is_exact_zero()


def test_precision_of_products():
    F = LocalField.base_field(3)
    a = F.elem(0, (1,), 2)       # 1 + O(t^2)
    b = F.variable() ** 3
    assert (a * b).prec == 5 and (a * b).val == 3
    c = F.elem(-1, (1,), 0)      # t^-1 + O(1)
    d = F.elem(1, (1,), 3)       # t + O(t^3)
    prod = c * d
    assert prod.prec == 1
    assert prod.coeff_at(0) == 1
    with pytest.raises(InsufficientPrecision):
        prod.coeff_at(1)


def test_zero_at_precision_products():
    F = LocalField.base_field(3)
    a = F.zero(2)
    b = F.zero(3)
    assert (a * b).prec == 5
    assert (a * b).is_zero_at_prec()
    # exact zero annihilates regardless of the other factor's precision
    assert (F.zero() * F.elem(0, (1,), 1)).is_exact_zero()


def test_leading_and_coeff_errors():
    F = LocalField.base_field(5)
    with pytest.raises(ZeroInput):
        F.zero().leading()
    with pytest.raises(InsufficientPrecision):
        F.zero(4).leading()
    x = F.elem(0, (1, 2), 3)
    assert x.coeff_at(2) == 0
    with pytest.raises(InsufficientPrecision):
        x.coeff_at(3)


def test_inverse_of_one_plus_t():
    F = LocalField.base_field(5)
    x = F.elem(0, (1, 1))
    inv = x.inverse(rel_prec=10)
    # alternating geometric series
    for k in range(10):
        assert inv.coeff_at(k) == (1 if k % 2 == 0 else 4)
    prod = x * inv
    assert prod.coeff_at(0) == 1
    assert all(prod.coeff_at(k) == 0 for k in range(1, 9))


def test_inverse_of_exact_monomial_is_exact():
    F = LocalField.base_field(7)
    x = F.elem(3, (2,))
    inv = x.inverse()
    assert inv.prec is None and inv.val == -3
    assert (x * inv) == F.one()


def test_division_and_pow():
    rng = random.Random(404)
    F = LocalField.base_field(7)
    for _ in range(20):
        x = random_exact(rng, F)
        if x.is_zero_at_prec():
            continue
        y = (x * x) / x
        assert y.agrees(x)
    t = F.variable()
    assert t**-2 == F.elem(-2, (1,))
    x = F.elem(0, (1, 3))
    assert x**3 == x * x * x


def test_truncate():
    F = LocalField.base_field(3)
    x = F.elem(0, (1, 2, 1, 2))
    y = x.truncate(2)
    assert y.coeffs == (1, 2) and y.prec == 2


def test_extension_defining_relation():
    for q, n, u0 in [(5, 2, 1), (5, 2, 3), (7, 3, 2), (3, 4, 2), (13, 6, 6)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        u = E.variable()
        pi = E.from_base(F.elem(1, (u0,)))
        assert u**n == pi


def test_extension_rejects_wild_degrees():
    F = LocalField.base_field(3)
    with pytest.raises(ValueError):
        F.extension(3)
    with pytest.raises(ValueError):
        F.extension(6, 2)
    with pytest.raises(ValueError):
        F.extension(2, 0)


def test_embedding_precision_and_ring_map():
    rng = random.Random(77)
    F = LocalField.base_field(5)
    E = F.extension(3, 2)
    x = F.elem(0, (1, 2), 4)
    assert E.from_base(x).prec == 12
    for _ in range(20):
        a = random_exact(rng, F)
        b = random_exact(rng, F)
        assert E.from_base(a * b) == E.from_base(a) * E.from_base(b)
        assert E.from_base(a + b) == E.from_base(a) + E.from_base(b)


def test_trace_of_scalars_and_basis_powers():
    for q, n, u0 in [(5, 2, 3), (7, 3, 2), (3, 4, 2), (11, 5, 7)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        ff = F.residue
        c = 2 % q
        assert E.trace_to_base(E.from_base(F.scalar(c))) == F.scalar(ff.scalar_mul(n, c))
        u = E.variable()
        for k in range(1, n):
            assert E.trace_to_base(u**k).is_exact_zero()
        assert E.trace_to_base(u**n) == F.elem(1, (ff.scalar_mul(n, u0),))


def test_trace_of_inverse_uniformizer_times_unit():
    # Tr(u^-1 * (a0 + a1 u)) collapses to n * a1: the a0 part has no
    # diagonal contribution, the a1 part sits on it with multiplicity n
    rng = random.Random(515)
    for q, n, u0 in [(5, 2, 3), (7, 3, 5), (3, 4, 1), (13, 6, 2), (9, 5, 4)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        ff = F.residue
        for _ in range(10):
            a0 = rng.randrange(1, q)
            a1 = rng.randrange(q)
            x = E.elem(-1, (a0, a1))
            expect = F.scalar(ff.scalar_mul(n, a1))
            assert E.trace_to_base(x) == expect


def test_trace_is_base_linear():
    rng = random.Random(616)
    F = LocalField.base_field(7)
    E = F.extension(3, 4)
    for _ in range(15):
        x = random_exact(rng, E)
        y = random_exact(rng, E)
        c = random_exact(rng, F)
        lhs = E.trace_to_base(x + y)
        assert lhs == E.trace_to_base(x) + E.trace_to_base(y)
        assert E.trace_to_base(E.from_base(c) * x) == c * E.trace_to_base(x)


def test_norm_of_uniformizer_has_the_ramified_sign():
    for q, n, u0 in [(5, 2, 3), (7, 3, 5), (3, 4, 1), (13, 6, 2), (11, 5, 7)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        ff = F.residue
        sign_u0 = u0 if (n - 1) % 2 == 0 else ff.neg(u0)
        assert E.norm_to_base(E.variable()) == F.elem(1, (sign_u0,))


def test_norm_of_scalars_and_embedded_elements():
    rng = random.Random(717)
    F = LocalField.base_field(5)
    E = F.extension(4, 3)
    ff = F.residue
    for c in ff.units():
        assert E.norm_to_base(E.from_base(F.scalar(c))) == F.scalar(ff.pow(c, 4))
    for _ in range(8):
        y = random_exact(rng, F, min_val=0, max_len=3)
        assert E.norm_to_base(E.from_base(y)) == y**4


def test_norm_is_multiplicative():
    rng = random.Random(818)
    for q, n, u0 in [(5, 2, 3), (7, 3, 2), (3, 4, 2)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        for _ in range(8):
            x = random_exact(rng, E, min_val=-2, max_len=4)
            y = random_exact(rng, E, min_val=-2, max_len=4)
            if x.is_zero_at_prec() or y.is_zero_at_prec():
                continue
            assert E.norm_to_base(x * y) == E.norm_to_base(x) * E.norm_to_base(y)


def test_quadratic_norm_form():
    # n = 2: N(a + b u) = a^2 - u0 t b^2, checked against the dict oracle
    rng = random.Random(919)
    for q, u0 in [(5, 3), (9, 7), (13, 2)]:
        F = LocalField.base_field(q)
        E = F.extension(2, u0)
        ff = F.residue
        for _ in range(10):
            a = rng.randrange(q)
            b = rng.randrange(q)
            if a == b == 0:
                continue
            x = E.elem(0, (a, b))
            expect = d_add(
                ff,
                d_mul(ff, {0: a}, {0: a}),
                d_mul(ff, {1: ff.neg(u0)}, d_mul(ff, {0: b}, {0: b})),
            )
            assert d_of(E.norm_to_base(x)) == expect


def test_cubic_norm_form():
    # n = 3: N(a + b u + c u^2) = a^3 + u0 t b^3 + (u0 t)^2 c^3 - 3 u0 t a b c
    rng = random.Random(1021)
    for q, u0 in [(5, 2), (7, 3), (13, 11)]:
        F = LocalField.base_field(q)
        E = F.extension(3, u0)
        ff = F.residue
        pi = {1: u0}
        for _ in range(10):
            a, b, c = (rng.randrange(q) for _ in range(3))
            if a == b == c == 0:
                continue
            x = E.elem(0, (a, b, c))
            cube = lambda z: ff.mul(z, ff.mul(z, z))
            expect = {0: cube(a)}
            expect = d_add(ff, expect, d_mul(ff, pi, {0: cube(b)}))
            expect = d_add(ff, expect, d_mul(ff, d_mul(ff, pi, pi), {0: cube(c)}))
            cross = ff.neg(ff.scalar_mul(3, ff.mul(a, ff.mul(b, c))))
            expect = d_add(ff, expect, d_mul(ff, pi, {0: cross}))
            assert d_of(E.norm_to_base(x)) == expect


def test_unit_reps_census():
    for q, m in [(3, 1), (3, 2), (5, 2), (7, 1), (9, 2)]:
        F = LocalField.base_field(q)
        reps = F.unit_reps(m)
        assert len(reps) == (q - 1) * q ** (m - 1)
        seen = set()
        for r in reps:
            assert r.val == 0 and r.coeffs[0] != 0
            key = tuple(r.coeff_at(k) for k in range(m))
            assert key not in seen
            seen.add(key)


def test_integer_reps_census():
    F = LocalField.base_field(3)
    reps = F.integer_reps(-1, 2)
    assert len(reps) == 27
    assert len({d_of(r) and tuple(sorted(d_of(r).items())) or () for r in reps}) == 27


def test_json_round_trip():
    F = LocalField.base_field(5)
    E = F.extension(3, 2)
    for x in [F.elem(-2, (1, 0, 3), 4), E.elem(0, (2, 1)), F.zero(3)]:
        fld = x.field
        data = fld.elem_to_json(x)
        assert fld.elem_from_json(data) == x
    with pytest.raises(ValueError):
        F.elem_from_json({"field": "E", "n": 3, "val": 0, "coeffs": [1]})
