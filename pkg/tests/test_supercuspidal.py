import random

import pytest

from llclab.bruhat import MonomialClass
from llclab.cyclotomic import CycloNumber, RootOfUnity
from llclab.laurent import LocalField
from llclab.matrices import MatG, upper_unipotent
from llclab.supercuspidal import SSCDatum

from test_bruhat import random_iplus, random_unipotent


def make_datum(q=5, n=2, zeta_num=1, pi_unit=3, omega_exp=0):
    zeta = RootOfUnity(zeta_num, n * n)
    return SSCDatum(q, n, zeta, omega_exp=omega_exp, omega_at_pi=zeta**n, pi_unit=pi_unit)


def test_datum_validation():
    with pytest.raises(ValueError):
        # zeta^n does not match the declared central value
        SSCDatum(5, 2, RootOfUnity(1, 4), omega_at_pi=RootOfUnity(1, 3))
    with pytest.raises(ValueError):
        SSCDatum(9, 3, RootOfUnity(1, 9))  # p divides n
    with pytest.raises(ValueError):
        SSCDatum(5, 1, RootOfUnity.one())
    with pytest.raises(ValueError):
        SSCDatum(5, 2, RootOfUnity(1, 4), omega_at_pi=RootOfUnity.minus_one(), pi_unit=0)


def test_omega_value_at_pi():
    d = make_datum(q=7, n=3, zeta_num=2, pi_unit=4, omega_exp=3)
    assert d.omega(d.pi_elem()) == d.omega_at_pi
    # tame exponent shows up on units
    ff = d.F.residue
    c = 3
    assert d.omega(d.F.scalar(c)) == RootOfUnity(3 * ff.dlog(c), 6)


def test_affine_generic_on_elementary_one_units():
    # chi reads each simple affine residue once
    for q, n, u0 in [(5, 2, 3), (7, 3, 2), (3, 4, 2)]:
        d = make_datum(q=q, n=n, zeta_num=1, pi_unit=u0)
        F, ff = d.F, d.F.residue
        for i in range(n - 1):
            for c in range(q):
                k = upper_unipotent(F, n, {(i, i + 1): F.scalar(c)})
                assert d.affine_generic(k) == d.psi.of_residue(c)
        # bottom-left corner reads the coefficient of t divided by pi_unit
        for c in range(1, q):
            rows = [[F.one() if a == b else F.zero() for b in range(n)] for a in range(n)]
            rows[n - 1][0] = F.elem(1, (c,))
            k = MatG(F, rows)
            assert k.in_pro_unipotent_iwahori()
            expect = d.psi.of_residue(ff.mul(c, ff.inv(u0)))
            assert d.affine_generic(k) == expect


def test_affine_generic_is_a_character():
    rng = random.Random(42)
    d = make_datum(q=5, n=3, zeta_num=2, pi_unit=2)
    for _ in range(12):
        a = random_iplus(rng, d.F, 3)
        b = random_iplus(rng, d.F, 3)
        assert d.affine_generic(a * b) == d.affine_generic(a) * d.affine_generic(b)


def test_whittaker_at_identity_is_one():
    for q, n in [(3, 2), (5, 3), (7, 4)]:
        d = make_datum(q=q, n=n, zeta_num=1, pi_unit=1)
        assert d.whittaker(MatG.identity(d.F, n)) == CycloNumber.one()


def test_whittaker_on_built_support_elements():
    # g = rotation^r * (s t^e) * k evaluates to zeta^r omega(s t^e) chi(k),
    # with every factor assembled as an honest matrix product first
    rng = random.Random(777)
    for q, n, u0, znum, oexp in [(5, 2, 3, 1, 2), (7, 3, 2, 4, 1), (3, 4, 2, 3, 0)]:
        d = make_datum(q=q, n=n, zeta_num=znum, pi_unit=u0, omega_exp=oexp)
        F = d.F
        for _ in range(8):
            r = rng.randrange(2 * n)
            s = rng.randrange(1, q)
            e = rng.randrange(-2, 3)
            k = random_iplus(rng, F, n)
            z = F.elem(e, (s,))
            rot_r = d.rotation_class(r).as_matrix()
            g = rot_r * MatG.identity(F, n).scale(z) * k
            expect = (d.zeta**r * d.omega(z) * d.affine_generic(k)).as_cyclo()
            assert d.whittaker(g) == expect


def test_whittaker_left_unipotent_equivariance():
    rng = random.Random(888)
    d = make_datum(q=5, n=3, zeta_num=7, pi_unit=2, omega_exp=1)
    F = d.F
    for _ in range(8):
        r = rng.randrange(3)
        k = random_iplus(rng, F, 3)
        g = d.rotation_class(r).as_matrix() * k
        u = random_unipotent(rng, F, 3)
        assert d.whittaker(u * g) == d.psi_u(u).as_cyclo() * d.whittaker(g)


def test_whittaker_vanishes_off_support():
    d = make_datum(q=5, n=2, zeta_num=1, pi_unit=3)
    F = d.F
    t = F.variable()
    g = MatG(F, [[t, F.zero()], [F.zero(), F.one()]])
    assert d.whittaker(g) == CycloNumber.zero()

    d3 = make_datum(q=5, n=3, zeta_num=1, pi_unit=1)
    F = d3.F
    rows = [
        [F.zero(), F.one(), F.zero()],
        [F.one(), F.zero(), F.zero()],
        [F.zero(), F.zero(), F.one()],
    ]
    assert d3.whittaker(MatG(F, rows)) == CycloNumber.zero()


def test_whittaker_central_twist():
    # multiplying by a central s t^e multiplies the value by omega(s t^e)
    rng = random.Random(999)
    d = make_datum(q=7, n=2, zeta_num=3, pi_unit=5, omega_exp=4)
    F = d.F
    for _ in range(6):
        k = random_iplus(rng, F, 2)
        g = d.rotation_class(1).as_matrix() * k
        s = rng.randrange(1, 7)
        e = rng.randrange(-1, 2)
        z = F.elem(e, (s,))
        assert d.whittaker(MatG.identity(F, 2).scale(z) * g) == (
            d.omega(z).as_cyclo() * d.whittaker(g)
        )


def test_rotation_power_consistency():
    # zeta^n = omega(pi) makes the two readings of rotation^n agree
    d = make_datum(q=5, n=4, zeta_num=3, pi_unit=2, omega_exp=2)
    g = d.rotation_class(4).as_matrix()
    # as rotation^4 with r = 4: not reduced; the matcher reads r = 0, z = pi
    assert d.whittaker(g) == d.omega(d.pi_elem()).as_cyclo()
    assert d.whittaker(g) == (d.zeta**4).as_cyclo()
