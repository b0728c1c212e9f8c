"""Galois-side parameter data: discriminant character, Gauss sums, epsilon."""

import random
from fractions import Fraction

import pytest

from llclab.characters import AdditiveCharPsi, TameChar
from llclab.cyclotomic import CycloNumber, RootOfUnity
from llclab.errors import ZeroInput
from llclab.galois import (
    DetCharacter,
    ParameterDatum,
    build_parameter,
    det_parameter,
    disc_unit_residue,
    epsilon_galois,
    gauss_sum_bruteforce,
    kappa_char,
    kappa_eval,
)
from llclab.laurent import LocalField
from llclab.monomials import EpsMonomial, LambdaGraded
from llclab.supercuspidal import SSCDatum
from llclab.zeta import closed_form_epsilon


def _datum(q, n, zeta_num=0, omega_exp=0, u0=1):
    zeta = RootOfUnity(zeta_num, n * n)
    return SSCDatum(q, n, zeta, omega_exp=omega_exp, omega_at_pi=zeta**n, pi_unit=u0)


# ----- quadratic discriminant character ----------------------------------


def _conic_solvable(F, a, b):
    """Decides whether a x^2 + b y^2 = z^2 has a nonzero solution.

    A solution scales so its lowest-valuation coordinate is exactly 1.
    With val(a), val(b) in {0, 1} the derivative of the form at a pinned
    unit coordinate has valuation at most 1, so by Newton lifting the
    congruence modulo p^3 decides the equation exactly; the search runs
    over digit vectors modulo p^3 with each coordinate pinned in turn.
    """
    reps = F.integer_reps(0, 3)
    one = F.one()
    for pinned in range(3):
        for s1 in reps:
            for s2 in reps:
                x, y, z = [(one, s1, s2), (s1, one, s2), (s1, s2, one)][pinned]
                e = a * x * x + b * y * y - z * z
                if e.truncate(3).is_zero_at_prec():
                    return True
    return False


def _symbol_product_form(ff, va, ra, vb, rb):
    """(-1)^(v(a)v(b)(q-1)/2) chi2(ra)^v(b) chi2(rb)^v(a), chi2 the residue
    square character.  Independent of the packaged single-chi2 form."""
    s = 1
    if (va * vb) % 2 and not ff.is_square(ff.minus_one()):
        s = -s
    if vb % 2 and not ff.is_square(ra):
        s = -s
    if va % 2 and not ff.is_square(rb):
        s = -s
    return s


def test_symbol_formula_against_conic_oracle():
    # exhaustive over square classes at q = 3: the symbol is +1 exactly
    # when the corresponding conic has a point
    F = LocalField.base_field(3)
    ff = F.residue
    g = next(u for u in ff.units() if not ff.is_square(u))
    classes = [(0, 1), (0, g), (1, 1), (1, g)]
    for va, ra in classes:
        for vb, rb in classes:
            a = F.elem(va, (ra,))
            b = F.elem(vb, (rb,))
            want = 1 if _conic_solvable(F, a, b) else -1
            assert _symbol_product_form(ff, va, ra, vb, rb) == want


def test_kappa_matches_product_form_symbol():
    for q, n, u0 in [(3, 2, 2), (5, 3, 3), (7, 4, 2), (9, 2, 5)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        ff = F.residue
        du = disc_unit_residue(E)
        rng = random.Random(5)
        for _ in range(40):
            v = rng.randrange(-3, 4)
            r = rng.randrange(1, q)
            x = F.elem(v, (r,) + tuple(rng.randrange(q) for _ in range(2)))
            assert kappa_eval(E, x) == _symbol_product_form(ff, v, r, n - 1, du)


def test_kappa_kills_squares_and_multiplies():
    F = LocalField.base_field(7)
    E = F.extension(2, 3)
    rng = random.Random(9)
    for _ in range(30):
        x = F.elem(rng.randrange(-2, 3), (rng.randrange(1, 7), rng.randrange(7)))
        y = F.elem(rng.randrange(-2, 3), (rng.randrange(1, 7), rng.randrange(7)))
        assert kappa_eval(E, x * x) == 1
        assert kappa_eval(E, x) * kappa_eval(E, y) == kappa_eval(E, x * y)
    with pytest.raises(ZeroInput):
        kappa_eval(E, F.zero())


def test_kappa_on_units_by_parity_of_degree():
    # odd degree leaves the units alone; even degree sees the square class
    for q, n, u0 in [(5, 3, 2), (7, 5, 1), (5, 2, 1), (3, 4, 2)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        ff = F.residue
        for a in ff.units():
            got = kappa_eval(E, F.scalar(a))
            if n % 2 == 1:
                assert got == 1
            else:
                assert got == (1 if ff.is_square(a) else -1)


def test_kappa_char_packaging():
    for q, n, u0 in [(3, 2, 2), (5, 4, 2), (7, 3, 4), (9, 4, 3)]:
        F = LocalField.base_field(q)
        E = F.extension(n, u0)
        kappa = kappa_char(E)
        assert kappa.exp_unit in (0, (q - 1) // 2)
        assert (2 * kappa.exp_unit) % (q - 1) == 0 and (kappa.at_var**2).is_one()
        rng = random.Random(11)
        for _ in range(25):
            x = F.elem(rng.randrange(-2, 3), (rng.randrange(1, q), rng.randrange(q)))
            want = kappa_eval(E, x)
            got = kappa(x)
            assert got.is_one() == (want == 1)


# ----- the induced character datum ---------------------------------------


def test_parameter_datum_invariants():
    for q, n, znum, e_om, u0 in [(5, 2, 1, 1, 2), (7, 3, 2, 4, 3), (3, 4, 3, 1, 2)]:
        d = _datum(q, n, znum, e_om, u0)
        P = build_parameter(d)
        E = P.efield
        assert P.xi(E.variable()) == LambdaGraded.lambda_power(-1, d.zeta)
        ff = d.F.residue
        for a in ff.units():
            want = d.omega.of_unit(a) * P.kappa.of_unit(a).inverse()
            assert P.xi.of_unit_part(a, 0) == want


def test_build_parameter_reference_case():
    d = _datum(5, 2, zeta_num=0)
    P = build_parameter(d)
    assert P.xi.at_pi == LambdaGraded.lambda_power(-1)
    assert P.xi.exp_unit == (-P.kappa.exp_unit) % 4


def test_xi_at_embedded_uniformizer():
    for q, n, znum, e_om, u0 in [(5, 2, 3, 2, 1), (7, 3, 4, 1, 2), (5, 4, 5, 3, 3)]:
        d = _datum(q, n, znum, e_om, u0)
        P = build_parameter(d)
        emb = P.efield.from_base(d.pi_elem())
        want = LambdaGraded.lambda_power(-n, d.omega(d.pi_elem()))
        assert P.xi(emb) == want


def test_xi_wild_part():
    for q, n in [(5, 3), (7, 2), (9, 4)]:
        d = _datum(q, n, zeta_num=1)
        P = build_parameter(d)
        E, ff = P.efield, d.F.residue
        psi = AdditiveCharPsi(d.F)
        got = P.xi(E.elem(0, (1, 1)))
        assert got == LambdaGraded.from_cyclo(psi.of_residue(ff.scalar(n)))


# ----- Gauss sums --------------------------------------------------------


def test_gauss_sum_twenty_term_oracle():
    # direct 20-term sum for q = 5, n = 3, trivial central data, using the
    # closed trace value Tr(u^-1 a0(1 + c1 u)) = 3 a0 c1 rather than the
    # series engine
    d = _datum(5, 3, zeta_num=0)
    P = build_parameter(d)
    assert P.xi.exp_unit == 0
    ff = d.F.residue
    psi = AdditiveCharPsi(d.F)
    oracle = LambdaGraded.zero()
    for a0 in ff.units():
        for c1 in range(5):
            inv_unit = psi.of_residue(ff.scalar_mul(-3, c1))
            tr = psi.of_residue(ff.scalar_mul(3, ff.mul(a0, c1)))
            oracle = oracle + P.xi.at_pi * (inv_unit * tr)
    assert oracle == LambdaGraded.lambda_power(-1, 5)
    assert gauss_sum_bruteforce(P.xi) == oracle


def test_gauss_sum_closed_formula_on_grid():
    # the brute-force sum reproduces xi(pi_E) * q for every datum tried
    cases = [
        (3, 2, 2, 1, 1),
        (5, 2, 1, 3, 2),
        (5, 3, 2, 0, 4),
        (7, 3, 3, 2, 1),
        (9, 2, 7, 4, 3),
        (5, 4, 1, 1, 7),
        (11, 5, 2, 3, 2),
    ]
    for q, n, u0, e_om, znum in cases:
        d = _datum(q, n, znum, e_om, u0)
        P = build_parameter(d)
        assert gauss_sum_bruteforce(P.xi) == P.xi.at_pi * q


def test_gauss_sum_deeper_depth_scales():
    d = _datum(5, 2, zeta_num=1, u0=2)
    P = build_parameter(d)
    assert gauss_sum_bruteforce(P.xi, m=3) == gauss_sum_bruteforce(P.xi) * 5


def test_inner_sum_vanishing():
    # for fixed a0 != 1 the a1-sum of psi(-n a1/a0) psi(n a1) cancels
    for q, n in [(3, 2), (5, 3), (9, 2), (7, 5)]:
        ff = LocalField.base_field(q).residue
        psi = AdditiveCharPsi(LocalField.base_field(q))
        for a0 in ff.units():
            if a0 == 1:
                continue
            s = CycloNumber.zero()
            for a1 in range(q):
                c = psi.of_residue(
                    ff.scalar_mul(-n, ff.mul(a1, ff.inv(a0)))
                ) * psi.of_residue(ff.scalar_mul(n, a1))
                s = s + c.as_cyclo()
            assert s.is_zero()


def test_gauss_sum_twist_ratio():
    cases = [
        (5, 2, 1, 1, 2, (1, 1)),
        (7, 3, 2, 0, 3, (2, 5)),
        (5, 4, 3, 2, 2, (1, 3)),
        (9, 2, 5, 3, 4, (3, 2)),
    ]
    for q, n, znum, e_om, u0, (e, av) in cases:
        d = _datum(q, n, znum, e_om, u0)
        P = build_parameter(d)
        lam = TameChar(d.F, e, RootOfUnity(av, q - 1))
        base = gauss_sum_bruteforce(P.xi)
        tw = gauss_sum_bruteforce(P.xi.twist_by_base(lam))
        ff = d.F.residue
        signed_pi = d.F.elem(1, (u0 if (n - 1) % 2 == 0 else ff.neg(u0),))
        assert tw == base * lam(signed_pi)


# ----- epsilon and determinant -------------------------------------------


def test_epsilon_galois_untwisted():
    for q, n, znum, u0 in [(5, 2, 1, 1), (7, 3, 5, 2), (3, 4, 7, 2)]:
        d = _datum(q, n, znum, omega_exp=1, u0=u0)
        P = build_parameter(d)
        got = epsilon_galois(P, TameChar.trivial(d.F))
        assert got == EpsMonomial(q, LambdaGraded.from_cyclo(d.zeta), Fraction(1, 2), -1)
        assert got.unit.is_lambda_free()


def test_epsilon_galois_matches_closed_form():
    cases = [
        (5, 2, 1, 1, 2, (1, 1)),
        (7, 3, 2, 4, 3, (2, 5)),
        (5, 4, 3, 0, 2, (3, 1)),
        (9, 2, 5, 6, 7, (5, 3)),
        (11, 5, 7, 2, 2, (1, 4)),
    ]
    for q, n, znum, e_om, u0, (e, av) in cases:
        d = _datum(q, n, znum, e_om, u0)
        P = build_parameter(d)
        lam = TameChar(d.F, e, RootOfUnity(av, q - 1))
        got = epsilon_galois(P, lam)
        assert got == closed_form_epsilon(d, lam)
        assert got.unit.is_lambda_free()


def test_det_parameter_reduced_is_central_character():
    for q, n, znum, e_om, u0 in [(5, 2, 1, 2, 2), (7, 3, 4, 3, 1), (3, 4, 5, 1, 2)]:
        d = _datum(q, n, znum, e_om, u0)
        det = det_parameter(build_parameter(d, "reduced"))
        assert det.exp_unit == d.omega_exp % (q - 1)
        assert det.at_pi == LambdaGraded.from_cyclo(d.omega(d.pi_elem()))
        ff = d.F.residue
        for a in ff.units():
            assert det.of_unit(a) == d.omega.of_unit(a)
        x = d.F.elem(-2, (2, 1, 2))
        assert det(x) == LambdaGraded.from_cyclo(d.omega(x))


def test_det_parameter_formal_keeps_lambda():
    d = _datum(5, 2, zeta_num=1, omega_exp=2, u0=2)
    P = build_parameter(d)
    det = det_parameter(P)
    kp = P.kappa(d.pi_elem())
    want = LambdaGraded.lambda_power(-2, d.omega(d.pi_elem()) * kp)
    assert det.at_pi == want
