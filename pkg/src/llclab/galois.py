"""Predicted parameter data on the Galois side.

The candidate parameter for a given supercuspidal datum is induced from
a depth-one character of the totally ramified degree-n extension
E = F(pi_E), pi_E^n = pi.  This module assembles that character, the
quadratic discriminant character of E/F, brute-force Gauss sums over
unit cosets of E, and the resulting epsilon factor.

The constant attached to the induction step is never given a numeric
value; it enters as the formal unit Lambda, with the single optional
rewriting rule Lambda^n = kappa(pi) available in reduced mode.  Every
identity in scope holds at the level of Lambda-graded coefficients, and
the epsilon factor itself comes out Lambda-free.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .characters import AdditiveCharPsi, LevelOneCharE, TameChar
from .cyclotomic import CycloNumber, RootOfUnity
from .errors import ZeroInput
from .laurent import LaurentElem, LocalField
from .monomials import EpsMonomial, LambdaGraded
from .supercuspidal import SSCDatum


def disc_unit_residue(efield: LocalField) -> int:
    """Residue of the unit part of disc(x^n - pi) = (-1)^((n-1)(n-2)/2) n^n pi^(n-1)."""
    ff = efield.residue
    n = efield.degree
    out = ff.mul(ff.pow(ff.scalar(n), n), ff.pow(efield.pi_unit, n - 1))
    if ((n - 1) * (n - 2) // 2) % 2:
        out = ff.mul(out, ff.minus_one())
    return out


def kappa_eval(efield: LocalField, x: LaurentElem) -> int:
    """The quadratic character of E/F at x, through the tame symbol of x
    against the discriminant of x^n - pi.  Returns +1 or -1."""
    F = efield.base
    if F is None:
        raise ValueError("expected the extension field, not the base")
    if x.field is not F:
        raise TypeError("argument must live on the base field")
    if x.is_exact_zero():
        raise ZeroInput("quadratic character of zero")
    ff = F.residue
    a = x.valuation()
    b = efield.degree - 1
    # the tame symbol of (x, d) is the residue square class of
    # (-1)^(v(x)v(d)) * xbar^v(d) / dbar^v(x), both unit parts taken at t = 0
    res = ff.mul(ff.pow(x.leading()[1], b), ff.pow(disc_unit_residue(efield), -a))
    if (a * b) % 2:
        res = ff.mul(res, ff.minus_one())
    return 1 if ff.is_square(res) else -1


def kappa_char(efield: LocalField) -> TameChar:
    """kappa packaged as a tame character of the base field."""
    F = efield.base
    q = F.residue.q
    e = 0 if (efield.degree - 1) % 2 == 0 else (q - 1) // 2
    sign_t = kappa_eval(efield, F.variable())
    return TameChar(F, e, RootOfUnity(0 if sign_t == 1 else 1, 2))


class ParameterDatum:
    """Everything the Galois side needs: the ramified extension, its
    quadratic character, and the depth-one character being induced.

    lambda_mode selects whether powers of the formal induction constant
    are kept (formal) or folded through Lambda^n = kappa(pi) (reduced).
    """

    __slots__ = ("ssc", "efield", "kappa", "xi", "lambda_mode")

    def __init__(self, ssc: SSCDatum, lambda_mode: str = "formal"):
        if lambda_mode not in ("formal", "reduced"):
            raise ValueError(f"unknown lambda_mode {lambda_mode!r}")
        self.ssc = ssc
        self.efield = ssc.extension_field()
        self.kappa = kappa_char(self.efield)
        e_xi = (ssc.omega_exp - self.kappa.exp_unit) % (ssc.q - 1)
        self.xi = LevelOneCharE(self.efield, LambdaGraded.lambda_power(-1, ssc.zeta), e_xi)
        self.lambda_mode = lambda_mode

    def kappa_at_pi(self) -> int:
        return 1 if self.kappa(self.ssc.pi_elem()).is_one() else -1

    def __repr__(self) -> str:
        return (
            f"ParameterDatum(q={self.ssc.q}, n={self.ssc.n}, "
            f"zeta={self.ssc.zeta}, lambda_mode={self.lambda_mode})"
        )


def build_parameter(d: SSCDatum, lambda_mode: str = "formal") -> ParameterDatum:
    return ParameterDatum(d, lambda_mode)


@functools.lru_cache(maxsize=None)
def _gauss_inner(q: int, n: int, pi_unit: int, exp_unit: int, m: int) -> CycloNumber:
    """Sum of unitchar^-1(x) psi(Tr(x/pi_E)) over unit cosets of depth m.

    Every term of the full Gauss sum carries the same at_pi^-1 factor, so
    that factor is pulled out by the caller and the remaining sum depends
    only on the residue data, which is what this cache is keyed on.
    """
    E = LocalField.base_field(q).extension(n, pi_unit)
    unitchar = LevelOneCharE(E, LambdaGraded.one(), exp_unit)
    psi = AdditiveCharPsi(E.base)
    ff = E.residue
    total = CycloNumber.zero()
    for x in E.unit_reps(m):
        y = x.shift(-1)
        v, a0 = y.leading()
        c1 = ff.mul(y.coeff_at(v + 1), ff.inv(a0))
        term = unitchar.of_unit_part(a0, c1).inverse() * psi(E.trace_to_base(y))
        total = total + term.as_cyclo()
    return total.compact()


def gauss_sum_bruteforce(xi: LevelOneCharE, m: int = 2) -> LambdaGraded:
    """The exact sum of xi^-1(x/pi_E) psi(Tr(x/pi_E)) over units of E
    modulo depth-m one-units: q^(m-1)(q-1) cyclotomic terms."""
    E = xi.efield
    inner = _gauss_inner(E.residue.q, E.degree, E.pi_unit, xi.exp_unit, m)
    # xi(x/pi_E) = at_pi^-1 * unitchar(x) uniformly over the summation range
    return xi.at_pi * inner


def epsilon_galois(P: ParameterDatum, lam: TameChar) -> EpsMonomial:
    """Epsilon factor of the induced parameter twisted by lam.

    Induction contributes one factor of Lambda; the extension-level
    epsilon is (tau/q) q^(1/2-s) with tau the brute-force Gauss sum of
    xi twisted by lam through the norm.
    """
    tau = gauss_sum_bruteforce(P.xi.twist_by_base(lam))
    unit = LambdaGraded.lambda_power(1) * tau * Fraction(1, P.ssc.q)
    return EpsMonomial(P.ssc.q, unit, Fraction(1, 2), -1)


class DetCharacter:
    """Tame character of the base field whose value at the uniformizer may
    carry powers of Lambda."""

    __slots__ = ("field", "exp_unit", "at_pi", "pi_unit")

    def __init__(self, field: LocalField, exp_unit: int, at_pi: LambdaGraded, pi_unit: int):
        self.field = field
        self.exp_unit = exp_unit % (field.residue.q - 1)
        self.at_pi = at_pi
        self.pi_unit = pi_unit

    def of_unit(self, a: int) -> RootOfUnity:
        ff = self.field.residue
        return RootOfUnity(self.exp_unit * ff.dlog(a), ff.q - 1)

    def __call__(self, x: LaurentElem) -> LambdaGraded:
        ff = self.field.residue
        v, lead = x.leading()
        # unit part of x relative to the fixed uniformizer pi = pi_unit * t
        r = ff.mul(lead, ff.pow(self.pi_unit, -v))
        return self.at_pi**v * self.of_unit(r)

    def __repr__(self) -> str:
        return f"DetCharacter(exp_unit={self.exp_unit}, at_pi={self.at_pi!r})"


def det_parameter(P: ParameterDatum) -> DetCharacter:
    """Determinant of the induced parameter: the restriction of xi to the
    base field times kappa.  In reduced mode its value at pi is exactly
    the central character there."""
    d = P.ssc
    kp = P.kappa(d.pi_elem())
    at_pi = (P.xi.at_pi ** d.n) * kp
    if P.lambda_mode == "reduced":
        at_pi = at_pi.reduce_lambda(d.n, 1 if kp.is_one() else -1)
    e = P.xi.exp_unit + P.kappa.exp_unit
    return DetCharacter(d.F, e, at_pi, d.pi_unit)
