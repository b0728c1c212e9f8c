"""Characters of the base field and its ramified extension.

Three kinds appear in the epsilon-factor computations:

* the fixed additive character, trivial on the maximal ideal and read off
  the constant coefficient through the absolute residue trace;
* tame multiplicative characters of the base field, determined by a unit
  exponent against the residue generator and a value at t;
* the depth-one multiplicative characters of the extension whose wild
  part is prescribed by the additive character composed with the trace
  against u^-1, and whose value at the uniformizer u is kept as a formal
  Lambda-graded unit.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import RootOfUnity
from .errors import ZeroInput
from .laurent import LaurentElem, LocalField
from .monomials import LambdaGraded


@lru_cache(maxsize=None)
def _norm_of_variable(efield: LocalField) -> LaurentElem:
    return efield.norm_to_base(efield.variable())


class AdditiveCharPsi:
    """x -> exp(2*pi*i * Tr(c_0(x)) / p), conductor the ring of integers."""

    def __init__(self, field: LocalField):
        if field.base is not None:
            raise ValueError("the additive character lives on the base field")
        self.field = field

    def of_residue(self, c: int) -> RootOfUnity:
        ff = self.field.residue
        return RootOfUnity(ff.trace(c), ff.p)

    def __call__(self, x: LaurentElem) -> RootOfUnity:
        if x.field is not self.field:
            raise TypeError("argument does not live on the base field")
        return self.of_residue(x.coeff_at(0))

    def on_extension(self, x: LaurentElem) -> RootOfUnity:
        """Composition with the trace from the extension."""
        return self(x.field.trace_to_base(x))


class TameChar:
    """Depth-zero character of the base field units extended by a chosen
    value at t.

    On a unit with leading coefficient c the value is
    zeta_{q-1}^(exp_unit * dlog c); one-units of positive depth are in the
    kernel by construction.
    """

    __slots__ = ("field", "exp_unit", "at_var")

    def __init__(self, field: LocalField, exp_unit: int, at_var: RootOfUnity | None = None):
        if field.base is not None:
            raise ValueError("tame characters here live on the base field")
        self.field = field
        self.exp_unit = exp_unit % (field.residue.q - 1)
        self.at_var = at_var if at_var is not None else RootOfUnity.one()

    @classmethod
    def trivial(cls, field: LocalField) -> TameChar:
        return cls(field, 0)

    def is_trivial(self) -> bool:
        return self.exp_unit == 0 and self.at_var.is_one()

    def of_unit(self, c: int) -> RootOfUnity:
        ff = self.field.residue
        if c == 0:
            raise ZeroInput("multiplicative character of zero")
        return RootOfUnity(self.exp_unit * ff.dlog(c), ff.q - 1)

    def __call__(self, x: LaurentElem) -> RootOfUnity:
        if x.field is not self.field:
            raise TypeError("argument does not live on the base field")
        v, c = x.leading()
        return self.at_var**v * self.of_unit(c)

    def at_minus_one(self) -> RootOfUnity:
        return self.of_unit(self.field.residue.minus_one())

    def __mul__(self, other: TameChar) -> TameChar:
        if other.field is not self.field:
            raise TypeError("characters of different fields")
        return TameChar(self.field, self.exp_unit + other.exp_unit, self.at_var * other.at_var)

    def inverse(self) -> TameChar:
        return TameChar(self.field, -self.exp_unit, self.at_var.inverse())

    def __pow__(self, k: int) -> TameChar:
        return TameChar(self.field, self.exp_unit * k, self.at_var**k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TameChar):
            return NotImplemented
        return (
            self.field is other.field
            and self.exp_unit == other.exp_unit
            and self.at_var == other.at_var
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"TameChar(exp_unit={self.exp_unit}, at_t={self.at_var})"


class LevelOneCharE:
    """Depth-one character of the extension field units times u^Z.

    The value at x = u^v * a0 * (1 + c1*u + ...) is

        at_pi^v * zeta_{q-1}^(exp_unit * dlog a0) * psi(n * c1),

    the wild factor being psi(Tr(u^-1 * (x_unit - 1))) made explicit: the
    trace of u^-1 * c1*u is n*c1 and every deeper digit traces into the
    maximal ideal.  Values are Lambda-graded because at_pi may carry a
    formal power of the Langlands constant.
    """

    __slots__ = ("efield", "at_pi", "exp_unit", "psi")

    def __init__(self, efield: LocalField, at_pi: LambdaGraded, exp_unit: int):
        if efield.base is None:
            raise ValueError("depth-one characters here live on the extension")
        self.efield = efield
        self.at_pi = at_pi
        self.exp_unit = exp_unit % (efield.residue.q - 1)
        self.psi = AdditiveCharPsi(efield.base)

    def __call__(self, x: LaurentElem) -> LambdaGraded:
        if x.field is not self.efield:
            raise TypeError("argument does not live on the extension")
        ff = self.efield.residue
        n = self.efield.degree
        v, a0 = x.leading()
        a1 = x.coeff_at(v + 1)
        c1 = ff.mul(a1, ff.inv(a0))
        unit_val = self.psi.of_residue(ff.scalar_mul(n, c1)) * RootOfUnity(
            self.exp_unit * ff.dlog(a0), ff.q - 1
        )
        return self.at_pi**v * unit_val

    def of_unit_part(self, a0: int, c1: int) -> RootOfUnity:
        """Value on a0 * (1 + c1*u + higher), bypassing series packaging."""
        ff = self.efield.residue
        n = self.efield.degree
        return self.psi.of_residue(ff.scalar_mul(n, c1)) * RootOfUnity(
            self.exp_unit * ff.dlog(a0), ff.q - 1
        )

    def twist_by_base(self, lam: TameChar) -> LevelOneCharE:
        """Multiply by lam composed with the norm down to the base field."""
        if lam.field is not self.efield.base:
            raise TypeError("twisting character must live on the base field")
        norm_u = _norm_of_variable(self.efield)
        at_pi = self.at_pi * lam(norm_u)
        exp_unit = self.exp_unit + self.efield.degree * lam.exp_unit
        return LevelOneCharE(self.efield, at_pi, exp_unit)

    def __repr__(self) -> str:
        return f"LevelOneCharE(exp_unit={self.exp_unit}, at_pi={self.at_pi.terms})"
