"""Simple supercuspidal data and the explicit Whittaker function.

A datum fixes the residue size q, the matrix size n (prime to the
residue characteristic), a uniformizer pi = pi_unit * t, a tame central
character omega, and a choice zeta of n-th root of omega(pi).  Out of it
come the affine generic character of the pro-unipotent Iwahori, its
extension to the group generated by the affine rotation, the center and
the Iwahori, and the Whittaker function supported on U times that group.
"""

from __future__ import annotations

from .bruhat import MonomialClass, decompose
from .characters import AdditiveCharPsi, TameChar
from .cyclotomic import CycloNumber, RootOfUnity
from .laurent import LocalField
from .matrices import MatG


class SSCDatum:
    """Everything needed to evaluate one simple supercuspidal Whittaker
    function exactly."""

    def __init__(
        self,
        q: int,
        n: int,
        zeta: RootOfUnity,
        omega_exp: int = 0,
        omega_at_pi: RootOfUnity | None = None,
        pi_unit: int = 1,
    ):
        if n < 2:
            raise ValueError("matrix size must be at least 2")
        self.q = q
        self.n = n
        self.F = LocalField.base_field(q)
        ff = self.F.residue
        if n % ff.p == 0:
            raise ValueError("residue characteristic must not divide n")
        if not 1 <= pi_unit < q:
            raise ValueError("pi_unit must be a nonzero residue")
        self.pi_unit = pi_unit
        self.zeta = zeta
        omega_at_pi = omega_at_pi if omega_at_pi is not None else RootOfUnity.one()
        if zeta**n != omega_at_pi:
            raise ValueError("zeta must be an n-th root of the central value at pi")
        self.omega_exp = omega_exp % (q - 1)
        self.omega_at_pi = omega_at_pi
        # omega as a tame character: value at t adjusted so that the value
        # at pi = pi_unit * t is the prescribed one
        at_t = omega_at_pi * RootOfUnity(-self.omega_exp * ff.dlog(pi_unit), q - 1)
        self.omega = TameChar(self.F, self.omega_exp, at_t)
        self.psi = AdditiveCharPsi(self.F)

    # ----- basic objects -------------------------------------------------
    def pi_elem(self):
        return self.F.elem(1, (self.pi_unit,))

    def extension_field(self) -> LocalField:
        return self.F.extension(self.n, self.pi_unit)

    def rotation_class(self, r: int = 1) -> MonomialClass:
        return MonomialClass.rotation(self.F, self.n, self.pi_unit) ** r

    def rotation_matrix(self) -> MatG:
        return self.rotation_class().as_matrix()

    # ----- characters ----------------------------------------------------
    def affine_generic(self, k: MatG) -> RootOfUnity:
        """psi of the sum of the n affine simple residues of k in I+."""
        ff = self.F.residue
        total = 0
        for r in k.superdiagonal_residues():
            total = ff.add(total, r)
        corner = k.entry(self.n - 1, 0).coeff_at(1)
        total = ff.add(total, ff.mul(corner, ff.inv(self.pi_unit)))
        return self.psi.of_residue(total)

    def extended_char(self, r: int, s: int, d: int, k: MatG) -> RootOfUnity:
        """Value at rotation^r * (s t^d) * k of the extension by zeta."""
        z = self.F.elem(d, (s,))
        return self.zeta**r * self.omega(z) * self.affine_generic(k)

    # ----- the Whittaker function ----------------------------------------
    def psi_u(self, u: MatG) -> RootOfUnity:
        """The generic character of the upper unipotent group."""
        ff = self.F.residue
        total = 0
        for i in range(self.n - 1):
            total = ff.add(total, u.entry(i, i + 1).coeff_at(0))
        return self.psi.of_residue(total)

    def whittaker_root(self, g: MatG, prec: int | None = None) -> RootOfUnity | None:
        """The Whittaker value as a root of unity, or None off the support."""
        u, mono, k = decompose(g, prec)
        hit = mono.match_rotation_times_central(self.pi_unit)
        if hit is None:
            return None
        r, s, d = hit
        return self.psi_u(u) * self.extended_char(r, s, d, k)

    def whittaker(self, g: MatG, prec: int | None = None) -> CycloNumber:
        w = self.whittaker_root(g, prec)
        return CycloNumber.zero() if w is None else w.as_cyclo()

    def __repr__(self) -> str:
        return (
            f"SSCDatum(q={self.q}, n={self.n}, zeta={self.zeta}, "
            f"omega_exp={self.omega_exp}, omega_at_pi={self.omega_at_pi}, "
            f"pi_unit={self.pi_unit})"
        )
