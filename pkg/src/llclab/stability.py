"""Constructive stability and instability certificates for the graded
pieces attached to points of the building.

Nothing here computes an orbit closure.  Each certificate packages the
finite checks that the corresponding existence or nonexistence argument
reduces to, and each has an independent verifier:

* StableExists: the all-ones functional on the alcove quiver, with its
  stabilizer counted exhaustively over F_q and over F_{q^2}.  Equal
  counts q-1 and q^2-1 are the finiteness evidence modulo scalars; a
  positive-dimensional stabilizer would grow with the field.
* NoStableDimGap: a positive gap dim G - dim V forces every closed-orbit
  stabilizer to dimension at least 2, one more than the scalars.
* NoStableJordanWitness: for equal blocks of size m > 1, two functionals
  whose arrow products share a determinant but have different Jordan
  type; both products are nilpotent, so the rank profile of their powers
  separates the types over any extension field.
* UnstableCocharacter: integer torus weights strictly decreasing along
  the quiver cycle opened at a missing arrow; every present arrow then
  scales with a positive exponent, driving any functional to zero.
* KernelIsScalars: the stabilizer equations of the identity-block probe
  matrices solved exactly over F_q (solution dimension one), confirmed
  by guarded brute force over the finite group.  Row reduction is
  defined over the prime field, so the dimension count persists over
  extensions.
"""

from __future__ import annotations

import itertools
import random

from .building import (
    ApartmentPoint,
    FacetSpec,
    GradedQuotient,
    graded_quotient,
    is_barycenter,
    r_of_x,
)
from .errors import EmptyFacet, NotNonBarycenter, SizeGuardExceeded
from .finitefield import field_of_size

BRUTE_FORCE_GUARD = 500_000


# ----- small exact matrices over a finite field --------------------------

def _identity(m):
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def _zero(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def _jordan_block(m):
    return tuple(tuple(1 if j == i + 1 else 0 for j in range(m)) for i in range(m))


def _mmul(ff, A, B):
    cols = len(B[0])
    inner = len(B)
    return tuple(
        tuple(
            _dot(ff, row, B, c, inner)
            for c in range(cols)
        )
        for row in A
    )


def _dot(ff, row, B, c, inner):
    acc = 0
    for j in range(inner):
        acc = ff.add(acc, ff.mul(row[j], B[j][c]))
    return acc


def _rank(ff, rows):
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = ff.inv(mat[rank][col])
        mat[rank] = [ff.mul(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                c0 = mat[r][col]
                mat[r] = [ff.sub(v, ff.mul(c0, w)) for v, w in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def _det(ff, A):
    mat = [list(r) for r in A]
    m = len(mat)
    det = 1
    for col in range(m):
        pivot = next((r for r in range(col, m) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = ff.neg(det)
        det = ff.mul(det, mat[col][col])
        inv = ff.inv(mat[col][col])
        for r in range(col + 1, m):
            if mat[r][col] != 0:
                c0 = ff.mul(mat[r][col], inv)
                mat[r] = [ff.sub(v, ff.mul(c0, w)) for v, w in zip(mat[r], mat[col])]
    return det


def _rank_profile(ff, A):
    """Ranks of A, A^2, ..., A^m for an m x m matrix."""
    m = len(A)
    out = []
    P = A
    for _ in range(m):
        out.append(_rank(ff, P))
        P = _mmul(ff, P, A)
    return tuple(out)


# ----- functionals -------------------------------------------------------

class FunctionalOverFq:
    """A point of the graded dual over F_q: one matrix per present arrow."""

    __slots__ = ("gq", "q", "mats")

    def __init__(self, gq: GradedQuotient, q: int, mats: dict):
        ff = field_of_size(q)
        for arrow, M in mats.items():
            if arrow not in gq.arrows:
                raise ValueError(f"arrow {arrow} is not present at this point")
            rows, cols = gq.arrow_shape(arrow)
            if len(M) != rows or any(len(r) != cols for r in M):
                raise ValueError(f"matrix for arrow {arrow} must be {rows}x{cols}")
            for r in M:
                for v in r:
                    if not 0 <= v < ff.q:
                        raise ValueError("entries must be residue representatives")
        self.gq = gq
        self.q = q
        self.mats = {a: tuple(tuple(r) for r in m) for a, m in mats.items()}

    @classmethod
    def all_ones(cls, gq: GradedQuotient, q: int) -> FunctionalOverFq:
        return cls(gq, q, {a: tuple((1,) * gq.arrow_shape(a)[1] for _ in range(gq.arrow_shape(a)[0])) for a in gq.arrows})

    def arrow_matrix(self, arrow):
        rows, cols = self.gq.arrow_shape(arrow)
        return self.mats.get(arrow, _zero(rows, cols))

    def is_zero(self) -> bool:
        return all(all(v == 0 for r in M for v in r) for M in self.mats.values())


def enumerate_functionals(gq: GradedQuotient, q: int, cap: int = BRUTE_FORCE_GUARD):
    """Every functional over F_q, entry by entry; guarded by total count."""
    dim = gq.dim_v
    if q**dim > cap:
        raise SizeGuardExceeded(f"{q}^{dim} functionals exceed the guard {cap}")
    shapes = [(a, *gq.arrow_shape(a)) for a in gq.arrows]
    for entries in itertools.product(range(q), repeat=dim):
        mats = {}
        pos = 0
        for a, rows, cols in shapes:
            mats[a] = tuple(
                tuple(entries[pos + r * cols + c] for c in range(cols)) for r in range(rows)
            )
            pos += rows * cols
        yield FunctionalOverFq(gq, q, mats)


def basis_functionals(gq: GradedQuotient, q: int):
    """The coordinate functionals, one nonzero entry each."""
    for a in gq.arrows:
        rows, cols = gq.arrow_shape(a)
        for i in range(rows):
            for j in range(cols):
                E = tuple(
                    tuple(1 if (r, c) == (i, j) else 0 for c in range(cols))
                    for r in range(rows)
                )
                yield FunctionalOverFq(gq, q, {a: E})


def random_functionals(gq: GradedQuotient, q: int, count: int, seed: int):
    rng = random.Random(seed)
    shapes = [(a, *gq.arrow_shape(a)) for a in gq.arrows]
    for _ in range(count):
        mats = {}
        for a, rows, cols in shapes:
            mats[a] = tuple(
                tuple(rng.randrange(q) for _ in range(cols)) for _ in range(rows)
            )
        yield FunctionalOverFq(gq, q, mats)


# ----- certificate payloads ----------------------------------------------

class StableExists:
    kind = "stable-exists"

    def __init__(self, facet, q, functional, stab_count_q, stab_count_q2):
        self.facet = facet
        self.q = q
        self.functional = functional
        self.stab_count_q = stab_count_q
        self.stab_count_q2 = stab_count_q2

    def __repr__(self):
        return (
            f"StableExists({self.facet}, q={self.q}, "
            f"stab={self.stab_count_q}/{self.stab_count_q2})"
        )


class NoStableDimGap:
    kind = "no-stable-dim-gap"

    def __init__(self, facet, dim_g, dim_v):
        self.facet = facet
        self.dim_g = dim_g
        self.dim_v = dim_v

    @property
    def gap(self):
        return self.dim_g - self.dim_v

    def __repr__(self):
        return f"NoStableDimGap({self.facet}, gap={self.gap})"


class NoStableJordanWitness:
    kind = "no-stable-jordan"

    def __init__(self, facet, q, x_blocks, w_blocks):
        self.facet = facet
        self.q = q
        self.x_blocks = x_blocks
        self.w_blocks = w_blocks

    def __repr__(self):
        return f"NoStableJordanWitness({self.facet}, q={self.q})"


class UnstableCocharacter:
    kind = "unstable-cocharacter"

    def __init__(self, point, missing_arrow, weights):
        self.point = point
        self.missing_arrow = missing_arrow
        self.weights = weights

    def __repr__(self):
        return (
            f"UnstableCocharacter(missing={self.missing_arrow}, "
            f"b={self.weights})"
        )


class KernelIsScalars:
    kind = "kernel-is-scalars"

    def __init__(self, point, q, group_size, kernel_size, probe_nullity):
        self.point = point
        self.q = q
        self.group_size = group_size
        self.kernel_size = kernel_size
        self.probe_nullity = probe_nullity

    def __repr__(self):
        return (
            f"KernelIsScalars(q={self.q}, group={self.group_size}, "
            f"kernel={self.kernel_size})"
        )


# ----- stabilizer counting on the alcove torus ---------------------------

def _torus_stabilizer_count(q: int, functional_values) -> int:
    """Exhaustive count, with pruning, of torus elements fixing a scalar
    functional on the cyclic quiver with K one-dimensional nodes.

    The search assigns unit coordinates g_0, g_1, ... in order and cuts a
    branch as soon as some fully-assigned arrow condition
    g_a * v = v * g_b fails, which enumerates exactly the solutions of
    the full product search.
    """
    ff = field_of_size(q)
    K = len(functional_values)
    units = list(ff.units())

    def extend(assign):
        a = len(assign)
        if a == K:
            return 1
        total = 0
        for g in units:
            ok = True
            trial = assign + [g]
            for i, v in enumerate(functional_values):
                b = (i + 1) % K
                if i < len(trial) and b < len(trial) and v != 0:
                    if ff.mul(trial[i], v) != ff.mul(v, trial[b]):
                        ok = False
                        break
            if ok:
                total += extend(trial)
        return total

    return extend([])


# ----- kernel of the action ----------------------------------------------

def group_size(sizes, q: int) -> int:
    total = 1
    for m in sizes:
        gl = 1
        for i in range(m):
            gl *= q**m - q**i
        total *= gl
    return total


def probe_matrices(s1: int, s2: int):
    """Identity-block probes spanning enough of M_{s1 x s2} to pin both
    intertwiners to the same scalar: shifted identity blocks with the
    remainder corner, plus the coordinate matrices."""
    probes = []
    if s1 <= s2:
        for off in range(0, s2 - s1 + 1, s1):
            probes.append(
                tuple(tuple(1 if c == off + r else 0 for c in range(s2)) for r in range(s1))
            )
        r = s2 % s1
        if r:
            probes.append(
                tuple(
                    tuple(1 if (i < r and c == s2 - r + i) else 0 for c in range(s2))
                    for i in range(s1)
                )
            )
    else:
        probes.extend(tuple(zip(*p)) for p in probe_matrices(s2, s1))
    for i in range(s1):
        for j in range(s2):
            probes.append(tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(s2)) for r in range(s1)))
    return probes


def _probe_nullity(gq: GradedQuotient, q: int) -> int:
    """Dimension of the joint solution space of h_a P = P h_b over all
    arrows and probes.  Row reduction over F_q certifies the dimension
    over every extension since the system is defined over the residues."""
    ff = field_of_size(q)
    sizes = gq.sizes
    offsets = []
    pos = 0
    for m in sizes:
        offsets.append(pos)
        pos += m * m
    nvars = pos
    rows = []
    for (a, b) in gq.arrows:
        ma, mb = sizes[a], sizes[b]
        for P in probe_matrices(ma, mb):
            for r in range(ma):
                for c in range(mb):
                    row = [0] * nvars
                    for j in range(ma):
                        idx = offsets[a] + r * ma + j
                        row[idx] = ff.add(row[idx], P[j][c])
                    for j in range(mb):
                        idx = offsets[b] + j * mb + c
                        row[idx] = ff.sub(row[idx], P[r][j])
                    if any(row):
                        rows.append(row)
    return nvars - _rank(ff, rows)


def kernel_of_action(gq: GradedQuotient, q: int, guard: int = BRUTE_FORCE_GUARD) -> KernelIsScalars:
    """Certify that only global scalars act trivially on the graded piece.

    Runs the probe-matrix linear certificate, then confirms by brute
    force over G(F_q) within the guard.  Raises when the kernel is
    genuinely larger, which happens at points with missing arrows.
    """
    ff = field_of_size(q)
    sizes = gq.sizes
    nullity = _probe_nullity(gq, q)
    if nullity != 1:
        raise ValueError(f"kernel has dimension {nullity}, not scalars")
    raw = q ** sum(m * m for m in sizes)
    if raw > guard:
        raise SizeGuardExceeded(f"enumerating {raw} tuples exceeds the guard {guard}")
    bases = []
    for (a, b) in gq.arrows:
        ma, mb = gq.arrow_shape((a, b))
        for i in range(ma):
            for j in range(mb):
                E = tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(mb)) for r in range(ma))
                bases.append(((a, b), E))
    kernel = []
    all_mats = [
        [
            tuple(tuple(ent[r * m + c] for c in range(m)) for r in range(m))
            for ent in itertools.product(range(q), repeat=m * m)
        ]
        for m in sizes
    ]
    invertible = [[M for M in mats if _det(ff, M) != 0] for mats in all_mats]
    for combo in itertools.product(*invertible):
        trivial = True
        for (a, b), E in bases:
            # test h_a E == E h_b, avoiding inverses
            if _mmul(ff, combo[a], E) != _mmul(ff, E, combo[b]):
                trivial = False
                break
        if trivial:
            kernel.append(combo)
    for combo in kernel:
        c = combo[0][0][0]
        for M in combo:
            if M != tuple(tuple(c if i == j else 0 for j in range(len(M))) for i in range(len(M))):
                raise ValueError("brute force found a non-scalar kernel element")
    return KernelIsScalars(gq.point, q, group_size(sizes, q), len(kernel), nullity)


# ----- certificates for barycenters --------------------------------------

def stability_certificate(f: FacetSpec, q: int):
    """The paper trail for 'stable functionals exist here or they do not'."""
    if f.is_empty():
        raise EmptyFacet(f"{f} has no points")
    gq = graded_quotient(f.barycenter())
    if f.is_alcove():
        lam = FunctionalOverFq.all_ones(gq, q)
        values = [lam.arrow_matrix(a)[0][0] for a in gq.arrows]
        count_q = _torus_stabilizer_count(q, values)
        count_q2 = _torus_stabilizer_count(q * q, values)
        return StableExists(f, q, lam, count_q, count_q2)
    if gq.dim_g > gq.dim_v:
        return NoStableDimGap(f, gq.dim_g, gq.dim_v)
    sizes = gq.sizes
    m = sizes[0]
    if any(s != m for s in sizes) or m <= 1:
        raise ValueError(f"unexpected zero-gap block pattern {sizes}")
    K = gq.num_nodes
    x_blocks = tuple([_identity(m)] * (K - 1) + [_jordan_block(m)])
    w_blocks = tuple([_identity(m)] * (K - 1) + [_zero(m, m)])
    return NoStableJordanWitness(f, q, x_blocks, w_blocks)


def destabilizing_cocharacter(x: ApartmentPoint) -> UnstableCocharacter:
    """Integer torus weights contracting every functional at a
    nonbarycenter to zero."""
    if is_barycenter(x):
        raise NotNonBarycenter(f"{x} is a barycenter")
    gq = graded_quotient(x)
    K = gq.num_nodes
    a0 = gq.missing_arrows()[0][0]
    b = [0] * K
    if a0 == K - 1:
        for i in range(K):
            b[i] = K - 1 - i
    else:
        order = list(range(a0 + 1, K)) + list(range(0, a0 + 1))
        for idx, node in enumerate(order):
            b[node] = K - a0 - 1 - idx
    return UnstableCocharacter(x, (a0, (a0 + 1) % K), tuple(b))


# ----- verifiers ---------------------------------------------------------

def root_count_dims(x: ApartmentPoint) -> tuple[int, int]:
    """(dim G, dim V) by direct affine-root counting at the point: pairs
    with integral difference for grade zero plus the torus, pairs landing
    on r modulo 1 for grade r, the torus again when r is integral."""
    n = x.n
    r = r_of_x(x)
    g = sum(
        1
        for i in range(n)
        for j in range(n)
        if i != j and (x.coords[i] - x.coords[j]) % 1 == 0
    ) + n
    v = sum(
        1
        for i in range(n)
        for j in range(n)
        if i != j and (x.coords[i] - x.coords[j] - r) % 1 == 0
    )
    if r.denominator == 1:
        v += n
    return g, v


def verify_certificate(cert, recheck_brute_force: bool = True) -> bool:
    """Independent recheck of any certificate; returns True or raises."""
    if cert.kind == "stable-exists":
        f = cert.facet
        assert f.is_alcove(), "StableExists is only claimed on alcoves"
        gq = graded_quotient(f.barycenter())
        values = [cert.functional.arrow_matrix(a)[0][0] for a in gq.arrows]
        assert len(values) == f.n and all(v != 0 for v in values), "functional must be nonzero on every arrow"
        if recheck_brute_force:
            assert _torus_stabilizer_count(cert.q, values) == cert.stab_count_q
            assert _torus_stabilizer_count(cert.q * cert.q, values) == cert.stab_count_q2
        assert cert.stab_count_q == cert.q - 1, "stabilizer over F_q must be the scalars"
        assert cert.stab_count_q2 == cert.q * cert.q - 1, "stabilizer must not grow beyond scalars"
        return True
    if cert.kind == "no-stable-dim-gap":
        g, v = root_count_dims(cert.facet.barycenter())
        assert (g, v) == (cert.dim_g, cert.dim_v), "claimed dimensions are off"
        assert g - v > 0, "no gap, certificate invalid"
        assert cert.facet.dim_gap() == g - v
        return True
    if cert.kind == "no-stable-jordan":
        ff = field_of_size(cert.q)
        gq = graded_quotient(cert.facet.barycenter())
        sizes = gq.sizes
        m = sizes[0]
        assert gq.dim_g == gq.dim_v, "witness only applies at zero gap"
        assert all(s == m for s in sizes) and m > 1
        assert len(cert.x_blocks) == len(cert.w_blocks) == gq.num_nodes
        px = cert.x_blocks[0]
        pw = cert.w_blocks[0]
        for X in cert.x_blocks[1:]:
            px = _mmul(ff, px, X)
        for W in cert.w_blocks[1:]:
            pw = _mmul(ff, pw, W)
        assert _det(ff, px) == _det(ff, pw), "products must share the determinant"
        prof_x = _rank_profile(ff, px)
        prof_w = _rank_profile(ff, pw)
        assert prof_x[-1] == prof_w[-1] == 0, "witness products must be nilpotent"
        assert prof_x != prof_w, "products must have different Jordan type"
        return True
    if cert.kind == "unstable-cocharacter":
        x = cert.point
        assert not is_barycenter(x), "point must not be a barycenter"
        gq = graded_quotient(x)
        assert cert.missing_arrow in gq.missing_arrows(), "cited arrow is present"
        K = gq.num_nodes
        b = cert.weights
        for (a, bb) in gq.arrows:
            assert b[a] - b[bb] > 0, f"arrow {(a, bb)} does not contract"
        return True
    if cert.kind == "kernel-is-scalars":
        gq = graded_quotient(cert.point)
        assert _probe_nullity(gq, cert.q) == cert.probe_nullity == 1
        assert cert.kernel_size == cert.q - 1, "kernel must be exactly the scalars"
        assert cert.group_size == group_size(gq.sizes, cert.q)
        return True
    raise ValueError(f"unknown certificate kind {cert.kind}")


def contracts_functional(cert: UnstableCocharacter, lam: FunctionalOverFq) -> bool:
    """Whether the cocharacter limit kills this particular functional:
    every arrow the functional touches must scale with positive exponent."""
    b = cert.weights
    for (a, bb), M in lam.mats.items():
        if any(v != 0 for row in M for v in row) and b[a] - b[bb] <= 0:
            return False
    return True
