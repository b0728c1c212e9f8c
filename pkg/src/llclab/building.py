"""Facet combinatorics of the standard apartment and the graded quotients
attached to its points.

Conventions.  The closed fundamental alcove is cut out by

    x_1 >= x_2 >= ... >= x_n >= x_1 - 1,

and a facet is recorded by which of the n walls are equalities: the
composition m = (m_1..m_k) lists the sizes of the maximal runs of equal
coordinates, and the flag t says whether the wrap-around wall
x_n = x_1 - 1 is an equality too.  t = 1 with a single block is the
empty facet.  The first positive jump r(x) of the filtration at x is the
smallest positive value of alpha(x) + m over affine roots, with the
integer grades of the diagonal torus always contributing 1.

At a point the grade-zero group is a product of general linear groups,
one per class of coordinates that agree modulo 1 (an equality on the
wrap-around wall merges the outer two runs into one class), and the
grade-r piece is a cyclic quiver on those classes.  An arrow is present
exactly when the spacing to the next class equals r; for barycenters all
arrows are present, and a single class gives the full matrix algebra as
a loop, diagonal included.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import EmptyFacet


class FacetSpec:
    """A facet of the closed alcove: wall pattern (t, composition)."""

    __slots__ = ("t", "blocks")

    def __init__(self, t: int, blocks):
        blocks = tuple(int(m) for m in blocks)
        if t not in (0, 1):
            raise ValueError("t must be 0 or 1")
        if not blocks or any(m < 1 for m in blocks):
            raise ValueError("blocks must be positive")
        self.t = t
        self.blocks = blocks

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def is_empty(self) -> bool:
        return self.t == 1 and self.k == 1

    def is_alcove(self) -> bool:
        return self.t == 0 and all(m == 1 for m in self.blocks)

    def effective_blocks(self) -> tuple[int, ...]:
        """Class sizes after merging the outer runs when t = 1."""
        if self.is_empty():
            raise EmptyFacet(f"{self} has no points")
        if self.t == 0:
            return self.blocks
        m = self.blocks
        return (m[0] + m[-1],) + m[1:-1]

    def barycenter(self) -> ApartmentPoint:
        """The equal-spacing point of the facet, normalized so the block
        values are -i/k (t = 0) resp. -i/(k-1) (t = 1)."""
        if self.is_empty():
            raise EmptyFacet(f"{self} has no points")
        den = self.k if self.t == 0 else self.k - 1
        coords = []
        for i, m in enumerate(self.blocks, start=1):
            coords.extend([Fraction(-i, den)] * m)
        return ApartmentPoint(coords)

    def dim_gap(self) -> Fraction:
        """dim G - dim V at the barycenter, via the class-size differences."""
        sizes = self.effective_blocks()
        K = len(sizes)
        total = sum((sizes[a] - sizes[(a + 1) % K]) ** 2 for a in range(K))
        return Fraction(total, 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FacetSpec):
            return NotImplemented
        return self.t == other.t and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.t, self.blocks))

    def __repr__(self) -> str:
        return f"FacetSpec(t={self.t}, m={','.join(str(m) for m in self.blocks)})"

    @classmethod
    def parse(cls, text: str) -> FacetSpec:
        """Parse the CLI form "t=0;m=2,2"."""
        t = None
        blocks = None
        for part in text.replace(" ", "").split(";"):
            key, _, val = part.partition("=")
            if key == "t":
                t = int(val)
            elif key == "m":
                blocks = tuple(int(s) for s in val.split(","))
            else:
                raise ValueError(f"unknown facet field {key!r}")
        if t is None or blocks is None:
            raise ValueError("facet spec needs both t=... and m=...")
        return cls(t, blocks)


class ApartmentPoint:
    """A point of the standard apartment with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        if not self.coords:
            raise ValueError("need at least one coordinate")

    @property
    def n(self) -> int:
        return len(self.coords)

    def in_closed_alcove(self) -> bool:
        x = self.coords
        descending = all(x[i] >= x[i + 1] for i in range(len(x) - 1))
        return descending and x[-1] >= x[0] - 1

    def translate(self, a) -> ApartmentPoint:
        return ApartmentPoint([c + Fraction(a) for c in self.coords])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ApartmentPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"ApartmentPoint({', '.join(str(c) for c in self.coords)})"

    @classmethod
    def parse(cls, text: str) -> ApartmentPoint:
        return cls([Fraction(s) for s in text.replace(" ", "").split(",")])


def r_of_x(x: ApartmentPoint) -> Fraction:
    """First positive filtration jump: the smallest positive alpha(x) + m,
    the torus grades capping it at 1."""
    jumps = {Fraction(1)}
    for i, xi in enumerate(x.coords):
        for j, xj in enumerate(x.coords):
            if i != j:
                d = (xi - xj) % 1
                if d != 0:
                    jumps.add(d)
    return min(jumps)


def facet_of(x: ApartmentPoint) -> FacetSpec:
    """The facet of the closed alcove containing x."""
    if not x.in_closed_alcove():
        raise ValueError(f"{x} is outside the closed fundamental alcove")
    blocks = []
    run = 1
    for i in range(1, x.n):
        if x.coords[i] == x.coords[i - 1]:
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    t = 1 if x.coords[-1] == x.coords[0] - 1 else 0
    return FacetSpec(t, blocks)


def is_barycenter(x: ApartmentPoint) -> bool:
    """Whether x matches its facet's barycenter up to a global shift."""
    b = facet_of(x).barycenter()
    shift = x.coords[0] - b.coords[0]
    return all(xc == bc + shift for xc, bc in zip(x.coords, b.coords))


class GradedQuotient:
    """The grade-zero group and grade-r piece at a point, in cyclic-quiver
    normal form.

    sizes lists the coordinate classes modulo 1 in descending value order
    starting from the class of x_1; arrows lists the present quiver arrows
    as ordered node pairs (a, a+1 mod K).  A single class carries a loop
    arrow whose space is the full matrix algebra.
    """

    __slots__ = ("point", "r", "sizes", "arrows", "spacings")

    def __init__(self, point, r, sizes, arrows, spacings):
        self.point = point
        self.r = r
        self.sizes = sizes
        self.arrows = arrows
        self.spacings = spacings

    @property
    def num_nodes(self) -> int:
        return len(self.sizes)

    @property
    def dim_g(self) -> int:
        return sum(m * m for m in self.sizes)

    @property
    def dim_v(self) -> int:
        return sum(self.sizes[a] * self.sizes[b] for a, b in self.arrows)

    def arrow_shape(self, arrow) -> tuple[int, int]:
        a, b = arrow
        return (self.sizes[a], self.sizes[b])

    def missing_arrows(self) -> tuple[tuple[int, int], ...]:
        K = self.num_nodes
        return tuple(
            (a, (a + 1) % K) for a in range(K) if (a, (a + 1) % K) not in self.arrows
        )

    def __repr__(self) -> str:
        return (
            f"GradedQuotient(r={self.r}, sizes={self.sizes}, "
            f"arrows={self.arrows})"
        )


def graded_quotient(x: ApartmentPoint) -> GradedQuotient:
    if not x.in_closed_alcove():
        raise ValueError(f"{x} is outside the closed fundamental alcove")
    # class key: distance below x_1 modulo 1, so key 0 is the class of x_1
    # and ascending keys walk the classes in descending value order
    keys = [(x.coords[0] - c) % 1 for c in x.coords]
    distinct = sorted(set(keys))
    sizes = tuple(keys.count(kappa) for kappa in distinct)
    K = len(distinct)
    spacings = tuple(
        (distinct[a + 1] - distinct[a]) if a + 1 < K else (1 - distinct[K - 1])
        for a in range(K)
    )
    r = min(spacings)
    arrows = tuple((a, (a + 1) % K) for a in range(K) if spacings[a] == r)
    return GradedQuotient(x, r, sizes, arrows, spacings)


def enumerate_facets(n: int) -> list[FacetSpec]:
    """All nonempty facets of the closed alcove: every composition with
    t = 0, every composition into at least two parts with t = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    comps = []
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask & (1 << i):
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        comps.append(tuple(parts))
    out = [FacetSpec(0, c) for c in comps]
    out.extend(FacetSpec(1, c) for c in comps if len(c) > 1)
    return out


def sample_alcove_points(n: int, count: int, max_den: int = 12, seed: int = 20240815):
    """Seeded sample of rational points of the closed alcove with bounded
    denominators, deduplicated modulo the center direction by pinning
    x_1 = 0."""
    rng = random.Random(seed)
    seen = set()
    out = []
    attempts = 0
    while len(out) < count and attempts < 200 * count:
        attempts += 1
        den = rng.randint(1, max_den)
        rest = sorted((Fraction(-rng.randint(0, den), den) for _ in range(n - 1)), reverse=True)
        coords = (Fraction(0), *rest)
        if coords in seen:
            continue
        seen.add(coords)
        out.append(ApartmentPoint(coords))
    return out
