"""Exact arithmetic on the truncated cohomology ring of a polarized surface.

A surface is modelled by its Picard lattice (an integer Gram matrix on a
chosen divisor basis), its canonical class in that basis, and its topological
Euler number.  Sheaves and complexes of sheaves enter only through their
truncated Chern characters (ch0, ch1, ch2); every Euler characteristic in the
package is ultimately a Riemann-Roch evaluation of such a character.  All
arithmetic is over exact rationals (`fractions.Fraction`); there is no
floating point anywhere.

The module also provides the Euler characteristic of graded symmetric powers
(`sym_pow_chi`) together with a brute-force oracle (`graded_sym_chi_oracle`)
that builds the symmetric power of a graded vector space by explicit basis
enumeration with the usual Koszul sign rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


def as_fraction(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def gen_binomial(x: Rat, m: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-m+1)/m! for integer m >= 0."""
    if m < 0:
        raise ValueError("lower index must be nonnegative")
    num = Fraction(1)
    xf = as_fraction(x)
    for i in range(m):
        num *= xf - i
    return num / factorial(m)


def sym_pow_chi(m: int, chi: Rat) -> Fraction:
    """Euler characteristic of the m-th graded symmetric power of a space with
    Euler characteristic chi, i.e. binom(chi + m - 1, m).

    Valid for negative chi as well: the falling-factorial binomial gives the
    signed exterior-power count (-1)^m * binom(-chi, m)."""
    if m < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    return gen_binomial(as_fraction(chi) + m - 1, m)


def graded_sym_chi_oracle(dims: Iterable[tuple[int, int]], m: int) -> int:
    """Brute-force Euler characteristic of the m-th symmetric power of a graded
    vector space given as (degree, dimension) pairs.

    Enumerates an explicit monomial basis: multisets of basis vectors in which
    odd-degree vectors occur at most once (symmetric algebra on the even part,
    exterior on the odd part).  Completely independent of `sym_pow_chi`.
    """
    basis: list[int] = []  # degree of each basis vector
    for degree, dim in dims:
        if dim < 0:
            raise ValueError("dimensions must be nonnegative")
        basis.extend([degree] * dim)
    total = 0
    for combo in itertools.combinations_with_replacement(range(len(basis)), m):
        ok = True
        for idx, group in itertools.groupby(combo):
            if basis[idx] % 2 != 0 and len(list(group)) > 1:
                ok = False
                break
        if ok:
            deg = sum(basis[i] for i in combo)
            total += -1 if deg % 2 else 1
    return total


def graded_tensor_chi_oracle(dims_v: Iterable[tuple[int, int]],
                             dims_w: Iterable[tuple[int, int]]) -> int:
    """Euler characteristic of the tensor product of two graded vector spaces,
    by explicit enumeration of the product basis."""
    total = 0
    dv = list(dims_v)
    dw = list(dims_w)
    for (p, a) in dv:
        for (q, b) in dw:
            total += (a * b) * (-1 if (p + q) % 2 else 1)
    return total


@dataclass(frozen=True)
class SurfaceModel:
    """A smooth projective surface given by exact intersection data.

    gram is the intersection pairing on a chosen basis of (a sublattice of)
    the Picard group, canonical the canonical class in that basis, and c2 the
    topological Euler number.  Noether's formula forces 12 | (K.K + c2); the
    constructor rejects inconsistent data.
    """

    name: str
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    c2: int

    def __post_init__(self):
        p = len(self.gram)
        if p == 0:
            raise ValueError("picard rank must be positive")
        for row in self.gram:
            if len(row) != p:
                raise ValueError("gram matrix must be square")
        for i in range(p):
            for j in range(p):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if len(self.canonical) != p:
            raise ValueError("canonical class length must equal picard rank")
        if (self.k_squared + self.c2) % 12 != 0:
            raise ValueError(
                f"invalid surface {self.name!r}: K.K + c2 = "
                f"{self.k_squared + self.c2} is not divisible by 12")

    @property
    def picard_rank(self) -> int:
        return len(self.gram)

    def pair(self, u: Sequence[Rat], v: Sequence[Rat]) -> Fraction:
        """Intersection pairing of two divisor coordinate vectors."""
        if len(u) != self.picard_rank or len(v) != self.picard_rank:
            raise ValueError("divisor class length does not match picard rank")
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            total += as_fraction(ui) * sum(row[j] * as_fraction(v[j])
                                           for j in range(len(v)))
        return total

    @property
    def k_squared(self) -> int:
        val = self.pair(self.canonical, self.canonical)
        assert val.denominator == 1
        return int(val)

    @property
    def chi_structure_sheaf(self) -> int:
        """chi(O) = (K.K + c2)/12, an integer by Noether's formula."""
        return (self.k_squared + self.c2) // 12

    def canonical_divisor(self) -> "DivisorClass":
        return DivisorClass(tuple(Fraction(c) for c in self.canonical))


@dataclass(frozen=True)
class DivisorClass:
    """Rational divisor class in the chosen Picard basis."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values: Sequence[Rat]) -> "DivisorClass":
        return DivisorClass(tuple(as_fraction(v) for v in values))

    @staticmethod
    def zero(picard_rank: int) -> "DivisorClass":
        return DivisorClass((Fraction(0),) * picard_rank)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("divisor classes live in different lattices")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def scale(self, t: Rat) -> "DivisorClass":
        tf = as_fraction(t)
        return DivisorClass(tuple(tf * a for a in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class ChernCharacter:
    """Truncated Chern character (rank, degree-2 part, integrated degree-4 part).

    ch2 is stored as a scalar: the degree-4 cohomology of a surface is one
    dimensional, so only the integral against the fundamental class matters.
    Virtual classes (negative or fractional rank) are allowed; this is what
    makes inputs from the derived category legitimate.
    """

    ch0: Fraction
    ch1: DivisorClass
    ch2: Fraction

    @staticmethod
    def make(ch0: Rat, ch1: DivisorClass | Sequence[Rat], ch2: Rat) -> "ChernCharacter":
        if not isinstance(ch1, DivisorClass):
            ch1 = DivisorClass.of(ch1)
        return ChernCharacter(as_fraction(ch0), ch1, as_fraction(ch2))

    @staticmethod
    def unit(surface: SurfaceModel) -> "ChernCharacter":
        return ChernCharacter(Fraction(1), DivisorClass.zero(surface.picard_rank), Fraction(0))

    @staticmethod
    def line_bundle(c1: DivisorClass | Sequence[Rat], surface: SurfaceModel) -> "ChernCharacter":
        """Chern character (1, c1, c1.c1/2) of a line bundle."""
        if not isinstance(c1, DivisorClass):
            c1 = DivisorClass.of(c1)
        return ChernCharacter(Fraction(1), c1, surface.pair(c1.coeffs, c1.coeffs) / 2)

    def is_line_bundle_class(self, surface: SurfaceModel) -> bool:
        return (self.ch0 == 1
                and self.ch2 == surface.pair(self.ch1.coeffs, self.ch1.coeffs) / 2)


@dataclass(frozen=True)
class BundleSpec:
    """Input form of a locally free sheaf: rank, first Chern class, and the
    integrated second Chern class."""

    name: str
    rank: int
    c1: DivisorClass
    c2num: Fraction

    def chern(self, surface: SurfaceModel) -> ChernCharacter:
        c1sq = surface.pair(self.c1.coeffs, self.c1.coeffs)
        return ChernCharacter(Fraction(self.rank), self.c1, (c1sq - 2 * self.c2num) / 2)


def ch_add(a: ChernCharacter, b: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2)


def ch_sub(a: ChernCharacter, b: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2)


def ch_tensor(a: ChernCharacter, b: ChernCharacter, surface: SurfaceModel) -> ChernCharacter:
    """Product of truncated Chern characters (multiplicativity of ch)."""
    if len(a.ch1) != surface.picard_rank or len(b.ch1) != surface.picard_rank:
        raise ValueError("divisor class length does not match picard rank")
    return ChernCharacter(
        a.ch0 * b.ch0,
        b.ch1.scale(a.ch0) + a.ch1.scale(b.ch0),
        a.ch0 * b.ch2 + b.ch0 * a.ch2 + surface.pair(a.ch1.coeffs, b.ch1.coeffs),
    )


def ch_tensor_all(chars: Iterable[ChernCharacter], surface: SurfaceModel) -> ChernCharacter:
    """Product of several characters; the empty product is the unit."""
    out = ChernCharacter.unit(surface)
    for c in chars:
        out = ch_tensor(out, c, surface)
    return out


def ch_dual(a: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(a.ch0, -a.ch1, a.ch2)


def ch_hom(a: ChernCharacter, b: ChernCharacter, surface: SurfaceModel) -> ChernCharacter:
    """Character of the sheaf Hom: dual of the source times the target."""
    return ch_tensor(ch_dual(a), b, surface)


def ch_tangent(surface: SurfaceModel) -> ChernCharacter:
    k = surface.canonical_divisor()
    ksq = Fraction(surface.k_squared)
    return ChernCharacter(Fraction(2), -k, (ksq - 2 * surface.c2) / 2)


def ch_anticanonical(surface: SurfaceModel) -> ChernCharacter:
    return ChernCharacter.line_bundle(-surface.canonical_divisor(), surface)


def ch_sym_cotangent(m: int, surface: SurfaceModel) -> ChernCharacter:
    """Character of the m-th symmetric power of the cotangent bundle.

    Computed from the Chern roots a, b of the cotangent bundle,
    a + b = K and ab = c2, truncated in degree 2:

      ch0 = m + 1
      ch1 = m(m+1)/2 * K
      ch2 = [ m(m+1)(2m+1)/6 * (K.K - 2 c2) + m(m+1)(m-1)/3 * c2 ] / 2
    """
    if m < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    k = surface.canonical_divisor()
    ksq = Fraction(surface.k_squared)
    c2 = Fraction(surface.c2)
    sq_sum = Fraction(m * (m + 1) * (2 * m + 1), 6)          # sum of i^2, i <= m
    cross = Fraction(m * (m + 1) * (m - 1), 6)               # sum of i(m-i)
    ch2 = (sq_sum * (ksq - 2 * c2) + 2 * cross * c2) / 2
    return ChernCharacter(Fraction(m + 1), k.scale(Fraction(m * (m + 1), 2)), ch2)


def hrr_chi(a: ChernCharacter, surface: SurfaceModel) -> Fraction:
    """Riemann-Roch on a surface: chi = ch2 + ch1.(-K)/2 + ch0 * chi(O)."""
    k = surface.canonical_divisor()
    return (a.ch2
            - surface.pair(a.ch1.coeffs, k.coeffs) / 2
            + a.ch0 * surface.chi_structure_sheaf)


# Bundled test surfaces with classically known invariants.

def p2() -> SurfaceModel:
    """The projective plane: Pic = Z.H, H.H = 1, K = -3H, c2 = 3."""
    return SurfaceModel("P2", ((1,),), (-3,), 3)


def p1xp1() -> SurfaceModel:
    """A smooth quadric: Pic = Z^2 with the hyperbolic pairing, K = (-2,-2)."""
    return SurfaceModel("P1xP1", ((0, 1), (1, 0)), (-2, -2), 4)


def k3(h_square: int = 2) -> SurfaceModel:
    """A K3 surface with a rank-one polarization of the given self-intersection."""
    if h_square <= 0 or h_square % 2 != 0:
        raise ValueError("polarization self-intersection must be a positive even integer")
    return SurfaceModel("K3", ((h_square,),), (0,), 24)


PRESETS = {"P2": p2, "P1xP1": p1xp1, "K3": k3}
