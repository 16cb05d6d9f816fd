"""Closed Euler-characteristic formulas for induced bundles on Hilbert schemes
of points, evaluated exactly over a surface model.

Every operation reduces to Riemann-Roch evaluations of truncated Chern
characters on the surface itself.  Inputs may be virtual (arbitrary rational
rank), so objects of the derived category are admissible wherever a formula
extends additively.  Results carry a term-by-term breakdown whose recombined
value is checked at construction time.

The two-point formulas subtract diagonal correction terms whose integer
coefficients are the invariant counts computed in `complexes`; production
uses the closed form, and a flag switches to the brute-force invariant
computation for cross-validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from . import complexes
from .surface import (ChernCharacter, SurfaceModel, ch_anticanonical, ch_hom,
                      ch_sym_cotangent, ch_tangent, ch_tensor, ch_tensor_all,
                      gen_binomial, hrr_chi, sym_pow_chi)
from .symgroup import product_orbit_reps

SUBSET_GUARD_DEFAULT = 24
SUBSET_GUARD_MAX = 62
BRUTE_MULTIPLICITY_MAX_K = 7


@dataclass(frozen=True)
class Term:
    """One labelled summand: coefficient times a product of factors."""

    label: str
    coefficient: Fraction
    factors: tuple[Fraction, ...]

    @property
    def value(self) -> Fraction:
        prod = Fraction(1)
        for f in self.factors:
            prod *= f
        return self.coefficient * prod


@dataclass(frozen=True)
class ChiResult:
    """An exact value together with its term breakdown; the breakdown must
    recombine to the value."""

    value: Fraction
    terms: tuple[Term, ...]

    def __post_init__(self):
        total = sum((t.value for t in self.terms), Fraction(0))
        if total != self.value:
            raise ArithmeticError(
                f"term breakdown sums to {total}, not {self.value}")


def _result(terms: list[Term]) -> ChiResult:
    return ChiResult(sum((t.value for t in terms), Fraction(0)), tuple(terms))


def require_line_bundle_class(ch: ChernCharacter, surface: SurfaceModel, what: str) -> None:
    if not ch.is_line_bundle_class(surface):
        raise ValueError(f"{what} must be the class of a line bundle "
                         f"(rank 1 with ch2 = c1^2/2)")


def default_twist(surface: SurfaceModel) -> ChernCharacter:
    return ChernCharacter.unit(surface)


@dataclass(frozen=True)
class ChiRequest:
    """A bundled computation request: surface, ordered (possibly virtual)
    bundle classes, a line-bundle twist, and the number of points where the
    formula needs one."""

    surface: SurfaceModel
    bundles: tuple[ChernCharacter, ...]
    twist: ChernCharacter
    n: int | None = None

    def validate(self, min_n: int | None = None) -> None:
        require_line_bundle_class(self.twist, self.surface, "twist")
        if min_n is not None:
            if self.n is None or self.n < min_n:
                raise ValueError(f"this computation requires n >= {min_n}")


def chi_taut(surface: SurfaceModel, n: int, bundle: ChernCharacter,
             twist: ChernCharacter) -> Fraction:
    """Euler characteristic of a single induced bundle with determinant twist
    on the n-point space: chi(F (x) L) * s^(n-1) chi(L)."""
    if n < 1:
        raise ValueError("need n >= 1")
    require_line_bundle_class(twist, surface, "twist")
    return (hrr_chi(ch_tensor(bundle, twist, surface), surface)
            * sym_pow_chi(n - 1, hrr_chi(twist, surface)))


def _diag_chi(surface: SurfaceModel, bundles: Sequence[ChernCharacter],
              twist: ChernCharacter, ell: int) -> Fraction:
    """chi of the ell-th diagonal correction class: S^(ell-1) of the cotangent
    bundle times all inputs times the twist squared."""
    cls = ch_sym_cotangent(ell - 1, surface)
    cls = ch_tensor(cls, ch_tensor_all(bundles, surface), surface)
    cls = ch_tensor(cls, ch_tensor(twist, twist, surface), surface)
    return hrr_chi(cls, surface)


def chi_taut_product_two(surface: SurfaceModel, bundles: Sequence[ChernCharacter],
                         twist: ChernCharacter | None = None, *,
                         brute_multiplicities: bool = False,
                         subset_guard: int = SUBSET_GUARD_DEFAULT) -> ChiResult:
    """Euler characteristic of a product of induced bundles on the two-point
    space, twisted by a determinant line bundle.

    The main sum runs over subsets P of [k] containing 1 and multiplies the
    two complementary twisted products; from it, one diagonal correction per
    ell in 1..k-1 is subtracted with the closed-form invariant count as its
    coefficient.  With brute_multiplicities the coefficients are recomputed by
    exact linear algebra (k <= 7 only).
    """
    k = len(bundles)
    if k < 1:
        raise ValueError("need at least one bundle")
    guard = min(subset_guard, SUBSET_GUARD_MAX)
    if k > guard:
        raise ValueError(f"k = {k} exceeds the subset-enumeration guard {guard}")
    if twist is None:
        twist = default_twist(surface)
    require_line_bundle_class(twist, surface, "twist")
    if brute_multiplicities and k > BRUTE_MULTIPLICITY_MAX_K:
        raise ValueError("brute-force multiplicities are limited to k <= "
                         f"{BRUTE_MULTIPLICITY_MAX_K}")

    terms = []
    rest = list(range(2, k + 1))
    for r in range(0, k):
        for extra in itertools.combinations(rest, r):
            p_set = (1,) + extra
            q_set = tuple(t for t in rest if t not in extra)
            chi_p = hrr_chi(ch_tensor(ch_tensor_all(
                (bundles[t - 1] for t in p_set), surface), twist, surface), surface)
            chi_q = hrr_chi(ch_tensor(ch_tensor_all(
                (bundles[t - 1] for t in q_set), surface), twist, surface), surface)
            label = "P={" + ",".join(map(str, p_set)) + "}"
            terms.append(Term(label, Fraction(1), (chi_p, chi_q)))
    for ell in range(1, k):
        if brute_multiplicities:
            mult = complexes.swap_invariant_kernel_dim(k, ell)
        else:
            mult = complexes.diagonal_multiplicity(k, ell)
        terms.append(Term(f"diag ell={ell}", Fraction(-mult),
                          (_diag_chi(surface, bundles, twist, ell),)))
    return _result(terms)


def chi_product_invariants(surface: SurfaceModel, n: int,
                           bundles: Sequence[ChernCharacter],
                           twist: ChernCharacter | None = None) -> ChiResult:
    """Euler characteristic of the invariants of the ambient product of
    pullbacks on the n-fold product (the uncorrected first approximation).

    One term per orbit representative a: the product over occupied values of
    the twisted fiber products, times the symmetric-power factor of the bare
    twist for the n - max(a) unused values.
    """
    k = len(bundles)
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if twist is None:
        twist = default_twist(surface)
    require_line_bundle_class(twist, surface, "twist")
    chi_twist = hrr_chi(twist, surface)
    terms = []
    for mi, _stab in product_orbit_reps(k, n):
        factors = []
        for fiber in mi.fibers():
            cls = ch_tensor(ch_tensor_all(
                (bundles[t - 1] for t in sorted(fiber)), surface), twist, surface)
            factors.append(hrr_chi(cls, surface))
        factors.append(sym_pow_chi(n - mi.max_value, chi_twist))
        terms.append(Term(f"a={mi.values}", Fraction(1), tuple(factors)))
    return _result(terms)


def chi_sym_power_two(surface: SurfaceModel, bundle: ChernCharacter, k: int,
                      twist: ChernCharacter | None = None) -> Fraction:
    """Euler characteristic of the k-th symmetric power of one induced
    line-bundle class on the two-point space, with determinant twist.

    The ambient term runs over unordered fiber-size splits {j, k-j}; a
    balanced split contributes the graded symmetric square of its factor.
    The diagonal corrections carry the joint invariant multiplicities from
    `complexes.sym_power_multiplicity`.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if k > complexes.FULL_GROUP_MAX_K:
        raise ValueError("symmetric-power multiplicities are limited to k <= "
                         f"{complexes.FULL_GROUP_MAX_K}")
    if twist is None:
        twist = default_twist(surface)
    require_line_bundle_class(bundle, surface, "bundle")
    require_line_bundle_class(twist, surface, "twist")
    total = Fraction(0)
    for j in range(0, k // 2 + 1):
        chi_j = hrr_chi(ch_tensor(_power(surface, bundle, j), twist, surface), surface)
        chi_rest = hrr_chi(ch_tensor(_power(surface, bundle, k - j), twist, surface),
                           surface)
        if j < k - j:
            total += chi_j * chi_rest
        else:
            total += sym_pow_chi(2, chi_j)
    for ell in range(1, k + 1):
        mult = complexes.sym_power_multiplicity(k, ell)
        if mult:
            total -= mult * _diag_chi(surface, [bundle] * k, twist, ell)
    return total


def chi_ext_power_two(surface: SurfaceModel, bundle: ChernCharacter, k: int,
                      twist: ChernCharacter | None = None) -> Fraction:
    """Euler characteristic of the k-th exterior power of one induced
    line-bundle class on the two-point space, with determinant twist.

    Sign-character analogue of chi_sym_power_two.  In the ambient term the
    sign character kills every split whose stabilizer moves two slots within
    one factor, so only k <= 2 splits survive; a balanced split contributes
    the graded exterior square.  The corrections use the alternating-sum
    multiplicities from `complexes.ext_power_multiplicity`.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if k > complexes.FULL_GROUP_MAX_K:
        raise ValueError("exterior-power multiplicities are limited to k <= "
                         f"{complexes.FULL_GROUP_MAX_K}")
    if twist is None:
        twist = default_twist(surface)
    require_line_bundle_class(bundle, surface, "bundle")
    require_line_bundle_class(twist, surface, "twist")
    total = Fraction(0)
    for j in range(0, k // 2 + 1):
        chi_j = hrr_chi(ch_tensor(_power(surface, bundle, j), twist, surface), surface)
        chi_rest = hrr_chi(ch_tensor(_power(surface, bundle, k - j), twist, surface),
                           surface)
        if j < k - j:
            if j <= 1 and k - j <= 1:
                total += chi_j * chi_rest
        else:
            if j == 1:
                total += gen_binomial(chi_j, 2)
    for ell in range(1, k + 1):
        mult = complexes.ext_power_multiplicity(k, ell)
        if mult:
            total -= mult * _diag_chi(surface, [bundle] * k, twist, ell)
    return total


def _power(surface: SurfaceModel, ch: ChernCharacter, m: int) -> ChernCharacter:
    return ch_tensor_all([ch] * m, surface)


def hom_coeff_left(k: int, khat: int, ellhat: int) -> int:
    """Coefficient of the source-side diagonal Hom correction."""
    return 2 ** (k - 1) * complexes.surviving_count(khat, ellhat)


def hom_coeff_right(k: int, ell: int, khat: int) -> int:
    """Coefficient of the target-side diagonal Hom correction."""
    return 2 ** (khat - 1) * complexes.surviving_count(k, ell)


def hom_coeff_pair(k: int, khat: int, ell: int, ellhat: int) -> tuple[int, int]:
    """The pair (c+, c-) of diagonal-vs-diagonal coefficients."""
    s = complexes.surviving_count(k, ell)
    shat = complexes.surviving_count(khat, ellhat)
    w = comb(k - 1, ell - 1) * comb(khat - 1, ellhat - 1)
    assert (s * shat + w) % 2 == 0
    return (s * shat + w) // 2, (s * shat - w) // 2


def chi_hom_pair_two(surface: SurfaceModel, source: Sequence[ChernCharacter],
                     target: Sequence[ChernCharacter], *,
                     subset_guard: int = SUBSET_GUARD_DEFAULT) -> ChiResult:
    """Alternating sum of Ext dimensions between two products of induced
    bundles on the two-point space.

    Four groups of terms: the double subset sum of Hom pairings; the two
    single diagonal corrections (the target-side one twisted by the
    anticanonical class); and the diagonal-vs-diagonal block, where the
    tangent-twisted middle extension enters with the smaller coefficient c-.
    """
    k, khat = len(source), len(target)
    if k < 1 or khat < 1:
        raise ValueError("need at least one bundle on each side")
    if k + khat - 1 > min(subset_guard, SUBSET_GUARD_MAX):
        raise ValueError("subset enumeration guard exceeded")
    terms = []
    rest = list(range(2, k + 1))
    all_e = ch_tensor_all(source, surface)
    all_f = ch_tensor_all(target, surface)
    canon_dual = ch_anticanonical(surface)
    tangent = ch_tangent(surface)

    for r in range(0, k):
        for extra in itertools.combinations(rest, r):
            p_set = (1,) + extra
            p_comp = tuple(t for t in rest if t not in extra)
            ch_p = ch_tensor_all((source[t - 1] for t in p_set), surface)
            ch_pc = ch_tensor_all((source[t - 1] for t in p_comp), surface)
            for rq in range(0, khat + 1):
                for q_set in itertools.combinations(range(1, khat + 1), rq):
                    q_comp = tuple(t for t in range(1, khat + 1) if t not in q_set)
                    ch_q = ch_tensor_all((target[t - 1] for t in q_set), surface)
                    ch_qc = ch_tensor_all((target[t - 1] for t in q_comp), surface)
                    lab = ("P={" + ",".join(map(str, p_set)) + "} Q={"
                           + ",".join(map(str, q_set)) + "}")
                    terms.append(Term(lab, Fraction(1), (
                        hrr_chi(ch_hom(ch_p, ch_q, surface), surface),
                        hrr_chi(ch_hom(ch_pc, ch_qc, surface), surface))))

    for ellhat in range(1, khat + 1):
        cls = ch_hom(all_e, ch_tensor(ch_sym_cotangent(ellhat - 1, surface),
                                      all_f, surface), surface)
        terms.append(Term(f"into-diag ellhat={ellhat}",
                          Fraction(-hom_coeff_left(k, khat, ellhat)),
                          (hrr_chi(cls, surface),)))
    for ell in range(1, k + 1):
        cls = ch_tensor(canon_dual,
                        ch_hom(ch_tensor(ch_sym_cotangent(ell - 1, surface),
                                         all_e, surface), all_f, surface), surface)
        terms.append(Term(f"from-diag ell={ell}",
                          Fraction(-hom_coeff_right(k, ell, khat)),
                          (hrr_chi(cls, surface),)))
    for ell in range(1, k + 1):
        for ellhat in range(1, khat + 1):
            c_plus, c_minus = hom_coeff_pair(k, khat, ell, ellhat)
            cls = ch_hom(ch_tensor(ch_sym_cotangent(ell - 1, surface), all_e, surface),
                         ch_tensor(ch_sym_cotangent(ellhat - 1, surface), all_f, surface),
                         surface)
            chi_c = hrr_chi(cls, surface)
            chi_cw = hrr_chi(ch_tensor(canon_dual, cls, surface), surface)
            chi_ct = hrr_chi(ch_tensor(tangent, cls, surface), surface)
            terms.append(Term(f"diag-diag ell={ell},{ellhat} c+",
                              Fraction(c_plus), (chi_c + chi_cw,)))
            terms.append(Term(f"diag-diag ell={ell},{ellhat} c-",
                              Fraction(-c_minus), (chi_ct,)))
    return _result(terms)


_TRIPLE_PAIRS = ((1, 2, 3), (1, 3, 2), (2, 3, 1))


def chi_taut_triple(surface: SurfaceModel, n: int, e1: ChernCharacter,
                    e2: ChernCharacter, e3: ChernCharacter,
                    twist: ChernCharacter | None = None) -> ChiResult:
    """Euler characteristic of a triple product of induced bundles on the
    n-point space (n >= 3), with determinant twist."""
    if n < 3:
        raise ValueError("need n >= 3")
    if twist is None:
        twist = default_twist(surface)
    require_line_bundle_class(twist, surface, "twist")
    e = (e1, e2, e3)
    chi_l = hrr_chi(twist, surface)
    s1 = sym_pow_chi(n - 1, chi_l)
    s2 = sym_pow_chi(n - 2, chi_l)
    s3 = sym_pow_chi(n - 3, chi_l)

    def tchi(chars: Iterable[ChernCharacter], twists: int) -> Fraction:
        cls = ch_tensor_all(chars, surface)
        for _ in range(twists):
            cls = ch_tensor(cls, twist, surface)
        return hrr_chi(cls, surface)

    terms = [Term("singletons", Fraction(1),
                  (tchi([e1], 1), tchi([e2], 1), tchi([e3], 1), s3))]
    for (a, b, c) in _TRIPLE_PAIRS:
        terms.append(Term(f"pair {a}{b}|{c} L", Fraction(1),
                          (tchi([e[a - 1], e[b - 1]], 1), tchi([e[c - 1]], 1), s2)))
        terms.append(Term(f"pair {a}{b}|{c} L^2", Fraction(-1),
                          (tchi([e[a - 1], e[b - 1]], 2), tchi([e[c - 1]], 1), s3)))
    terms.append(Term("full L", Fraction(1), (tchi(e, 1), s1)))
    terms.append(Term("full L^2", Fraction(-3), (tchi(e, 2), s2)))
    terms.append(Term("full L^3", Fraction(2), (tchi(e, 3), s3)))
    cot = ch_sym_cotangent(1, surface)
    terms.append(Term("cotangent L^2", Fraction(-1),
                      (tchi([cot, e1, e2, e3], 2), s2)))
    terms.append(Term("cotangent L^3", Fraction(1),
                      (tchi([cot, e1, e2, e3], 3), s3)))
    return _result(terms)


def chi_taut_triple_grouped(surface: SurfaceModel, n: int, e1: ChernCharacter,
                            e2: ChernCharacter, e3: ChernCharacter) -> Fraction:
    """Untwisted triple-product value in its regrouped form; used as an
    independent cross-check of chi_taut_triple at trivial twist."""
    if n < 3:
        raise ValueError("need n >= 3")
    chi_o = Fraction(surface.chi_structure_sheaf)
    s1 = sym_pow_chi(n - 1, chi_o)
    s2 = sym_pow_chi(n - 2, chi_o)
    s3 = sym_pow_chi(n - 3, chi_o)
    e = (e1, e2, e3)

    def chi_of(chars):
        return hrr_chi(ch_tensor_all(chars, surface), surface)

    pair_sum = sum((chi_of([e[a - 1], e[b - 1]]) * chi_of([e[c - 1]])
                    for (a, b, c) in _TRIPLE_PAIRS), Fraction(0))
    full = chi_of(e)
    cot_full = chi_of([ch_sym_cotangent(1, surface), e1, e2, e3])
    return (chi_of([e1]) * chi_of([e2]) * chi_of([e3]) * s3
            + pair_sum * (s2 - s3)
            + full * (s1 - 3 * s2 + 2 * s3)
            + cot_full * (s3 - s2))


def top_cohomology_dim(k: int, n: int, h2_by_subset: Mapping[frozenset, int],
                       q: int) -> int:
    """Dimension of the top-degree cohomology of a product of k induced
    bundles on the n-point space.

    h2_by_subset supplies, for each subset of [k] occurring as a fiber of an
    orbit representative, the top cohomology dimension of the corresponding
    (twisted) product on the surface; q is the top cohomology dimension of the
    twist itself.  These are genuine cohomology dimensions, which Riemann-Roch
    cannot provide, so they are caller-supplied.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if q < 0:
        raise ValueError("q must be nonnegative")
    total = 0
    for mi, _stab in product_orbit_reps(k, n):
        prod = 1
        for fiber in mi.fibers():
            key = frozenset(fiber)
            if key not in h2_by_subset:
                raise ValueError(
                    "missing top-cohomology value for subset {"
                    + ",".join(map(str, sorted(key))) + "}")
            prod *= h2_by_subset[key]
        m = n - mi.max_value
        total += prod * int(gen_binomial(q + m - 1, m))
    return total


def global_sections_dim(h0_values: Sequence[int], n: int) -> int:
    """Dimension of the global sections of a product of induced bundles for
    n at least the number of factors: the plain product of the h0 inputs."""
    k = len(h0_values)
    if k < 1:
        raise ValueError("need at least one bundle")
    if n < k:
        raise ValueError(f"the global-sections product formula requires n >= k "
                         f"(got n = {n}, k = {k})")
    if any(v < 0 for v in h0_values):
        raise ValueError("h0 values must be nonnegative")
    prod = 1
    for v in h0_values:
        prod *= v
    return prod
