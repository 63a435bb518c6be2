"""The Riemann-Roch function chi, Laufer-style cycle algorithms, and
certified global integer minimization of chi over boxes and lower-bounded
regions.

chi is a convex quadratic with positive-definite quadratic part on the
real lattice, which is what makes the certified bounding box for the
unbounded minimization possible: the level set through any feasible value
is an ellipsoid with exactly computable coordinate extents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import BoxTooLarge, InternalError, PreconditionFailed
from .graph import PlumbingGraph, intersection_data
from .cycles import Cycle, pairing
from . import exactlin, kernels

DEFAULT_BUDGET = 10**8


# -- anticanonical cycle and chi ------------------------------------------


@lru_cache(maxsize=None)
def anticanonical_cycle(g: PlumbingGraph) -> Cycle:
    """The rational cycle solving the adjunction equations
    (-Z_K + E_v, E_v) + 2 = 0, i.e. (Z_K, E_v) = E_v^2 + 2 for all v."""
    b = [Fraction(e + 2) for e in g.euler]
    m = [list(row) for row in intersection_data(g).matrix]
    return Cycle(g, exactlin.solve(m, b))


def chi(lp: Cycle) -> Fraction:
    """chi(l') = -(l', l' - Z_K)/2, exact."""
    zk = anticanonical_cycle(lp.graph)
    return -pairing(lp, lp - zk) / 2


# -- Laufer algorithms -----------------------------------------------------


def fundamental_cycle(g: PlumbingGraph) -> Cycle:
    """The minimal nonzero effective antinef cycle, by Laufer's algorithm.

    Start from the reduced cycle E and repeatedly add E_v for the
    smallest-index v with (z, E_v) > 0; negative definiteness guarantees
    termination at the unique fundamental cycle.
    """
    m = intersection_data(g).matrix
    n = g.n
    z = [1] * n
    # s = I z, updated incrementally
    s = [sum(m[i][j] for j in range(n)) for i in range(n)]
    guard = intersection_data(g).group_order * sum(
        abs(e) for e in g.euler
    ) * n * n
    steps = 0
    while True:
        v = next((i for i in range(n) if s[i] > 0), None)
        if v is None:
            return Cycle(g, z)
        z[v] += 1
        for i in range(n):
            s[i] += m[i][v]
        steps += 1
        if steps > guard:
            raise InternalError("Laufer iteration exceeded its step guard")


def laufer_reduce(z: Cycle, lp: Cycle) -> Cycle:
    """Reduce the Chern class lp along a Laufer sequence inside [0, z].

    Starting from l = 0, add E_v while some v in the support of z - l has
    (lp - l, E_v) < 0; on exit, lp - l pairs nonnegatively with every
    base element in the support of z - l (or z - l = 0).
    """
    if not (z.is_integral and z.is_effective):
        raise PreconditionFailed("z must be an effective integral cycle")
    g = z.graph
    lp._same_graph(z)
    m = intersection_data(g).matrix
    n = g.n
    zc = list(z.int_coeffs())
    l = [0] * n
    # p = I (lp - l), updated incrementally
    p = [
        sum(Fraction(m[i][j]) * lp.coeffs[j] for j in range(n))
        for i in range(n)
    ]
    while True:
        v = next(
            (i for i in range(n) if zc[i] - l[i] > 0 and p[i] < 0), None
        )
        if v is None:
            return Cycle(g, l)
        l[v] += 1
        for i in range(n):
            p[i] -= m[i][v]


# -- certified minimization ------------------------------------------------


@dataclass(frozen=True)
class MinChiCertificate:
    """A claimed global minimum of chi over a region, plus the finite
    search data proving it."""

    region: dict
    min_value: Fraction
    minimizer: Cycle
    certificate: dict | None
    nodes: int


def _shifted_quadratic(g: PlumbingGraph, x0: Cycle):
    """Integer data (P, q, D) with 2*D*(chi(x0 + l) - chi(x0)) = l^T P l + q.l."""
    data = intersection_data(g)
    m = data.matrix
    n = g.n
    zk = anticanonical_cycle(g)
    w = [
        sum(
            Fraction(m[i][j]) * (zk.coeffs[j] - 2 * x0.coeffs[j])
            for j in range(n)
        )
        for i in range(n)
    ]
    d = lcm(*(f.denominator for f in w)) if n else 1
    P = [[-m[i][j] * d for j in range(n)] for i in range(n)]
    q = [int(f * d) for f in w]
    return P, q, d


def _minimize_shifted(g, x0, lo, hi, budget):
    size = kernels.box_size(lo, hi)
    budget = DEFAULT_BUDGET if budget is None else budget
    if size > budget:
        raise BoxTooLarge(size, budget)
    P, q, d = _shifted_quadratic(g, x0)
    val, point = kernels.min_quadratic_box(P, q, lo, hi)
    chi_min = chi(x0) + Fraction(val, 2 * d)
    return chi_min, Cycle(g, point), size


def min_chi_box(z: Cycle, lp: Cycle, budget: int | None = None) -> MinChiCertificate:
    """Global minimum of l -> chi(-lp + l) over integer 0 <= l <= z."""
    g = z.graph
    lp._same_graph(z)
    if not (z.is_integral and z.is_effective):
        raise PreconditionFailed("z must be an effective integral cycle")
    lo = (0,) * g.n
    hi = z.int_coeffs()
    chi_min, minimizer, size = _minimize_shifted(g, -lp, lo, hi, budget)
    return MinChiCertificate(
        region={"type": "box", "lo": lo, "hi": hi},
        min_value=chi_min,
        minimizer=minimizer,
        certificate=None,
        nodes=size,
    )


def min_chi_lower_bounded(c: Cycle, budget: int | None = None) -> MinChiCertificate:
    """Global minimum of chi over all integer l >= c, with a soundness
    certificate.

    The quadratic part of chi is positive definite, so the continuous
    minimizer is Z_K/2 and the level set through any feasible value is a
    bounded ellipsoid.  Starting from the feasible point
    l0 = max(c, ceil(Z_K/2)) the per-coordinate extent of the level set
    {chi <= chi(l0)} is bounded exactly with integer square roots, giving
    a finite box that provably contains every possible improvement.
    """
    g = c.graph
    if not (c.is_integral and c.is_effective):
        raise PreconditionFailed("lower bound must be an effective integral cycle")
    data = intersection_data(g)
    zk = anticanonical_cycle(g)
    half = [x / 2 for x in zk.coeffs]
    c_int = c.int_coeffs()
    l0 = [max(ci, exactlin.ceil_frac(h)) for ci, h in zip(c_int, half)]
    best = chi(Cycle(g, l0))
    chi_center = chi(Cycle(g, half))
    level = best - chi_center  # >= 0 by convexity
    # |x_v - (Z_K/2)_v| <= sqrt(2 * level * ((-I)^-1)_vv) on the level set
    radius = [
        exactlin.ceil_sqrt_frac(2 * level * (-data.inverse[v][v]))
        for v in range(g.n)
    ]
    hi = [
        max(exactlin.floor_frac(h) + r, s)
        for h, r, s in zip(half, radius, l0)
    ]
    chi_min, minimizer, size = _minimize_shifted(
        g, Cycle.zero(g), c_int, tuple(hi), budget
    )
    cert = {
        "continuous_minimizer": Cycle(g, half),
        "level_bound": level,
        "radius": tuple(radius),
        "feasible_start": Cycle(g, l0),
        "start_value": best,
        "box_lo": c_int,
        "box_hi": tuple(hi),
    }
    return MinChiCertificate(
        region={"type": "lower_bound", "lo": c_int},
        min_value=chi_min,
        minimizer=minimizer,
        certificate=cert,
        nodes=size,
    )


def is_rational(g: PlumbingGraph, budget: int | None = None) -> bool:
    """Artin's rationality criterion: chi(l) >= 1 for every effective
    nonzero cycle.

    Runs the minimization criterion (every nonzero effective l satisfies
    l >= E_v for some v) and the independent chi(Z_min) = 1 check, and
    demands agreement; a mismatch is an implementation bug.
    """
    artin_min = min(
        min_chi_lower_bounded(Cycle.basis(g, v), budget).min_value
        for v in g.names
    )
    by_min = artin_min >= 1
    by_zmin = chi(fundamental_cycle(g)) == 1
    if by_min != by_zmin:
        raise InternalError(
            "rationality cross-check disagreement: "
            f"min chi = {artin_min}, chi(Z_min) = {chi(fundamental_cycle(g))}"
        )
    return by_min
