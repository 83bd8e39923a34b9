"""Explicit equilateral sets of size a + b + 1 in E^a (+)_1 E^b.

Three constructions, all with unit target distance:

* a = 1: the b+1 vertices of a unit regular b-simplex in the second factor,
  plus (1 - d_b, o).
* a = b: a cross-polytope paired with a small regular simplex,
  {(v_i, +-e_i/2)}, plus an apex (t e_a, o).
* b > a >= 2: one regular simplex per orthogonal block of the second
  factor, with the block representatives w_i, z_j placed in the first
  factor at separations f(c-1), f(c) and cross separation g(c); the last
  E^1 coordinate carries the offset zeta that realises g(c).

Every builder is deterministic: identical inputs give identical coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .feasibility import (
    FeasibilityVerdict,
    Parameters,
    VerdictKind,
    classify,
    derive_parameters,
)
from .geometry import BlockLayout, circumradius_sq, place_in_block, regular_simplex
from .mixednorm import MixedPoint, PointSet
from .realnum import DEFAULT_EPS_FLOOR


class InfeasibleConstructionError(Exception):
    """The certified verdict rules out (or cannot certify) the construction."""

    def __init__(self, verdict: FeasibilityVerdict):
        self.verdict = verdict
        super().__init__(f"no construction for this pair: verdict {verdict.kind.value}")


@dataclass(frozen=True)
class ConstructionResult:
    point_set: PointSet
    zeta: float | None = None
    parameters: Parameters | None = None


def _f(n: int) -> float:
    return 1.0 - math.sqrt(n / (n + 1))


def _g(c: int) -> float:
    return 1.0 - math.sqrt(0.5 * ((c - 1) / c + c / (c + 1)))


def _d(n: int) -> float:
    return math.sqrt(float(circumradius_sq(n)))


def construct_prop1(b: int) -> ConstructionResult:
    """b + 2 equidistant points in E^1 (+)_1 E^b at distance 1."""
    if b < 1:
        raise ValueError(f"construct_prop1: b must be >= 1, got {b}")
    simplex = regular_simplex(b + 1, 1.0, b)
    origin_x = np.zeros(1)
    points = [MixedPoint(origin_x, y) for y in simplex]
    points.append(MixedPoint(np.array([1.0 - _d(b)]), np.zeros(b)))
    ps = PointSet(a=1, b=b, lam=1.0, points=points, provenance=f"prop1(b={b})")
    return ConstructionResult(point_set=ps)


def construct_prop2(a: int) -> ConstructionResult:
    """2a + 1 equidistant points in E^a (+)_1 E^a at distance 1.

    The simplex occupies the first a-1 coordinates and the apex the a-th,
    so the apex is orthogonal to every v_i exactly, even in binary64.
    """
    if a < 2:
        raise ValueError(f"construct_prop2: a must be >= 2, got {a}")
    side = 1.0 - 1.0 / math.sqrt(2.0)
    vs = regular_simplex(a, side, a)
    half_e = 0.5 * np.eye(a)
    points = [MixedPoint(vs[i], half_e[i]) for i in range(a)]
    points += [MixedPoint(vs[i], -half_e[i]) for i in range(a)]
    radicand = 0.25 - (side * _d(a - 1)) ** 2
    # positive for every a >= 2: (1 - 1/sqrt(2)) d_{a-1} < (1 - 1/sqrt(2))/sqrt(2) < 1/2
    apex = np.zeros(a)
    apex[a - 1] = math.sqrt(radicand)
    points.append(MixedPoint(apex, np.zeros(a)))
    ps = PointSet(a=a, b=a, lam=1.0, points=points, provenance=f"prop2(a={a})")
    return ConstructionResult(point_set=ps)


def _second_factor_simplices(p: Parameters) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Per-block unit simplices embedded in E^b: alpha blocks of dim c-1
    carrying c vertices each, then beta blocks of dim c carrying c+1."""
    layout = BlockLayout((p.c - 1,) * p.alpha + (p.c,) * p.beta)
    u_blocks = []
    for i in range(p.alpha):
        verts = regular_simplex(p.c, 1.0, p.c - 1)
        u_blocks.append([place_in_block(v, layout, i) for v in verts])
    v_blocks = []
    for j in range(p.beta):
        verts = regular_simplex(p.c + 1, 1.0, p.c)
        v_blocks.append([place_in_block(v, layout, p.alpha + j) for v in verts])
    return u_blocks, v_blocks


def _first_factor_points(p: Parameters) -> tuple[list[np.ndarray], list[np.ndarray], float | None]:
    """The w_i and z_j in E^a, case-split on beta exactly as the verdict
    dispatch does; returns (ws, zs, zeta)."""
    a, c, alpha, beta = p.a, p.c, p.alpha, p.beta
    if beta == 0:
        ws = list(regular_simplex(alpha, _f(c - 1), a))
        return ws, [], None
    if beta == 1:
        simplex = regular_simplex(a, _f(c - 1), a - 1)
        ws = [np.concatenate([v, [0.0]]) for v in simplex]
        zeta = math.sqrt(_g(c) ** 2 - float(circumradius_sq(a - 1)) * _f(c - 1) ** 2)
        z = np.zeros(a)
        z[a - 1] = zeta
        return ws, [z], zeta
    if beta == a:
        simplex = regular_simplex(a, _f(c), a - 1)
        zs = [np.concatenate([v, [0.0]]) for v in simplex]
        zeta = math.sqrt(_g(c) ** 2 - float(circumradius_sq(a - 1)) * _f(c) ** 2)
        w = np.zeros(a)
        w[a - 1] = zeta
        return [w], zs, zeta
    # main case 2 <= beta <= a-1: E^a = E^{alpha-1} (+) E^{beta-1} (+) E^1
    layout = BlockLayout((alpha - 1, beta - 1, 1))
    ws = [place_in_block(v, layout, 0) for v in regular_simplex(alpha, _f(c - 1), alpha - 1)]
    radicand = (
        _g(c) ** 2
        - float(circumradius_sq(alpha - 1)) * _f(c - 1) ** 2
        - float(circumradius_sq(beta - 1)) * _f(c) ** 2
    )
    if radicand < 0:
        raise ValueError(f"zeta radicand negative ({radicand}) despite a holding verdict")
    zeta = math.sqrt(radicand)
    zeta_vec = place_in_block(np.array([zeta]), layout, 2)
    zs = [place_in_block(v, layout, 1) + zeta_vec for v in regular_simplex(beta, _f(c), beta - 1)]
    return ws, zs, zeta


def construct_theorem(
    a: int, b: int, eps_floor: Fraction | int = DEFAULT_EPS_FLOOR
) -> ConstructionResult:
    """a + b + 1 equidistant points for b > a >= 2, when feasible.

    Raises InfeasibleConstructionError carrying the verdict when the
    certified inequality fails or cannot be separated from zero.
    """
    verdict = classify(a, b, eps_floor)
    if verdict.kind not in (VerdictKind.BETA_TRIVIAL, VerdictKind.INEQUALITY_HOLDS):
        raise InfeasibleConstructionError(verdict)
    p = verdict.params if verdict.params is not None else derive_parameters(a, b)

    u_blocks, v_blocks = _second_factor_simplices(p)
    ws, zs, zeta = _first_factor_points(p)

    points = [MixedPoint(ws[i], u) for i in range(p.alpha) for u in u_blocks[i]]
    points += [MixedPoint(zs[j], v) for j in range(p.beta) for v in v_blocks[j]]
    provenance = (
        f"theorem(a={a},b={b},c={p.c},alpha={p.alpha},beta={p.beta})"
    )
    ps = PointSet(a=a, b=b, lam=1.0, points=points, provenance=provenance)
    return ConstructionResult(point_set=ps, zeta=zeta, parameters=p)


def _swap(result: ConstructionResult) -> ConstructionResult:
    ps = result.point_set
    swapped = PointSet(
        a=ps.b,
        b=ps.a,
        lam=ps.lam,
        points=[MixedPoint(p.y, p.x) for p in ps.points],
        provenance=ps.provenance,
        swapped=not ps.swapped,
    )
    return ConstructionResult(point_set=swapped, zeta=result.zeta, parameters=result.parameters)


def construct(
    a: int, b: int, eps_floor: Fraction | int = DEFAULT_EPS_FLOOR
) -> ConstructionResult:
    """Build an equilateral set of size a + b + 1 for any feasible pair.

    Dispatches on the verdict; for a > b the set is built for (b, a) and the
    two components of every point are exchanged, with `swapped` set.
    """
    verdict = classify(a, b, eps_floor)
    if verdict.kind is VerdictKind.PROP1:
        if a == 1:
            return construct_prop1(b)
        return _swap(construct_prop1(a))
    if verdict.kind is VerdictKind.PROP2:
        return construct_prop2(a)
    if verdict.kind is VerdictKind.SWAP_AND_RECURSE:
        return _swap(construct(b, a, eps_floor))
    return construct_theorem(a, b, eps_floor)
