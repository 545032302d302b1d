"""Optimal qubit cooling: closed-form catalysts, hot-only plans, enhancements.

Covers three constructions for a qubit cold object:

* the rank-n catalyst maximizing the uniform-loop cooling current when the
  hot object is a qubit (closed form; all loop currents equal at optimum);
* the optimal catalyst-free unitary for an arbitrary hot object (pair the
  j-th largest hot eigenvalue with the j-th smallest and swap when
  profitable);
* catalytic enhancements that beat the optimal catalyst-free unitary
  whenever the relevant hot eigenvalue block is not fully degenerate,
  including the closed form for the degenerate three-level hot object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .cnu import PlanRotation, TransformPlan
from .currents import (
    Chain,
    Current,
    JointIndexCodec,
    JointState,
    Loop,
    TwoLevelRotation,
    apply_rotation,
    catalyst_marginal_delta,
    solve_uniform_loop,
)
from .errors import InvalidInputError, OutsideRegimeError
from .states import EPS, DiagonalState

REGION_TOL = 1e-12


@dataclass(frozen=True)
class OptimalCatalystSolution:
    """Rank-n catalyst spectrum maximizing the uniform-loop cooling current."""

    n: int
    spectrum: Tuple[float, ...]
    j_cool_max: float
    r_h: float
    region: str  # "inside" | "boundary" | "outside"

    @property
    def in_cooling_region(self) -> bool:
        return self.region == "inside"


def _geom_sum(r: float, k: int) -> float:
    """(1 - r^k) / (1 - r) evaluated stably for every r including r = 1."""
    return math.fsum(r**i for i in range(k))


def optimal_qubit_catalyst(p2c: float, p2h: float, n: int) -> OptimalCatalystSolution:
    """Closed-form optimum for qubit cold + qubit hot + rank-n catalyst.

    The loop consists of the cooling swap |2_c 1_h 1_v> -> |1_c 2_h n_v> and
    the factored restoring swaps on hot x catalyst; at the optimum every
    swap current equals the cooling current.  Spectrum and current follow
    from the equal-current recursion plus normalization; geometric partial
    sums are evaluated termwise so the degenerate hot limit r_h -> 1 needs
    no special casing.
    """
    if not (0.0 < p2c <= p2h <= 0.5):
        raise InvalidInputError("need 0 < p2c <= p2h <= 1/2")
    if n < 2:
        raise InvalidInputError("catalyst rank must be at least 2")
    p1c, p1h = 1.0 - p2c, 1.0 - p2h
    r = p2h / p1h
    # Equal-current condition solved for j = J / p_n^v.
    j = (p2c * p1h - p1c * p2h * r ** (n - 1)) / (
        r ** (n - 1) + p2c * _geom_sum(r, n - 1)
    )
    # Unnormalized spectrum with the bottom level set to 1.
    q = [0.0] * n
    q[n - 1] = 1.0
    for k in range(1, n):
        q[n - 1 - k] = (r ** (1 - k) / p2h) * (p1h - _geom_sum(r, k) * j)
    total = math.fsum(q)
    spectrum = tuple(v / total for v in q)
    j_max = j / total
    if j_max > REGION_TOL:
        region = "inside"
    elif j_max >= -REGION_TOL:
        region = "boundary"
    else:
        region = "outside"
    return OptimalCatalystSolution(n, spectrum, j_max, r, region)


def qubit_catalyst_loop_currents(
    p2c: float, p2h: float, spectrum: Tuple[float, ...]
) -> List[float]:
    """Swap currents of the qubit-qubit loop for a given catalyst spectrum."""
    p1c, p1h = 1.0 - p2c, 1.0 - p2h
    n = len(spectrum)
    cooling = p2c * p1h * spectrum[0] - p1c * p2h * spectrum[n - 1]
    restoring = [p1h * spectrum[k + 1] - p2h * spectrum[k] for k in range(n - 1)]
    return [cooling] + restoring


@dataclass(frozen=True)
class HotOnlyPlan:
    """Optimal catalyst-free cooling of a qubit against an arbitrary hot object.

    ``swaps`` lists 0-based hot-index pairs (j_down, j_up): the joint swap
    |2_c (j_down+1)_h> <-> |1_c (j_up+1)_h|.  ``sectors`` holds the post-swap
    joint values per cold level.
    """

    swaps: Tuple[Tuple[int, int], ...]
    delta_p1c: float
    sectors: Tuple[Tuple[float, ...], Tuple[float, ...]]


def optimal_hot_only_cooling(pc: DiagonalState, ph: DiagonalState) -> HotOnlyPlan:
    """Pair j-th largest hot eigenvalue with j-th smallest; swap if profitable."""
    if pc.dim != 2:
        raise InvalidInputError("cold object must be a qubit")
    dh = ph.dim
    p1c, p2c = pc[0], pc[1]
    sector1 = [p1c * ph[j] for j in range(dh)]
    sector2 = [p2c * ph[j] for j in range(dh)]
    swaps: List[Tuple[int, int]] = []
    delta = 0.0
    for j in range(dh // 2):
        jd, ju = j, dh - 1 - j
        gain = p2c * ph[jd] - p1c * ph[ju]
        if gain > EPS:
            sector2[jd], sector1[ju] = sector1[ju], sector2[jd]
            swaps.append((jd, ju))
            delta += gain
    return HotOnlyPlan(tuple(swaps), delta, (tuple(sector1), tuple(sector2)))


def general_enhancement_applicable(ph: DiagonalState) -> bool:
    """True iff the extreme hot eigenvalue block is not fully degenerate.

    Block size is (d_h + 1)/2 for odd d_h and d_h/2 for even d_h, taken from
    either end of the sorted spectrum.
    """
    dh = ph.dim
    if dh < 3:
        raise InvalidInputError("hot object needs at least three levels")
    m = (dh + 1) // 2
    top = ph.probs[:m]
    bottom = ph.probs[-m:]
    return (max(top) - min(top) > EPS) or (max(bottom) - min(bottom) > EPS)


@dataclass(frozen=True)
class EnhancementResult:
    """Closed-form catalytic enhancement for the degenerate 3-level hot object."""

    j_cool: float
    jp_cool: float
    jp_res_left: float
    jp_res_right: float
    final_p1c: float
    optimal_p1v: float
    supplied_p1v: float
    p1v_matches: bool


def optimal_enhancement_p1v(p2c: float, x: float) -> float:
    """Catalyst ground population equalizing the enhancement loop currents."""
    p2h = 1.0 / (2.0 + x)
    p3h = x / (2.0 + x)
    return p2h * (1.0 + p2c) / (p2h * (1.0 + 3.0 * p2c) + p2c * p3h)


def catalytic_enhancement_degenerate3(
    p2c: float, x: float, p1v: float
) -> EnhancementResult:
    """Two-stage cooling: optimal swap, then the qubit-catalyst loop increment.

    Hot spectrum (1, 1, x)/(2+x).  The loop increment is evaluated at the
    equalizing catalyst; the supplied p1v is validated against it.
    """
    if not 0.0 < x < 1.0:
        raise InvalidInputError("need 0 < x < 1")
    if not 0.0 < p2c < 0.5:
        raise InvalidInputError("need 0 < p2c < 1/2")
    if not 0.5 <= p1v < 1.0:
        raise InvalidInputError("catalyst ground population must lie in [1/2, 1)")
    p1c = 1.0 - p2c
    if x * p1c > p2c + EPS:
        raise OutsideRegimeError("requires x <= p2c/p1c (cooling swap regime)")
    p1h = p2h = 1.0 / (2.0 + x)
    p3h = x / (2.0 + x)
    j_cool = p2c * p1h - p1c * p3h
    pv1 = optimal_enhancement_p1v(p2c, x)
    pv2 = 1.0 - pv1
    jp_left = p1c * p1h * pv2 - p2c * p1h * pv1
    jp_right = p2c * (p2h * pv2 - p3h * pv1)
    jp_cool = (
        (p2h * p1c - p3h * p2c) / ((1.0 + p2c) * p2h + p2c) * p2c * p2h
    )
    return EnhancementResult(
        j_cool=j_cool,
        jp_cool=jp_cool,
        jp_res_left=jp_left,
        jp_res_right=jp_right,
        final_p1c=p1c + j_cool + jp_cool,
        optimal_p1v=pv1,
        supplied_p1v=p1v,
        p1v_matches=abs(p1v - pv1) <= 1e-12,
    )


def simulate_enhancement_degenerate3(p2c: float, x: float) -> Tuple[float, float, float]:
    """Explicit 12-dimensional simulation of the two-stage enhancement.

    Returns (realized loop cooling current, total Delta p_1^c, catalyst
    marginal max deviation).
    """
    p1c = 1.0 - p2c
    p1h = p2h = 1.0 / (2.0 + x)
    p3h = x / (2.0 + x)
    pv1 = optimal_enhancement_p1v(p2c, x)
    pc = DiagonalState((p1c, p2c))
    ph = DiagonalState((p1h, p2h, p3h))
    pv = DiagonalState((pv1, 1.0 - pv1))
    codec = JointIndexCodec((2, 3, 2))
    state = JointState.from_product(pc, ph, pv)
    # Stage 1: optimal catalyst-free swap |2_c 1_h> <-> |1_c 3_h> (both v levels).
    for k in (0, 1):
        state = apply_rotation(
            state, TwoLevelRotation(codec.encode((1, 0, k)), codec.encode((0, 2, k)), 1.0)
        )
    mid = state
    p1c_mid = mid.marginal(0)[0]
    # Stage 2: three full swaps forming the enhancement loop.
    swaps = [
        ((1, 1, 0), (0, 2, 1)),  # cooling
        ((0, 0, 1), (0, 2, 0)),  # restoring, left branch
        ((1, 1, 1), (1, 2, 0)),  # restoring, right branch
    ]
    jp_realized = mid[codec.encode(swaps[0][0])] - mid[codec.encode(swaps[0][1])]
    after = mid
    for src, dst in swaps:
        after = apply_rotation(
            after, TwoLevelRotation(codec.encode(src), codec.encode(dst), 1.0)
        )
    deviation = float(np.max(np.abs(catalyst_marginal_delta(mid, after, -1))))
    total_delta = after.marginal(0)[0] - (1.0 - p2c)
    assert abs(p1c_mid - (p1c + p2c * p1h - p1c * p3h)) < 1e-12
    return jp_realized, float(total_delta), deviation


@dataclass(frozen=True)
class GeneralEnhancement:
    """General catalytic enhancement on top of the optimal hot-only plan."""

    base_delta_p1c: float
    extra_delta_p1c: float
    total_delta_p1c: float
    catalyst: DiagonalState
    plan: TransformPlan
    catalyst_deviation: float


def general_enhancement(
    pc: DiagonalState, ph: DiagonalState, dv: Optional[int] = None
) -> GeneralEnhancement:
    """Build and simulate a catalytic plan beating the hot-only optimum.

    After the optimal catalyst-free swaps, the untouched joint eigenvalues
    in each cold sector form two blocks; a cooling current from the largest
    untouched excited value into the smallest untouched ground value is
    restored by a chain inside whichever block is not fully degenerate.
    """
    if pc.dim != 2:
        raise InvalidInputError("cold object must be a qubit")
    if not general_enhancement_applicable(ph):
        raise OutsideRegimeError("extreme hot eigenvalue blocks are fully degenerate")
    base = optimal_hot_only_cooling(pc, ph)
    dh = ph.dim
    touched_up = {ju for _, ju in base.swaps}
    touched_down = {jd for jd, _ in base.swaps}
    a_less = {j: base.sectors[0][j] for j in range(dh) if j not in touched_up}
    a_greater = {j: base.sectors[1][j] for j in range(dh) if j not in touched_down}
    j_less_min = min(a_less, key=a_less.get)
    j_greater_max = max(a_greater, key=a_greater.get)
    # Restoring chain lives in whichever untouched block is non-degenerate.
    if max(a_less.values()) - min(a_less.values()) > EPS:
        chain_cold = 0
        block = a_less
    elif max(a_greater.values()) - min(a_greater.values()) > EPS:
        chain_cold = 1
        block = a_greater
    else:
        raise OutsideRegimeError("no non-degenerate untouched block available")
    j_max = max(block, key=block.get)
    j_min = min(block, key=block.get)
    chain_bound = block[j_min] / block[j_max]
    cool_bound = a_less[j_less_min] / a_greater[j_greater_max]
    t = math.sqrt(chain_bound)
    if dv is None:
        ratio = 1.0 / t
        dv = max(2, math.floor(math.log(max(cool_bound, 1.0)) / math.log(ratio)) + 2)
        while ratio ** (dv - 1) <= cool_bound * (1.0 + 1e-12):
            dv += 1
    w = np.array([t**k for k in range(dv)])
    pv = DiagonalState(tuple(w / w.sum()))

    codec = JointIndexCodec((2, dh, dv))
    state = JointState.from_product(pc, ph, pv)
    for jd, ju in base.swaps:
        for k in range(dv):
            state = apply_rotation(
                state,
                TwoLevelRotation(codec.encode((1, jd, k)), codec.encode((0, ju, k)), 1.0),
            )
    mid = state
    cool = Current(
        codec.encode((1, j_greater_max, 0)), codec.encode((0, j_less_min, dv - 1))
    )
    links = [
        [
            Current(
                codec.encode((chain_cold, j_max, k + 1)),
                codec.encode((chain_cold, j_min, k)),
            )
        ]
        for k in range(dv - 1)
    ]
    rotations = solve_uniform_loop(mid, Loop(cool, Chain(links)), catalyst_axis=-1)
    after = mid
    for rot in rotations:
        after = apply_rotation(after, rot)
    deviation = float(np.max(np.abs(catalyst_marginal_delta(mid, after, -1))))
    extra = float(after.marginal(0)[0] - mid.marginal(0)[0])
    grouped = [PlanRotation("cooling", ((cool.src, cool.dst),), rotations[0].intensity)]
    for rot in rotations[1:]:
        grouped.append(PlanRotation("restoring", ((rot.src, rot.dst),), rot.intensity))
    plan = TransformPlan(
        codec.dims,
        ("c", "h", "v"),
        0,
        2,
        tuple(grouped),
        min(mid[c.src] - mid[c.dst] for c in [cool] + [l[0] for l in links]),
        "increase cold ground population beyond the hot-only optimum",
    )
    return GeneralEnhancement(
        base_delta_p1c=base.delta_p1c,
        extra_delta_p1c=extra,
        total_delta_p1c=base.delta_p1c + extra,
        catalyst=pv,
        plan=plan,
        catalyst_deviation=deviation,
    )
