"""Existence, synthesis and execution of catalytic non-unital transformations.

A certificate names one cooling current (from cold level i+1 into level i,
riding the extreme hot levels and catalyst levels l -> l'+1) together with a
restoring chain that carries the displaced catalyst population back, one
level at a time, for every k in [l, l'].  Three chain kinds exist:

* ``hot-only``  -- factored rotations on hot x catalyst, one per cold level;
* ``left``      -- single rotations inside the low cold levels;
* ``right``     -- single rotations inside the high cold levels;
* ``none``      -- the cooling pair shares its catalyst level, no chain.

All index bookkeeping is 0-based internally; certificates and serialized
plans expose 1-based labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .currents import (
    Chain,
    Current,
    JointIndexCodec,
    JointState,
    Loop,
    TwoLevelRotation,
    apply_rotation,
    catalyst_marginal_delta,
    multi_index_label,
    solve_uniform_loop,
)
from .errors import (
    InconsistentCertificateError,
    InvalidInputError,
    NotSynthesizableError,
    PlanVerificationError,
)
from .states import EPS, DiagonalState, EnergyLevels

CATALYSIS_TOL = 1e-10
VIOLATION_TOL = 1e-12

# Preference order when several chain kinds tie on loop current.
_KIND_RANK = {"none": 0, "hot-only": 1, "left": 2, "right": 3}

Multi = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class Cnu1Certificate:
    """Indices witnessing a CNU1 transformation (1-based labels).

    ``i`` is the cold level gaining population (the cooling current runs
    i+1 -> i), ``l``/``lp`` delimit the catalyst chain; ``lp = l - 1``
    encodes the chain-free case of a non-passive cold/hot pair.
    """

    i: int
    l: int
    lp: int
    chain_kind: str
    dims: Tuple[int, ...]
    axis_names: Tuple[str, ...]
    loop_current: float
    cooling_edge: Tuple[Multi, Multi]
    chain_edges: Tuple[Tuple[int, Multi, Multi], ...]


@dataclass(frozen=True)
class PlanRotation:
    """One plan record: parallel flat pairs sharing a single intensity."""

    kind: str
    pairs: Tuple[Tuple[int, int], ...]
    intensity: float


@dataclass(frozen=True)
class TransformPlan:
    """One cooling rotation plus restoring rotations with solved intensities."""

    dims: Tuple[int, ...]
    axis_names: Tuple[str, ...]
    cold_axis: int
    catalyst_axis: int
    rotations: Tuple[PlanRotation, ...]
    expected_cooling_current: float
    target: str

    def flat_rotations(self) -> List[TwoLevelRotation]:
        out: List[TwoLevelRotation] = []
        for rot in self.rotations:
            for src, dst in rot.pairs:
                out.append(TwoLevelRotation(src, dst, rot.intensity))
        return out


@dataclass(frozen=True)
class VerificationReport:
    catalyst_max_deviation: float
    violated_prefix: Optional[int]
    prefix_delta: float
    delta_mean_energy: Optional[float] = None
    delta_ground_population: Optional[float] = None


@dataclass(frozen=True)
class DiagramData:
    """Log-coordinate diagram: cold-hot columns, catalyst rows, arrows."""

    columns: Tuple[Tuple[str, float], ...]
    rows: Tuple[Tuple[str, float], ...]
    arrows: Tuple[Tuple[str, str, str], ...]


def _log(p: float) -> float:
    return math.log(p) if p > 0.0 else -math.inf


# ---------------------------------------------------------------------------
# candidate current algebra (0-based indices throughout)
# ---------------------------------------------------------------------------


def _cooling_current(pc, ph, pv, i0: int, l0: int, lp0: int) -> float:
    """Cooling current |(i+2) 1_h (l+1)> -> |(i+1) d_h (lp+2)> in paper labels."""
    hot_hi = ph[0] if ph is not None else 1.0
    hot_lo = ph[-1] if ph is not None else 1.0
    return pv[l0] * pc[i0 + 1] * hot_hi - pv[lp0 + 1] * pc[i0] * hot_lo


def _chain_current(pc, ph, pv, i0: int, k0: int, kind: str) -> float:
    if kind == "hot-only":
        return ph[0] * pv[k0 + 1] - ph[-1] * pv[k0]
    hot_hi = ph[0] if ph is not None else 1.0
    hot_lo = ph[-1] if ph is not None else 1.0
    if kind == "left":
        return pc[0] * hot_hi * pv[k0 + 1] - pc[i0] * hot_lo * pv[k0]
    if kind == "right":
        return pc[i0 + 1] * hot_hi * pv[k0 + 1] - pc[-1] * hot_lo * pv[k0]
    raise InvalidInputError(f"unknown chain kind {kind!r}")


def _certificate(
    pc: Sequence[float],
    ph: Optional[Sequence[float]],
    pv: Sequence[float],
    i0: int,
    l0: int,
    lp0: int,
    kind: str,
    loop_current: float,
) -> Cnu1Certificate:
    dc = len(pc)
    dv = len(pv)
    if ph is not None:
        dims = (dc, len(ph), dv)
        names = ("c", "h", "v")
        dh = len(ph)
        cool = ((i0 + 2, 1, l0 + 1), (i0 + 1, dh, lp0 + 2))
        edges = []
        for k0 in range(l0, lp0 + 1):
            if kind == "hot-only":
                edges.append((k0 + 1, (None, 1, k0 + 2), (None, dh, k0 + 1)))
            elif kind == "left":
                edges.append((k0 + 1, (1, 1, k0 + 2), (i0 + 1, dh, k0 + 1)))
            elif kind == "right":
                edges.append((k0 + 1, (i0 + 2, 1, k0 + 2), (dc, dh, k0 + 1)))
    else:
        dims = (dc, dv)
        names = ("s", "v")
        cool = ((i0 + 2, l0 + 1), (i0 + 1, lp0 + 2))
        edges = []
        for k0 in range(l0, lp0 + 1):
            if kind == "left":
                edges.append((k0 + 1, (1, k0 + 2), (i0 + 1, k0 + 1)))
            elif kind == "right":
                edges.append((k0 + 1, (i0 + 2, k0 + 2), (dc, k0 + 1)))
    return Cnu1Certificate(
        i=i0 + 1,
        l=l0 + 1,
        lp=lp0 + 1,
        chain_kind=kind,
        dims=dims,
        axis_names=names,
        loop_current=loop_current,
        cooling_edge=cool,
        chain_edges=tuple(edges),
    )


def _search(pc, ph, pv) -> Optional[Cnu1Certificate]:
    """Enumerate (i, l, l', kind); keep the maximal loop current."""
    dc, dv = len(pc), len(pv)
    kinds = ("hot-only", "left", "right") if ph is not None else ("left", "right")
    best = None
    best_key = None
    for i0 in range(dc - 1):
        for l0 in range(dv - 1):
            for lp0 in range(l0 - 1, dv - 1):
                jc = _cooling_current(pc, ph, pv, i0, l0, lp0)
                if jc <= EPS:
                    continue
                if lp0 < l0:
                    cands = [("none", jc)]
                else:
                    cands = []
                    for kind in kinds:
                        js = [
                            _chain_current(pc, ph, pv, i0, k0, kind)
                            for k0 in range(l0, lp0 + 1)
                        ]
                        if all(j > EPS for j in js):
                            cands.append((kind, min(jc, min(js))))
                for kind, loop_j in cands:
                    key = (-loop_j, _KIND_RANK[kind], i0, l0, lp0)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = _certificate(pc, ph, pv, i0, l0, lp0, kind, loop_j)
    return best


def check_cnu1(
    pc: DiagonalState, ph: DiagonalState, pv: DiagonalState
) -> Optional[Cnu1Certificate]:
    """Decide whether a CNU1 transformation exists for rho_c x rho_h x rho_v."""
    if pv.dim < 2:
        raise InvalidInputError("catalyst needs at least two levels")
    return _search(pc.probs, ph.probs, pv.probs)


def check_cnu1_general(ps: DiagonalState, pv: DiagonalState) -> Optional[Cnu1Certificate]:
    """CNU1 existence for a general system spectrum rho_s x rho_v."""
    if pv.dim < 2:
        raise InvalidInputError("catalyst needs at least two levels")
    return _search(ps.probs, None, pv.probs)


# ---------------------------------------------------------------------------
# plan construction and execution
# ---------------------------------------------------------------------------


def _loop_from_certificate(
    pc, ph, pv, cert: Cnu1Certificate
) -> Tuple[JointIndexCodec, Current, List[List[Current]]]:
    dc, dv = len(pc), len(pv)
    i0, l0, lp0 = cert.i - 1, cert.l - 1, cert.lp - 1
    if ph is not None:
        codec = JointIndexCodec((dc, len(ph), dv))
        dh = len(ph)
        cool = Current(codec.encode((i0 + 1, 0, l0)), codec.encode((i0, dh - 1, lp0 + 1)))
        links: List[List[Current]] = []
        for k0 in range(l0, lp0 + 1):
            if cert.chain_kind == "hot-only":
                links.append(
                    [
                        Current(codec.encode((c, 0, k0 + 1)), codec.encode((c, dh - 1, k0)))
                        for c in range(dc)
                    ]
                )
            elif cert.chain_kind == "left":
                links.append(
                    [Current(codec.encode((0, 0, k0 + 1)), codec.encode((i0, dh - 1, k0)))]
                )
            elif cert.chain_kind == "right":
                links.append(
                    [
                        Current(
                            codec.encode((i0 + 1, 0, k0 + 1)),
                            codec.encode((dc - 1, dh - 1, k0)),
                        )
                    ]
                )
    else:
        codec = JointIndexCodec((dc, dv))
        cool = Current(codec.encode((i0 + 1, l0)), codec.encode((i0, lp0 + 1)))
        links = []
        for k0 in range(l0, lp0 + 1):
            if cert.chain_kind == "left":
                links.append([Current(codec.encode((0, k0 + 1)), codec.encode((i0, k0)))])
            elif cert.chain_kind == "right":
                links.append(
                    [Current(codec.encode((i0 + 1, k0 + 1)), codec.encode((dc - 1, k0)))]
                )
    return codec, cool, links


def _revalidate(pc, ph, pv, cert: Cnu1Certificate) -> None:
    i0, l0, lp0 = cert.i - 1, cert.l - 1, cert.lp - 1
    ok = (
        0 <= i0 < len(pc) - 1
        and 0 <= l0 < len(pv) - 1
        and l0 - 1 <= lp0 < len(pv) - 1
        and _cooling_current(pc, ph, pv, i0, l0, lp0) > EPS
    )
    if ok and cert.chain_kind != "none":
        ok = all(
            _chain_current(pc, ph, pv, i0, k0, cert.chain_kind) > EPS
            for k0 in range(l0, lp0 + 1)
        )
    if not ok:
        raise InconsistentCertificateError(
            "certificate inequalities do not hold for the supplied spectra"
        )


def build_plan(
    pc: DiagonalState,
    ph: Optional[DiagonalState],
    pv: DiagonalState,
    cert: Cnu1Certificate,
) -> TransformPlan:
    """Cooling rotation plus restoring rotations with solved intensities."""
    pcv = pc.probs
    phv = ph.probs if ph is not None else None
    pvv = pv.probs
    _revalidate(pcv, phv, pvv, cert)
    codec, cool, links = _loop_from_certificate(pcv, phv, pvv, cert)
    factors = (pc, ph, pv) if ph is not None else (pc, pv)
    state = JointState.from_product(*factors)
    target = f"increase cold prefix sum of levels 1..{cert.i}"
    if cert.chain_kind == "none":
        jmin = state[cool.src] - state[cool.dst]
        rotations = (PlanRotation("cooling", ((cool.src, cool.dst),), 1.0),)
        return TransformPlan(
            codec.dims, cert.axis_names, 0, len(codec.dims) - 1, rotations, jmin, target
        )
    loop = Loop(cool, Chain(links))
    solved = solve_uniform_loop(state, loop, catalyst_axis=-1)
    jmin = min(
        sum(state[c.src] - state[c.dst] for c in link) for link in [[cool]] + links
    )
    grouped: List[PlanRotation] = [
        PlanRotation("cooling", ((cool.src, cool.dst),), solved[0].intensity)
    ]
    pos = 1
    for link in links:
        rots = solved[pos : pos + len(link)]
        pos += len(link)
        grouped.append(
            PlanRotation(
                "restoring", tuple((r.src, r.dst) for r in rots), rots[0].intensity
            )
        )
    return TransformPlan(
        codec.dims,
        cert.axis_names,
        0,
        len(codec.dims) - 1,
        tuple(grouped),
        jmin,
        target,
    )


def execute_plan(
    state: JointState,
    plan: TransformPlan,
    cold_energies: Optional[EnergyLevels] = None,
    ground_degeneracy: Optional[int] = None,
) -> Tuple[JointState, VerificationReport]:
    """Apply the plan and verify catalysis plus non-unitality."""
    if state.codec.dims != plan.dims:
        raise InvalidInputError("state does not match plan dimensions")
    after = state
    for rot in plan.flat_rotations():
        after = apply_rotation(after, rot)
    delta_v = catalyst_marginal_delta(state, after, plan.catalyst_axis)
    dev = float(np.max(np.abs(delta_v))) if delta_v.size else 0.0
    if dev > CATALYSIS_TOL:
        raise PlanVerificationError(f"catalyst marginal moved by {dev:.3e}")
    before_c = state.marginal(plan.cold_axis)
    after_c = after.marginal(plan.cold_axis)
    dpre = np.cumsum(after_c) - np.cumsum(before_c)
    violated = None
    for idx, d in enumerate(dpre[:-1]):
        if d >= VIOLATION_TOL:
            violated = idx + 1
            break
    prefix_delta = float(np.max(dpre[:-1])) if len(dpre) > 1 else 0.0
    d_energy = None
    if cold_energies is not None:
        if cold_energies.dim != plan.dims[plan.cold_axis]:
            raise InvalidInputError("cold energies dimension mismatch")
        e = np.asarray(cold_energies.energies)
        d_energy = float(np.dot(after_c - before_c, e))
    d_ground = None
    if ground_degeneracy is not None:
        g = int(ground_degeneracy)
        if not 1 <= g < plan.dims[plan.cold_axis]:
            raise InvalidInputError("ground degeneracy out of range")
        d_ground = float(dpre[g - 1])
    report = VerificationReport(dev, violated, prefix_delta, d_energy, d_ground)
    return after, report


# ---------------------------------------------------------------------------
# catalyst synthesis (geometric spectra)
# ---------------------------------------------------------------------------


def _fully_mixed(p: DiagonalState) -> bool:
    return p[0] - p[p.dim - 1] <= EPS


def _geometric_state(t: float, dv: int) -> DiagonalState:
    w = np.array([t**k for k in range(dv)])
    return DiagonalState(tuple(w / w.sum()))


def synthesize_catalyst(
    pc: DiagonalState, ph: DiagonalState
) -> Tuple[DiagonalState, Cnu1Certificate]:
    """Geometric-spectrum catalyst enabling a CNU1 transformation.

    The common ratio t is the log-space midpoint between 1 and the binding
    chain bound; the rank is the least d_v whose extreme-level ratio beats
    the cooling bound at the best cold index i.
    """
    if _fully_mixed(ph) and (pc.dim < 3 or _fully_mixed(pc)):
        raise NotSynthesizableError(
            "need a non-mixed hot object, or d_c >= 3 with a non-mixed cold object"
        )
    hr = ph[ph.dim - 1] / ph[0]
    best = None  # (cooling_bound, i0, chain_bound)
    for i0 in range(pc.dim - 1):
        bounds = [hr, hr * pc[i0] / pc[0], hr * pc[pc.dim - 1] / pc[i0 + 1]]
        b_chain = min(bounds)
        if b_chain >= 1.0 - EPS:
            continue
        c_bound = hr * pc[i0] / pc[i0 + 1]
        if best is None or (c_bound, i0) < (best[0], best[1]):
            best = (c_bound, i0, b_chain)
    if best is None:
        raise NotSynthesizableError("no feasible restoring chain bound below 1")
    c_bound, _, b_chain = best
    t = math.sqrt(b_chain)
    ratio = 1.0 / t
    dv = max(2, math.floor(math.log(max(c_bound, 1.0)) / math.log(ratio)) + 2)
    while ratio ** (dv - 1) <= c_bound * (1.0 + 1e-12):
        dv += 1
    pv = _geometric_state(t, dv)
    cert = check_cnu1(pc, ph, pv)
    if cert is None:
        raise NotSynthesizableError("synthesized catalyst failed the existence check")
    return pv, cert


def ground_subspace_plan(
    pc: DiagonalState, g: int, pv: Optional[DiagonalState] = None
) -> Tuple[DiagonalState, TransformPlan]:
    """Cooling into a g-fold degenerate ground subspace with a cold-only chain.

    Builds the loop with cooling current |(g+1) 1_v> -> |g d_v> and the
    restoring chain |(g+1) (k+1)_v> -> |d_c k_v>; synthesizes a geometric
    catalyst when none is given.
    """
    dc = pc.dim
    if not 1 <= g <= dc - 2:
        raise InvalidInputError("need 1 <= g <= d_c - 2 for the cold-only chain")
    chain_bound = pc[dc - 1] / pc[g]
    cool_bound = pc[g - 1] / pc[g]
    if pv is None:
        if chain_bound >= 1.0 - EPS:
            raise NotSynthesizableError("restoring chain bound must be below 1")
        t = math.sqrt(chain_bound)
        ratio = 1.0 / t
        dv = max(2, math.floor(math.log(max(cool_bound, 1.0)) / math.log(ratio)) + 2)
        while ratio ** (dv - 1) <= cool_bound * (1.0 + 1e-12):
            dv += 1
        pv = _geometric_state(t, dv)
    dv = pv.dim
    codec = JointIndexCodec((dc, dv))
    cool = Current(codec.encode((g, 0)), codec.encode((g - 1, dv - 1)))
    links = [
        [Current(codec.encode((g, k0 + 1)), codec.encode((dc - 1, k0)))]
        for k0 in range(dv - 1)
    ]
    state = JointState.from_product(pc, pv)
    solved = solve_uniform_loop(state, Loop(cool, Chain(links)), catalyst_axis=-1)
    jmin = min(
        state[cool.src] - state[cool.dst],
        min(state[l[0].src] - state[l[0].dst] for l in links),
    )
    grouped = [PlanRotation("cooling", ((cool.src, cool.dst),), solved[0].intensity)]
    for rot in solved[1:]:
        grouped.append(PlanRotation("restoring", ((rot.src, rot.dst),), rot.intensity))
    plan = TransformPlan(
        codec.dims,
        ("c", "v"),
        0,
        1,
        tuple(grouped),
        jmin,
        f"increase ground-subspace population of levels 1..{g}",
    )
    return pv, plan


# ---------------------------------------------------------------------------
# diagrams and serialization
# ---------------------------------------------------------------------------


def _rotation_labels(plan: TransformPlan, rot: PlanRotation) -> Tuple[str, str]:
    codec = JointIndexCodec(plan.dims)
    srcs = [codec.decode(s) for s, _ in rot.pairs]
    dsts = [codec.decode(d) for _, d in rot.pairs]

    def collapse(multis):
        out: List[Optional[int]] = []
        for axis in range(len(plan.dims)):
            vals = {m[axis] for m in multis}
            out.append(vals.pop() if len(vals) == 1 else None)
        return tuple(out)

    return (
        multi_index_label(collapse(srcs), plan.axis_names),
        multi_index_label(collapse(dsts), plan.axis_names),
    )


def diagram_export(
    pc: DiagonalState,
    ph: DiagonalState,
    pv: DiagonalState,
    plan: Optional[TransformPlan] = None,
) -> DiagramData:
    """Column/row log-coordinates of the cold-hot and catalyst spectra."""
    cols = []
    for i in range(pc.dim):
        for j in range(ph.dim):
            cols.append((f"{i + 1}c{j + 1}h", _log(pc[i] * ph[j])))
    cols.sort(key=lambda kv: -kv[1] if math.isfinite(kv[1]) else math.inf)
    rows = [(f"{k + 1}v", _log(pv[k])) for k in range(pv.dim)]
    arrows: List[Tuple[str, str, str]] = []
    if plan is not None:
        state = JointState.from_product(pc, ph, pv)
        for rot in plan.rotations:
            if any(state[s] == 0.0 or state[d] == 0.0 for s, d in rot.pairs):
                continue
            src_label, dst_label = _rotation_labels(plan, rot)
            arrows.append((rot.kind, src_label, dst_label))
    return DiagramData(tuple(cols), tuple(rows), tuple(arrows))


def diagram_to_csv(data: DiagramData) -> str:
    lines = ["columns", "label,log_value"]
    for label, v in data.columns:
        lines.append(f"{label},{fmt(v)}")
    lines += ["rows", "label,log_value"]
    for label, v in data.rows:
        lines.append(f"{label},{fmt(v)}")
    lines += ["arrows", "kind,src_label,dst_label"]
    for kind, src, dst in data.arrows:
        lines.append(f"{kind},{src},{dst}")
    return "\n".join(lines) + "\n"


def fmt(x: float) -> str:
    """12-significant-digit deterministic number formatting."""
    if x == -math.inf:
        return "-inf"
    if x == math.inf:
        return "inf"
    return format(float(x), ".12g")


def serialize_plan(plan: TransformPlan) -> str:
    """Line-oriented plan text with paper-style 1-based labels."""
    head = (
        "dims="
        + ",".join(str(d) for d in plan.dims)
        + " axes="
        + ",".join(plan.axis_names)
        + f" cooling_current={fmt(plan.expected_cooling_current)}"
    )
    lines = [head]
    for rot in plan.rotations:
        src_label, dst_label = _rotation_labels(plan, rot)
        lines.append(f"{rot.kind} {src_label} -> {dst_label} a2={fmt(rot.intensity)}")
    return "\n".join(lines) + "\n"
