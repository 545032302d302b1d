"""Joint-state indexing, two-level rotations, currents, chains and loops.

Every unitary handled by the package is a direct sum of real two-level
rotations between basis states of a diagonal joint state, so the full
evolution reduces exactly to the population map
``p'_dst = p_dst + a^2 (p_src - p_dst)``.  No complex amplitudes are stored.

Flat index layout is row-major with the factor order fixed by the codec
(conventionally cold, hot, catalyst; last factor fastest).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidInputError, NoLoopError
from .states import EPS, DiagonalState

# Negative populations from floating-point cancellation are clamped to zero
# below this magnitude; anything larger is an internal error.
CLAMP = 1e-15

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class JointIndexCodec:
    """Bijection between multi-indices and flat indices (row-major)."""

    dims: Tuple[int, ...]

    def __init__(self, dims: Sequence[int]):
        dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in dims) or int(np.prod(dims)) < 2:
            raise InvalidInputError("codec dims must be positive with product >= 2")
        object.__setattr__(self, "dims", dims)

    @property
    def size(self) -> int:
        return int(np.prod(self.dims))

    def encode(self, multi: Sequence[int]) -> int:
        if len(multi) != len(self.dims):
            raise InvalidInputError("multi-index arity mismatch")
        flat = 0
        for x, d in zip(multi, self.dims):
            if not 0 <= x < d:
                raise InvalidInputError(f"index {x} out of range for dim {d}")
            flat = flat * d + x
        return flat

    def decode(self, flat: int) -> MultiIndex:
        if not 0 <= flat < self.size:
            raise InvalidInputError("flat index out of range")
        out: List[int] = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))


@dataclass(frozen=True)
class JointState:
    """Flat probability vector over a tensor-product index space."""

    codec: JointIndexCodec
    probs: Tuple[float, ...]

    def __init__(self, codec: JointIndexCodec, probs: Sequence[float]):
        arr = np.asarray(probs, dtype=float)
        if arr.shape != (codec.size,):
            raise InvalidInputError("probability vector does not match codec size")
        if arr.min() < -CLAMP:
            raise InvalidInputError("negative probability beyond clamp tolerance")
        arr = np.where(arr < 0.0, 0.0, arr)
        if abs(arr.sum() - 1.0) > EPS * max(1, codec.size):
            raise InvalidInputError("joint probabilities must sum to 1")
        object.__setattr__(self, "codec", codec)
        object.__setattr__(self, "probs", tuple(arr))

    @staticmethod
    def from_product(*factors: DiagonalState) -> "JointState":
        codec = JointIndexCodec([f.dim for f in factors])
        p = np.array([1.0])
        for f in factors:
            p = np.kron(p, f.as_array())
        return JointState(codec, p)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    def marginal(self, axis: int) -> np.ndarray:
        arr = self.as_array().reshape(self.codec.dims)
        other = tuple(a for a in range(len(self.codec.dims)) if a != axis % len(self.codec.dims))
        return arr.sum(axis=other)

    def __getitem__(self, flat: int) -> float:
        return self.probs[flat]


@dataclass(frozen=True)
class TwoLevelRotation:
    """Real two-level rotation between two basis states, intensity a^2."""

    src: int
    dst: int
    intensity: float

    def __post_init__(self):
        if self.src == self.dst:
            raise InvalidInputError("rotation needs two distinct states")
        if not 0.0 <= self.intensity <= 1.0 + EPS:
            raise InvalidInputError("intensity must lie in [0, 1]")


@dataclass(frozen=True)
class Current:
    """Directed population transfer between two joint basis states."""

    src: int
    dst: int
    magnitude: float = 0.0

    def __post_init__(self):
        if self.src == self.dst:
            raise InvalidInputError("current needs two distinct states")
        if self.magnitude < 0.0:
            raise InvalidInputError("current magnitude must be non-negative")


# A link is a group of parallel currents sharing one rotation intensity
# (a factored unitary such as I_c x V_hv expands into one current per cold
# level, all rotated with the same a^2).
Link = Tuple[Current, ...]


def _as_link(link: Iterable[Current] | Current) -> Link:
    if isinstance(link, Current):
        return (link,)
    return tuple(link)


@dataclass(frozen=True)
class Chain:
    """Ordered restoring chain; each element is a parallel-current link."""

    links: Tuple[Link, ...]

    def __init__(self, links: Sequence[Iterable[Current] | Current]):
        object.__setattr__(self, "links", tuple(_as_link(l) for l in links))


@dataclass(frozen=True)
class Loop:
    """One cooling current plus a restoring chain (Definition 3 structure)."""

    cooling: Current
    restoring: Chain


def apply_rotation(state: JointState, rot: TwoLevelRotation) -> JointState:
    """Population map of a two-level rotation; pair sum exactly conserved."""
    n = state.codec.size
    if not (0 <= rot.src < n and 0 <= rot.dst < n):
        raise InvalidInputError("rotation index out of range")
    arr = np.array(state.probs, dtype=float)
    transfer = rot.intensity * (arr[rot.src] - arr[rot.dst])
    arr[rot.src] -= transfer
    arr[rot.dst] += transfer
    return JointState(state.codec, arr)


def apply_rotations(state: JointState, rots: Iterable[TwoLevelRotation]) -> JointState:
    for rot in rots:
        state = apply_rotation(state, rot)
    return state


def swap_current(state: JointState, src: int, dst: int) -> float:
    """Maximal realizable current of the pair: max(p_src - p_dst, 0)."""
    n = state.codec.size
    if not (0 <= src < n and 0 <= dst < n):
        raise InvalidInputError("index out of range")
    return max(state[src] - state[dst], 0.0)


def catalyst_marginal_delta(before: JointState, after: JointState, catalyst_axis: int = -1) -> np.ndarray:
    """Per-level change of the marginal along the catalyst axis."""
    if before.codec != after.codec:
        raise InvalidInputError("codec mismatch")
    return after.marginal(catalyst_axis) - before.marginal(catalyst_axis)


def _link_swap_current(state: JointState, link: Link) -> float:
    """Aggregate swap current of a parallel link."""
    total = 0.0
    for cur in link:
        diff = state[cur.src] - state[cur.dst]
        if diff < -EPS:
            raise NoLoopError("link contains a reversed current")
        total += max(diff, 0.0)
    return total


def _check_balance(codec: JointIndexCodec, loop: Loop, catalyst_axis: int) -> None:
    """Unit-magnitude flow must cancel on every catalyst level."""
    axis = catalyst_axis % len(codec.dims)
    net = np.zeros(codec.dims[axis])
    links: List[Link] = [(loop.cooling,)] + list(loop.restoring.links)
    for link in links:
        src_levels = {codec.decode(c.src)[axis] for c in link}
        dst_levels = {codec.decode(c.dst)[axis] for c in link}
        if len(src_levels) != 1 or len(dst_levels) != 1:
            raise NoLoopError("parallel link must share catalyst levels")
        net[src_levels.pop()] -= 1.0
        net[dst_levels.pop()] += 1.0
    if np.any(np.abs(net) > 0):
        raise NoLoopError("currents do not balance on every catalyst level")


def _check_disjoint(loop: Loop) -> None:
    seen: set[int] = set()
    links: List[Link] = [(loop.cooling,)] + list(loop.restoring.links)
    for link in links:
        for cur in link:
            for idx in (cur.src, cur.dst):
                if idx in seen:
                    raise NoLoopError("loop edges must act on disjoint state pairs")
                seen.add(idx)


def solve_uniform_loop(
    state: JointState, loop: Loop, catalyst_axis: int = -1
) -> List[TwoLevelRotation]:
    """Intensities a^2_x = J_min / J_x making every edge carry J_min.

    The returned rotations act on pairwise-disjoint pairs, so their
    application order is irrelevant; the composite map leaves the catalyst
    marginal unchanged.
    """
    _check_disjoint(loop)
    _check_balance(state.codec, loop, catalyst_axis)
    links: List[Link] = [(loop.cooling,)] + list(loop.restoring.links)
    currents = [_link_swap_current(state, link) for link in links]
    if any(c <= EPS for c in currents):
        raise NoLoopError("every loop edge needs a strictly positive swap current")
    jmin = min(currents)
    rotations: List[TwoLevelRotation] = []
    for link, cur_total in zip(links, currents):
        a2 = min(jmin / cur_total, 1.0)
        for cur in link:
            rotations.append(TwoLevelRotation(cur.src, cur.dst, a2))
    return rotations


def multi_index_label(multi: Sequence[Optional[int]], axis_names: Sequence[str]) -> str:
    """Paper-style 1-based label, e.g. (1, 0, 1) -> ``2c1h2v``; None -> ``*``."""
    parts = []
    for x, name in zip(multi, axis_names):
        parts.append(("*" if x is None else str(x + 1)) + name)
    return "".join(parts)
