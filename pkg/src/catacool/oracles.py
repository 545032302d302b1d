"""Independent brute-force verifiers.

These deliberately avoid the closed forms and certificate searches of the
main modules: passivity and hot-only optimality reduce to sorting arguments
on the joint spectrum, CNU1 existence is decided by exhaustive enumeration
of (cooling edge, restoring chain) candidates, and the optimal-catalyst
current is recomputed as a linear program (maximize the minimum loop
current over the catalyst simplex).
"""

from __future__ import annotations

from itertools import product
from typing import List, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .states import EPS

# ---------------------------------------------------------------------------
# sorting-based oracles
# ---------------------------------------------------------------------------


def min_cold_energy(pc: Sequence[float], ph: Sequence[float]) -> float:
    """Minimum of <H_c> (with e_i = i) over all joint permutations.

    The optimum assigns the d_h largest joint values to the lowest cold
    level, the next block to the next level, and so on.
    """
    joint = np.sort(np.outer(pc, ph).ravel())[::-1]
    dh = len(ph)
    return float(
        sum(i * joint[i * dh : (i + 1) * dh].sum() for i in range(len(pc)))
    )


def is_passive_oracle(pc: Sequence[float], ph: Sequence[float]) -> bool:
    initial = sum(i * p for i, p in enumerate(pc))
    return initial <= min_cold_energy(pc, ph) + 1e-12


def best_hot_only_delta(pc: Sequence[float], ph: Sequence[float]) -> float:
    """Best achievable ground-population gain over all joint permutations."""
    joint = np.sort(np.outer(pc, ph).ravel())[::-1]
    return float(joint[: len(ph)].sum() - pc[0])


# ---------------------------------------------------------------------------
# exhaustive CNU1 existence
# ---------------------------------------------------------------------------


def _decreasing_paths(top: int, bottom: int) -> List[Tuple[int, ...]]:
    """All strictly decreasing catalyst-level paths from top to bottom."""
    if top == bottom:
        return [(top,)]
    out: List[Tuple[int, ...]] = []
    for nxt in range(bottom, top):
        for tail in _decreasing_paths(nxt, bottom):
            out.append((top,) + tail)
    return out


def cnu1_exists_bruteforce(
    pc: Sequence[float], ph: Sequence[float], pv: Sequence[float]
) -> bool:
    """Exhaustive search for one cooling current plus a restoring chain.

    A candidate is accepted when every swap current is strictly positive,
    all supports are disjoint, the flows balance on every catalyst level
    (uniform-loop feasibility), and the net effect strictly increases some
    cold prefix sum.
    """
    dc, dh, dv = len(pc), len(ph), len(pv)
    p = np.einsum("i,j,k->ijk", np.asarray(pc), np.asarray(ph), np.asarray(pv))

    # Per-step candidates: non-cooling moves (cold index must not decrease).
    step_moves = [
        (c1, h1, c2, h2)
        for c1 in range(dc)
        for h1 in range(dh)
        for c2 in range(c1, dc)
        for h2 in range(dh)
    ]

    def chain_fits(path: Tuple[int, ...], used: set) -> bool:
        """Assign a positive disjoint current to every step of the path."""
        if len(path) == 1:
            # Complete: the cooling current adds to prefixes [b, a); each
            # crossing step (c1 < c2) drains prefixes [c1, c2).  Some prefix
            # must keep a net gain.
            net = [0] * (dc - 1)
            for m in range(dc - 1):
                net[m] = (1 if b <= m < a else 0) - sum(
                    1 for (c1, c2) in crossings_pairs if c1 <= m < c2
                )
            return any(v >= 1 for v in net)
        lv_from, lv_to = path[0], path[1]
        for c1, h1, c2, h2 in step_moves:
            src = (c1, h1, lv_from)
            dst = (c2, h2, lv_to)
            if src in used or dst in used:
                continue
            if p[src] - p[dst] <= EPS:
                continue
            crossings_pairs.append((c1, c2))
            used.add(src)
            used.add(dst)
            if chain_fits(path[1:], used):
                used.discard(src)
                used.discard(dst)
                crossings_pairs.pop()
                return True
            used.discard(src)
            used.discard(dst)
            crossings_pairs.pop()
        return False

    for a in range(1, dc):
        for b in range(a):
            for j, j2, k, k2 in product(range(dh), range(dh), range(dv), range(dv)):
                src = (a, j, k)
                dst = (b, j2, k2)
                if p[src] - p[dst] <= EPS:
                    continue
                if k2 == k:
                    return True  # catalyst untouched
                if k2 < k:
                    continue  # would need a non-restoring return path
                for path in _decreasing_paths(k2, k):
                    crossings_pairs: List[Tuple[int, int]] = []
                    if chain_fits(path, {src, dst}):
                        return True
    return False


# ---------------------------------------------------------------------------
# optimal catalyst as a linear program
# ---------------------------------------------------------------------------


def max_loop_current_lp(p2c: float, p2h: float, n: int) -> float:
    """Maximize the minimum loop swap current over catalyst spectra.

    Variables are the catalyst populations p_1..p_n plus the bottleneck t;
    every loop current is linear in the populations, so the max-min is an
    exact linear program.
    """
    p1c, p1h = 1.0 - p2c, 1.0 - p2h
    c = np.zeros(n + 1)
    c[n] = -1.0  # maximize t
    rows = []
    rhs = []
    # t - J_cool <= 0
    row = np.zeros(n + 1)
    row[0] = -p2c * p1h
    row[n - 1] += p1c * p2h
    row[n] = 1.0
    rows.append(row)
    rhs.append(0.0)
    # t - J_k <= 0 for the restoring swaps
    for k in range(n - 1):
        row = np.zeros(n + 1)
        row[k] += p2h
        row[k + 1] -= p1h
        row[n] = 1.0
        rows.append(row)
        rhs.append(0.0)
    # sorted spectrum: p_{k+1} - p_k <= 0
    for k in range(n - 1):
        row = np.zeros(n + 1)
        row[k] = -1.0
        row[k + 1] = 1.0
        rows.append(row)
        rhs.append(0.0)
    a_eq = np.zeros((1, n + 1))
    a_eq[0, :n] = 1.0
    res = linprog(
        c,
        A_ub=np.array(rows),
        b_ub=np.array(rhs),
        A_eq=a_eq,
        b_eq=np.array([1.0]),
        bounds=[(0.0, None)] * n + [(None, None)],
        method="highs",
    )
    if not res.success:
        raise RuntimeError(f"LP failed: {res.message}")
    return float(-res.fun)
