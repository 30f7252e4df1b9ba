"""Exhaustive and randomized verification of the connectivity bound claims.

The engine enumerates every labeled bipartite graph of a shape (or of a
fixed edge count), evaluates the minimum-degree, edge-connectivity, and
vertex-connectivity sums and products of each graph/complement pair, checks
them against the closed-form bounds, and tabulates where the bounds are
attained. Scans parallelize over contiguous mask subranges; workers reduce
locally and the merge is associative (max/min/concat with a smallest-mask
tie-break), so reports are identical regardless of the worker count.

At eight vertices and below the scan backend is the brute-force oracle and
every graph is additionally cross-checked against the max-flow values, so
each exhaustive run doubles as an oracle-equivalence audit. Larger scans
use max-flow alone.

Claim identifiers accepted by ``check_theorem``:

========  ==================================================================
L2.1      complementing BC(Z_r, S) complements its connection set, label
          for label
L2.4      a Bi-Cayley graph and complement that are both connected are
          maximally vertex- and edge-connected (k = k' = delta = |S|)
L2.5      attaching one new vertex with at least k edges to a
          k-edge-connected graph keeps it k-edge-connected (randomized)
L3.1      0 <= delta(G) + delta(G^bc) <= r and
          delta(G) * delta(G^bc) <= ceil(r/2) * floor(r/2)
T3.2      the same two bounds for edge connectivity
T3.3      the same two bounds for vertex connectivity
T4.1      max(0, r-m) <= k'(G) + k'(G^bc) <= N(n, m) at fixed edge count m
T4.2      k'(G) * k'(G^bc) <= M(n, m) at fixed edge count m
T4.3      the N and M bounds applied to vertex connectivity
========  ==================================================================
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from math import comb
from multiprocessing import Pool
from typing import Iterator

from .bigraph import BipartiteGraph, add_left_vertex, add_right_vertex, bipartite_complement
from .bounds import M_upper, N_upper, ParameterTriple, delta_bounds
from .connectivity import (
    _adjacency_masks,
    _connected_masks,
    edge_connectivity_value,
    edge_oracle_value,
    vertex_connectivity_value,
    vertex_oracle_value,
)
from .constructions import (
    BoundGoal,
    CayleySubset,
    WitnessFamilyId,
    bi_cayley,
    build_witness,
    dispatch_witness,
)
from .errors import NoWitness, TooLarge, UnknownTheorem

FULL_ENUMERATION_MAX_BITS = 24
FIXED_M_MAX_BITS = 30
FIXED_M_MAX_COUNT = 1 << 24
ORACLE_BACKEND_MAX_VERTICES = 8

METRIC_IDS = ("sum_edge", "prod_edge", "sum_vertex", "prod_vertex")
_ALL_METRICS = METRIC_IDS + ("sum_delta", "prod_delta")

THEOREM_IDS = ("L2.1", "L2.4", "L2.5", "L3.1", "T3.2", "T3.3", "T4.1", "T4.2", "T4.3")


# --- enumeration -------------------------------------------------------------


def _next_same_popcount(mask: int) -> int:
    """Gosper's hack: the next larger integer with the same popcount."""
    low = mask & -mask
    ripple = mask + low
    return (((ripple ^ mask) >> 2) // low) | ripple


def _unrank_colex(rank: int, m: int) -> int:
    """The rank-th m-bit mask in ascending (colexicographic) order."""
    mask = 0
    for i in range(m, 0, -1):
        a = i - 1
        while comb(a + 1, i) <= rank:
            a += 1
        rank -= comb(a, i)
        mask |= 1 << a
    return mask


def _iter_fixed_popcount(bits: int, m: int, start_rank: int, count: int) -> Iterator[int]:
    if m == 0:
        if start_rank == 0 and count > 0:
            yield 0
        return
    mask = _unrank_colex(start_rank, m)
    for _ in range(count):
        yield mask
        mask = _next_same_popcount(mask)


def enumerate_graphs(r: int, s: int, m: int | None = None) -> Iterator[BipartiteGraph]:
    """Every labeled graph on the shape exactly once, in ascending mask order.

    With ``m`` given, only the graphs with exactly m edges. Raises TooLarge,
    carrying the estimated count, when the scan caps are exceeded (2^(rs)
    masks for a full enumeration with rs <= 24; C(rs, m) <= 2^24 masks with
    rs <= 30 for a fixed edge count).
    """
    if r < 0 or s < 0:
        raise ValueError("part sizes must be nonnegative")
    bits = r * s
    if m is None:
        if bits > FULL_ENUMERATION_MAX_BITS:
            raise TooLarge(f"full enumeration of 2^{bits} = {1 << bits} graphs exceeds the cap")
        for mask in range(1 << bits):
            yield BipartiteGraph.from_mask(r, s, mask)
        return
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    total = comb(bits, m)
    if bits > FIXED_M_MAX_BITS or total > FIXED_M_MAX_COUNT:
        raise TooLarge(f"enumeration of C({bits}, {m}) = {total} graphs exceeds the cap")
    for mask in _iter_fixed_popcount(bits, m, 0, total):
        yield BipartiteGraph.from_mask(r, s, mask)


def shapes_within(max_n: int) -> list[tuple[int, int]]:
    """All shapes (r, s) with 1 <= r <= s and r + s <= max_n."""
    return [(r, s) for r in range(1, max_n // 2 + 1) for s in range(r, max_n - r + 1)]


# --- per-graph metric kernel -------------------------------------------------


def _rows_of(mask: int, r: int, s: int) -> tuple[int, ...]:
    smask = (1 << s) - 1
    return tuple((mask >> (i * s)) & smask for i in range(r))


def _min_degree(r: int, s: int, rows: tuple[int, ...]) -> int:
    dmin = min(row.bit_count() for row in rows)
    for j in range(s):
        col = sum(rows[i] >> j & 1 for i in range(r))
        if col < dmin:
            dmin = col
    return dmin


def _pair_invariants(r: int, s: int, rows, rows_c, use_oracle: bool, vertex: bool):
    """(kp, kp_c, kv, kv_c, d, d_c) for a graph and its complement.

    The vertex pair is None when not requested; it is by far the most
    expensive invariant, so edge-only sweeps skip it.
    """
    if use_oracle:
        kp = edge_oracle_value(r, s, rows)
        kp_c = edge_oracle_value(r, s, rows_c)
        kv = vertex_oracle_value(r, s, rows) if vertex else None
        kv_c = vertex_oracle_value(r, s, rows_c) if vertex else None
    else:
        kp = edge_connectivity_value(r, s, rows)
        kp_c = edge_connectivity_value(r, s, rows_c)
        kv = vertex_connectivity_value(r, s, rows) if vertex else None
        kv_c = vertex_connectivity_value(r, s, rows_c) if vertex else None
    return kp, kp_c, kv, kv_c, _min_degree(r, s, rows), _min_degree(r, s, rows_c)


# --- full-shape sweep ---------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One graph that broke one bound (expected never to exist)."""

    theorem: str
    side: str  # "lower" | "upper"
    metric: str
    r: int
    s: int
    m: int
    edges: tuple[tuple[int, int], ...]
    observed: int
    bound: int

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "side": self.side,
            "metric": self.metric,
            "r": self.r,
            "s": self.s,
            "m": self.m,
            "edges": [list(e) for e in self.edges],
            "observed": self.observed,
            "bound": self.bound,
        }


@dataclass
class _Cell:
    max_value: int
    max_mask: int
    min_value: int
    min_mask: int
    count: int


@dataclass
class ShapeSweep:
    """Reduced results of one exhaustive shape scan."""

    r: int
    s: int
    graphs_checked: int
    cells: dict[str, list[_Cell | None]]  # metric -> cell per edge count 0..rs
    violations: list[Violation]
    mismatches: list[tuple]  # (mask, invariant, flow_value, oracle_value)
    wall_ms: int
    has_vertex: bool = True

    def envelope_max(self, metric: str) -> int:
        if metric.endswith("vertex") and not self.has_vertex:
            raise ValueError("this sweep was run without vertex metrics")
        return max(c.max_value for c in self.cells[metric] if c is not None)


def _update_cell(cells_metric: list, m: int, value: int, mask: int) -> None:
    cell = cells_metric[m]
    if cell is None:
        cells_metric[m] = [value, mask, value, mask, 1]
        return
    if value > cell[0] or (value == cell[0] and mask < cell[1]):
        cell[0], cell[1] = value, mask
    if value < cell[2] or (value == cell[2] and mask < cell[3]):
        cell[2], cell[3] = value, mask
    cell[4] += 1


def _sweep_chunk(args):
    """Worker: evaluate pair-masks in [lo, hi); each mask covers the graph and
    its complement, so the chunk accounts for 2 * (hi - lo) labeled graphs."""
    r, s, lo, hi, cross, vertex, lower_by_m, n_by_m, m_by_m = args
    bits = r * s
    full = (1 << bits) - 1
    cap = delta_bounds(r).prod_upper
    use_oracle = (r + s) <= ORACLE_BACKEND_MAX_VERTICES
    cells = {metric: [None] * (bits + 1) for metric in _ALL_METRICS}
    raw_violations = []  # (theorem, side, metric, m, subject_mask, observed, bound)
    mismatches = []
    for mask in range(lo, hi):
        cmask = full ^ mask
        rows = _rows_of(mask, r, s)
        rows_c = _rows_of(cmask, r, s)
        kp, kp_c, kv, kv_c, dd, dd_c = _pair_invariants(r, s, rows, rows_c, use_oracle, vertex)
        if cross:
            # use_oracle holds here, so kp/kv carry oracle values; recompute
            # the flow side and require exact agreement.
            for side_mask, side_rows, oracle_kp, oracle_kv in (
                (mask, rows, kp, kv),
                (cmask, rows_c, kp_c, kv_c),
            ):
                flow_kp = edge_connectivity_value(r, s, side_rows)
                if flow_kp != oracle_kp:
                    mismatches.append((side_mask, "edge", flow_kp, oracle_kp))
                if vertex:
                    flow_kv = vertex_connectivity_value(r, s, side_rows)
                    if flow_kv != oracle_kv:
                        mismatches.append((side_mask, "vertex", flow_kv, oracle_kv))
        se, pe = kp + kp_c, kp * kp_c
        sd, pd = dd + dd_c, dd * dd_c
        mm = mask.bit_count()
        mc = bits - mm
        metric_values = [
            ("sum_edge", se), ("prod_edge", pe),
            ("sum_delta", sd), ("prod_delta", pd),
        ]
        if vertex:
            sv, pv = kv + kv_c, kv * kv_c
            metric_values += [("sum_vertex", sv), ("prod_vertex", pv)]
        for metric, value in metric_values:
            per_m = cells[metric]
            _update_cell(per_m, mm, value, mask)
            _update_cell(per_m, mc, value, cmask)
        vm = mm if mm <= mc else mc
        subject = mask if mm <= mc else cmask
        if sd > r:
            raw_violations.append(("L3.1", "upper", "sum_delta", vm, subject, sd, r))
        if pd > cap:
            raw_violations.append(("L3.1", "upper", "prod_delta", vm, subject, pd, cap))
        if se > r:
            raw_violations.append(("T3.2", "upper", "sum_edge", vm, subject, se, r))
        if pe > cap:
            raw_violations.append(("T3.2", "upper", "prod_edge", vm, subject, pe, cap))
        if se < lower_by_m[vm]:
            raw_violations.append(("T4.1", "lower", "sum_edge", vm, subject, se, lower_by_m[vm]))
        if se > n_by_m[vm]:
            raw_violations.append(("T4.1", "upper", "sum_edge", vm, subject, se, n_by_m[vm]))
        if pe > m_by_m[vm]:
            raw_violations.append(("T4.2", "upper", "prod_edge", vm, subject, pe, m_by_m[vm]))
        if vertex:
            if sv > r:
                raw_violations.append(("T3.3", "upper", "sum_vertex", vm, subject, sv, r))
            if pv > cap:
                raw_violations.append(("T3.3", "upper", "prod_vertex", vm, subject, pv, cap))
            if sv < lower_by_m[vm]:
                raw_violations.append(("T4.3", "lower", "sum_vertex", vm, subject, sv, lower_by_m[vm]))
            if sv > n_by_m[vm]:
                raw_violations.append(("T4.3", "upper", "sum_vertex", vm, subject, sv, n_by_m[vm]))
            if pv > m_by_m[vm]:
                raw_violations.append(("T4.3", "upper", "prod_vertex", vm, subject, pv, m_by_m[vm]))
    return 2 * (hi - lo), cells, raw_violations, mismatches


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        return max(1, os.cpu_count() or 1)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    return jobs


def _run_chunked(worker, arg_sets, jobs: int):
    if jobs == 1 or len(arg_sets) <= 1:
        return [worker(a) for a in arg_sets]
    with Pool(processes=min(jobs, len(arg_sets))) as pool:
        return pool.map(worker, arg_sets)


_SWEEP_CACHE: dict[tuple[int, int], ShapeSweep] = {}


def shape_sweep(
    r: int,
    s: int,
    jobs: int | None = None,
    use_cache: bool = True,
    include_vertex: bool = True,
) -> ShapeSweep:
    """Exhaustively scan one shape (cached per shape).

    Covers all 2^(rs) labeled graphs by walking the 2^(rs-1) graph/complement
    pairs. At r + s <= 8 the values come from the brute-force oracle and the
    max-flow results are cross-checked graph by graph. Vertex connectivity
    dominates the cost; edge-only callers pass ``include_vertex=False`` and
    the sweep then carries no vertex cells and no T3.3/T4.3 checks. A cached
    sweep with vertex metrics serves edge-only requests too.
    """
    if not (1 <= r <= s):
        raise ValueError(f"needs 1 <= r <= s, got r={r}, s={s}")
    key = (r, s)
    if use_cache and key in _SWEEP_CACHE:
        cached = _SWEEP_CACHE[key]
        if cached.has_vertex or not include_vertex:
            return cached
    bits = r * s
    if bits > FULL_ENUMERATION_MAX_BITS:
        raise TooLarge(f"full enumeration of 2^{bits} = {1 << bits} graphs exceeds the cap")
    jobs = _resolve_jobs(jobs)
    started = time.perf_counter()
    lower_by_m, n_by_m, m_by_m = [], [], []
    for mm in range(bits + 1):
        vm = min(mm, bits - mm)
        triple = ParameterTriple(r, s, vm)
        lower_by_m.append(max(0, r - vm))
        n_by_m.append(N_upper(triple))
        m_by_m.append(M_upper(triple))
    pairs = 1 << (bits - 1)
    cross = (r + s) <= ORACLE_BACKEND_MAX_VERTICES
    chunk = max(1024, pairs // (jobs * 8)) if jobs > 1 else pairs
    arg_sets = [
        (r, s, lo, min(lo + chunk, pairs), cross, include_vertex, lower_by_m, n_by_m, m_by_m)
        for lo in range(0, pairs, chunk)
    ]
    results = _run_chunked(_sweep_chunk, arg_sets, jobs)
    graphs = 0
    cells: dict[str, list[_Cell | None]] = {metric: [None] * (bits + 1) for metric in _ALL_METRICS}
    violations: list[Violation] = []
    mismatches: list[tuple] = []
    for count, chunk_cells, raw, mm in results:
        graphs += count
        for metric in _ALL_METRICS:
            merged = cells[metric]
            for m, cell in enumerate(chunk_cells[metric]):
                if cell is None:
                    continue
                if merged[m] is None:
                    merged[m] = list(cell)
                else:
                    tgt = merged[m]
                    if cell[0] > tgt[0] or (cell[0] == tgt[0] and cell[1] < tgt[1]):
                        tgt[0], tgt[1] = cell[0], cell[1]
                    if cell[2] < tgt[2] or (cell[2] == tgt[2] and cell[3] < tgt[3]):
                        tgt[2], tgt[3] = cell[2], cell[3]
                    tgt[4] += cell[4]
        for theorem, side, metric, vm, subject, observed, bound in raw:
            violations.append(
                Violation(
                    theorem, side, metric, r, s, vm,
                    tuple(BipartiteGraph.from_mask(r, s, subject).edges()),
                    observed, bound,
                )
            )
        mismatches.extend(mm)
    final_cells = {
        metric: [None if c is None else _Cell(*c) for c in per_m]
        for metric, per_m in cells.items()
    }
    sweep = ShapeSweep(
        r, s, graphs, final_cells, violations, mismatches,
        int((time.perf_counter() - started) * 1000),
        has_vertex=include_vertex,
    )
    if use_cache:
        _SWEEP_CACHE[key] = sweep
    return sweep


# --- fixed-size extremal scan -------------------------------------------------


@dataclass(frozen=True)
class ExtremalResult:
    """Extremes of one metric over all labeled graphs with exactly m edges."""

    metric: str
    r: int
    s: int
    m: int
    max_value: int
    argmax: BipartiteGraph
    min_value: int
    argmin: BipartiteGraph
    graphs_checked: int


def _metric_from_pair(metric: str, a: int, b: int) -> int:
    return a + b if metric.startswith("sum") else a * b


def metric_value(metric: str, g: BipartiteGraph) -> int:
    """Evaluate one metric (max-flow backed) on a graph and its complement."""
    if metric not in METRIC_IDS:
        raise ValueError(f"unknown metric {metric!r}")
    gc = bipartite_complement(g)
    if metric.endswith("edge"):
        a = edge_connectivity_value(g.left_size, g.right_size, g.adjacency)
        b = edge_connectivity_value(gc.left_size, gc.right_size, gc.adjacency)
    else:
        a = vertex_connectivity_value(g.left_size, g.right_size, g.adjacency)
        b = vertex_connectivity_value(gc.left_size, gc.right_size, gc.adjacency)
    return _metric_from_pair(metric, a, b)


def _scan_chunk(args):
    r, s, m, lo_rank, hi_rank, metric = args
    bits = r * s
    full = (1 << bits) - 1
    use_oracle = (r + s) <= ORACLE_BACKEND_MAX_VERTICES
    edge_metric = metric.endswith("edge")
    if edge_metric:
        fn = edge_oracle_value if use_oracle else edge_connectivity_value
    else:
        fn = vertex_oracle_value if use_oracle else vertex_connectivity_value
    best_max = best_min = None
    max_mask = min_mask = 0
    for mask in _iter_fixed_popcount(bits, m, lo_rank, hi_rank - lo_rank):
        rows = _rows_of(mask, r, s)
        rows_c = _rows_of(full ^ mask, r, s)
        value = _metric_from_pair(metric, fn(r, s, rows), fn(r, s, rows_c))
        if best_max is None or value > best_max or (value == best_max and mask < max_mask):
            best_max, max_mask = value, mask
        if best_min is None or value < best_min or (value == best_min and mask < min_mask):
            best_min, min_mask = value, mask
    return hi_rank - lo_rank, best_max, max_mask, best_min, min_mask


def extremal_scan(r: int, s: int, m: int, metric: str, jobs: int | None = None) -> ExtremalResult:
    """Extremal metric values over every labeled graph with exactly m edges.

    Preconditions: r <= s, m <= floor(rs/2), and the fixed-size enumeration
    caps (C(rs, m) <= 2^24 masks, rs <= 30).
    """
    if metric not in METRIC_IDS:
        raise ValueError(f"unknown metric {metric!r}; choose one of {METRIC_IDS}")
    if not (1 <= r <= s):
        raise ValueError(f"needs 1 <= r <= s, got r={r}, s={s}")
    ParameterTriple(r, s, m)
    bits = r * s
    total = comb(bits, m)
    if bits > FIXED_M_MAX_BITS or total > FIXED_M_MAX_COUNT:
        raise TooLarge(f"enumeration of C({bits}, {m}) = {total} graphs exceeds the cap")
    jobs = _resolve_jobs(jobs)
    chunk = max(4096, total // (jobs * 8)) if jobs > 1 else total
    arg_sets = [
        (r, s, m, lo, min(lo + chunk, total), metric)
        for lo in range(0, total, chunk)
    ]
    results = _run_chunked(_scan_chunk, arg_sets, jobs)
    graphs = 0
    best_max = best_min = None
    max_mask = min_mask = 0
    for count, cmax, cmax_mask, cmin, cmin_mask in results:
        graphs += count
        if cmax is None:
            continue
        if best_max is None or cmax > best_max or (cmax == best_max and cmax_mask < max_mask):
            best_max, max_mask = cmax, cmax_mask
        if best_min is None or cmin < best_min or (cmin == best_min and cmin_mask < min_mask):
            best_min, min_mask = cmin, cmin_mask
    assert best_max is not None, "the m-edge class is never empty for valid triples"
    return ExtremalResult(
        metric, r, s, m, best_max,
        BipartiteGraph.from_mask(r, s, max_mask),
        best_min,
        BipartiteGraph.from_mask(r, s, min_mask),
        graphs,
    )


# --- theorem reports ----------------------------------------------------------


@dataclass(frozen=True)
class AttainmentRecord:
    """How close the enumerated extreme came to one formula bound."""

    r: int
    s: int
    m: int | None
    metric: str
    bound: str  # "lower" | "upper"
    enumerated: int
    formula: int
    attained: bool
    witness_family: str | None
    witness_edges: tuple[tuple[int, int], ...] | None
    witness_value: int | None

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "m": self.m,
            "metric": self.metric,
            "bound": self.bound,
            "enumerated": self.enumerated,
            "formula": self.formula,
            "attained": self.attained,
            "witness_family": self.witness_family,
            "witness": None if self.witness_edges is None else [list(e) for e in self.witness_edges],
            "witness_value": self.witness_value,
        }


@dataclass
class TheoremReport:
    """Outcome of one verification run."""

    theorem: str
    range_spec: dict
    graphs_checked: int
    violations: list[Violation]
    attainment: list[AttainmentRecord]
    wall_ms: int
    notes: list[str] = field(default_factory=list)

    @property
    def exit_status(self) -> int:
        return 0 if not self.violations else 2

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "range": self.range_spec,
            "graphs_checked": self.graphs_checked,
            "violations": [v.to_json_dict() for v in self.violations],
            "attainment": [a.to_json_dict() for a in self.attainment],
            "wall_ms": self.wall_ms,
            "notes": self.notes,
        }


def _witness_fields(goal: BoundGoal, metric: str, r: int, s: int, m: int):
    """(family name, edges, metric value) for the dispatched witness, or Nones."""
    try:
        family, graph = dispatch_witness(goal, r, s, m)
    except NoWitness:
        return None, None, None
    value = metric_value(metric, graph)
    return (family.value if family is not None else "empty"), tuple(graph.edges()), value


def _check_bicayley_complement(max_r: int) -> tuple[int, list[Violation]]:
    checked = 0
    violations = []
    for r in range(1, max_r + 1):
        for smask in range(1 << r):
            members = frozenset(a for a in range(r) if smask >> a & 1)
            subset = CayleySubset(r, members)
            g = bi_cayley(subset)
            expected = bi_cayley(subset.complement())
            checked += 1
            if bipartite_complement(g) != expected:
                violations.append(
                    Violation(
                        "L2.1", "upper", "labeled_equality", r, r, len(members),
                        tuple(g.edges()), 0, 0,
                    )
                )
    return checked, violations


def _is_connected_rows(r: int, s: int, rows: tuple[int, ...]) -> bool:
    n = r + s
    if n <= 1:
        return True
    return _connected_masks(n, _adjacency_masks(r, s, rows))


def _l24_chunk(args):
    tasks = args
    checked = 0
    raw = []  # (r, members, what, observed, expected)
    for r, smask in tasks:
        members = frozenset(a for a in range(r) if smask >> a & 1)
        g = bi_cayley(CayleySubset(r, members))
        gc = bipartite_complement(g)
        k = len(members)
        if not (_is_connected_rows(r, r, g.adjacency) and _is_connected_rows(r, r, gc.adjacency)):
            continue
        checked += 2
        for label, graph, expected in (("graph", g, k), ("complement", gc, r - k)):
            rows = graph.adjacency
            dd = _min_degree(r, r, rows)
            kp = edge_connectivity_value(r, r, rows)
            kv = vertex_connectivity_value(r, r, rows)
            for what, observed in (("delta", dd), ("edge", kp), ("vertex", kv)):
                if observed != expected:
                    raw.append((r, tuple(sorted(members)), f"{label}:{what}", observed, expected))
    return checked, raw


def _check_maximal_connectivity(max_r: int, jobs: int) -> tuple[int, list[Violation]]:
    tasks = [(r, smask) for r in range(2, max_r + 1) for smask in range(1 << r)]
    chunk = max(16, len(tasks) // (jobs * 4)) if jobs > 1 else len(tasks)
    arg_sets = [tasks[i:i + chunk] for i in range(0, len(tasks), chunk)]
    results = _run_chunked(_l24_chunk, arg_sets, jobs)
    checked = 0
    violations = []
    for count, raw in results:
        checked += count
        for r, members, what, observed, expected in raw:
            g = bi_cayley(CayleySubset(r, frozenset(members)))
            violations.append(
                Violation("L2.4", "upper", what, r, r, len(members), tuple(g.edges()), observed, expected)
            )
    return checked, violations


_L25_SHAPE_MAX = 4  # parts drawn from 1..4, so trial graphs have at most 8 vertices


def _l25_chunk(args):
    chunk_seed, count = args
    rng = random.Random(chunk_seed)
    trials = 0
    raw = []  # (r, s, edges, side, neighbors, before, after)
    while trials < count:
        trials += 1
        r = rng.randint(1, _L25_SHAPE_MAX)
        s = rng.randint(1, _L25_SHAPE_MAX)
        g = None
        for _ in range(300):
            mask = rng.getrandbits(r * s)
            candidate = BipartiteGraph.from_mask(r, s, mask)
            if _is_connected_rows(r, s, candidate.adjacency):
                g = candidate
                break
        if g is None:
            continue
        k = edge_connectivity_value(r, s, g.adjacency)
        attach_right = rng.random() < 0.5
        opposite = r if attach_right else s
        degree = rng.randint(k, opposite)
        neighbors = sorted(rng.sample(range(1, opposite + 1), degree))
        extended = add_right_vertex(g, neighbors) if attach_right else add_left_vertex(g, neighbors)
        after = edge_connectivity_value(extended.left_size, extended.right_size, extended.adjacency)
        if after < k:
            raw.append((r, s, tuple(g.edges()), "right" if attach_right else "left", tuple(neighbors), k, after))
    return trials, raw


def _check_vertex_addition(trials: int, seed: int, jobs: int) -> tuple[int, list[Violation]]:
    chunk = 500
    arg_sets = []
    remaining = trials
    index = 0
    while remaining > 0:
        take = min(chunk, remaining)
        arg_sets.append((seed * 1_000_003 + index, take))
        remaining -= take
        index += 1
    results = _run_chunked(_l25_chunk, arg_sets, jobs)
    checked = 0
    violations = []
    for count, raw in results:
        checked += count
        for r, s, edges, side, neighbors, before, after in raw:
            violations.append(
                Violation("L2.5", "lower", f"attach_{side}:{','.join(map(str, neighbors))}",
                          r, s, len(edges), edges, after, before)
            )
    return checked, violations


def _bound_theorem_report(theorem: str, max_n: int, jobs: int) -> tuple[int, list[Violation], list[AttainmentRecord]]:
    needs_vertex = theorem in ("T3.3", "T4.3")
    checked = 0
    violations: list[Violation] = []
    attainment: list[AttainmentRecord] = []
    for r, s in shapes_within(max_n):
        sweep = shape_sweep(r, s, jobs=jobs, include_vertex=needs_vertex)
        checked += sweep.graphs_checked
        violations.extend(v for v in sweep.violations if v.theorem == theorem)
        bits = r * s
        cap = delta_bounds(r).prod_upper
        if theorem == "L3.1":
            attainment.append(AttainmentRecord(
                r, s, None, "sum_delta", "upper", sweep.envelope_max("sum_delta"), r,
                sweep.envelope_max("sum_delta") == r, None, None, None))
            attainment.append(AttainmentRecord(
                r, s, None, "prod_delta", "upper", sweep.envelope_max("prod_delta"), cap,
                sweep.envelope_max("prod_delta") == cap, None, None, None))
        elif theorem in ("T3.2", "T3.3"):
            metric_sum = "sum_edge" if theorem == "T3.2" else "sum_vertex"
            metric_prod = "prod_edge" if theorem == "T3.2" else "prod_vertex"
            complete = BipartiteGraph.from_mask(r, s, (1 << bits) - 1)
            sum_wvalue = metric_value(metric_sum, complete)
            attainment.append(AttainmentRecord(
                r, s, None, metric_sum, "upper", sweep.envelope_max(metric_sum), r,
                sweep.envelope_max(metric_sum) == r, "complete",
                tuple(complete.edges()), sum_wvalue))
            if r >= 4:
                witness = build_witness(WitnessFamilyId.S3_G2, r, s)
                prod_witness = ("s3-g2", tuple(witness.edges()), metric_value(metric_prod, witness))
            else:
                prod_witness = (None, None, None)
            attainment.append(AttainmentRecord(
                r, s, None, metric_prod, "upper", sweep.envelope_max(metric_prod), cap,
                sweep.envelope_max(metric_prod) == cap, *prod_witness))
        elif theorem in ("T4.1", "T4.3"):
            metric = "sum_edge" if theorem == "T4.1" else "sum_vertex"
            for m in range(bits // 2 + 1):
                cell = sweep.cells[metric][m]
                triple = ParameterTriple(r, s, m)
                formula_hi = N_upper(triple)
                formula_lo = max(0, r - m)
                fam, wedges, wvalue = _witness_fields(BoundGoal.SUM_UPPER, metric, r, s, m)
                attainment.append(AttainmentRecord(
                    r, s, m, metric, "upper", cell.max_value, formula_hi,
                    cell.max_value == formula_hi, fam, wedges, wvalue))
                fam, wedges, wvalue = _witness_fields(BoundGoal.SUM_LOWER, metric, r, s, m)
                attainment.append(AttainmentRecord(
                    r, s, m, metric, "lower", cell.min_value, formula_lo,
                    cell.min_value == formula_lo, fam, wedges, wvalue))
            if theorem == "T4.3":
                for m in range(bits // 2 + 1):
                    cell = sweep.cells["prod_vertex"][m]
                    formula = M_upper(ParameterTriple(r, s, m))
                    fam, wedges, wvalue = _witness_fields(BoundGoal.PROD_UPPER, "prod_vertex", r, s, m)
                    attainment.append(AttainmentRecord(
                        r, s, m, "prod_vertex", "upper", cell.max_value, formula,
                        cell.max_value == formula, fam, wedges, wvalue))
        elif theorem == "T4.2":
            for m in range(bits // 2 + 1):
                cell = sweep.cells["prod_edge"][m]
                formula = M_upper(ParameterTriple(r, s, m))
                fam, wedges, wvalue = _witness_fields(BoundGoal.PROD_UPPER, "prod_edge", r, s, m)
                attainment.append(AttainmentRecord(
                    r, s, m, "prod_edge", "upper", cell.max_value, formula,
                    cell.max_value == formula, fam, wedges, wvalue))
    return checked, violations, attainment


def check_theorem(
    theorem: str,
    *,
    max_n: int = 8,
    max_r: int = 8,
    trials: int = 10_000,
    seed: int = 20_240,
    jobs: int | None = None,
) -> TheoremReport:
    """Run one claim's verification and return its report.

    ``max_r`` scopes the Bi-Cayley claims (L2.1, L2.4), ``trials``/``seed``
    the randomized claim (L2.5), and ``max_n`` the exhaustive bound claims.
    Exit semantics: a report with an empty violations list means the claim
    held everywhere it was evaluated.
    """
    if theorem not in THEOREM_IDS:
        raise UnknownTheorem(f"unknown claim id {theorem!r}; choose one of {THEOREM_IDS}")
    jobs = _resolve_jobs(jobs)
    started = time.perf_counter()
    attainment: list[AttainmentRecord] = []
    notes: list[str] = []
    if theorem == "L2.1":
        range_spec = {"max_r": max_r}
        checked, violations = _check_bicayley_complement(max_r)
    elif theorem == "L2.4":
        range_spec = {"max_r": max_r}
        checked, violations = _check_maximal_connectivity(max_r, jobs)
    elif theorem == "L2.5":
        range_spec = {"trials": trials, "seed": seed, "max_part": _L25_SHAPE_MAX}
        checked, violations = _check_vertex_addition(trials, seed, jobs)
    else:
        range_spec = {"max_n": max_n}
        checked, violations, attainment = _bound_theorem_report(theorem, max_n, jobs)
        not_attained = [a for a in attainment if not a.attained]
        if not_attained:
            notes.append(
                f"{len(not_attained)} attainment cell(s) not reached by any graph; "
                "recorded, not violations"
            )
    return TheoremReport(
        theorem,
        range_spec,
        checked,
        violations,
        attainment,
        int((time.perf_counter() - started) * 1000),
        notes,
    )
