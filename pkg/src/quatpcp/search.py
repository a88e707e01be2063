"""Depth-first discovery of perfect quaternion arrays over the basic units.

Entries are assigned in row-major order.  For every nonzero shift the search
tracks the partial autocorrelation built from products whose two factors are
both assigned.  Each outstanding product is a basic unit and moves exactly one
component by one, so a prefix is cut as soon as the L1 size of any partial
sum exceeds the number of products still missing for that shift.  A fully
determined nonzero entry is the special case with nothing missing.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import prod
from typing import Optional, Sequence

from .qarray import QArray, first_offpeak_nonzero, negation_table, right_autocorr, shift_table
from .quaternion import H_CONJ, H_MUL, H_UNITS

DEFAULT_HARD_CAP = 12

# component slot and sign of each basic unit, in H_UNITS order
_COMPONENT = tuple(next(c for c in range(4) if q[c]) for q in H_UNITS)
_SIGN = tuple(q[_COMPONENT[n]] for n, q in enumerate(H_UNITS))


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    shape: tuple[int, ...]
    max_results: Optional[int] = None
    fix_first_entry: bool = True
    time_budget: Optional[float] = None
    parallel_width: int = 1
    hard_cap: int = DEFAULT_HARD_CAP
    prune: bool = True

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(int(d) for d in self.shape))
        if not self.shape or any(d < 1 for d in self.shape):
            raise SearchError(f"invalid shape {self.shape}")
        if prod(self.shape) > self.hard_cap:
            raise SearchError(f"shape {self.shape} has {prod(self.shape)} entries, "
                              f"above the cap of {self.hard_cap}")
        if self.max_results is not None and self.max_results < 1:
            raise SearchError("max_results must be positive")
        if self.parallel_width < 1:
            raise SearchError("parallel_width must be at least 1")

    def as_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "max_results": self.max_results,
            "fix_first_entry": self.fix_first_entry,
            "time_budget": self.time_budget,
            "parallel_width": self.parallel_width,
            "hard_cap": self.hard_cap,
            "prune": self.prune,
        }


@dataclass
class SearchReport:
    config: Optional[SearchConfig]
    nodes: int = 0
    elapsed: float = 0.0
    results: list[QArray] = field(default_factory=list)
    verdicts: list[bool] = field(default_factory=list)
    offenders: list[Optional[tuple[int, ...]]] = field(default_factory=list)
    budget_exhausted: bool = False
    truncated: bool = False

    @property
    def passed(self) -> int:
        return sum(self.verdicts)

    @property
    def failed(self) -> int:
        return len(self.verdicts) - self.passed

    @property
    def complete(self) -> bool:
        """True when the enumeration covered the whole space."""
        return not (self.budget_exhausted or self.truncated)

    def summary(self) -> dict:
        return {
            "config": self.config.as_dict() if self.config else None,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "found": len(self.results),
            "passed": self.passed,
            "failed": self.failed,
            "budget_exhausted": self.budget_exhausted,
            "truncated": self.truncated,
        }


class _Plan:
    """Per-shape bookkeeping for the DFS: which products complete at each position."""

    def __init__(self, shape):
        n = prod(shape)
        table = shift_table(shape)
        neg = negation_table(shape)
        # R(-m) is the conjugate of R(m), so one shift per +-m pair suffices
        reps = [m for m in range(1, n) if m <= neg[m]]
        self.n = n
        self.nshifts = len(reps)
        self.completes = [[] for _ in range(n)]
        self.total = [0] * len(reps)
        for slot, m in enumerate(reps):
            for k in range(n):
                t = table[m][k]
                self.completes[max(k, t)].append((slot, k, t))
                self.total[slot] += 1


def _run(shape, prefix, plan, prune, limit, deadline):
    """Enumerate completions of ``prefix``; returns (found, nodes, timed_out, truncated)."""
    n = plan.n
    completes = plan.completes
    total = plan.total
    counts = [[0, 0, 0, 0] for _ in range(plan.nshifts)]
    done = [0] * plan.nshifts
    assign = [0] * n
    found = []
    nodes = 0
    state = {"timeout": False, "truncated": False}
    mul, conj, comp, sign = H_MUL, H_CONJ, _COMPONENT, _SIGN

    def apply(p, delta):
        for slot, k, t in completes[p]:
            e = mul[assign[k]][conj[assign[t]]]
            counts[slot][comp[e]] += delta * sign[e]
            done[slot] += delta

    def ok(p):
        for slot, _, _ in completes[p]:
            c = counts[slot]
            rest = total[slot] - done[slot]
            if abs(c[0]) + abs(c[1]) + abs(c[2]) + abs(c[3]) > rest:
                return False
        return True

    def leaf_ok():
        return all(c == [0, 0, 0, 0] for c in counts)

    for p, v in enumerate(prefix):
        assign[p] = v
        apply(p, 1)
    if prune and prefix and not all(ok(p) for p in range(len(prefix))):
        return found, nodes, False, False

    def dfs(p):
        nonlocal nodes
        if p == n:
            if leaf_ok():
                found.append(tuple(assign))
                if limit is not None and len(found) >= limit:
                    state["truncated"] = True
                    return True
            return False
        for v in range(8):
            nodes += 1
            if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
                state["timeout"] = True
                return True
            assign[p] = v
            apply(p, 1)
            if not prune or ok(p):
                if dfs(p + 1):
                    apply(p, -1)
                    return True
            apply(p, -1)
        return False

    dfs(len(prefix))
    return found, nodes, state["timeout"], state["truncated"]


def _branch(args):
    shape, prefix, prune, limit, deadline = args
    return _run(shape, prefix, _Plan(shape), prune, limit, deadline)


def search_pqa(cfg: SearchConfig) -> SearchReport:
    """Exhaustively enumerate PQAs over the basic units for ``cfg.shape``.

    With ``fix_first_entry`` the first entry is pinned to 1; each result then
    stands for its orbit of 8 left multiples by basic units.  Results come out
    in lexicographic order of unit indices, so the output is deterministic.
    """
    start = time.monotonic()
    deadline = None if cfg.time_budget is None else start + cfg.time_budget
    n = prod(cfg.shape)
    pinned = (0,) if cfg.fix_first_entry else ()
    if len(pinned) < n:
        prefixes = [pinned + (v,) for v in range(8)]
    else:
        prefixes = [pinned]

    jobs = [(cfg.shape, p, cfg.prune, cfg.max_results, deadline) for p in prefixes]
    if cfg.parallel_width > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
            parts = list(pool.map(_branch, jobs))
    else:
        parts = []
        for job in jobs:
            parts.append(_branch(job))
            if parts[-1][2] or (cfg.max_results is not None
                                and sum(len(p[0]) for p in parts) >= cfg.max_results):
                break

    report = SearchReport(cfg)
    report.nodes = len(parts)
    for found, nodes, timed_out, truncated in parts:
        report.nodes += nodes
        report.budget_exhausted |= timed_out
        report.truncated |= truncated
        for assign in found:
            report.results.append(QArray(cfg.shape, [H_UNITS[v] for v in assign]))
    if cfg.max_results is not None and len(report.results) >= cfg.max_results:
        report.truncated = True
        del report.results[cfg.max_results:]

    for arr in report.results:
        offender = first_offpeak_nonzero(right_autocorr(arr))
        report.offenders.append(offender)
        report.verdicts.append(offender is None)
    report.elapsed = time.monotonic() - start
    return report


def brute_force_pqas(shape: Sequence[int], fix_first_entry: bool = True) -> list[QArray]:
    """Unpruned reference enumeration (exponential; small shapes only)."""
    cfg = SearchConfig(tuple(shape), fix_first_entry=fix_first_entry, prune=False)
    return search_pqa(cfg).results


def verify_catalog(arrays: Sequence[QArray]) -> SearchReport:
    """Re-check each array; failures carry the first nonzero off-peak shift."""
    start = time.monotonic()
    report = SearchReport(None)
    for arr in arrays:
        offender = first_offpeak_nonzero(right_autocorr(arr))
        report.results.append(arr)
        report.offenders.append(offender)
        report.verdicts.append(offender is None)
    report.elapsed = time.monotonic() - start
    return report
