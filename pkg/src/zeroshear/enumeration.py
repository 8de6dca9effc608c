"""Enumeration of closed-geodesic classes on a zero-shear surface.

Free homotopy classes of curves correspond to cyclically reduced closed
walks on the dual ribbon graph, i.e. non-backtracking closed dart
sequences up to rotation (and reversal, since geodesics are not
oriented).  Each class carries a turn word whose exact integer trace
gives the geodesic length 2*arccosh(trace/2); trace-2 classes are the
cusp loops.

Only primitive classes are enumerated: a walk that is a proper power of
a shorter walk is the same geodesic traversed repeatedly (and every
power of a cusp loop is again parabolic, so nothing below a trace bound
would otherwise be finite).

The depth-first search is exhaustive below the requested trace bound;
pruning on the running matrix trace is sound because appending letters
never decreases any entry of the product.  The compiled kernel is
selected at import time when available (set ZEROSHEAR_PURE=1 to force
the pure-Python fallback); results are identical.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Lock

from . import _walkpure, formulas, words
from .errors import (
    BacktrackingError,
    BudgetExceededError,
    NoEssentialCurveError,
    NotAWalkError,
)
from .surfaces import IdealTriangulation, RibbonGraph
from .words import TurnWord

__all__ = [
    "GeodesicClass",
    "SystoleResult",
    "enumerate_classes",
    "kissing_number",
    "systole",
    "trace_budget_for",
    "word_of_walk",
    "walk_class_key",
    "is_primitive_walk",
    "kernel_name",
    "DEFAULT_NODE_CAP",
]

DEFAULT_NODE_CAP = 10**8

if os.environ.get("ZEROSHEAR_PURE") == "1":
    _walkcore = None
else:
    try:
        from . import _walkcore  # type: ignore[attr-defined]
    except ImportError:
        _walkcore = None


def kernel_name() -> str:
    """Which DFS kernel this process selected at import time."""
    return "compiled" if _walkcore is not None else "pure"


def as_graph(surface) -> RibbonGraph:
    """Coerce an IdealTriangulation to its dual ribbon graph."""
    if isinstance(surface, IdealTriangulation):
        return surface.dual
    if isinstance(surface, RibbonGraph):
        return surface
    raise TypeError(f"expected a surface or ribbon graph, got {type(surface).__name__}")


def _graph_arrays(graph: RibbonGraph):
    if _walkcore is not None:
        import array

        return (
            array.array("i", graph.next_left),
            array.array("i", graph.next_right),
        )
    return graph.next_left, graph.next_right


def _explore(nl, nr, start, trace_max, budget, prune, max_len):
    if _walkcore is not None:
        try:
            return _walkcore.explore_from(nl, nr, start, trace_max, budget, prune, max_len)
        except OverflowError:
            # checked 64-bit arithmetic ran out; redo this start exactly
            pass
    return _walkpure.explore_from(nl, nr, start, trace_max, budget, prune, max_len)


# -- walks ---------------------------------------------------------------------

def word_of_walk(graph: RibbonGraph, darts) -> TurnWord:
    """Turn word read along a closed non-backtracking walk.

    The walk is the cyclic dart sequence ``darts``; letter i is the turn
    taken from darts[i] to darts[i+1].  Raises BacktrackingError if a
    step reverses an edge, NotAWalkError if consecutive darts do not
    meet at a vertex.
    """
    darts = tuple(darts)
    if not darts:
        raise NotAWalkError("empty walk")
    out = []
    for i, d in enumerate(darts):
        nd = darts[(i + 1) % len(darts)]
        if nd == graph.next_left[d]:
            out.append("L")
        elif nd == graph.next_right[d]:
            out.append("R")
        elif nd == graph.rev[d]:
            raise BacktrackingError(f"walk reverses edge at step {i} (dart {d})")
        else:
            raise NotAWalkError(f"darts {d} -> {nd} are not consecutive at step {i}")
    return TurnWord("".join(out))


def _min_rotation(seq: tuple) -> tuple:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def reversed_walk(graph: RibbonGraph, darts) -> tuple[int, ...]:
    """The same closed walk traversed backwards."""
    rev = graph.rev
    return tuple(rev[d] for d in reversed(tuple(darts)))


def walk_class_key(graph: RibbonGraph, darts) -> tuple[int, ...]:
    """Canonical representative of the walk up to rotation and reversal.

    Two walks define the same non-oriented free homotopy class iff their
    keys coincide.
    """
    darts = tuple(darts)
    return min(_min_rotation(darts), _min_rotation(reversed_walk(graph, darts)))


def is_primitive_walk(darts) -> bool:
    """True unless the cyclic dart sequence is a proper power."""
    darts = tuple(darts)
    m = len(darts)
    for p in range(1, m):
        if m % p == 0 and darts == darts[p:] + darts[:p]:
            return False
    return True


# -- classes ---------------------------------------------------------------------

@dataclass(frozen=True)
class GeodesicClass:
    """A primitive non-oriented free homotopy class of closed curves.

    ``darts`` is the canonical walk representative (the class identity),
    ``word`` the canonical turn word, ``length`` the geodesic length
    (None for peripheral classes), and ``found`` a diagnostic count of
    raw walks that mapped to this class during enumeration.
    """

    darts: tuple[int, ...]
    word: TurnWord = field(compare=False)
    trace: int = field(compare=False)
    length: float | None = field(compare=False)
    peripheral: bool = field(compare=False)
    found: int = field(compare=False, default=1)

    def sort_key(self):
        return (self.trace, str(self.word), self.darts)


def _make_class(graph, key, count):
    word = word_of_walk(graph, key)
    tr = words.trace(word)
    peripheral = tr == 2
    return GeodesicClass(
        darts=key,
        word=words.canonical(word),
        trace=tr,
        length=None if peripheral else 2.0 * math.acosh(tr / 2.0),
        peripheral=peripheral,
        found=count,
    )


def _resolve_threads(threads):
    if threads is None:
        env = os.environ.get("ZEROSHEAR_THREADS")
        if env:
            threads = int(env)
        elif _walkcore is not None:
            threads = os.cpu_count() or 1
        else:
            # the pure kernel is GIL-bound; extra threads only add overhead
            threads = 1
    return max(1, int(threads))


def enumerate_classes(
    graph: RibbonGraph,
    trace_max: int,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    prune: bool = True,
    max_length: int | None = None,
    threads: int | None = None,
    _with_nodes: bool = False,
):
    """All primitive classes on ``graph`` with trace <= trace_max.

    Peripheral classes (the cusp loops, one per face) come from face
    tracing; essential classes from the pruned DFS, deduplicated up to
    rotation and reversal.  ``max_length`` caps the walk length (mainly
    for oracle comparisons), ``prune`` toggles the running-trace cutoff
    (never the structural termination caps), and ``node_cap`` bounds the
    DFS nodes, raising BudgetExceededError rather than truncating
    silently.

    Returns a tuple sorted by (trace, word, representative).
    """
    graph = as_graph(graph)
    if trace_max < 2:
        raise ValueError(f"trace_max must be >= 2, got {trace_max}")
    max_len = 0 if max_length is None else int(max_length)

    counts: dict[tuple[int, ...], int] = {}
    for face in graph.faces:
        if max_len and len(face) > max_len:
            continue
        counts[walk_class_key(graph, face)] = 1

    nl, nr = _graph_arrays(graph)
    total_nodes = 0
    budget_hit = False
    raw_paths: list[tuple[int, ...]] = []
    threads = _resolve_threads(threads)

    if trace_max >= 3:
        lock = Lock()

        def run_start(start):
            nonlocal total_nodes, budget_hit
            with lock:
                if budget_hit:
                    return []
                remaining = node_cap - total_nodes
            if remaining <= 0:
                with lock:
                    budget_hit = True
                return []
            paths, nodes, hit = _explore(nl, nr, start, trace_max, remaining, prune, max_len)
            with lock:
                total_nodes += nodes
                if hit or total_nodes > node_cap:
                    budget_hit = True
            return paths

        starts = range(graph.n_darts)
        if threads == 1:
            for s in starts:
                raw_paths.extend(run_start(s))
                if budget_hit:
                    break
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for paths in pool.map(run_start, starts):
                    raw_paths.extend(paths)

    for path in raw_paths:
        if not is_primitive_walk(path):
            continue
        key = walk_class_key(graph, path)
        counts[key] = counts.get(key, 0) + 1
    # every peripheral class must be a face walk (always-left orbits)
    face_keys = {walk_class_key(graph, f) for f in graph.faces}
    classes = []
    for key, count in counts.items():
        cls = _make_class(graph, key, count)
        if cls.peripheral and key not in face_keys:  # pragma: no cover
            raise NotAWalkError("peripheral class not matching any face")
        classes.append(cls)
    classes.sort(key=GeodesicClass.sort_key)
    result = tuple(classes)

    if budget_hit:
        raise BudgetExceededError(
            f"node cap {node_cap} exceeded after {total_nodes} nodes",
            partial=result,
            nodes=total_nodes,
        )
    if _with_nodes:
        return result, total_nodes
    return result


# -- systoles -----------------------------------------------------------------------

def trace_budget_for(graph: RibbonGraph) -> tuple[int, float, str]:
    """Certified trace budget from the least proof-backed length bound.

    Returns (trace_max, bound_value, bound_name).  Every class of length
    <= bound has trace <= 2 cosh(bound/2), so enumeration below the
    ceiling of that is complete for systoles.
    """
    topo = as_graph(graph).topology()
    bounds = formulas.sys_upper(formulas.Signature(topo.genus, topo.cusps))
    return (
        math.ceil(2.0 * math.cosh(bounds.minimum / 2.0)),
        bounds.minimum,
        bounds.minimum_source,
    )


@dataclass(frozen=True)
class SystoleResult:
    """Systole length with every attaining class, plus the enumeration context."""

    length: float
    trace: int
    classes: tuple[GeodesicClass, ...]
    all_classes: tuple[GeodesicClass, ...]
    trace_budget: int
    bound_used: str | None

    @property
    def kissing_number(self) -> int:
        return len(self.classes)


def systole(
    graph: RibbonGraph,
    *,
    trace_max: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
    threads: int | None = None,
) -> SystoleResult:
    """Shortest essential classes, certified complete.

    Without an explicit ``trace_max`` the budget comes from the least
    applicable upper bound on systole length, so the enumeration
    provably sees every candidate.  Raises NoEssentialCurveError when no
    essential class exists below the budget (only possible with a
    user-supplied trace_max).
    """
    graph = as_graph(graph)
    if trace_max is None:
        budget, _, source = trace_budget_for(graph)
    else:
        budget, source = int(trace_max), None
    classes = enumerate_classes(graph, budget, node_cap=node_cap, threads=threads)
    essential = [c for c in classes if not c.peripheral]
    if not essential:
        raise NoEssentialCurveError(
            f"no essential class with trace <= {budget}"
            + ("" if trace_max is None else " (user-supplied budget)")
        )
    best = min(c.trace for c in essential)
    attaining = tuple(c for c in essential if c.trace == best)
    return SystoleResult(
        length=2.0 * math.acosh(best / 2.0),
        trace=best,
        classes=attaining,
        all_classes=classes,
        trace_budget=budget,
        bound_used=source,
    )


def kissing_number(
    graph: RibbonGraph,
    *,
    trace_max: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
    threads: int | None = None,
) -> int:
    """Number of distinct systole classes (non-oriented)."""
    return systole(
        graph, trace_max=trace_max, node_cap=node_cap, threads=threads
    ).kissing_number
