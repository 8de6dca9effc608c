"""Pure-Python kernel for the closed-walk depth-first search.

Semantics match the compiled kernel in ``_walkcore.pyx``; this module is
the arbitrary-precision fallback and the reference implementation.

The search explores non-backtracking walks from a start dart, visiting
only darts >= start (rotation dedup happens by always starting a cycle
at its least dart).  A closed path is recorded whenever the walk can
step back onto the start dart with running matrix trace <= trace_max.

Termination never relies on the trace cutoff alone:

* run cap      -- a closed walk containing both letters and a single-letter
                  run of length r has trace >= r + 2, so runs longer than
                  trace_max - 2 are dead.  Pure single-letter walks are the
                  cusp loops, enumerated separately by face tracing.
* change cap   -- a walk whose prefix has c letter changes contains an
                  alternating subword of length c + 1, hence trace at least
                  Tr((LR)^floor((c+1)/2)), which grows like 3^k.

Both caps are structural consequences of subword trace monotonicity and
stay active when ``prune`` is False; the toggle only controls the
running-trace cutoff whose soundness the test suite checks.
"""

from __future__ import annotations

__all__ = ["explore_from", "change_cap_for"]


def change_cap_for(trace_max: int) -> int:
    """Largest letter-change count not forced above trace_max.

    Uses Tr((LR)^k): 3, 7, 18, 47, ... (Chebyshev-like recursion
    t_{k+1} = 3 t_k - t_{k-1}); a prefix with c changes closes to trace
    at least t_floor((c+1)/2).
    """
    traces = [2, 3]
    while traces[-1] <= trace_max:
        traces.append(3 * traces[-1] - traces[-2])
    k_max = len(traces) - 2  # largest k with t_k <= trace_max
    return 2 * k_max + 1


def explore_from(next_left, next_right, start, trace_max, node_budget, prune,
                 max_len=0):
    """DFS from ``start``; returns (closed paths, nodes visited, budget_hit).

    ``max_len`` > 0 additionally caps the walk length (used by the
    pruning-soundness comparisons).  ``node_budget`` < 0 means unlimited.
    """
    run_cap = trace_max - 2
    change_cap = change_cap_for(trace_max)
    results = []
    nodes = 0

    # parallel stacks indexed by depth; frame = next child letter to try
    path = [start]
    mats = [(1, 0, 0, 1)]
    runs = [0]          # length of the trailing single-letter run
    letters = [-1]      # letter that entered the current dart (0 = L, 1 = R)
    changes = [0]
    frames = [0]

    while frames:
        child = frames[-1]
        if child == 2:
            frames.pop()
            path.pop()
            mats.pop()
            runs.pop()
            letters.pop()
            changes.pop()
            continue
        frames[-1] += 1
        cur = path[-1]
        nd = next_left[cur] if child == 0 else next_right[cur]
        if nd < start:
            continue

        nodes += 1
        if 0 <= node_budget < nodes:
            return results, nodes, True

        a, b, c, d = mats[-1]
        if child == 0:      # append L
            b += a
            d += c
        else:               # append R
            a += b
            c += d
        tr = a + d

        same = letters[-1] == child
        run = runs[-1] + 1 if same else 1
        if run > run_cap:
            continue
        chg = changes[-1] + (0 if same or letters[-1] < 0 else 1)
        if chg > change_cap:
            continue
        depth = len(path)   # length of the walk if it closes now
        if nd == start and tr <= trace_max:
            results.append(tuple(path))
        if max_len and depth + 1 > max_len:
            continue
        if prune and tr > trace_max:
            continue
        path.append(nd)
        mats.append((a, b, c, d))
        runs.append(run)
        letters.append(child)
        changes.append(chg)
        frames.append(0)

    return results, nodes, False
