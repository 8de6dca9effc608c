# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the closed-walk depth-first search.

Mirrors ``_walkpure.explore_from`` exactly; see that module for the
search semantics and the termination argument.  Matrix entries use
checked 64-bit integers: exceeding the guard raises OverflowError and
the caller re-runs the start dart through the arbitrary-precision
pure-Python kernel.
"""

from cpython.list cimport PyList_Append
from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

DEF OVERFLOW_GUARD = 2305843009213693952  # 2**61


def change_cap_for(long trace_max):
    # largest k with Tr((LR)^k) <= trace_max, as in the pure kernel
    cdef int64_t prev = 2, cur = 3, nxt
    cdef long k = 0
    while cur <= trace_max:
        nxt = 3 * cur - prev
        prev = cur
        cur = nxt
        k += 1
    return 2 * k + 1


def explore_from(int[::1] next_left, int[::1] next_right, int start,
                 long trace_max, long long node_budget, bint prune,
                 long max_len=0):
    """DFS from ``start``; returns (closed paths, nodes visited, budget_hit)."""
    cdef long run_cap = trace_max - 2
    cdef long change_cap = change_cap_for(trace_max)
    cdef long depth_cap = max_len if max_len > 0 else run_cap * (change_cap + 1) + 2
    if depth_cap < 1:
        return [], 0, False

    cdef int n = next_left.shape[0]
    cdef long cap = depth_cap + 2
    cdef int *path = <int *> malloc(cap * sizeof(int))
    cdef signed char *frames = <signed char *> malloc(cap * sizeof(signed char))
    cdef signed char *letters = <signed char *> malloc(cap * sizeof(signed char))
    cdef long *runs = <long *> malloc(cap * sizeof(long))
    cdef long *changes = <long *> malloc(cap * sizeof(long))
    cdef int64_t *ma = <int64_t *> malloc(cap * sizeof(int64_t))
    cdef int64_t *mb = <int64_t *> malloc(cap * sizeof(int64_t))
    cdef int64_t *mc = <int64_t *> malloc(cap * sizeof(int64_t))
    cdef int64_t *md = <int64_t *> malloc(cap * sizeof(int64_t))
    if not (path and frames and letters and runs and changes and ma and mb and mc and md):
        free(<void *> path)
        free(<void *> frames)
        free(<void *> letters)
        free(<void *> runs)
        free(<void *> changes)
        free(<void *> ma)
        free(<void *> mb)
        free(<void *> mc)
        free(<void *> md)
        raise MemoryError()

    cdef long top = 0
    path[0] = start
    frames[0] = 0
    letters[0] = -1
    runs[0] = 0
    changes[0] = 0
    ma[0] = 1
    mb[0] = 0
    mc[0] = 0
    md[0] = 1

    cdef long long nodes = 0
    cdef bint budget_hit = False, overflow = False
    cdef int cur, nd
    cdef signed char child
    cdef int64_t a, b, c, d, tr
    cdef bint same
    cdef long run, chg, depth
    results = []

    try:
        while top >= 0:
            child = frames[top]
            if child == 2:
                top -= 1
                continue
            frames[top] = child + 1
            cur = path[top]
            nd = next_left[cur] if child == 0 else next_right[cur]
            if nd < start:
                continue
            nodes += 1
            if node_budget >= 0 and nodes > node_budget:
                budget_hit = True
                break
            a = ma[top]
            b = mb[top]
            c = mc[top]
            d = md[top]
            if child == 0:
                b += a
                d += c
            else:
                a += b
                c += d
            if a > OVERFLOW_GUARD or b > OVERFLOW_GUARD or c > OVERFLOW_GUARD or d > OVERFLOW_GUARD:
                overflow = True
                break
            tr = a + d
            same = letters[top] == child
            run = runs[top] + 1 if same else 1
            if run > run_cap:
                continue
            chg = changes[top] + (0 if same or letters[top] < 0 else 1)
            if chg > change_cap:
                continue
            depth = top + 1  # walk length if it closes now
            if nd == start and tr <= trace_max:
                PyList_Append(results, tuple([path[i] for i in range(depth)]))
            if depth + 1 > depth_cap:
                continue
            if prune and tr > trace_max:
                continue
            top += 1
            path[top] = nd
            frames[top] = 0
            letters[top] = child
            runs[top] = run
            changes[top] = chg
            ma[top] = a
            mb[top] = b
            mc[top] = c
            md[top] = d
    finally:
        free(<void *> path)
        free(<void *> frames)
        free(<void *> letters)
        free(<void *> runs)
        free(<void *> changes)
        free(<void *> ma)
        free(<void *> mb)
        free(<void *> mc)
        free(<void *> md)

    if overflow:
        raise OverflowError("64-bit trace arithmetic exceeded; use the pure kernel")
    return results, nodes, budget_hit
