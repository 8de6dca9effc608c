import pytest

from zeroshear import from_gluing, preset, trace
from zeroshear.enumeration import is_primitive_walk, walk_class_key, word_of_walk


def brute_force_keys(graph, max_len, trace_bound):
    """Oracle: every primitive non-backtracking closed walk of length at
    most max_len, found with no pruning of any kind, keyed up to rotation
    and reversal and filtered to trace <= trace_bound."""
    nl, nr = graph.next_left, graph.next_right
    keys = {}
    for start in range(graph.n_darts):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            cur = path[-1]
            for nd in (nl[cur], nr[cur]):
                if nd == start and is_primitive_walk(path):
                    t = trace(word_of_walk(graph, path))
                    if t <= trace_bound:
                        keys[walk_class_key(graph, path)] = t
                if len(path) < max_len:
                    stack.append(path + (nd,))
    return keys


@pytest.fixture(scope="session")
def torus16():
    return preset("torus16")


@pytest.fixture(scope="session")
def sphere4():
    return preset("sphere4")


@pytest.fixture(scope="session")
def genus2():
    return preset("genus", 2)


@pytest.fixture(scope="session")
def genus3():
    return preset("genus", 3)


@pytest.fixture(scope="session")
def modular_torus():
    """Two ideal triangles glued by the rotation pairing: signature (1, 1).

    The classical once-punctured modular torus; systole 2 arccosh(3/2)
    with three systoles pairwise intersecting once.  Used as an
    independent correctness anchor throughout.
    """
    return from_gluing([((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))])


@pytest.fixture(scope="session")
def triple_sphere():
    """Two ideal triangles glued by the reflection pairing: the double of
    the ideal triangle, a thrice-punctured sphere (0, 3)."""
    return from_gluing([((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))])
