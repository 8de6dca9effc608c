"""Intersection numbers, surgery, and classification of curve classes.

Curves are closed non-backtracking walks on the dual ribbon graph.  The
universal cover of the graph is a planar tree, so two lifts of curves
cross if and only if they share a (nonempty) segment and leave it on
opposite sides.  On a trivalent graph every crossing pair of lifts
shares at least one full edge, which turns the geometric intersection
number into a count over maximal common dart runs: contract each common
subpath and test whether the four divergence darts interleave in the
vertex cyclic orders.  Runs that exit on the same side are exactly the
bigons, so the count is already fully reduced.

Cutting the surface along simple disjoint curves works in the ribbon
thickening: each edge band is cut along its strands into lanes, each
trivalent vertex disk along its chords into regions, cusp disks are
reattached along their face circles, and Euler characteristic, cusp and
boundary bookkeeping run over the glued pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from . import words
from .enumeration import (
    GeodesicClass,
    SystoleResult,
    as_graph,
    is_primitive_walk,
    reversed_walk,
    systole,
    walk_class_key,
    word_of_walk,
)
from .errors import (
    NonPrimitiveWalkError,
    NotSimpleError,
    PeripheralCurveError,
)
from .surfaces import RibbonGraph

__all__ = [
    "CutComponent",
    "SystoleClassification",
    "classify_systoles",
    "crossing_number",
    "cut_along",
    "cut_along_many",
    "self_crossings",
]


def _as_darts(walk) -> tuple[int, ...]:
    if isinstance(walk, GeodesicClass):
        return walk.darts
    return tuple(walk)


def _checked_walk(graph: RibbonGraph, walk) -> tuple[int, ...]:
    darts = _as_darts(walk)
    word_of_walk(graph, darts)  # validates adjacency and non-backtracking
    if not is_primitive_walk(darts):
        raise NonPrimitiveWalkError(
            "walk is a proper power; crossing data is defined for primitive classes"
        )
    return darts


# -- maximal common runs -----------------------------------------------------

def _maximal_matches(a, b, cap):
    """Maximal runs (i, j, k): a[i..i+k-1] == b[j..j+k-1] cyclically.

    A run longer than ``cap`` means the two periodic dart sequences
    coincide, i.e. the walks are powers of a common class.
    """
    m, n = len(a), len(b)
    for i in range(m):
        ai = a[i]
        for j in range(n):
            if ai != b[j] or a[i - 1] == b[j - 1]:
                continue
            k = 1
            while k <= cap and a[(i + k) % m] == b[(j + k) % n]:
                k += 1
            if k > cap:
                raise NonPrimitiveWalkError("infinite overlap: walks share a power")
            yield i, j, k


def _match_crosses(graph: RibbonGraph, a, b, i, j, k) -> bool:
    """Side-swap test at the two ends of a maximal common run.

    Forward end: the walk exiting via the left turn lies left of the
    shared segment.  Backward end: the walk that entered the first
    shared dart c by a left turn (predecessor rev(sigma(c))) lies left.
    A crossing occurs iff walk ``a`` is on different sides at the two
    ends; equal sides form a bigon and do not count.
    """
    m, n = len(a), len(b)
    c_last = a[(i + k - 1) % m]
    fwd_left = a[(i + k) % m] == graph.next_left[c_last]
    c_first = a[i]
    bwd_left = a[i - 1] == graph.rev[graph.sigma[c_first]]
    return fwd_left != bwd_left


def self_crossings(graph, walk) -> int:
    """Minimal self-crossing number of the walk's free homotopy class.

    Zero certifies a simple (embedded) class.  Counts crossing pairs of
    lifts in the universal-cover tree; every surface self-crossing is
    seen by exactly two ordered lift pairs, hence the halving.
    """
    graph = as_graph(graph)
    a = _checked_walk(graph, walk)
    cap = 2 * len(a) + 1
    raw = 0
    for b in (a, reversed_walk(graph, a)):
        for i, j, k in _maximal_matches(a, b, cap):
            if b is a and i == j:  # pragma: no cover - run starts never sit on the diagonal
                continue
            if _match_crosses(graph, a, b, i, j, k):
                raw += 1
    if raw % 2:  # pragma: no cover
        raise RuntimeError("lift crossing count must be even")
    return raw // 2


def crossing_number(graph, walk_a, walk_b) -> int:
    """Geometric intersection number of two primitive classes.

    Symmetric and invariant under rotation and reversal of either walk.
    For two representatives of the same class this is twice the
    self-crossing number (simple classes give 0).
    """
    graph = as_graph(graph)
    a = _checked_walk(graph, walk_a)
    b = _checked_walk(graph, walk_b)
    if walk_class_key(graph, a) == walk_class_key(graph, b):
        return 2 * self_crossings(graph, a)
    # crossing lifts share an edge (trivalent pigeonhole), so disjoint
    # edge sets settle the count immediately
    rev = graph.rev
    if not {min(d, rev[d]) for d in a} & {min(d, rev[d]) for d in b}:
        return 0
    cap = len(a) + len(b) + 1
    total = 0
    for bor in (b, reversed_walk(graph, b)):
        for i, j, k in _maximal_matches(a, bor, cap):
            if _match_crosses(graph, a, bor, i, j, k):
                total += 1
    return total


# -- strand orders for surgery ----------------------------------------------------

def _strand_rays(graph, walks, strand):
    """Forward and backward dart rays of a strand, oriented along the
    canonical dart of its band."""
    w, p, fwd = strand
    walk = walks[w]
    m = len(walk)
    rev = graph.rev
    if fwd:
        return (
            lambda k: walk[(p + k) % m],
            lambda k: walk[(p - k) % m],
        )
    return (
        lambda k: rev[walk[(p - k) % m]],
        lambda k: rev[walk[(p + k) % m]],
    )


def _strand_order(graph, walks, d_e, strands):
    """Strands of one band sorted left-to-right along the canonical dart.

    Two strands diverge within len-sum steps (they belong to simple,
    pairwise disjoint, primitive classes); the position is read off the
    turn taken at the divergence vertex, and the forward and backward
    readings must agree precisely because the curves do not cross.
    """
    cap = sum(len(w) for w in walks) + 1

    def compare(s1, s2):
        if s1 == s2:
            return 0
        f1, b1 = _strand_rays(graph, walks, s1)
        f2, b2 = _strand_rays(graph, walks, s2)
        fwd = 0
        prev = d_e
        for k in range(1, cap + 1):
            x, y = f1(k), f2(k)
            if x != y:
                fwd = -1 if x == graph.next_left[prev] else 1
                break
            prev = x
        else:  # pragma: no cover
            raise NonPrimitiveWalkError("strands never diverge forward")
        bwd = 0
        prev = d_e
        for k in range(1, cap + 1):
            x, y = b1(k), b2(k)
            if x != y:
                bwd = -1 if x == graph.rev[graph.sigma[prev]] else 1
                break
            prev = x
        else:  # pragma: no cover
            raise NonPrimitiveWalkError("strands never diverge backward")
        if fwd != bwd:  # pragma: no cover - precluded by simplicity/disjointness
            raise NotSimpleError("strand order is inconsistent (curves cross)")
        return fwd

    return sorted(strands, key=cmp_to_key(compare))


# -- cutting -------------------------------------------------------------------------

@dataclass(frozen=True)
class CutComponent:
    """One component of the cut surface.

    ``boundary_sides`` lists (walk index, 'left'|'right') for each
    boundary circle; ``cusp_faces`` the face indices of its cusps.
    """

    genus: int
    cusps: int
    boundaries: int
    cusp_faces: tuple[int, ...]
    boundary_sides: tuple[tuple[int, str], ...]

    @property
    def signature(self) -> tuple[int, int, int]:
        return (self.genus, self.cusps, self.boundaries)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def cut_along_many(graph, walks) -> tuple[CutComponent, ...]:
    """Cut the surface along several pairwise disjoint simple curves.

    Each walk must be essential, primitive, simple, and disjoint from
    the others; the result lists per-component genus, cusp count and
    boundary circles with their provenance.  Total Euler characteristic
    is conserved.
    """
    graph = as_graph(graph)
    walks = [_checked_walk(graph, w) for w in walks]
    for w in walks:
        if words.trace(word_of_walk(graph, w)) == 2:
            raise PeripheralCurveError("cannot cut along a cusp loop")
        if self_crossings(graph, w) > 0:
            raise NotSimpleError("cut curve has self-crossings")
    for wa, wb in combinations(walks, 2):
        if walk_class_key(graph, wa) == walk_class_key(graph, wb):
            raise ValueError("cut curves must be distinct classes")
        if crossing_number(graph, wa, wb) > 0:
            raise ValueError("cut curves must be pairwise disjoint")

    rev = graph.rev
    # strands per band, sorted across the band
    bands: dict[int, list] = {}
    for w_idx, walk in enumerate(walks):
        for p, d in enumerate(walk):
            e = min(d, rev[d])
            bands.setdefault(e, []).append((w_idx, p, d == e))
    for e, strands in bands.items():
        bands[e] = _strand_order(graph, walks, e, strands)

    uf = _UnionFind()
    gap_count: dict = {}

    def glue(strip_key, region_key):
        uf.union(strip_key, region_key)
        gap_count[strip_key] = gap_count.get(strip_key, 0) + 1

    # ensure every piece exists in the union-find even if untouched
    for e in range(graph.n_darts):
        if e == min(e, rev[e]):
            for lane in range(len(bands.get(e, ())) + 1):
                uf.find(("strip", e, lane))
    for f in range(len(graph.faces)):
        uf.find(("face", f))

    chord_side_pieces = []  # (walk, 'left'/'right', region piece) witnesses

    for v in range(graph.n_vertices):
        ports = [3 * v, 3 * v + 1, 3 * v + 2]
        # circular boundary: per port a gap-slot-...-gap run, then a corner arc
        items = []  # ('slot', port, strand) / ('gap', e, lane) / ('corner', face)
        for x in ports:
            e = min(x, rev[x])
            strands = bands.get(e, ())
            k = len(strands)
            order = range(k - 1, -1, -1) if x == e else range(k)
            order = list(order)
            for ccw_j in range(k + 1):
                lane = (k - ccw_j) if x == e else ccw_j
                items.append(("gap", e, lane))
                if ccw_j < k:
                    items.append(("slot", x, strands[order[ccw_j]]))
            items.append(("corner", graph.face_of[x]))

        slots = [(idx, it) for idx, it in enumerate(items) if it[0] == "slot"]
        if not slots:
            region = ("region", v, 0)
            for it in items:
                if it[0] == "gap":
                    glue(("strip", it[1], it[2]), region)
                else:
                    uf.union(("face", it[1]), region)
            continue

        node_of = {}  # (port, strand) -> node id
        for node, (idx, it) in enumerate(slots):
            node_of[(it[1], it[2])] = node

        # chords: one per walk step through this vertex, in travel order
        chords = []
        chord_info = []
        for w_idx, walk in enumerate(walks):
            m = len(walk)
            for p, d in enumerate(walk):
                if graph.head(d) != v:
                    continue
                d_next = walk[(p + 1) % m]
                e_in = min(d, rev[d])
                e_out = min(d_next, rev[d_next])
                u = node_of[(rev[d], (w_idx, p, d == e_in))]
                t = node_of[(d_next, (w_idx, (p + 1) % m, d_next == e_out))]
                chords.append((u, t))
                chord_info.append(w_idx)

        region_of_arc, chord_left, chord_right = _split_disk(len(slots), chords)

        # attribute gaps and corners to the arc they sit on
        positions = [idx for idx, _ in slots]
        n_items = len(items)
        for arc, (idx, _) in enumerate(slots):
            nxt_idx = positions[(arc + 1) % len(positions)]
            region = ("region", v, region_of_arc[arc])
            i = (idx + 1) % n_items
            while i != nxt_idx:
                it = items[i]
                if it[0] == "gap":
                    glue(("strip", it[1], it[2]), region)
                elif it[0] == "corner":
                    uf.union(("face", it[1]), region)
                i = (i + 1) % n_items

        for j, w_idx in enumerate(chord_info):
            chord_side_pieces.append((w_idx, "left", ("region", v, chord_left[j])))
            chord_side_pieces.append((w_idx, "right", ("region", v, chord_right[j])))

    # tally pieces per component
    comp_data: dict = {}

    def bucket(root):
        return comp_data.setdefault(
            root, {"pieces": 0, "gaps": 0, "faces": 0, "cusps": [], "sides": {}}
        )

    for e in range(graph.n_darts):
        if e != min(e, rev[e]):
            continue
        k = len(bands.get(e, ()))
        for lane in range(k + 1):
            key = ("strip", e, lane)
            b = bucket(uf.find(key))
            b["pieces"] += 1
            b["gaps"] += gap_count.get(key, 0)
    for v in range(graph.n_vertices):
        n_regions = 1 + sum(
            1 for w_idx, walk in enumerate(walks) for d in walk if graph.head(d) == v
        )
        for rid in range(n_regions):
            key = ("region", v, rid)
            if key in uf.parent:
                bucket(uf.find(key))["pieces"] += 1
    for f in range(len(graph.faces)):
        b = bucket(uf.find(("face", f)))
        b["faces"] += 1
        b["cusps"].append(f)

    for w_idx, side, piece in chord_side_pieces:
        bucket(uf.find(piece))["sides"][(w_idx, side)] = True
    # each (walk, side) must land in exactly one component
    seen_sides: dict = {}
    for root, data in comp_data.items():
        for key in data["sides"]:
            if key in seen_sides and seen_sides[key] != root:  # pragma: no cover
                raise RuntimeError("boundary side split across components")
            seen_sides[key] = root

    components = []
    total_chi = 0
    for root, data in comp_data.items():
        chi = data["pieces"] - data["gaps"] + data["faces"]
        boundary_sides = tuple(sorted(data["sides"]))
        b = len(boundary_sides)
        genus2 = 2 - chi - b
        if genus2 < 0 or genus2 % 2:  # pragma: no cover
            raise RuntimeError(f"bad component data chi={chi} b={b}")
        total_chi += chi
        components.append(
            CutComponent(
                genus=genus2 // 2,
                cusps=data["faces"],
                boundaries=b,
                cusp_faces=tuple(sorted(data["cusps"])),
                boundary_sides=boundary_sides,
            )
        )
    topo = graph.topology()
    if total_chi != 2 - 2 * topo.genus:  # pragma: no cover
        raise RuntimeError("Euler characteristic not conserved by the cut")
    components.sort(key=lambda c: (c.genus, c.cusps, c.boundaries, c.cusp_faces))
    return tuple(components)


def _split_disk(n_nodes, chords):
    """Regions of a disk with boundary nodes 0..n-1 (counterclockwise) cut
    along pairwise non-crossing chords, every node ending one chord.

    Returns (region_of_arc, chord_left, chord_right): the region index of
    each boundary arc (arc i joins node i to i+1) and of the two sides of
    each chord (relative to its travel direction).
    """
    p = n_nodes

    def twin(h):
        kind, j, s = h
        return (kind, j, 1 - s)

    def head(h):
        kind, j, s = h
        if kind == "b":
            return (j + 1) % p if s == 0 else j
        u, v = chords[j]
        return v if s == 0 else u

    chord_at = {}
    for j, (u, v) in enumerate(chords):
        for node, s in ((u, 0), (v, 1)):
            if node in chord_at:  # pragma: no cover
                raise RuntimeError("node with two chord ends")
            chord_at[node] = ("c", j, s)

    def nxt(h):
        q = head(h)
        rot = [("b", (q - 1) % p, 1), ("b", q, 0)]
        if q in chord_at:
            rot.append(chord_at[q])
        t = twin(h)
        return rot[(rot.index(t) - 1) % len(rot)]

    halves = [("b", i, s) for i in range(p) for s in (0, 1)]
    halves += [("c", j, s) for j in range(len(chords)) for s in (0, 1)]
    orbit_of = {}
    n_orbits = 0
    for h0 in halves:
        if h0 in orbit_of:
            continue
        h = h0
        while h not in orbit_of:
            orbit_of[h] = n_orbits
            h = nxt(h)
        n_orbits += 1

    outer = orbit_of[("b", 0, 1)]

    def region(h):
        o = orbit_of[h]
        if o == outer:  # pragma: no cover
            raise RuntimeError("interior element traced the outer face")
        return o - (1 if o > outer else 0)

    region_of_arc = [region(("b", i, 0)) for i in range(p)]
    chord_left = [region(("c", j, 0)) for j in range(len(chords))]
    chord_right = [region(("c", j, 1)) for j in range(len(chords))]
    return region_of_arc, chord_left, chord_right


def cut_along(graph, walk) -> tuple[CutComponent, ...]:
    """Cut the surface along one simple essential curve.

    Raises PeripheralCurveError for cusp loops and NotSimpleError for
    self-crossing walks.  One curve yields either one component with two
    boundary circles or two components with one each.
    """
    return cut_along_many(graph, [walk])


# -- systole classification ------------------------------------------------------------

@dataclass(frozen=True)
class SystoleClassification:
    """Label of a systole class.

    A: bounds two cusps (witnesses = the two cusp face indices).
    B: not A, but together with another non-A systole bounds a cusp
       (witness = the partner's canonical walk).
    C: everything else.
    """

    label: str
    witnesses: tuple


def classify_systoles(
    graph,
    *,
    result: SystoleResult | None = None,
    trace_max: int | None = None,
    node_cap: int | None = None,
    threads: int | None = None,
) -> dict[GeodesicClass, SystoleClassification]:
    """Split the systole classes into the two-cusp / cusp-bounding /
    generic families.

    A systole is A when cutting along it leaves a (genus 0, 2 cusps,
    1 boundary) component; two disjoint non-A systoles are B when
    cutting along both leaves a (0, 1, 2) pair of pants carrying one
    boundary copy of each.
    """
    graph = as_graph(graph)
    if result is None:
        kwargs = {"trace_max": trace_max}
        if node_cap is not None:
            kwargs["node_cap"] = node_cap
        if threads is not None:
            kwargs["threads"] = threads
        result = systole(graph, **kwargs)

    labels: dict[GeodesicClass, SystoleClassification] = {}
    simple = {}
    for cls in result.classes:
        simple[cls] = self_crossings(graph, cls.darts) == 0
        if not simple[cls]:
            continue
        for comp in cut_along(graph, cls.darts):
            if comp.signature == (0, 2, 1):
                labels[cls] = SystoleClassification("A", comp.cusp_faces)
                break

    non_a = [cls for cls in result.classes if cls not in labels]
    b_partner: dict[GeodesicClass, GeodesicClass] = {}
    for one, two in combinations(non_a, 2):
        if not (simple[one] and simple[two]):
            continue
        if crossing_number(graph, one.darts, two.darts) != 0:
            continue
        for comp in cut_along_many(graph, [one.darts, two.darts]):
            if comp.signature == (0, 1, 2):
                walks_on_boundary = {w for w, _ in comp.boundary_sides}
                if walks_on_boundary == {0, 1}:
                    b_partner.setdefault(one, two)
                    b_partner.setdefault(two, one)
    for cls in non_a:
        if cls in b_partner:
            labels[cls] = SystoleClassification("B", (b_partner[cls].darts,))
        else:
            labels[cls] = SystoleClassification("C", ())
    return labels
