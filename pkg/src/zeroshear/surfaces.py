"""Combinatorial ideal triangulations and their dual ribbon graphs.

A surface is described by T ideal triangles and a fixed-point-free
involution pairing their 3T sides.  Sides of triangle t are numbered
3*t + s for s in {0, 1, 2}, in the counterclockwise order of the
triangle; every gluing identifies two sides reversing the induced
boundary orientation, so any valid table yields an oriented surface.
Gluing ideal triangles so that their inscribed-disk tangency points
match ("zero shear") then equips it with a complete finite-area
hyperbolic metric; everything downstream is determined by the
combinatorics, so no coordinates are stored.

The dual ribbon graph has one trivalent vertex per triangle and one
edge per gluing pair, with the counterclockwise order of darts at a
vertex inherited from the triangle's side order.  Its faces (orbits of
the always-turn-left map) correspond to the cusps.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadGenusError,
    DisconnectedError,
    SurfaceFormatError,
    UnknownPresetError,
    UnpairedSideError,
)

__all__ = [
    "IdealTriangulation",
    "RibbonGraph",
    "SurfaceTopology",
    "from_gluing",
    "preset",
    "PRESET_NAMES",
    "load_surface",
    "save_surface",
]

PRESET_NAMES = ("torus16", "genus", "sphere4")


@dataclass(frozen=True)
class SurfaceTopology:
    """Genus and cusp count of the compactified surface, plus raw sizes."""

    genus: int
    cusps: int
    triangles: int
    edges: int

    @property
    def signature(self) -> tuple[int, int]:
        return (self.genus, self.cusps)


class IdealTriangulation:
    """T ideal triangles with a validated side pairing.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, gluing):
        gluing = tuple(gluing)
        if len(gluing) % 3:
            raise UnpairedSideError(f"side count {len(gluing)} is not a multiple of 3")
        n = len(gluing)
        for s, t in enumerate(gluing):
            if not 0 <= t < n:
                raise UnpairedSideError(f"side {s} glued to nonexistent side {t}")
            if t == s:
                raise UnpairedSideError(f"side {s} glued to itself")
            if gluing[t] != s:
                raise UnpairedSideError(f"sides {s} and {t} are not paired involutively")
        self.gluing = gluing
        self.triangles = n // 3
        self._check_connected()

    def _check_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for s in range(3):
                u = self.gluing[3 * t + s] // 3
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.triangles:
            raise DisconnectedError(
                f"only {len(seen)} of {self.triangles} triangles reachable"
            )

    @property
    def edges(self) -> int:
        return 3 * self.triangles // 2

    def pairs(self):
        """The gluing as ((tri, side), (tri, side)) pairs, each once."""
        for s, t in enumerate(self.gluing):
            if s < t:
                yield (divmod(s, 3), divmod(t, 3))

    @cached_property
    def dual(self) -> "RibbonGraph":
        return RibbonGraph(self)

    def topology(self) -> SurfaceTopology:
        """(g, n) via dual face tracing and the Euler formula n - E + T = 2 - 2g."""
        return self.dual.topology()

    def __repr__(self):
        return f"IdealTriangulation(T={self.triangles})"


def from_gluing(pairs, triangles=None) -> IdealTriangulation:
    """Build a triangulation from ((tri_a, side_a), (tri_b, side_b)) records.

    ``triangles`` may pin the triangle count; otherwise it is inferred
    from the largest index.  Raises UnpairedSideError for missing,
    repeated, or self-glued sides and DisconnectedError for a
    disconnected result.
    """
    records = [((ta, sa), (tb, sb)) for (ta, sa), (tb, sb) in pairs]
    if triangles is None:
        if not records:
            raise UnpairedSideError("empty gluing table")
        triangles = 1 + max(max(ta, tb) for (ta, _), (tb, _) in records)
    gluing = [-1] * (3 * triangles)
    for (ta, sa), (tb, sb) in records:
        for t, s in ((ta, sa), (tb, sb)):
            if not (0 <= t < triangles and 0 <= s < 3):
                raise UnpairedSideError(f"bad (triangle, side) = ({t}, {s})")
        i, j = 3 * ta + sa, 3 * tb + sb
        if gluing[i] != -1 or gluing[j] != -1:
            raise UnpairedSideError(f"side ({ta},{sa}) or ({tb},{sb}) glued twice")
        if i == j:
            raise UnpairedSideError(f"side ({ta},{sa}) glued to itself")
        gluing[i] = j
        gluing[j] = i
    missing = [divmod(s, 3) for s, t in enumerate(gluing) if t == -1]
    if missing:
        raise UnpairedSideError(f"unglued sides: {missing[:6]}{'...' if len(missing) > 6 else ''}")
    return IdealTriangulation(gluing)


class RibbonGraph:
    """Trivalent dual graph with cyclic dart order at each vertex.

    Darts are the side indices 3*t + s of the triangulation; the dart d
    points from triangle d//3 across side d into the glued neighbour.
    ``sigma`` is the counterclockwise next dart at a vertex; after
    traversing d, the two non-backtracking continuations are
    ``next_left[d]`` and ``next_right[d]``.
    """

    def __init__(self, triangulation: IdealTriangulation):
        self.triangulation = triangulation
        rev = triangulation.gluing
        n = len(rev)
        self.n_darts = n
        self.n_vertices = triangulation.triangles
        self.n_edges = n // 2
        self.rev = rev
        self.sigma = tuple(3 * (d // 3) + (d % 3 + 1) % 3 for d in range(n))
        sigma = self.sigma
        # entering along d: right turn exits via sigma(rev d), left via sigma^2(rev d)
        self.next_right = tuple(sigma[rev[d]] for d in range(n))
        self.next_left = tuple(sigma[sigma[rev[d]]] for d in range(n))

    def tail(self, d: int) -> int:
        return d // 3

    def head(self, d: int) -> int:
        return self.rev[d] // 3

    def edge(self, d: int) -> int:
        """Canonical dart of the unoriented edge carrying d."""
        return min(d, self.rev[d])

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of the always-turn-left map; one face per cusp."""
        seen = [False] * self.n_darts
        out = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.next_left[d]
            out.append(tuple(orbit))
        return tuple(out)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        """Face index of each dart (the face lying to the dart's left)."""
        idx = [-1] * self.n_darts
        for f, orbit in enumerate(self.faces):
            for d in orbit:
                idx[d] = f
        return tuple(idx)

    def face_census(self) -> dict[int, int]:
        """Multiset of face degrees, as a degree -> count mapping."""
        return dict(Counter(len(f) for f in self.faces))

    def topology(self) -> SurfaceTopology:
        t = self.n_vertices
        e = self.n_edges
        n = len(self.faces)
        chi = n - e + t
        genus, rem = divmod(2 - chi, 2)
        if rem:
            raise SurfaceFormatError(f"odd Euler characteristic {chi}")
        return SurfaceTopology(genus=genus, cusps=n, triangles=t, edges=e)

    def __repr__(self):
        return f"RibbonGraph(V={self.n_vertices}, E={self.n_edges})"


# -- preset constructions ----------------------------------------------------

class _EdgeMatcher:
    """Pairs up triangle-side occurrences that share a geometric edge."""

    def __init__(self):
        self.occ: dict[tuple, list[tuple[int, int]]] = {}

    def add(self, key, tri, side):
        self.occ.setdefault(key, []).append((tri, side))

    def interior_pairs(self):
        """Pairs for keys seen exactly twice; leftover singletons returned too."""
        pairs, single = [], {}
        for key, lst in self.occ.items():
            if len(lst) == 2:
                pairs.append((lst[0], lst[1]))
            elif len(lst) == 1:
                single[key] = lst[0]
            else:
                raise UnpairedSideError(f"edge {key} bounded by {len(lst)} triangles")
        return pairs, single


def _grid_triangles(cells, reduce_vertex=None):
    """Triangulate unit cells with a uniform diagonal; return (triangles, matcher).

    Each cell (x, y) splits along the diagonal (x, y)-(x+1, y+1) into a
    lower and an upper triangle, both counterclockwise.  Edge keys use
    ``reduce_vertex`` (identity by default), which lets the torus wrap
    coordinates.
    """
    if reduce_vertex is None:
        reduce_vertex = lambda v: v
    matcher = _EdgeMatcher()
    count = 0
    for (x, y) in cells:
        lower = ((x, y), (x + 1, y), (x + 1, y + 1))
        upper = ((x, y), (x + 1, y + 1), (x, y + 1))
        for verts in (lower, upper):
            for s in range(3):
                a = reduce_vertex(verts[s])
                b = reduce_vertex(verts[(s + 1) % 3])
                matcher.add(tuple(sorted((a, b))), count, s)
            count += 1
    return count, matcher


def _build_torus16() -> IdealTriangulation:
    """The 4x4 square block with opposite sides identified: (g, n) = (1, 16)."""
    cells = [(x, y) for y in range(4) for x in range(4)]
    count, matcher = _grid_triangles(cells, reduce_vertex=lambda v: (v[0] % 4, v[1] % 4))
    pairs, single = matcher.interior_pairs()
    if single:
        raise UnpairedSideError(f"torus16 left unglued edges: {sorted(single)[:4]}")
    return from_gluing(pairs, triangles=count)


def _build_sphere4() -> IdealTriangulation:
    """Four triangles in the tetrahedral pattern: (g, n) = (0, 4)."""
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    matcher = _EdgeMatcher()
    for t, verts in enumerate(faces):
        for s in range(3):
            key = tuple(sorted((verts[s], verts[(s + 1) % 3])))
            matcher.add(key, t, s)
    pairs, single = matcher.interior_pairs()
    if single:
        raise UnpairedSideError("tetrahedron edges failed to pair")
    return from_gluing(pairs, triangles=4)


def _genus_boundary_sides(g):
    """The 4g unit sides of the block polygon, counterclockwise from the
    bottom-left corner, as (start_point, unit_direction) in fine (x4) units.

    The polygon is a 1 x (g-1) row of square blocks on top of the left
    end of a 1 x 2(g-1) row; each block is 4x4 fine cells.
    """
    w_bot = 8 * (g - 1)   # fine width of the bottom row
    w_top = 4 * (g - 1)
    sides = []
    for u in range(2 * (g - 1)):                       # bottom, left to right
        sides.append(((4 * u, 0), (1, 0)))
    sides.append(((w_bot, 0), (0, 1)))                 # right wall of bottom row
    for u in range(g - 1):                             # exposed top of bottom row
        sides.append(((w_bot - 4 * u, 4), (-1, 0)))
    sides.append(((w_top, 4), (0, 1)))                 # right wall of top row
    for u in range(g - 1):                             # top of top row
        sides.append(((w_top - 4 * u, 8), (-1, 0)))
    sides.append(((0, 8), (0, -1)))                    # left wall of top row
    sides.append(((0, 4), (0, -1)))                    # left wall of bottom row
    assert len(sides) == 4 * g
    return sides


def _build_genus(g: int) -> IdealTriangulation:
    """3(g-1) square blocks with the boundary identified in the standard
    a1 b1 a1' b1' ... pattern: (g, n) = (g, 46g - 46)."""
    if g < 2:
        raise BadGenusError(f"genus preset needs g >= 2, got {g}")
    cells = [(x, y) for y in range(4) for x in range(8 * (g - 1))]
    cells += [(x, y) for y in range(4, 8) for x in range(4 * (g - 1))]
    count, matcher = _grid_triangles(cells)
    pairs, single = matcher.interior_pairs()

    def fine_edges(side):
        (sx, sy), (dx, dy) = side
        return [
            tuple(sorted(((sx + i * dx, sy + i * dy), (sx + (i + 1) * dx, sy + (i + 1) * dy))))
            for i in range(4)
        ]

    sides = _genus_boundary_sides(g)
    used = set()
    for k in range(4 * g):
        partner = k + 2 if k % 4 in (0, 1) else k - 2
        if partner < k:
            continue
        mine, theirs = fine_edges(sides[k]), fine_edges(sides[partner])
        for i in range(4):
            a, b = mine[i], theirs[3 - i]
            pairs.append((single[a], single[b]))
            used.update((a, b))
    if used != set(single):
        raise UnpairedSideError("genus preset boundary identification incomplete")
    return from_gluing(pairs, triangles=count)


def preset(name: str, g: int | None = None) -> IdealTriangulation:
    """Build a named preset surface.

    torus16     the 32-triangle square block on a torus, 16 cusps
    genus       3(g-1) blocks glued to a genus-g surface, 46g-46 cusps (g >= 2)
    sphere4     tetrahedral pattern of 4 triangles, a four-cusped sphere
    """
    if name == "torus16":
        return _build_torus16()
    if name == "sphere4":
        return _build_sphere4()
    if name == "genus":
        if g is None:
            raise BadGenusError("genus preset needs an explicit g >= 2")
        return _build_genus(g)
    raise UnknownPresetError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")


# -- surface files -------------------------------------------------------------

def save_surface(tri: IdealTriangulation, path) -> None:
    """Write the gluing table as text: a header line then one line per pair."""
    lines = [f"triangles {tri.triangles}"]
    for (ta, sa), (tb, sb) in tri.pairs():
        lines.append(f"{ta} {sa} {tb} {sb}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_surface(path) -> IdealTriangulation:
    """Read a gluing table written by :func:`save_surface`."""
    try:
        with open(path, encoding="ascii") as fh:
            raw = [ln.split("#", 1)[0].strip() for ln in fh]
    except OSError as exc:
        raise SurfaceFormatError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in raw if ln]
    if not lines or not lines[0].startswith("triangles"):
        raise SurfaceFormatError(f"{path}: missing 'triangles N' header")
    try:
        count = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise SurfaceFormatError(f"{path}: bad header {lines[0]!r}") from exc
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4:
            raise SurfaceFormatError(f"{path}: bad gluing record {ln!r}")
        try:
            ta, sa, tb, sb = map(int, parts)
        except ValueError as exc:
            raise SurfaceFormatError(f"{path}: bad gluing record {ln!r}") from exc
        pairs.append(((ta, sa), (tb, sb)))
    try:
        return from_gluing(pairs, triangles=count)
    except (UnpairedSideError, DisconnectedError) as exc:
        raise SurfaceFormatError(f"{path}: {exc}") from exc
