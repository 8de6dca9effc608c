import pytest

from zeroshear import from_gluing, load_surface, preset, save_surface
from zeroshear.errors import (
    BadGenusError,
    DisconnectedError,
    SurfaceFormatError,
    UnknownPresetError,
    UnpairedSideError,
)


class TestFromGluing:
    def test_two_triangles_all_sides(self, triple_sphere):
        assert triple_sphere.triangles == 2
        assert triple_sphere.topology().signature == (0, 3)

    def test_self_glued_side_rejected(self):
        with pytest.raises(UnpairedSideError):
            from_gluing([((0, 0), (0, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2)),
                         ((1, 0), (1, 0))])

    def test_missing_side_rejected(self):
        with pytest.raises(UnpairedSideError):
            from_gluing([((0, 0), (1, 0)), ((0, 1), (1, 1))], triangles=2)

    def test_double_gluing_rejected(self):
        with pytest.raises(UnpairedSideError):
            from_gluing([((0, 0), (1, 0)), ((0, 0), (1, 1)),
                         ((0, 1), (1, 2)), ((0, 2), (1, 2))])

    def test_disconnected_rejected(self):
        # two separate modular tori
        pairs = [((0, s), (1, s)) for s in range(3)]
        pairs += [((2, s), (3, s)) for s in range(3)]
        with pytest.raises(DisconnectedError):
            from_gluing(pairs)


class TestPresets:
    def test_torus16_topology(self, torus16):
        topo = torus16.topology()
        assert topo.signature == (1, 16)
        assert topo.triangles == 32
        assert topo.edges == 48

    def test_torus16_census_all_hexagons(self, torus16):
        assert torus16.dual.face_census() == {6: 16}

    def test_genus2(self, genus2):
        assert genus2.topology().signature == (2, 46)
        assert genus2.dual.face_census() == {6: 45, 18: 1}

    def test_genus3(self, genus3):
        assert genus3.topology().signature == (3, 92)
        assert genus3.dual.face_census() == {6: 91, 30: 1}

    def test_sphere4(self, sphere4):
        assert sphere4.topology().signature == (0, 4)
        assert sphere4.dual.face_census() == {3: 4}

    def test_triple_sphere_census(self, triple_sphere):
        assert triple_sphere.dual.face_census() == {2: 3}

    def test_modular_torus(self, modular_torus):
        assert modular_torus.topology().signature == (1, 1)
        assert modular_torus.dual.face_census() == {6: 1}

    @pytest.mark.parametrize("g", range(2, 9))
    def test_genus_family_census(self, g):
        """One face of degree 12g-6, 46g-47 hexagons, for g in 2..8."""
        surface = preset("genus", g)
        topo = surface.topology()
        assert topo.signature == (g, 46 * g - 46)
        assert topo.triangles == 96 * (g - 1)
        census = surface.dual.face_census()
        assert census == {6: 46 * g - 47, 12 * g - 6: 1}
        # handshake: face degrees sum to the dart count
        assert sum(deg * cnt for deg, cnt in census.items()) == 2 * topo.edges

    @pytest.mark.parametrize(
        "name,g", [("torus16", None), ("sphere4", None), ("genus", 2), ("genus", 5)]
    )
    def test_euler_formula(self, name, g):
        topo = preset(name, g).topology()
        assert topo.cusps - topo.edges + topo.triangles == 2 - 2 * topo.genus
        assert 3 * topo.genus - 3 + topo.cusps > 0
        assert topo.edges * 2 == 3 * topo.triangles

    def test_unknown_preset(self):
        with pytest.raises(UnknownPresetError):
            preset("klein")

    def test_bad_genus(self):
        with pytest.raises(BadGenusError):
            preset("genus", 1)
        with pytest.raises(BadGenusError):
            preset("genus")


class TestRibbonGraph:
    def test_faces_partition_darts(self, torus16):
        graph = torus16.dual
        seen = [d for face in graph.faces for d in face]
        assert sorted(seen) == list(range(graph.n_darts))

    def test_cubic(self, genus2):
        graph = genus2.dual
        from collections import Counter

        at_vertex = Counter(d // 3 for d in range(graph.n_darts))
        assert set(at_vertex.values()) == {3}

    def test_rev_is_fixed_point_free_involution(self, sphere4):
        graph = sphere4.dual
        for d in range(graph.n_darts):
            assert graph.rev[d] != d
            assert graph.rev[graph.rev[d]] == d

    def test_next_maps_are_permutations(self, torus16):
        graph = torus16.dual
        n = graph.n_darts
        assert sorted(graph.next_left) == list(range(n))
        assert sorted(graph.next_right) == list(range(n))
        for d in range(n):
            assert graph.next_left[d] != graph.rev[d]
            assert graph.next_right[d] != graph.rev[d]


class TestSurfaceFiles:
    def test_round_trip(self, tmp_path, genus2):
        path = tmp_path / "g2.surf"
        save_surface(genus2, path)
        loaded = load_surface(path)
        assert loaded.gluing == genus2.gluing

    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.surf"
        path.write_text("0 0 1 0\n")
        with pytest.raises(SurfaceFormatError):
            load_surface(path)

    def test_bad_record(self, tmp_path):
        path = tmp_path / "bad.surf"
        path.write_text("triangles 2\n0 0 1\n")
        with pytest.raises(SurfaceFormatError):
            load_surface(path)

    def test_invalid_gluing_is_format_error(self, tmp_path):
        path = tmp_path / "bad.surf"
        path.write_text("triangles 2\n0 0 1 0\n0 1 1 1\n")
        with pytest.raises(SurfaceFormatError):
            load_surface(path)

    def test_comments_and_blanks_ignored(self, tmp_path, sphere4):
        path = tmp_path / "s4.surf"
        save_surface(sphere4, path)
        text = "# tetrahedral pattern\n\n" + path.read_text()
        path.write_text(text)
        assert load_surface(path).gluing == sphere4.gluing
