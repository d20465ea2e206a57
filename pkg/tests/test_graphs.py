import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from twinhanoi import graphs
from twinhanoi.errors import CacheError, CapacityExceeded, Incompatible
from twinhanoi.words import CoupledConfig


def P(word):
    return graphs.pack_config(word)


def PC(top, bottom):
    return graphs.pack_coupled(CoupledConfig.of(top, bottom))


class TestPacking:
    @given(st.text(alphabet="012", min_size=0, max_size=12))
    def test_single_round_trip(self, word):
        assert graphs.unpack_config(P(word), len(word)).word == word

    @given(st.text(alphabet="012", min_size=0, max_size=6), st.text(alphabet="012", min_size=0, max_size=6))
    def test_coupled_round_trip(self, top, bottom):
        if len(top) != len(bottom):
            return
        state = CoupledConfig.of(top, bottom)
        assert graphs.unpack_coupled(graphs.pack_coupled(state), len(top)) == state

    def test_packing_is_dense(self):
        seen = {P("".join(w)) for w in itertools.product("012", repeat=4)}
        assert seen == set(range(81))


class TestNeighbors:
    def test_examples(self):
        assert graphs.neighbors(P("000"), "single", 3) == (P("100"), P("200"), P("000"))
        assert graphs.neighbors(P("111"), "single", 3) == (P("011"), P("111"), P("211"))
        assert set(graphs.neighbors(P("2120"), "single", 4)) == {P("2020"), P("0120"), P("1120")}

    def test_batch_matches_scalar(self):
        for kind, n in (("single", 3), ("coupled", 2)):
            size = graphs.state_count(kind, n)
            states = np.arange(size, dtype=np.int64)
            batch = graphs._neighbor_batch(states, kind, n)
            for s in range(size):
                assert tuple(int(col[s]) for col in batch) == graphs.neighbors(s, kind, n)

    def test_undirected_tables(self):
        for n in range(0, 8):
            for table in graphs.level_tables(n):
                idx = np.arange(3**n)
                assert np.array_equal(table[table[idx]], idx)

    def test_loop_census(self):
        for n in range(1, 9):
            a, b, c = graphs.level_tables(n)
            idx = np.arange(3**n)
            assert np.flatnonzero(a == idx).tolist() == [P("2" * n)]
            assert np.flatnonzero(b == idx).tolist() == [P("1" * n)]
            assert np.flatnonzero(c == idx).tolist() == [P("0" * n)]

    def test_table_budget(self):
        with pytest.raises(CapacityExceeded):
            graphs.level_tables(graphs.TABLE_MAX_N + 1)


def _edge_set(n):
    tables = graphs.level_tables(n)
    out = set()
    for label, table in zip("abc", tables):
        for s in range(3**n):
            t = int(table[s])
            out.add((min(s, t), max(s, t), label))
    return out


class TestRewiring:
    def test_next_level_is_three_rewired_copies(self):
        for n in range(0, 6):
            base = 3**n
            built = set()
            tables = graphs.level_tables(n)
            for x in range(3):
                for label, table in zip("abc", tables):
                    for s in range(base):
                        u, v = s + base * x, int(table[s]) + base * x
                        if u != v:
                            built.add((min(u, v), max(u, v), label))
            for label, corner, i, j in (("c", "0", 1, 2), ("b", "1", 0, 2), ("a", "2", 0, 1)):
                stem = corner * n
                built.add(tuple(sorted((P(stem + str(i)), P(stem + str(j))))) + (label,))
                built.add((P(stem + corner), P(stem + corner), label))
            assert _edge_set(n + 1) == built


class TestBfs:
    def test_single_examples(self):
        field = graphs.bfs(P("000"), "single", 3, use_cache=False)
        assert field.distance_to(P("222")) == 7
        assert field.distance_to(P("000")) == 0
        assert field.reached == 27  # connected

    def test_coupled_example(self):
        field = graphs.bfs(PC("0", "2"), "coupled", 1, use_cache=False)
        assert field.distance_to(PC("2", "0")) == 1
        assert field.reached == 6
        assert field.distance_to(PC("0", "0")) is None

    def test_layer_property(self):
        for kind, n, source in (("single", 4, P("0000")), ("coupled", 2, PC("00", "10"))):
            field = graphs.bfs(source, kind, n, use_cache=False)
            for state in range(graphs.state_count(kind, n)):
                d = field.distance_to(state)
                if d is None or d == 0:
                    continue
                assert any(
                    field.distance_to(m) == d - 1
                    for m in graphs.neighbors(state, kind, n)
                )

    def test_budget(self):
        with pytest.raises(CapacityExceeded):
            graphs.bfs(0, "single", 10, use_cache=False, max_dense=100)


class TestDistance:
    def test_examples(self):
        assert graphs.distance(PC("00", "22"), PC("22", "00"), "coupled", 2) == 5
        assert graphs.distance(PC("000", "100"), PC("100", "200"), "coupled", 3) == 16
        assert graphs.distance(P("010"), P("010"), "single", 3) == 0
        assert graphs.distance(P("20"), P("01"), "single", 2) == 2

    def test_incompatible(self):
        with pytest.raises(Incompatible):
            graphs.distance(PC("00", "01"), PC("01", "20"), "coupled", 2)

    def test_matches_full_field_oracle(self):
        rng = np.random.default_rng(5)
        field = graphs.bfs(PC("00", "10"), "coupled", 2, use_cache=False)
        component = np.flatnonzero(field.dist != graphs.UNREACHED)
        for _ in range(40):
            target = int(rng.choice(component))
            assert graphs.distance(PC("00", "10"), target, "coupled", 2) == int(
                field.dist[target]
            )

    def test_symmetry_and_triangle(self):
        rng = np.random.default_rng(11)
        states = [int(rng.integers(0, 27)) for _ in range(8)]
        for u, v in itertools.combinations(states, 2):
            duv = graphs.distance(u, v, "single", 3)
            assert duv == graphs.distance(v, u, "single", 3)
        u, v, w = states[:3]
        assert graphs.distance(u, w, "single", 3) <= graphs.distance(
            u, v, "single", 3
        ) + graphs.distance(v, w, "single", 3)


class TestComponents:
    def test_sizes(self):
        assert graphs.components(1).sizes() == [6, 3]
        assert graphs.components(2).sizes() == [54, 18, 9]
        assert graphs.components(3).sizes() == [486, 162, 54, 27]

    def test_entry_structure(self):
        report = graphs.components(2, include_diameters=True)
        assert report.entries[0] == (0, 54, 6)
        assert report.entries[2] == (2, 9, 3)

    def test_representative_prefix_lengths(self):
        from twinhanoi.words import lcp_len

        for n in range(1, 5):
            for i in range(n + 1):
                state = graphs.unpack_coupled(graphs.component_representative(n, i), n)
                assert lcp_len(state) == i

    def test_component_states_census(self):
        for n in range(1, 4):
            for i in range(n + 1):
                states = graphs.component_states(n, i)
                assert len(states) == graphs.expected_component_size(n, i)
                assert np.all(np.diff(states) > 0)


class TestDiameter:
    def test_single(self):
        assert graphs.diameter(3, "single") == 7
        assert graphs.diameter(5, "single") == 31

    def test_coupled(self):
        assert graphs.diameter(1, "coupled", 0) == 2
        assert graphs.diameter(2, "coupled", 0) == 6
        assert graphs.diameter(2, "coupled", 1) == 4
        assert graphs.diameter(3, "coupled", 2) == 9

    def test_diagonal_component_mirrors_single_graph(self):
        for n in range(1, 5):
            assert graphs.diameter(n, "coupled", n) == 2**n - 1

    def test_symmetry_reduction_matches_plain_sweep(self):
        for n, kind, comp in ((4, "single", None), (3, "coupled", 1), (3, "coupled", 0)):
            assert graphs.diameter(n, kind, comp) == graphs.diameter(
                n, kind, comp, use_symmetry=False
            )

    def test_requires_component_for_coupled(self):
        with pytest.raises(ValueError):
            graphs.diameter(2, "coupled")

    def test_budget(self):
        with pytest.raises(CapacityExceeded):
            graphs.diameter(5, "coupled", 0, max_sweep=1000)

    def test_canonical_form_is_orbit_invariant(self):
        states = graphs.component_states(3, 0)
        canon = graphs.canonical_form(states, "coupled", 3)
        base = 3**3
        for table in graphs._relabel_tables(3):
            top = states % base
            bottom = states // base
            images = table[top].astype(np.int64) + base * table[bottom].astype(np.int64)
            assert np.array_equal(graphs.canonical_form(images, "coupled", 3), canon)


class TestGeodesics:
    def test_corner_pairs_unique(self):
        for n in range(1, 5):
            for x, y in itertools.permutations(range(3), 2):
                assert graphs.geodesic_count(P(str(x) * n), P(str(y) * n), "single", n) == 1

    def test_counts_match_enumeration_oracle(self):
        # brute force: count all walks realizing the exact distance
        n = 2
        field_cache = {}
        for source in range(9):
            field_cache[source] = graphs.bfs(source, "single", n, use_cache=False)

        def walks(u, v, budget):
            if budget == 0:
                return 1 if u == v else 0
            total = 0
            for m in graphs.neighbors(u, "single", n):
                if m != u:
                    total += walks(m, v, budget - 1)
            return total

        for source in range(9):
            for target in range(9):
                d = field_cache[source].distance_to(target)
                assert graphs.geodesic_count(source, target, "single", n) == walks(
                    source, target, d
                )


class TestDot:
    def test_single_one_disk(self):
        dot = graphs.export_dot(1, "single")
        assert dot.count("--") == 6  # three plain edges plus three loops
        assert '"0" -- "0" [label=c];' in dot
        assert '"0" -- "1" [label=a];' in dot

    def test_coupled_one_disk(self):
        dot = graphs.export_dot(1, "coupled")
        assert dot.count(";") - dot.count("--") == 9  # nine vertex lines
        assert dot.count("--") == 15  # twelve plain edges plus three loops
        assert '"0,1"' in dot and '"0,0"' in dot

    def test_component_filter(self):
        dot = graphs.export_dot(1, "coupled", component=1)
        assert '"0,0"' in dot and '"0,1"' not in dot

    def test_deterministic(self):
        assert graphs.export_dot(2, "single") == graphs.export_dot(2, "single")

    def test_budget(self):
        with pytest.raises(CapacityExceeded):
            graphs.export_dot(5, "coupled")


class TestCacheFormat:
    def test_round_trip(self, tmp_path):
        field = graphs.bfs(P("00"), "single", 2, use_cache=False)
        blob = field.to_bytes()
        again = graphs.DistanceField.from_bytes(blob)
        assert again.kind == field.kind and again.n == field.n
        assert again.source == field.source
        assert np.array_equal(again.dist, field.dist)
        path = tmp_path / "f.thdc"
        field.save(path)
        assert np.array_equal(graphs.DistanceField.load(path).dist, field.dist)

    def test_header_validation(self):
        field = graphs.bfs(P("0"), "single", 1, use_cache=False)
        blob = field.to_bytes()
        with pytest.raises(CacheError):
            graphs.DistanceField.from_bytes(b"XXXX" + blob[4:])
        with pytest.raises(CacheError):
            graphs.DistanceField.from_bytes(blob[:10])
        with pytest.raises(CacheError):
            graphs.DistanceField.from_bytes(blob + b"\x00\x00")
        bad_version = blob[:4] + b"\x09" + blob[5:]
        with pytest.raises(CacheError):
            graphs.DistanceField.from_bytes(bad_version)

    def test_bfs_honours_cache_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv(graphs.CACHE_ENV, str(tmp_path))
        field = graphs.bfs(P("000"), "single", 3)
        files = list(tmp_path.glob("*.thdc"))
        assert len(files) == 1
        # a second call must read the same payload back
        again = graphs.bfs(P("000"), "single", 3)
        assert np.array_equal(again.dist, field.dist)
        entries = graphs.cache_entries()
        assert len(entries) == 1 and "single n=3" in entries[0][1]
        assert graphs.cache_clear() == 1
        assert graphs.cache_entries() == []

    def test_corrupt_cache_recomputed(self, tmp_path, monkeypatch):
        monkeypatch.setenv(graphs.CACHE_ENV, str(tmp_path))
        field = graphs.bfs(P("00"), "single", 2)
        (path,) = tmp_path.glob("*.thdc")
        path.write_bytes(b"garbage")
        again = graphs.bfs(P("00"), "single", 2)
        assert np.array_equal(again.dist, field.dist)
