"""Implicit construction and search of the single and coupled move graphs.

States are packed as base-3 integers, first letter least significant: a
single placement of n disks packs into n trits, a coupled state into 2n
trits (top half low, bottom half high).  Per-level transition tables turn a
move into one vectorized gather, which keeps breadth-first sweeps over
multi-million-state spaces in the seconds range and bit-deterministic.

Distance fields are dense 16-bit arrays over the full packed space with
0xFFFF marking states outside the source's component.  They serialize to a
small binary cache format (magic ``THDC``) and the :func:`bfs` entry point
transparently reads and writes a cache directory named by the
``TWINHANOI_CACHE_DIR`` environment variable.

Loop edges (a corner fixed by its own move) are part of the graph model and
appear in neighbor lists and DOT output, but no breadth-first sweep ever
relaxes one.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import CacheError, CapacityExceeded, Incompatible
from .words import Config, CoupledConfig, MoveSeq

SINGLE = "single"
COUPLED = "coupled"

UNREACHED = 0xFFFF

TABLE_MAX_N = 14  # per-level tables up to 3**14 states
DEFAULT_MAX_DENSE = 100_000_000  # dense distance-array entries
DEFAULT_MAX_SWEEP = 20_000  # vertices for an all-pairs eccentricity sweep
DEFAULT_MAX_RENDER = 10_000  # vertices for DOT output

CACHE_ENV = "TWINHANOI_CACHE_DIR"

_CACHE_MAGIC = b"THDC"
_CACHE_VERSION = 1
_KIND_BYTE = {SINGLE: 0, COUPLED: 1}
_BYTE_KIND = {0: SINGLE, 1: COUPLED}


def state_count(kind: str, n: int) -> int:
    if kind == SINGLE:
        return 3**n
    if kind == COUPLED:
        return 9**n
    raise ValueError(f"unknown kind {kind!r}")


def pack_config(config: Config | str) -> int:
    word = config.word if isinstance(config, Config) else config
    code = 0
    for ch in reversed(word):
        code = code * 3 + int(ch)
    return code


def unpack_config(code: int, n: int) -> Config:
    letters = []
    for _ in range(n):
        code, digit = divmod(code, 3)
        letters.append(str(digit))
    if code:
        raise ValueError("packed value has more digits than requested")
    return Config("".join(letters))


def pack_coupled(state: CoupledConfig) -> int:
    n = len(state)
    return pack_config(state.top) + (3**n) * pack_config(state.bottom)


def unpack_coupled(code: int, n: int) -> CoupledConfig:
    top, bottom = code % 3**n, code // 3**n
    return CoupledConfig(unpack_config(top, n), unpack_config(bottom, n))


def pack_state(state: Config | CoupledConfig) -> int:
    if isinstance(state, CoupledConfig):
        return pack_coupled(state)
    return pack_config(state)


@lru_cache(maxsize=None)
def level_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Permutations of the 3**n packed words under the moves a, b, c."""
    if n > TABLE_MAX_N:
        raise CapacityExceeded(f"level tables capped at n={TABLE_MAX_N}, got {n}")
    if n == 0:
        one = np.zeros(1, dtype=np.uint32)
        one.setflags(write=False)
        return one, one, one
    a0, b0, c0 = level_tables(n - 1)
    m = 3 ** (n - 1)
    r3 = 3 * np.arange(m, dtype=np.uint32)
    a = np.empty(3 * m, dtype=np.uint32)
    b = np.empty(3 * m, dtype=np.uint32)
    c = np.empty(3 * m, dtype=np.uint32)
    a[0::3] = r3 + 1  # 0u -> 1u
    a[1::3] = r3  # 1u -> 0u
    a[2::3] = 3 * a0 + 2  # 2u -> 2 a(u)
    b[0::3] = r3 + 2
    b[1::3] = 3 * b0 + 1
    b[2::3] = r3
    c[0::3] = 3 * c0
    c[1::3] = r3 + 2
    c[2::3] = r3 + 1
    for arr in (a, b, c):
        arr.setflags(write=False)
    return a, b, c


def act_on_level(seq: MoveSeq, n: int) -> np.ndarray:
    """The permutation of packed length-n words induced by a move sequence."""
    tables = dict(zip("abc", level_tables(n)))
    out = np.arange(3**n, dtype=np.uint32)
    for ch in seq.applied:
        out = tables[ch][out]
    return out


def neighbors(state: int, kind: str, n: int) -> tuple[int, int, int]:
    """Images of one packed state under a, b, c (loops included)."""
    if kind == SINGLE:
        return tuple(int(_move_single(state, ch, n)) for ch in "abc")  # type: ignore[return-value]
    base = 3**n
    top, bottom = state % base, state // base
    return tuple(
        int(_move_single(top, ch, n) + base * _move_single(bottom, ch, n))
        for ch in "abc"
    )  # type: ignore[return-value]


def _move_single(code: int, move: str, n: int) -> int:
    from .words import MOVE_PEGS

    i, j = MOVE_PEGS[move]
    rest, place = code, 1
    for _ in range(n):
        rest, digit = divmod(rest, 3)
        if digit == i:
            return code + (j - i) * place
        if digit == j:
            return code + (i - j) * place
        place *= 3
    return code


def _neighbor_batch(states: np.ndarray, kind: str, n: int) -> list[np.ndarray]:
    a, b, c = level_tables(n)
    if kind == SINGLE:
        return [t[states].astype(np.int64) for t in (a, b, c)]
    base = 3**n
    top = states % base
    bottom = states // base
    return [
        t[top].astype(np.int64) + base * t[bottom].astype(np.int64)
        for t in (a, b, c)
    ]


@dataclass(frozen=True)
class DistanceField:
    """Hop counts from one source over the full packed state space."""

    kind: str
    n: int
    source: int
    dist: np.ndarray  # uint16, UNREACHED outside the source's component

    def __post_init__(self) -> None:
        self.dist.setflags(write=False)

    def distance_to(self, state: int) -> int | None:
        value = int(self.dist[state])
        return None if value == UNREACHED else value

    @property
    def reached(self) -> int:
        return int(np.count_nonzero(self.dist != UNREACHED))

    @property
    def eccentricity(self) -> int:
        mask = self.dist != UNREACHED
        return int(self.dist[mask].max())

    def to_bytes(self) -> bytes:
        header = struct.pack(
            "<4sBBBQQ",
            _CACHE_MAGIC,
            _CACHE_VERSION,
            _KIND_BYTE[self.kind],
            self.n,
            self.source,
            len(self.dist),
        )
        return header + self.dist.astype("<u2").tobytes()

    @classmethod
    def from_bytes(cls, blob: bytes) -> "DistanceField":
        head = struct.calcsize("<4sBBBQQ")
        if len(blob) < head:
            raise CacheError("cache blob shorter than header")
        magic, version, kind_byte, n, source, count = struct.unpack(
            "<4sBBBQQ", blob[:head]
        )
        if magic != _CACHE_MAGIC:
            raise CacheError(f"bad magic {magic!r}")
        if version != _CACHE_VERSION:
            raise CacheError(f"unsupported cache version {version}")
        if kind_byte not in _BYTE_KIND:
            raise CacheError(f"unknown kind byte {kind_byte}")
        kind = _BYTE_KIND[kind_byte]
        if count != state_count(kind, n):
            raise CacheError("entry count does not match kind and disk count")
        payload = blob[head:]
        if len(payload) != 2 * count:
            raise CacheError("payload length does not match entry count")
        dist = np.frombuffer(payload, dtype="<u2").astype(np.uint16)
        return cls(kind=kind, n=n, source=source, dist=dist)

    def save(self, path: Path) -> None:
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_bytes(self.to_bytes())
        tmp.replace(path)

    @classmethod
    def load(cls, path: Path) -> "DistanceField":
        return cls.from_bytes(path.read_bytes())


def cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def _cache_path(kind: str, n: int, source: int) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    return root / f"{kind}-n{n}-s{source}.thdc"


def _bfs_sweep(size: int, source: int, kind: str, n: int) -> np.ndarray:
    dist = np.full(size, UNREACHED, dtype=np.uint16)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        fresh = np.concatenate(_neighbor_batch(frontier, kind, n))
        fresh = fresh[dist[fresh] == UNREACHED]
        if fresh.size:
            fresh = np.unique(fresh)
            level += 1
            dist[fresh] = level
        frontier = fresh
    return dist


def bfs(
    source: int,
    kind: str,
    n: int,
    *,
    use_cache: bool = True,
    max_dense: int = DEFAULT_MAX_DENSE,
) -> DistanceField:
    """Exact hop distances from ``source`` within its component."""
    size = state_count(kind, n)
    if size > max_dense:
        raise CapacityExceeded(
            f"dense field of {size} states exceeds budget {max_dense}"
        )
    if not 0 <= source < size:
        raise ValueError(f"source {source} out of range for {kind} n={n}")
    path = _cache_path(kind, n, source) if use_cache else None
    if path is not None and path.exists():
        try:
            field = DistanceField.load(path)
            if field.kind == kind and field.n == n and field.source == source:
                return field
        except (CacheError, OSError):
            pass  # fall through and recompute
    field = DistanceField(kind=kind, n=n, source=source, dist=_bfs_sweep(size, source, kind, n))
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        field.save(path)
    return field


@lru_cache(maxsize=64)
def cached_bfs(source: int, kind: str, n: int) -> DistanceField:
    """In-process memo for repeated lookups against the same field."""
    return bfs(source, kind, n, use_cache=True)


def distance(
    source: int,
    target: int,
    kind: str,
    n: int,
    *,
    max_dense: int = DEFAULT_MAX_DENSE,
) -> int:
    """Exact graph distance via balanced bidirectional breadth-first search.

    For coupled states the common-prefix lengths must agree, otherwise the
    states sit in different components and :class:`Incompatible` is raised.
    """
    size = state_count(kind, n)
    for s in (source, target):
        if not 0 <= s < size:
            raise ValueError(f"state {s} out of range for {kind} n={n}")
    if kind == COUPLED:
        from .words import lcp_len

        if lcp_len(unpack_coupled(source, n)) != lcp_len(unpack_coupled(target, n)):
            raise Incompatible(
                "coupled states with different common-prefix lengths are unreachable"
            )
    if source == target:
        return 0
    if size > max_dense:
        raise CapacityExceeded(
            f"dense fields of {size} states exceed budget {max_dense}"
        )

    dist_f = np.full(size, UNREACHED, dtype=np.uint16)
    dist_b = np.full(size, UNREACHED, dtype=np.uint16)
    dist_f[source] = 0
    dist_b[target] = 0
    fronts = [np.array([source], dtype=np.int64), np.array([target], dtype=np.int64)]
    dists = [dist_f, dist_b]
    levels = [0, 0]
    best = None

    while best is None or levels[0] + levels[1] < best:
        live = [i for i in (0, 1) if fronts[i].size]
        if not live:
            break
        side = min(live, key=lambda i: levels[i])
        mine, other = dists[side], dists[1 - side]
        fresh = np.concatenate(_neighbor_batch(fronts[side], kind, n))
        fresh = fresh[mine[fresh] == UNREACHED]
        if fresh.size:
            fresh = np.unique(fresh)
            levels[side] += 1
            mine[fresh] = levels[side]
            met = other[fresh]
            hit = met != UNREACHED
            if hit.any():
                candidate = levels[side] + int(met[hit].min())
                if best is None or candidate < best:
                    best = candidate
        fronts[side] = fresh

    if best is None:
        raise Incompatible("states are not connected")
    return int(best)


@dataclass(frozen=True)
class ComponentReport:
    """Census of the coupled graph's components, one per prefix length."""

    n: int
    entries: tuple[tuple[int, int, int | None], ...]  # (prefix length, size, diameter)

    def sizes(self) -> list[int]:
        return [size for _, size, _ in self.entries]


def expected_component_size(n: int, i: int) -> int:
    """Closed-form size of the component with common-prefix length i."""
    if i == n:
        return 3**n
    return 3**i * 6 * 9 ** (n - 1 - i)


def component_representative(n: int, i: int) -> int:
    """A canonical coupled state whose common prefix has length exactly i."""
    if i == n:
        return pack_coupled(CoupledConfig.of("0" * n, "0" * n))
    bottom = "0" * i + "1" + "0" * (n - i - 1)
    return pack_coupled(CoupledConfig.of("0" * n, bottom))


def components(
    n: int,
    *,
    include_diameters: bool = False,
    max_dense: int = DEFAULT_MAX_DENSE,
    max_sweep: int = DEFAULT_MAX_SWEEP,
) -> ComponentReport:
    """Flood every component of the coupled graph and check the closed forms."""
    total = 0
    entries = []
    for i in range(n + 1):
        field = bfs(component_representative(n, i), COUPLED, n, use_cache=False, max_dense=max_dense)
        size = field.reached
        expected = expected_component_size(n, i)
        if size != expected:
            raise AssertionError(
                f"component i={i} of n={n} has {size} states, expected {expected}"
            )
        diam = None
        if include_diameters:
            diam = diameter(n, COUPLED, component=i, max_sweep=max_sweep)
        entries.append((i, size, diam))
        total += size
    if total != 9**n:
        raise AssertionError(f"components cover {total} of {9**n} states")
    return ComponentReport(n=n, entries=tuple(entries))


def component_states(n: int, i: int) -> np.ndarray:
    """Sorted packed states of the coupled component with prefix length i."""
    if not 0 <= i <= n:
        raise ValueError(f"prefix length {i} out of range for n={n}")
    base = 3**n
    if i == n:
        singles = np.arange(base, dtype=np.int64)
        return singles + base * singles
    p3 = 3**i
    tail = 3 ** (n - 1 - i)
    prefixes = np.arange(p3, dtype=np.int64)
    rest = np.arange(tail, dtype=np.int64)
    pairs = [(x, y) for x in range(3) for y in range(3) if x != y]
    chunks = []
    for x, y in pairs:
        top = prefixes[:, None, None] + p3 * (x + 3 * rest[None, :, None])
        bottom = prefixes[:, None, None] + p3 * (y + 3 * rest[None, None, :])
        chunks.append((top + base * bottom).ravel())
    states = np.concatenate(chunks)
    states.sort()
    return states


def _local_adjacency(states: np.ndarray, kind: str, n: int) -> np.ndarray:
    """(N, 3) local indices of each state's images; loops map to themselves."""
    columns = []
    for images in _neighbor_batch(states, kind, n):
        idx = np.searchsorted(states, images)
        if not np.array_equal(states[idx], images):
            raise AssertionError("component is not closed under the moves")
        columns.append(idx)
    return np.stack(columns, axis=1)


_SIX_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


@lru_cache(maxsize=None)
def _relabel_tables(n: int) -> tuple[np.ndarray, ...]:
    """Packed-word images under all six peg relabelings."""
    if n == 0:
        zero = np.zeros(1, dtype=np.uint32)
        zero.setflags(write=False)
        return tuple(zero for _ in _SIX_PERMS)
    prev = _relabel_tables(n - 1)
    out = []
    for perm, small in zip(_SIX_PERMS, prev):
        table = np.empty(3**n, dtype=np.uint32)
        for x in range(3):
            table[x::3] = perm[x] + 3 * small
        table.setflags(write=False)
        out.append(table)
    return tuple(out)


def canonical_form(states: np.ndarray, kind: str, n: int) -> np.ndarray:
    """Least packed image of each state under the six peg relabelings.

    Relabeling both halves of a coupled state letterwise is a graph
    automorphism (it permutes the move labels), so canonical forms index
    the orbits of the symmetry.
    """
    tables = _relabel_tables(n)
    best: np.ndarray | None = None
    if kind == SINGLE:
        for table in tables:
            cand = table[states].astype(np.int64)
            best = cand if best is None else np.minimum(best, cand)
    else:
        base = 3**n
        top = states % base
        bottom = states // base
        for table in tables:
            cand = table[top].astype(np.int64) + base * table[bottom].astype(np.int64)
            best = cand if best is None else np.minimum(best, cand)
    assert best is not None
    return best


def _sweep_max_distance(
    adjacency: np.ndarray, sources: np.ndarray | None = None, chunk: int = 1024
) -> int:
    """Maximum distance from the given sources over a small explicit graph."""
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    count = adjacency.shape[0]
    rows = np.repeat(np.arange(count, dtype=np.int64), adjacency.shape[1])
    cols = adjacency.ravel()
    keep = rows != cols  # drop loops
    rows, cols = rows[keep], cols[keep]
    graph = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(count, count)
    )
    if sources is None:
        sources = np.arange(count, dtype=np.int64)
    worst = 0
    for start in range(0, len(sources), chunk):
        idx = sources[start : start + chunk]
        block = shortest_path(graph, method="D", directed=True, unweighted=True, indices=idx)
        if np.isinf(block).any():
            raise AssertionError("graph is unexpectedly disconnected")
        worst = max(worst, int(block.max()))
    return worst


def diameter(
    n: int,
    kind: str = SINGLE,
    component: int | None = None,
    *,
    max_sweep: int = DEFAULT_MAX_SWEEP,
    use_symmetry: bool = True,
) -> int:
    """Exact diameter by an eccentricity sweep.

    Eccentricity is constant along orbits of the peg-relabeling symmetry,
    so by default the sweep only runs from one representative per orbit;
    ``use_symmetry=False`` forces the sweep over every vertex.
    """
    if kind == SINGLE:
        states = np.arange(3**n, dtype=np.int64)
    else:
        if component is None:
            raise ValueError("coupled diameter needs a component (prefix length)")
        states = component_states(n, component)
    if len(states) > max_sweep:
        raise CapacityExceeded(
            f"all-pairs sweep over {len(states)} vertices exceeds budget {max_sweep}"
        )
    sources = None
    if use_symmetry:
        sources = np.flatnonzero(canonical_form(states, kind, n) == states)
    return _sweep_max_distance(_local_adjacency(states, kind, n), sources)


def geodesic_count(source: int, target: int, kind: str, n: int) -> int:
    """Number of distinct shortest paths from source to target."""
    field = cached_bfs(source, kind, n)
    dist = field.dist
    goal = int(dist[target])
    if goal == UNREACHED:
        raise Incompatible("target is not reachable from source")
    size = state_count(kind, n)
    counts = np.zeros(size, dtype=np.uint64)
    counts[source] = 1
    order = np.argsort(dist, kind="stable")
    reached = order[dist[order] != UNREACHED]
    level_of = dist[reached]
    for level in range(1, goal + 1):
        here = reached[level_of == level]
        if here.size == 0:
            break
        total = np.zeros(here.size, dtype=np.uint64)
        for back in _neighbor_batch(here, kind, n):
            mask = dist[back] == level - 1
            total[mask] += counts[back[mask]]
        counts[here] = total
    return int(counts[target])


def export_dot(
    n: int,
    kind: str = SINGLE,
    component: int | None = None,
    *,
    max_render: int = DEFAULT_MAX_RENDER,
) -> str:
    """Deterministic DOT text with move-labelled edges and corner loops."""
    if kind == SINGLE:
        states = np.arange(3**n, dtype=np.int64)
        name = f"hanoi_{n}"

        def label(code: int) -> str:
            return unpack_config(code, n).word or "-"

    else:
        if component is None:
            states = np.arange(9**n, dtype=np.int64)
            name = f"coupled_{n}"
        else:
            states = component_states(n, component)
            name = f"coupled_{n}_prefix{component}"

        def label(code: int) -> str:
            return str(unpack_coupled(code, n)) if n else "-,-"

    if len(states) > max_render:
        raise CapacityExceeded(
            f"rendering {len(states)} vertices exceeds budget {max_render}"
        )
    lines = [f"graph {name} {{"]
    for code in states.tolist():
        lines.append(f'  "{label(code)}";')
    for code in states.tolist():
        for move, image in zip("abc", neighbors(code, kind, n)):
            if image >= code:  # emit each undirected edge once, loops included
                lines.append(f'  "{label(code)}" -- "{label(image)}" [label={move}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cache_entries() -> list[tuple[Path, str]]:
    """Cache files with a short description, or a parse problem."""
    root = cache_dir()
    if root is None or not root.is_dir():
        return []
    out = []
    for path in sorted(root.glob("*.thdc")):
        try:
            field = DistanceField.load(path)
            out.append(
                (path, f"{field.kind} n={field.n} source={field.source} "
                       f"reached={field.reached}")
            )
        except (CacheError, OSError) as exc:
            out.append((path, f"invalid: {exc}"))
    return out


def cache_clear() -> int:
    """Delete all cache files; returns how many were removed."""
    root = cache_dir()
    if root is None or not root.is_dir():
        return 0
    removed = 0
    for path in sorted(root.glob("*.thdc")):
        path.unlink()
        removed += 1
    return removed
