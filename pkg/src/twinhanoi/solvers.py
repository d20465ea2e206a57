"""Constructive move-sequence producers and their certified length bounds.

The solvers come in three flavors:

* closed-form words: the unique optimal corner-to-corner solution, the
  twin-switch family and the smallest-disk-shift family, all built directly
  from their block formulas;
* an arbitrary-pair single-tower transform, breadth-first optimal at desk
  scale and recursive (gather, move the big disk, recurse) beyond it;
* the coupled-pair pipeline for basic states: align the tops, route the
  bottom suffix through a word with all letter parities equal, factor it
  into prime closed-walk syllables, and lift each syllable to a word that
  freezes the whole top while driving the bottom suffix.  The produced
  plan is endpoint-checked and certified against the 11/3 * 2**n bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import graphs
from .errors import (
    Incompatible,
    NotAPath,
    NotBasic,
    NotInA,
    NotSquareFree,
    SizeMismatch,
    UnclassifiedSyllable,
)
from .words import (
    Config,
    CoupledConfig,
    MoveSeq,
    PegPerm,
    _PAIR_LETTER,
    _act,
    apply_seq,
    apply_seq_coupled,
    classify,
    lcp_len,
    relabel,
)
from .wreath import CosetClass, SECTION_PEG, coset, free_reduce, is_square_free, lift_through_prefix

BFS_BACKEND_MAX_N = 14


# ---------------------------------------------------------------------------
# closed forms


def switch_moves(n: int) -> int:
    """Length of the twin-switch solution family (1, 5, 11, 21, 43, ...)."""
    _require_disks(n)
    if n == 1:
        return 1
    return (4 * 2**n - (-1) ** n) // 3


def shift_moves(n: int) -> int:
    """Exact optimal length of the smallest-disk shift (2, 6, then 2 * 2**n)."""
    _require_disks(n)
    if n == 1:
        return 2
    if n == 2:
        return 6
    return 2 * 2**n


def corner_cycles(n: int) -> int:
    """Repetition count of the three-letter block in the corner solution."""
    _require_disks(n)
    return (2**n - 1) // 3 if n % 2 == 0 else (2**n - 2) // 3


def basic_bound(n: int) -> Fraction:
    """Certified upper bound 11/3 * 2**n for any pair of basic states."""
    _require_disks(n)
    return Fraction(11 * 2**n, 3)


def near_diagonal_diameter(n: int) -> int:
    """Diameter of the component with common-prefix length n-1."""
    _require_disks(n)
    return (7 * 2**n - 3 - (-1) ** n) // 6


@dataclass(frozen=True)
class ClosedForms:
    n: int
    switch_moves: int
    shift_moves: int
    corner_cycles: int
    basic_bound: Fraction
    near_diagonal_diameter: int


def closed_forms(n: int) -> ClosedForms:
    return ClosedForms(
        n=n,
        switch_moves=switch_moves(n),
        shift_moves=shift_moves(n),
        corner_cycles=corner_cycles(n),
        basic_bound=basic_bound(n),
        near_diagonal_diameter=near_diagonal_diameter(n),
    )


def _require_disks(n: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one disk, got {n}")


# ---------------------------------------------------------------------------
# corner-to-corner and arbitrary-pair single-tower solutions

_CORNER_EVEN = {
    (0, 1): "cab",
    (0, 2): "cba",
    (1, 0): "bac",
    (1, 2): "bca",
    (2, 0): "abc",
    (2, 1): "acb",
}
_CORNER_ODD = {
    (0, 1): ("a", "cba"),
    (0, 2): ("b", "cab"),
    (1, 0): ("a", "bca"),
    (1, 2): ("c", "bac"),
    (2, 0): ("b", "acb"),
    (2, 1): ("c", "abc"),
}


def corner_seq(x: int, y: int, n: int) -> MoveSeq:
    """The unique optimal word moving a full stack from peg x to peg y.

    Length is exactly 2**n - 1.
    """
    _require_disks(n)
    if x == y:
        raise ValueError("corner endpoints must differ")
    m = corner_cycles(n)
    if n % 2 == 0:
        display = _CORNER_EVEN[(x, y)] * m
    else:
        head, block = _CORNER_ODD[(x, y)]
        display = head + block * m
    return MoveSeq.parse(display)


def transform_single(source: Config, target: Config, backend: str = "auto") -> MoveSeq:
    """A word carrying one placement to another, never longer than 2**n - 1.

    The breadth-first backend returns a geodesic (ties broken by move order
    a < b < c, so output is deterministic); the recursive backend gathers
    the smaller disks out of the way, relocates the largest mismatched disk
    and recurses, which stays within the same bound without any search.
    """
    if len(source) != len(target):
        raise SizeMismatch(f"{source} and {target} have different disk counts")
    n = len(source)
    if source == target:
        return MoveSeq.empty()
    if backend == "auto":
        backend = "bfs" if n <= BFS_BACKEND_MAX_N else "recursive"
    if backend == "bfs":
        return _bfs_transform(source, target, n)
    if backend == "recursive":
        return _recursive_transform(source, target)
    raise ValueError(f"unknown backend {backend!r}")


def _bfs_transform(source: Config, target: Config, n: int) -> MoveSeq:
    field = graphs.cached_bfs(graphs.pack_config(target), graphs.SINGLE, n)
    tables = graphs.level_tables(n)
    cur = graphs.pack_config(source)
    goal = graphs.pack_config(target)
    level = int(field.dist[cur])
    letters: list[str] = []
    while cur != goal:
        for ch, table in zip("abc", tables):
            step = int(table[cur])
            if field.dist[step] == level - 1:
                letters.append(ch)
                cur = step
                level -= 1
                break
        else:
            raise AssertionError("breadth-first field has no downhill neighbor")
    return MoveSeq("".join(letters))


def _recursive_transform(source: Config, target: Config) -> MoveSeq:
    cur = [int(ch) for ch in source.word]
    goal = [int(ch) for ch in target.word]
    out: list[str] = []

    def emit(i: int, j: int, disk: int) -> None:
        # every emitted move must act on the disk it was planned for
        for k, peg in enumerate(cur):
            if peg == i or peg == j:
                if k != disk:
                    raise AssertionError("planned move would touch the wrong disk")
                cur[k] = i + j - peg
                out.append(_PAIR_LETTER[(min(i, j), max(i, j))])
                return
        raise AssertionError("planned move has nothing to act on")

    def classic(k: int, s: int, t: int) -> None:
        if k == 0:
            return
        spare = 3 - s - t
        classic(k - 1, s, spare)
        emit(s, t, k - 1)
        classic(k - 1, spare, t)

    def gather(k: int, t: int) -> None:
        if k == 0:
            return
        p = cur[k - 1]
        if p == t:
            gather(k - 1, t)
        else:
            spare = 3 - p - t
            gather(k - 1, spare)
            emit(p, t, k - 1)
            classic(k - 1, spare, t)

    def solve(k: int) -> None:
        if k == 0:
            return
        p, q = cur[k - 1], goal[k - 1]
        if p == q:
            solve(k - 1)
        else:
            gather(k - 1, 3 - p - q)
            emit(p, q, k - 1)
            solve(k - 1)

    solve(len(cur))
    return MoveSeq("".join(out))


# ---------------------------------------------------------------------------
# the two coupled sequence families


def tts_seq(n: int) -> MoveSeq:
    """The twin-switch word: swaps full stacks 0...0/2...2 -> 2...2/0...0.

    A palindrome for n >= 2, hence an involution; its length is exactly
    :func:`switch_moves`.
    """
    _require_disks(n)
    if n == 1:
        display = "b"
    elif n == 2:
        display = "ababa"
    elif n % 2 == 0:
        display = "ababa" + "cacababa" * ((2 ** (n - 1) - 2) // 3)
    else:
        display = "aca" + "cbcbcaca" * ((2 ** (n - 1) - 1) // 3)
    return MoveSeq.parse(display)


def tts_alt_seq(n: int) -> MoveSeq:
    """A second twin-switch solution of the same length, for n >= 3."""
    if n < 3:
        raise ValueError("the alternative switch word needs n >= 3")
    if n % 2 == 0:
        display = "cbcbc" + "acacbcbc" * ((2 ** (n - 1) - 2) // 3)
    else:
        display = "cac" + "ababacac" * ((2 ** (n - 1) - 1) // 3)
    return MoveSeq.parse(display)


def sds_seq(n: int) -> MoveSeq:
    """The smallest-disk-shift word of optimal length :func:`shift_moves`.

    Carries 0^n / 10^(n-1) to 10^(n-1) / 20^(n-1).
    """
    _require_disks(n)
    if n == 1:
        display = "ba"
    elif n == 2:
        display = "bcacba"
    elif n % 2 == 0:
        display = (
            "bab"
            + "abc" * ((2**n - 4) // 3)
            + "a"
            + "cba" * ((2**n - 1) // 3)
            + "c"
        )
    else:
        display = (
            "bab"
            + "abc" * ((2**n - 5) // 3)
            + "bcba"
            + "cba" * ((2**n - 2) // 3)
        )
    return MoveSeq.parse(display)


def sds_endpoints(n: int) -> tuple[CoupledConfig, CoupledConfig]:
    """The canonical shift problem instance on n disks."""
    _require_disks(n)
    zeros = "0" * (n - 1)
    return (
        CoupledConfig.of("0" + zeros, "1" + zeros),
        CoupledConfig.of("1" + zeros, "2" + zeros),
    )


def tts_endpoints(n: int) -> tuple[CoupledConfig, CoupledConfig]:
    """The canonical switch problem instance on n disks."""
    _require_disks(n)
    return (
        CoupledConfig.of("0" * n, "2" * n),
        CoupledConfig.of("2" * n, "0" * n),
    )


# ---------------------------------------------------------------------------
# syllables: prime closed walks on the four-coset graph

_NEG_SUCC = {1: 3, 3: 2, 2: 1}  # a -> c -> b -> a
_POS_SUCC = {1: 2, 2: 3, 3: 1}  # a -> b -> c -> a
_LETTER_CODE = {"a": 1, "b": 2, "c": 3}
_CODE_LETTER = {1: "a", 2: "b", 3: "c"}


@dataclass(frozen=True)
class Syllable:
    """A word with all letter parities equal and no proper suffix sharing that property.

    Viewed as a walk on the four cosets, a syllable leaves the subgroup
    vertex, loops around the three transversal vertices without
    backtracking, and returns.  ``entry`` and ``exit`` are the first and
    last applied letters; ``cycles`` counts the spare full loops around the
    triangle, with -1 marking the six shortest shapes of lengths 3 and 4.
    """

    word: MoveSeq
    entry: str
    exit: str
    orientation: str  # "negative" or "positive"
    cycles: int

    def __len__(self) -> int:
        return len(self.word)


def _canonical_syllable(entry: str, exit: str, cycles: int) -> str:
    """Display form of the negatively oriented syllable with the given shape."""
    blocks = {"a": "cab", "b": "abc", "c": "bca"}
    if entry == exit:
        if cycles < 0:
            raise UnclassifiedSyllable("same-letter syllables have no short form")
        return entry + blocks[entry] * (cycles + 1) + entry
    bases = {
        ("a", "c"): "cba",
        ("b", "a"): "acb",
        ("c", "b"): "bac",
        ("a", "b"): "baba",
        ("b", "c"): "cbcb",
        ("c", "a"): "acac",
    }
    heads = {
        ("a", "c"): "cb",
        ("b", "a"): "ac",
        ("c", "b"): "ba",
        ("a", "b"): "bab",
        ("b", "c"): "cbc",
        ("c", "a"): "aca",
    }
    if cycles < 0:
        return bases[(entry, exit)]
    return heads[(entry, exit)] + blocks[entry] * (cycles + 1) + entry


def _classify_syllable(applied: str) -> Syllable:
    """Classify one prime closed walk; the caller guarantees primality."""
    path = [0]
    vertex = 0
    for ch in applied:
        vertex ^= _LETTER_CODE[ch]
        path.append(vertex)
    if path[-1] != 0 or any(v == 0 for v in path[1:-1]):
        raise UnclassifiedSyllable("not a prime closed walk at the subgroup vertex")
    orientation = None
    for prev, cur in zip(path[1:], path[2:]):
        if prev != 0 and cur != 0:
            orientation = "negative" if _NEG_SUCC[prev] == cur else "positive"
            break
    if orientation is None:
        raise UnclassifiedSyllable("walk never moves between transversal vertices")
    entry, exit = applied[0], applied[-1]
    succ = _NEG_SUCC if orientation == "negative" else _POS_SUCC
    start, goal = _LETTER_CODE[entry], _LETTER_CODE[exit]
    base_steps = 0
    v = start
    while v != goal:
        v = succ[v]
        base_steps += 1
    steps = len(applied) - 2
    if steps < base_steps or (steps - base_steps) % 3 != 0:
        raise UnclassifiedSyllable(
            f"walk of {steps} triangle steps cannot reach {exit} from {entry}"
        )
    spare_loops = (steps - base_steps) // 3
    if entry == exit:
        cycles = spare_loops - 1  # the walk must loop at least once
    else:
        cycles = spare_loops - 1 if spare_loops else -1
    return Syllable(
        word=MoveSeq(applied),
        entry=entry,
        exit=exit,
        orientation=orientation,
        cycles=cycles,
    )


def factor_apollonian(word: MoveSeq) -> tuple[Syllable, ...]:
    """Split a square-free all-parities-equal word into prime syllables.

    The concatenation of the factors reproduces the input exactly and the
    factor lengths sum to the input length.
    """
    if not is_square_free(word):
        raise NotSquareFree(f"{word.display} repeats a letter")
    if coset(word) is not CosetClass.A:
        raise NotInA(f"{word.display} lies in coset {coset(word)}")
    out: list[Syllable] = []
    vertex = 0
    start = 0
    for pos, ch in enumerate(word.applied):
        vertex ^= _LETTER_CODE[ch]
        if vertex == 0:
            out.append(_classify_syllable(word.applied[start : pos + 1]))
            start = pos + 1
    return tuple(out)


# ---------------------------------------------------------------------------
# lifting a syllable to a word freezing the top stack

# Display-order lift for each negatively oriented shape, keyed by
# (entry, exit).  Each lift decomposes with identity root, trivial action
# below letter 2, and the syllable itself below letter 0; the length never
# exceeds 8/3 of the syllable length.
_NEG_LIFT_BASE = {
    ("a", "c"): "cabcab",
    ("b", "a"): "bacacaba",
    ("c", "b"): "bcbcacac",
    ("a", "b"): "bcbcacbcab",
    ("b", "c"): "cabacaba",
    ("c", "a"): "babcbabc",
}


def _neg_lift(entry: str, exit: str, cycles: int) -> str:
    if cycles < 0:
        return _NEG_LIFT_BASE[(entry, exit)]
    k = cycles
    table = {
        ("a", "a"): "bab" + "cba" * (2 * k + 2) + "bab",
        ("b", "b"): "abc" + "acb" * (2 * k + 2) + "cba",
        ("c", "c"): "cb" + "cba" * (2 * k + 2) + "bc",
        ("a", "c"): "cabcb" + "cba" * (2 * k + 2) + "bab",
        ("b", "a"): "bacacac" + "acb" * (2 * k + 2) + "cba",
        ("c", "b"): "bcbcacbcb" + "cba" * (2 * k + 1) + "bc",
        ("a", "b"): "bcbcacbcb" + "cba" * (2 * k + 2) + "bab",
        ("b", "c"): "cabacac" + "acb" * (2 * k + 2) + "cba",
        ("c", "a"): "bab" + "cba" * (2 * k + 3) + "bc",
    }
    return table[(entry, exit)]


def lift_syllable(syllable: Syllable) -> MoveSeq:
    """The top-freezing word whose action below letter 0 is the syllable.

    Positively oriented syllables lift to the reversal of the lift of their
    reversal (reversing a word reverses its walk and flips orientation).
    """
    if syllable.orientation == "negative":
        expected = _canonical_syllable(syllable.entry, syllable.exit, syllable.cycles)
        if expected != syllable.word.display:
            raise UnclassifiedSyllable(
                f"{syllable.word.display} does not match its classified shape {expected}"
            )
        lifted = MoveSeq.parse(_neg_lift(syllable.entry, syllable.exit, syllable.cycles))
    else:
        mirror = Syllable(
            word=syllable.word.inverse(),
            entry=syllable.exit,
            exit=syllable.entry,
            orientation="negative",
            cycles=syllable.cycles,
        )
        lifted = lift_syllable(mirror).inverse()
    if 3 * len(lifted) > 8 * len(syllable.word):
        raise AssertionError("lift exceeded the 8/3 length ratio")
    return lifted


# ---------------------------------------------------------------------------
# coset adjustment of a suffix path


@dataclass(frozen=True)
class CosetAdjustment:
    """Reroute data: out to the loop corner, one loop letter, back again."""

    to_corner: MoveSeq
    letter: str
    from_corner: MoveSeq
    corner: Config


def adjust_coset(path: MoveSeq, source: Config, target: Config) -> MoveSeq:
    """A source-to-target path with all letter parities equal.

    A path already satisfying the parity condition is returned unchanged.
    Otherwise the route detours through the corner fixed by the path's
    transversal letter, applying that letter once as a loop there; the
    result is never longer than 2 * (2**m - 1) + 1 for m disks.
    """
    word, _ = _adjust_coset_detail(path, source, target)
    return word


def _adjust_coset_detail(
    path: MoveSeq, source: Config, target: Config
) -> tuple[MoveSeq, CosetAdjustment | None]:
    if apply_seq(path, source) != target:
        raise NotAPath(f"{path.display} does not carry {source} to {target}")
    cls = coset(path)
    if cls is CosetClass.A:
        return path, None
    letter = cls.transversal
    assert letter is not None
    corner = Config.corner(SECTION_PEG[letter], len(source))
    to_corner = transform_single(source, corner)
    from_corner = transform_single(corner, target)
    combined = to_corner.then(MoveSeq(letter)).then(from_corner)
    # no path enters or leaves a corner by that corner's own loop letter,
    # so the inserted letter cannot create a repeated pair at the junctions
    if to_corner and to_corner.applied[-1] == letter:
        raise AssertionError("path reached the corner by its loop letter")
    if from_corner and from_corner.applied[0] == letter:
        raise AssertionError("path left the corner by its loop letter")
    if coset(combined) is not CosetClass.A:
        raise AssertionError("coset adjustment missed the subgroup")
    return combined, CosetAdjustment(
        to_corner=to_corner, letter=letter, from_corner=from_corner, corner=corner
    )


# ---------------------------------------------------------------------------
# the coupled-pair solver


@dataclass(frozen=True)
class PlanAudit:
    stages: tuple[tuple[str, int], ...]
    total_moves: int
    bound: Fraction
    bound_ok: bool


@dataclass(frozen=True)
class SolvePlan:
    """Every stage of one basic-pair solve, in the normalized peg frame.

    ``total`` is the final answer in the original frame (already conjugated
    back through ``sigma``); the stage words are kept for auditing and sum
    to the total length.
    """

    initial: CoupledConfig
    final: CoupledConfig
    sigma: PegPerm
    top_align: MoveSeq | None
    fix: MoveSeq | None
    suffix_geodesic: MoveSeq | None
    adjustment: CosetAdjustment | None
    suffix_word: MoveSeq | None
    syllables: tuple[Syllable, ...]
    lift: MoveSeq | None
    total: MoveSeq
    audit: PlanAudit

    def as_json_dict(self) -> dict:
        def seq(s: MoveSeq | None) -> str | None:
            return s.display if s is not None else None

        return {
            "initial": str(self.initial),
            "final": str(self.final),
            "sigma": self.sigma.cycle_str(),
            "stages": {
                "top_align": seq(self.top_align),
                "fix": seq(self.fix),
                "suffix_geodesic": seq(self.suffix_geodesic),
                "suffix_word": seq(self.suffix_word),
                "syllables": [s.word.display for s in self.syllables],
                "lift": seq(self.lift),
            },
            "total": self.total.display,
            "length": len(self.total),
            "stage_lengths": dict(self.audit.stages),
            "bound": str(self.audit.bound),
            "bound_ok": self.audit.bound_ok,
        }

    def as_text(self) -> str:
        lines = [
            f"solve {self.initial} -> {self.final}",
            f"  frame           {self.sigma.cycle_str()}",
        ]
        for name, value in (
            ("top_align", self.top_align),
            ("fix", self.fix),
            ("suffix_geodesic", self.suffix_geodesic),
            ("suffix_word", self.suffix_word),
            ("lift", self.lift),
        ):
            shown = value.display if value else ("-" if value is None else "1")
            lines.append(f"  {name:<15} {shown}  ({0 if value is None else len(value)})")
        if self.syllables:
            lines.append(
                "  syllables       " + " | ".join(s.word.display for s in self.syllables)
            )
        lines.append(f"  total           {self.total.display}")
        lines.append(
            f"  length {len(self.total)} <= {self.audit.bound} : "
            + ("ok" if self.audit.bound_ok else "VIOLATED")
        )
        return "\n".join(lines)


def _normalizer(final: CoupledConfig) -> PegPerm:
    """The unique relabeling sending the target's top/bottom leads to 2 and 0."""
    top_lead = int(final.top.word[0])
    bottom_lead = int(final.bottom.word[0])
    third = 3 - top_lead - bottom_lead
    images = [0, 0, 0]
    images[top_lead] = 2
    images[bottom_lead] = 0
    images[third] = 1
    return PegPerm(tuple(images))  # type: ignore[arg-type]


@lru_cache(maxsize=1)
def _one_disk_words() -> dict[tuple[str, str], str]:
    """Deterministic geodesics between the six basic one-disk states."""
    states = [("0", "1"), ("0", "2"), ("1", "0"), ("1", "2"), ("2", "0"), ("2", "1")]

    def step(state: tuple[str, str], ch: str) -> tuple[str, str]:
        return (_act(ch, state[0]), _act(ch, state[1]))

    table: dict[tuple[str, str], str] = {}
    for goal in states:
        dist = {goal: 0}
        frontier = [goal]
        while frontier:
            fresh = []
            for state in frontier:
                for ch in "abc":
                    nxt = step(state, ch)
                    if nxt not in dist:
                        dist[nxt] = dist[state] + 1
                        fresh.append(nxt)
            frontier = fresh
        for start in states:
            cur, letters = start, []
            while cur != goal:
                for ch in "abc":
                    nxt = step(cur, ch)
                    if dist[nxt] == dist[cur] - 1:
                        letters.append(ch)
                        cur = nxt
                        break
            table[start + goal] = "".join(letters)
    return table


def solve_basic(
    initial: CoupledConfig, final: CoupledConfig, backend: str = "auto"
) -> SolvePlan:
    """Solve a pair of basic coupled states with a certified length bound.

    The plan's total carries ``initial`` to ``final`` (checked by action
    before returning) and its length never exceeds 11/3 * 2**n.  The word
    is generally not optimal; only the bound is certified.
    """
    if len(initial) != len(final):
        raise SizeMismatch("coupled states have different disk counts")
    n = len(initial)
    _require_disks(n)
    for state in (initial, final):
        if not classify(state).basic:
            raise NotBasic(f"{state} has a common prefix")

    if n == 1:
        key = (initial.top.word, initial.bottom.word, final.top.word, final.bottom.word)
        total = MoveSeq(_one_disk_words()[key])
        plan = SolvePlan(
            initial=initial,
            final=final,
            sigma=PegPerm.identity(),
            top_align=None,
            fix=None,
            suffix_geodesic=None,
            adjustment=None,
            suffix_word=None,
            syllables=(),
            lift=None,
            total=total,
            audit=PlanAudit(
                stages=(("lookup", len(total)),),
                total_moves=len(total),
                bound=basic_bound(n),
                bound_ok=3 * len(total) <= 11 * 2**n,
            ),
        )
        _check_plan(plan)
        return plan

    sigma = _normalizer(final)
    start = relabel(sigma, initial)
    goal = relabel(sigma, final)

    top_align = transform_single(start.top, goal.top, backend=backend)
    mid = apply_seq_coupled(top_align, start)
    fix = None
    if mid.bottom.word[0] == "1":
        fix = MoveSeq.parse("cab")  # flips the bottom lead 1 -> 0, freezes the top
        mid = apply_seq_coupled(fix, mid)
    if mid.top != goal.top or mid.bottom.word[0] != "0":
        raise AssertionError("top alignment failed")

    suffix_now = Config(mid.bottom.word[1:])
    suffix_goal = Config(goal.bottom.word[1:])
    suffix_geodesic = free_reduce(
        transform_single(suffix_now, suffix_goal, backend=backend)
    )
    suffix_word, adjustment = _adjust_coset_detail(
        suffix_geodesic, suffix_now, suffix_goal
    )
    suffix_word = free_reduce(suffix_word)

    syllables = factor_apollonian(suffix_word) if suffix_word else ()
    lift = MoveSeq.empty()
    for syllable in syllables:
        lift = lift.then(lift_syllable(syllable))

    normalized_total = top_align.then(fix or MoveSeq.empty()).then(lift)
    total = relabel(sigma.inverse(), normalized_total)

    stages = (
        ("top_align", len(top_align)),
        ("fix", len(fix) if fix else 0),
        ("suffix_geodesic", len(suffix_geodesic)),
        ("suffix_word", len(suffix_word)),
        ("lift", len(lift)),
    )
    plan = SolvePlan(
        initial=initial,
        final=final,
        sigma=sigma,
        top_align=top_align,
        fix=fix,
        suffix_geodesic=suffix_geodesic,
        adjustment=adjustment,
        suffix_word=suffix_word,
        syllables=syllables,
        lift=lift,
        total=total,
        audit=PlanAudit(
            stages=stages,
            total_moves=len(total),
            bound=basic_bound(n),
            bound_ok=3 * len(total) <= 11 * 2**n,
        ),
    )
    _check_plan(plan)
    return plan


def _check_plan(plan: SolvePlan) -> None:
    if apply_seq_coupled(plan.total, plan.initial) != plan.final:
        raise AssertionError("solver produced a word with the wrong endpoint")
    if not plan.audit.bound_ok:
        raise AssertionError("solver exceeded its certified bound")


def solve_compatible(initial: CoupledConfig, final: CoupledConfig, backend: str = "auto") -> MoveSeq:
    """Solve any compatible pair: equal common-prefix lengths required.

    With prefix length i the answer is a prefix transform (at most 2**i - 1
    moves) followed by the lift of a basic solve of the tails, for a total
    of at most (2**i - 1) + 3**i * 11/3 * 2**(n-i) moves.
    """
    if len(initial) != len(final):
        raise SizeMismatch("coupled states have different disk counts")
    i = lcp_len(initial)
    if lcp_len(final) != i:
        raise Incompatible(
            f"common prefixes have lengths {i} and {lcp_len(final)}"
        )
    if i == 0:
        return solve_basic(initial, final, backend=backend).total
    n = len(initial)
    prefix_now = Config(initial.top.word[:i])
    prefix_goal = Config(final.top.word[:i])
    aligned = transform_single(prefix_now, prefix_goal, backend=backend)
    mid = apply_seq_coupled(aligned, initial)
    if i == n:
        total = aligned
    else:
        inner = solve_basic(
            CoupledConfig.of(mid.top.word[i:], mid.bottom.word[i:]),
            CoupledConfig.of(final.top.word[i:], final.bottom.word[i:]),
            backend=backend,
        ).total
        total = aligned.then(lift_through_prefix(prefix_goal, inner))
    if apply_seq_coupled(total, initial) != final:
        raise AssertionError("compatible solver produced a wrong endpoint")
    return total
