"""Recursive (wreath) calculus for move sequences acting on words.

Every move sequence g acts on words by permuting the first letter and acting
on the remainder by one of three induced sequences:

    g(x u) = root(x) . section_x(u)      for each first letter x

``root`` is the permutation of {0,1,2} induced on first letters and the
three sections describe the action below each letter.  The generators
decompose as

    a = (01) (1, 1, a)      b = (02) (1, b, 1)      c = (12) (c, 1, 1)

with 1 the empty sequence, and decompositions of products are computed by

    (g h)_x = g_{root_h(x)} h_x,    root_{gh} = root_g o root_h

folded one letter at a time.  Each letter contributes exactly one letter to
exactly one section, so the three section lengths always sum to the length
of the input word.

The module also hosts the index-four subgroup generated by cba, acb and bac
(the Apollonian subgroup of the move group).  A word lies in it exactly when
the occurrence counts of a, b and c are all even or all odd; the quotient is
the Klein four-group with transversal {1, a, b, c}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .words import Config, MoveSeq, PegPerm

ROOT_PERM: dict[str, PegPerm] = {
    "a": PegPerm((1, 0, 2)),
    "b": PegPerm((2, 1, 0)),
    "c": PegPerm((0, 2, 1)),
}

# the peg whose subtree a generator acts on (its only nonempty section)
SECTION_PEG: dict[str, int] = {"a": 2, "b": 1, "c": 0}

DEFAULT_IDENTITY_DEPTH = 12


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Root permutation plus the three sections of a move sequence."""

    root: PegPerm
    sections: tuple[MoveSeq, MoveSeq, MoveSeq]

    def pretty(self) -> str:
        parts = ",".join(s.display if s else "1" for s in self.sections)
        return f"{self.root.cycle_str()} ({parts})"

    def __str__(self) -> str:
        return self.pretty()


def decompose(seq: MoveSeq) -> Decomposition:
    """Fold the product rule over the letters of ``seq``."""
    root = PegPerm.identity()
    sections = ["", "", ""]
    for ch in seq.applied:
        # the one first-letter x whose image under the accumulated root is
        # the subtree this generator acts on receives the section letter
        x = root.images.index(SECTION_PEG[ch])
        sections[x] += ch
        root = ROOT_PERM[ch].after(root)
    return Decomposition(root, tuple(MoveSeq(s) for s in sections))  # type: ignore[arg-type]


def root_perm(seq: MoveSeq) -> PegPerm:
    """The induced permutation of first letters, without building sections."""
    root = PegPerm.identity()
    for ch in seq.applied:
        root = ROOT_PERM[ch].after(root)
    return root


def section_at(seq: MoveSeq, below: Config | str) -> MoveSeq:
    """The induced action below a vertex, by iterated decomposition."""
    word = below.word if isinstance(below, Config) else below
    current = seq
    for ch in word:
        current = decompose(current).sections[int(ch)]
    return current


class CosetClass(enum.Enum):
    """The four cosets of the index-four subgroup, a Klein four-group."""

    A = 0
    aA = 1
    bA = 2
    cA = 3

    @classmethod
    def from_code(cls, code: int) -> "CosetClass":
        return cls(code)

    def __mul__(self, other: "CosetClass") -> "CosetClass":
        return CosetClass(self.value ^ other.value)

    @property
    def transversal(self) -> str | None:
        """The transversal letter of the class, None for the subgroup itself."""
        return {0: None, 1: "a", 2: "b", 3: "c"}[self.value]

    def __str__(self) -> str:
        return self.name


_LETTER_CODE = {"a": 1, "b": 2, "c": 3}


def coset(seq: MoveSeq) -> CosetClass:
    """Coset of a word: xor of letter codes under A=0, a=1, b=2, c=3.

    Equivalent parity statement: the word is in the subgroup iff the counts
    of a, b and c are all even or all odd; otherwise its class is that of
    the single generator whose count parity differs from the other two.
    """
    code = 0
    for ch in seq.applied:
        code ^= _LETTER_CODE[ch]
    return CosetClass(code)


def inverse(seq: MoveSeq) -> MoveSeq:
    """Reversal; see :meth:`MoveSeq.inverse`."""
    return seq.inverse()


def free_reduce(seq: MoveSeq) -> MoveSeq:
    """Cancel adjacent equal letters until none remain.

    Action preserving (each letter is an involution), never longer, and the
    result has no two adjacent equal letters.
    """
    out: list[str] = []
    for ch in seq.applied:
        if out and out[-1] == ch:
            out.pop()
        else:
            out.append(ch)
    return MoveSeq("".join(out))


def is_square_free(seq: MoveSeq) -> bool:
    word = seq.applied
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def equal_on_level(
    s: MoveSeq, t: MoveSeq, n: int = DEFAULT_IDENTITY_DEPTH, method: str = "auto"
) -> bool:
    """True iff s and t act identically on every word of length n.

    For enumerable levels the comparison runs over vectorized level
    permutations; beyond the table budget it falls back to a memoized
    recursive comparison of decompositions.
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    if method == "auto":
        from . import graphs

        method = "tables" if n <= graphs.TABLE_MAX_N else "recursive"
    if method == "tables":
        from . import graphs

        import numpy as np

        return bool(np.array_equal(graphs.act_on_level(s, n), graphs.act_on_level(t, n)))
    if method == "recursive":
        probe = MoveSeq(s.applied + t.applied[::-1])
        return identity_on_level(probe, n)
    raise ValueError(f"unknown method {method!r}")


def identity_on_level(seq: MoveSeq, n: int) -> bool:
    """True iff the word fixes every word of length n."""
    memo: dict[tuple[str, int], bool] = {}

    def go(word: str, depth: int) -> bool:
        word = free_reduce(MoveSeq(word)).applied
        if not word:
            return True
        if depth == 0:
            return True  # level 0 has only the empty word
        key = (word, depth)
        cached = memo.get(key)
        if cached is not None:
            return cached
        dec = decompose(MoveSeq(word))
        ok = dec.root.is_identity() and all(
            go(sec.applied, depth - 1) for sec in dec.sections
        )
        memo[key] = ok
        return ok

    return go(seq.applied, n)


# Per-letter substitutions realizing the action one level down: for each
# first letter x the table maps a generator g to a word acting as g below x
# while keeping x in place.  The rules below 2 follow directly from the
# recursion; the other six follow by the three-fold peg symmetry and are
# re-verified by action before first use.
_LIFT_SUBST: dict[str, dict[str, str]] = {
    "2": {"a": "a", "b": "cbc", "c": "bcb"},
    "0": {"a": "bab", "b": "aba", "c": "c"},
    "1": {"a": "cac", "b": "b", "c": "aca"},
}


@lru_cache(maxsize=1)
def _lift_rules_checked() -> bool:
    from itertools import product

    from .words import _act

    for x, table in _LIFT_SUBST.items():
        for g, image in table.items():
            for k in range(4):
                for tail in product("012", repeat=k):
                    u = "".join(tail)
                    if _act(image, x + u) != x + _act(g, u):
                        raise AssertionError(
                            f"lift rule {g} -> {image} below {x} fails on {x + u}"
                        )
    return True


def lift_through_prefix(prefix: Config | str, seq: MoveSeq) -> MoveSeq:
    """A word acting as ``seq`` below ``prefix`` while fixing the prefix.

    Returns h with h(p . w) == p . seq(w) for every word w.  Built by
    letterwise substitution from the innermost prefix letter outwards; each
    level multiplies the length by at most 3, so len(h) <= 3**len(p) * len(seq).
    All substitution words are palindromes, so the substitution is the same
    in display and application order.
    """
    _lift_rules_checked()
    word = prefix.word if isinstance(prefix, Config) else prefix
    result = seq.applied
    for ch in reversed(word):
        table = _LIFT_SUBST[ch]
        result = "".join(table[m] for m in result)
    return MoveSeq(result)
