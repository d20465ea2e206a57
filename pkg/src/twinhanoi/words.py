"""Word encoding of three-peg puzzle states and the exact move action.

A placement of n distinct disks on pegs 0, 1 and 2 (no disk ever rests on a
smaller one) is encoded as a word over the alphabet {0,1,2}: the i-th letter,
counting from the left and starting with the smallest disk, names the peg
holding disk i.  There are exactly 3**n placements of n disks and every word
of length n encodes one of them.

The three legal moves exchange the smallest disk sitting on a chosen pair of
pegs:

    a   exchanges between pegs 0 and 1
    b   exchanges between pegs 0 and 2
    c   exchanges between pegs 1 and 2

On words, a move toggles the first occurrence of either of its two peg
letters and leaves a word containing neither letter unchanged (there is
nothing to move).  Every move is an involution.

A move sequence is a word over {a,b,c}.  The conventional display reading
applies the rightmost letter first; :class:`MoveSeq` stores letters
internally in application order (first applied first) and renders in display
order by default, so both conventions are available without ambiguity.

Coupled states are ordered pairs of equal-length words moved simultaneously
by the same move; their text form is ``top,bottom``.

All types here are immutable values and all operations are pure functions,
so everything is safe to share between threads without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

Peg = int  # one of 0, 1, 2; validated at parse boundaries

PEG_LETTERS = "012"
MOVE_LETTERS = "abc"

MOVE_PEGS: dict[str, tuple[int, int]] = {"a": (0, 1), "b": (0, 2), "c": (1, 2)}
_PAIR_LETTER = {(0, 1): "a", (0, 2): "b", (1, 2): "c"}
_MOVE_BYTES = {"a": (0x30, 0x31), "b": (0x30, 0x32), "c": (0x31, 0x32)}

_PEG_SET = frozenset(PEG_LETTERS)
_MOVE_SET = frozenset(MOVE_LETTERS)


def _require_peg(value: int) -> int:
    if value not in (0, 1, 2):
        raise ValueError(f"peg must be 0, 1 or 2, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class Config:
    """A placement of ``len(word)`` disks, one peg letter per disk."""

    word: str

    def __post_init__(self) -> None:
        if not set(self.word) <= _PEG_SET:
            raise ValueError(f"config must be a word over 012, got {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> "Config":
        return cls(text)

    @classmethod
    def corner(cls, peg: Peg, n: int) -> "Config":
        """The placement with all n disks stacked on one peg."""
        return cls(PEG_LETTERS[_require_peg(peg)] * n)

    @property
    def disks(self) -> int:
        return len(self.word)

    def is_corner(self) -> bool:
        return len(self.word) > 0 and len(set(self.word)) == 1

    def letters(self) -> Iterator[Peg]:
        return (int(ch) for ch in self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True, slots=True)
class CoupledConfig:
    """An ordered pair of equal-length placements moved by the same moves."""

    top: Config
    bottom: Config

    def __post_init__(self) -> None:
        if len(self.top) != len(self.bottom):
            raise ValueError(
                f"coupled halves differ in length: {self.top} vs {self.bottom}"
            )

    @classmethod
    def parse(cls, text: str) -> "CoupledConfig":
        """Parse the ``top,bottom`` text form."""
        head, sep, tail = text.partition(",")
        if not sep:
            raise ValueError(f"coupled config needs a comma: {text!r}")
        return cls(Config(head), Config(tail))

    @classmethod
    def of(cls, top: str, bottom: str) -> "CoupledConfig":
        return cls(Config(top), Config(bottom))

    @property
    def disks(self) -> int:
        return len(self.top)

    def __len__(self) -> int:
        return len(self.top)

    def __str__(self) -> str:
        return f"{self.top},{self.bottom}"


@dataclass(frozen=True, slots=True)
class Move:
    """One of the three peg exchanges a, b, c."""

    letter: str

    def __post_init__(self) -> None:
        if self.letter not in _MOVE_SET:
            raise ValueError(f"move must be one of a, b, c, got {self.letter!r}")

    @classmethod
    def parse(cls, text: str) -> "Move":
        return cls(text)

    @property
    def pegs(self) -> tuple[Peg, Peg]:
        return MOVE_PEGS[self.letter]

    def __str__(self) -> str:
        return self.letter


MOVES: dict[str, Move] = {ch: Move(ch) for ch in MOVE_LETTERS}


@dataclass(frozen=True, slots=True)
class MoveSeq:
    """A finite sequence of moves.

    ``applied`` holds the letters in application order: ``applied[0]`` acts
    first.  The display convention reads right to left, so rendering simply
    reverses the internal string.  Keeping one canonical internal order
    removes the reversal bugs that plague code mixing both conventions.
    """

    applied: str

    def __post_init__(self) -> None:
        if not set(self.applied) <= _MOVE_SET:
            raise ValueError(f"moves must be a word over abc, got {self.applied!r}")

    @classmethod
    def parse(cls, text: str, order: str = "display") -> "MoveSeq":
        """Parse move text; ``order`` is ``display`` (rightmost first) or ``applied``."""
        if order == "display":
            return cls(text[::-1])
        if order == "applied":
            return cls(text)
        raise ValueError(f"unknown order {order!r}")

    @classmethod
    def from_applied(cls, text: str) -> "MoveSeq":
        return cls(text)

    @classmethod
    def empty(cls) -> "MoveSeq":
        return cls("")

    @property
    def display(self) -> str:
        """The display form: rightmost letter applied first."""
        return self.applied[::-1]

    def render(self, order: str = "display") -> str:
        if order == "display":
            return self.display
        if order == "applied":
            return self.applied
        raise ValueError(f"unknown order {order!r}")

    def moves(self) -> Iterator[Move]:
        """Moves in application order."""
        return (MOVES[ch] for ch in self.applied)

    def then(self, other: "MoveSeq") -> "MoveSeq":
        """Sequential composition: self acts first, then other."""
        return MoveSeq(self.applied + other.applied)

    def __mul__(self, other: "MoveSeq") -> "MoveSeq":
        """Group product: ``(s * t)`` acts as s after t (t first)."""
        return MoveSeq(other.applied + self.applied)

    def __pow__(self, k: int) -> "MoveSeq":
        if k < 0:
            raise ValueError("negative powers are spelled inverse().__pow__")
        return MoveSeq(self.applied * k)

    def inverse(self) -> "MoveSeq":
        """The undo word; every letter is an involution, so just reverse."""
        return MoveSeq(self.applied[::-1])

    def __len__(self) -> int:
        return len(self.applied)

    def __bool__(self) -> bool:
        return bool(self.applied)

    def __str__(self) -> str:
        return self.display


def _act(applied: str, word: str) -> str:
    """Apply a move word (application order) to a peg word."""
    buf = bytearray(word, "ascii")
    pairs = _MOVE_BYTES
    for ch in applied:
        i, j = pairs[ch]
        for k, d in enumerate(buf):
            if d == i:
                buf[k] = j
                break
            if d == j:
                buf[k] = i
                break
    return buf.decode("ascii")


def apply_move(move: Move, config: Config) -> Config:
    """Toggle the first occurrence of either of the move's peg letters."""
    return Config(_act(move.letter, config.word))


def apply_seq(seq: MoveSeq, config: Config) -> Config:
    """Apply a whole move sequence, first-applied letter first."""
    return Config(_act(seq.applied, config.word))


def apply_seq_coupled(seq: MoveSeq, state: CoupledConfig) -> CoupledConfig:
    """Apply the same sequence to both halves of a coupled state."""
    return CoupledConfig(
        Config(_act(seq.applied, state.top.word)),
        Config(_act(seq.applied, state.bottom.word)),
    )


def parity(peg: Peg, target: Union[Config, CoupledConfig]) -> int:
    """Occurrence count of a peg letter mod 2 (summed over both halves)."""
    letter = PEG_LETTERS[_require_peg(peg)]
    if isinstance(target, CoupledConfig):
        return (target.top.word.count(letter) + target.bottom.word.count(letter)) % 2
    return target.word.count(letter) % 2


def lcp_len(state: CoupledConfig) -> int:
    """Length of the longest common prefix of the two halves."""
    top, bottom = state.top.word, state.bottom.word
    for i in range(len(top)):
        if top[i] != bottom[i]:
            return i
    return len(top)


class Classification(NamedTuple):
    corner: bool
    basic: bool | None  # None for single configurations


def classify(target: Union[Config, CoupledConfig]) -> Classification:
    """Corner and basic flags.

    A single placement is a corner when all disks share a peg.  A coupled
    state is a corner state when either half is a corner, and basic when the
    smallest disks of the two halves sit on different pegs.
    """
    if len(target) < 1:
        raise ValueError("classification needs at least one disk")
    if isinstance(target, CoupledConfig):
        return Classification(
            corner=target.top.is_corner() or target.bottom.is_corner(),
            basic=target.top.word[0] != target.bottom.word[0],
        )
    return Classification(corner=target.is_corner(), basic=None)


@dataclass(frozen=True, slots=True)
class PegPerm:
    """A permutation of the three pegs, stored as the image tuple of (0,1,2)."""

    images: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"not a permutation of 0,1,2: {self.images!r}")

    @classmethod
    def identity(cls) -> "PegPerm":
        return cls((0, 1, 2))

    @classmethod
    def swap(cls, i: Peg, j: Peg) -> "PegPerm":
        imgs = [0, 1, 2]
        imgs[i], imgs[j] = imgs[j], imgs[i]
        return cls(tuple(imgs))  # type: ignore[arg-type]

    def __call__(self, peg: Peg) -> Peg:
        return self.images[peg]

    def after(self, other: "PegPerm") -> "PegPerm":
        """Composition: other acts first, then self."""
        return PegPerm(tuple(self.images[other.images[x]] for x in range(3)))  # type: ignore[arg-type]

    def inverse(self) -> "PegPerm":
        imgs = [0, 0, 0]
        for x in range(3):
            imgs[self.images[x]] = x
        return PegPerm(tuple(imgs))  # type: ignore[arg-type]

    def is_identity(self) -> bool:
        return self.images == (0, 1, 2)

    def is_even(self) -> bool:
        # even iff identity or a 3-cycle
        fixed = sum(1 for x in range(3) if self.images[x] == x)
        return fixed != 1

    def cycle_str(self) -> str:
        if self.is_identity():
            return "()"
        fixed = [x for x in range(3) if self.images[x] == x]
        if fixed:
            moved = [x for x in range(3) if self.images[x] != x]
            return f"({moved[0]}{moved[1]})"
        return f"(0{self.images[0]}{self.images[self.images[0]]})"

    def __str__(self) -> str:
        return self.cycle_str()


def relabel(perm: PegPerm, value):
    """Rename pegs everywhere by ``perm``.

    Configs map letterwise, moves map by renaming both of their pegs, and
    sequences map letter by letter.  The defining property is equivariance:
    relabel(p, s)(relabel(p, u)) == relabel(p, s(u)).
    """
    if isinstance(value, Config):
        return Config("".join(PEG_LETTERS[perm(int(ch))] for ch in value.word))
    if isinstance(value, CoupledConfig):
        return CoupledConfig(relabel(perm, value.top), relabel(perm, value.bottom))
    if isinstance(value, Move):
        i, j = value.pegs
        pair = tuple(sorted((perm(i), perm(j))))
        return MOVES[_PAIR_LETTER[pair]]
    if isinstance(value, MoveSeq):
        table = {}
        for ch in MOVE_LETTERS:
            i, j = MOVE_PEGS[ch]
            table[ch] = _PAIR_LETTER[tuple(sorted((perm(i), perm(j))))]
        return MoveSeq("".join(table[ch] for ch in value.applied))
    raise TypeError(f"cannot relabel {type(value).__name__}")
