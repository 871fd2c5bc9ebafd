"""Elementary cut-and-paste moves on cyclic words, with replayable traces.

Every move is invertible and preserves both the Euler characteristic and
orientability, which is what makes a recorded move sequence a classification
certificate: replaying it from the initial word must land on the canonical
form, and any tampering is caught because each intermediate is revalidated.

Move positions always refer to the stored rotation of the word they are
applied to.  Rotations are themselves moves, so a trace pins down every
intermediate exactly, not merely up to cyclic symmetry.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .words import (
    Letter,
    SurfclassError,
    ValidationError,
    Word,
    _join_on_symbol,
    validate,
)


class MoveError(SurfclassError):
    """A move's parameters do not fit the word it is applied to."""


class ReplayError(SurfclassError):
    """A trace produced an invalid intermediate; the certificate is broken."""


# ---------------------------------------------------------------------------
# move vocabulary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rotate:
    offset: int

    def render(self) -> str:
        return f"rotate {self.offset}"


@dataclass(frozen=True)
class Reflect:
    def render(self) -> str:
        return "reflect"


@dataclass(frozen=True)
class Rename:
    old: str
    new: str

    def render(self) -> str:
        return f"rename {self.old} {self.new}"


@dataclass(frozen=True)
class FlipEdge:
    """Negate both occurrences of one symbol, reversing that side's arrow."""

    symbol: str

    def render(self) -> str:
        return f"flipedge {self.symbol}"


@dataclass(frozen=True)
class Cancel:
    """Delete the adjacent inverse pair at (position, position+1)."""

    position: int

    def render(self) -> str:
        return f"cancel {self.position}"


@dataclass(frozen=True)
class Insert:
    """Insert a fresh inverse pair before `position`; undoes Cancel."""

    position: int
    symbol: str

    def render(self) -> str:
        return f"insert {self.position} {self.symbol}"


@dataclass(frozen=True)
class CutPaste:
    """Cut along a diagonal from corner i to corner j, then re-paste.

    The diagonal becomes a fresh side `fresh` in both pieces; the pieces are
    rejoined along `paste`, whose two occurrences must end up in different
    pieces.  One CutPaste keeps the side count constant: `fresh` enters the
    word and `paste` leaves it.
    """

    i: int
    j: int
    fresh: str
    paste: str

    def render(self) -> str:
        return f"cutpaste {self.i} {self.j} {self.fresh} {self.paste}"


Move = Union[Rotate, Reflect, Rename, FlipEdge, Cancel, Insert, CutPaste]


# ---------------------------------------------------------------------------
# cut and paste
# ---------------------------------------------------------------------------


def cut(word: Word, i: int, j: int, fresh: str) -> tuple[Word, Word]:
    """Split a polygon along the diagonal from corner i to corner j.

    Returns (sides i..j-1 then the diagonal, the diagonal reversed then the
    remaining sides).  Gluing the two pieces back along `fresh` recovers the
    original cyclic word.
    """
    n = len(word.letters)
    if n < 3:
        raise MoveError("cannot cut a polygon with fewer than 3 sides")
    if not (0 <= i < n and 0 <= j < n):
        raise MoveError(f"cut positions {i},{j} out of range for length {n}")
    if i == j:
        raise MoveError("cut needs two distinct corners; a piece would be empty")
    if fresh in word.symbols():
        raise MoveError(f"diagonal symbol {fresh} already occurs in the word")
    arc1 = tuple(word[(i + k) % n] for k in range((j - i) % n))
    arc2 = tuple(word[(j + k) % n] for k in range((i - j) % n))
    return (
        Word(arc1 + (Letter(fresh, 1),)),
        Word((Letter(fresh, -1),) + arc2),
    )


def paste(w1: Word, w2: Word, symbol: str) -> Word:
    """Glue two polygons along `symbol`, which must occur once in each.

    Opposite exponents join directly; equal exponents force a reflection of
    the second polygon before joining.
    """
    try:
        return Word(_join_on_symbol(w1.letters, w2.letters, symbol))
    except ValidationError as exc:
        raise MoveError(str(exc)) from exc


# ---------------------------------------------------------------------------
# applying moves
# ---------------------------------------------------------------------------


def apply_move(word: Word, move: Move) -> Word:
    """Apply one elementary move; raises MoveError on bad parameters."""
    n = len(word.letters)
    if isinstance(move, Rotate):
        return word.rotated(move.offset)
    if isinstance(move, Reflect):
        return word.reflected()
    if isinstance(move, Rename):
        if move.old not in word.symbols():
            raise MoveError(f"symbol {move.old} does not occur")
        if move.new in word.symbols():
            raise MoveError(f"symbol {move.new} already occurs")
        if move.new == move.old:
            raise MoveError("rename must change the symbol")
        return Word(
            tuple(
                Letter(move.new, let.exponent) if let.symbol == move.old else let
                for let in word.letters
            )
        )
    if isinstance(move, FlipEdge):
        if move.symbol not in word.symbols():
            raise MoveError(f"symbol {move.symbol} does not occur")
        return Word(
            tuple(
                let.inverse() if let.symbol == move.symbol else let
                for let in word.letters
            )
        )
    if isinstance(move, Cancel):
        if n <= 2:
            raise MoveError("cancel on a word of length 2 would empty the polygon")
        p = move.position
        if not 0 <= p < n:
            raise MoveError(f"cancel position {p} out of range for length {n}")
        a, b = word[p], word[p + 1]
        if a.symbol != b.symbol or a.exponent != -b.exponent:
            raise MoveError(
                f"letters at {p},{(p + 1) % n} are {a.render()},{b.render()}, "
                "not an adjacent inverse pair"
            )
        q = (p + 1) % n
        keep = [let for k, let in enumerate(word.letters) if k not in (p, q)]
        return Word(tuple(keep))
    if isinstance(move, Insert):
        if not 0 <= move.position <= n:
            raise MoveError(
                f"insert position {move.position} out of range for length {n}"
            )
        if move.symbol in word.symbols():
            raise MoveError(f"symbol {move.symbol} already occurs")
        p = move.position
        pair = (Letter(move.symbol, 1), Letter(move.symbol, -1))
        return Word(word.letters[:p] + pair + word.letters[p:])
    if isinstance(move, CutPaste):
        if not move.i < move.j:
            raise MoveError("cut positions must satisfy i < j")
        piece1, piece2 = cut(word, move.i, move.j, move.fresh)
        if move.paste == move.fresh:
            # pasting along the diagonal just undoes the cut
            return paste(piece1, piece2, move.fresh)
        return paste(piece1, piece2, move.paste)
    raise MoveError(f"unknown move {move!r}")


def inverse_rotation(move: Rotate, length: int) -> Rotate:
    return Rotate((-move.offset) % length)


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MoveTrace:
    """A classification certificate: an initial word and a move sequence."""

    initial: Word
    steps: tuple[Move, ...]

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps)


def replay(trace: MoveTrace, collect: list[Word] | None = None) -> Word:
    """Re-run a trace, revalidating every intermediate word.

    Any parameter that no longer fits, or any intermediate that stops being a
    closed-surface word, raises ReplayError.  Pass `collect` to receive every
    intermediate (the initial word included).
    """
    word = trace.initial
    try:
        validate(word)
    except ValidationError as exc:
        raise ReplayError(f"initial word invalid: {exc}") from exc
    if collect is not None:
        collect.append(word)
    for k, step in enumerate(trace.steps, start=1):
        try:
            word = apply_move(word, step)
            validate(word)
        except (MoveError, ValidationError) as exc:
            raise ReplayError(f"step {k} ({step.render()}): {exc}") from exc
        if collect is not None:
            collect.append(word)
    return word


def parse_trace(text: str, initial: Word) -> MoveTrace:
    """Parse the line-oriented trace format back into a MoveTrace."""
    steps: list[Move] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        op, args = parts[0], parts[1:]
        try:
            if op == "rotate" and len(args) == 1:
                steps.append(Rotate(int(args[0])))
            elif op == "reflect" and not args:
                steps.append(Reflect())
            elif op == "rename" and len(args) == 2:
                steps.append(Rename(args[0], args[1]))
            elif op == "flipedge" and len(args) == 1:
                steps.append(FlipEdge(args[0]))
            elif op == "cancel" and len(args) == 1:
                steps.append(Cancel(int(args[0])))
            elif op == "insert" and len(args) == 2:
                steps.append(Insert(int(args[0]), args[1]))
            elif op == "cutpaste" and len(args) == 4:
                steps.append(CutPaste(int(args[0]), int(args[1]), args[2], args[3]))
            else:
                raise ValueError(f"unknown move {line!r}")
        except ValueError as exc:
            raise MoveError(f"trace line {lineno}: {exc}") from exc
    return MoveTrace(initial, tuple(steps))
