"""Deterministic normalization of closed-surface words.

The pipeline rewrites any valid word to the canonical form of its
homeomorphism type and records every elementary move:

1. Vertex reduction.  While the identified polygon has more than one vertex
   class, shrink a smallest class.  A class of size one forces its two
   flanking sides to be an adjacent inverse pair, which is cancelled; a
   larger class loses a corner to a neighbouring class through a triangle
   cut-and-paste.  Sphere words bottom out at the two-sided polygon instead,
   since a single vertex is impossible when the characteristic is 2.
2. A one-shot split of a word that is already a run of adjacent
   same-exponent pairs, which reroutes it through the interleaved form
   before regathering.  On the four-sided Klein-bottle word this is the
   classical detour through ``a c a' c``.
3. The main loop: gather any non-adjacent same-exponent pair into an
   adjacent cross-cap; when cross-caps coexist with an inverse pair, cut so
   that the leading cross-cap becomes non-adjacent again, which converts one
   inverse pair into cross-cap material per round; on fully orientable words
   gather interleaved pairs into contiguous commutator blocks.
4. Finish: rotate to a block boundary, reverse negatively oriented sides,
   and rename symbols left to right into the canonical alphabet.

Each emitted move is checked to preserve the Euler characteristic and
orientability, and the final word is required to equal the canonical word of
the computed type letter for letter.  Any violation raises
InternalInvariantError rather than returning a wrong certificate.
"""
from __future__ import annotations

from typing import NamedTuple

from .moves import (
    Cancel,
    CutPaste,
    FlipEdge,
    Move,
    MoveError,
    MoveTrace,
    Rename,
    Rotate,
    apply_move,
    replay,
)
from .words import (
    InternalInvariantError,
    SurfaceType,
    Word,
    canonical_word,
    classify_by_invariants,
    corner_classes,
    euler_characteristic,
    is_orientable,
    mint_fresh,
    validate,
)


class NormalizationResult(NamedTuple):
    type: SurfaceType
    trace: MoveTrace


class _Rewriter:
    """Mutable cursor over a word that records and checks each move."""

    def __init__(self, word: Word) -> None:
        self.word = word
        self.steps: list[Move] = []
        self._chi = euler_characteristic(word)
        self._orientable = is_orientable(word)

    def emit(self, move: Move) -> None:
        try:
            self.word = apply_move(self.word, move)
        except MoveError as exc:
            raise InternalInvariantError(
                f"normalization emitted an inapplicable move {move.render()}: {exc}"
            ) from exc
        self.steps.append(move)
        if (
            euler_characteristic(self.word) != self._chi
            or is_orientable(self.word) != self._orientable
        ):
            raise InternalInvariantError(
                f"move {move.render()} changed an invariant of {self.word.render()}"
            )

    def rotate_to(self, offset: int) -> None:
        if offset % len(self.word):
            self.emit(Rotate(offset % len(self.word)))

    def fresh(self) -> str:
        return mint_fresh(self.word.symbols())


# ---------------------------------------------------------------------------
# pair scanning helpers
# ---------------------------------------------------------------------------


def _pair_positions(word: Word) -> dict[str, tuple[int, int]]:
    occ: dict[str, list[int]] = {}
    for k, let in enumerate(word.letters):
        occ.setdefault(let.symbol, []).append(k)
    return {s: (p[0], p[1]) for s, p in occ.items()}


def _cyclically_adjacent(i: int, j: int, n: int) -> bool:
    return j - i == 1 or (i == 0 and j == n - 1)


def _first_nonadjacent_same_pair(word: Word) -> tuple[int, int] | None:
    n = len(word.letters)
    best: tuple[int, int] | None = None
    for i, j in _pair_positions(word).values():
        if word[i].exponent != word[j].exponent:
            continue
        if _cyclically_adjacent(i, j, n):
            continue
        if best is None or (i, j) < best:
            best = (i, j)
    return best


def _has_same_exponent_pair(word: Word) -> bool:
    return not is_orientable(word)


def _opposite_pairs(word: Word) -> list[tuple[int, int]]:
    out = []
    for i, j in _pair_positions(word).values():
        if word[i].exponent == -word[j].exponent:
            out.append((i, j))
    return sorted(out)


def _crosscap_alignment(word: Word) -> int | None:
    """Smallest rotation offset making the word a run of (s, s) blocks."""
    n = len(word.letters)
    if n % 2:
        return None
    for r in range(n):
        ok = True
        for t in range(n // 2):
            a = word[(r + 2 * t) % n]
            b = word[(r + 2 * t + 1) % n]
            if a.symbol != b.symbol or a.exponent != b.exponent:
                ok = False
                break
        if ok:
            return r
    return None


def _commutator_alignment(word: Word) -> int | None:
    """Smallest rotation offset splitting the word into commutator blocks.

    A block is four consecutive letters X Y X Y over two distinct symbols
    with the second occurrences inverted, in any orientation.
    """
    n = len(word.letters)
    if n % 4:
        return None
    for r in range(n):
        ok = True
        for t in range(0, n, 4):
            c = [word[(r + t + k) % n] for k in range(4)]
            if not (
                c[0].symbol == c[2].symbol
                and c[1].symbol == c[3].symbol
                and c[0].symbol != c[1].symbol
                and c[2].exponent == -c[0].exponent
                and c[3].exponent == -c[1].exponent
            ):
                ok = False
                break
        if ok:
            return r
    return None


# ---------------------------------------------------------------------------
# phase 1: vertex reduction
# ---------------------------------------------------------------------------


def _class_sizes(classes: tuple[int, ...]) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for root in classes:
        sizes[root] = sizes.get(root, 0) + 1
    return sizes


def _reduce_vertices(rw: _Rewriter) -> None:
    guard = 8 * len(rw.word) * len(rw.word) + 64
    for _ in range(guard):
        n = len(rw.word)
        if n == 2:
            return
        classes = corner_classes(rw.word)
        sizes = _class_sizes(classes)
        if len(sizes) == 1:
            return
        qroot = min(sizes, key=lambda r: (sizes[r], r))
        if sizes[qroot] == 1:
            p = classes.index(qroot)
            # a singleton corner is flanked by an adjacent inverse pair
            rw.emit(Cancel((p - 1) % n))
            continue
        _shrink_class(rw, classes, sizes, qroot)
    raise InternalInvariantError("vertex reduction failed to terminate")


def _shrink_class(
    rw: _Rewriter,
    classes: tuple[int, ...],
    sizes: dict[int, int],
    qroot: int,
) -> None:
    """Transplant one corner out of the chosen class via a triangle cut.

    Candidates are tried in a fixed order and the first one that strictly
    shrinks the sorted class-size profile is taken, so the outcome is
    deterministic and the loop measure is explicit.
    """
    word = rw.word
    n = len(word.letters)
    old_profile = sorted(sizes.values())
    in_q = [p for p in range(n) if classes[p] == qroot]
    others = [p for p in range(n) if classes[p] != qroot]
    for p in in_q + others:
        flank_a = word[(p - 1) % n]
        flank_b = word[p]
        if flank_a.symbol == flank_b.symbol:
            continue
        for paste_symbol in (flank_a.symbol, flank_b.symbol):
            offset = (p - 1) % n
            trial = word.rotated(offset) if offset else word
            try:
                trial = apply_move(
                    trial, CutPaste(0, 2, mint_fresh(trial.symbols()), paste_symbol)
                )
            except MoveError:
                continue
            new_profile = sorted(_class_sizes(corner_classes(trial)).values())
            if new_profile < old_profile:
                rw.rotate_to(offset)
                rw.emit(CutPaste(0, 2, rw.fresh(), paste_symbol))
                return
    raise InternalInvariantError("no corner-shrinking move exists; bad class data")


# ---------------------------------------------------------------------------
# phase 2: one-shot split of an all-cross-cap word
# ---------------------------------------------------------------------------


def _split_crosscap_run(rw: _Rewriter) -> None:
    n = len(rw.word)
    if n < 4:
        return
    r = _crosscap_alignment(rw.word)
    if r is None:
        return
    rw.rotate_to(r)
    n = len(rw.word)
    rw.emit(CutPaste(1, n - 1, rw.fresh(), rw.word[n - 1].symbol))


# ---------------------------------------------------------------------------
# phase 3: gathering
# ---------------------------------------------------------------------------


def _collect_crosscap(rw: _Rewriter, i: int, j: int) -> None:
    rw.emit(CutPaste(i, j, rw.fresh(), rw.word[i].symbol))


def _seed_split(rw: _Rewriter) -> None:
    """Break the leading cross-cap across an inverse pair.

    The word starts with an adjacent same-exponent pair after rotation; the
    cut runs from inside that pair to just past the first letter that belongs
    to an inverse pair.  Pasting along that letter leaves the leading pair
    non-adjacent, so the next round regathers it, and the pasted-away inverse
    pair is gone for good; that is the strictly decreasing quantity.
    """
    word = rw.word
    n = len(word.letters)
    start = None
    for p in range(n):
        a, b = word[p], word[(p + 1) % n]
        if a.symbol == b.symbol and a.exponent == b.exponent:
            start = p
            break
    if start is None:
        raise InternalInvariantError("seed split called without a cross-cap")
    rw.rotate_to(start)
    word = rw.word
    pairs = _pair_positions(word)
    q0 = None
    for q in range(2, n):
        i, j = pairs[word[q].symbol]
        if word[i].exponent == -word[j].exponent:
            q0 = q
            break
    if q0 is None:
        raise InternalInvariantError("seed split called without an inverse pair")
    rw.emit(CutPaste(1, q0 + 1, rw.fresh(), rw.word[q0].symbol))


def _collect_handle(rw: _Rewriter, done: set[str]) -> None:
    """Gather one interleaved inverse pair into a contiguous commutator block.

    Two cuts: the first re-pastes along an interleaving pair, the second
    along the original pair; the two minted symbols u, v end up adjacent as
    u' v u v'.  Finished blocks are marked done and are never chosen as
    interleavers again; they cannot interleave anything anyway, because they
    stay contiguous under later cuts (cut boundaries always sit at letters of
    the pairs being worked on, never inside a finished block).
    """
    word = rw.word
    pairs = _pair_positions(word)
    candidates = sorted(
        (i, j)
        for s, (i, j) in pairs.items()
        if s not in done and word[i].exponent == -word[j].exponent
    )
    if not candidates:
        raise InternalInvariantError("handle gathering called with nothing to do")
    i, _ = candidates[0]
    rw.rotate_to(i)
    word = rw.word
    x = word[0].symbol
    p2 = _pair_positions(word)[x][1]
    interleaver = None
    for q in range(1, p2):
        sym = word[q].symbol
        if sym == x or sym in done:
            continue
        a, b = _pair_positions(word)[sym]
        inside = (a if a != q else b)
        if not (0 < inside < p2):
            interleaver = q
            break
    if interleaver is None:
        raise InternalInvariantError(
            f"pair {x} in a one-vertex word has no usable interleaver"
        )
    y = word[interleaver].symbol
    u = rw.fresh()
    rw.emit(CutPaste(0, p2 + 1, u, y))
    # bring the positively oriented u to the front for the second cut
    word = rw.word
    u_pos = [k for k, let in enumerate(word.letters) if let.symbol == u]
    u_plus = u_pos[0] if word[u_pos[0]].exponent > 0 else u_pos[1]
    rw.rotate_to(u_plus)
    word = rw.word
    u_minus = [
        k
        for k, let in enumerate(word.letters)
        if let.symbol == u and let.exponent < 0
    ][0]
    v = rw.fresh()
    rw.emit(CutPaste(0, u_minus + 1, v, x))
    done.add(u)
    done.add(v)


def _gather(rw: _Rewriter) -> None:
    done: set[str] = set()
    guard = 20 * (len(rw.word) + 2) ** 2 + 64
    for _ in range(guard):
        pair = _first_nonadjacent_same_pair(rw.word)
        if pair is not None:
            _collect_crosscap(rw, *pair)
            continue
        opposite = _opposite_pairs(rw.word)
        if not opposite:
            return
        if _has_same_exponent_pair(rw.word):
            _seed_split(rw)
            continue
        live = [
            (i, j)
            for i, j in opposite
            if rw.word[i].symbol not in done
        ]
        if not live:
            return
        _collect_handle(rw, done)
    raise InternalInvariantError("gathering failed to terminate")


# ---------------------------------------------------------------------------
# phase 4: finish
# ---------------------------------------------------------------------------


def _apply_renames(rw: _Rewriter, mapping: dict[str, str]) -> None:
    pending = {old: new for old, new in mapping.items() if old != new}
    guard = 4 * len(pending) + 8
    for _ in range(guard):
        if not pending:
            return
        used = rw.word.symbols()
        free = [(old, new) for old, new in sorted(pending.items()) if new not in used]
        if free:
            old, new = free[0]
            rw.emit(Rename(old, new))
            del pending[old]
            continue
        # break a rename cycle through a temporary name
        old = sorted(pending)[0]
        tmp = mint_fresh(used | set(pending.values()))
        rw.emit(Rename(old, tmp))
        pending[tmp] = pending.pop(old)
    raise InternalInvariantError("renaming failed to terminate")


def _finish(rw: _Rewriter) -> SurfaceType:
    word = rw.word
    n = len(word.letters)
    if n == 2 and word[0].exponent == -word[1].exponent:
        if word[0].exponent < 0:
            rw.emit(Rotate(1))
        _apply_renames(rw, {rw.word[0].symbol: "a1"})
        return SurfaceType.sphere()
    if _has_same_exponent_pair(word):
        r = _crosscap_alignment(word)
        if r is None:
            raise InternalInvariantError(
                f"expected a cross-cap run, got {word.render()}"
            )
        rw.rotate_to(r)
        for t in range(len(rw.word) // 2):
            if rw.word[2 * t].exponent < 0:
                rw.emit(FlipEdge(rw.word[2 * t].symbol))
        mapping = {
            rw.word[2 * t].symbol: f"a{t + 1}" for t in range(len(rw.word) // 2)
        }
        _apply_renames(rw, mapping)
        return SurfaceType.non_orientable(len(rw.word) // 2)
    r = _commutator_alignment(word)
    if r is None:
        raise InternalInvariantError(
            f"expected commutator blocks, got {word.render()}"
        )
    rw.rotate_to(r)
    for t in range(0, len(rw.word), 4):
        if rw.word[t].exponent < 0:
            rw.emit(FlipEdge(rw.word[t].symbol))
        if rw.word[t + 1].exponent < 0:
            rw.emit(FlipEdge(rw.word[t + 1].symbol))
    mapping = {}
    for g in range(len(rw.word) // 4):
        mapping[rw.word[4 * g].symbol] = f"a{g + 1}"
        mapping[rw.word[4 * g + 1].symbol] = f"b{g + 1}"
    _apply_renames(rw, mapping)
    return SurfaceType.orientable_genus(len(rw.word) // 4)


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def normalize(word: Word) -> NormalizationResult:
    """Classify a word and return the type with a replayable certificate."""
    validate(word)
    rw = _Rewriter(word)
    _reduce_vertices(rw)
    if len(rw.word) > 2:
        _split_crosscap_run(rw)
        _gather(rw)
    t = _finish(rw)
    if rw.word.letters != canonical_word(t).letters:
        raise InternalInvariantError(
            f"finished at {rw.word.render()}, not the canonical word of {t}"
        )
    if t != classify_by_invariants(word):
        raise InternalInvariantError(
            f"normalized type {t} disagrees with the invariant classification"
        )
    trace = MoveTrace(word, tuple(rw.steps))
    return NormalizationResult(t, trace)


def equivalent(w1: Word, w2: Word) -> bool:
    """True when both words present the same surface."""
    return normalize(w1).type == normalize(w2).type


def certificate_words(trace: MoveTrace) -> list[Word]:
    """Every intermediate word of a trace, initial and final included."""
    seen: list[Word] = []
    replay(trace, seen)
    return seen
