"""Brute-force reachability oracle for the move system.

The rewriting engine in :mod:`surfclass.normalize` claims that two edge-words
describe the same surface exactly when some move sequence connects them.  This
module checks that claim from the other direction: starting from one word it
floods outward through every legal move, collecting the full reachability
class over a fixed symbol universe.  Because every symbol of a valid word
occurs exactly twice, capping the number of distinct symbols also caps the
word length, so the search space is finite and the flood can genuinely
exhaust it.

The oracle shares no code with the normalizer's strategy layer; it only
re-uses the move legality rules themselves.
"""

from __future__ import annotations

import string
from collections import deque
from typing import NamedTuple, Sequence

from .moves import (
    Cancel,
    CutPaste,
    FlipEdge,
    Insert,
    Move,
    MoveError,
    Reflect,
    Rename,
    apply_move,
)
from .words import Letter, ValidationError, Word, mint_fresh, validate


class OrbitResult(NamedTuple):
    """Outcome of a reachability flood.

    ``words`` holds every word reached (cyclic rotations identified),
    ``exhausted`` reports whether the frontier emptied before the budget ran
    out, and ``expanded`` counts the nodes whose successors were generated.
    Only an exhausted result is a complete orbit; a budget-limited one is a
    lower bound.
    """

    words: frozenset
    exhausted: bool
    expanded: int


def _symbol_universe(word: Word, max_symbols: int) -> list[str]:
    """Fixed name pool for the flood: the word's own symbols first, then
    single letters until the pool has ``max_symbols`` names."""
    pool = sorted(word.symbols())
    if len(pool) > max_symbols:
        raise ValidationError(
            f"word uses {len(pool)} symbols, above the cap of {max_symbols}"
        )
    for c in string.ascii_lowercase:
        if len(pool) == max_symbols:
            break
        if c not in pool:
            pool.append(c)
    if len(pool) < max_symbols:
        # a-z exhausted; extend with numbered names
        i = 1
        while len(pool) < max_symbols:
            name = f"a{i}"
            if name not in pool:
                pool.append(name)
            i += 1
    return pool


def _successors(word: Word, universe: Sequence[str], temp_pool: Sequence[str]) -> list[Word]:
    """Every word one legal move away, using only names from ``universe``.

    Rotations are omitted because words compare cyclically.  A cut-and-paste
    needs a fresh edge name; when the universe is fully occupied the move is
    run with a throwaway name and immediately renamed onto the symbol the
    paste just freed, which is a two-move path to the same word.
    """
    out: list[Word] = []
    n = len(word)
    used = word.symbols()
    free = [s for s in universe if s not in used]

    out.append(apply_move(word, Reflect()))
    for s in sorted(used):
        out.append(apply_move(word, FlipEdge(s)))
        for t in free:
            out.append(apply_move(word, Rename(s, t)))

    if n > 2:
        for p in range(n):
            a = word.letters[p]
            b = word.letters[(p + 1) % n]
            if a.symbol == b.symbol and a.exponent == -b.exponent:
                out.append(apply_move(word, Cancel(p)))

    if len(used) < len(universe):
        fresh = free[0]
        for p in range(n + 1):
            out.append(apply_move(word, Insert(p, fresh)))

    if n >= 3:
        for i in range(n):
            for j in range(i + 1, n):
                arc1 = {word.letters[k].symbol for k in range(i, j)}
                arc2 = {word.letters[k % n].symbol for k in range(j, i + n)}
                both = arc1 & arc2
                if not both:
                    continue
                for paste_sym in sorted(both):
                    if free:
                        out.append(apply_move(word, CutPaste(i, j, free[0], paste_sym)))
                    else:
                        temp = next(t for t in temp_pool if t not in used)
                        mid = apply_move(word, CutPaste(i, j, temp, paste_sym))
                        out.append(apply_move(mid, Rename(temp, paste_sym)))
    return out


def orbit_oracle(word: Word, max_symbols: int, budget: int = 100_000) -> OrbitResult:
    """Flood-fill the move reachability class of ``word``.

    The name pool is the word's own symbols padded out to ``max_symbols``
    letters; every reached word draws its names from that pool, so the state
    space has at most ``2 * max_symbols`` letters per word and the flood
    terminates.  ``budget`` caps how many nodes get expanded.
    """
    validate(word)
    if max_symbols < 1:
        raise ValidationError("symbol cap must be at least 1")
    if budget < 1:
        raise ValidationError("budget must be at least 1")
    universe = _symbol_universe(word, max_symbols)
    temp_pool = [mint_fresh(frozenset(universe)) for _ in range(1)]

    seen: set[Word] = {word}
    queue: deque[Word] = deque([word])
    expanded = 0
    while queue:
        if expanded >= budget:
            return OrbitResult(frozenset(seen), False, expanded)
        cur = queue.popleft()
        expanded += 1
        for nxt in _successors(cur, universe, temp_pool):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return OrbitResult(frozenset(seen), True, expanded)


def enumerate_words(symbols: Sequence[str]) -> set[Word]:
    """All valid words drawing their symbols from ``symbols``.

    Every nonempty subset of the pool contributes the words in which each
    chosen symbol occurs exactly twice, with all four exponent combinations.
    Rotationally equal words collapse to one representative.
    """
    from itertools import combinations, permutations, product

    pool = list(dict.fromkeys(symbols))
    out: set[Word] = set()
    for k in range(1, len(pool) + 1):
        for subset in combinations(pool, k):
            base = []
            for s in subset:
                base.extend([s, s])
            for perm in set(permutations(base)):
                for signs in product((1, -1), repeat=2 * k):
                    out.add(Word(tuple(Letter(s, e) for s, e in zip(perm, signs))))
    return out
