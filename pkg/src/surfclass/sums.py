"""Connected sums of closed surfaces, on words and on classes.

Joining two polygons along a small disk removed from each is, on edge-words,
just concatenation once the name clash is resolved.  On classification types
the operation is additive in genus and cross-cap count, with the one
non-obvious rule that a handle in the presence of a cross-cap converts to two
cross-caps; that rule is what makes the orientable and non-orientable series
interact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .words import SurfaceType, Word, mint_fresh, validate


def connected_sum_words(w1: Word, w2: Word) -> Word:
    """Concatenate two valid words after renaming ``w2`` away from ``w1``.

    Cutting a vertex open on each polygon and gluing the resulting boundary
    arcs realizes the connected sum, and the glued polygon reads as the first
    word followed by the second.  Colliding symbols in ``w2`` get fresh names
    in order of first occurrence, so the result is deterministic.
    """
    validate(w1)
    validate(w2)
    used = set(w1.symbols())
    mapping = {}
    for letter in w2.letters:
        s = letter.symbol
        if s in mapping or s not in used:
            continue
        fresh = mint_fresh(frozenset(used | set(w2.symbols()) | set(mapping.values())))
        mapping[s] = fresh
        used.add(fresh)
    renamed = tuple(letter._replace(symbol=mapping.get(letter.symbol, letter.symbol)) for letter in w2.letters)
    return Word(w1.letters + renamed)


def connected_sum_type(t1: SurfaceType, t2: SurfaceType) -> SurfaceType:
    """Classification type of the connected sum.

    The sphere is the identity.  Genus adds between orientable surfaces and
    cross-caps add between non-orientable ones.  Mixing the two, every handle
    trades for two cross-caps, so genus ``g`` against ``k`` cross-caps gives
    ``2g + k`` cross-caps.
    """
    if t1.is_sphere:
        return t2
    if t2.is_sphere:
        return t1
    if t1.orientable and t2.orientable:
        return SurfaceType.orientable_genus(t1.genus + t2.genus)
    if not t1.orientable and not t2.orientable:
        return SurfaceType.non_orientable(t1.genus + t2.genus)
    orient, non = (t1, t2) if t1.orientable else (t2, t1)
    return SurfaceType.non_orientable(2 * orient.genus + non.genus)


@dataclass(frozen=True)
class Decomposition:
    """Prime connected-sum decomposition of a surface type."""

    summands: Tuple[SurfaceType, ...]
    note: str


def decompose(t: SurfaceType) -> Decomposition:
    """Express a type as a connected sum of primes.

    Orientable surfaces split into tori, non-orientable ones into projective
    planes, and the sphere is the empty sum.  The decomposition into these
    primes is unique given the type, though words realizing it are not.
    """
    if t.is_sphere:
        return Decomposition((), "sphere; identity for connected sum")
    if t.orientable:
        torus = SurfaceType.orientable_genus(1)
        return Decomposition(
            (torus,) * t.genus,
            f"{t.genus} torus summand{'s' if t.genus != 1 else ''}",
        )
    plane = SurfaceType.non_orientable(1)
    return Decomposition(
        (plane,) * t.genus,
        f"{t.genus} projective plane summand{'s' if t.genus != 1 else ''}",
    )
