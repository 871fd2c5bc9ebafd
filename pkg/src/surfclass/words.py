"""Cyclic edge-words for closed surfaces.

A closed surface can be presented as a single polygon with an even number of
sides identified in pairs.  Walking the boundary counterclockwise and writing
one symbol per side, with exponent -1 when the side is traversed against its
identification arrow, gives a cyclic word such as ``a b a' b'`` for the torus.
This module holds the word data model, the concrete syntax, the combinatorial
invariants (vertex cycles, Euler characteristic, orientability), the
homeomorphism-type datatype, and the assembly of one polygon from a glued
multi-polygon complex.

Words are cyclic: rotations of the letter sequence denote the same polygon,
and equality and hashing go through the lexicographically least rotation.
Reflections are deliberately NOT identified here; reversing the reading
direction is an explicit move in the rewriting module.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from string import ascii_lowercase
from typing import Iterator, NamedTuple


class SurfclassError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(SurfclassError):
    """Unparseable word text; carries a 1-based character position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class ValidationError(SurfclassError):
    """A word or polygon set violates the closed-surface pairing condition."""


_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)('|\^-1)?")
# compact form: single-letter symbols run together, e.g. aba'b' or ab^-1
_COMPACT_UNIT = re.compile(r"[A-Za-z]('|\^-1)?")


class Letter(NamedTuple):
    """One polygon side: an opaque symbol and a direction exponent."""

    symbol: str
    exponent: int

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.exponent)

    def render(self) -> str:
        return self.symbol + ("'" if self.exponent < 0 else "")


def _check_letters(letters: tuple[Letter, ...]) -> None:
    if not letters:
        raise ValidationError("a word must have at least one letter")
    for let in letters:
        if not isinstance(let, Letter):
            raise TypeError(f"expected Letter, got {type(let).__name__}")
        if let.exponent not in (1, -1):
            raise ValidationError(f"exponent of {let.symbol!r} must be +1 or -1")
        if not _IDENT.fullmatch(let.symbol):
            raise ValidationError(f"bad symbol name {let.symbol!r}")


@dataclass(frozen=True, eq=False)
class Word:
    """A cyclic sequence of letters.

    The stored rotation is meaningful for traces (move positions refer to it),
    but equality and hashing identify all rotations.  Closed-surface words
    have every symbol exactly twice; pieces returned by ``cut`` legitimately
    break that, so the pairing condition is enforced by ``validate``, not by
    the constructor.
    """

    letters: tuple[Letter, ...]
    _key: tuple[Letter, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        _check_letters(letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        best = min(letters[k:] + letters[:k] for k in range(n))
        object.__setattr__(self, "_key", best)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i % len(self.letters)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Word({self.render()!r})"

    def symbols(self) -> set[str]:
        return {let.symbol for let in self.letters}

    def occurrences(self, symbol: str) -> list[int]:
        return [i for i, let in enumerate(self.letters) if let.symbol == symbol]

    def rotated(self, offset: int) -> "Word":
        n = len(self.letters)
        k = offset % n
        return Word(self.letters[k:] + self.letters[:k])

    def reflected(self) -> "Word":
        return Word(tuple(let.inverse() for let in reversed(self.letters)))

    def render(self) -> str:
        """Text of the stored rotation, one token per side."""
        return " ".join(let.render() for let in self.letters)

    def display(self) -> str:
        """Text of the lexicographically least rotation."""
        return " ".join(let.render() for let in self._key)


def parse_word(text: str) -> Word:
    """Parse word text into a :class:`Word`.

    Two concrete forms are accepted.  Tokens separated by whitespace are
    identifiers with an optional trailing ``'`` or ``^-1``.  A single run of
    one-letter symbols such as ``aba'b'`` is also accepted; digits are not
    allowed there because ``a1`` would be ambiguous.
    """
    stripped = text.strip()
    if not stripped:
        raise WordSyntaxError("empty word", 1)
    tokens = list(re.finditer(r"\S+", text))
    if len(tokens) == 1:
        tok = tokens[0].group()
        start = tokens[0].start()
        if re.fullmatch(r"(?:[A-Za-z](?:'|\^-1)?){2,}", tok):
            letters = []
            pos = 0
            while pos < len(tok):
                m = _COMPACT_UNIT.match(tok, pos)
                if m is None:
                    raise WordSyntaxError(
                        f"unexpected character {tok[pos]!r}", start + pos + 1
                    )
                letters.append(Letter(m.group()[0], -1 if m.group(1) else 1))
                pos = m.end()
            return Word(tuple(letters))
    letters = []
    for tok_match in tokens:
        tok = tok_match.group()
        m = _TOKEN.fullmatch(tok)
        if m is None:
            bad = _TOKEN.match(tok)
            offset = bad.end() if bad else 0
            raise WordSyntaxError(
                f"unexpected character {tok[offset]!r}",
                tok_match.start() + offset + 1,
            )
        letters.append(Letter(m.group(1), -1 if m.group(2) else 1))
    return Word(tuple(letters))


def render_word(word: Word) -> str:
    return word.render()


def validate(word: Word) -> Word:
    """Check the closed-surface condition: every symbol occurs exactly twice.

    Returns the word unchanged so call sites can chain.  The error message
    lists every offending symbol with its occurrence count.
    """
    counts: dict[str, int] = {}
    for let in word.letters:
        counts[let.symbol] = counts.get(let.symbol, 0) + 1
    bad = [(s, c) for s, c in counts.items() if c != 2]
    if bad:
        bad.sort()
        parts = [
            f"symbol {s} occurs once" if c == 1 else f"symbol {s} occurs {c} times"
            for s, c in bad
        ]
        raise ValidationError("; ".join(parts))
    return word


def mint_fresh(used: set[str]) -> str:
    """First symbol not in `used`, scanning a, b, ..., z, a1, b1, ..."""
    suffix = 0
    while True:
        tail = "" if suffix == 0 else str(suffix)
        for ch in ascii_lowercase:
            name = ch + tail
            if name not in used:
                return name
        suffix += 1


# ---------------------------------------------------------------------------
# corner tracing
#
# Corner i is the polygon vertex where side i begins, so side i runs from
# corner i to corner i+1.  A side with exponent +1 carries its arrow along
# the traversal (tail at corner i), exponent -1 against it.  Identifying the
# two sides of a pair matches tail with tail and head with head; the vertex
# classes of the quotient surface are the union-find classes of corners.
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _side_endpoints(index: int, exponent: int, n: int) -> tuple[int, int]:
    # (tail corner, head corner) of the identification arrow on side `index`
    if exponent > 0:
        return index, (index + 1) % n
    return (index + 1) % n, index


def corner_classes(word: Word) -> tuple[int, ...]:
    """Representative corner index, per corner, under side identifications."""
    n = len(word.letters)
    uf = _UnionFind(n)
    by_symbol: dict[str, list[tuple[int, int]]] = {}
    for i, let in enumerate(word.letters):
        by_symbol.setdefault(let.symbol, []).append((i, let.exponent))
    for pair in by_symbol.values():
        if len(pair) != 2:
            raise ValidationError("corner tracing needs a closed word")
        (i, ei), (j, ej) = pair
        ti, hi = _side_endpoints(i, ei, n)
        tj, hj = _side_endpoints(j, ej, n)
        uf.union(ti, tj)
        uf.union(hi, hj)
    return tuple(uf.find(i) for i in range(n))


def vertex_cycle_count(word: Word) -> int:
    """Number of vertex classes of the identified polygon."""
    return len(set(corner_classes(word)))


def edge_count(word: Word) -> int:
    return len(word.symbols())


def euler_characteristic(word: Word) -> int:
    """V - E + F with one face; independent of any rewriting."""
    return vertex_cycle_count(word) - edge_count(word) + 1


def is_orientable(word: Word) -> bool:
    """A same-exponent pair is a Moebius band; orientable means none exists."""
    seen: dict[str, int] = {}
    for let in word.letters:
        if let.symbol in seen and seen[let.symbol] == let.exponent:
            return False
        seen[let.symbol] = let.exponent
    return True


# ---------------------------------------------------------------------------
# homeomorphism types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceType:
    """Sphere, orientable genus g, or non-orientable with k cross-caps.

    `genus` counts handles when orientable (0 means the sphere) and
    cross-caps otherwise.
    """

    orientable: bool
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValidationError("genus must be non-negative")
        if not self.orientable and self.genus < 1:
            raise ValidationError("a non-orientable surface has at least one cross-cap")

    @classmethod
    def sphere(cls) -> "SurfaceType":
        return cls(True, 0)

    @classmethod
    def orientable_genus(cls, g: int) -> "SurfaceType":
        return cls(True, g)

    @classmethod
    def non_orientable(cls, k: int) -> "SurfaceType":
        return cls(False, k)

    @property
    def is_sphere(self) -> bool:
        return self.orientable and self.genus == 0

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def describe(self) -> str:
        if self.is_sphere:
            body = "sphere"
        elif self.orientable:
            body = f"orientable genus {self.genus}"
            if self.genus == 1:
                body += " (torus)"
        else:
            plural = "s" if self.genus != 1 else ""
            body = f"non-orientable, {self.genus} cross-cap{plural}"
            if self.genus == 1:
                body += " (projective plane)"
            elif self.genus == 2:
                body += " (Klein bottle)"
        return f"{body}, χ={self.euler}"

    def __str__(self) -> str:
        if self.is_sphere:
            return "Sphere"
        if self.orientable:
            return f"Orientable({self.genus})"
        return f"NonOrientable({self.genus})"


class InternalInvariantError(SurfclassError):
    """A computation broke one of its own invariants; always a bug."""


def surface_type_from_invariants(chi: int, orientable: bool) -> SurfaceType:
    if orientable:
        if chi % 2 != 0:
            raise InternalInvariantError(
                f"orientable surface with odd Euler characteristic {chi}"
            )
        return SurfaceType(True, (2 - chi) // 2)
    return SurfaceType(False, 2 - chi)


def classify_by_invariants(word: Word) -> SurfaceType:
    """Type from Euler characteristic plus orientability alone.

    This is the cheap independent oracle: it never rewrites the word.
    """
    validate(word)
    return surface_type_from_invariants(euler_characteristic(word), is_orientable(word))


def canonical_word(t: SurfaceType) -> Word:
    """The normal-form word of a type, with subscripted symbols a1, b1, ..."""
    if t.is_sphere:
        return Word((Letter("a1", 1), Letter("a1", -1)))
    letters: list[Letter] = []
    if t.orientable:
        for i in range(1, t.genus + 1):
            a, b = f"a{i}", f"b{i}"
            letters += [Letter(a, 1), Letter(b, 1), Letter(a, -1), Letter(b, -1)]
    else:
        for i in range(1, t.genus + 1):
            a = f"a{i}"
            letters += [Letter(a, 1), Letter(a, 1)]
    return Word(tuple(letters))


# ---------------------------------------------------------------------------
# multi-polygon complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolygonSet:
    """Polygons sharing one symbol namespace; symbols pair across the set."""

    polygons: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.polygons:
            raise ValidationError("a polygon set must contain at least one polygon")
        object.__setattr__(self, "polygons", tuple(self.polygons))

    def symbol_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for poly in self.polygons:
            for let in poly.letters:
                counts[let.symbol] = counts.get(let.symbol, 0) + 1
        return counts


def validate_polygon_set(polys: PolygonSet) -> PolygonSet:
    bad = [(s, c) for s, c in sorted(polys.symbol_counts().items()) if c != 2]
    if bad:
        parts = [
            f"symbol {s} occurs once" if c == 1 else f"symbol {s} occurs {c} times"
            for s, c in bad
        ]
        raise ValidationError("; ".join(parts))
    return polys


def parse_polygon_file(text: str) -> PolygonSet:
    """One word per line; blank lines and ``#`` comments are ignored."""
    polygons = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            polygons.append(parse_word(line))
        except WordSyntaxError as exc:
            raise WordSyntaxError(f"line {lineno}: {exc}", exc.position) from exc
    if not polygons:
        raise ValidationError("no polygons in input")
    return PolygonSet(tuple(polygons))


def complex_euler(polys: PolygonSet) -> int:
    """V - E + F over the whole complex, before any merging."""
    corners: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for p, poly in enumerate(polys.polygons):
        for c in range(len(poly.letters)):
            index[(p, c)] = len(corners)
            corners.append((p, c))
    uf = _UnionFind(len(corners))
    occ: dict[str, list[tuple[int, int, int]]] = {}
    for p, poly in enumerate(polys.polygons):
        for i, let in enumerate(poly.letters):
            occ.setdefault(let.symbol, []).append((p, i, let.exponent))
    for sym, pair in occ.items():
        if len(pair) != 2:
            raise ValidationError(f"symbol {sym} does not occur exactly twice")
        (p1, i1, e1), (p2, i2, e2) = pair
        n1 = len(polys.polygons[p1].letters)
        n2 = len(polys.polygons[p2].letters)
        t1, h1 = _side_endpoints(i1, e1, n1)
        t2, h2 = _side_endpoints(i2, e2, n2)
        uf.union(index[(p1, t1)], index[(p2, t2)])
        uf.union(index[(p1, h1)], index[(p2, h2)])
    v = len({uf.find(i) for i in range(len(corners))})
    e = len(occ)
    f = len(polys.polygons)
    return v - e + f


def complex_is_orientable(polys: PolygonSet) -> bool:
    """True when every polygon can be oriented consistently.

    An identification is orientation-compatible when the two sides carry
    opposite exponents after each polygon's chosen orientation sign is
    applied; flipping a polygon negates all of its exponents.
    """
    occ: dict[str, list[tuple[int, int]]] = {}
    for p, poly in enumerate(polys.polygons):
        for let in poly.letters:
            occ.setdefault(let.symbol, []).append((p, let.exponent))
    npoly = len(polys.polygons)
    sign = [0] * npoly
    adj: list[list[tuple[int, int]]] = [[] for _ in range(npoly)]
    for pair in occ.values():
        (p1, e1), (p2, e2) = pair
        if p1 == p2:
            if e1 == e2:
                return False
            continue
        # required relation: sign[p1] * sign[p2] == -e1 * e2
        rel = -e1 * e2
        adj[p1].append((p2, rel))
        adj[p2].append((p1, rel))
    for start in range(npoly):
        if sign[start]:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            p = stack.pop()
            for q, rel in adj[p]:
                want = sign[p] * rel
                if sign[q] == 0:
                    sign[q] = want
                    stack.append(q)
                elif sign[q] != want:
                    return False
    return True


def _join_on_symbol(
    w1: tuple[Letter, ...], w2: tuple[Letter, ...], symbol: str
) -> tuple[Letter, ...]:
    """Merge two polygons along `symbol`, deleting both occurrences.

    The splice underlying both paste and gluing.  With opposite exponents the
    second polygon is concatenated as stored; with equal exponents it is
    reflected first, which is the only way the sides can be matched.
    """
    occ1 = [i for i, let in enumerate(w1) if let.symbol == symbol]
    occ2 = [i for i, let in enumerate(w2) if let.symbol == symbol]
    if len(occ1) != 1 or len(occ2) != 1:
        raise ValidationError(
            f"symbol {symbol} must occur exactly once in each polygon"
        )
    i, j = occ1[0], occ2[0]
    if w1[i].exponent == w2[j].exponent:
        w2 = tuple(let.inverse() for let in reversed(w2))
        j = len(w2) - 1 - j
    # rotate the first so `symbol` is last, the second so it is first
    left = w1[i + 1 :] + w1[:i]
    right = w2[j + 1 :] + w2[:j]
    return left + right


def glue_polygons(polys: PolygonSet) -> Word:
    """Merge a connected polygon set into one polygon word.

    Repeatedly splices the two lowest-indexed polygons sharing the
    lexicographically least cross-polygon symbol.  Symbols paired inside a
    single polygon are internal identifications and survive into the result.
    """
    validate_polygon_set(polys)
    current: list[tuple[Letter, ...]] = [p.letters for p in polys.polygons]
    while len(current) > 1:
        shared: dict[str, list[int]] = {}
        for idx, letters in enumerate(current):
            for let in letters:
                shared.setdefault(let.symbol, []).append(idx)
        candidates = sorted(
            sym for sym, where in shared.items() if where[0] != where[-1]
        )
        if not candidates:
            raise ValidationError("polygon set is disconnected")
        sym = candidates[0]
        a, b = shared[sym][0], shared[sym][-1]
        merged = _join_on_symbol(current[a], current[b], sym)
        current = [w for k, w in enumerate(current) if k not in (a, b)]
        current.insert(0, merged)
    return Word(current[0])
