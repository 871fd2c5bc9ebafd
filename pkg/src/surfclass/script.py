"""Line-oriented construction scripts for rational surfaces.

One statement per line, ``#`` starts a comment.  A script opens with a base
statement and then builds: blow up points (optionally on named lines), name
new classes by integer combinations of the current basis, blow named lines
down, run the minimal-model reduction, or snapshot a report.  Errors carry
the one-based line number so the command line can point at the offending
statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .lattice import (
    BaseSurface,
    DivisorClass,
    RationalSurface,
    blow_up,
    blow_down,
    euler_characteristic_cx,
    intersect,
    make_base,
)
from .minimal import ReductionReport, minimal_model
from .words import SurfclassError, ValidationError


class ScriptError(SurfclassError):
    """A statement that cannot be parsed or executed; carries its line."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.bare_message = message


_TERM = re.compile(r"^\s*([+-])?\s*(\d+)?\s*\*?\s*([A-Za-z][A-Za-z0-9_]*)\s*")


def parse_class_expr(expr: str, surf: RationalSurface, line_no: int) -> DivisorClass:
    """Integer combination of basis names, e.g. ``H - E1 - E2`` or ``2S + 3F``.

    Names resolve against the current lattice basis, not against tracked
    lines; a tracked line may have drifted away from the basis vector that
    shares its name, and expressions are meant to write raw lattice vectors.
    """
    index = {nm: i for i, nm in enumerate(surf.basis)}
    coords = [0] * surf.rank
    pos = 0
    first = True
    text = expr.strip()
    if not text:
        raise ScriptError("empty class expression", line_no)
    while pos < len(text):
        m = _TERM.match(text[pos:])
        if not m:
            raise ScriptError(f"cannot read class expression at {text[pos:]!r}", line_no)
        sign_s, coeff_s, name = m.groups()
        if first and sign_s is None:
            sign_s = "+"
        if sign_s is None:
            raise ScriptError(f"missing + or - before {name!r}", line_no)
        if name not in index:
            raise ScriptError(
                f"unknown basis name {name!r} (basis: {', '.join(surf.basis)})", line_no
            )
        coeff = int(coeff_s) if coeff_s else 1
        coords[index[name]] += coeff if sign_s == "+" else -coeff
        pos += m.end()
        first = False
    return DivisorClass(tuple(coords))


@dataclass
class ScriptOutcome:
    """Everything a script run produced.

    ``events`` interleaves report snapshots and reduction reports in script
    order, tagged ``("report", str)`` or ``("reduction", ReductionReport)``.
    """

    surface: RationalSurface
    events: List[Tuple[str, object]] = field(default_factory=list)

    @property
    def reports(self) -> List[str]:
        return [payload for kind, payload in self.events if kind == "report"]

    @property
    def reductions(self) -> List[ReductionReport]:
        return [payload for kind, payload in self.events if kind == "reduction"]


def render_report(surf: RationalSurface) -> str:
    """Human-readable lattice snapshot."""
    lines = [f"base: {surf.base}  blow-ups: {surf.blowups}"]
    lines.append(f"basis: ({', '.join(surf.basis)})")
    lines.append("gram:")
    for row in surf.gram:
        lines.append("  [" + ", ".join(f"{v:d}" for v in row) + "]")
    lines.append("tracked lines:")
    for nm, cls in surf.tracked:
        sq = intersect(surf, cls, cls)
        lines.append(f"  {nm} = {cls.render(surf.basis)}  (self-intersection {sq})")
    k2 = surf.k_squared
    lines.append(f"K = {surf.canonical.render(surf.basis)}")
    lines.append(
        f"K^2 = {k2}  chi = {euler_characteristic_cx(surf)}  b2 = {surf.rank}"
    )
    return "\n".join(lines)


def render_reduction(report: ReductionReport) -> str:
    """Human-readable reduction log."""
    lines = []
    if not report.steps:
        lines.append("already minimal: nothing to contract")
    for name, cls in report.steps:
        lines.append(f"contract {name} (class at contraction: {tuple(cls.coords)})")
    lines.append(f"minimal model: {report.final}")
    return "\n".join(lines)


def run_script(text: str) -> ScriptOutcome:
    """Execute a script and return its outcome.

    The ``minimal-model`` statement replaces the working surface with the
    reduced one, so later statements continue from the minimal model.
    """
    surf: Optional[RationalSurface] = None
    events: List[Tuple[str, object]] = []

    for line_no, raw in enumerate(text.splitlines(), 1):
        stmt = raw.split("#", 1)[0].strip()
        if not stmt:
            continue
        words = stmt.split()
        head = words[0].lower()

        if head == "base":
            if surf is not None:
                raise ScriptError("base is already set", line_no)
            if len(words) == 2 and words[1].lower() == "cp2":
                surf = make_base(BaseSurface.cp2())
            elif len(words) == 3 and words[1].lower() == "hirzebruch":
                try:
                    n = int(words[2])
                except ValueError:
                    raise ScriptError(f"bad Hirzebruch index {words[2]!r}", line_no)
                try:
                    surf = make_base(BaseSurface.hirzebruch(n))
                except ValidationError as e:
                    raise ScriptError(str(e), line_no)
            else:
                raise ScriptError(
                    "expected 'base cp2' or 'base hirzebruch <n>'", line_no
                )
            continue

        if surf is None:
            raise ScriptError("script must start with a base statement", line_no)

        if head == "blowup":
            through = []
            if len(words) > 1:
                if words[1].lower() != "on":
                    raise ScriptError("expected 'blowup' or 'blowup on <line> ...'", line_no)
                through = words[2:]
                if not through:
                    raise ScriptError("'blowup on' needs at least one line name", line_no)
            try:
                surf = blow_up(surf, through)
            except ValidationError as e:
                raise ScriptError(str(e), line_no)
        elif head == "line":
            m = re.match(r"^line\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)$", stmt)
            if not m:
                raise ScriptError("expected 'line <name> = <class expr>'", line_no)
            name, expr = m.group(1), m.group(2)
            if any(nm == name for nm, _ in surf.tracked):
                raise ScriptError(f"line name {name!r} is already tracked", line_no)
            cls = parse_class_expr(expr, surf, line_no)
            surf = RationalSurface(
                surf.base, surf.basis, surf.gram, surf.canonical,
                surf.tracked + ((name, cls),),
            )
        elif head == "blowdown":
            if len(words) != 2:
                raise ScriptError("expected 'blowdown <name>'", line_no)
            try:
                surf = blow_down(surf, words[1])
            except ValidationError as e:
                raise ScriptError(str(e), line_no)
        elif head == "minimal-model":
            if len(words) != 1:
                raise ScriptError("'minimal-model' takes no arguments", line_no)
            report = minimal_model(surf)
            events.append(("reduction", report))
            surf = report.final_surface
        elif head == "report":
            if len(words) != 1:
                raise ScriptError("'report' takes no arguments", line_no)
            events.append(("report", render_report(surf)))
        else:
            raise ScriptError(f"unknown statement {head!r}", line_no)

    if surf is None:
        raise ScriptError("script is empty", max(1, text.count("\n") + 1))
    return ScriptOutcome(surf, events)
