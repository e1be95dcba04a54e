"""Persistent catalog of cap classes and fixture verification.

The catalog is a plain line-oriented text format: diff-able, trivially
parsed, and byte-identical across runs.

    capclass v1 d=5
    cap size=6 key=1,2,4,8,16,32 stab=720 complete=0 parent=- ext=-
    cap size=7 key=1,2,4,7,8,16,32 stab=144 complete=0 parent=1,2,4,8,16,32 ext=7
    ...

Fixture files name reference caps with expected properties:

    fixture c7_1 points=1,2,4,8,16,32,63 stab=5040 complete=0

with `?` for unchecked fields.  Verification recomputes each fixture's
canonical class and compares against the catalog; an expected stabilizer
that cannot divide |GL(d+1,2)| is reported as a presumed-typo mismatch
rather than a failure, so questionable reference values surface without
being silently replaced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .canonical import canonical_key
from .classifier import ClassNode, LevelSet
from .geometry import (Space, format_points, is_cap, parse_points, space,
                       spans)
from .linalg import gl_order

FORMAT_HEADER = "capclass v1"


class ParseError(ValueError):
    """Malformed catalog or fixture text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class CatalogFile:
    d: int
    entries: Tuple[ClassNode, ...]


def catalog_from_levels(d: int, levels: Sequence[LevelSet]) -> CatalogFile:
    entries = tuple(node for level in levels for node in level.nodes)
    return CatalogFile(d, entries)


def levels_from_catalog(cat: CatalogFile) -> List[LevelSet]:
    by_size: Dict[int, List[ClassNode]] = {}
    for node in cat.entries:
        by_size.setdefault(node.size, []).append(node)
    return [LevelSet(size, tuple(sorted(by_size[size], key=lambda n: n.key)))
            for size in sorted(by_size)]


def serialize(cat: CatalogFile) -> str:
    """Catalog text; entries sorted by (size, key), one line per class."""
    lines = [f"{FORMAT_HEADER} d={cat.d}"]
    for node in sorted(cat.entries, key=lambda n: (n.size, n.key)):
        parent = format_points(node.parent_key) if node.parent_key else "-"
        ext = str(node.extension_point) if node.extension_point else "-"
        lines.append(
            f"cap size={node.size} key={format_points(node.key)} "
            f"stab={node.stabilizer_order} complete={int(node.complete)} "
            f"parent={parent} ext={ext}")
    return "\n".join(lines) + "\n"


def _field(parts: Dict[str, str], name: str, lineno: int) -> str:
    if name not in parts:
        raise ParseError(lineno, f"missing field {name}=")
    return parts[name]


def parse(text: str) -> CatalogFile:
    """Parse catalog text back into a CatalogFile."""
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty catalog")
    header = lines[0].split()
    if (len(header) != 3 or " ".join(header[:2]) != FORMAT_HEADER
            or not header[2].startswith("d=")):
        raise ParseError(1, f"bad header {lines[0]!r}")
    try:
        d = int(header[2][2:])
    except ValueError:
        raise ParseError(1, f"bad dimension in header {lines[0]!r}") from None
    sp = space(d)
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        tokens = line.split()
        if tokens[0] != "cap":
            raise ParseError(lineno, f"expected cap line, got {line!r}")
        parts = {}
        for tok in tokens[1:]:
            if "=" not in tok:
                raise ParseError(lineno, f"bad token {tok!r}")
            k, v = tok.split("=", 1)
            parts[k] = v
        try:
            size = int(_field(parts, "size", lineno))
            key = parse_points(sp, _field(parts, "key", lineno))
            stab = int(_field(parts, "stab", lineno))
            complete = _field(parts, "complete", lineno) == "1"
            parent_text = _field(parts, "parent", lineno)
            parent = None if parent_text == "-" else parse_points(sp, parent_text)
            ext_text = _field(parts, "ext", lineno)
            ext = None if ext_text == "-" else int(ext_text)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if key.bit_count() != size:
            raise ParseError(lineno, f"size {size} does not match key")
        entries.append(ClassNode(size, key, stab, complete, parent, ext))
    return CatalogFile(d, tuple(entries))


def table1(cat: CatalogFile) -> List[Tuple[int, int, int]]:
    """(size, n_complete, n_incomplete) rows above the root size."""
    counts: Dict[int, List[int]] = {}
    min_size = min((n.size for n in cat.entries), default=0)
    for node in cat.entries:
        if node.size == min_size:
            continue  # the root class is not part of the size table
        row = counts.setdefault(node.size, [0, 0])
        row[0 if node.complete else 1] += 1
    return [(size, counts[size][0], counts[size][1])
            for size in sorted(counts) if counts[size] != [0, 0]]


def format_table1(rows: Sequence[Tuple[int, int, int]]) -> str:
    lines = ["size  complete  incomplete"]
    for size, ncomp, nincomp in rows:
        lines.append(f"{size:4d}  {ncomp:8d}  {nincomp:10d}")
    return "\n".join(lines) + "\n"


# -- fixtures ----------------------------------------------------------------

MATCH = "match"
MISMATCH_NONDIVISOR = "mismatch-nondivisor"
MISMATCH = "mismatch-investigate"
INVALID = "invalid"
MISSING = "missing-from-catalog"


@dataclass(frozen=True)
class Fixture:
    name: str
    points: int
    expected_stab: Optional[int]
    expected_complete: Optional[bool]


@dataclass(frozen=True)
class FixtureResult:
    name: str
    status: str
    detail: str

    @property
    def passed(self) -> bool:
        return self.status in (MATCH, MISMATCH_NONDIVISOR)


def parse_fixtures(sp: Space, text: str) -> List[Fixture]:
    fixtures = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] != "fixture" or len(tokens) < 2:
            raise ParseError(lineno, f"expected fixture line, got {line!r}")
        name = tokens[1]
        parts = {}
        for tok in tokens[2:]:
            if "=" not in tok:
                raise ParseError(lineno, f"bad token {tok!r}")
            k, v = tok.split("=", 1)
            parts[k] = v
        try:
            points = parse_points(sp, _field(parts, "points", lineno))
            stab_text = _field(parts, "stab", lineno)
            stab = None if stab_text == "?" else int(stab_text)
            comp_text = _field(parts, "complete", lineno)
            complete = None if comp_text == "?" else comp_text == "1"
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        fixtures.append(Fixture(name, points, stab, complete))
    return fixtures


def verify_fixtures(cat: CatalogFile,
                    fixtures: Iterable[Fixture]) -> List[FixtureResult]:
    """Check each fixture against the catalog.

    For every fixture the canonical class is recomputed and looked up; the
    computed stabilizer order and completeness are compared with the
    expectations.  Expected orders that do not divide |GL(d+1,2)| cannot be
    subgroup orders, so such mismatches are classed as presumed typos.
    """
    sp = space(cat.d)
    group_order = gl_order(cat.d)
    by_key = {node.key: node for node in cat.entries}
    results = []
    for fx in fixtures:
        if not is_cap(sp, fx.points):
            results.append(FixtureResult(fx.name, INVALID, "not a cap"))
            continue
        if not spans(sp, fx.points):
            results.append(FixtureResult(
                fx.name, INVALID, "does not span the space"))
            continue
        key = canonical_key(sp, fx.points)
        node = by_key.get(key)
        if node is None:
            results.append(FixtureResult(
                fx.name, MISSING, f"class {format_points(key)} not in catalog"))
            continue
        problems = []
        typo_only = True
        if fx.expected_stab is not None and fx.expected_stab != node.stabilizer_order:
            nondivisor = group_order % fx.expected_stab != 0
            problems.append(
                f"stab expected {fx.expected_stab} computed {node.stabilizer_order}"
                + (" (expected value does not divide the group order;"
                   " presumed typo)" if nondivisor else ""))
            typo_only = typo_only and nondivisor
        if fx.expected_complete is not None and fx.expected_complete != node.complete:
            problems.append(
                f"complete expected {int(fx.expected_complete)} "
                f"computed {int(node.complete)}")
            typo_only = False
        if not problems:
            results.append(FixtureResult(
                fx.name, MATCH,
                f"stab={node.stabilizer_order} complete={int(node.complete)}"))
        else:
            status = MISMATCH_NONDIVISOR if typo_only else MISMATCH
            results.append(FixtureResult(fx.name, status, "; ".join(problems)))
    return results


def format_report(results: Sequence[FixtureResult]) -> str:
    lines = []
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"{flag} {r.name} [{r.status}] {r.detail}")
    n_bad = sum(1 for r in results if not r.passed)
    n_typo = sum(1 for r in results if r.status == MISMATCH_NONDIVISOR)
    lines.append(
        f"{len(results)} fixtures: {len(results) - n_bad - n_typo} matched, "
        f"{n_typo} presumed-typo discrepancies, {n_bad} failures")
    return "\n".join(lines) + "\n"


def report_ok(results: Sequence[FixtureResult]) -> bool:
    """True iff no investigate-class problems (presumed typos are allowed)."""
    return all(r.passed for r in results)
