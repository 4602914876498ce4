"""Text formats: graphs, representations, reduction instances, orderings.

All formats are line oriented; '#' starts a full-line comment and blank
lines are skipped.  Parse failures carry 1-based line and column of the
offending token.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .generate import NonBetweennessInstance, TriangleRepresentation
from .graph import Graph

_TOKEN = re.compile(r"\S+")


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class _Lines:
    """Token rows with positions; comments and blank lines dropped."""

    def __init__(self, text: str):
        self.rows: list[tuple[int, list[tuple[int, str]]]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            if raw.lstrip().startswith("#"):
                continue
            toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(raw)]
            if toks:
                self.rows.append((lineno, toks))
        self.at = 0

    def next_row(self, what: str, count: int) -> tuple[int, list[tuple[int, str]]]:
        if self.at >= len(self.rows):
            last = self.rows[-1][0] if self.rows else 1
            raise ParseError(f"missing {what}", last, 1)
        lineno, toks = self.rows[self.at]
        self.at += 1
        if len(toks) != count:
            col = toks[count][0] if len(toks) > count else toks[-1][0] + len(toks[-1][1])
            raise ParseError(f"expected {count} fields for {what}, got {len(toks)}", lineno, col)
        return lineno, toks

    def expect_end(self) -> None:
        if self.at < len(self.rows):
            lineno, toks = self.rows[self.at]
            raise ParseError("unexpected trailing data", lineno, toks[0][0])


def _to_int(tok: tuple[int, str], lineno: int, what: str) -> int:
    col, s = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {s!r}", lineno, col) from None


def _to_rational(tok: tuple[int, str], lineno: int, what: str) -> Fraction:
    col, s = tok
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} is not a rational number: {s!r}", lineno, col) from None


def read_graph(text: str) -> Graph:
    """Parse 'n m' followed by m edge lines 'u v' (0-indexed)."""
    lines = _Lines(text)
    lineno, toks = lines.next_row("graph header 'n m'", 2)
    n = _to_int(toks[0], lineno, "vertex count")
    m = _to_int(toks[1], lineno, "edge count")
    if n < 0 or m < 0:
        raise ParseError("counts must be nonnegative", lineno, toks[0][0])
    masks = [0] * n
    for _ in range(m):
        lineno, toks = lines.next_row("edge 'u v'", 2)
        u = _to_int(toks[0], lineno, "endpoint")
        v = _to_int(toks[1], lineno, "endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", lineno, toks[0][0])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, toks[0][0])
        if masks[u] >> v & 1:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno, toks[0][0])
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    lines.expect_end()
    return Graph(n, masks, _validate=False)


def write_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def format_rational(x: Fraction) -> str:
    """Exact decimal rendering; the denominator must divide a power of 10."""
    den = x.denominator
    k = 0
    while den % 2 == 0:
        den //= 2
        k += 1
    f = 0
    while den % 5 == 0:
        den //= 5
        f += 1
    if den != 1:
        raise ValueError(f"{x} has no finite decimal representation")
    digits = max(k, f)
    scaled = x.numerator * 10**digits // x.denominator
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    whole, frac = s[:-digits], s[-digits:]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")


def read_representation(text: str) -> TriangleRepresentation:
    """Parse 'n' followed by n lines 'apex l r' of decimal rationals."""
    lines = _Lines(text)
    lineno, toks = lines.next_row("representation header 'n'", 1)
    n = _to_int(toks[0], lineno, "triangle count")
    if n < 0:
        raise ParseError("triangle count must be nonnegative", lineno, toks[0][0])
    apexes = []
    bases = []
    for _ in range(n):
        lineno, toks = lines.next_row("triangle 'apex l r'", 3)
        apex = _to_rational(toks[0], lineno, "apex")
        l = _to_rational(toks[1], lineno, "base left end")
        r = _to_rational(toks[2], lineno, "base right end")
        if l > r:
            raise ParseError(f"base interval [{l}, {r}] is inverted", lineno, toks[1][0])
        apexes.append(apex)
        bases.append((l, r))
    lines.expect_end()
    return TriangleRepresentation(tuple(apexes), tuple(bases))


def write_representation(rep: TriangleRepresentation) -> str:
    out = [str(rep.n)]
    for apex, (l, r) in zip(rep.apexes, rep.bases):
        out.append(f"{format_rational(apex)} {format_rational(l)} {format_rational(r)}")
    return "\n".join(out) + "\n"


def read_nonbetweenness(text: str) -> NonBetweennessInstance:
    """Parse '|A| |C|' followed by |C| lines 'i j k' (1-indexed)."""
    lines = _Lines(text)
    lineno, toks = lines.next_row("instance header '|A| |C|'", 2)
    size = _to_int(toks[0], lineno, "ground-set size")
    count = _to_int(toks[1], lineno, "triple count")
    if size < 0 or count < 0:
        raise ParseError("counts must be nonnegative", lineno, toks[0][0])
    triples = []
    for _ in range(count):
        lineno, toks = lines.next_row("triple 'i j k'", 3)
        vals = [_to_int(t, lineno, "element index") for t in toks]
        if any(not 1 <= x <= size for x in vals):
            raise ParseError(f"triple {tuple(vals)} out of range (1-indexed)", lineno, toks[0][0])
        i, j, k = (x - 1 for x in vals)
        if len({i, j, k}) != 3:
            raise ParseError(f"triple {tuple(vals)} has repeated elements", lineno, toks[0][0])
        triples.append((i, j, k))
    lines.expect_end()
    return NonBetweennessInstance(size, tuple(triples))


def write_nonbetweenness(inst: NonBetweennessInstance) -> str:
    out = [f"{inst.size} {len(inst.triples)}"]
    out.extend(f"{i + 1} {j + 1} {k + 1}" for i, j, k in inst.triples)
    return "\n".join(out) + "\n"


def read_ordering(text: str) -> list[int]:
    """Whitespace-separated vertex labels, any line layout."""
    lines = _Lines(text)
    out = []
    for lineno, toks in lines.rows:
        for tok in toks:
            out.append(_to_int(tok, lineno, "vertex"))
    return out
