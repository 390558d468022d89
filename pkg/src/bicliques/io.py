"""Reading and writing graphs as edge-list or DIMACS text."""

from __future__ import annotations

import sys
from typing import IO, Iterable

from .graph import Graph, GraphError


class ParseError(ValueError):
    """Input file rejected; the message carries the 1-based line number."""


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse "u v" lines with 0-based decimal ids.

    Lines starting with '#' are ignored, as are blank lines.  An optional
    header "n <count>" fixes the vertex count; otherwise it is inferred as
    max id + 1.
    """
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    declared_n = None
    max_id = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared_n is not None:
                raise ParseError(f"line {lineno}: duplicate header line")
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: header must be 'n <count>'")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {tokens[1]!r}")
            if declared_n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}")
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop ({u},{v})")
        edges.append((u, v))
        edge_lines.append(lineno)
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
    n = declared_n if declared_n is not None else max_id + 1
    if declared_n is not None and max_id >= declared_n:
        bad = next(i for (a, b), i in zip(edges, edge_lines) if a >= n or b >= n)
        raise ParseError(f"line {bad}: vertex id exceeds declared count {n}")
    return Graph.from_edge_list(edges, n)


def parse_dimacs(lines: Iterable[str]) -> Graph:
    """Parse DIMACS format: "p edge n m" then "e u v" with 1-based ids."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(tokens[2])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {tokens[2]!r}")
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex id")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex id outside [1,{n}]")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop ({u},{v})")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("line 1: missing 'p edge' problem line")
    return Graph.from_edge_list(edges, n)


def read_graph(path: str, fmt: str = "edges") -> Graph:
    """Load a graph from a file in the given format ("edges" or "dimacs")."""
    with open(path, "r", encoding="utf-8") as fh:
        if fmt == "edges":
            return parse_edge_list(fh)
        if fmt == "dimacs":
            return parse_dimacs(fh)
        raise ValueError(f"unknown format {fmt!r}")


def write_edge_list(g: Graph, out: IO[str] | None = None, header: bool = True) -> None:
    """Write a graph as edge-list text (header line first, edges ascending)."""
    fh = out if out is not None else sys.stdout
    if header:
        fh.write(f"n {g.n}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


__all__ = [
    "ParseError",
    "parse_edge_list",
    "parse_dimacs",
    "read_graph",
    "write_edge_list",
]
