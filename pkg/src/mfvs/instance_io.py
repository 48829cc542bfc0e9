"""Instance text format, parsing, serialization and instance generators.

Format (UTF-8, one record per line, blank lines ignored):

    c <comment>
    p mfvs <n> <num_edges> <num_arcs>     exactly once, before any record
    e <u> <v>                             undirected edge, u = v is a loop
    a <u> <v>                             arc from u to v
    s <u>                                 optional marked vertex

Vertex indices are 1-based.  Duplicate ``e``/``a`` lines produce parallel
edges/arcs.
"""

from __future__ import annotations

import random

from .graph import MixedGraph, VertexId

FAMILIES = ("random", "planted", "figure1")


class ParseError(ValueError):
    """Malformed instance text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_instance(text: str) -> tuple[MixedGraph, frozenset[VertexId] | None]:
    """Parse instance text into a graph and the optional marked set."""
    n = num_edges = num_arcs = 0
    header_line: int | None = None
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    marked: set[int] = set()
    saw_marked = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if header_line is not None:
                raise ParseError("duplicate header", line_no)
            if len(tokens) != 5 or tokens[1] != "mfvs":
                raise ParseError("header must be 'p mfvs <n> <edges> <arcs>'", line_no)
            n, num_edges, num_arcs = _ints(tokens[2:], line_no)
            if n < 0 or num_edges < 0 or num_arcs < 0:
                raise ParseError("negative counts in header", line_no)
            header_line = line_no
            continue
        if header_line is None:
            raise ParseError("record before header", line_no)
        if kind == "e":
            u, v = _endpoint_pair(tokens, n, line_no)
            edges.append((u, v))
            if len(edges) > num_edges:
                raise ParseError("more edge records than the header declares", line_no)
        elif kind == "a":
            u, v = _endpoint_pair(tokens, n, line_no)
            arcs.append((u, v))
            if len(arcs) > num_arcs:
                raise ParseError("more arc records than the header declares", line_no)
        elif kind == "s":
            if len(tokens) != 2:
                raise ParseError("'s' record takes one vertex", line_no)
            (u,) = _ints(tokens[1:], line_no)
            if not 1 <= u <= n:
                raise ParseError(f"vertex {u} out of range 1..{n}", line_no)
            marked.add(u)
            saw_marked = True
        else:
            raise ParseError(f"unknown record type {kind!r}", line_no)

    if header_line is None:
        raise ParseError("missing header", 0)
    if len(edges) != num_edges:
        raise ParseError(
            f"header declares {num_edges} edges, found {len(edges)}", header_line
        )
    if len(arcs) != num_arcs:
        raise ParseError(
            f"header declares {num_arcs} arcs, found {len(arcs)}", header_line
        )
    g = MixedGraph.build(n, edges, arcs)
    return g, frozenset(marked) if saw_marked else None


def serialize_instance(
    g: MixedGraph, marked: frozenset[VertexId] | None = None
) -> str:
    """Instance text for the graph; vertices are relabelled densely (sorted by
    id) and records keep edge/arc id order, so a reparse reproduces the graph
    up to that relabelling."""
    label = {v: i for i, v in enumerate(sorted(g.vertices), start=1)}
    lines = [f"p mfvs {len(g.vertices)} {len(g.edges)} {len(g.arcs)}"]
    for e in sorted(g.edges):
        u, v = g.edges[e]
        lines.append(f"e {label[u]} {label[v]}")
    for a in sorted(g.arcs):
        u, v = g.arcs[a]
        lines.append(f"a {label[u]} {label[v]}")
    if marked is not None:
        for u in sorted(marked):
            lines.append(f"s {label[u]}")
    return "\n".join(lines) + "\n"


def generate_instance(
    family: str,
    n: int,
    num_edges: int,
    num_arcs: int,
    planted_size: int | None = None,
    seed: int = 0,
) -> str:
    """Deterministic instance text for one of the generator families.

    random   -- uniform endpoint pairs for edges and arcs.
    planted  -- every edge touches the planted set and non-planted arcs only
                run forward along a hidden order, so the planted set (emitted
                as ``s`` records) is guaranteed to be a feedback vertex set.
    figure1  -- two hubs joined by n-2 internal length-2 undirected paths,
                optionally decorated with forward arcs along the internals;
                many undirected hub-to-hub paths, none reducible.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 0 or num_edges < 0 or num_arcs < 0:
        raise ValueError("counts must be nonnegative")
    rng = random.Random(seed)
    comment = f"c family={family} n={n} edges={num_edges} arcs={num_arcs} seed={seed}"

    if family == "random":
        if planted_size is not None:
            raise ValueError("planted size only applies to the planted family")
        if n == 0 and (num_edges or num_arcs):
            raise ValueError("records need vertices")
        edges = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(num_edges)]
        arcs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(num_arcs)]
        return _render(comment, n, edges, arcs, None)

    if family == "planted":
        if planted_size is None:
            raise ValueError("the planted family needs a planted size")
        if not 0 <= planted_size <= n:
            raise ValueError("planted size out of range")
        if planted_size == 0 and num_edges > 0:
            raise ValueError("edges need a nonempty planted set")
        planted = sorted(rng.sample(range(1, n + 1), planted_size))
        rest = [v for v in range(1, n + 1) if v not in set(planted)]
        rng.shuffle(rest)
        rank = {v: i for i, v in enumerate(rest)}
        edges = []
        for _ in range(num_edges):
            u = rng.randint(1, n)
            v = rng.choice(planted)
            edges.append((u, v))
        arcs = []
        for _ in range(num_arcs):
            u, v = rng.randint(1, n), rng.randint(1, n)
            if u not in rank or v not in rank:
                arcs.append((u, v))
            elif u == v:
                arcs.append((u, rng.choice(planted) if planted else u))
            else:
                arcs.append((u, v) if rank[u] < rank[v] else (v, u))
        return _render(comment, n, edges, arcs, frozenset(planted))

    m = n - 2
    if m < 1:
        raise ValueError("figure1 needs at least 3 vertices")
    if num_edges != 2 * m:
        raise ValueError(f"figure1 on {n} vertices has exactly {2 * m} edges")
    if num_arcs > m - 1:
        raise ValueError(f"figure1 on {n} vertices allows at most {m - 1} arcs")
    if planted_size is not None:
        raise ValueError("planted size only applies to the planted family")
    hubs = (1, 2)
    internals = list(range(3, n + 1))
    edges = []
    for x in internals:
        edges.append((hubs[0], x))
        edges.append((x, hubs[1]))
    arcs = [(internals[i], internals[i + 1]) for i in range(num_arcs)]
    return _render(comment, n, edges, arcs, frozenset(hubs))


def _render(
    comment: str,
    n: int,
    edges: list[tuple[int, int]],
    arcs: list[tuple[int, int]],
    marked: frozenset[int] | None,
) -> str:
    lines = [comment, f"p mfvs {n} {len(edges)} {len(arcs)}"]
    lines += [f"e {u} {v}" for u, v in edges]
    lines += [f"a {u} {v}" for u, v in arcs]
    if marked is not None:
        lines += [f"s {u}" for u in sorted(marked)]
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], line_no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {tokens!r}", line_no) from None


def _endpoint_pair(tokens: list[str], n: int, line_no: int) -> tuple[int, int]:
    if len(tokens) != 3:
        raise ParseError("endpoint records take two vertices", line_no)
    u, v = _ints(tokens[1:], line_no)
    for x in (u, v):
        if not 1 <= x <= n:
            raise ParseError(f"vertex {x} out of range 1..{n}", line_no)
    return u, v
