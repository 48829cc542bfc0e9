"""Shared test helpers: random instance builders and independent brute-force
checkers.  Everything here is deliberately naive -- these are the referees,
not the players."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from mfvs.backbone import build_backbone
from mfvs.disjoint import _has_loop_at, contract_uncut_paths
from mfvs.fvs_umc import FvsUmcInstance, preprocess_fvs_umc
from mfvs.graph import MixedGraph
from mfvs.skew import SkewInstance

# ----------------------------------------------------------------------
# random instances


def rand_mixed_graph(
    rng: random.Random, n_lo: int = 1, n_hi: int = 10, links_hi: int = 18
) -> MixedGraph:
    n = rng.randint(n_lo, n_hi)
    total = rng.randint(0, links_hi)
    ne = rng.randint(0, total)
    edges = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(ne)]
    arcs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(total - ne)]
    return MixedGraph.build(n, edges, arcs)


def rand_graph_with_fvs(
    rng: random.Random,
    n_lo: int = 1,
    n_hi: int = 10,
    links_hi: int = 16,
    s_cap: int = 4,
) -> tuple[MixedGraph, frozenset[int]]:
    """A random mixed graph plus a random feedback vertex set of size <= s_cap
    (at least 1, sometimes padded beyond the minimum)."""
    while True:
        g = rand_mixed_graph(rng, n_lo, n_hi, links_hi)
        s: set[int] = set()
        ok = True
        while not g.is_fvs(s):
            pool = sorted(g.vertices - s)
            if not pool or len(s) >= s_cap:
                ok = False
                break
            s.add(rng.choice(pool))
        if not ok:
            continue
        pool = sorted(g.vertices - s)
        extra = rng.randint(0, max(0, min(s_cap - len(s), len(pool))))
        if extra:
            s.update(rng.sample(pool, extra))
        if 1 <= len(s) <= s_cap:
            return g, frozenset(s)


def rand_skew_instance(
    rng: random.Random, n_hi: int = 12, l_hi: int = 3, k_hi: int = 4
) -> SkewInstance:
    n = rng.randint(2, n_hi)
    l = rng.randint(1, max(1, min(l_hi, n // 2)))
    terms = rng.sample(range(1, n + 1), 2 * l)
    sources, sinks = tuple(terms[:l]), tuple(terms[l:])
    arcs = []
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randint(1, n), rng.randint(1, n)
        if v in sources or u in sinks:
            continue  # keep sources in-degree 0 and sinks out-degree 0
        arcs.append((u, v))
    g = MixedGraph.build(n, [], arcs)
    return SkewInstance(g, sources, sinks, rng.randint(0, k_hi))


def rand_preprocessed_instance(
    rng: random.Random, n_hi: int = 9, s_cap: int = 3, k_hi: int = 3
) -> FvsUmcInstance:
    """A random feasible preprocessing outcome: no short cycles, no edges in
    the marked set, no shared edge-neighbours."""
    while True:
        g, s = rand_graph_with_fvs(rng, n_lo=2, n_hi=n_hi, links_hi=14, s_cap=s_cap)
        outcome = preprocess_fvs_umc(FvsUmcInstance(g, s, rng.randint(1, k_hi)))
        if not outcome.infeasible:
            assert outcome.reduced is not None
            return outcome.reduced


# ----------------------------------------------------------------------
# brute-force referees


def brute_has_cycle(g: MixedGraph) -> bool:
    """Cycle detection by raw definition: loops, opposite-direction link
    pairs, then every vertex sequence of length >= 3."""
    if any(u == v for u, v in g.edges.values()):
        return True
    if any(u == v for u, v in g.arcs.values()):
        return True
    usable: dict[tuple[int, int], set[tuple[str, int]]] = {}
    for eid, (u, v) in g.edges.items():
        usable.setdefault((u, v), set()).add(("e", eid))
        usable.setdefault((v, u), set()).add(("e", eid))
    for aid, (u, v) in g.arcs.items():
        usable.setdefault((u, v), set()).add(("a", aid))
    vs = sorted(g.vertices)
    for u, v in combinations(vs, 2):
        fwd = usable.get((u, v), set())
        bwd = usable.get((v, u), set())
        if any(a != b for a in fwd for b in bwd):
            return True
    for length in range(3, len(vs) + 1):
        for subset in combinations(vs, length):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                seq = (first,) + perm
                if all(
                    usable.get((seq[i], seq[(i + 1) % length])) for i in range(length)
                ):
                    return True
    return False


def all_simple_paths(g: MixedGraph, start: int, goal: int) -> list[tuple]:
    """Every path from start to goal (distinct vertices), as tuples of
    ('e'|'a', id) steps.  Requires start != goal."""
    assert start != goal
    moves: dict[int, list[tuple[str, int, int]]] = {}
    for eid, (u, v) in g.edges.items():
        moves.setdefault(u, []).append(("e", eid, v))
        if u != v:
            moves.setdefault(v, []).append(("e", eid, u))
    for aid, (u, v) in g.arcs.items():
        moves.setdefault(u, []).append(("a", aid, v))
    out: list[tuple] = []

    def dfs(cur: int, visited: set[int], steps: list) -> None:
        for kind, lid, nxt in moves.get(cur, ()):
            if nxt == goal:
                out.append(tuple(steps + [(kind, lid)]))
            elif nxt not in visited:
                visited.add(nxt)
                steps.append((kind, lid))
                dfs(nxt, visited, steps)
                steps.pop()
                visited.remove(nxt)

    dfs(start, {start}, [])
    return out


def brute_connection_paths(g: MixedGraph, terminals: frozenset[int]) -> set[frozenset[int]]:
    """Edge-id sets of all undirected paths (or cycles) whose ends are
    terminals and whose interior avoids them."""
    moves: dict[int, list[tuple[int, int]]] = {}
    for eid, (u, v) in g.edges.items():
        moves.setdefault(u, []).append((eid, v))
        if u != v:
            moves.setdefault(v, []).append((eid, u))
    found: set[frozenset[int]] = set()

    def dfs(cur: int, visited: frozenset[int], used: frozenset[int]) -> None:
        for eid, nxt in moves.get(cur, ()):
            if eid in used:
                continue
            if nxt in terminals:
                found.add(used | {eid})
            elif nxt not in visited:
                dfs(nxt, visited | {nxt}, used | {eid})

    for t in sorted(terminals):
        dfs(t, frozenset({t}), frozenset())
    return found


def assert_path_shape(g: MixedGraph, edge_ids: frozenset[int], ends: tuple[int, int]) -> None:
    """The edge set must induce one simple path between the ends (one cycle
    through them when they coincide) in the edge-only part of g."""
    degree: dict[int, int] = {}
    parent: dict[int, int] = {}
    for eid in edge_ids:
        u, v = g.edges[eid]
        for x in (u, v):
            degree[x] = degree.get(x, 0) + 1
            parent.setdefault(x, x)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in edge_ids:
        u, v = g.edges[eid]
        parent[find(u)] = find(v)
    roots = {find(x) for x in degree}
    assert len(roots) == 1, "connection path is disconnected"
    if ends[0] == ends[1]:
        assert all(d == 2 for d in degree.values()), "cycle vertices must have degree 2"
        assert ends[0] in degree
    else:
        for x, d in degree.items():
            assert d == (1 if x in ends else 2), f"vertex {x} has degree {d}"


def derived_guess_gates(
    g: MixedGraph, s: frozenset[int], witness: frozenset[int]
) -> list[str]:
    """Replay the backbone guess implied by a known disjoint solution through
    every filter of the branching algorithm; returns the names of failed
    gates (empty means the guess survives, as completeness demands)."""
    k = len(s) - 1
    bone = build_backbone(g, s)
    fails: list[str] = []
    if len(bone.branch_vertices) > 3 * k:
        fails.append("branch-count")
    picked = witness & bone.branch_vertices
    residual = k - len(picked)
    trimmed = bone.graph.delete_vertices(picked)
    if len(trimmed.edges) > 3 * k + residual:
        fails.append("edge-count")
    cut_edges: set[int] = set()
    for e in trimmed.edges:
        ends = set(trimmed.edges[e])
        interior = {v for eid in bone.paths[e] for v in g.edges[eid]} - ends
        if interior & witness:
            cut_edges.add(e)
    if len(cut_edges) > residual:
        fails.append("cut-count")
    if trimmed.delete_edges(cut_edges).has_cycle():
        fails.append("acyclic")
    spared: set[int] = set()
    for e in trimmed.edges:
        if e not in cut_edges:
            spared |= bone.paths[e]
    contracted = contract_uncut_paths(g, picked, s, spared)
    if _has_loop_at(contracted.graph, contracted.s):
        fails.append("terminal-loop")
    rest = witness - picked
    if rest & contracted.s:
        fails.append("witness-merged-away")
    elif not (
        len(rest) <= residual
        and contracted.graph.is_fvs(rest)
        and contracted.graph.is_umc(contracted.s, rest)
    ):
        fails.append("inner-solution")
    return fails
