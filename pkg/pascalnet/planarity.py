"""
Planarity Module
Exact planarity decision by incremental path addition over faces
(Demoucron-Malgrange-Pertuiset), run on each biconnected block
"""

import sys
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .graph import Graph

Edge = Tuple[int, int]


def _debug(verbose: bool, message: str) -> None:
    if verbose:
        print(f"[Planarity] {message}", file=sys.stderr)


def biconnected_components(g: Graph) -> List[List[Edge]]:
    """
    Edge sets of the biconnected blocks (bridges form one-edge blocks).

    Iterative Hopcroft-Tarjan: a DFS keeps an edge stack, and a block is
    popped whenever a child's lowpoint does not climb above its parent.
    """
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    blocks: List[List[Edge]] = []
    edge_stack: List[Edge] = []
    clock = 0

    for root in g.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, 0, iter(g.neighbors(root)))]
        while stack:
            v, parent, pending = stack[-1]
            descended = False
            for w in pending:
                if w not in disc:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if parent:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        edge = edge_stack.pop()
                        block.append(edge)
                        if edge == (parent, v):
                            break
                    blocks.append(block)
    return blocks


@dataclass
class _Fragment:
    attachments: FrozenSet[int]
    path: List[int]


def _walk(face: List[int], start: int, stop: int) -> List[int]:
    """Face vertices from index start to index stop inclusive, cyclically"""
    result = [face[start]]
    i = start
    while i != stop:
        i = (i + 1) % len(face)
        result.append(face[i])
    return result


def _split_face(face: List[int], path: List[int]) -> Tuple[List[int], List[int]]:
    a, b = path[0], path[-1]
    interior = path[1:-1]
    ia, ib = face.index(a), face.index(b)
    first = _walk(face, ia, ib) + interior[::-1]
    second = _walk(face, ib, ia) + interior
    return first, second


def _edge_key(u: int, v: int) -> FrozenSet[int]:
    return frozenset((u, v))


def _initial_cycle(adj: Dict[int, Set[int]], a: int, b: int) -> List[int]:
    # shortest b -> a path that avoids the edge (a, b) itself
    parent: Dict[int, Optional[int]] = {b: None}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if {x, y} == {a, b} or y in parent:
                continue
            parent[y] = x
            if y == a:
                cycle = [a]
                while cycle[-1] != b:
                    cycle.append(parent[cycle[-1]])
                return cycle
            queue.append(y)
    raise ValueError(f"edge ({a}, {b}) lies on no cycle")


def _fragments(adj: Dict[int, Set[int]], placed: Set[int],
               placed_edges: Set[FrozenSet[int]]) -> List[_Fragment]:
    fragments = []

    # chords: unplaced edges between two placed vertices
    for u in sorted(placed):
        for v in sorted(adj[u]):
            if u < v and v in placed and _edge_key(u, v) not in placed_edges:
                fragments.append(_Fragment(frozenset((u, v)), [u, v]))

    # connected pieces of unplaced vertices, with their attachment edges
    seen: Set[int] = set()
    for start in sorted(adj):
        if start in placed or start in seen:
            continue
        component = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in placed and y not in component:
                    component.add(y)
                    queue.append(y)
        seen |= component
        attachments = frozenset(y for x in component for y in adj[x] if y in placed)
        fragments.append(_Fragment(attachments, _fragment_path(adj, component, attachments)))
    return fragments


def _fragment_path(adj: Dict[int, Set[int]], component: Set[int],
                   attachments: FrozenSet[int]) -> List[int]:
    """A path through the component joining two distinct attachments"""
    a = min(attachments)
    parent: Dict[int, int] = {}
    queue = deque()
    for c in sorted(component):
        if a in adj[c]:
            parent[c] = a
            queue.append(c)
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in attachments and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if y in component and y not in parent:
                parent[y] = x
                queue.append(y)
    raise ValueError("fragment has fewer than two attachments")


def _block_is_planar(block: List[Edge], verbose: bool = False) -> bool:
    adj: Dict[int, Set[int]] = {}
    for u, v in block:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    vertex_count, edge_total = len(adj), len(block)
    if vertex_count <= 4:
        return True
    if edge_total > 3 * vertex_count - 6:
        _debug(verbose, f"block of {vertex_count} vertices has {edge_total} edges > 3n-6")
        return False

    a, b = min((min(e), max(e)) for e in block)
    cycle = _initial_cycle(adj, a, b)
    placed = set(cycle)
    placed_edges = {_edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]

    while len(placed_edges) < edge_total:
        chosen = None
        for fragment in _fragments(adj, placed, placed_edges):
            admissible = [i for i, face in enumerate(faces) if fragment.attachments <= set(face)]
            if not admissible:
                _debug(verbose, f"fragment attached at {sorted(fragment.attachments)} fits no face")
                return False
            if len(admissible) == 1:
                chosen = (fragment, admissible[0])
                break
            if chosen is None:
                chosen = (fragment, admissible[0])

        fragment, index = chosen
        first, second = _split_face(faces[index], fragment.path)
        faces[index] = first
        faces.append(second)
        placed.update(fragment.path)
        for u, v in zip(fragment.path, fragment.path[1:]):
            placed_edges.add(_edge_key(u, v))
    return True


def is_planar(g: Graph, verbose: bool = False) -> bool:
    """
    Exact planarity test.

    Graphs with more than 3n - 6 edges are rejected at once; otherwise every
    biconnected block is embedded face by face, one path at a time. The
    graph is planar iff every block is.

    Args:
        g: Graph to test
        verbose: Print debug information to stderr
    """
    n, m = g.vertex_count, g.edge_count
    if n >= 3 and m > 3 * n - 6:
        _debug(verbose, f"{m} edges > 3n-6 = {3 * n - 6}; not planar")
        return False
    blocks = biconnected_components(g)
    _debug(verbose, f"{len(blocks)} biconnected block(s)")
    return all(_block_is_planar(block, verbose=verbose) for block in blocks)
