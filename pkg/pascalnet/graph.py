"""
Graph Analysis Module
Adjacency view of Pascal graphs with breadth-first search primitives and
one executable check per connectivity property
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .errors import DomainError, UnreachableError
from .matrix import PascalMatrix
from .triangle import popcount

INFINITY = math.inf

Distance = Union[int, float]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 1-based vertex numbers whose bits are set, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph over vertices 1..order.

    Adjacency is bit-packed: bit (u - 1) of masks[v - 1] is set when u and v
    are adjacent. Vertices removed by a failure stay in the index space but
    drop out of `alive`, so survivors keep their original numbers.
    """
    order: int
    masks: Tuple[int, ...]
    alive: int

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """Build an arbitrary graph from an edge list"""
        if order < 1:
            raise DomainError(f"graph order must be >= 1, got {order}")
        masks = [0] * order
        for u, v in edges:
            if not (1 <= u <= order and 1 <= v <= order):
                raise DomainError(f"edge ({u}, {v}) outside vertices 1..{order}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return cls(order=order, masks=tuple(masks), alive=(1 << order) - 1)

    def vertices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.alive))

    @property
    def vertex_count(self) -> int:
        return popcount(self.alive)

    def is_alive(self, v: int) -> bool:
        return 1 <= v <= self.order and bool((self.alive >> (v - 1)) & 1)

    def require_alive(self, v: int) -> None:
        if not 1 <= v <= self.order:
            raise DomainError(f"vertex {v} outside 1..{self.order}")
        if not self.is_alive(v):
            raise DomainError(f"vertex {v} has failed")

    def mask(self, v: int) -> int:
        return self.masks[v - 1]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self.require_alive(v)
        return tuple(iter_bits(self.masks[v - 1]))

    def degree(self, v: int) -> int:
        self.require_alive(v)
        return popcount(self.masks[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        if not (self.is_alive(u) and self.is_alive(v)):
            return False
        return bool((self.masks[u - 1] >> (v - 1)) & 1)

    @property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """Sorted neighbor tuple per live vertex"""
        return {v: self.neighbors(v) for v in self.vertices()}

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order"""
        result = []
        for u in self.vertices():
            for v in iter_bits(self.masks[u - 1] >> u):
                result.append((u, u + v))
        return result

    @property
    def edge_count(self) -> int:
        return sum(popcount(self.masks[u - 1] >> u) for u in self.vertices())

    def without(self, failed: Iterable[int]) -> 'Graph':
        """Induced subgraph on the vertices not listed in failed"""
        dead = vertex_mask(failed)
        alive = self.alive & ~dead
        masks = tuple(m & alive if (alive >> i) & 1 else 0 for i, m in enumerate(self.masks))
        return Graph(order=self.order, masks=masks, alive=alive)


def from_matrix(pm: PascalMatrix) -> Graph:
    """The Pascal graph PG(n) whose adjacency matrix is pm"""
    return Graph(order=pm.order, masks=pm.rows, alive=(1 << pm.order) - 1)


def bfs_levels(g: Graph, src: int) -> List[int]:
    """Vertex masks of the BFS levels from src; level 0 is {src}"""
    g.require_alive(src)
    seen = 1 << (src - 1)
    levels = [seen]
    frontier = seen
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= g.masks[v - 1]
        frontier = reached & g.alive & ~seen
        if frontier:
            levels.append(frontier)
            seen |= frontier
    return levels


def bfs_distances(g: Graph, src: int) -> List[Distance]:
    """
    Shortest hop counts from src.

    Returns:
        List of length g.order whose entry v - 1 is the distance to vertex v;
        INFINITY for unreachable or failed vertices
    """
    distances: List[Distance] = [INFINITY] * g.order
    for hops, level in enumerate(bfs_levels(g, src)):
        for v in iter_bits(level):
            distances[v - 1] = hops
    return distances


def shortest_path(g: Graph, src: int, dst: int) -> List[int]:
    """
    A shortest path from src to dst; each vertex takes the lowest-index
    predecessor on the previous level.

    Raises:
        UnreachableError: dst cannot be reached from src
    """
    g.require_alive(dst)
    levels = bfs_levels(g, src)
    target = 1 << (dst - 1)
    depth = next((d for d, level in enumerate(levels) if level & target), None)
    if depth is None:
        raise UnreachableError(f"no path from {src} to {dst}")
    path = [dst]
    current = dst
    for d in range(depth - 1, -1, -1):
        previous = g.masks[current - 1] & levels[d]
        current = (previous & -previous).bit_length()
        path.append(current)
    path.reverse()
    return path


def is_connected(g: Graph) -> bool:
    if not g.alive:
        return True
    first = (g.alive & -g.alive).bit_length()
    reached = 0
    for level in bfs_levels(g, first):
        reached |= level
    return reached == g.alive


def diameter(g: Graph) -> Distance:
    """Largest shortest-path distance over all pairs; INFINITY when disconnected"""
    if g.vertex_count == 0:
        raise DomainError("diameter of an empty graph")
    longest = 0
    for v in g.vertices():
        levels = bfs_levels(g, v)
        reached = 0
        for level in levels:
            reached |= level
        if reached != g.alive:
            return INFINITY
        longest = max(longest, len(levels) - 1)
    return longest


def hop_histogram(g: Graph) -> Dict[int, int]:
    """Number of unordered reachable pairs at each hop count >= 1"""
    histogram: Dict[int, int] = {}
    for v in g.vertices():
        for hops, level in enumerate(bfs_levels(g, v)):
            if hops == 0:
                continue
            # count each pair once, from its lower endpoint
            count = popcount(level >> v)
            if count:
                histogram[hops] = histogram.get(hops, 0) + count
    return dict(sorted(histogram.items()))


def mean_hops(histogram: Dict[int, int]) -> Fraction:
    """Exact mean hop count of a hop histogram; 0 when it is empty"""
    pairs = sum(histogram.values())
    if not pairs:
        return Fraction(0)
    return Fraction(sum(hops * count for hops, count in histogram.items()), pairs)


def universal_vertices(g: Graph) -> List[int]:
    """Live vertices adjacent to every other live vertex"""
    target = g.vertex_count - 1
    return [v for v in g.vertices() if popcount(g.masks[v - 1]) == target]


def _require_order(g: Graph, minimum: int, what: str) -> None:
    if g.vertex_count < minimum:
        raise DomainError(f"{what} needs at least {minimum} vertices, got {g.vertex_count}")


# Property checks. Each *_witness function returns None when the property
# holds, otherwise a short description of a counterexample.

def biconnectivity_witness(g: Graph) -> Optional[str]:
    _require_order(g, 3, "biconnectivity")
    if not is_connected(g):
        return "graph is disconnected"
    for v in g.vertices():
        if not is_connected(g.without([v])):
            return f"removing vertex {v} disconnects the graph"
    return None


def is_biconnected(g: Graph) -> bool:
    """True iff removing any single vertex leaves the graph connected"""
    return biconnectivity_witness(g) is None


def sequential_hamiltonian_witness(g: Graph) -> Optional[str]:
    _require_order(g, 3, "the sequential circuit")
    n = g.order
    for i in range(1, n):
        if not g.has_edge(i, i + 1):
            return f"missing edge ({i}, {i + 1})"
    if not g.has_edge(n, 1):
        return f"missing closing edge ({n}, 1)"
    return None


def has_sequential_hamiltonian(g: Graph) -> bool:
    """True iff the circuit [1, 2, ..., n, 1] exists"""
    return sequential_hamiltonian_witness(g) is None


def star_witness(g: Graph) -> Optional[str]:
    for v in g.vertices():
        if v != 1 and not g.has_edge(1, v):
            return f"vertex 1 is not adjacent to vertex {v}"
    return None


def check_star(g: Graph) -> bool:
    """True iff v1 is adjacent to all other vertices"""
    return star_witness(g) is None


def consecutive_adjacency_witness(g: Graph) -> Optional[str]:
    for i in range(1, g.order):
        if not g.has_edge(i, i + 1):
            return f"vertex {i} is not adjacent to vertex {i + 1}"
    return None


def check_consecutive_adjacency(g: Graph) -> bool:
    """True iff V_i is adjacent to V_(i+1) for every i"""
    return consecutive_adjacency_witness(g) is None


def wheel_minus_edge_witness(g: Graph) -> Optional[str]:
    _require_order(g, 4, "the wheel check")
    hub = star_witness(g)
    if hub:
        return f"no hub: {hub}"
    for i in range(2, g.order):
        if not g.has_edge(i, i + 1):
            return f"rim path broken at ({i}, {i + 1})"
    return None


def check_wheel_minus_edge(g: Graph) -> bool:
    """True iff hub v1 is universal and the rim path v2-v3-...-vn is present"""
    return wheel_minus_edge_witness(g) is None


def even_independence_witness(g: Graph) -> Optional[str]:
    for u, v in g.edges():
        if u % 2 == 0 and v % 2 == 0:
            return f"even vertices {u} and {v} are adjacent"
    return None


def check_even_independence(g: Graph) -> bool:
    """True iff no edge joins two even-indexed vertices"""
    return even_independence_witness(g) is None


def short_paths_witness(g: Graph) -> Optional[str]:
    _require_order(g, 3, "the short path check")
    vertices = g.vertices()
    for a, u in enumerate(vertices):
        for v in vertices[a + 1:]:
            # the direct edge plus one u-w-v path per common neighbor w;
            # distinct w never share an edge
            paths = int(g.has_edge(u, v)) + popcount(g.masks[u - 1] & g.masks[v - 1])
            if paths < 2:
                return f"pair ({u}, {v}) has {paths} edge-disjoint path(s) of length <= 2"
    return None


def check_two_edge_disjoint_short_paths(g: Graph) -> bool:
    """True iff every pair has two edge-disjoint paths of length <= 2"""
    return short_paths_witness(g) is None


def even_neighbor_parity_witness(g: Graph, qualified: bool = True) -> Optional[str]:
    for a, b in g.edges():
        # qualified: only the orientation i > j, i.e. lower-triangle entries
        orientations = ((b, a),) if qualified else ((a, b), (b, a))
        for i, j in orientations:
            if j % 2 or abs(i - j) <= 1:
                continue
            if i % 2 == 0:
                return f"edge ({i}, {j}) joins even vertex {j} to even vertex {i}"
            if not g.has_edge(i, j - 1):
                return f"edge ({i}, {j}) present but ({i}, {j - 1}) missing"
    return None


def check_even_neighbor_parity(g: Graph, qualified: bool = True) -> bool:
    """
    True iff every long edge (i, j), i > j, into an even j has odd i and
    edge (i, j-1) is present.

    With qualified=False both orientations are required, which fails from
    PG(8) on: (3, 8) is an edge but (3, 7) is not.
    """
    return even_neighbor_parity_witness(g, qualified=qualified) is None


def power_hub_exponent(k: int) -> int:
    """m such that k = 2^m + 1 with m >= 1"""
    x = k - 1
    if x < 2 or x & (x - 1):
        raise DomainError(f"vertex {k} is not of the form 2^m + 1 with m >= 1")
    return x.bit_length() - 1


def power_hub_witness(g: Graph, k: int, qualified: bool = True) -> Optional[str]:
    m = power_hub_exponent(k)
    if k > g.order:
        raise DomainError(f"vertex {k} outside 1..{g.order}")
    limit = min(g.order, (1 << (m + 1)) + 1) if qualified else g.order
    for i in range(1, limit + 1):
        if i != k and not g.has_edge(k, i):
            return f"vertex {k} is not adjacent to vertex {i}"
    return None


def check_power_hub(g: Graph, k: int, qualified: bool = True) -> bool:
    """
    For k = 2^m + 1: True iff V_k is adjacent to every other vertex with
    index <= min(order, 2^(m+1) + 1).

    With qualified=False the window is the whole graph, which fails once the
    order passes 2^(m+1) + 1.
    """
    return power_hub_witness(g, k, qualified=qualified) is None
