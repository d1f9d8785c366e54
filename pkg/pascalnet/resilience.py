"""
Resilience Module
Vertex-failure scenarios, hub routing through v1 or a surviving
Dependable Node, and hop/diameter degradation metrics
"""

import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, UnreachableError
from .graph import (INFINITY, Distance, Graph, bfs_levels, from_matrix, mean_hops,
                    shortest_path, universal_vertices)
from .matrix import generate
from .triangle import popcount

MAX_SEED = 2 ** 64


def remove_vertices(g: Graph, failed: Iterable[int]) -> Graph:
    """
    Induced subgraph on the surviving vertices; original indices are kept.

    Raises:
        DomainError: a failed vertex is out of range, or nothing would survive
    """
    failed = set(failed)
    for v in failed:
        if not 1 <= v <= g.order:
            raise DomainError(f"failed vertex {v} outside 1..{g.order}")
    survivors = g.without(failed)
    if survivors.vertex_count == 0:
        raise DomainError("cannot remove every vertex")
    return survivors


def hub_route(g: Graph, src: int, dst: int, live_hubs: Optional[Sequence[int]] = None) -> List[int]:
    """
    Route src -> dst: the direct edge when present, else through the
    lowest-index live hub adjacent to both, else a BFS shortest path.

    Args:
        g: Graph (possibly with failed vertices)
        src: Source vertex
        dst: Destination vertex
        live_hubs: Surviving full-degree vertices; computed from g when None

    Raises:
        DomainError: src equals dst, or either endpoint is out of range or failed
        UnreachableError: dst cannot be reached
    """
    g.require_alive(src)
    g.require_alive(dst)
    if src == dst:
        raise DomainError(f"source and destination are both {src}")
    if g.has_edge(src, dst):
        return [src, dst]
    hubs = universal_vertices(g) if live_hubs is None else sorted(live_hubs)
    for hub in hubs:
        if hub not in (src, dst) and g.has_edge(src, hub) and g.has_edge(hub, dst):
            return [src, hub, dst]
    return shortest_path(g, src, dst)


def _pascal_without_v1(n: int) -> Graph:
    return from_matrix(generate(n)).without([1])


def fallback_hub(n: int) -> Optional[int]:
    """Lowest-index vertex that is universal in PG(n) once v1 has failed"""
    if n < 4:
        raise DomainError(f"fallback analysis needs n >= 4, got {n}")
    hubs = universal_vertices(_pascal_without_v1(n))
    return hubs[0] if hubs else None


def dnp_fallback_check(n: int) -> bool:
    """True iff PG(n) minus v1 still has diameter <= 2"""
    if n < 4:
        raise DomainError(f"fallback analysis needs n >= 4, got {n}")
    survivors = _pascal_without_v1(n)
    connected, diam, _ = _all_pairs(survivors)
    return connected and diam <= 2


def _all_pairs(g: Graph) -> Tuple[bool, Distance, Dict[int, int]]:
    """Connectivity, diameter and hop histogram from one BFS per vertex"""
    histogram: Dict[int, int] = {}
    connected = True
    longest = 0
    for v in g.vertices():
        levels = bfs_levels(g, v)
        reached = 0
        for hops, level in enumerate(levels):
            reached |= level
            # pairs counted once, from the lower endpoint
            count = popcount(level >> v) if hops else 0
            if count:
                histogram[hops] = histogram.get(hops, 0) + count
        if reached != g.alive:
            connected = False
        longest = max(longest, len(levels) - 1)
    diam: Distance = longest if connected else INFINITY
    return connected, diam, dict(sorted(histogram.items()))


def avg_path_length(g: Graph) -> Fraction:
    """
    Mean BFS distance over all unordered vertex pairs, as an exact fraction.

    Raises:
        UnreachableError: the graph is disconnected
    """
    connected, _, histogram = _all_pairs(g)
    if not connected:
        raise UnreachableError("average path length of a disconnected graph")
    return mean_hops(histogram)


@dataclass
class FailureScenario:
    """A failure experiment on PG(n)"""
    n: int
    failures: int = 0
    trials: int = 1
    seed: int = 0
    forced_failed: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.forced_failed is not None:
            self.forced_failed = tuple(sorted(set(self.forced_failed)))
            self.failures = len(self.forced_failed)
        self.validate()

    def validate(self) -> None:
        if self.n < 1:
            raise DomainError(f"order must be >= 1, got {self.n}")
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < MAX_SEED:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if not 0 <= self.failures < self.n:
            raise DomainError(f"failure count must lie in 0..{self.n - 1}, got {self.failures}")
        for v in self.forced_failed or ():
            if not 1 <= v <= self.n:
                raise DomainError(f"failed vertex {v} outside 1..{self.n}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FailureScenario':
        try:
            forced = data.get('forced_failed')
            return cls(
                n=int(data['n']),
                failures=int(data.get('failures', 0)),
                trials=int(data.get('trials', 1)),
                seed=int(data.get('seed', 0)),
                forced_failed=tuple(int(v) for v in forced) if forced is not None else None,
            )
        except KeyError as e:
            raise DomainError(f"scenario is missing {e}") from None
        except (TypeError, ValueError) as e:
            if isinstance(e, DomainError):
                raise
            raise DomainError(f"malformed scenario: {e}") from None

    @classmethod
    def from_config(cls, path: str) -> 'FailureScenario':
        """Read {n, failures, trials, seed, forced_failed?} from a JSON file"""
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as e:
            raise DomainError(f"cannot read scenario {path}: {e}") from None
        if not isinstance(data, dict):
            raise DomainError(f"scenario {path} must hold a JSON object")
        return cls.from_dict(data)


@dataclass
class ResilienceReport:
    """Metrics of one trial after its vertices failed"""
    trial: int
    failed: Tuple[int, ...]
    connected: bool
    diameter_after: Distance
    avg_hops: Fraction
    hop_histogram: Dict[int, int] = field(default_factory=dict)
    hub_used: Optional[int] = None

    @property
    def kind(self) -> str:
        """'baseline' for no failure or the v1 failure, 'extension' for anything else"""
        return 'baseline' if set(self.failed) <= {1} else 'extension'

    def to_dict(self) -> Dict[str, Any]:
        """Convert to JSON-serializable dictionary"""
        return {
            'trial': self.trial,
            'failed': list(self.failed),
            'connected': self.connected,
            'diameter_after': self.diameter_after if self.diameter_after != INFINITY else 'inf',
            'avg_hops': {'num': self.avg_hops.numerator, 'den': self.avg_hops.denominator},
            'hop_histogram': {str(hops): count for hops, count in self.hop_histogram.items()},
            'hub_used': self.hub_used,
            'kind': self.kind,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def assess(g: Graph, failed: Iterable[int], trial: int = 1) -> ResilienceReport:
    """Fail the given vertices and measure what is left"""
    failed = tuple(sorted(set(failed)))
    survivors = remove_vertices(g, failed)
    connected, diam, histogram = _all_pairs(survivors)
    hubs = universal_vertices(survivors) if survivors.vertex_count > 1 else []
    return ResilienceReport(
        trial=trial,
        failed=failed,
        connected=connected,
        diameter_after=diam,
        avg_hops=mean_hops(histogram),
        hop_histogram=histogram,
        hub_used=hubs[0] if hubs else None,
    )


def floyd_sample(rng: np.random.Generator, n: int, k: int) -> Tuple[int, ...]:
    """
    k distinct vertices drawn uniformly from 1..n (Floyd's algorithm).

    One Generator.integers draw per vertex, so sweeps do not depend on how
    numpy implements Generator.choice.
    """
    if not 0 <= k <= n:
        raise DomainError(f"cannot draw {k} distinct vertices from 1..{n}")
    chosen = set()
    for j in range(n - k + 1, n + 1):
        t = int(rng.integers(1, j, endpoint=True))
        chosen.add(j if t in chosen else t)
    return tuple(sorted(chosen))


def failure_sweep(scenario: FailureScenario, verbose: bool = False) -> List[ResilienceReport]:
    """
    Run the scenario's trials on PG(n).

    Each trial draws its failed vertices uniformly without replacement from
    its own PCG64 substream, spawned from the scenario seed, so the result
    depends only on (n, failures, trials, seed) and not on trial order.

    Returns:
        One ResilienceReport per trial, in trial order
    """
    scenario.validate()
    g = from_matrix(generate(scenario.n))
    streams = np.random.SeedSequence(scenario.seed).spawn(scenario.trials)
    reports = []
    for trial, stream in enumerate(streams, 1):
        if scenario.forced_failed is not None:
            failed = scenario.forced_failed
        else:
            rng = np.random.Generator(np.random.PCG64(stream))
            failed = floyd_sample(rng, scenario.n, scenario.failures)
        report = assess(g, failed, trial=trial)
        if verbose:
            print(f"[Resilience] trial {trial}: failed={list(failed)} "
                  f"diameter={report.diameter_after} hub={report.hub_used}", file=sys.stderr)
        reports.append(report)
    return reports
