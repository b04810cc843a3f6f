"""
Graph generators
Exhaustive enumeration and seeded random out-degree-2 graphs
"""

from itertools import combinations_with_replacement, product
from typing import Iterator, Optional

import numpy as np
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from src.graphs.multigraph import Graph, is_aperiodic, strongly_connected
from src.utils.console import say
from src.utils.errors import PreconditionError, ResourceLimitError
from src.utils.settings import get_settings


class _Rejected(Exception):
    """Sample failed a requested property"""


def all_out_degree_two_graphs(n: int) -> Iterator[Graph]:
    """
    Every out-degree-2 multigraph on n states, up to edge order

    Each state takes an unordered pair of targets (repetition allowed),
    so the stream has C(n+1, 2)^n members.
    """
    if n < 1:
        raise PreconditionError("Need at least one state")
    pairs = list(combinations_with_replacement(range(n), 2))
    for choice in product(pairs, repeat=n):
        yield Graph.from_targets(choice)


def random_graph(n: int, rng: np.random.Generator) -> Graph:
    """Uniformly random targets for both out-edges of every state"""
    if n < 1:
        raise PreconditionError("Need at least one state")
    targets = rng.integers(0, n, size=(n, 2))
    return Graph.from_targets(targets.tolist())


def random_strongly_connected_graph(n: int, rng: np.random.Generator) -> Graph:
    """
    Strongly connected by construction

    A random cyclic order supplies one out-edge per state; the second
    out-edge is uniform. Edge order within a state is shuffled.
    """
    if n < 1:
        raise PreconditionError("Need at least one state")
    order = rng.permutation(n)
    targets = [[0, 0] for _ in range(n)]
    for position, state in enumerate(order):
        pair = [int(order[(position + 1) % n]), int(rng.integers(0, n))]
        if rng.random() < 0.5:
            pair.reverse()
        targets[int(state)] = pair
    return Graph.from_targets(targets)


def random_lifting_graph(n: int, k: int, rng: np.random.Generator) -> Graph:
    """
    k-lifting by construction

    States are spread over distance levels 0..k+1 from a hidden q0 (every
    level 1..k nonempty). A state on level j >= 1 gets one edge to level
    j-1 and one edge into level k, so its distance is exactly j. Labels
    are shuffled at the end.
    """
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    if n < k + 1:
        raise PreconditionError(f"A {k}-lifting graph built this way needs at least {k + 1} states")

    levels = [0] + list(range(1, k + 1)) + [int(x) for x in rng.integers(1, k + 2, size=n - k - 1)]
    by_level = {}
    for state, level in enumerate(levels):
        by_level.setdefault(level, []).append(state)

    def pick(level: int) -> int:
        members = by_level[level]
        return members[int(rng.integers(0, len(members)))]

    targets = []
    for state, level in enumerate(levels):
        if level == 0:
            targets.append([pick(k), int(rng.integers(0, n))])
        else:
            targets.append([pick(level - 1), pick(k)])

    relabel = rng.permutation(n)
    shuffled = [[0, 0] for _ in range(n)]
    for state, pair in enumerate(targets):
        shuffled[int(relabel[state])] = [int(relabel[t]) for t in pair]
    return Graph.from_targets(shuffled)


def sample_graph(
    n: int,
    seed: Optional[int] = None,
    require_strongly_connected: bool = False,
    require_aperiodic: bool = False,
) -> Graph:
    """
    Rejection-sample a random graph until the requested flags hold

    Args:
        n: Number of states
        seed: Seed for numpy's default_rng; same seed gives the same graph
        require_strongly_connected: Resample until strongly connected
        require_aperiodic: Resample until aperiodic

    Returns:
        Out-degree-2 Graph

    Raises:
        PreconditionError: n below 1 or a negative seed
        ResourceLimitError: when SRCW_RESAMPLE_CAP attempts all fail
    """
    if n < 1 or (seed is not None and seed < 0):
        raise PreconditionError(f"Need n >= 1 and a non-negative seed, got n={n}, seed={seed}")
    rng = np.random.default_rng(seed)
    cap = get_settings().resample_cap

    def attempt() -> Graph:
        g = random_graph(n, rng)
        if require_strongly_connected and not strongly_connected(g):
            raise _Rejected()
        if require_aperiodic and not is_aperiodic(g):
            raise _Rejected()
        return g

    try:
        for trial in Retrying(
            stop=stop_after_attempt(cap),
            retry=retry_if_exception_type(_Rejected),
        ):
            with trial:
                g = attempt()
    except RetryError as exc:
        raise ResourceLimitError(f"No graph with the requested flags after {cap} attempts") from exc

    say(f"🔄 Sampled {n}-state graph in {trial.retry_state.attempt_number} attempt(s)")
    return g
