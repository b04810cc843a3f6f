"""
Brute-force SRCW oracle
Tries every coloring of an out-degree-2 graph; ground truth for the deciders
"""

from itertools import product
from typing import Iterator, List, Optional, Tuple

from src.automata.automaton import Coloring
from src.graphs.multigraph import Graph, require_out_degree_two
from src.utils.console import say
from src.utils.errors import ResourceLimitError
from src.utils.settings import get_settings


def _state_options(g: Graph) -> List[List[Tuple[int, int]]]:
    """(a-edge, b-edge) choices per state; parallel pairs keep only one"""
    options = []
    for state in g.states():
        low, high = g.out_edges(state)
        if g.target(low) == g.target(high):
            options.append([(low, high)])
        else:
            options.append([(low, high), (high, low)])
    return options


def enumerate_colorings(g: Graph) -> Iterator[Coloring]:
    """
    Every behaviorally distinct coloring, in canonical order

    State 0 varies slowest; a on the lower edge position comes first.
    """
    require_out_degree_two(g)
    for choice in product(*_state_options(g)):
        yield Coloring.from_pairs(choice)


def count_colorings(g: Graph) -> int:
    require_out_degree_two(g)
    total = 1
    for options in _state_options(g):
        total *= len(options)
    return total


def brute_srcw(g: Graph, w: str, force: bool = False) -> Optional[Coloring]:
    """
    First coloring (canonical order) making w a reset word

    Args:
        g: Out-degree-2 graph
        w: Target word
        force: Ignore SRCW_BRUTE_FORCE_CAP

    Returns:
        Witness coloring, or None if no coloring works

    Raises:
        ResourceLimitError: graph larger than the cap and force is off
    """
    require_out_degree_two(g)
    cap = get_settings().brute_force_cap
    if g.state_count > cap and not force:
        raise ResourceLimitError(
            f"Brute force refuses {g.state_count} states (cap {cap}); pass force to override"
        )

    options = _state_options(g)
    # per-state successor pairs (a-target, b-target) aligned with options
    successor_options = [
        [(g.target(a), g.target(b)) for a, b in state_options] for state_options in options
    ]
    letters = [0 if letter == "a" else 1 for letter in w]
    everything = range(g.state_count)

    say(f"🔍 Brute force over {count_colorings(g)} colorings for {w!r}")
    for choice in product(*(range(len(o)) for o in options)):
        table = [successor_options[s][c] for s, c in enumerate(choice)]
        current = set(everything)
        for letter in letters:
            current = {table[s][letter] for s in current}
            if len(current) == 1:
                break
        if len(current) == 1:
            return Coloring.from_pairs(options[s][c] for s, c in enumerate(choice))
    return None
