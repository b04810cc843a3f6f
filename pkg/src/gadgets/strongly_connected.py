"""
Strongly connected composition
Glues the T4 gadget, a completed sink device and feedback chains into one
strongly connected aperiodic graph
"""

from typing import List, Tuple

from src.automata.automaton import Coloring, is_reset_word
from src.gadgets.gadget_graph import GadgetGraph
from src.gadgets.reductions import T4, build_gadget_for_word, color_gadget
from src.gadgets.sink_device import build_sink_device, verify_sink_device
from src.graphs.multigraph import Graph, is_aperiodic, strongly_connected
from src.utils.console import say
from src.utils.errors import DeviceCompleteError, PreconditionError, WitnessError
from src.words.binary_words import ALPHABET, WordClass, classify, other_letter, runs
from src.wsat.instance import Assignment, WSatInstance, check

SC = "sc"


def _pick_q1(undefined: List[Tuple[int, str]]) -> Tuple[int, str]:
    """Lowest-index device state with a missing transition, first missing letter"""
    return min(undefined, key=lambda item: (item[0], ALPHABET.index(item[1])))


def build_gadget_sc(w: str, phi: WSatInstance) -> GadgetGraph:
    """
    Strongly connected gadget for a T4 word with an incomplete device

    Layout: the word-level T4 gadget keeps its indices and its sink D0
    becomes the device state [ε]; the other device states follow; then
    one chain F_i,0..F_i,β per non-sink gadget state s_i. Undefined
    device transitions go to [ε] except the one at q1, which enters
    F_0,0. In F_i,j the first letter of w jumps to F_i+1,0 and the other
    letter advances; F_i,β sends the first letter to [ε] and the other to s_i.

    Raises:
        DeviceCompleteError: D(w) has no undefined transition
        PreconditionError: w is not in T4, or [ε] does not absorb the suffixes of w
    """
    if classify(w) != WordClass.T4:
        raise PreconditionError(f"Word {w!r} is not in T4")
    device = build_sink_device(w)
    report = verify_sink_device(device.automaton, device.q0, w)
    if not report.incomplete:
        raise DeviceCompleteError(f"D({w}) is complete")
    if not report.suffix_stable:
        raise PreconditionError(f"D({w}) does not map q0 to itself on every suffix of {w}")

    base = build_gadget_for_word(w, phi, T4)
    x0, y0 = w[0], other_letter(w[0])
    beta = runs(w)[1][1]
    n = base.graph.state_count
    d0 = base.sink
    sources = [s for s in range(n) if s != d0]
    chains = len(sources)
    device_count = device.automaton.state_count

    def device_state(d: int) -> int:
        return d0 if d == device.q0 else n + d - 1

    def f_state(i: int, j: int) -> int:
        return n + device_count - 1 + i * (beta + 1) + j

    q1, missing = _pick_q1(device.automaton.undefined())
    targets: List[List[int]] = [list(base.graph.successors(s)) for s in range(n)]
    targets.extend([] for _ in range(device_count - 1 + chains * (beta + 1)))

    for d in range(device_count):
        row = []
        for letter in ALPHABET:
            target = device.automaton.step(d, letter)
            if target is not None:
                row.append(device_state(target))
            elif (d, letter) == (q1, missing):
                row.append(f_state(0, 0))
            else:
                row.append(d0)
        targets[device_state(d)] = row

    for i, source in enumerate(sources):
        for j in range(beta + 1):
            if j < beta:
                by_letter = {x0: f_state((i + 1) % chains, 0), y0: f_state(i, j + 1)}
            else:
                by_letter = {x0: d0, y0: source}
            targets[f_state(i, j)] = [by_letter["a"], by_letter["b"]]

    roles = list(base.roles)
    roles[d0] = "D0=[ε]"
    roles.extend(f"[{label}]" for label in device.labels[1:])
    roles.extend(f"F{i},{j}" for i in range(chains) for j in range(beta + 1))

    g = Graph.from_targets(targets)
    say(
        f"✅ SC gadget for {w!r}: {g.state_count} states, q1={device.labels[q1] or 'ε'} "
        f"missing {missing}, strongly connected={strongly_connected(g)}, aperiodic={is_aperiodic(g)}"
    )
    return GadgetGraph(
        graph=g,
        roles=tuple(roles),
        wsat=phi,
        word=w,
        family=SC,
        core_word=base.core_word,
        prefix_length=base.prefix_length,
        swapped=base.swapped,
        core_state_count=base.core_state_count,
        base=base,
    )


def color_gadget_sc(gadget: GadgetGraph, xi: Assignment) -> Coloring:
    """
    Gadget states follow the T4 coloring; device and chain states carry
    their letters on edge positions (a first)
    """
    if gadget.family != SC or gadget.base is None:
        raise PreconditionError("Not a strongly connected gadget")
    if not check(gadget.wsat, xi):
        raise PreconditionError("Assignment does not satisfy the instance")

    base = gadget.base
    base_coloring = color_gadget(base, xi)
    pairs = []
    for state in gadget.graph.states():
        if state < base.graph.state_count and state != base.sink:
            pairs.append((base_coloring.a_edges[state], base_coloring.b_edges[state]))
        else:
            pairs.append(gadget.graph.out_edges(state))
    coloring = Coloring.from_pairs(pairs)
    if not is_reset_word(coloring.to_automaton(gadget.graph), gadget.word):
        raise WitnessError(f"Composed coloring does not reset {gadget.word!r}")
    return coloring
