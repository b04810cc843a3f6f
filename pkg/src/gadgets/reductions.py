"""
W-SAT reductions for T3 and T4 words
Gadget builders, the colorings a satisfying assignment induces, and the
assignment read back from any resetting coloring
"""

from typing import List

from src.automata.automaton import Coloring, apply
from src.gadgets.gadget_graph import GadgetBuilder, GadgetGraph, coloring_from_a_targets
from src.graphs.multigraph import Graph, chain_extension
from src.utils.console import say
from src.utils.errors import PreconditionError
from src.words.binary_words import WordClass, classify, t3_core, t4_core
from src.wsat.instance import Assignment, WSatInstance, check

T3 = "t3"
T4 = "t4"


def _add_clauses(builder: GadgetBuilder, phi: WSatInstance) -> None:
    for j in range(len(phi.clauses)):
        builder.add(f"C{j}")
        builder.add(f"C'{j}")
        builder.add(f"C''{j}")


def _wire_clauses(builder: GadgetBuilder, phi: WSatInstance) -> None:
    for j, (z1, z2, z3, z4) in enumerate(phi.clauses):
        builder.wire(f"C{j}", f"C'{j}", f"C''{j}")
        builder.wire(f"C'{j}", f"x{z1}", f"x{z2}")
        builder.wire(f"C''{j}", f"x{z3}", f"x{z4}")


def build_gadget_t3(k: int, phi: WSatInstance) -> GadgetGraph:
    """
    Gadget for a b^k, k >= 2

    Per variable: x -> {V1, V2}, V1 -> {V2, x}, Vj -> {V(j+1), D2};
    V_k is D0. Clauses C -> {C', C''}, C' -> {x_z1, x_z2},
    C'' -> {x_z3, x_z4}. The D block is a triangle with both directions.
    """
    if k < 2:
        raise PreconditionError("The T3 gadget needs k >= 2")
    phi.require_gadget_ready()

    builder = GadgetBuilder()
    for i in range(phi.variable_count):
        builder.add(f"x{i}")
        for j in range(1, k):
            builder.add(f"V{i},{j}")
    _add_clauses(builder, phi)
    for role in ("D0", "D1", "D2"):
        builder.add(role)

    for i in range(phi.variable_count):
        builder.alias(f"V{i},{k}", builder["D0"])
        builder.wire(f"x{i}", f"V{i},1", f"V{i},2")
        builder.wire(f"V{i},1", f"V{i},2", f"x{i}")
        for j in range(2, k):
            builder.wire(f"V{i},{j}", f"V{i},{j + 1}", "D2")
    _wire_clauses(builder, phi)
    builder.wire("D0", "D1", "D2")
    builder.wire("D1", "D0", "D2")
    builder.wire("D2", "D0", "D1")

    g = builder.graph()
    core = "a" + "b" * k
    say(f"✅ T3 gadget for {core!r}: {g.state_count} states")
    return GadgetGraph(
        graph=g,
        roles=tuple(builder.roles),
        wsat=phi,
        word=core,
        family=T3,
        core_word=core,
        core_state_count=g.state_count,
    )


def build_gadget_t4(k: int, l: int, phi: WSatInstance) -> GadgetGraph:
    """
    Gadget for a b^k a^l with a sink D0

    Per variable: x => V1 => ... => V(k-1) = P, P -> {Z1, W}, W => W',
    W' -> {W', Z1}, Z1 => ... => Z(l-1) => D0 (Z_l is D0).
    """
    if k < 1 or l < 1:
        raise PreconditionError("The T4 gadget needs k >= 1 and l >= 1")
    phi.require_gadget_ready()

    builder = GadgetBuilder()
    for i in range(phi.variable_count):
        builder.add(f"x{i}")
        for j in range(1, k):
            builder.add(f"V{i},{j}")
        builder.add(f"W{i}")
        builder.add(f"W'{i}")
        for j in range(1, l):
            builder.add(f"Z{i},{j}")
    _add_clauses(builder, phi)
    builder.add("D0")

    for i in range(phi.variable_count):
        builder.alias(f"V{i},0", builder[f"x{i}"])
        builder.alias(f"Z{i},{l}", builder["D0"])
        for j in range(0, k - 1):
            builder.wire(f"V{i},{j}", f"V{i},{j + 1}", f"V{i},{j + 1}")
        builder.wire(f"V{i},{k - 1}", f"Z{i},1", f"W{i}")
        builder.wire(f"W{i}", f"W'{i}", f"W'{i}")
        builder.wire(f"W'{i}", f"W'{i}", f"Z{i},1")
        for j in range(1, l):
            builder.wire(f"Z{i},{j}", f"Z{i},{j + 1}", f"Z{i},{j + 1}")
    _wire_clauses(builder, phi)
    builder.wire("D0", "D0", "D0")

    g = builder.graph()
    core = "a" + "b" * k + "a" * l
    say(f"✅ T4 gadget for {core!r}: {g.state_count} states")
    return GadgetGraph(
        graph=g,
        roles=tuple(builder.roles),
        wsat=phi,
        word=core,
        family=T4,
        core_word=core,
        core_state_count=g.state_count,
        sink=builder["D0"],
    )


def build_gadget_for_word(w: str, phi: WSatInstance, family: str) -> GadgetGraph:
    """
    Gadget for any word of the family's class

    The core gadget handles the a-initial core of w; a mirrored core only
    swaps the letters of colorings, and the remaining prefix u is absorbed
    by a chain extension of length |u|.
    """
    if family == T3:
        if classify(w) != WordClass.T3:
            raise PreconditionError(f"Word {w!r} is not in T3")
        split = t3_core(w)
        core = build_gadget_t3(split.k, phi)
    elif family == T4:
        if classify(w) != WordClass.T4:
            raise PreconditionError(f"Word {w!r} is not in T4")
        split = t4_core(w)
        core = build_gadget_t4(split.k, split.l, phi)
    else:
        raise PreconditionError(f"Unknown gadget family {family!r}")

    m = split.prefix_length
    g = chain_extension(core.graph, m)
    roles = list(core.roles)
    for q in range(core.graph.state_count):
        roles.extend(f"chain{q},{j}" for j in range(1, m + 1))
    return GadgetGraph(
        graph=g,
        roles=tuple(roles),
        wsat=phi,
        word=w,
        family=family,
        core_word=core.core_word,
        prefix_length=m,
        swapped=split.swapped,
        core_state_count=core.graph.state_count,
        sink=core.sink,
    )


def _color_clauses(gadget: GadgetGraph, xi: Assignment, a_targets: List[int]) -> None:
    """Clause states: C' and C'' take a to a false variable; the satisfied branch takes b to a true one"""
    b = gadget.state_of
    for j, (z1, z2, z3, z4) in enumerate(gadget.wsat.clauses):
        if xi[z1] != xi[z2]:
            false_z = z2 if xi[z1] else z1
            a_targets[b(f"C{j}")] = b(f"C'{j}")
            a_targets[b(f"C'{j}")] = b(f"x{false_z}")
            a_targets[b(f"C''{j}")] = b(f"x{z3 if xi[z3] == 0 else z4}")
        else:
            false_z = z4 if xi[z3] else z3
            a_targets[b(f"C{j}")] = b(f"C''{j}")
            a_targets[b(f"C''{j}")] = b(f"x{false_z}")
            a_targets[b(f"C'{j}")] = b(f"x{z1}")


def _core_a_targets(gadget: GadgetGraph, xi: Assignment) -> List[int]:
    """a-targets on the core states for the a-initial core word"""
    s = gadget.state_of
    k = gadget.core_word.count("b")
    a_targets = [-1] * gadget.core_state_count

    if gadget.family == T3:
        for i in range(gadget.wsat.variable_count):
            x, v1 = s(f"x{i}"), s(f"V{i},1")
            v2 = s(f"V{i},2") if k > 2 else s("D0")
            if xi[i]:
                a_targets[x], a_targets[v1] = v1, v2
            else:
                a_targets[x], a_targets[v1] = v2, x
            for j in range(2, k):
                a_targets[s(f"V{i},{j}")] = s("D2")
        d0, d1, d2 = s("D0"), s("D1"), s("D2")
        a_targets[d0], a_targets[d1] = d2, d2
        a_targets[d2] = d0 if k % 2 == 0 else d1
    else:
        l = len(gadget.core_word) - 1 - k
        for i in range(gadget.wsat.variable_count):
            x = s(f"x{i}")
            chain = [x] + [s(f"V{i},{j}") for j in range(1, k)]
            for here, there in zip(chain, chain[1:]):
                a_targets[here] = there
            z1 = s(f"Z{i},1") if l > 1 else s("D0")
            w, w_prime = s(f"W{i}"), s(f"W'{i}")
            a_targets[chain[-1]] = z1 if xi[i] else w
            a_targets[w] = w_prime
            a_targets[w_prime] = z1
            for j in range(1, l):
                a_targets[s(f"Z{i},{j}")] = s(f"Z{i},{j + 1}") if j + 1 < l else s("D0")
        a_targets[s("D0")] = s("D0")

    _color_clauses(gadget, xi, a_targets)
    return a_targets


def color_gadget(gadget: GadgetGraph, xi: Assignment) -> Coloring:
    """
    Coloring that makes gadget.word a reset word, built from a satisfying assignment

    Raises:
        PreconditionError: xi does not satisfy the gadget's instance
    """
    if not check(gadget.wsat, xi):
        raise PreconditionError("Assignment does not satisfy the instance")
    a_targets = _core_a_targets(gadget, xi)
    g = gadget.graph
    for state in range(gadget.core_state_count, g.state_count):
        a_targets.append(g.successors(state)[0])
    coloring = coloring_from_a_targets(g, a_targets)
    return coloring.swapped() if gadget.swapped else coloring


def color_gadget_t3(gadget: GadgetGraph, xi: Assignment) -> Coloring:
    if gadget.family != T3:
        raise PreconditionError("Not a T3 gadget")
    return color_gadget(gadget, xi)


def color_gadget_t4(gadget: GadgetGraph, xi: Assignment) -> Coloring:
    if gadget.family != T4:
        raise PreconditionError("Not a T4 gadget")
    return color_gadget(gadget, xi)


def extract_assignment(gadget: GadgetGraph, coloring: Coloring) -> Assignment:
    """
    xi(x_i) = 1 iff x_i lies in the image of the core states under ab

    Read in core letters (unswapped). Chain states only delay the word by
    |u| steps and the image of everything under u is exactly the core, so
    they are ignored. A composed gadget is read through its T4 base, with
    the merged state turned back into a sink.
    """
    if gadget.base is not None:
        base = gadget.base
        n = base.graph.state_count
        a_edges = list(coloring.a_edges[:n])
        b_edges = list(coloring.b_edges[:n])
        a_edges[base.sink], b_edges[base.sink] = base.graph.out_edges(base.sink)
        return extract_assignment(base, Coloring(tuple(a_edges), tuple(b_edges)))

    if gadget.swapped:
        coloring = coloring.swapped()
    n = gadget.core_state_count
    core = Graph(n, gadget.graph.edges[: 2 * n])
    core_coloring = Coloring(coloring.a_edges[:n], coloring.b_edges[:n])
    image = apply(core_coloring.to_automaton(core), range(n), "ab")
    return {i: int(state in image) for i, state in enumerate(gadget.variable_states())}
