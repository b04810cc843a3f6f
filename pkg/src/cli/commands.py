"""
CLI commands
Each command returns a RunReport plus the document it produced, if any
"""

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.automata.automaton import Coloring, is_reset_word
from src.automata.oracle import brute_srcw
from src.cli.formats import (
    ColoringDocument,
    GadgetDocument,
    GraphDocument,
    RunReport,
    dump_json,
    load_graph,
    load_wsat,
    to_dot,
)
from src.deciders.lifting import decide_abb_sc
from src.deciders.power_words import decide_t1, decide_t2
from src.gadgets.gadget_graph import GadgetGraph
from src.gadgets.reductions import T3, T4, build_gadget_for_word, color_gadget
from src.gadgets.sink_device import build_sink_device, lemma9_witness, theorem10_audit, verify_sink_device
from src.gadgets.strongly_connected import SC, build_gadget_sc, color_gadget_sc
from src.graphs.generator import sample_graph
from src.graphs.multigraph import Graph, is_aperiodic, require_out_degree_two, strongly_connected
from src.utils.console import say, warn
from src.utils.errors import PreconditionError, WitnessError
from src.validation.sweeps import measure_abb_scaling, run_scope
from src.words.binary_words import WordClass, class_note, classify, parse_word
from src.wsat.instance import solve


@dataclass
class Outcome:
    report: RunReport
    document: Optional[str] = None
    dot: Optional[str] = None


def _witness(coloring: Optional[Coloring]):
    return ColoringDocument.from_coloring(coloring).root if coloring else None


def _save(path: Optional[str], text: str) -> Optional[str]:
    if not path:
        return None
    Path(path).write_text(text + "\n")
    say(f"✅ Wrote {path}")
    return path


def cmd_classify(word: str) -> Outcome:
    w = parse_word(word)
    cls = classify(w)
    notes = [class_note(cls)]
    details = {}
    if w in ("abb", "baa"):
        notes = ["NP-complete in general, polynomial if strongly connected"]
    if cls == WordClass.T4:
        audit = theorem10_audit(w)
        details = {"incompleteness_predicate": audit.predicate, "device_incomplete": audit.incomplete}
        if not audit.agrees:
            notes.append("incompleteness predicate and D(w) disagree")
    return Outcome(RunReport(command="classify", decision="yes", word=w,
                             word_class=cls.value, notes=notes, details=details))


def _poly_decide(g: Graph, w: str, cls: WordClass) -> Optional[tuple]:
    """(algorithm name, result) when some polynomial decider applies"""
    if cls == WordClass.T1:
        return "t1", decide_t1(g, w)
    if cls == WordClass.T2:
        return "t2", decide_t2(g, w)
    if w in ("abb", "baa") and strongly_connected(g):
        result = decide_abb_sc(g)
        if w == "baa" and result is not None:
            result = result.swapped()
        return "abb-strongly-connected", result
    return None


def cmd_decide(graph: str, word: str, algorithm: str = "auto", verify: bool = False,
               force: bool = False, out: Optional[str] = None) -> Outcome:
    start = time.perf_counter()
    g = load_graph(Path(graph))
    w = parse_word(word)
    require_out_degree_two(g)
    cls = classify(w)
    notes = []
    if not is_aperiodic(g):
        warn("Graph is not aperiodic; a road coloring may not exist")
        notes.append("graph is not aperiodic")

    decided = None if algorithm == "brute" else _poly_decide(g, w, cls)
    if decided is None:
        if algorithm == "poly":
            raise PreconditionError(f"No polynomial decider for {w!r} on this graph")
        if algorithm == "auto":
            warn(f"Falling back to brute force for {w!r}: exponential in the state count")
        decided = ("brute", brute_srcw(g, w, force=force))
    name, coloring = decided

    if coloring is not None and not is_reset_word(coloring.to_automaton(g), w):
        raise WitnessError("Decider returned a coloring that does not reset the word")
    oracle_agrees = None
    if verify:
        oracle_agrees = (brute_srcw(g, w, force=force) is not None) == (coloring is not None)

    document = dump_json(ColoringDocument.from_coloring(coloring)) if coloring else None
    report = RunReport(
        command="decide",
        decision="yes" if coloring else "no",
        state_count=g.state_count,
        word=w,
        word_class=cls.value,
        algorithm=name,
        witness=_witness(coloring),
        witness_path=_save(out, document) if document else None,
        seconds=time.perf_counter() - start,
        oracle_agrees=oracle_agrees,
        notes=notes,
    )
    return Outcome(report, document, to_dot(g, coloring))


def _family_for(w: str, family: Optional[str]) -> str:
    if family:
        return family
    return T3 if classify(w) == WordClass.T3 else T4


def _build(w: str, wsat: str, family: str) -> GadgetGraph:
    phi = load_wsat(Path(wsat))
    if family == SC:
        return build_gadget_sc(w, phi)
    return build_gadget_for_word(w, phi, family)


def cmd_gadget(word: str, wsat: str, family: Optional[str] = None,
               out: Optional[str] = None) -> Outcome:
    start = time.perf_counter()
    w = parse_word(word)
    family = _family_for(w, family)
    gadget = _build(w, wsat, family)
    g = gadget.graph
    document = dump_json(GadgetDocument.from_gadget(gadget))
    report = RunReport(
        command="gadget",
        decision="yes",
        state_count=g.state_count,
        word=w,
        word_class=classify(w).value,
        algorithm=family,
        witness_path=_save(out, document),
        seconds=time.perf_counter() - start,
        details={"strongly_connected": strongly_connected(g), "aperiodic": is_aperiodic(g)},
    )
    return Outcome(report, document, to_dot(g, roles=gadget.roles))


def cmd_color(word: str, wsat: str, family: Optional[str] = None,
              out: Optional[str] = None) -> Outcome:
    """Solve the instance, build its gadget and color it from the solution"""
    start = time.perf_counter()
    w = parse_word(word)
    family = _family_for(w, family)
    gadget = _build(w, wsat, family)
    xi = solve(gadget.wsat)
    coloring = None
    if xi is not None:
        coloring = color_gadget_sc(gadget, xi) if family == SC else color_gadget(gadget, xi)
        if not is_reset_word(coloring.to_automaton(gadget.graph), w):
            raise WitnessError("Gadget coloring does not reset the word")
    document = dump_json(ColoringDocument.from_coloring(coloring)) if coloring else None
    report = RunReport(
        command="color",
        decision="yes" if coloring else "no",
        state_count=gadget.graph.state_count,
        word=w,
        word_class=classify(w).value,
        algorithm=family,
        witness=_witness(coloring),
        witness_path=_save(out, document) if document else None,
        seconds=time.perf_counter() - start,
        details={"assignment": xi} if xi is not None else {},
    )
    return Outcome(report, document, to_dot(gadget.graph, coloring, gadget.roles))


def cmd_sink_device(word: str) -> Outcome:
    w = parse_word(word)
    if not w:
        raise PreconditionError("Sink devices need a nonempty word")
    device = build_sink_device(w)
    report = verify_sink_device(device.automaton, device.q0, w)
    witness = lemma9_witness(w)
    transitions = {
        f"[{device.labels[s] or 'ε'}] {letter}": f"[{device.labels[t] or 'ε'}]"
        for (s, letter), t in sorted(device.automaton.transitions.items())
    }
    details = {
        "states": [f"[{label or 'ε'}]" for label in device.labels],
        "transitions": transitions,
        **report.to_dict(),
        "lemma9_witness": None if witness is None else (witness or "ε"),
    }
    if classify(w) == WordClass.T4:
        details["incompleteness_predicate"] = theorem10_audit(w).predicate
    run = RunReport(command="sink-device", decision="yes", word=w,
                    word_class=classify(w).value, state_count=device.automaton.state_count,
                    details=details)
    return Outcome(run, dot=to_dot(device.automaton.underlying_graph(),
                                   roles=tuple(f"[{label or 'ε'}]" for label in device.labels)))


def cmd_verify(scope: str, states: Optional[int] = None, seed: Optional[int] = None,
               samples: Optional[int] = None) -> Outcome:
    start = time.perf_counter()
    if scope == "scaling":
        if states is not None or samples is not None:
            raise PreconditionError("The scaling run has fixed sizes; a state bound and sample count do not apply")
        fit = measure_abb_scaling(seed=seed or 0)
        passed = fit["degree"] <= 4
        details = {"degree": fit["degree"], "medians": fit["frame"].to_dict(orient="records")}
        notes = []
    else:
        result = run_scope(scope, max_states=states, seed=seed, random_count=samples)
        passed = result.passed
        details = result.summary()
        notes = result.notes
    report = RunReport(command=f"verify {scope}", decision="yes" if passed else "no",
                       seconds=time.perf_counter() - start, details=details, notes=notes)
    return Outcome(report)


def cmd_random_graph(states: int, seed: Optional[int] = None, strongly: bool = False,
                     aperiodic: bool = False, out: Optional[str] = None) -> Outcome:
    g = sample_graph(states, seed, require_strongly_connected=strongly, require_aperiodic=aperiodic)
    document = dump_json(GraphDocument.from_graph(g))
    report = RunReport(command="random-graph", decision="yes", state_count=states,
                       witness_path=_save(out, document),
                       details={"strongly_connected": strongly_connected(g), "aperiodic": is_aperiodic(g)})
    return Outcome(report, document, to_dot(g))
