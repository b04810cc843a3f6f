"""
Verification sweeps
Cross-checks every decider and construction against the brute-force oracle
"""

import sys
import time
from dataclasses import dataclass, field
from itertools import chain, islice
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.automata.automaton import is_reset_word
from src.automata.oracle import brute_srcw
from src.deciders.lifting import decide_abb_sc, lifting_coloring
from src.deciders.power_words import decide_t1, decide_t2
from src.gadgets.reductions import T3, T4, build_gadget_for_word, color_gadget, extract_assignment
from src.gadgets.sink_device import build_sink_device, lemma9_witness, theorem10_audit, verify_sink_device
from src.gadgets.strongly_connected import build_gadget_sc, color_gadget_sc
from src.graphs.generator import (
    all_out_degree_two_graphs,
    random_graph,
    random_lifting_graph,
    random_strongly_connected_graph,
)
from src.graphs.multigraph import (
    Graph,
    chain_extension,
    constant_out_degree,
    is_aperiodic,
    is_k_lifting,
    strongly_connected,
)
from src.utils.console import say
from src.utils.errors import PreconditionError
from src.utils.settings import get_settings
from src.words.binary_words import WordClass, all_words, classify
from src.wsat.instance import WSatInstance, check, instance_matrix, random_instance, solve

SCOPES = ("device", "t1", "t2", "theorem6", "lifting", "lemma1", "t3", "t4", "sc")
EXHAUSTIVE_SCOPES = ("device", "lemma1")
GADGET_SCOPES = ("t3", "t4", "sc")


@dataclass
class SweepResult:
    scope: str
    frame: pd.DataFrame
    failures: int
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> Dict:
        return {
            "scope": self.scope,
            "checked": int(len(self.frame)),
            "failures": int(self.failures),
            "notes": self.notes,
        }


def _progress(items: Iterable, description: str, total: Optional[int] = None):
    return tqdm(items, desc=description, total=total, file=sys.stderr,
                disable=not get_settings().verbose, leave=False)


def _population(max_states: int, random_count: int, sizes: Sequence[int],
                seed: int, factory: Callable[[int, np.random.Generator], Graph]) -> Iterable[Graph]:
    """All graphs up to max_states, then random_count seeded samples over `sizes`"""
    rng = np.random.default_rng(seed)
    exhaustive = chain.from_iterable(all_out_degree_two_graphs(n) for n in range(1, max_states + 1))
    sampled = (factory(int(rng.choice(sizes)), rng) for _ in range(random_count))
    return chain(exhaustive, sampled)


def _oracle_sweep(scope: str, graphs: Iterable[Graph], words: Sequence[str],
                  decider: Callable[[Graph, str], object]) -> SweepResult:
    rows = []
    for g in _progress(graphs, scope):
        for w in words:
            fast = decider(g, w) is not None
            slow = brute_srcw(g, w) is not None
            rows.append({"states": g.state_count, "edges": g.edges, "word": w,
                         "decider": fast, "oracle": slow, "agree": fast == slow})
    frame = pd.DataFrame(rows)
    failures = int((~frame["agree"]).sum()) if len(frame) else 0
    say(f"{'✅' if failures == 0 else '❌'} {scope}: {len(frame)} comparisons, {failures} disagreement(s)")
    return SweepResult(scope, frame, failures)


def verify_t1(max_states: int = 3, random_count: int = 200, seed: int = 0,
              max_power: int = 4) -> SweepResult:
    words = ["a" * k for k in range(1, max_power + 1)]
    graphs = _population(max_states, random_count, (4, 5, 6), seed, random_graph)
    return _oracle_sweep("t1", graphs, words, decide_t1)


def verify_t2(max_states: int = 3, random_count: int = 200, seed: int = 0) -> SweepResult:
    graphs = _population(max_states, random_count, (4, 5, 6), seed, random_graph)
    return _oracle_sweep("t2", graphs, ["ab", "aab", "aaab"], decide_t2)


def verify_theorem6(max_states: int = 5, random_count: int = 10_000, seed: int = 0) -> SweepResult:
    """abb decider against the oracle on strongly connected graphs"""
    graphs = (g for g in _population(max_states, random_count, (6, 7, 8), seed,
                                     random_strongly_connected_graph)
              if strongly_connected(g))
    return _oracle_sweep("theorem6", graphs, ["abb"], lambda g, _w: decide_abb_sc(g))


def verify_lifting(count: int = 300, seed: int = 0, max_states: int = 10) -> SweepResult:
    """Generated k-lifting graphs, k in 1..3: the lifting coloring must reset a b^k"""
    rng = np.random.default_rng(seed)
    rows = []
    for _ in _progress(range(count), "lifting"):
        k = int(rng.integers(1, 4))
        n = int(rng.integers(k + 1, max_states + 1))
        g = random_lifting_graph(n, k, rng)
        q0 = is_k_lifting(g, k)
        ok = q0 is not None and is_reset_word(lifting_coloring(g, k, q0).to_automaton(g), "a" + "b" * k)
        rows.append({"states": n, "k": k, "q0": q0, "agree": ok})
    frame = pd.DataFrame(rows)
    return SweepResult("lifting", frame, int((~frame["agree"]).sum()))


def verify_lemma1(max_states: int = 3, max_len: int = 2) -> SweepResult:
    """g resets w iff its chain extension by |u| resets u w"""
    words = list(all_words(max_len))
    rows = []
    graphs = chain.from_iterable(all_out_degree_two_graphs(n) for n in range(1, max_states + 1))
    for g in _progress(graphs, "lemma1"):
        for w in words:
            plain = brute_srcw(g, w) is not None
            for u in words:
                extended = brute_srcw(chain_extension(g, len(u)), u + w) is not None
                rows.append({"states": g.state_count, "u": u, "w": w,
                             "plain": plain, "extended": extended, "agree": plain == extended})
    frame = pd.DataFrame(rows)
    return SweepResult("lemma1", frame, int((~frame["agree"]).sum()))


def verify_devices(max_len: int = 8) -> SweepResult:
    """Condition 2, connectivity, and witness soundness for every D(w); condition-1 exceptions listed"""
    rows = []
    for w in _progress(list(all_words(max_len, min_len=1)), "device"):
        device = build_sink_device(w)
        report = verify_sink_device(device.automaton, device.q0, w)
        witness = lemma9_witness(w)
        row = {"word": w, "states": device.automaton.state_count, **report.to_dict(),
               "lemma9": witness, "predicate": None}
        if classify(w) == WordClass.T4:
            row["predicate"] = theorem10_audit(w).predicate
        row["agree"] = report.cond2 and report.strongly_connected and (witness is None or report.incomplete)
        rows.append(row)
    frame = pd.DataFrame(rows)
    cond1_exceptions = frame.loc[~frame["cond1"], "word"].tolist()
    t4 = frame[frame["predicate"].notna()]
    mismatches = t4.loc[t4["predicate"].astype(bool) != t4["incomplete"], "word"].tolist()
    notes = [
        f"condition 1 fails for {len(cond1_exceptions)} word(s): {', '.join(cond1_exceptions[:12])}",
        f"incompleteness predicate disagrees with D(w) for {len(mismatches)} T4 word(s): "
        f"{', '.join(mismatches[:12])}",
    ]
    return SweepResult("device", frame, int((~frame["agree"]).sum()), notes)


def _random_instances(random_count: int, seed: int) -> List[WSatInstance]:
    """Seeded instances with at most three variables and two clauses, small enough for brute force"""
    rng = np.random.default_rng(seed)
    pool = []
    for _ in range(random_count):
        variables = int(rng.integers(1, 4))
        pool.append(random_instance(variables, int(rng.integers(1, 3)), rng))
    return pool


def _gadget_rows(word: str, family: str, instances: Sequence[WSatInstance]) -> List[Dict]:
    rows = []
    for phi in _progress(instances, family):
        gadget = build_gadget_for_word(word, phi, family)
        witness = brute_srcw(gadget.graph, word)
        solution = solve(phi)
        row = {"word": word, "variables": phi.variable_count, "clauses": len(phi.clauses),
               "states": gadget.graph.state_count, "oracle": witness is not None,
               "satisfiable": solution is not None}
        extracted_ok = witness is None or check(phi, extract_assignment(gadget, witness))
        colored_ok = solution is None or is_reset_word(
            color_gadget(gadget, solution).to_automaton(gadget.graph), word
        )
        row["round_trip"] = extracted_ok and colored_ok
        row["agree"] = row["oracle"] == row["satisfiable"] and row["round_trip"]
        rows.append(row)
    return rows


def verify_t3(k: int = 2, instances: Optional[Sequence[WSatInstance]] = None,
              random_count: int = 0, seed: int = 0) -> SweepResult:
    word = "a" + "b" * k
    pool = instances or [*instance_matrix(), *_random_instances(random_count, seed)]
    frame = pd.DataFrame(_gadget_rows(word, T3, pool))
    return SweepResult("t3", frame, int((~frame["agree"]).sum()))


def verify_t4(words: Sequence[str] = ("aba", "abba"),
              instances: Optional[Sequence[WSatInstance]] = None,
              random_count: int = 0, seed: int = 0) -> SweepResult:
    pool = instances or [*instance_matrix(), *_random_instances(random_count, seed)]
    rows = []
    for word in words:
        rows.extend(_gadget_rows(word, T4, pool))
    frame = pd.DataFrame(rows)
    return SweepResult("t4", frame, int((~frame["agree"]).sum()))


def verify_sc(word: str = "abba", count: int = 5, random_count: int = 0, seed: int = 0) -> SweepResult:
    """Structure and the satisfiable direction of the composed gadget"""
    fixed = islice((phi for phi in instance_matrix() if solve(phi) is not None), count)
    sampled = (phi for phi in _random_instances(random_count, seed) if solve(phi) is not None)
    rows = []
    for phi in _progress(list(chain(fixed, sampled)), "sc"):
        gadget = build_gadget_sc(word, phi)
        g = gadget.graph
        coloring = color_gadget_sc(gadget, solve(phi))
        row = {"word": word, "states": g.state_count,
               "strongly_connected": strongly_connected(g), "aperiodic": is_aperiodic(g),
               "out_degree": constant_out_degree(g),
               "resets": is_reset_word(coloring.to_automaton(g), word)}
        row["agree"] = row["strongly_connected"] and row["aperiodic"] and row["out_degree"] == 2 and row["resets"]
        rows.append(row)
    frame = pd.DataFrame(rows)
    return SweepResult("sc", frame, int((~frame["agree"]).sum()),
                       ["the unsatisfiable direction is not checked (graph too large for brute force)"])


def _given(value: Optional[int], default: int) -> int:
    return default if value is None else value


def run_scope(scope: str, max_states: Optional[int] = None, seed: Optional[int] = None,
              random_count: Optional[int] = None) -> SweepResult:
    """
    Dispatch one verify scope with CLI-sized defaults

    Options a scope has no use for are refused, never ignored.
    """
    if scope not in SCOPES:
        raise PreconditionError(f"Unknown verify scope {scope!r}")
    if scope in EXHAUSTIVE_SCOPES and (seed is not None or random_count is not None):
        raise PreconditionError(f"Scope {scope!r} is exhaustive; seed and sample count do not apply")
    if scope in GADGET_SCOPES and max_states is not None:
        raise PreconditionError(f"Scope {scope!r} sweeps W-SAT instances; a state bound does not apply")
    seed = _given(seed, 0)

    if scope == "device":
        return verify_devices(_given(max_states, 8))
    if scope == "lemma1":
        return verify_lemma1(_given(max_states, 3))
    if scope == "t1":
        return verify_t1(_given(max_states, 3), _given(random_count, 200), seed)
    if scope == "t2":
        return verify_t2(_given(max_states, 3), _given(random_count, 200), seed)
    if scope == "theorem6":
        return verify_theorem6(_given(max_states, 5), _given(random_count, 10_000), seed)
    if scope == "lifting":
        return verify_lifting(_given(random_count, 300), seed, _given(max_states, 10))
    if scope == "t3":
        return verify_t3(random_count=_given(random_count, 10), seed=seed)
    if scope == "t4":
        return verify_t4(random_count=_given(random_count, 10), seed=seed)
    return verify_sc(random_count=_given(random_count, 10), seed=seed)


def measure_abb_scaling(sizes: Sequence[int] = (125, 250, 500, 1000), seed: int = 0,
                        repeats: int = 3) -> Dict:
    """
    Median decide_abb_sc time per size and the slope of the log-log fit

    Returns:
        {"frame": per-size medians, "degree": fitted exponent}
    """
    rng = np.random.default_rng(seed)
    rows = []
    for n in _progress(sizes, "scaling"):
        times = []
        for _ in range(repeats):
            g = random_strongly_connected_graph(n, rng)
            start = time.perf_counter()
            decide_abb_sc(g)
            times.append(time.perf_counter() - start)
        rows.append({"states": n, "median_seconds": float(np.median(times))})
    frame = pd.DataFrame(rows)
    degree, _intercept = np.polyfit(np.log(frame["states"]), np.log(frame["median_seconds"]), 1)
    say(f"🔍 abb decider scaling exponent ≈ {degree:.2f}")
    return {"frame": frame, "degree": float(degree)}
