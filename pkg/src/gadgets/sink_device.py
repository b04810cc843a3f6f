"""
Sink devices
Builds the partial automaton D(w) and checks the sink-device conditions
"""

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from src.automata.automaton import PartialAutomaton
from src.graphs.multigraph import strongly_connected
from src.utils.errors import PreconditionError
from src.words.binary_words import (
    ALPHABET,
    classify,
    factors,
    other_letter,
    prefixes,
    suffixes,
    theorem10_applicable,
    WordClass,
)


@dataclass
class SinkDevice:
    """D(w): states are named by words, state 0 is [ε] = q0"""
    automaton: PartialAutomaton
    labels: Tuple[str, ...]
    word: str
    q0: int = 0

    def state_of(self, label: str) -> int:
        return self.labels.index(label)


@dataclass
class DeviceReport:
    cond1: bool
    cond2: bool
    strongly_connected: bool
    incomplete: bool
    suffix_stable: bool
    cond1_failures: List[str]

    def to_dict(self) -> Dict:
        return asdict(self)


def device_labels(w: str) -> Tuple[str, ...]:
    """Factors u of w none of whose nonempty prefixes is a suffix of w; ε first, then by length"""
    ends = suffixes(w)
    labels = [
        u for u in factors(w)
        if not any(u[:i] in ends for i in range(1, len(u) + 1))
    ]
    return tuple(sorted(labels, key=lambda u: (len(u), u)))


def build_sink_device(w: str) -> SinkDevice:
    """
    Literal construction of D(w)

    [u] -x-> [ux] when both are states; [u] -x-> [ε] when ux is a suffix
    of w, or when vx is a prefix of w for some suffix v of u. Anything
    else stays undefined.
    """
    if not w:
        raise PreconditionError("Sink devices need a nonempty word")
    labels = device_labels(w)
    index = {label: position for position, label in enumerate(labels)}
    starts = prefixes(w)
    ends = suffixes(w)

    automaton = PartialAutomaton(len(labels))
    for u in labels:
        for x in ALPHABET:
            ux = u + x
            if ux in index:
                automaton.define(index[u], x, index[ux])
            elif ux in ends:
                automaton.define(index[u], x, index[""])
            elif any(u[i:] + x in starts for i in range(len(u) + 1)):
                automaton.define(index[u], x, index[""])
    return SinkDevice(automaton=automaton, labels=labels, word=w)


def verify_sink_device(p: PartialAutomaton, q0: int, w: str) -> DeviceReport:
    """Evaluate the sink-device conditions exactly as stated"""
    cond1_failures = sorted(
        (u for u in prefixes(w) if p.run(q0, u) != q0),
        key=len,
    )
    return DeviceReport(
        cond1=not cond1_failures,
        cond2=all(p.run(s, w) == q0 for s in range(p.state_count)),
        strongly_connected=strongly_connected(p.underlying_graph()),
        incomplete=bool(p.undefined()),
        suffix_stable=all(p.run(q0, v) == q0 for v in suffixes(w)),
        cond1_failures=cond1_failures,
    )


def lemma9_witness(w: str) -> Optional[str]:
    """
    First device label u with uy not a factor and no nonempty suffix of uy a prefix

    y is the letter w does not start with. A hit proves D(w) incomplete.
    """
    if not w:
        raise PreconditionError("Need a nonempty word")
    y = other_letter(w[0])
    found = factors(w)
    starts = prefixes(w)
    for u in device_labels(w):
        uy = u + y
        if uy in found:
            continue
        if any(uy[i:] in starts for i in range(len(uy))):
            continue
        return u
    return None


@dataclass
class Theorem10Audit:
    word: str
    predicate: bool
    incomplete: bool

    @property
    def agrees(self) -> bool:
        return self.predicate == self.incomplete


def theorem10_audit(w: str) -> Theorem10Audit:
    """Literal applicability predicate next to the real incompleteness of D(w)"""
    if classify(w) != WordClass.T4:
        raise PreconditionError(f"Word {w!r} is not in T4")
    device = build_sink_device(w)
    return Theorem10Audit(
        word=w,
        predicate=theorem10_applicable(w),
        incomplete=bool(device.automaton.undefined()),
    )
