"""
File formats
Pydantic documents for graphs, W-SAT instances, colorings, gadgets and run
reports, plus DOT export
"""

import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, RootModel, ValidationError

from src.automata.automaton import Coloring
from src.gadgets.gadget_graph import GadgetGraph
from src.graphs.multigraph import Graph
from src.utils.errors import ParseError
from src.wsat.instance import WSatInstance


class GraphDocument(BaseModel):
    states: int = Field(ge=1)
    edges: List[Tuple[int, int]]

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphDocument":
        return cls(states=g.state_count, edges=list(g.edges))

    def to_graph(self) -> Graph:
        return Graph(self.states, tuple(self.edges))


class WSatDocument(BaseModel):
    variables: int = Field(ge=0)
    clauses: List[Tuple[int, int, int, int]]

    @classmethod
    def from_instance(cls, phi: WSatInstance) -> "WSatDocument":
        return cls(variables=phi.variable_count, clauses=list(phi.clauses))

    def to_instance(self) -> WSatInstance:
        return WSatInstance(self.variables, tuple(self.clauses))


class StateColors(BaseModel):
    a_edge: int = Field(ge=0)
    b_edge: int = Field(ge=0)


class ColoringDocument(RootModel[List[StateColors]]):
    @classmethod
    def from_coloring(cls, coloring: Coloring) -> "ColoringDocument":
        return cls([StateColors(a_edge=a, b_edge=b) for a, b in coloring.pairs()])

    def to_coloring(self) -> Coloring:
        return Coloring.from_pairs((item.a_edge, item.b_edge) for item in self.root)


class GadgetDocument(GraphDocument):
    roles: Dict[int, str]
    word: str
    family: str
    wsat: WSatDocument

    @classmethod
    def from_gadget(cls, gadget: GadgetGraph) -> "GadgetDocument":
        return cls(
            states=gadget.graph.state_count,
            edges=list(gadget.graph.edges),
            roles=dict(enumerate(gadget.roles)),
            word=gadget.word,
            family=gadget.family,
            wsat=WSatDocument.from_instance(gadget.wsat),
        )


class RunReport(BaseModel):
    """What one CLI command did"""
    command: str
    decision: str = Field(pattern="^(yes|no|error)$")
    state_count: Optional[int] = None
    word: Optional[str] = None
    word_class: Optional[str] = None
    algorithm: Optional[str] = None
    witness: Optional[List[StateColors]] = None
    witness_path: Optional[str] = None
    seconds: float = 0.0
    oracle_agrees: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)
    details: Dict = Field(default_factory=dict)

    def to_text(self) -> str:
        """Aligned key/value lines for human mode"""
        rows = [(key, value) for key, value in self.model_dump().items() if value not in (None, [], {})]
        width = max(len(key) for key, _ in rows)
        return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows)


def _load(model, path: Path):
    try:
        return model.model_validate_json(Path(path).read_text())
    except (OSError, ValidationError) as exc:
        raise ParseError(f"Cannot read {path}: {exc}") from exc


def load_graph(path: Path) -> Graph:
    return _load(GraphDocument, path).to_graph()


def load_wsat(path: Path) -> WSatInstance:
    return _load(WSatDocument, path).to_instance()


def dump_json(document: BaseModel) -> str:
    return json.dumps(document.model_dump(), indent=2, ensure_ascii=False)


ROLE_COLORS = {
    "x": "lightblue",
    "V": "palegreen",
    "W": "khaki",
    "Z": "plum",
    "C": "lightsalmon",
    "D": "gray80",
    "F": "lightcyan",
    "chain": "lightyellow",
    "device": "orange",
}


def role_family(role: str) -> str:
    """Letters before the indices: V3,1 is V, D0=[ε] is D, [ab] is a device state"""
    if role.startswith("["):
        return "device"
    match = re.match(r"[A-Za-z]+", role)
    return match.group(0) if match else role


def to_dot(g: Graph, coloring: Optional[Coloring] = None, roles: Optional[Tuple[str, ...]] = None) -> str:
    """
    Graphviz source, one line per edge; a-edges solid, b-edges dotted,
    states filled by role family
    """
    lines = ["digraph G {"]
    for state in g.states():
        if roles is None:
            lines.append(f'  {state} [label="{state}"];')
            continue
        color = ROLE_COLORS.get(role_family(roles[state]))
        fill = f", style=filled, fillcolor={color}" if color else ""
        lines.append(f'  {state} [label="{roles[state]}"{fill}];')
    a_edges = set(coloring.a_edges) if coloring else set()
    b_edges = set(coloring.b_edges) if coloring else set()
    for position, (source, target) in enumerate(g.edges):
        if position in a_edges:
            style = ' [label="a", style=solid]'
        elif position in b_edges:
            style = ' [label="b", style=dotted]'
        else:
            style = ""
        lines.append(f"  {source} -> {target}{style};")
    lines.append("}")
    return "\n".join(lines)
