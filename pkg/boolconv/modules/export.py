"""Reading and writing topologies and reports."""

import json
from pathlib import Path
from typing import Dict, Union

from boolconv.modules.algebra import iter_bits
from boolconv.modules.errors import StructuralError
from boolconv.modules.topology import FiniteTopology, specialization_graph

PathLike = Union[str, Path]


def dumps(payload: Dict) -> str:
    """Canonical JSON: sorted keys, two-space indent."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def topology_payload(t: FiniteTopology) -> Dict:
    payload = t.to_json()
    opens = (list(iter_bits(o)) for o in t.open_sets())
    payload["open_sets"] = sorted(opens, key=lambda words: (len(words), words))
    return payload


def write_topology_json(t: FiniteTopology, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(dumps(topology_payload(t)), encoding='utf-8')
    return path


def read_topology_json(path: PathLike) -> FiniteTopology:
    """Load a topology written by ``write_topology_json``; extra keys are ignored."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except OSError as error:
        raise StructuralError(f"cannot read {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise StructuralError(f"{path} is not valid JSON: {error}") from error
    return FiniteTopology.from_json(data)


def specialization_dot(t: FiniteTopology) -> str:
    """DOT text of the specialization graph, an edge a -> b when a is in the closure of b."""
    graph = specialization_graph(t)
    lines = ['digraph specialization {', '  rankdir=BT;', '  node [shape=circle];']
    for node in sorted(graph.nodes):
        lines.append(f'  {node} [label="{t.algebra.label(node)}"];')
    for a, b in sorted(graph.edges):
        lines.append(f'  {a} -> {b};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_text(text: str, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(text, encoding='utf-8')
    return path
