"""
Vertex colorings: the value type, validation and first-fit greedy coloring
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence

from core.errors import DomainError
from core.graph import Graph


@dataclass(frozen=True)
class Coloring:
    assignment: Mapping[int, int]
    num_colors: int

    @classmethod
    def from_assignment(cls, assignment: Mapping[int, int]) -> "Coloring":
        assignment = dict(sorted(assignment.items()))
        return cls(assignment, len(set(assignment.values())))

    def color_of(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> Dict[int, list]:
        groups: Dict[int, list] = {}
        for v, c in sorted(self.assignment.items()):
            groups.setdefault(c, []).append(v)
        return groups

    def to_dict(self) -> Dict:
        return {"colors": [self.assignment[v] for v in sorted(self.assignment)], "k": self.num_colors}

    @classmethod
    def from_dict(cls, payload: Dict) -> "Coloring":
        return cls.from_assignment(dict(enumerate(payload["colors"])))


def coloring_violation(g: Graph, c: Coloring) -> Optional[str]:
    """First reason c is not a proper total coloring of g, or None"""
    for v in g.vertices:
        if v not in c.assignment:
            return f"vertex {v} is uncolored"
    extra = [v for v in c.assignment if not 0 <= v < g.order]
    if extra:
        return f"vertices {sorted(extra)} are not in the graph"
    if any(not isinstance(col, int) or col < 0 for col in c.assignment.values()):
        return "colors must be non-negative integers"
    for u, v in g.edges:
        if c.assignment[u] == c.assignment[v]:
            return f"edge ({u}, {v}) is monochromatic"
    if c.num_colors != len(set(c.assignment.values())):
        return f"num_colors {c.num_colors} does not match the colors used"
    return None


def validate_coloring(g: Graph, c: Coloring) -> bool:
    return coloring_violation(g, c) is None


def least_free_color(used: Iterable[int]) -> int:
    used = set(used)
    color = 0
    while color in used:
        color += 1
    return color


def first_fit(g: Graph, order: Iterable[int], base: Optional[Mapping[int, int]] = None) -> Dict[int, int]:
    """Extend base by giving each vertex in order the least color unused by colored neighbors"""
    colors = dict(base or {})
    for v in order:
        colors[v] = least_free_color(colors[u] for u in g.adjacency[v] if u in colors)
    return colors


def greedy_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> Coloring:
    """First-fit coloring along order (default ascending id)"""
    order = list(g.vertices) if order is None else list(order)
    if sorted(order) != list(g.vertices):
        raise DomainError("order must be a permutation of the vertices")
    return Coloring.from_assignment(first_fit(g, order))
