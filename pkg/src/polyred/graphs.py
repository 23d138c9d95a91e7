"""Combinatorial input data: graphs and 0/1 incidence matrices.

Node and edge insertion order is part of the contract: incident-edge lists
E(v) are reported in edge insertion order, which pins down the cyclic
triples of the three-index assignment construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with named nodes, no loops, no multi-edges."""

    nodes: tuple
    edges: tuple  # pairs (u, v) with u before v in node order

    def __post_init__(self):
        pos = {}
        for i, v in enumerate(self.nodes):
            if v in pos:
                raise ValidationError(f"duplicate node {v!r}")
            pos[v] = i
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValidationError(f"edge {e!r} is not a pair")
            u, v = e
            if u == v:
                raise ValidationError(f"loop at {u!r}")
            if u not in pos or v not in pos:
                raise ValidationError(f"edge {e!r} uses unknown node")
            if pos[u] > pos[v]:
                raise ValidationError(f"edge {e!r} endpoints out of node order")
            key = (u, v)
            if key in seen:
                raise ValidationError(f"duplicate edge {e!r}")
            seen.add(key)

    @staticmethod
    def make(nodes, edges) -> "Graph":
        """Build a graph, normalizing edge endpoint order to node order."""
        nodes = tuple(nodes)
        pos = {v: i for i, v in enumerate(nodes)}
        norm = []
        for u, v in edges:
            if u not in pos or v not in pos:
                raise ValidationError(f"edge ({u!r}, {v!r}) uses unknown node")
            if pos[u] > pos[v]:
                u, v = v, u
            norm.append((u, v))
        return Graph(nodes, tuple(norm))

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def node_pos(self, v) -> int:
        return self.nodes.index(v)

    def isolated_nodes(self) -> tuple:
        touched = {u for e in self.edges for u in e}
        return tuple(v for v in self.nodes if v not in touched)

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def incident_edges(self, v) -> tuple:
        """Edges containing v, in edge insertion order."""
        return tuple(e for e in self.edges if v in e)

    def has_edge(self, u, v) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges


def complete_graph(k: int, prefix: str = "v") -> Graph:
    nodes = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    edges = tuple((nodes[i], nodes[j]) for i in range(k) for j in range(i + 1, k))
    return Graph(nodes, edges)


def path_graph(k: int, prefix: str = "v") -> Graph:
    nodes = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    return Graph(nodes, tuple((nodes[i], nodes[i + 1]) for i in range(k - 1)))


def cycle_graph(k: int, prefix: str = "v") -> Graph:
    if k < 3:
        raise ValidationError("cycle needs at least 3 nodes")
    nodes = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    edges = [(nodes[i], nodes[i + 1]) for i in range(k - 1)]
    edges.append((nodes[0], nodes[-1]))
    return Graph(nodes, tuple(edges))


def edgeless_graph(k: int, prefix: str = "v") -> Graph:
    return Graph(tuple(f"{prefix}{i}" for i in range(1, k + 1)), ())


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix given by rows of column indices (0-based), n_cols wide."""

    n_cols: int
    rows: tuple  # tuple of sorted tuples of column indices

    def __post_init__(self):
        for r in self.rows:
            if any(not (0 <= j < self.n_cols) for j in r):
                raise ValidationError(f"row {r!r} has a column outside 0..{self.n_cols - 1}")
            if len(set(r)) != len(r):
                raise ValidationError(f"row {r!r} repeats a column")
            if tuple(sorted(r)) != tuple(r):
                raise ValidationError(f"row {r!r} is not sorted")

    @staticmethod
    def make(n_cols: int, rows) -> "IncidenceMatrix":
        return IncidenceMatrix(n_cols, tuple(tuple(sorted(set(r))) for r in rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def require_row_weight(self, w: int) -> None:
        for i, r in enumerate(self.rows):
            if len(r) != w:
                raise ValidationError(f"row {i} has {len(r)} ones, expected exactly {w}")


def edge_incidence(g: Graph) -> IncidenceMatrix:
    """Edge-node incidence: one row per edge with the two endpoint columns."""
    pos = {v: i for i, v in enumerate(g.nodes)}
    rows = tuple(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges)
    return IncidenceMatrix(g.n_nodes, rows)


def conflict_graph(a: IncidenceMatrix) -> Graph:
    """Graph on the columns of ``a``; two columns adjacent iff they share a row."""
    nodes = tuple(range(a.n_cols))
    seen = set()
    edges = []
    for row in a.rows:
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                e = (row[i], row[j])
                if e not in seen:
                    seen.add(e)
                    edges.append(e)
    return Graph(nodes, tuple(sorted(edges)))
