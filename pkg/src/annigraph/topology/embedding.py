"""Rotation systems and face tracing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..errors import InvalidRotation
from ..graph import Graph


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order at every vertex (``cycles[v]`` lists neighbours of v)."""

    cycles: tuple[tuple[int, ...], ...]

    @classmethod
    def from_mapping(cls, n: int, rot: Mapping[int, Sequence[int]]) -> "RotationSystem":
        return cls(tuple(tuple(rot.get(v, ())) for v in range(n)))

    def successor(self, v: int, u: int) -> int:
        cyc = self.cycles[v]
        return cyc[(cyc.index(u) + 1) % len(cyc)]

    def to_labels(self, g: Graph) -> dict[str, list[str]]:
        return {g.labels[v]: [g.labels[u] for u in cyc] for v, cyc in enumerate(self.cycles)}


@dataclass(frozen=True)
class EmbeddingResult:
    genus: int
    rotation: RotationSystem
    faces: int


def validate_rotation(g: Graph, rot: RotationSystem) -> None:
    if len(rot.cycles) != g.order:
        raise InvalidRotation(f"rotation covers {len(rot.cycles)} vertices, graph has {g.order}")
    for v, cyc in enumerate(rot.cycles):
        if len(cyc) != len(set(cyc)) or set(cyc) != g.adj[v]:
            raise InvalidRotation(f"rotation at vertex {v} is not a cyclic order of its neighbours")


def face_walks(g: Graph, rot: RotationSystem) -> list[list[tuple[int, int]]]:
    """Orbits of darts under u->v  |->  v->succ_v(u)."""
    validate_rotation(g, rot)
    pos = [{u: i for i, u in enumerate(cyc)} for cyc in rot.cycles]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in g.edges():
        for dart in ((u, v), (v, u)):
            if dart in seen:
                continue
            walk = []
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                cyc = rot.cycles[b]
                a, b = b, cyc[(pos[b][a] + 1) % len(cyc)]
            faces.append(walk)
    return faces


def trace_faces(g: Graph, rot: RotationSystem) -> EmbeddingResult:
    """Genus of the embedding a rotation system describes.

    Disconnected graphs are treated as the disjoint union of their component
    embeddings, and an isolated vertex contributes one face of its own.
    """
    walks = face_walks(g, rot)
    isolated = sum(1 for v in range(g.order) if not g.adj[v])
    faces = len(walks) + isolated
    comps = len(g.components())
    twice = 2 * comps - g.order + g.size - faces
    if twice < 0 or twice % 2:
        raise InvalidRotation("face count violates the Euler relation")
    return EmbeddingResult(genus=twice // 2, rotation=rot, faces=faces)
