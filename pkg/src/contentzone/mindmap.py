"""Incremental tree of per-actor statistics, exportable as DOT or JSON.

The tree only ever grows. Actor nodes are added the first time an actor is
seen, statistic leaves are overwritten in place with cumulative values, and
no node is ever removed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .anaphora import Actor
from .zoner import ZoneVariables

STATISTIC_KEYS = (
    "gender",
    "sentence_count",
    "token_count",
    "most_occurring_word",
    "most_occurring_pattern",
    "extracted_quantity",
)


@dataclass
class Node:
    node_id: str
    name: str
    key: Optional[str] = None
    value: object = None
    children: list["Node"] = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.key is None:
            return self.name
        return f"{self.name}\n{self.key}={_fmt(self.value)}"

    def to_json(self) -> dict:
        out: dict = {"id": self.node_id, "name": self.name}
        if self.key is not None:
            out["key"] = self.key
            out["value"] = self.value
        if self.children or self.key is None:
            out["children"] = [c.to_json() for c in self.children]
        return out


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4f}"
    if isinstance(value, (list, tuple)):
        return f"{value[0]} ({value[1]})"
    return str(value)


class MindMap:
    def __init__(self, stream_id: str = "stream"):
        self._next = 0
        self.root = self._new(stream_id)
        self._actors: dict[str, Node] = {}
        self._leaves: dict[tuple[str, str], Node] = {}

    def _new(self, name, key=None, value=None) -> Node:
        node = Node(f"n{self._next}", name, key, value)
        self._next += 1
        return node

    @property
    def node_count(self) -> int:
        return self._next

    def actor_node(self, name: str) -> Optional[Node]:
        return self._actors.get(name)

    def add_actor(self, actor: Actor) -> Node:
        node = self._actors.get(actor.name)
        if node is None:
            node = self._new(actor.name)
            self.root.children.append(node)
            self._actors[actor.name] = node
            for key in STATISTIC_KEYS:
                leaf = self._new(actor.name, key)
                node.children.append(leaf)
                self._leaves[(actor.name, key)] = leaf
            self.set(actor.name, "gender", actor.gender.value)
            self.set_variables(actor.name, ZoneVariables())
        return node

    def set(self, actor: str, key: str, value) -> None:
        self._leaves[(actor, key)].value = value

    def set_variables(self, actor: str, variables: ZoneVariables) -> None:
        for key, value in variables.to_json().items():
            self.set(actor, key, value)

    def walk(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_json(self) -> dict:
        return self.root.to_json()

    def to_dot(self) -> str:
        lines = ["digraph mindmap {", '\tnode [shape=box, fontname="Helvetica"];']
        for node in self.walk():
            label = node.label.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
            lines.append(f'\t{node.node_id} [label="{label}"];')
        for node in self.walk():
            for child in node.children:
                lines.append(f"\t{node.node_id} -> {child.node_id};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def update_mindmap(
    mindmap: MindMap,
    variables: Mapping[str, ZoneVariables],
    actors: Sequence[Actor],
) -> MindMap:
    for actor in actors:
        mindmap.add_actor(actor)
        if actor.name in variables:
            mindmap.set_variables(actor.name, variables[actor.name])
    return mindmap
