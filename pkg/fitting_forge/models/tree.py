"""
Weighted Tree Models
====================
Rooted, terminally weighted trees (genus-one dual graphs) and their text
form ``[o a [b c d]]``. Leaves may carry ``:weight`` (default 1); the root
and inner vertices have weight 0.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from fitting_forge.utils.errors import (
    DuplicateLabelError,
    TreeSyntaxError,
    WeightOnInnerVertexError,
)

LABEL = re.compile(r"[A-Za-z0-9_']+")
DEFAULT_LEAF_WEIGHT = 1


@dataclass(frozen=True, eq=False)
class WTree:
    root: str
    children: dict[str, tuple[str, ...]]
    weights: dict[str, int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WTree):
            return NotImplemented
        return (self.root, self.children, self.weights) == (other.root, other.children, other.weights)

    def __hash__(self) -> int:
        return hash(self.render())

    # ===== navigation =====

    def kids(self, v: str) -> tuple[str, ...]:
        return self.children.get(v, ())

    def parent(self, v: str) -> Optional[str]:
        return next((u for u, kids in self.children.items() if v in kids), None)

    def vertices(self) -> Iterator[str]:
        """Pre-order, children in stored order."""
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self.kids(v)))

    def __contains__(self, v: object) -> bool:
        return v in self.weights

    def is_leaf(self, v: str) -> bool:
        return not self.kids(v)

    def nonroot(self) -> list[str]:
        return [v for v in self.vertices() if v != self.root]

    def terminals(self) -> list[str]:
        return [v for v in self.nonroot() if self.is_leaf(v)]

    def descendants(self, v: str) -> list[str]:
        found = []
        stack = list(reversed(self.kids(v)))
        while stack:
            u = stack.pop()
            found.append(u)
            stack.extend(reversed(self.kids(u)))
        return found

    def ancestry(self, v: str) -> list[str]:
        """Vertices a with o < a <= v, root side first."""
        chain = []
        while v != self.root:
            chain.append(v)
            v = self.parent(v)
        return chain[::-1]

    def preorder_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices())}

    # ===== properties =====

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    def terminal_weights(self) -> list[int]:
        return sorted(self.weights[v] for v in self.terminals())

    def is_terminally_weighted(self) -> bool:
        return all((self.weights[v] > 0) == (v in self.terminals()) for v in self.vertices())

    def is_semistable(self) -> bool:
        for v in self.nonroot():
            if self.weights[v] == 0 and 1 + len(self.kids(v)) < 2:
                return False
        return True

    # ===== output =====

    def _render(self, v: str) -> str:
        if self.is_leaf(v) and v != self.root:
            weight = self.weights[v]
            return v if weight == DEFAULT_LEAF_WEIGHT else f"{v}:{weight}"
        return "[" + " ".join([v] + [self._render(u) for u in self.kids(v)]) + "]"

    def render(self) -> str:
        return self._render(self.root)

    def as_dict(self, v: Optional[str] = None) -> dict:
        v = self.root if v is None else v
        return {
            "label": v,
            "weight": self.weights[v],
            "children": [self.as_dict(u) for u in self.kids(v)],
        }

    def __str__(self) -> str:
        return self.render()


def build_tree(root: str, children: dict[str, list[str]], weights: dict[str, int]) -> WTree:
    return WTree(root, {v: tuple(kids) for v, kids in children.items() if kids}, dict(weights))


# ============================================================================
# PARSING
# ============================================================================

_TOKEN = re.compile(r"\s*(?:(?P<open>\[)|(?P<close>\])|(?P<label>[A-Za-z0-9_']+)(?::(?P<weight>\d+))?)")


class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            match = _TOKEN.match(text, i)
            if not match or match.end() == i:
                raise TreeSyntaxError(f"unexpected character {text[i]!r} at position {i} in {text!r}")
            self.tokens.append(match)
            i = match.end()
        self.pos = 0
        self.children: dict[str, list[str]] = {}
        self.weights: dict[str, int] = {}

    def _next(self):
        if self.pos >= len(self.tokens):
            raise TreeSyntaxError(f"unexpected end of input in {self.text!r}")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _declare(self, label: str) -> None:
        if label in self.weights:
            raise DuplicateLabelError(f"vertex label {label!r} used twice in {self.text!r}")
        self.weights[label] = 0

    def _leaf_weight(self, token) -> int:
        weight = token.group("weight")
        if weight is None:
            return DEFAULT_LEAF_WEIGHT
        if int(weight) == 0:
            raise TreeSyntaxError(f"leaf {token.group('label')!r} needs a positive weight in {self.text!r}")
        return int(weight)

    def vertex(self, is_root: bool = False) -> str:
        token = self._next()
        if token.group("label"):
            if is_root:
                raise TreeSyntaxError(f"a tree is written as '[root children...]', got {self.text!r}")
            label = token.group("label")
            self._declare(label)
            self.weights[label] = self._leaf_weight(token)
            return label
        if not token.group("open"):
            raise TreeSyntaxError(f"unexpected ']' at position {token.start('close')} in {self.text!r}")
        head = self._next()
        if not head.group("label"):
            raise TreeSyntaxError(f"missing vertex label at position {head.start()} in {self.text!r}")
        label = head.group("label")
        self._declare(label)
        kids = []
        while True:
            if self.pos >= len(self.tokens):
                raise TreeSyntaxError(f"unbalanced brackets in {self.text!r}")
            if self.tokens[self.pos].group("close"):
                self.pos += 1
                break
            kids.append(self.vertex())
        if kids or is_root:
            if head.group("weight") is not None:
                raise WeightOnInnerVertexError(f"inner vertex {label!r} cannot carry a weight")
        else:
            self.weights[label] = self._leaf_weight(head)
        self.children[label] = kids
        return label

    def parse(self) -> WTree:
        if not self.tokens:
            raise TreeSyntaxError("empty tree")
        root = self.vertex(is_root=True)
        if self.pos != len(self.tokens):
            extra = self.tokens[self.pos]
            raise TreeSyntaxError(f"trailing input at position {extra.start()} in {self.text!r}")
        if not self.children[root]:
            raise TreeSyntaxError(f"a tree needs at least one vertex besides the root, got {self.text!r}")
        return build_tree(root, self.children, self.weights)


def parse_tree(text: str) -> WTree:
    return _TreeParser(text).parse()
