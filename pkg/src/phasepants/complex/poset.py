"""Graded face posets given by their covering relations."""
from __future__ import annotations

import json
from typing import Callable, Hashable, Iterable, Mapping


def _label_json(label):
    if hasattr(label, "to_json"):
        return label.to_json()
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    if isinstance(label, (int, str, float)) or label is None:
        return label
    return str(label)


def _label_text(label) -> str:
    if hasattr(label, "render"):
        return label.render()
    return str(label)


class FacePoset:
    """Elements with a dimension, plus covers (lower, upper) whose dims differ by one.

    Elements are stored in a fixed order (dimension, then label) so every
    traversal is deterministic.
    """

    def __init__(self, elements: Iterable[tuple[Hashable, int]], covers: Iterable[tuple[Hashable, Hashable]] = ()):
        dims: dict = {}
        for label, d in elements:
            if label in dims:
                raise ValueError(f"duplicate label {label!r}")
            dims[label] = int(d)
        try:
            order = sorted(dims, key=lambda x: (dims[x], x))
        except TypeError:
            order = sorted(dims, key=lambda x: (dims[x], repr(x)))
        self._labels = order
        self._index = {x: i for i, x in enumerate(order)}
        self._dims = [dims[x] for x in order]
        down = [set() for _ in order]
        up = [set() for _ in order]
        for lo, hi in covers:
            a, b = self._index[lo], self._index[hi]
            if self._dims[b] != self._dims[a] + 1:
                raise ValueError(f"cover {lo!r} < {hi!r} does not raise dimension by one")
            down[b].add(a)
            up[a].add(b)
        self._down = [tuple(sorted(s)) for s in down]
        self._up = [tuple(sorted(s)) for s in up]

    # -- basic access --------------------------------------------------
    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    @property
    def labels(self) -> list:
        return list(self._labels)

    def index(self, label) -> int:
        return self._index[label]

    def label(self, i: int):
        return self._labels[i]

    def dim(self, label) -> int:
        return self._dims[self._index[label]]

    def dim_at(self, i: int) -> int:
        return self._dims[i]

    @property
    def max_dim(self) -> int:
        return max(self._dims, default=-1)

    def facets_of(self, label) -> list:
        return [self._labels[j] for j in self._down[self._index[label]]]

    def cofacets_of(self, label) -> list:
        return [self._labels[j] for j in self._up[self._index[label]]]

    def down_indices(self, i: int) -> tuple[int, ...]:
        return self._down[i]

    def up_indices(self, i: int) -> tuple[int, ...]:
        return self._up[i]

    def covers(self) -> list[tuple]:
        return [(self._labels[a], self._labels[b]) for b in range(len(self)) for a in self._down[b]]

    def elements(self) -> list[tuple]:
        return [(x, d) for x, d in zip(self._labels, self._dims)]

    def f_vector(self) -> tuple[int, ...]:
        if not self._labels:
            return ()
        f = [0] * (self.max_dim + 1)
        for d in self._dims:
            f[d] += 1
        return tuple(f)

    def maximal(self) -> list:
        return [x for i, x in enumerate(self._labels) if not self._up[i]]

    # -- order ideals --------------------------------------------------
    def down_set(self, labels: Iterable) -> set:
        stack = [self._index[x] for x in labels]
        seen = set(stack)
        while stack:
            i = stack.pop()
            for j in self._down[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return {self._labels[i] for i in seen}

    def up_set(self, labels: Iterable) -> set:
        stack = [self._index[x] for x in labels]
        seen = set(stack)
        while stack:
            i = stack.pop()
            for j in self._up[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return {self._labels[i] for i in seen}

    def leq(self, a, b) -> bool:
        return a in self.down_set([b])

    def subposet(self, labels: Iterable) -> "FacePoset":
        keep = set(labels)
        elems = [(x, self.dim(x)) for x in self._labels if x in keep]
        covers = [(lo, hi) for lo, hi in self.covers() if lo in keep and hi in keep]
        return FacePoset(elems, covers)

    def relabel(self, mapping: Callable | Mapping) -> "FacePoset":
        f = mapping if callable(mapping) else mapping.__getitem__
        return FacePoset([(f(x), d) for x, d in self.elements()], [(f(a), f(b)) for a, b in self.covers()])

    @classmethod
    def from_order(cls, elements: Iterable[tuple[Hashable, int]], leq: Callable) -> "FacePoset":
        """Brute-force covers from a partial-order predicate (for small oracles)."""
        elements = list(elements)
        covers = [
            (a, b) for a, da in elements for b, db in elements if db == da + 1 and leq(a, b)
        ]
        return cls(elements, covers)

    # -- serialization -------------------------------------------------
    def to_json(self) -> dict:
        return {
            "elements": [{"label": _label_json(x), "dim": d} for x, d in self.elements()],
            "covers": [[_label_json(a), _label_json(b)] for a, b in self.covers()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "FacePoset":
        if isinstance(data, str):
            data = json.loads(data)

        def freeze(v):
            return tuple(freeze(x) for x in v) if isinstance(v, list) else (
                tuple(sorted((k, freeze(x)) for k, x in v.items())) if isinstance(v, dict) else v)

        elems = [(freeze(e["label"]), e["dim"]) for e in data["elements"]]
        covers = [(freeze(a), freeze(b)) for a, b in data["covers"]]
        return cls(elems, covers)

    def to_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
        for i, x in enumerate(self._labels):
            text = _label_text(x).replace('"', '\\"')
            lines.append(f'  n{i} [label="{text}\\ndim {self._dims[i]}"];')
        for d in range(self.max_dim + 1):
            same = " ".join(f"n{i};" for i, e in enumerate(self._dims) if e == d)
            lines.append(f"  {{ rank=same; {same} }}")
        for b in range(len(self)):
            for a in self._down[b]:
                lines.append(f"  n{a} -> n{b} [arrowhead=none];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"FacePoset(f={self.f_vector()})"


def euler_characteristic(p: FacePoset) -> int:
    return sum((-1) ** d for _, d in p.elements())


def labeled_isomorphic(p1: FacePoset, p2: FacePoset, mapping: Callable | Mapping) -> bool:
    """True iff mapping is a bijection p1 -> p2 preserving dimensions and covers."""
    f = mapping if callable(mapping) else mapping.get
    image = {}
    for x in p1:
        y = f(x)
        if y is None:
            raise ValueError(f"mapping undefined on {x!r}")
        image[x] = y
    if len(set(image.values())) != len(p1) or len(p1) != len(p2):
        return False
    if any(y not in p2 or p2.dim(y) != p1.dim(x) for x, y in image.items()):
        return False
    return {(image[a], image[b]) for a, b in p1.covers()} == set(p2.covers())
