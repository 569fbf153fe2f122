"""Two-level cascade transformations over ``Y x Z``.

A cascade is a pair ``(top, dep)``: ``top`` acts on the top states ``Y`` and
``dep`` picks a bottom transformation for each top state.  The action is::

    (y, z) * (top, dep) = (y * top, z * dep(y))

``dep`` is stored sparsely; top states without an entry act as the identity.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .core import Transformation, bfs_closure

__all__ = [
    "DependencyFunction",
    "CascadeTransformation",
    "CascadeProduct",
    "cascade_act",
    "cascade_compose",
    "flatten",
    "gap_format",
    "compact_format",
    "format_cascade",
]


class DependencyFunction:
    """Sparse map from top states to bottom transformations.

    Identity entries are dropped on construction, so ``len(d)`` is the number
    of non-trivial dependencies.
    """

    __slots__ = ("bottom_size", "_map", "_key")

    def __init__(self, entries: Mapping[int, Transformation], bottom_size: int):
        self.bottom_size = bottom_size
        kept = {}
        for y in sorted(entries):
            u = entries[y]
            if u.degree != bottom_size:
                raise ValueError(f"dependency at {y} has degree {u.degree}, expected {bottom_size}")
            if not u.is_identity():
                kept[y] = u
        self._map = kept
        self._key = tuple((y, u._img) for y, u in kept.items())

    def __call__(self, y: int) -> Transformation:
        u = self._map.get(y)
        return Transformation.identity(self.bottom_size) if u is None else u

    def __len__(self) -> int:
        return len(self._map)

    def items(self):
        return self._map.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DependencyFunction):
            return NotImplemented
        return self._key == other._key and self.bottom_size == other.bottom_size

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        body = ", ".join(f"{y}: {u}" for y, u in self._map.items())
        return f"DependencyFunction({{{body}}}, {self.bottom_size})"


class CascadeTransformation:
    __slots__ = ("top", "dep", "_hash")

    def __init__(self, top: Transformation, dep, bottom_size: Optional[int] = None):
        if not isinstance(dep, DependencyFunction):
            if bottom_size is None:
                raise ValueError("bottom_size is required when dep is a plain mapping")
            dep = DependencyFunction(dep, bottom_size)
        for y, _ in dep.items():
            if not 1 <= y <= top.degree:
                raise ValueError(f"dependency on top state {y} outside 1..{top.degree}")
        self.top = top
        self.dep = dep
        self._hash = hash((top, dep))

    @classmethod
    def identity(cls, top_size: int, bottom_size: int) -> "CascadeTransformation":
        return cls(Transformation.identity(top_size), {}, bottom_size)

    @property
    def top_size(self) -> int:
        return self.top.degree

    @property
    def bottom_size(self) -> int:
        return self.dep.bottom_size

    @property
    def dependency_count(self) -> int:
        """Non-identity entries, counting the top transformation as one."""
        return len(self.dep) + (0 if self.top.is_identity() else 1)

    def __call__(self, state: tuple[int, int]) -> tuple[int, int]:
        return cascade_act(state, self)

    def __mul__(self, other: "CascadeTransformation") -> "CascadeTransformation":
        return cascade_compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CascadeTransformation):
            return NotImplemented
        return self.top == other.top and self.dep == other.dep

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"<trans cascade with 2 levels with ({self.top_size}, {self.bottom_size}) pts, "
            f"{self.dependency_count} dependencies>"
        )


def cascade_act(state: tuple[int, int], c: CascadeTransformation) -> tuple[int, int]:
    y, z = state
    if not 1 <= y <= c.top_size:
        raise ValueError(f"top state {y} outside 1..{c.top_size}")
    if not 1 <= z <= c.bottom_size:
        raise ValueError(f"bottom state {z} outside 1..{c.bottom_size}")
    u = c.dep._map.get(y)
    return c.top(y), z if u is None else u(z)


def cascade_compose(c1: CascadeTransformation, c2: CascadeTransformation) -> CascadeTransformation:
    """``c1`` then ``c2``: ``(t1 t2, y -> d1(y) d2(y t1))``."""
    if c1.top_size != c2.top_size or c1.bottom_size != c2.bottom_size:
        raise ValueError(
            f"size mismatch: ({c1.top_size}, {c1.bottom_size}) vs ({c2.top_size}, {c2.bottom_size})"
        )
    t1 = c1.top._img
    d1, d2 = c1.dep._map, c2.dep._map
    entries = {}
    for y0 in range(len(t1)):
        y = y0 + 1
        u1 = d1.get(y)
        u2 = d2.get(t1[y0] + 1)
        if u1 is None:
            if u2 is not None:
                entries[y] = u2
        elif u2 is None:
            entries[y] = u1
        else:
            entries[y] = u1 * u2
    return CascadeTransformation(c1.top * c2.top, DependencyFunction(entries, c1.bottom_size))


def flatten(c: CascadeTransformation) -> Transformation:
    """Encode ``(y, z)`` as ``(y - 1) * |Z| + z`` and return the induced map."""
    nz = c.bottom_size
    images = []
    for y in range(1, c.top_size + 1):
        y2 = c.top(y)
        u = c.dep(y)
        for z in range(1, nz + 1):
            images.append((y2 - 1) * nz + u(z))
    return Transformation(images)


def _printed_length(t: Transformation) -> int:
    moved = [x for x in range(1, t.degree + 1) if t(x) != x]
    if not moved:
        return 0
    return max(max(moved), max(t(x) for x in moved))


def gap_format(t: Transformation) -> str:
    """``Transformation( [ 2, 5, 4, 2, 3 ] )`` with trailing fixed points trimmed."""
    k = _printed_length(t)
    if k == 0:
        return "IdentityTransformation"
    return "Transformation( [ " + ", ".join(str(i) for i in t.images[:k]) + " ] )"


def compact_format(t: Transformation) -> str:
    """``Transformation([2,5,4,2,3])``, trimmed like :func:`gap_format`."""
    k = _printed_length(t)
    if k == 0:
        return "IdentityTransformation"
    return "Transformation([" + ",".join(str(i) for i in t.images[:k]) + "])"


def format_cascade(c: CascadeTransformation, style: str = "gap") -> list[str]:
    """Listing lines for a cascade: a depth-1 block for the top, a depth-2 block for the deps."""
    if style == "gap":
        fmt, root, key = gap_format, "[  ]", "[ {} ]"
    elif style == "compact":
        fmt, root, key = compact_format, "[]", "[{}]"
    else:
        raise ValueError(f"unknown listing style {style!r}")
    top_deps = 0 if c.top.is_identity() else 1
    lines = [f"Dependency function of depth 1 with {top_deps} dependencies."]
    if top_deps:
        lines.append(f"{root} -> {fmt(c.top)}")
    lines.append(f"Dependency function of depth 2 with {len(c.dep)} dependencies.")
    for y, u in c.dep.items():
        lines.append(f"{key.format(y)} -> {fmt(u)}")
    return lines


class CascadeProduct:
    """The cascade semigroup generated by a list of cascade transformations."""

    def __init__(self, generators: Iterable[CascadeTransformation], budget: Optional[int] = None):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("at least one generator is required")
        sizes = {(c.top_size, c.bottom_size) for c in self.generators}
        if len(sizes) != 1:
            raise ValueError(f"generators have mixed sizes {sorted(sizes)}")
        self.top_size, self.bottom_size = sizes.pop()
        self.budget = budget
        self._elements: Optional[list[CascadeTransformation]] = None
        self._words: Optional[list[tuple[int, ...]]] = None

    def _enumerate(self) -> None:
        if self._elements is None:
            self._elements, self._words = bfs_closure(self.generators, cascade_compose, self.budget)

    @property
    def elements(self) -> list[CascadeTransformation]:
        self._enumerate()
        return self._elements

    @property
    def words(self) -> list[tuple[int, ...]]:
        self._enumerate()
        return self._words

    def evaluate(self, word: Sequence[int]) -> CascadeTransformation:
        c = self.generators[word[0]]
        for k in word[1:]:
            c = c * self.generators[k]
        return c

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return (
            f"<cascade product with ({self.top_size}, {self.bottom_size}) pts, "
            f"{len(self.generators)} generators>"
        )

