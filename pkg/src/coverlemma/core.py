"""Transformations and finite transformation semigroups.

States are the integers ``1..n`` at every public interface.  Internally a
transformation keeps a 0-based image tuple, which makes composition a single
tuple comprehension.  Composition acts on the right: ``(a * b)(x) = b(a(x))``.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence, TypeVar

__all__ = [
    "BudgetExceeded",
    "Transformation",
    "PartialTransformation",
    "TransformationSemigroup",
    "compose",
    "act",
    "closure",
    "is_permutation",
    "image_set",
    "is_idempotent",
    "is_aperiodic",
    "bfs_closure",
]

E = TypeVar("E", bound=Hashable)


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration grows past its element budget.

    ``partial`` holds whatever was enumerated before giving up.
    """

    def __init__(self, budget: int, partial=None):
        super().__init__(f"enumeration exceeded budget of {budget} elements")
        self.budget = budget
        self.partial = partial


class Transformation:
    """A total map on ``{1..n}`` given by its 1-based image list."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("a transformation needs at least one point")
        for i in images:
            if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n:
                raise ValueError(f"image {i!r} outside 1..{n} in {list(images)}")
        self._img = tuple(i - 1 for i in images)
        self._hash = hash(self._img)

    @classmethod
    def _raw(cls, img: tuple) -> "Transformation":
        # trusted 0-based constructor, skips validation
        t = object.__new__(cls)
        t._img = img
        t._hash = hash(img)
        return t

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def constant(cls, n: int, j: int) -> "Transformation":
        """The constant map ``c_j`` on ``n`` points."""
        if not 1 <= j <= n:
            raise ValueError(f"constant value {j} outside 1..{n}")
        return cls._raw((j - 1,) * n)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    def __call__(self, x: int) -> int:
        return act(x, self)

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Transformation":
        if k < 1:
            raise ValueError("only positive powers are defined in a semigroup")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Transformation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: "Transformation") -> bool:
        return (len(self._img), self._img) < (len(other._img), other._img)

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self._img)

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self._img))

    def restrict(self, k: int) -> "Transformation":
        """The map on ``{1..k}``; the first ``k`` points must map into ``{1..k}``."""
        img = self._img[:k]
        if any(i >= k for i in img):
            raise ValueError(f"{self} does not map 1..{k} into itself")
        return Transformation._raw(img)

    def pad(self, n: int) -> "Transformation":
        """Extend to ``n`` points, fixing the new ones."""
        if n < self.degree:
            raise ValueError("cannot pad to a smaller degree")
        return Transformation._raw(self._img + tuple(range(self.degree, n)))


def compose(a: Transformation, b: Transformation) -> Transformation:
    """``a`` then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b._img
    return Transformation._raw(tuple([bi[i] for i in a._img]))


def act(x: int, s: Transformation) -> int:
    if not 1 <= x <= s.degree:
        raise ValueError(f"state {x} outside 1..{s.degree}")
    return s._img[x - 1] + 1


def is_permutation(s: Transformation) -> bool:
    return len(set(s._img)) == len(s._img)


def image_set(s: Transformation) -> tuple[int, ...]:
    return tuple(sorted({i + 1 for i in s._img}))


def is_idempotent(s: Transformation) -> bool:
    return s * s == s


class PartialTransformation:
    """A partial map from ``{1..degree}`` to ``{1..codegree}``.

    Only used for labelling maps, where source and target sizes differ.
    ``None`` marks an undefined point.
    """

    __slots__ = ("images", "codegree")

    def __init__(self, images: Iterable[Optional[int]], codegree: Optional[int] = None):
        self.images = tuple(images)
        defined = [i for i in self.images if i is not None]
        if codegree is None:
            codegree = len(self.images)
        self.codegree = codegree
        for i in defined:
            if not 1 <= i <= codegree:
                raise ValueError(f"image {i} outside 1..{codegree}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, i in enumerate(self.images, 1) if i is not None)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted({i for i in self.images if i is not None}))

    def __call__(self, x: int) -> Optional[int]:
        if not 1 <= x <= self.degree:
            raise ValueError(f"state {x} outside 1..{self.degree}")
        return self.images[x - 1]

    def __mul__(self, other: "PartialTransformation") -> "PartialTransformation":
        if self.codegree != other.degree:
            raise ValueError(f"cannot compose: codegree {self.codegree} vs degree {other.degree}")
        return PartialTransformation(
            (None if i is None else other.images[i - 1] for i in self.images),
            other.codegree,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialTransformation):
            return NotImplemented
        return self.images == other.images and self.codegree == other.codegree

    def __hash__(self) -> int:
        return hash((self.images, self.codegree))

    def __repr__(self) -> str:
        return f"PartialTransformation({list(self.images)}, codegree={self.codegree})"

    def is_injective(self) -> bool:
        defined = [i for i in self.images if i is not None]
        return len(defined) == len(set(defined))

    def inverse(self) -> "PartialTransformation":
        if not self.is_injective():
            raise ValueError("only injective partial maps can be inverted")
        inv: list[Optional[int]] = [None] * self.codegree
        for x, i in enumerate(self.images, 1):
            if i is not None:
                inv[i - 1] = x
        return PartialTransformation(inv, self.degree)

    def to_transformation(self) -> Transformation:
        if self.codegree != self.degree or None in self.images:
            raise ValueError("partial map is not a total self-map")
        return Transformation(self.images)


def bfs_closure(
    gens: Sequence[E],
    multiply: Callable[[E, E], E],
    budget: Optional[int] = None,
) -> tuple[list[E], list[tuple[int, ...]]]:
    """Right-multiplication closure of ``gens``, breadth first.

    Returns the elements in discovery order together with one generator word
    (tuple of 0-based generator indices) per element.  Elements are visited
    by word length, then by generator index, so the order is deterministic.
    """
    elements: list[E] = []
    words: list[tuple[int, ...]] = []
    seen: dict[E, int] = {}
    for k, g in enumerate(gens):
        if g not in seen:
            seen[g] = len(elements)
            elements.append(g)
            words.append((k,))
    if budget is not None and len(elements) > budget:
        raise BudgetExceeded(budget, (elements, words))
    queue = deque(range(len(elements)))
    while queue:
        i = queue.popleft()
        s, w = elements[i], words[i]
        for k, g in enumerate(gens):
            p = multiply(s, g)
            if p not in seen:
                seen[p] = len(elements)
                elements.append(p)
                words.append(w + (k,))
                if budget is not None and len(elements) > budget:
                    raise BudgetExceeded(budget, (elements, words))
                queue.append(seen[p])
    return elements, words


class TransformationSemigroup:
    """The semigroup generated by a list of transformations of one degree.

    Elements are enumerated on first use and cached.  Each element comes with
    a shortest-found generator word (0-based generator indices).
    """

    def __init__(self, generators: Iterable[Transformation], budget: Optional[int] = None):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("at least one generator is required")
        degrees = {g.degree for g in self.generators}
        if len(degrees) != 1:
            raise ValueError(f"generators have mixed degrees {sorted(degrees)}")
        self.degree = degrees.pop()
        self.budget = budget
        self._elements: Optional[list[Transformation]] = None
        self._words: Optional[list[tuple[int, ...]]] = None
        self._index: Optional[dict[Transformation, int]] = None

    def _enumerate(self) -> None:
        if self._elements is None:
            self._elements, self._words = bfs_closure(self.generators, compose, self.budget)
            self._index = {s: i for i, s in enumerate(self._elements)}

    @property
    def elements(self) -> list[Transformation]:
        self._enumerate()
        return self._elements

    @property
    def words(self) -> list[tuple[int, ...]]:
        self._enumerate()
        return self._words

    def word(self, s: Transformation) -> tuple[int, ...]:
        self._enumerate()
        return self._words[self._index[s]]

    def evaluate(self, word: Sequence[int]) -> Transformation:
        if not word:
            raise ValueError("empty word")
        s = self.generators[word[0]]
        for k in word[1:]:
            s = s * self.generators[k]
        return s

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.elements)

    def __contains__(self, s) -> bool:
        self._enumerate()
        return s in self._index

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"<transformation semigroup of degree {self.degree} with generators {gens}>"

    def is_aperiodic(self) -> bool:
        return is_aperiodic(self)


def closure(gens: Iterable[Transformation], budget: Optional[int] = None) -> TransformationSemigroup:
    S = TransformationSemigroup(gens, budget)
    S._enumerate()
    return S


def _eventual_period(s: Transformation) -> int:
    seen = {s: 1}
    p, k = s, 1
    while True:
        p = p * s
        k += 1
        if p in seen:
            return k - seen[p]
        seen[p] = k


def is_aperiodic(S: TransformationSemigroup) -> bool:
    """True iff every element's powers end in a fixed point (no nontrivial subgroup)."""
    return all(_eventual_period(s) == 1 for s in S)
