"""Set-valued relations on states and generators, and the morphism check.

A relational morphism ``(theta, phi)`` from ``(X, S)`` to ``(Y, T)`` is held as
a :class:`StateRelation` for ``theta`` and a :class:`GenRelation` for ``phi``.
``phi`` is only ever stored on the generators of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .core import Transformation

__all__ = [
    "StateRelation",
    "GenRelation",
    "Counterexample",
    "MorphismError",
    "inverse",
    "check_morphism",
    "is_surjective",
    "is_injective",
    "is_injective_on_gens",
]


class StateRelation:
    """A relation from ``{1..source_degree}`` to ``{1..target_degree}``.

    ``mapping`` sends each point of the domain to a nonempty set of target
    points.  The domain is usually all source points; for an inverse relation
    it is the image of the original one.
    """

    def __init__(self, mapping: Mapping[int, Iterable[int]], source_degree: int, target_degree: int):
        self.source_degree = source_degree
        self.target_degree = target_degree
        images: dict[int, tuple[int, ...]] = {}
        for x in sorted(mapping):
            if not 1 <= x <= source_degree:
                raise ValueError(f"source point {x} outside 1..{source_degree}")
            ys = tuple(sorted(set(mapping[x])))
            if not ys:
                raise ValueError(f"empty image set for {x}")
            for y in ys:
                if not 1 <= y <= target_degree:
                    raise ValueError(f"target point {y} outside 1..{target_degree}")
            images[x] = ys
        self._images = images

    @classmethod
    def from_lists(cls, lists: Sequence[Iterable[int]], target_degree: Optional[int] = None) -> "StateRelation":
        """``lists[x-1]`` is the image set of ``x``."""
        lists = [list(ys) for ys in lists]
        if target_degree is None:
            target_degree = max(max(ys) for ys in lists)
        return cls({x: ys for x, ys in enumerate(lists, 1)}, len(lists), target_degree)

    @classmethod
    def identity(cls, n: int) -> "StateRelation":
        return cls({x: (x,) for x in range(1, n + 1)}, n, n)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(self._images)

    def __call__(self, x: int) -> tuple[int, ...]:
        return self._images.get(x, ())

    def items(self):
        return self._images.items()

    def image(self) -> tuple[int, ...]:
        return tuple(sorted({y for ys in self._images.values() for y in ys}))

    def is_fully_defined(self) -> bool:
        return len(self._images) == self.source_degree

    def is_function(self) -> bool:
        return all(len(ys) == 1 for ys in self._images.values())

    def is_bijective(self) -> bool:
        """A fully defined single-valued relation that is one-to-one and onto."""
        return (
            self.is_fully_defined()
            and self.is_function()
            and self.source_degree == self.target_degree
            and is_injective(self)
        )

    def inverse(self) -> "StateRelation":
        return inverse(self)

    def as_lists(self) -> list[list[int]]:
        return [list(self(x)) for x in range(1, self.source_degree + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateRelation):
            return NotImplemented
        return (
            self._images == other._images
            and self.source_degree == other.source_degree
            and self.target_degree == other.target_degree
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {set(ys)}" for x, ys in self._images.items())
        return f"StateRelation({{{body}}}, {self.source_degree}, {self.target_degree})"


def inverse(theta: StateRelation) -> StateRelation:
    """``y in theta(x)`` iff ``x in inverse(theta)(y)``; defined on the image of ``theta``."""
    inv: dict[int, list[int]] = {}
    for x, ys in theta.items():
        for y in ys:
            inv.setdefault(y, []).append(x)
    return StateRelation(inv, theta.target_degree, theta.source_degree)


class GenRelation:
    """``phi`` restricted to generators: each source generator gets a nonempty set of lifts."""

    def __init__(self, mapping: Mapping[Transformation, Iterable[Transformation]], target_degree: int):
        self.target_degree = target_degree
        pairs: dict[Transformation, tuple[Transformation, ...]] = {}
        for a, ts in mapping.items():
            ts = tuple(sorted(set(ts)))
            if not ts:
                raise ValueError(f"empty lift set for generator {a}")
            for t in ts:
                if t.degree != target_degree:
                    raise ValueError(f"lift {t} of {a} has degree {t.degree}, expected {target_degree}")
            pairs[a] = ts
        self._pairs = pairs

    def __getitem__(self, a: Transformation) -> tuple[Transformation, ...]:
        return self._pairs[a]

    def __contains__(self, a) -> bool:
        return a in self._pairs

    def __iter__(self):
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def items(self):
        return self._pairs.items()

    def image(self) -> tuple[Transformation, ...]:
        """All target transformations, sorted."""
        return tuple(sorted({t for ts in self._pairs.values() for t in ts}))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenRelation):
            return NotImplemented
        return self._pairs == other._pairs and self.target_degree == other.target_degree

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {{{', '.join(map(str, ts))}}}" for a, ts in self._pairs.items())
        return f"GenRelation({{{body}}})"


@dataclass(frozen=True)
class Counterexample:
    """``y in theta(x)`` and ``t in phi(a)`` but ``y*t`` is not in ``theta(x*a)``."""

    x: int
    a: Transformation
    y: int
    t: Transformation

    def __str__(self) -> str:
        return (
            f"x={self.x}, a={self.a}, y={self.y}, t={self.t}: "
            f"y*t={self.t(self.y)} not in theta(x*a) (x*a={self.a(self.x)})"
        )

    def to_dict(self) -> dict:
        return {"x": self.x, "a": list(self.a.images), "y": self.y, "t": list(self.t.images)}


class MorphismError(ValueError):
    """The given relations violate the compatible-action condition."""

    def __init__(self, counterexample: Counterexample, message: Optional[str] = None):
        super().__init__(message or f"not a relational morphism: {counterexample}")
        self.counterexample = counterexample


def check_morphism(
    theta: StateRelation, phi: GenRelation, gens: Iterable[Transformation]
) -> Optional[Counterexample]:
    """Exhaustively test ``theta(x) * phi(a) <= theta(x * a)``.

    Returns ``None`` when the condition holds for every state, generator and
    lift, otherwise the first violation in (state, generator, y, t) order.
    """
    gens = list(gens)
    for a in gens:
        if a.degree != theta.source_degree:
            raise ValueError(f"generator {a} has degree {a.degree}, expected {theta.source_degree}")
        if a not in phi:
            raise ValueError(f"phi is not defined on generator {a}")
        if phi.target_degree != theta.target_degree:
            raise ValueError("phi and theta disagree on the target degree")
    for x in range(1, theta.source_degree + 1):
        for a in gens:
            allowed = set(theta(a(x)))
            for y in theta(x):
                for t in phi[a]:
                    if t(y) not in allowed:
                        return Counterexample(x, a, y, t)
    return None


def is_surjective(theta: StateRelation, phi: GenRelation, target_states: int) -> bool:
    """``theta`` covers all target states and ``phi`` is fully defined.

    The target semigroup is generated by the lifts, so that side holds by construction.
    """
    return theta.image() == tuple(range(1, target_states + 1)) and all(ts for _, ts in phi.items())


def is_injective(theta: StateRelation) -> bool:
    seen: set[int] = set()
    for _, ys in theta.items():
        if seen.intersection(ys):
            return False
        seen.update(ys)
    return True


def is_injective_on_gens(phi: GenRelation) -> bool:
    """Lift sets of functionally distinct generators are pairwise disjoint."""
    seen: set[Transformation] = set()
    for _, ts in phi.items():
        if seen.intersection(ts):
            return False
        seen.update(ts)
    return True
