"""Per-context encodings of source states into bottom-level states.

For each top state ``y`` the preimage ``theta^-1(y)`` is squashed onto an
initial segment ``1..k`` of the bottom state set, in increasing order.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .core import PartialTransformation
from .relmorph import StateRelation, inverse

__all__ = ["Labelling", "squash_labelling", "nn1_labelling"]


class Labelling:
    """The family of encodings ``w_y``, one per top state in the image of theta.

    ``preimages[y]`` lists ``theta^-1(y)`` in encoding order, so the state at
    position ``z`` (1-based) is encoded as ``z``.
    """

    def __init__(self, preimages: Mapping[int, Sequence[int]], source_degree: int):
        self.source_degree = source_degree
        self.preimages: dict[int, tuple[int, ...]] = {y: tuple(xs) for y, xs in sorted(preimages.items())}
        self._codes: dict[int, dict[int, int]] = {}
        for y, xs in self.preimages.items():
            if not xs:
                raise ValueError(f"empty preimage for top state {y}")
            if len(set(xs)) != len(xs):
                raise ValueError(f"repeated state in preimage of {y}")
            self._codes[y] = {x: z for z, x in enumerate(xs, 1)}
        self.bottom_size = max(len(xs) for xs in self.preimages.values())

    @property
    def top_states(self) -> tuple[int, ...]:
        return tuple(self.preimages)

    def size(self, y: int) -> int:
        """Number of bottom states in use in context ``y``."""
        return len(self.preimages[y])

    def encode(self, y: int, x: int) -> int:
        """``x * w_y``; ``x`` must lie in ``theta^-1(y)``."""
        try:
            return self._codes[y][x]
        except KeyError:
            raise ValueError(f"state {x} is not in the preimage of top state {y}") from None

    def decode(self, y: int, z: int) -> int:
        """``z * w_y^-1``; ``z`` must be at most ``size(y)``."""
        xs = self.preimages.get(y)
        if xs is None:
            raise ValueError(f"top state {y} is not in the image of theta")
        if not 1 <= z <= len(xs):
            raise ValueError(f"bottom state {z} is not a label in context {y} (1..{len(xs)})")
        return xs[z - 1]

    def w(self, y: int) -> PartialTransformation:
        codes = self._codes[y]
        return PartialTransformation(
            (codes.get(x) for x in range(1, self.source_degree + 1)), self.bottom_size
        )

    def w_inverse(self, y: int) -> PartialTransformation:
        return self.w(y).inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labelling):
            return NotImplemented
        return self.preimages == other.preimages and self.source_degree == other.source_degree

    def __repr__(self) -> str:
        return f"Labelling({self.preimages}, bottom_size={self.bottom_size})"


def squash_labelling(theta: StateRelation) -> Labelling:
    if not theta.is_fully_defined():
        raise ValueError("theta must be fully defined")
    inv = inverse(theta)
    return Labelling({y: sorted(xs) for y, xs in inv.items()}, theta.source_degree)


def nn1_labelling(n: int) -> Labelling:
    """Labelling for ``theta(x) = X minus {x}``: close the single hole at ``y``."""
    if n < 2:
        raise ValueError("the n(n-1) labelling needs at least 2 states")
    # w_y(x) = x below the hole, x - 1 above it
    preimages = {}
    for y in range(1, n + 1):
        xs = [0] * (n - 1)
        for x in range(1, n + 1):
            if x < y:
                xs[x - 1] = x
            elif x > y:
                xs[x - 2] = x
        preimages[y] = xs
    return Labelling(preimages, n)
