"""Constructors for the input morphism ``(theta, phi)``.

Each ``theta_phi_*`` function returns a ``(StateRelation, GenRelation)`` pair
with ``phi`` defined on the given generators only.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .core import Transformation, image_set, is_idempotent, is_permutation
from .relmorph import GenRelation, MorphismError, StateRelation, check_morphism

__all__ = [
    "Partition",
    "UnionFind",
    "congruence_closure",
    "theta_phi_congruence",
    "theta_phi_nn1",
    "theta_phi_local_monoid",
    "theta_phi_constant",
    "BUILDERS",
]


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


class Partition:
    """Disjoint classes covering ``{1..n}``, ordered by their least element."""

    def __init__(self, classes: Iterable[Iterable[int]], n: int):
        cls = [tuple(sorted(set(c))) for c in classes]
        if any(not c for c in cls):
            raise ValueError("empty class")
        flat = sorted(x for c in cls for x in c)
        if flat != list(range(1, n + 1)):
            raise ValueError(f"classes do not partition 1..{n}: {cls}")
        self.n = n
        self.classes: tuple[tuple[int, ...], ...] = tuple(sorted(cls))
        self._index = {x: i for i, c in enumerate(self.classes, 1) for x in c}

    @classmethod
    def from_seed(cls, seed: Iterable[Iterable[int]], n: int) -> "Partition":
        """Seed classes plus singletons for every unlisted state."""
        seed = [c for c in (list(c) for c in seed) if c]
        listed = [x for c in seed for x in c]
        if any(not 1 <= x <= n for x in listed):
            raise ValueError(f"seed states outside 1..{n}")
        if len(listed) != len(set(listed)):
            raise ValueError("seed classes overlap")
        rest = [[x] for x in range(1, n + 1) if x not in set(listed)]
        return cls(seed + rest, n)

    def class_of(self, x: int) -> int:
        """1-based index of the class containing ``x``."""
        return self._index[x]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.classes == other.classes
        if isinstance(other, (list, tuple)):
            return [list(c) for c in self.classes] == [list(c) for c in other]
        return NotImplemented

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]

    def is_right_congruence(self, gens: Iterable[Transformation]) -> bool:
        for a in gens:
            for c in self.classes:
                if len({self._index[a(x)] for x in c}) > 1:
                    return False
        return True

    def induced(self, a: Transformation) -> Transformation:
        """The action of ``a`` on class indices; the partition must be compatible with ``a``."""
        images = []
        for c in self.classes:
            targets = {self._index[a(x)] for x in c}
            if len(targets) != 1:
                raise ValueError(f"class {list(c)} is split by {a}")
            images.append(targets.pop())
        return Transformation(images)

    def __repr__(self) -> str:
        return f"Partition({self.as_lists()})"


def congruence_closure(gens: Sequence[Transformation], seed: Iterable[Iterable[int]], n: int | None = None) -> Partition:
    """Finest right congruence in which every seed class lies inside one class.

    Pairs of merged states are pushed on a work list; merging ``p`` and ``q``
    forces ``p*a`` and ``q*a`` together for every generator ``a``.
    """
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("need generators or an explicit degree")
        n = gens[0].degree
    start = Partition.from_seed(seed, n)
    uf = UnionFind(n)
    work = []
    for c in start.classes:
        for x in c[1:]:
            if uf.union(c[0], x):
                work.append((c[0], x))
    while work:
        p, q = work.pop()
        for a in gens:
            pa, qa = a(p), a(q)
            if uf.union(pa, qa):
                work.append((pa, qa))
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(uf.find(x), []).append(x)
    return Partition(groups.values(), n)


def theta_phi_congruence(
    partition: Partition, gens: Sequence[Transformation]
) -> tuple[StateRelation, GenRelation]:
    """Quotient morphism onto the action on classes."""
    if not partition.is_right_congruence(gens):
        raise ValueError(f"{partition} is not a right congruence for the generators")
    theta = StateRelation({x: (partition.class_of(x),) for x in range(1, partition.n + 1)}, partition.n, len(partition))
    phi = GenRelation({a: (partition.induced(a),) for a in gens}, len(partition))
    return theta, phi


def theta_phi_nn1(gens: Sequence[Transformation], n: int | None = None) -> tuple[StateRelation, GenRelation]:
    """``theta(x) = X - {x}``; permutations lift to themselves, others to off-image constants."""
    gens = list(gens)
    if n is None:
        n = gens[0].degree
    if n < 2:
        raise ValueError("the n(n-1) method needs at least 2 states")
    theta = StateRelation({x: [y for y in range(1, n + 1) if y != x] for x in range(1, n + 1)}, n, n)
    lifts = {}
    for a in gens:
        if a.degree != n:
            raise ValueError(f"generator {a} has degree {a.degree}, expected {n}")
        if is_permutation(a):
            lifts[a] = (a,)
        else:
            img = set(image_set(a))
            lifts[a] = tuple(Transformation.constant(n, j) for j in range(1, n + 1) if j not in img)
    return theta, GenRelation(lifts, n)


def theta_phi_local_monoid(
    gens: Sequence[Transformation], e: Transformation
) -> tuple[StateRelation, GenRelation]:
    """Localize to ``Xe`` via ``a -> e a e``; rejected unless it is a morphism.

    The localization is not a homomorphism in general, so the result is
    checked and a :class:`MorphismError` carries the first violation.
    """
    gens = list(gens)
    if not is_idempotent(e):
        raise ValueError(f"{e} is not idempotent")
    xe = image_set(e)
    pos = {x: i for i, x in enumerate(xe, 1)}
    m = len(xe)
    theta = StateRelation({x: (pos[e(x)],) for x in range(1, e.degree + 1)}, e.degree, m)
    lifts = {}
    for a in gens:
        eae = e * a * e
        lifts[a] = (Transformation(pos[eae(x)] for x in xe),)
    phi = GenRelation(lifts, m)
    bad = check_morphism(theta, phi, gens)
    if bad is not None:
        raise MorphismError(bad, f"local monoid at {e} is not a morphism: {bad}")
    return theta, phi


def theta_phi_constant(gens: Sequence[Transformation], n: int | None = None) -> tuple[StateRelation, GenRelation]:
    """Collapse everything onto the trivial monoid acting on one state."""
    gens = list(gens)
    if n is None:
        n = gens[0].degree
    theta = StateRelation({x: (1,) for x in range(1, n + 1)}, n, 1)
    phi = GenRelation({a: (Transformation.identity(1),) for a in gens}, 1)
    return theta, phi


BUILDERS: dict[str, Callable[..., tuple[StateRelation, GenRelation]]] = {
    "nn1": theta_phi_nn1,
    "congruence": lambda gens, seed=(): theta_phi_congruence(congruence_closure(gens, seed), gens),
    "local-monoid": theta_phi_local_monoid,
    "constant": theta_phi_constant,
}
