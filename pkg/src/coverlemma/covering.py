"""Lifting a surjective relational morphism into a two-level cascade.

Given ``theta`` on states and ``phi`` on generators, a state ``x`` lifts to
the coordinate pairs ``(y, x * w_y)`` for ``y`` in ``theta(x)``, and a
generator ``a`` lifts to one cascade per ``t`` in ``phi(a)`` whose dependency
at ``y`` decodes in context ``y``, applies ``a`` and re-encodes in context
``y * t``.  Bottom states that carry no label in context ``y`` are fixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cascade import CascadeProduct, CascadeTransformation, DependencyFunction
from .core import BudgetExceeded, Transformation
from .labelling import Labelling, squash_labelling
from .relmorph import Counterexample, GenRelation, MorphismError, StateRelation

__all__ = [
    "LiftError",
    "InterpretationError",
    "Emulation",
    "LocalComponent",
    "emulate",
    "psi",
    "mu",
    "psi_inverse",
    "mu_inverse",
    "greedy_cover",
    "cascade_product",
    "local_component",
    "local_components",
]


class LiftError(MorphismError):
    """A generator could not be lifted because the action condition fails."""


class InterpretationError(ValueError):
    """A cascade or coordinate pair does not decode to the source semigroup."""


def psi(x: int, theta: StateRelation, labelling: Labelling) -> tuple[tuple[int, int], ...]:
    return tuple((y, labelling.encode(y, x)) for y in theta(x))


def _lift(a: Transformation, t: Transformation, labelling: Labelling) -> CascadeTransformation:
    entries = {}
    nz = labelling.bottom_size
    for y, xs in labelling.preimages.items():
        yt = t(y)
        if yt not in labelling.preimages:
            raise LiftError(Counterexample(xs[0], a, y, t))
        img = list(range(1, nz + 1))
        for z, x in enumerate(xs, 1):
            try:
                img[z - 1] = labelling.encode(yt, a(x))
            except ValueError:
                raise LiftError(Counterexample(x, a, y, t)) from None
        entries[y] = Transformation(img)
    return CascadeTransformation(t, DependencyFunction(entries, nz))


def mu(
    a: Transformation, theta: StateRelation, phi: GenRelation, labelling: Labelling
) -> tuple[CascadeTransformation, ...]:
    """One cascade per ``t`` in ``phi(a)``, in the sorted order of ``phi(a)``."""
    if a.degree != theta.source_degree:
        raise ValueError(f"generator {a} has degree {a.degree}, expected {theta.source_degree}")
    if phi.target_degree != theta.target_degree:
        raise ValueError("phi and theta disagree on the target degree")
    return tuple(_lift(a, t, labelling) for t in phi[a])


def psi_inverse(pair: tuple[int, int], labelling: Labelling) -> int:
    y, z = pair
    try:
        return labelling.decode(y, z)
    except ValueError as exc:
        raise InterpretationError(f"{pair} is not the lift of any state: {exc}") from None


def greedy_cover(labelling: Labelling) -> tuple[int, ...]:
    """Top states whose preimages cover the source states.

    Larger preimages first, ties to the smaller top state; a state is skipped
    when it adds nothing new.
    """
    covered: set[int] = set()
    cover = []
    for y in sorted(labelling.preimages, key=lambda y: (-labelling.size(y), y)):
        xs = labelling.preimages[y]
        if not covered.issuperset(xs):
            cover.append(y)
            covered.update(xs)
        if len(covered) == labelling.source_degree:
            break
    if len(covered) != labelling.source_degree:
        raise InterpretationError("the preimages of theta do not cover the source states")
    return tuple(cover)


def mu_inverse(
    c: CascadeTransformation, labelling: Labelling, cover: Optional[Sequence[int]] = None
) -> Transformation:
    """Decode a cascade back to a source transformation.

    For each ``y`` in ``cover`` the local action ``w_y * dep(y) * w_{y t}^-1``
    is read off on ``theta^-1(y)``; the pieces must agree where they overlap
    and together define every source state.
    """
    if cover is None:
        cover = greedy_cover(labelling)
    images: dict[int, int] = {}
    for y in cover:
        yt = c.top(y)
        u = c.dep(y)
        for z, x in enumerate(labelling.preimages[y], 1):
            try:
                x2 = labelling.decode(yt, u(z))
            except ValueError:
                raise InterpretationError(
                    f"dependency at top state {y} sends label {z} to {u(z)}, "
                    f"which is not a label in context {yt}"
                ) from None
            if images.setdefault(x, x2) != x2:
                raise InterpretationError(
                    f"contexts disagree on state {x}: {images[x]} vs {x2}"
                )
    n = labelling.source_degree
    missing = [x for x in range(1, n + 1) if x not in images]
    if missing:
        raise InterpretationError(f"cover leaves states {missing} undefined")
    return Transformation(images[x] for x in range(1, n + 1))


@dataclass
class Emulation:
    """The lifted morphism: states to coordinate pairs, generators to cascades."""

    theta: StateRelation
    phi: GenRelation
    labelling: Labelling
    generators: tuple[Transformation, ...]
    lifts: dict[Transformation, tuple[CascadeTransformation, ...]]
    psi_table: dict[int, tuple[tuple[int, int], ...]]

    @property
    def top_size(self) -> int:
        return self.theta.target_degree

    @property
    def bottom_size(self) -> int:
        return self.labelling.bottom_size

    @property
    def source_degree(self) -> int:
        return self.theta.source_degree

    def psi(self, x: int) -> tuple[tuple[int, int], ...]:
        return self.psi_table[x]

    def mu(self, a: Transformation) -> tuple[CascadeTransformation, ...]:
        if a in self.lifts:
            return self.lifts[a]
        return mu(a, self.theta, self.phi, self.labelling)

    def psi_inverse(self, pair: tuple[int, int]) -> int:
        return psi_inverse(pair, self.labelling)

    def mu_inverse(self, c: CascadeTransformation, cover: Optional[Sequence[int]] = None) -> Transformation:
        return mu_inverse(c, self.labelling, cover)

    def cascade_generators(self) -> list[tuple[Transformation, CascadeTransformation]]:
        """``(source generator, lift)`` pairs in generator order."""
        return [(a, c) for a in self.generators for c in self.lifts[a]]

    def lifted_pairs(self) -> list[tuple[int, int]]:
        return sorted(p for pairs in self.psi_table.values() for p in pairs)


def emulate(
    theta: StateRelation,
    phi: GenRelation,
    generators: Optional[Iterable[Transformation]] = None,
    labelling: Optional[Labelling] = None,
) -> Emulation:
    """Build the emulation for ``(theta, phi)`` over the given generators.

    ``generators`` defaults to the generators ``phi`` is defined on; repeats
    are dropped.  Raises :class:`LiftError` if the action condition fails.
    """
    if not theta.is_fully_defined():
        raise ValueError("theta must be fully defined")
    if generators is None:
        generators = list(phi)
    gens = tuple(dict.fromkeys(generators))
    if labelling is None:
        labelling = squash_labelling(theta)
    lifts = {a: mu(a, theta, phi, labelling) for a in gens}
    table = {x: psi(x, theta, labelling) for x in range(1, theta.source_degree + 1)}
    return Emulation(theta, phi, labelling, gens, lifts, table)


def cascade_product(emulation: Emulation, budget: Optional[int] = None) -> CascadeProduct:
    """The cascade semigroup generated by all lifts, in generator order."""
    product = CascadeProduct([c for _, c in emulation.cascade_generators()], budget)
    product.sources = tuple(a for a, _ in emulation.cascade_generators())
    return product


@dataclass
class LocalComponent:
    """The local bottom monoid ``U_y`` at a top state.

    ``elements`` act on the ``size`` labels used in context ``y``; each comes
    with a witness word over the cascade generators whose top part fixes ``y``.
    """

    y: int
    size: int
    elements: tuple[Transformation, ...]
    witnesses: tuple[tuple[int, ...], ...]
    failures: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    @property
    def is_trivial(self) -> bool:
        return all(u.is_identity() for u in self.elements)

    def permutations(self) -> tuple[Transformation, ...]:
        return tuple(u for u in self.elements if len(set(u.images)) == u.degree and not u.is_identity())

    def __len__(self) -> int:
        return len(self.elements)


def _embed(u: Transformation, y: int, labelling: Labelling) -> dict[int, int]:
    # f_y(u) = w_y u w_y^-1 as a map on theta^-1(y)
    return {x: labelling.decode(y, u(labelling.encode(y, x))) for x in labelling.preimages[y]}


def local_component(
    y: int, emulation: Emulation, product: CascadeProduct, max_pairs: int = 40000
) -> LocalComponent:
    """Collect ``U_y`` from the enumerated cascade product and check its embedding.

    Each element is the restriction of ``dep(y)`` to the labels of context
    ``y``, over all cascades whose top fixes ``y``.  The embedding
    ``u -> w_y u w_y^-1`` is checked against the source element named by the
    witness word, for multiplicativity (on up to ``max_pairs`` pairs) and for
    injectivity.
    """
    labelling = emulation.labelling
    k = labelling.size(y)
    sources = getattr(product, "sources", None)
    if sources is None:
        sources = tuple(a for a, _ in emulation.cascade_generators())
    found: dict[Transformation, tuple[int, ...]] = {}
    failures: list[str] = []
    for c, word in zip(product.elements, product.words):
        if c.top(y) != y:
            continue
        full = c.dep(y)
        try:
            u = full.restrict(k)
        except ValueError:
            failures.append(f"dependency {full} at {y} leaves the labels 1..{k}")
            continue
        if u not in found:
            found[u] = word
    elements = tuple(found)
    xs = labelling.preimages[y]
    embedded = {}
    for u, word in found.items():
        f = _embed(u, y, labelling)
        embedded[u] = f
        s = sources[word[0]]
        for i in word[1:]:
            s = s * sources[i]
        if any(s(x) != f[x] for x in xs):
            failures.append(f"f_{y}({u}) disagrees with its witness {s} on {xs}")
    if len({tuple(f[x] for x in xs) for f in embedded.values()}) != len(elements):
        failures.append(f"f_{y} is not injective")
    pairs = 0
    for u1 in elements:
        for u2 in elements:
            if pairs >= max_pairs:
                break
            pairs += 1
            f1, f2, f12 = embedded[u1], embedded[u2], _embed(u1 * u2, y, labelling)
            if any(f2[f1[x]] != f12[x] for x in xs):
                failures.append(f"f_{y} is not multiplicative on {u1}, {u2}")
    return LocalComponent(y, k, elements, tuple(found[u] for u in elements), failures)


def local_components(emulation: Emulation, budget: Optional[int] = None) -> dict[int, LocalComponent]:
    """``U_y`` for every top state in the image of theta.

    Raises :class:`BudgetExceeded` if the cascade product is too large; its
    ``partial`` then holds the components computed from the elements found so
    far, which may be incomplete.
    """
    product = cascade_product(emulation, budget)
    try:
        product.elements
    except BudgetExceeded as exc:
        elements, words = exc.partial
        partial = CascadeProduct(product.generators)
        partial._elements, partial._words = elements, words
        partial.sources = product.sources
        exc.partial = {y: local_component(y, emulation, partial) for y in emulation.labelling.top_states}
        raise
    return {y: local_component(y, emulation, product) for y in emulation.labelling.top_states}
