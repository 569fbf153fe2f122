"""Problem files: generators plus the method that builds the input morphism.

Two grammars are accepted.  JSON::

    {
      "degree": 13,
      "generators": [[1,6,11,12,11,10,7,13,7,1,2,1,1], [2,10,3,3,8,7,2,4,5,6,5,3,4]],
      "method": {"name": "congruence", "seed": [[1,2],[3,4]]},
      "budget": 100000
    }

and a plain-text form with one bracketed generator per line and optional
``key value`` directives::

    # the 3-state cycle collapse
    method congruence
    seed [[2,3]]
    [1,3,2]
    [1,1,1]

Method names are ``nn1``, ``congruence`` (``seed``), ``local-monoid``
(``idempotent``), ``constant`` and ``explicit`` (``theta``: per-state lists of
target points; ``phi``: per-generator lists of image lists, in generator order).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .builders import congruence_closure, theta_phi_congruence, theta_phi_constant, theta_phi_local_monoid, theta_phi_nn1
from .builders import Partition
from .core import Transformation
from .relmorph import GenRelation, StateRelation

__all__ = ["ProblemError", "Problem", "parse_problem", "load_problem", "METHODS"]

METHODS = ("nn1", "congruence", "local-monoid", "constant", "explicit")


class ProblemError(ValueError):
    """Malformed problem file or option."""


@dataclass
class Problem:
    degree: int
    generators: list[Transformation]
    method: str = "nn1"
    options: dict[str, Any] = field(default_factory=dict)
    budget: Optional[int] = None

    def build(self) -> tuple[StateRelation, GenRelation, Optional[Partition]]:
        """Run the configured builder; the partition is returned for ``congruence`` only."""
        gens = self.generators
        if self.method == "nn1":
            return (*theta_phi_nn1(gens, self.degree), None)
        if self.method == "congruence":
            partition = congruence_closure(gens, self.options.get("seed", []), self.degree)
            return (*theta_phi_congruence(partition, gens), partition)
        if self.method == "local-monoid":
            e = self.options.get("idempotent")
            if e is None:
                raise ProblemError("method local-monoid needs an idempotent")
            return (*theta_phi_local_monoid(gens, _transformation(e, self.degree)), None)
        if self.method == "constant":
            return (*theta_phi_constant(gens, self.degree), None)
        if self.method == "explicit":
            return (*_explicit(self), None)
        raise ProblemError(f"unknown method {self.method!r}; expected one of {', '.join(METHODS)}")

    def method_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"name": self.method}
        d.update(self.options)
        return d


def _transformation(images, degree: Optional[int]) -> Transformation:
    if not isinstance(images, list) or not images:
        raise ProblemError(f"expected a nonempty image list, got {images!r}")
    try:
        t = Transformation(images)
    except ValueError as exc:
        raise ProblemError(str(exc)) from None
    if degree is not None and t.degree != degree:
        raise ProblemError(f"generator {t} has degree {t.degree}, expected {degree}")
    return t


def _explicit(problem: Problem) -> tuple[StateRelation, GenRelation]:
    theta_lists = problem.options.get("theta")
    phi_lists = problem.options.get("phi")
    if theta_lists is None or phi_lists is None:
        raise ProblemError("method explicit needs theta and phi")
    if len(theta_lists) != problem.degree:
        raise ProblemError(f"theta lists {len(theta_lists)} states, expected {problem.degree}")
    if len(phi_lists) != len(problem.generators):
        raise ProblemError("phi needs one entry per generator")
    try:
        targets = [[Transformation(t) for t in ts] for ts in phi_lists]
        m = targets[0][0].degree
        theta = StateRelation.from_lists(theta_lists, m)
        mapping: dict[Transformation, list[Transformation]] = {}
        for a, ts in zip(problem.generators, targets):
            mapping.setdefault(a, []).extend(ts)
        phi = GenRelation(mapping, m)
    except (ValueError, IndexError, TypeError) as exc:
        raise ProblemError(f"bad explicit relations: {exc}") from None
    return theta, phi


def _from_dict(doc: dict) -> Problem:
    if not isinstance(doc, dict) or "generators" not in doc:
        raise ProblemError("problem must be an object with a 'generators' list")
    degree = doc.get("degree")
    raw = doc["generators"]
    if not isinstance(raw, list) or not raw:
        raise ProblemError("'generators' must be a nonempty list")
    gens = [_transformation(g, degree) for g in raw]
    if degree is None:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ProblemError("generators have mixed degrees")
    method = doc.get("method", "nn1")
    options: dict[str, Any] = {}
    if isinstance(method, dict):
        options = {k: v for k, v in method.items() if k != "name"}
        method = method.get("name")
    if method not in METHODS:
        raise ProblemError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    budget = doc.get("budget")
    if budget is not None and (not isinstance(budget, int) or budget < 1):
        raise ProblemError("budget must be a positive integer")
    return Problem(degree, gens, method, options, budget)


def _parse_text(text: str) -> Problem:
    doc: dict[str, Any] = {"generators": []}
    method: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("["):
                doc["generators"].append(json.loads(line))
                continue
            key, _, value = line.partition(" ")
            value = value.strip()
            if key == "degree":
                doc["degree"] = int(value)
            elif key == "budget":
                doc["budget"] = int(value)
            elif key == "method":
                method["name"] = value
            elif key in ("seed", "idempotent", "theta", "phi"):
                method[key] = json.loads(value)
            else:
                raise ProblemError(f"line {lineno}: unknown directive {key!r}")
        except (json.JSONDecodeError, ValueError) as exc:
            if isinstance(exc, ProblemError):
                raise
            raise ProblemError(f"line {lineno}: {exc}") from None
    if method:
        method.setdefault("name", "nn1")
        doc["method"] = method
    return _from_dict(doc)


def parse_problem(text: str) -> Problem:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"invalid JSON: {exc}") from None
        return _from_dict(doc)
    return _parse_text(text)


def load_problem(path) -> Problem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from None
    return parse_problem(text)
