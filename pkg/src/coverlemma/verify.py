"""Brute-force certification of a computed emulation on a concrete instance.

Every check is exhaustive over states, generators and lifts.  Failures come
with the first counterexample in search order (states ascending, generators
in input order).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .cascade import flatten
from .core import BudgetExceeded, Transformation, TransformationSemigroup
from .covering import Emulation, InterpretationError
from .relmorph import StateRelation

__all__ = [
    "DEFAULT_BUDGET",
    "Check",
    "VerificationReport",
    "verify_emulation",
    "verify_identities",
    "verify_blocked",
    "flat_oracle",
    "verify_all",
]

DEFAULT_BUDGET = 100_000


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: Optional[dict] = None
    note: str = ""
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "counterexample": self.counterexample,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    partial: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed or c.skipped for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        summary = dict(self.summary)
        summary.update(other.summary)
        return VerificationReport(self.checks + other.checks, summary, self.partial or other.partial)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "partial": self.partial,
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self) -> str:
        lines = []
        for c in self.checks:
            line = f"[{c.status}] {c.name}"
            if c.note:
                line += f" ({c.note})"
            lines.append(line)
            if c.counterexample is not None:
                lines.append(f"    counterexample: {c.counterexample}")
        if self.partial:
            lines.append("(partial: budget exceeded, results are sampled or incomplete)")
        return "\n".join(lines)


def _summary(emulation: Emulation, gens: Sequence[Transformation]) -> dict:
    return {
        "source_degree": emulation.source_degree,
        "generators": len(gens),
        "top_size": emulation.top_size,
        "bottom_size": emulation.bottom_size,
        "lifts": sum(len(emulation.mu(a)) for a in gens),
    }


def _pairs(pairs) -> list[list[int]]:
    return [list(p) for p in pairs]


def verify_emulation(emulation: Emulation, source_gens: Iterable[Transformation]) -> VerificationReport:
    """Lifted states are disjoint, lifts respect the action, lifted generators are disjoint."""
    gens = list(dict.fromkeys(source_gens))
    n = emulation.source_degree
    checks = []

    bad = None
    owner: dict[tuple[int, int], int] = {}
    for x in range(1, n + 1):
        if not emulation.psi(x):
            bad = {"x": x, "reason": "empty lift"}
            break
        for p in emulation.psi(x):
            if p in owner:
                bad = {"x1": owner[p], "x2": x, "pair": list(p)}
                break
            owner[p] = x
        if bad:
            break
    checks.append(Check("psi injective on states", bad is None, bad))

    bad = None
    for x in range(1, n + 1):
        for a in gens:
            target = set(emulation.psi(a(x)))
            for i, c in enumerate(emulation.mu(a)):
                for p in emulation.psi(x):
                    q = c(p)
                    if q not in target:
                        bad = {
                            "x": x, "a": list(a.images), "lift": i, "pair": list(p),
                            "image": list(q), "psi(x*a)": _pairs(sorted(target)),
                        }
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    checks.append(Check("psi(x)*mu(a) <= psi(x*a)", bad is None, bad))

    bad = None
    seen: dict = {}
    for a in gens:
        for c in emulation.mu(a):
            if c in seen and seen[c] != a:
                bad = {"a": list(seen[c].images), "b": list(a.images), "top": list(c.top.images)}
                break
            seen[c] = a
        if bad:
            break
    checks.append(Check("mu injective on generators", bad is None, bad))
    return VerificationReport(checks, _summary(emulation, gens))


def verify_identities(emulation: Emulation, source_gens: Iterable[Transformation]) -> VerificationReport:
    """Round trips through the interpretation: IE and EI are identities."""
    gens = list(dict.fromkeys(source_gens))
    n = emulation.source_degree
    checks = []

    bad = None
    for x in range(1, n + 1):
        try:
            back = {emulation.psi_inverse(p) for p in emulation.psi(x)}
        except InterpretationError as exc:
            bad = {"x": x, "error": str(exc)}
            break
        if back != {x}:
            bad = {"x": x, "decoded": sorted(back)}
            break
    checks.append(Check("psi^-1(psi(x)) = {x}", bad is None, bad))

    bad = None
    for a in gens:
        for i, c in enumerate(emulation.mu(a)):
            try:
                s = emulation.mu_inverse(c)
            except InterpretationError as exc:
                bad = {"a": list(a.images), "lift": i, "error": str(exc)}
            else:
                if s != a:
                    bad = {"a": list(a.images), "lift": i, "decoded": list(s.images)}
            if bad:
                break
        if bad:
            break
    checks.append(Check("mu^-1(mu(a)) = a", bad is None, bad))

    bad = None
    for p in emulation.lifted_pairs():
        x = emulation.psi_inverse(p)
        if p not in emulation.psi(x):
            bad = {"pair": list(p), "x": x, "psi(x)": _pairs(emulation.psi(x))}
            break
    checks.append(Check("psi(psi^-1(p)) contains p", bad is None, bad))

    bad = None
    for a in gens:
        for i, c in enumerate(emulation.mu(a)):
            if c not in emulation.mu(emulation.mu_inverse(c)):
                bad = {"a": list(a.images), "lift": i}
                break
        if bad:
            break
    checks.append(Check("mu(mu^-1(c)) contains c", bad is None, bad))
    return VerificationReport(checks, _summary(emulation, gens))


def verify_blocked(theta: StateRelation, emulation: Emulation) -> VerificationReport:
    """With a bijective theta nothing reaches the bottom level and phi is injective."""
    gens = list(emulation.generators)
    if not theta.is_bijective():
        note = "theta is not bijective as a function"
        return VerificationReport(
            [
                Check("blocked: all dependencies trivial", True, note=note, skipped=True),
                Check("blocked: phi injective on generators", True, note=note, skipped=True),
            ],
            {"theta_bijective": False},
        )
    bad = None
    for a in gens:
        for i, c in enumerate(emulation.mu(a)):
            if len(c.dep):
                y, u = next(iter(c.dep.items()))
                bad = {"a": list(a.images), "lift": i, "y": y, "dep": list(u.images)}
                break
        if bad:
            break
    checks = [Check("blocked: all dependencies trivial", bad is None, bad)]
    bad = None
    owner: dict = {}
    for a in gens:
        for t in emulation.phi[a]:
            if t in owner and owner[t] != a:
                bad = {"a": list(owner[t].images), "b": list(a.images), "t": list(t.images)}
                break
            owner[t] = a
        if bad:
            break
    checks.append(Check("blocked: phi injective on generators", bad is None, bad))
    return VerificationReport(checks, {"theta_bijective": True})


def _random_words(k: int, samples: int, seed: int, max_length: int = 24) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(k) for _ in range(rng.randint(1, max_length))) for _ in range(samples)]


def flat_oracle(
    emulation: Emulation,
    source_gens: Sequence[Transformation],
    budget: Optional[int] = DEFAULT_BUDGET,
    samples: Optional[int] = None,
    seed: int = 0,
) -> VerificationReport:
    """Re-derive the morphism property for whole words using flattened cascades only.

    For each source element ``s`` (given by a generator word) every product of
    lift choices along the word is flattened to a plain transformation of
    ``Y x Z``, and ``psi(x) * lift <= psi(x * s)`` is checked pointwise.
    Exhaustive over the semigroup when it fits in ``budget``; otherwise, or
    when ``samples`` is given, over seeded random words.
    """
    gens = list(dict.fromkeys(source_gens))
    nz = emulation.bottom_size
    n = emulation.source_degree
    flat_lifts = [tuple(dict.fromkeys(flatten(c) for c in emulation.mu(a))) for a in gens]
    psi_index = {
        x: {(y - 1) * nz + z for y, z in emulation.psi(x)} for x in range(1, n + 1)
    }

    partial = False
    if samples is None:
        S = TransformationSemigroup(gens, budget)
        try:
            words = S.words
            mode = f"exhaustive over {len(words)} elements"
        except BudgetExceeded:
            partial = True
            samples = 500
    if samples is not None:
        words = _random_words(len(gens), samples, seed)
        mode = f"sampled {samples} random words (seed {seed})"

    memo: dict[tuple[int, ...], frozenset] = {}

    def lift_set(word: tuple[int, ...]) -> frozenset:
        if word in memo:
            return memo[word]
        if len(word) == 1:
            result = frozenset(flat_lifts[word[0]])
        else:
            result = frozenset(F * G for F in lift_set(word[:-1]) for G in flat_lifts[word[-1]])
        memo[word] = result
        return result

    bad = None
    checked = 0
    for word in words:
        s = gens[word[0]]
        for k in word[1:]:
            s = s * gens[k]
        for x in range(1, n + 1):
            target = psi_index[s(x)]
            for F in sorted(lift_set(word)):
                for i in psi_index[x]:
                    if F(i) not in target:
                        bad = {"word": [k + 1 for k in word], "x": x, "flat_state": i, "image": F(i)}
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
        checked += 1
        if len(memo) > 4 * (budget or DEFAULT_BUDGET):
            memo.clear()
    check = Check("flattened words respect psi", bad is None, bad, note=mode)
    return VerificationReport([check], {"oracle_words": checked}, partial)


def verify_all(
    emulation: Emulation,
    source_gens: Sequence[Transformation],
    oracle: bool = False,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> VerificationReport:
    report = verify_emulation(emulation, source_gens)
    report = report.merge(verify_identities(emulation, source_gens))
    report = report.merge(verify_blocked(emulation.theta, emulation))
    if oracle:
        report = report.merge(flat_oracle(emulation, source_gens, budget))
    return report
