"""Decomposition reports.

:func:`decompose` runs builder, labelling, lifting and verification and
returns a plain dict.  The text rendering is computed from that dict alone,
so the JSON and text forms carry the same data.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from . import __version__
from .cascade import format_cascade
from .core import TransformationSemigroup
from .covering import cascade_product, emulate, local_component
from .problem import Problem
from .relmorph import MorphismError, check_morphism, is_injective, is_surjective
from .verify import DEFAULT_BUDGET, verify_all

__all__ = ["decompose", "render_text", "render_json", "UNBALANCED_TOP", "UNBALANCED_BOTTOM"]

UNBALANCED_TOP = "unbalanced: entire action on bottom level"
UNBALANCED_BOTTOM = "unbalanced: trivial bottom level, entire action on top level"

# local components with more elements are summarized without a listing
LISTING_LIMIT = 12


def _images(t) -> list[int]:
    return list(t.images)


def decompose(problem: Problem, budget: Optional[int] = None, oracle: bool = False) -> dict[str, Any]:
    """Full pipeline for one problem.

    Raises :class:`MorphismError` if the configured relations are not a
    relational morphism and :class:`BudgetExceeded` if an enumeration is too large.
    """
    if budget is None:
        budget = problem.budget or DEFAULT_BUDGET
    gens = problem.generators
    S = TransformationSemigroup(gens, budget)
    theta, phi, partition = problem.build()
    bad = check_morphism(theta, phi, gens)
    if bad is not None:
        raise MorphismError(bad)
    target_gens = phi.image()
    T = TransformationSemigroup(target_gens, budget)
    em = emulate(theta, phi, gens)
    product = cascade_product(em, budget)
    components = {y: local_component(y, em, product) for y in em.labelling.top_states}

    lifts = []
    for a in em.generators:
        for c in em.lifts[a]:
            lifts.append({
                "source": _images(a),
                "top": _images(c.top),
                "dependencies": {str(y): _images(u) for y, u in c.dep.items()},
                "summary": repr(c),
                "listing": format_cascade(c),
            })

    locals_ = []
    for y, comp in components.items():
        entry = {
            "y": y,
            "size": comp.size,
            "elements": len(comp),
            "permutations": len(comp.permutations()),
            "trivial": comp.is_trivial,
            "verified": comp.verified,
        }
        if len(comp) <= LISTING_LIMIT:
            entry["listing"] = [_images(u) for u in comp.elements]
        if comp.failures:
            entry["failures"] = comp.failures
        locals_.append(entry)

    warnings = []
    if em.top_size == 1:
        warnings.append(UNBALANCED_TOP)
    if em.bottom_size == 1:
        warnings.append(UNBALANCED_BOTTOM)

    verification = verify_all(em, gens, oracle=oracle, budget=budget)
    local_ok = all(c.verified for c in components.values())
    return {
        "tool": "coverlemma",
        "version": __version__,
        "instance": {
            "degree": problem.degree,
            "generators": [_images(g) for g in gens],
            "elements": len(S),
            "aperiodic": S.is_aperiodic(),
        },
        "method": problem.method_dict(),
        "partition": partition.as_lists() if partition is not None else None,
        "theta": theta.as_lists(),
        "phi": [{"generator": _images(a), "images": [_images(t) for t in ts]} for a, ts in phi.items()],
        "morphism": {
            "surjective": is_surjective(theta, phi, theta.target_degree),
            "injective_on_states": is_injective(theta),
        },
        "target": {
            "degree": theta.target_degree,
            "generators": [_images(t) for t in target_gens],
            "elements": len(T),
            "aperiodic": T.is_aperiodic(),
        },
        "cascade": {
            "top_size": em.top_size,
            "bottom_size": em.bottom_size,
            "elements": len(product),
            "generators": lifts,
        },
        "psi": [{"x": x, "pairs": [list(p) for p in em.psi(x)]} for x in range(1, problem.degree + 1)],
        "local_components": locals_,
        "warnings": warnings,
        "verification": verification.to_dict(),
        "passed": verification.passed and local_ok,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _fmt(images: list[int]) -> str:
    return "[" + ",".join(str(i) for i in images) + "]"


def render_text(report: dict) -> str:
    inst, tgt, cas = report["instance"], report["target"], report["cascade"]
    out = [f"coverlemma {report['version']} decomposition report", ""]
    out.append(f"Source: degree {inst['degree']}, {len(inst['generators'])} generators")
    for g in inst["generators"]:
        out.append(f"  {_fmt(g)}")
    out.append(f"The semigroup has {inst['elements']} elements"
               + (", aperiodic" if inst["aperiodic"] else ", not aperiodic"))
    method = report["method"]
    extras = ", ".join(f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in method.items() if k != "name")
    out.append(f"Method: {method['name']}" + (f" ({extras})" if extras else ""))
    if report["partition"] is not None:
        out.append(f"Partition: {json.dumps(report['partition'], separators=(',', ':'))}")
    out.append("")
    out.append("theta:")
    for x, ys in enumerate(report["theta"], 1):
        out.append(f"  {x} -> {{{','.join(map(str, ys))}}}")
    out.append("phi:")
    for entry in report["phi"]:
        out.append(f"  {_fmt(entry['generator'])} -> {{{', '.join(_fmt(t) for t in entry['images'])}}}")
    morph = report["morphism"]
    out.append(f"surjective: {str(morph['surjective']).lower()}, "
               f"injective on states: {str(morph['injective_on_states']).lower()}")
    out.append("")
    out.append(f"Top level: degree {tgt['degree']}, generators "
               + ", ".join(_fmt(t) for t in tgt["generators"]))
    out.append(f"The image semigroup has {tgt['elements']} elements"
               + (", aperiodic" if tgt["aperiodic"] else ", not aperiodic"))
    out.append("")
    out.append(f"Cascade product: ({cas['top_size']}, {cas['bottom_size']}) pts, "
               f"{len(cas['generators'])} generators, {cas['elements']} elements")
    for lift in cas["generators"]:
        out.append("")
        out.append(f"lift of {_fmt(lift['source'])}: {lift['summary']}")
        out.extend(lift["listing"])
    out.append("")
    out.append("psi:")
    for entry in report["psi"]:
        pairs = ", ".join(f"({y},{z})" for y, z in entry["pairs"])
        out.append(f"  {entry['x']} -> {{{pairs}}}")
    out.append("")
    out.append("Local components:")
    for comp in report["local_components"]:
        line = (f"  U_{comp['y']}: {comp['elements']} elements on {comp['size']} points, "
                f"{comp['permutations']} non-identity permutations")
        if comp["trivial"]:
            line += ", trivial"
        line += ", embedding verified" if comp["verified"] else ", embedding FAILED"
        out.append(line)
        if "listing" in comp and comp["listing"]:
            out.append("    " + " ".join(_fmt(u) for u in comp["listing"]))
        for failure in comp.get("failures", []):
            out.append(f"    failure: {failure}")
    if report["warnings"]:
        out.append("")
        for w in report["warnings"]:
            out.append(f"warning: {w}")
    out.append("")
    out.append("Verification:")
    ver = report["verification"]
    for c in ver["checks"]:
        line = f"  [{c['status']}] {c['name']}"
        if c["note"]:
            line += f" ({c['note']})"
        out.append(line)
        if c["counterexample"] is not None:
            out.append(f"      counterexample: {json.dumps(c['counterexample'], separators=(',', ':'))}")
    out.append("")
    out.append("RESULT: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(out) + "\n"
