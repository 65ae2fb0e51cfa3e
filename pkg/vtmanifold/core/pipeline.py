"""Verification pipeline for a single complex: connectivity, homology, link and sphere checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import config

from ..logging import LOGGER
from .bistellar import ReduceResult, Verdict, links_are_spheres, reduce
from .classify import ManifoldRecord, type_label
from .complex import (
    SimplicialComplex,
    Step3Result,
    euler_characteristic,
    f_vector,
    is_connected,
    is_neighborly,
    is_orientable,
    is_strongly_connected,
    link,
    require_pseudomanifold,
    sphere_euler,
    step3_tests,
)
from .homology import HomologyProfile, integer_homology, is_sphere_homology, poincare_z2_check

SURFACE_NAMES = {
    "S^2": "sphere",
    "T^2": "torus",
    "RP^2": "projective plane",
    "Klein bottle": "Klein bottle",
}


@dataclass
class Assessment:
    status: str
    homology: Optional[HomologyProfile]
    links_verified: bool
    sphere: ReduceResult
    label: Optional[str] = None

    @property
    def undetermined(self) -> bool:
        return self.status in ("candidate", "verified-manifold")


def _low_dim_link_ok(M: SimplicialComplex, v: int) -> bool:
    L = link(M, (v,))
    if M.d == 1:
        return len(L.facets) == 2
    if not is_connected(L) or euler_characteristic(L) != sphere_euler(M.d - 1):
        return False
    # in dimension 3 the link must itself be a closed surface
    return M.d < 3 or all(is_connected(link(L, (w,))) for w in L.vertices)


def links_verified(
    M: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
    vertices: Optional[List[int]] = None,
) -> bool:
    """Vertex links are spheres; decided outright up to dimension 3, by reduction above."""
    if M.d <= 3:
        return all(_low_dim_link_ok(M, v) for v in vertices or M.vertices)
    for v in vertices or M.vertices:
        if not links_are_spheres(M, seed, budget, v).is_sphere:
            LOGGER(__name__).info(f"link of vertex {v} was not reduced to a simplex boundary")
            return False
    return True


def assess(
    M: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
    transitive: bool = False,
    max_cells: int = config.HOMOLOGY_MAX_CELLS,
) -> Assessment:
    profile = integer_homology(M, max_cells) if is_connected(M) else None
    verified = links_verified(M, seed, budget, [M.vertices[0]] if transitive else None)
    sphere = reduce(M, seed, budget)
    if not verified:
        return Assessment("candidate", profile, False, sphere)
    if sphere.is_sphere:
        return Assessment("sphere", profile, True, sphere, f"S^{M.d}")
    if M.d == 2 or (profile is not None and not is_sphere_homology(profile)):
        label = type_label(M, profile)
        return Assessment(f"typed:{label}", profile, True, sphere, label)
    return Assessment("verified-manifold", profile, True, sphere)


def annotate(record: ManifoldRecord, M: SimplicialComplex, seed: int, budget: int) -> ManifoldRecord:
    """Fill status, homology and remarks of a freshly enumerated record."""
    result = assess(M, seed, budget, transitive=True)
    record.status = result.status
    record.homology = result.homology.to_dict() if result.homology else None
    record.seed = seed
    remarks = [result.label] if result.label else []
    k = is_neighborly(M)
    if k >= 2:
        remarks.append(f"{k}-neighborly")
    record.remarks = ", ".join(remarks)
    return record


@dataclass
class VerifyReport:
    n: int
    d: int
    f_vector: tuple
    euler: int
    step3: Step3Result
    strongly_connected: bool
    orientable: Optional[bool] = None
    homology: Optional[HomologyProfile] = None
    poincare: Optional[bool] = None
    assessment: Optional[Assessment] = None
    notes: List[str] = field(default_factory=list)

    @property
    def is_manifold(self) -> bool:
        return bool(self.step3) and self.strongly_connected and (
            self.assessment is not None and self.assessment.links_verified
        )

    def summary(self) -> str:
        a = self.assessment
        if a is not None and a.sphere.is_sphere:
            return "sphere (reduced to boundary of simplex)"
        if not self.is_manifold:
            reason = self.step3.reason if not self.step3 else "vertex links not verified"
            if not self.strongly_connected:
                reason = "not strongly connected"
            return f"not verified as a manifold: {reason}"
        parts = [f"{self.d}-manifold", f"χ={self.euler}"]
        if self.orientable is not None:
            parts.append("orientable" if self.orientable else "non-orientable")
        if a.label:
            parts.append(SURFACE_NAMES.get(a.label, a.label))
        else:
            parts.append("type undetermined")
        return ", ".join(parts)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "d": self.d,
            "f_vector": list(self.f_vector),
            "euler": self.euler,
            "step3": self.step3.reason,
            "strongly_connected": self.strongly_connected,
            "orientable": self.orientable,
            "homology": self.homology.to_dict() if self.homology else None,
            "poincare_z2": self.poincare,
            "status": self.assessment.status if self.assessment else None,
            "summary": self.summary(),
        }


def verify_complex(
    M: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
) -> VerifyReport:
    """Steps 3, 5 and 6 on a user-supplied complex; raises NotPseudomanifold on a bad ridge."""
    require_pseudomanifold(M)
    report = VerifyReport(
        len(M.vertices),
        M.d,
        f_vector(M),
        euler_characteristic(M),
        step3_tests(M),
        is_strongly_connected(M),
    )
    if report.strongly_connected:
        report.orientable = is_orientable(M)
    if not report.step3 or not report.strongly_connected:
        return report
    report.assessment = assess(M, seed, budget)
    report.homology = report.assessment.homology
    if report.homology is not None:
        report.poincare = poincare_z2_check(M, report.homology)
    if report.assessment.sphere.verdict == Verdict.budget_exhausted:
        report.notes.append("bistellar budget exhausted")
    return report
