"""JSON-facing builders and parsers for the command line and for re-verification.

All payloads are deterministic: orderings come from the deterministic
orderings of the underlying objects, and serialization sorts keys.
"""

from __future__ import annotations

from typing import Optional

from .chartable import CharacterTable, character_table, fixed_space_dimension
from .criteria import CMVerdict, IsogenyRelation, RelationReport
from .errors import InvalidPermutation
from .group import FiniteGroup, Subgroup
from .perm import Permutation
from .surface import QuasiplatonicSurface, analytic_character, quotient_surface


def group_from_json(data: dict, max_order: int) -> FiniteGroup:
    if not isinstance(data, dict) or "degree" not in data or "generators" not in data:
        raise InvalidPermutation('group file needs {"degree": int, "generators": [[int,...],...]}')
    degree = int(data["degree"])
    gens = [Permutation(images) for images in data["generators"]]
    for g in gens:
        if g.degree != degree:
            raise InvalidPermutation("generator degree does not match the declared degree")
    return FiniteGroup.from_generators(degree, gens, max_order=max_order)


def subgroup_from_generators(G: FiniteGroup, gen_images) -> Subgroup:
    gens = [Permutation(images) for images in gen_images]
    return G.subgroup_generated(gens)


def relation_from_json(G: FiniteGroup, data: dict) -> IsogenyRelation:
    factors = tuple((subgroup_from_generators(G, f["subgroup_gens"]), int(f["multiplicity"]))
                    for f in data["factors"])
    return IsogenyRelation(int(data["n"]), factors)


def signature_json(sig) -> dict:
    return {"orbit_genus": sig.orbit_genus, "periods": list(sig.periods)}


def group_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "degree": G.degree,
            "generators": [list(g.images) for g in G.generators]}


def character_table_json(T: CharacterTable) -> dict:
    classes = [{"representative": cls.representative.cycle_string(),
                "size": cls.size, "order": cls.order}
               for cls in T.group.conjugacy_classes()]
    return {
        "conductor": T.conductor,
        "classes": classes,
        "degrees": list(T.degrees()),
        "irreducibles": [[v.to_string() for v in chi.values] for chi in T.irreducibles],
    }


def quotient_table_json(X: QuasiplatonicSurface, T: Optional[CharacterTable] = None) -> list:
    """Per-subgroup quotient rows; genus is reported by both methods when a
    character table is supplied."""
    chi_a = analytic_character(X, T) if T is not None else None
    rows = []
    for H in X.group.all_subgroups():
        q = quotient_surface(X, H)
        row = {
            "subgroup_gens": [list(g.images) for g in H.generators()],
            "subgroup_cycles": [g.cycle_string() for g in H.generators()],
            "order": H.order,
            "index": H.index,
            "genus": q.genus,
            "branch_data": [[period, list(lengths)] for period, lengths in q.branch_data],
        }
        if chi_a is not None:
            row["genus_by_character"] = fixed_space_dimension(chi_a, H)
        rows.append(row)
    return rows


def relation_json(X: QuasiplatonicSurface, relation: IsogenyRelation,
                  certificates=()) -> dict:
    cert_by_subgroup = {c.subgroup: c for c in certificates}
    factors = []
    for H, mult in relation.factors:
        entry = {
            "subgroup_gens": [list(g.images) for g in H.generators()],
            "subgroup_cycles": [g.cycle_string() for g in H.generators()],
            "multiplicity": mult,
            "genus": quotient_surface(X, H).genus,
        }
        cert = cert_by_subgroup.get(H)
        if cert is not None:
            entry["route"] = cert.route
            entry["evidence"] = cert.as_json()["evidence"]
        factors.append(entry)
    return {"n": relation.n, "factors": factors}


def verdict_json(X: QuasiplatonicSurface, verdict: CMVerdict) -> dict:
    payload = {
        "status": verdict.status,
        "streit_value": verdict.streit_value,
        "relation": None,
        "irreducible_report": None,
    }
    if verdict.relation is not None:
        payload["relation"] = relation_json(X, verdict.relation, verdict.certificates)
    if verdict.relation_report is not None:
        payload["irreducible_report"] = [r.as_json() for r in verdict.relation_report.rows]
    if verdict.search_log:
        payload["search_log"] = list(verdict.search_log)
    return payload


def relation_report_json(report: RelationReport) -> dict:
    return report.as_json()
