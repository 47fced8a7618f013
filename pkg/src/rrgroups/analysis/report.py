"""Stable JSON summary of a group."""

from __future__ import annotations

from ..matgroup import MatrixGroup
from .elements import generated_by_reflections_and_rotations, generated_by_rotations, inventory
from .linear import commutant_dimension, irreducible_components


def report(G: MatrixGroup, extra_checks: dict[str, bool] | None = None) -> dict:
    inv = inventory(G)
    checks = {
        "generated_by_rotations": generated_by_rotations(G, inv),
        "generated_by_reflections_and_rotations": generated_by_reflections_and_rotations(G, inv),
    }
    expected = G.meta.get("expected_order")
    if expected is not None:
        checks["expected_order"] = G.order() == expected
    checks.update(extra_checks or {})
    counts = inv.counts()
    return {
        "name": G.name,
        "order": G.order(),
        "reflections": counts["reflections"],
        "rotations": counts["rotations"],
        "rotation_orders": counts["rotation_orders"],
        "commutant_dim": commutant_dimension(G),
        "components": [c.dim for c in irreducible_components(G)],
        "checks": {k: "pass" if v else "fail" for k, v in checks.items()},
    }
