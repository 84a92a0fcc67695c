"""One verification script per result, keyed by the identifiers the CLI accepts."""

from __future__ import annotations

from importlib import import_module

from ..errors import UnknownName

_MODULES = {
    "prop1.2": "transpose",
    "lemma1.4": "crossed_iso",
    "prop2.2": "twisted_cocycle",
    "prop2.3": "equivalence_relation",
    "lemma2.4a": "witness_composition",
    "thm2.5": "inverse_transfer",
    "prop3.4": "lift_restrict",
    "thm3.5": "crossed_witness",
    "lemma3.1": "beta_variants",
    "thm3.2": "galois_twisting",
    "thm3.3": "witness_extraction",
}

THEOREM_IDS = tuple(_MODULES)


def suite(theorem_id: str):
    try:
        return import_module(f".{_MODULES[theorem_id]}", __name__)
    except KeyError:
        raise UnknownName(f"unknown theorem id {theorem_id!r}; known: "
                          f"{', '.join(THEOREM_IDS)}") from None


def verify(theorem_id: str, instance: str | None = None, fld=None):
    from ..field import QQ

    mod = suite(theorem_id)
    instance = instance or mod.DEFAULT
    if instance not in mod.INSTANCES:
        raise UnknownName(f"suite {theorem_id} has no instance {instance!r}; "
                          f"known: {', '.join(mod.INSTANCES)}")
    return mod.run(instance, fld or QQ)
