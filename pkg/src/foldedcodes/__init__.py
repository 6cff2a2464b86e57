"""Linear codes under the folded Hamming metric: finite fields, exact linear
algebra, QMDS classification, weight distributions, constructions, bounds and
pseudo arcs."""

from __future__ import annotations

import json
from importlib import resources

from foldedcodes.code import (
    Isometry,
    LinearCode,
    apply_isometry,
    dual,
    expand_code,
    folded_weight,
    from_generator,
    load_code,
    min_distance,
    restrict,
    save_code,
    shorten,
)
from foldedcodes.errors import BudgetExceededError, DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import GF, FieldExtension, FieldSpec, OrderedBasis, field_create
from foldedcodes.qmds import Classification, classify, classify_auto, singleton_bounds

FIXTURES = ("qmds_3_3_4", "dually_qmds_7_2_3", "qmds_9_2_13", "dually_qmds_6_2_5")


def fixture_path(name: str):
    return resources.files("foldedcodes") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> LinearCode:
    """One of the bundled example codes over F_2 (see FIXTURES)."""
    if name not in FIXTURES:
        raise DomainError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return LinearCode.from_json(json.loads(fixture_path(name).read_text()))


__all__ = [
    "BudgetExceededError",
    "Classification",
    "DomainError",
    "FIXTURES",
    "FieldExtension",
    "FieldSpec",
    "GF",
    "Isometry",
    "LinearCode",
    "MatrixFq",
    "OrderedBasis",
    "apply_isometry",
    "classify",
    "classify_auto",
    "dual",
    "expand_code",
    "field_create",
    "fixture_path",
    "folded_weight",
    "from_generator",
    "load_code",
    "load_fixture",
    "min_distance",
    "restrict",
    "save_code",
    "shorten",
    "singleton_bounds",
]
