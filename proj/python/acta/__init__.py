"""Finite monoid acts: congruences, cogeneration, structure and classification."""

import json as _json

from ._core import (
    Act,
    ActaError,
    Monoid,
    all_congruences,
    claim_ids,
    count_homs,
    cotrace,
    enumerate_acts,
    enumerate_monoids,
    is_cogenerated,
    load_act,
    load_monoid,
    regular_act,
    right_annihilator,
    semilattice_1oef,
)
from . import _core


def structure_report(act):
    """Socle, S(A), radical and the related subact lists as a dict."""
    return _json.loads(_core.structure_report(act))


def classification_report(act):
    """Faithful, cofaithful, subgenerator, generator and related flags as a dict."""
    return _json.loads(_core.classification_report(act))


def run_claims(max_monoid=3, max_act=4, claims=(), jobs=1):
    """Checks the registered claims on a universe and returns the report."""
    return _json.loads(_core.run_claims(max_monoid, max_act, list(claims), jobs))


def act_json(act):
    return _json.loads(_core.to_json(act))


__all__ = [
    "Act",
    "ActaError",
    "Monoid",
    "act_json",
    "all_congruences",
    "claim_ids",
    "classification_report",
    "count_homs",
    "cotrace",
    "enumerate_acts",
    "enumerate_monoids",
    "is_cogenerated",
    "load_act",
    "load_monoid",
    "regular_act",
    "right_annihilator",
    "run_claims",
    "semilattice_1oef",
    "structure_report",
]
