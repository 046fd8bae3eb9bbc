"""Executable catalog of results about the w-core order, with generators and oracles."""

from .generators import GENERATORS, Instance, TrialConfig, random_matrix, random_wcore_instance, trial_rng
from .oracle import brute_force_inverse, enumerate_ring
from .properties import CATALOG, Context, PropertyId, PropertyOutcome, Verdict, check_property
from .suite import IdResult, SuiteReport, run_property, run_suite

__all__ = [
    "CATALOG",
    "Context",
    "GENERATORS",
    "IdResult",
    "Instance",
    "PropertyId",
    "PropertyOutcome",
    "SuiteReport",
    "TrialConfig",
    "Verdict",
    "brute_force_inverse",
    "check_property",
    "enumerate_ring",
    "random_matrix",
    "random_wcore_instance",
    "run_property",
    "run_suite",
    "trial_rng",
]
