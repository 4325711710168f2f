"""The clinic domain model: configurations, pathways, facility, simulation."""

from .config import (
    InterventionFlags,
    PhcConfiguration,
    apply_interventions,
    build_configuration,
    validation_mode,
)
from .facility import Facility, OUTCOME_NAMES
from .patients import PatientRecord
from .pathways import spawn_arrivals
from .simulate import (
    OutcomeReport,
    ReplicationResult,
    run_replication,
    simulate,
)

__all__ = [
    "Facility",
    "InterventionFlags",
    "OUTCOME_NAMES",
    "OutcomeReport",
    "PatientRecord",
    "PhcConfiguration",
    "ReplicationResult",
    "apply_interventions",
    "build_configuration",
    "run_replication",
    "simulate",
    "spawn_arrivals",
    "validation_mode",
]
