"""Closed-form queueing estimates and their facility adapters."""

from .adapter import (
    additive_job_classes,
    approximation_report,
    doctor_domination,
    doctor_rho_1,
    doctor_rho_a,
    doctor_rho_ap,
    setup_job_classes,
)
from .queueing import (
    ApproximationReport,
    JobClassSpec,
    UtilizationSample,
    additive_utilization,
    class_utilization,
    domination_factor,
    effective_service_time,
    interval_contains,
    kingman_wait,
    mg1_wait,
    normal_k_alpha,
    one_sample_t,
    one_sample_t_summary,
    rho_ap,
    student_k_alpha,
    theorem_c1_check,
    theorem_c2_interval,
)

__all__ = [
    "additive_job_classes",
    "approximation_report",
    "doctor_domination",
    "doctor_rho_1",
    "doctor_rho_a",
    "doctor_rho_ap",
    "setup_job_classes",
    "ApproximationReport",
    "JobClassSpec",
    "UtilizationSample",
    "additive_utilization",
    "class_utilization",
    "domination_factor",
    "effective_service_time",
    "interval_contains",
    "kingman_wait",
    "mg1_wait",
    "normal_k_alpha",
    "one_sample_t",
    "one_sample_t_summary",
    "rho_ap",
    "student_k_alpha",
    "theorem_c1_check",
    "theorem_c2_interval",
]
