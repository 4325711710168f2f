"""Experiment orchestration: scenarios, sweeps, exhibit reproduction."""

from .export import export, import_table, render
from .reproduce import CheckReport, CheckResult, check_table, reproduce
from .runner import ResultTable, TableRow, run_sweep
from .scenario import ScenarioError, ScenarioSpec, load_scenario, parse_scenario
from .targets import ReferenceCell

__all__ = [
    "CheckReport",
    "CheckResult",
    "ReferenceCell",
    "ResultTable",
    "ScenarioError",
    "ScenarioSpec",
    "TableRow",
    "check_table",
    "export",
    "import_table",
    "load_scenario",
    "parse_scenario",
    "render",
    "reproduce",
    "run_sweep",
]
