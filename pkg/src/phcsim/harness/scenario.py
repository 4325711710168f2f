"""Scenario files: a small JSON format describing what to run.

A scenario names a base setup, optional field overrides and intervention
flags, the replication budget, and optional sweep axes (axis name to value
list). Axes may be numeric configuration fields or one of a few friendly
aliases that expand to field overrides, so a file can say
"consult_mean": [0.87, 2.5, 5] instead of spelling out distributions.
"""

import dataclasses
import itertools
import json

from ..kernel.distributions import TruncatedNormal
from ..model import (InterventionFlags, apply_interventions,
                     build_configuration)
from ..model.config import PhcConfiguration
from ..model.simulate import DEFAULT_SEED

SCHEMA_VERSION = 1
DEFAULT_SWEEP_CAP = 64

_CONFIG_FIELDS = {f.name for f in dataclasses.fields(PhcConfiguration)}
_FLAG_FIELDS = {f.name for f in dataclasses.fields(InterventionFlags)}

_TOP_KEYS = {
    "schema_version", "label", "configuration", "overrides", "interventions",
    "replications", "horizon_days", "warmup_days", "base_seed", "sweep",
    "sweep_cap", "output",
}


class ScenarioError(ValueError):
    """Raised for malformed scenario files; message carries the field path."""


def consult_profile(mean):
    """Consult distribution for a swept mean.

    Short consults keep the brief-visit spread (sd 0.21, floor 0.5 min);
    anything longer uses the detailed-visit spread (sd 1, floor 2 min).
    """
    if mean <= 1.0:
        return TruncatedNormal(mean, 0.21, 0.5)
    return TruncatedNormal(mean, 1.0, 2.0)


def _alias_consult(base, value):
    return {"doctor_opd_consult": consult_profile(float(value))}


def _alias_opd_iat(base, value):
    return {"opd_interarrival_mean": float(value)}


def _alias_opd_load(base, value):
    if value <= 0:
        raise ScenarioError("sweep.opd_daily_load: loads must be positive")
    return {"opd_interarrival_mean": base.opd_window_minutes / float(value)}


def _alias_emergency_multiplier(base, value):
    if value <= 0:
        raise ScenarioError(
            "sweep.emergency_load_multiplier: multipliers must be positive")
    out = {"ipd_interarrival_mean": base.ipd_interarrival_mean / value}
    if base.childbirth_enabled:
        out["childbirth_interarrival_mean"] = (
            base.childbirth_interarrival_mean / value)
    if base.anc_enabled:
        out["anc_interarrival_mean"] = base.anc_interarrival_mean / value
    return out


def _alias_childbirth_load(base, value):
    if value <= 0:
        raise ScenarioError(
            "sweep.childbirth_daily_load: loads must be positive")
    return {"childbirth_interarrival_mean": 1440.0 / float(value)}


# axis name -> function(base_config, value) -> field overrides
AXIS_ALIASES = {
    "consult_mean": _alias_consult,
    "opd_iat": _alias_opd_iat,
    "opd_daily_load": _alias_opd_load,
    "emergency_load_multiplier": _alias_emergency_multiplier,
    "childbirth_daily_load": _alias_childbirth_load,
}


@dataclasses.dataclass(frozen=True)
class ScenarioSpec:
    """A validated scenario: base setup, budget, and optional sweep."""

    config_id: int = 1
    overrides: dict = dataclasses.field(default_factory=dict)
    interventions: InterventionFlags = None
    n_replications: int = 100
    horizon_days: int = 365
    warmup_days: int = 180
    base_seed: int = DEFAULT_SEED
    sweep: dict = dataclasses.field(default_factory=dict)
    sweep_cap: int = DEFAULT_SWEEP_CAP
    output: str = None
    label: str = None

    @property
    def axes(self):
        return tuple(self.sweep)

    def scenario_count(self):
        count = 1
        for values in self.sweep.values():
            count *= len(values)
        return count

    def points(self):
        """Coordinate tuples in file order, one per swept scenario."""
        if not self.sweep:
            return [()]
        return [tuple(combo) for combo in
                itertools.product(*self.sweep.values())]

    def base_configuration(self):
        cfg = build_configuration(self.config_id, **self.overrides)
        if self.interventions is not None:
            cfg = apply_interventions(cfg, self.interventions)
        return cfg

    def configuration_at(self, point):
        """Build the configuration for one coordinate tuple."""
        base = build_configuration(self.config_id, **self.overrides)
        overrides = dict(self.overrides)
        for axis, value in zip(self.axes, point):
            if axis in AXIS_ALIASES:
                overrides.update(AXIS_ALIASES[axis](base, value))
            else:
                overrides[axis] = value
        cfg = build_configuration(self.config_id, **overrides)
        if self.interventions is not None:
            cfg = apply_interventions(cfg, self.interventions)
        return cfg


def _require(condition, path, message):
    if not condition:
        raise ScenarioError("%s: %s" % (path, message))


def _int_field(data, key, default, minimum=1):
    value = data.get(key, default)
    _require(isinstance(value, int) and not isinstance(value, bool),
             key, "expected an integer")
    _require(value >= minimum, key, "must be >= %d" % minimum)
    return value


def load_scenario(data):
    """Validate a parsed scenario document into a ScenarioSpec."""
    _require(isinstance(data, dict), "$", "expected a JSON object")
    unknown = set(data) - _TOP_KEYS
    _require(not unknown, ", ".join(sorted(unknown)), "unknown key")

    version = data.get("schema_version", SCHEMA_VERSION)
    _require(version == SCHEMA_VERSION, "schema_version",
             "unsupported version %r" % (version,))

    config_id = data.get("configuration", 1)
    _require(isinstance(config_id, int) and not isinstance(config_id, bool),
             "configuration", "expected a setup id integer")

    overrides = data.get("overrides", {})
    _require(isinstance(overrides, dict), "overrides", "expected an object")
    for key, value in overrides.items():
        _require(key in _CONFIG_FIELDS, "overrides.%s" % key,
                 "not a configuration field")
        _require(isinstance(value, (int, float, bool)) or value is None,
                 "overrides.%s" % key, "expected a number, boolean or null")

    flags = None
    raw_flags = data.get("interventions")
    if raw_flags is not None:
        _require(isinstance(raw_flags, dict), "interventions",
                 "expected an object")
        for key in raw_flags:
            _require(key in _FLAG_FIELDS, "interventions.%s" % key,
                     "not an intervention flag")
        mix = raw_flags.get("childbirth_intervention_mix")
        if isinstance(mix, list):
            raw_flags = dict(raw_flags,
                             childbirth_intervention_mix=tuple(mix))
        try:
            flags = InterventionFlags(**raw_flags)
        except (TypeError, ValueError) as err:
            raise ScenarioError("interventions: %s" % err)

    sweep = data.get("sweep", {})
    _require(isinstance(sweep, dict), "sweep", "expected an object")
    clean_sweep = {}
    for axis, values in sweep.items():
        path = "sweep.%s" % axis
        _require(axis in AXIS_ALIASES or axis in _CONFIG_FIELDS, path,
                 "not a sweepable axis")
        _require(isinstance(values, list) and values, path,
                 "expected a nonempty list of values")
        for v in values:
            _require(isinstance(v, (int, float))
                     and not isinstance(v, bool), path,
                     "expected numeric values")
        clean_sweep[axis] = [float(v) for v in values]

    sweep_cap = _int_field(data, "sweep_cap", DEFAULT_SWEEP_CAP)

    label = data.get("label")
    _require(label is None or isinstance(label, str), "label",
             "expected a string")
    output = data.get("output")
    _require(output is None or isinstance(output, str), "output",
             "expected a path string")

    spec = ScenarioSpec(
        config_id=config_id,
        overrides=overrides,
        interventions=flags,
        n_replications=_int_field(data, "replications", 100),
        horizon_days=_int_field(data, "horizon_days", 365),
        warmup_days=_int_field(data, "warmup_days", 180, minimum=0),
        base_seed=_int_field(data, "base_seed", DEFAULT_SEED, minimum=0),
        sweep=clean_sweep,
        sweep_cap=sweep_cap,
        output=output,
        label=label,
    )
    _require(spec.warmup_days < spec.horizon_days, "warmup_days",
             "must end before the horizon")
    _require(spec.scenario_count() <= spec.sweep_cap, "sweep",
             "%d scenarios exceed the cap of %d"
             % (spec.scenario_count(), spec.sweep_cap))

    # surface base-configuration errors at parse time with a field path
    try:
        spec.base_configuration()
    except (TypeError, ValueError) as err:
        raise ScenarioError("overrides: %s" % err)
    return spec


def parse_scenario(path):
    """Read and validate a scenario file."""
    with open(path) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as err:
            raise ScenarioError("%s: not valid JSON (%s)" % (path, err))
    return load_scenario(data)
