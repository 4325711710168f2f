"""Sweep execution and the result-table structure shared by all exports."""

from dataclasses import dataclass, field

from ..model import simulate
from ..model.facility import OUTCOME_NAMES


@dataclass
class TableRow:
    """One scenario's outcome summary; key holds its sweep coordinates."""

    key: tuple
    mean: dict = field(default_factory=dict)
    sd: dict = field(default_factory=dict)
    n_replications: int = 0
    base_seed: int = 0
    error: str = None
    targets: dict = field(default_factory=dict)

    def cell(self, outcome):
        return self.mean.get(outcome), self.sd.get(outcome)


@dataclass
class ResultTable:
    """Rows of scenario outcomes, optionally joined with reference targets.

    orient picks the export layout: "outcomes_as_rows" matches the published
    one-row-per-outcome shape, "scenarios_as_rows" suits sweep grids.
    """

    title: str
    axes: tuple
    outcomes: tuple
    rows: list = field(default_factory=list)
    orient: str = "scenarios_as_rows"
    partial: bool = False

    def row_by_key(self, key):
        for row in self.rows:
            if row.key == tuple(key):
                return row
        raise KeyError(key)

    def column(self, outcome):
        return [row.mean.get(outcome) for row in self.rows]


def run_sweep(spec, n_workers=None, reps=None, base_seed=None):
    """Run every swept scenario and assemble the grid.

    Scenarios share the base seed, so random-number streams are common
    across the sweep: two scenarios differing in one parameter see
    identical draws everywhere that parameter has no reach. A failing
    scenario is recorded on its row and flags the table partial instead
    of aborting the others.
    """
    n_replications = reps if reps is not None else spec.n_replications
    seed = base_seed if base_seed is not None else spec.base_seed
    table = ResultTable(
        title=spec.label or ("setup-%d sweep" % spec.config_id),
        axes=spec.axes,
        outcomes=OUTCOME_NAMES,
    )
    for point in spec.points():
        row = TableRow(key=point, n_replications=n_replications,
                       base_seed=seed)
        try:
            config = spec.configuration_at(point)
            report = simulate(config, n_replications=n_replications,
                              horizon_days=spec.horizon_days,
                              warmup_days=spec.warmup_days,
                              base_seed=seed, n_workers=n_workers)
            row.mean = dict(report.mean)
            row.sd = dict(report.sd)
        except Exception as err:   # noqa: BLE001 - isolate scenario failures
            row.error = "%s: %s" % (type(err).__name__, err)
            table.partial = True
        table.rows.append(row)
    return table
