"""Result-table serialization: CSV for plotting, JSON for full fidelity.

CSV renders numbers at six significant digits and writes "NA" for
inapplicable cells. JSON mirrors the table structure exactly (keys sorted,
full float precision) so an exported table re-imports identical.
"""

import csv
import io
import json

from .runner import ResultTable, TableRow
from .targets import ReferenceCell, SETUP_LABELS

FORMATS = ("csv", "json")


def format_number(value):
    if value is None:
        return "NA"
    return "%.6g" % value


def _cell_text(mean, sd):
    if mean is None:
        return "NA"
    if sd is None:
        return format_number(mean)
    return "%s (%s)" % (format_number(mean), format_number(sd))


def _row_label(key):
    if len(key) == 1 and key[0] in SETUP_LABELS:
        return SETUP_LABELS[key[0]]
    return ", ".join(format_number(v) for v in key)


def _csv_scenarios_as_rows(table, writer):
    writer.writerow(list(table.axes) + list(table.outcomes))
    for row in table.rows:
        head = [format_number(v) for v in row.key]
        if row.error is not None:
            writer.writerow(head + ["ERROR: " + row.error]
                            + [""] * (len(table.outcomes) - 1))
            continue
        writer.writerow(head + [_cell_text(*row.cell(name))
                                for name in table.outcomes])


def _csv_outcomes_as_rows(table, writer):
    labels = [_row_label(row.key) for row in table.rows]
    with_targets = any(row.targets for row in table.rows)
    header = ["outcome"]
    for label in labels:
        header.append(label)
        if with_targets:
            header.append(label + " target")
            header.append(label + " deviation")
    writer.writerow(header)
    for name in table.outcomes:
        line = [name]
        for row in table.rows:
            if row.error is not None:
                line.append("ERROR: " + row.error)
            else:
                line.append(_cell_text(*row.cell(name)))
            if with_targets:
                cell = row.targets.get(name)
                observed = row.mean.get(name)
                if cell is None:
                    line += ["", ""]
                else:
                    dev = cell.deviation(observed)
                    line.append(format_number(cell.value))
                    line.append(format_number(dev[0]) if dev else "NA")
        writer.writerow(line)


def render_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if table.orient == "outcomes_as_rows":
        _csv_outcomes_as_rows(table, writer)
    else:
        _csv_scenarios_as_rows(table, writer)
    return buffer.getvalue()


def _target_dict(cell):
    return {
        "exhibit": cell.exhibit, "row": cell.row, "column": cell.column,
        "value": cell.value, "sd": cell.sd, "tolerance": cell.tolerance,
        "decimals": cell.decimals,
    }


def table_to_dict(table):
    return {
        "title": table.title,
        "axes": list(table.axes),
        "outcomes": list(table.outcomes),
        "orient": table.orient,
        "partial": table.partial,
        "rows": [{
            "key": list(row.key),
            "n_replications": row.n_replications,
            "base_seed": row.base_seed,
            "error": row.error,
            "mean": row.mean,
            "sd": row.sd,
            "targets": {name: _target_dict(cell)
                        for name, cell in sorted(row.targets.items())},
        } for row in table.rows],
    }


def table_from_dict(data):
    rows = []
    for raw in data["rows"]:
        rows.append(TableRow(
            key=tuple(raw["key"]),
            mean=dict(raw["mean"]),
            sd=dict(raw["sd"]),
            n_replications=raw["n_replications"],
            base_seed=raw["base_seed"],
            error=raw["error"],
            targets={name: ReferenceCell(**cell)
                     for name, cell in raw["targets"].items()},
        ))
    return ResultTable(
        title=data["title"],
        axes=tuple(data["axes"]),
        outcomes=tuple(data["outcomes"]),
        rows=rows,
        orient=data["orient"],
        partial=data["partial"],
    )


def render_json(table):
    return json.dumps(table_to_dict(table), indent=2, sort_keys=True) + "\n"


def render(table, fmt):
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return render_json(table)
    raise ValueError("unknown format %r; choose csv or json" % (fmt,))


def export(table, fmt="csv", out=None):
    """Write the table to a file and return its path."""
    if out is None:
        raise ValueError("export needs an output path")
    text = render(table, fmt)
    with open(out, "w", newline="") as handle:
        handle.write(text)
    return out


def import_table(path):
    """Read a JSON export back into an identical ResultTable."""
    with open(path) as handle:
        return table_from_dict(json.load(handle))
