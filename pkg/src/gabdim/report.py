"""JSON serialization of verification reports, with a fixed key order."""

import json


def _interval_names(lattice, iv):
    return [lattice.names[iv[0]], lattice.names[iv[1]]]


def report_dict(report):
    L = report.lattice
    checks = []
    for c in report.checks:
        entry = {"name": c.name, "pass": c.passed}
        if c.counterexample is not None:
            entry["counterexample"] = _interval_names(L, c.counterexample)
        checks.append(entry)
    return {
        "lattice": {"name": L.name, "size": L.size, "modular": L.modular},
        "stages": [{"index": k, "set_size": len(s)} for k, s in enumerate(report.filtration.stages)],
        "stabilization_index": report.filtration.stabilization_index,
        "checks": checks,
        "dimensions": [
            {"lower": L.names[a], "upper": L.names[b], "gdim": d}
            for (a, b), d in report.dimensions.values.items()
        ],
        "notes": list(report.notes),
    }


def write_report(report):
    """Serialize one report (or a list of reports) as JSON text."""
    if isinstance(report, (list, tuple)):
        payload = [report_dict(r) for r in report]
    else:
        payload = report_dict(report)
    return json.dumps(payload, indent=2) + "\n"
