# -*- coding: utf-8 -*-

import json

from aqcoalg.exceptions import BudgetExceeded
from aqcoalg.exceptions import Error
from aqcoalg.exceptions import ValidationError
from aqcoalg.wrappers import make_caps
from aqcoalg.write import bigraded_frame
from aqcoalg.write import levels_frame

CAPS_OPTIONS = """
        { --pmax= : Largest cohomological degree of Cotor and spectral
        sequence pages. }
        { --smax= : Largest cosimplicial degree; objects are built with
        smax + 1 levels. }
        { --cap-dim= : Dimension budget of a single stage. }
        { --jobs= : Number of worker processes. }
        { --cache-dir= : Directory for cached reports. Defaults to the
        AQCOALG_CACHE_DIR environment variable. }
        { --o|out= : Write the report to this file instead of stdout. }
        { --j|json : Print the JSON report instead of tables. }
"""


def parse_int(val, name):
    """Parse a number to an integer if possible"""
    if val is None:
        return val
    try:
        return int(val)
    except ValueError:
        raise ValueError(
            f"Please provide a number for {name}, instead of {val}"
        )


def caps_from_options(command):
    return make_caps(
        pmax=parse_int(command.option("pmax"), "pmax"),
        smax=parse_int(command.option("smax"), "smax"),
        budget=parse_int(command.option("cap-dim"), "cap-dim"),
        jobs=parse_int(command.option("jobs"), "jobs"),
        cache_dir=command.option("cache-dir"),
    )


def _is_table(value):
    return (
        isinstance(value, list)
        and value
        and all(isinstance(row, list) for row in value)
        and all(isinstance(x, int) for row in value for x in row)
    )


def _is_bigraded(value):
    return (
        isinstance(value, dict)
        and value
        and all("," in k for k in value)
        and all(isinstance(v, int) for v in value.values())
    )


def render(text):
    """Human readable lines for a report: scalars as ``key = value`` and
    dimension tables as pandas frames."""
    doc = json.loads(text)
    lines = ["%s %s: %s" % (doc["tool"], doc["version"], doc["command"])]
    if doc.get("caps"):
        caps = doc["caps"]
        lines.append(", ".join("%s = %s" % (k, caps[k]) for k in sorted(caps)))

    def walk(prefix, value):
        if _is_table(value):
            lines.append("%s:" % prefix)
            lines.append(levels_frame(value).to_string())
        elif _is_bigraded(value):
            dims = {tuple(map(int, k.split(",")[:2])): v for k, v in value.items()}
            lines.append("%s:" % prefix)
            lines.append(bigraded_frame(dims, index="p", columns="q").to_string())
        elif isinstance(value, dict):
            for k in sorted(value):
                walk("%s.%s" % (prefix, k) if prefix else k, value[k])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk("%s[%i]" % (prefix, i), item)
        else:
            lines.append("%s = %s" % (prefix, json.dumps(value, sort_keys=True)))

    walk("", doc["results"])
    for flag in doc.get("flags", []):
        lines.append("flag: %s" % json.dumps(flag, sort_keys=True))
    return lines


def emit(command, text):
    """Write a report to ``--out`` or print it."""
    out = command.option("out")
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="\n") as fid:
            fid.write(text)
        return
    if command.option("json"):
        command.line(text.rstrip("\n"))
        return
    for line in render(text):
        command.line(line)


def guarded(command, func):
    """Run ``func`` and translate library errors into exit codes."""
    try:
        text = func()
    except Error as e:
        command.line_error("%s: %s" % (type(e).__name__, e))
        if isinstance(e, ValidationError) and e.report is not None:
            for violation in e.report.violations:
                command.line_error("  %s" % violation)
        if isinstance(e, BudgetExceeded):
            command.line_error(
                "  stage = %s, needed = %s, budget = %s"
                % (e.stage, e.needed, e.budget)
            )
        return e.exit_code
    except ValueError as e:
        command.line_error(str(e))
        return 1
    emit(command, text)
    return 0
