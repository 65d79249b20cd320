"""Table, CSV and JSON rendering of flat records."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction


def _plain(value):
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return value


def _json_default(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if hasattr(value, "value"):
        return value.value
    raise TypeError("not serialisable: %r" % (value,))


def columns_of(records) -> list:
    cols = []
    for rec in records:
        for key in rec:
            if key not in cols:
                cols.append(key)
    return cols


def to_csv(records, header_comment: str = None) -> str:
    buf = io.StringIO()
    if header_comment:
        buf.write("# %s\n" % header_comment)
    cols = columns_of(records)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([_plain(rec.get(c)) for c in cols])
    return buf.getvalue()


def to_json(records) -> str:
    return json.dumps(records, indent=2, default=_json_default) + "\n"


def to_table(records, header_comment: str = None) -> str:
    cols = columns_of(records)
    cells = [[str(_plain(rec.get(c))) for c in cols] for rec in records]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = []
    if header_comment:
        lines.append("# %s" % header_comment)
    lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(records, fmt: str, header_comment: str = None) -> str:
    if fmt == "json":
        return to_json(records)
    if fmt == "csv":
        return to_csv(records, header_comment)
    return to_table(records, header_comment)
