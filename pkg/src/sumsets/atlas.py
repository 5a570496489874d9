"""Atlas files: JSON tables of RangeResults, plus CSV and text views.

JSON is the exchange format.  Integers that may exceed 2**53 are written as
decimal strings; readers accept either form.  Witnesses are recomputed on load
and a mismatch rejects the whole file.
"""

import csv
import io
import json
import os
from pathlib import Path

from . import __version__
from .core import IntegerSet
from .rangeset import RangeResult, verify_structure

SCHEMA_VERSION = 1
CLOSED_FORM = "closed-form"
_SAFE_INT = 2**53


class AtlasFormatError(ValueError):
    pass


def _enc(n):
    return str(n) if abs(n) >= _SAFE_INT else n


def _dec(v):
    return int(v)


def entry_from_result(result, report=None):
    if report is None:
        report = verify_structure(result)
    return {
        "h": result.h,
        "k": result.k,
        "bound": CLOSED_FORM if result.search_bound is None else _enc(result.search_bound),
        "complete": result.complete,
        "source": result.source,
        "sizes": [_enc(t) for t in result.sizes],
        "witnesses": {str(t): str(w) for t, w in sorted(result.witnesses.items())},
        "missing": list(report.missing),
        "examined": _enc(result.examined),
        "report": report.summary(),
    }


def result_from_entry(entry):
    bound = entry["bound"]
    wit = {int(t): IntegerSet.parse(w) for t, w in entry["witnesses"].items()}
    sizes = {_dec(t) for t in entry["sizes"]}
    if not set(wit) <= sizes:
        raise AtlasFormatError(f"witness for a size not listed (h={entry['h']} k={entry['k']})")
    return RangeResult(
        h=entry["h"],
        k=entry["k"],
        witnesses=dict(sorted(wit.items())),
        complete=entry["complete"],
        source=entry["source"],
        search_bound=None if bound == CLOSED_FORM else _dec(bound),
        examined=_dec(entry.get("examined", 0)),
        extra_sizes=frozenset(sizes - set(wit)),
    )


def dumps(entries):
    entries = sorted(entries, key=lambda e: (e["h"], e["k"]))
    doc = {"schema_version": SCHEMA_VERSION, "code_version": __version__, "entries": entries}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_atlas(path, entries):
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps(entries))
    os.replace(tmp, path)


def read_atlas(path):
    """Load an atlas file; returns RangeResults, all witnesses re-validated."""
    doc = json.loads(Path(path).read_text())
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise AtlasFormatError(
            f"schema version {doc.get('schema_version')} is not {SCHEMA_VERSION}"
        )
    results = [result_from_entry(e) for e in doc["entries"]]
    keys = [(r.h, r.k) for r in results]
    if keys != sorted(keys):
        raise AtlasFormatError("atlas entries are not sorted by (h, k)")
    for r in results:
        try:
            r.validate()
        except Exception as exc:
            raise AtlasFormatError(f"entry h={r.h} k={r.k}: {exc}") from exc
    return results


def format_sizes(sizes):
    sizes = list(sizes)
    if sizes and sizes[-1] - sizes[0] + 1 == len(sizes) and len(sizes) > 1:
        return f"[{sizes[0]}, {sizes[-1]}]"
    return "{" + ", ".join(map(str, sizes)) + "}"


def summary_rows(entries):
    rows = []
    for e in sorted(entries, key=lambda e: (e["h"], e["k"])):
        sizes = [_dec(t) for t in e["sizes"]]
        rows.append({
            "h": e["h"],
            "k": e["k"],
            "bound": e["bound"],
            "min": sizes[0],
            "max": sizes[-1],
            "count": len(sizes),
            "missing": " ".join(map(str, e["missing"])),
            "complete": e["complete"],
        })
    return rows


def to_csv(entries):
    buf = io.StringIO()
    rows = summary_rows(entries)
    fields = ["h", "k", "bound", "min", "max", "count", "missing", "complete"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_text(entries):
    lines = [f"{'h':>3} {'k':>3} {'bound':>12} {'min':>6} {'max':>6} {'count':>6}  complete  missing"]
    for r in summary_rows(entries):
        lines.append(
            f"{r['h']:>3} {r['k']:>3} {str(r['bound']):>12} {r['min']:>6} {r['max']:>6} "
            f"{r['count']:>6}  {'yes' if r['complete'] else 'no ':<8}  {r['missing'] or '-'}"
        )
    return "\n".join(lines) + "\n"
