"""Deterministic report container and its JSON / CSV / text serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SAFE_INT = 2 ** 53


@dataclass
class Check:
    name: str
    passed: bool
    expected: object = None
    got: object = None

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "got": self.got}


@dataclass
class Report:
    meta: dict
    sections: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def check(self, name: str, expected, got) -> bool:
        ok = expected == got
        self.checks.append(Check(name, ok, _plain(expected), _plain(got)))
        return ok

    @property
    def verified(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        out = {"meta": self.meta}
        out.update(self.sections)
        if self.checks or self.skipped:
            out["verification"] = {
                "passed": self.verified,
                "checks": [c.as_dict() for c in self.checks],
                "skipped": list(self.skipped),
            }
        return out


def _plain(x):
    """Turn tuples/dicts-with-tuple-keys into JSON-friendly structures."""
    if isinstance(x, dict):
        if any(isinstance(k, tuple) for k in x):
            return [[*k, _plain(v)] if isinstance(k, tuple) else [k, _plain(v)] for k, v in sorted(x.items())]
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "coeffs"):
        return list(x.coeffs)
    if hasattr(x, "item"):
        return x.item()
    return x


def _safe(x):
    if isinstance(x, bool) or x is None:
        return x
    if hasattr(x, "item") and not hasattr(x, "__len__"):
        x = x.item()
    if isinstance(x, int):
        return str(x) if abs(x) > SAFE_INT else x
    if isinstance(x, dict):
        return {str(k): _safe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_safe(v) for v in x]
    return x


def to_json(report: Report) -> bytes:
    body = json.dumps(_safe(report.as_dict()), sort_keys=True, separators=(",", ":"))
    return (body + "\n").encode()


def _scalar(v) -> bool:
    return not isinstance(v, (list, tuple, dict))


def _rows_of(value):
    """(header, rows) when ``value`` renders as one flat table, else None."""
    if isinstance(value, list) and value:
        if all(isinstance(v, dict) for v in value):
            header = sorted({k for v in value for k in v if _scalar(v[k])})
            if header and all(all(_scalar(x) or k not in header for k, x in v.items()) for v in value) \
                    and all(set(v) <= set(header) for v in value):
                return header, [[v.get(h, "") for h in header] for v in value]
            return None
        if all(_scalar(v) for v in value):
            return ["index", "value"], [[i, v] for i, v in enumerate(value)]
        if all(isinstance(v, (list, tuple)) and all(_scalar(x) for x in v) for v in value):
            width = max(len(v) for v in value)
            return ["row"] + [f"c{j}" for j in range(width)], [[i, *v] for i, v in enumerate(value)]
    if isinstance(value, dict) and value and all(_scalar(v) for v in value.values()):
        header = sorted(value)
        return header, [[value[h] for h in header]]
    return None


def _flatten(name, value, out):
    tab = _rows_of(value)
    if tab is not None:
        out.append((name, *tab))
        return
    if isinstance(value, dict):
        flat = {k: v for k, v in value.items() if _scalar(v)}
        if flat:
            out.append((name, sorted(flat), [[flat[k] for k in sorted(flat)]]))
        for k in sorted(value):
            if not _scalar(value[k]):
                _flatten(f"{name}.{k}", value[k], out)
    elif isinstance(value, list):
        for idx, v in enumerate(value):
            label = v.get("level", v.get("name", idx)) if isinstance(v, dict) else idx
            _flatten(f"{name}[{label}]", v, out)
    else:
        out.append((name, ["value"], [[value]]))


def to_csv(report: Report) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    tables = []
    for key, value in sorted(report.as_dict().items()):
        _flatten(key, value, tables)
    for name, header, rows in tables:
        w.writerow([f"# {name}"])
        w.writerow(header)
        w.writerows(rows)
        w.writerow([])
    return buf.getvalue().encode()


def to_table(report: Report) -> bytes:
    lines = []
    d = report.as_dict()
    meta = d.pop("meta")
    lines.append("  ".join(f"{k}={meta[k]}" for k in sorted(meta)))
    for key in sorted(d):
        lines.append("")
        lines.append(f"[{key}]")
        tables = []
        _flatten(key, d[key], tables)
        for name, header, rows in tables:
            if name != key:
                lines.append(f"  {name}")
            widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) for i, h in enumerate(header)]
            lines.append("  " + "  ".join(str(h).rjust(wd) for h, wd in zip(header, widths)))
            for r in rows:
                lines.append("  " + "  ".join(str(c).rjust(wd) for c, wd in zip(r, widths)))
    return ("\n".join(lines) + "\n").encode()


def emit_report(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "table":
        return to_table(report)
    raise ValueError(f"unknown format {fmt!r}")
