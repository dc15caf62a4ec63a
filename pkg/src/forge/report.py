"""Machine-readable verification outcomes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification; failures always carry a witness."""

    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witness: object = None

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.details:
            out["details"] = _plain(self.details)
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = ""
        if not self.passed and self.witness is not None:
            extra = "  witness=%s" % (_plain(self.witness),)
        return "%-40s %s%s" % (self.name, status, extra)


def _plain(obj):
    """Recursively coerce to json-serializable data."""
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return str(obj)
