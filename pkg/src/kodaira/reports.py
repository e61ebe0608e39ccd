"""Machine-readable verification reports.

Reports are plain dataclasses rendered to JSON with a fixed key order and no
floats, so a (command, seed) pair always produces byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class CaseRecord:
    label: str
    inputs: dict = field(default_factory=dict)
    place: str = None
    kodaira: str = None
    split: bool = None
    tamagawa: int = None
    vdelta_min: int = None
    assertions: list = field(default_factory=list)

    def check(self, name, passed, detail=""):
        self.assertions.append(Assertion(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self):
        return all(a.passed for a in self.assertions)

    def to_dict(self):
        d = {"label": self.label, "inputs": self.inputs}
        for key in ("place", "kodaira", "split", "tamagawa", "vdelta_min"):
            value = getattr(self, key)
            if value is not None:
                d[key] = value
        d["assertions"] = [a.to_dict() for a in self.assertions]
        d["passed"] = self.passed
        return d


@dataclass
class VerificationReport:
    command: str
    seed: int = 0
    cases: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def new_case(self, label, **inputs) -> CaseRecord:
        case = CaseRecord(label, inputs={k: str(v) for k, v in inputs.items()})
        self.cases.append(case)
        return case

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def to_dict(self):
        d = {
            "command": self.command,
            "seed": self.seed,
            "passed": self.passed,
            "summary": {
                "cases": len(self.cases),
                "cases_passed": sum(c.passed for c in self.cases),
                "assertions": sum(len(c.assertions) for c in self.cases),
                "assertions_passed": sum(
                    a.passed for c in self.cases for a in c.assertions
                ),
            },
            "cases": [c.to_dict() for c in self.cases],
        }
        d.update(self.extras)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True)


TSV_COLUMNS = ("p", "f", "place", "degree", "type", "split", "vdelta_min", "c_v")


def tsv_table(rows) -> str:
    """Rows of dicts keyed by TSV_COLUMNS, in the fixed documented order."""
    lines = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        lines.append("\t".join(str(row[c]) for c in TSV_COLUMNS))
    return "\n".join(lines) + "\n"
