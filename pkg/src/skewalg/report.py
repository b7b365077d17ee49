"""Machine-readable run reports."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import __version__


@dataclass
class Claim:
    id: str
    statement: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return {"id": self.id, "statement": self.statement, "passed": self.passed, "witness": self.witness}


@dataclass
class RunReport:
    command: str
    claims: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)  # only emitted on request; keeps reports reproducible

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def claim(self, id, statement, passed, **witness):
        c = Claim(id, statement, bool(passed), witness)
        self.claims.append(c)
        return c

    def timed(self, key):
        return _Timer(self.timing, key)

    def to_dict(self, with_timing: bool = False):
        out = {"command": self.command, "version": __version__, "passed": self.passed,
               "claims": [c.to_dict() for c in self.claims], "data": self.data}
        if with_timing:
            out["timing_seconds"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out


class _Timer:
    def __init__(self, sink, key):
        self.sink, self.key = sink, key

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.sink[self.key] = self.sink.get(self.key, 0.0) + time.perf_counter() - self.t0
        return False
