"""Resource budgets.

Every search in the package is bounded; the defaults can be overridden with
environment variables (read once, at import) or by passing explicit
arguments to the functions that take them.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Budgets:
    knit_cap: int = 200  # indecomposables before knitting gives up
    knit_dim_cap: int = 64  # largest indecomposable knitting will build
    iso_budget: int = 20000  # search nodes for the algebra isomorphism test
    window_expansions: int = 8  # window doublings when searching for a section

    @classmethod
    def from_env(cls, environ=None) -> "Budgets":
        environ = os.environ if environ is None else environ
        vals = {}
        for f in fields(cls):
            raw = environ.get(f"SKEWALG_{f.name.upper()}")
            if raw is not None:
                vals[f.name] = int(raw)
        return cls(**vals)


BUDGETS = Budgets.from_env()
