"""Run-time guards and defaults, optionally read from a key=value file."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

CONFIG_ENV = "PHASEPANTS_CONFIG"
FORMATS = ("json", "text", "dot")


@dataclass(frozen=True)
class Config:
    max_n: int = 3  # largest n for full piece enumeration
    snf_nonzero_guard: int = 200_000
    collapse_retries: int = 32
    seed: int = 0
    output_format: str = "json"
    samples: int = 10_000  # membership and alcove sampling

    def __post_init__(self):
        for f in ("max_n", "snf_nonzero_guard", "collapse_retries", "samples"):
            if getattr(self, f) <= 0:
                raise ValueError(f"{f} must be positive")
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be one of {FORMATS}")

    def updated(self, **changes) -> "Config":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def parse_config(text: str) -> Config:
    types = {f.name: f.type for f in fields(Config)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in types:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        values[key] = value if types[key] == "str" else int(value)
    return Config(**values)


def load_config(path: str | None = None) -> Config:
    """Read the file at path, else the one named by $PHASEPANTS_CONFIG, else defaults."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
