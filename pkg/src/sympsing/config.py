"""Run configuration: defaults, config files (JSON or key=value), overrides."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace

from .exactcore import Budget
from .sl2rep import DEFAULT_SEED

OUTPUT_ENV = "SYMPSING_REPORT"


class ConfigError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """'4..8' or '5' -> inclusive (lo, hi)."""
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = (int(lo), int(hi))
        else:
            r = (int(text), int(text))
    except ValueError:
        raise ConfigError(f"bad range {text!r}; expected N or LO..HI") from None
    if r[0] > r[1]:
        raise ConfigError(f"empty range {text!r}")
    return r


DEFAULT_RANGES = {
    "identities": (4, 12),
    "invariance": (4, 10),
    "smoothness": (4, 8),
    "completion": (4, 6),
    "sl2rep": (4, 8),
    "hilbert": (4, 7),
    "fiber": (4, 10),
    "quiver": (4, 8),
    "slodowy": (4, 9),
}


@dataclass(frozen=True)
class RunConfig:
    ranges: dict = field(default_factory=lambda: dict(DEFAULT_RANGES))
    series_N: int = 12
    psi_N: int = 50
    completion_N: int = 8
    seed: int = DEFAULT_SEED
    trials: int = 5
    max_terms: int = 200_000
    max_basis: int = 2000
    time_budget: float = 600.0
    output: str | None = None

    def __post_init__(self):
        for k, (lo, hi) in self.ranges.items():
            if k not in DEFAULT_RANGES:
                raise ConfigError(f"unknown range key {k!r}")
            if lo > hi:
                raise ConfigError(f"range for {k} is empty")
        for name in ("series_N", "psi_N", "completion_N", "trials", "max_terms", "max_basis"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.time_budget <= 0:
            raise ConfigError("time_budget must be positive")

    @property
    def budget(self) -> Budget:
        return Budget(max_basis=self.max_basis, max_terms=self.max_terms)

    def d_values(self, key: str) -> list[int]:
        lo, hi = self.ranges[key]
        return list(range(lo, hi + 1))

    def with_range(self, keys, rng: tuple[int, int]) -> "RunConfig":
        ranges = dict(self.ranges)
        for k in keys:
            ranges[k] = rng
        return replace(self, ranges=ranges)

    def echo(self) -> dict:
        """Config as written into reports; the output path is not part of it."""
        out = asdict(self)
        out.pop("output")
        out["ranges"] = {k: f"{lo}..{hi}" for k, (lo, hi) in sorted(self.ranges.items())}
        return out


_SCALARS = {f.name: f.type for f in fields(RunConfig) if f.name != "ranges"}


def _coerce(name: str, value):
    if name == "output":
        return None if value in (None, "") else str(value)
    kind = float if name == "time_budget" else int
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name}: expected a number, got {value!r}") from None


def config_from_mapping(data: dict, base: RunConfig | None = None) -> RunConfig:
    base = base or RunConfig()
    ranges = dict(base.ranges)
    kw = {}
    for key, value in data.items():
        if key == "ranges":
            if not isinstance(value, dict):
                raise ConfigError("ranges must be a mapping")
            for k, v in value.items():
                ranges[k] = parse_range(v)
        elif key.startswith("range."):
            ranges[key[6:]] = parse_range(value)
        elif key in _SCALARS:
            kw[key] = _coerce(key, value)
        else:
            raise ConfigError(f"unknown config key {key!r}")
    return replace(base, ranges=ranges, **kw)


def parse_config_text(text: str) -> dict:
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON config: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("JSON config must be an object")
        return data
    data = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {n}: expected key=value, got {line!r}")
        k, v = line.split("=", 1)
        data[k.strip()] = v.strip()
    return data


def load_config(path: str | None = None, env: dict | None = None) -> RunConfig:
    env = os.environ if env is None else env
    cfg = RunConfig()
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        cfg = config_from_mapping(parse_config_text(text), cfg)
    if env.get(OUTPUT_ENV):
        cfg = replace(cfg, output=env[OUTPUT_ENV])
    return cfg
