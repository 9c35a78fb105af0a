"""Run configuration read from ``key = value`` files."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace

from .errors import IoFailure, PermCommError
from .groups import Limits


class ConfigError(PermCommError, ValueError):
    pass


_FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class Config:
    enumerationCap: int = 200_000
    cosetDegreeCap: int = 20_000
    sylowEnumCap: int = 20_000
    searchBudget: int = 2_000
    seed: int = 0
    outputFormat: str = "text"
    workers: int = 1
    timing: bool = False

    def __post_init__(self):
        for name in ("enumerationCap", "cosetDegreeCap", "sylowEnumCap", "searchBudget", "workers"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.outputFormat not in _FORMATS:
            raise ConfigError(f"outputFormat must be one of {', '.join(_FORMATS)}")

    def limits(self) -> Limits:
        return Limits(enumeration_cap=self.enumerationCap, coset_degree_cap=self.cosetDegreeCap,
                      sylow_enum_cap=self.sylowEnumCap, search_budget=self.searchBudget)

    def snapshot(self) -> dict:
        return asdict(self)

    def with_overrides(self, **kw) -> "Config":
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw) if kw else self


_TYPES = {f.name: f.type for f in fields(Config)}


def _coerce(key, raw, lineno):
    kind = _TYPES[key]
    try:
        if kind == "int":
            return int(raw)
        if kind == "bool":
            low = raw.lower()
            if low not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(raw)
            return low in ("true", "1", "yes")
        return raw
    except ValueError:
        raise ConfigError(f"line {lineno}: bad value {raw!r} for {key}") from None


def parse_config(text: str) -> Config:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        if key not in _TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _coerce(key, value, lineno)
    return Config(**values)


def load_config(path) -> Config:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise IoFailure(f"cannot read config {path}: {exc}") from exc
