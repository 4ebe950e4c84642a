"""Run configuration: mode, strictness, precision, cache path, output format.

Sources, in increasing precedence: built-in defaults, a key=value config
file, the environment (cache path only), then explicit CLI flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .numeric import MIN_PRECISION_BITS

CACHE_ENV = "HMSURF_CACHE"
MODES = ("exact", "bound")
FORMATS = ("json", "csv", "pretty")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: str = "exact"
    strict_n: bool = False
    precision_bits: int = MIN_PRECISION_BITS
    cache_path: "str | None" = None
    output: str = "json"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.output not in FORMATS:
            raise ConfigError(f"output must be one of {FORMATS}, got {self.output!r}")
        if not isinstance(self.precision_bits, int) or isinstance(self.precision_bits, bool):
            raise ConfigError("precision_bits must be an integer")
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ConfigError(
                f"precision_bits below the {MIN_PRECISION_BITS}-bit floor")
        if not isinstance(self.strict_n, bool):
            raise ConfigError("strict_n must be a boolean")


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {text!r}")


_PARSERS = {
    "mode": str.strip,
    "strict_n": _parse_bool,
    "precision_bits": lambda s: int(s.strip(), 10),
    "cache_path": str.strip,
    "output": str.strip,
}


def parse_config_lines(lines) -> dict:
    """key=value lines, '#' comments and blanks allowed."""
    fields = {}
    for ln, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {ln}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _PARSERS:
            raise ConfigError(f"line {ln}: unknown key {key!r}")
        try:
            fields[key] = _PARSERS[key](value)
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"line {ln}: bad value for {key}: {exc}") from exc
    return fields


def load_config(path: "str | None" = None, env=None) -> RunConfig:
    env = os.environ if env is None else env
    fields = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            fields = parse_config_lines(fh)
    cfg = RunConfig(**fields)
    cache = env.get(CACHE_ENV)
    if cache:
        cfg = replace(cfg, cache_path=cache)
    return cfg
