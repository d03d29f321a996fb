# Copyright (c) 2026 QGEM Sim Team
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Run options from config files and command-line flags.

A config file is a flat YAML mapping whose keys are the long flag names
(``gamma-range`` and ``gamma_range`` are the same key). Values are coerced
to the type of the matching ``Run_Options`` field; strings such as
``"1e-14"`` are accepted wherever a number is expected, since YAML reads
exponent literals without a dot as strings.
"""

import logging
import math
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

import yaml

from .exceptions import ConfigurationError
from .models.sweep import Run_Options


logger = logging.getLogger(__name__)


def _key(name: str) -> str:
    return name.strip().replace("-", "_")


def parse_float(value: Any, key: str = "value") -> float:
    if isinstance(value, bool):
        raise ConfigurationError(f"Option '{key}' must be a number", config_key=key,
                                 config_value=value)
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"Option '{key}' must be a number", config_key=key,
                                 config_value=value)
    if not math.isfinite(number):
        raise ConfigurationError(f"Option '{key}' must be finite", config_key=key,
                                 config_value=value)
    return number


def parse_int(value: Any, key: str = "value") -> int:
    number = parse_float(value, key)
    if not number.is_integer():
        raise ConfigurationError(f"Option '{key}' must be an integer", config_key=key,
                                 config_value=value)
    return int(number)


def parse_bool(value: Any, key: str = "value") -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"Option '{key}' must be true or false", config_key=key,
                             config_value=value)


def parse_range(value: Any, key: str = "range") -> Tuple[float, float]:
    """'MIN:MAX' or a two-element list."""
    parts = value.split(":") if isinstance(value, str) else value
    if not isinstance(parts, (list, tuple)) or len(parts) != 2:
        raise ConfigurationError(f"Option '{key}' must look like MIN:MAX", config_key=key,
                                 config_value=value)
    return parse_float(parts[0], key), parse_float(parts[1], key)


def parse_list(value: Any, key: str = "list") -> Tuple[float, ...]:
    """'a,b,c', a list, or a single number."""
    if isinstance(value, str):
        items = [item for item in value.split(",") if item.strip()]
    elif isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [value]
    return tuple(parse_float(item, key) for item in items)


def parse_grid(value: Any, key: str = "grid") -> Tuple[int, ...]:
    """'N' or 'NxM'."""
    parts = str(value).lower().split("x")
    steps = tuple(parse_int(part, key) for part in parts)
    if len(steps) > 2 or any(step < 2 for step in steps):
        raise ConfigurationError("Grid must be N or NxM with at least 2 points per axis",
                                 config_key=key, config_value=value)
    return steps


def _optional(parse: Callable[[Any, str], Any]) -> Callable[[Any, str], Any]:
    def parse_or_none(value: Any, key: str) -> Any:
        return None if value is None else parse(value, key)
    return parse_or_none


def _text(value: Any, key: str) -> str:
    if isinstance(value, (dict, list)):
        raise ConfigurationError(f"Option '{key}' must be a plain value", config_key=key,
                                 config_value=value)
    return str(value)


COERCERS: Dict[str, Callable[[Any, str], Any]] = {
    'setup': _text,
    'mass': parse_float,
    'dmin': parse_float,
    'l': parse_float,
    'tau': parse_float,
    'gamma': parse_float,
    'separation': _optional(parse_float),
    'measure': _text,
    'out': _optional(_text),
    'format': _optional(_text),
    'grid': _optional(_text),
    'log_gamma': parse_bool,
    'unphysical_mode': parse_bool,
    'jobs': parse_int,
    'phi_range': parse_range,
    'l_range': parse_range,
    'gamma_range': parse_range,
    'tau_range': parse_range,
    'gammas': parse_list,
    'masses': parse_list,
    'dmins': parse_list,
    'dphi2': _optional(parse_float),
    'dphi3': _optional(parse_float),
    'dphi4': _optional(parse_float),
    'predicate': _text,
    'gamma_hi': parse_float,
    'eps': parse_float,
    'verbose': parse_int,
}


def coerce_options(values: Mapping[str, Any], source: Optional[str] = None) -> Dict[str, Any]:
    """
    Normalize keys and coerce values to Run_Options field types.

    Raises:
        ConfigurationError: unknown key or uncoercible value
    """
    coerced = {}
    for raw_key, value in values.items():
        key = _key(str(raw_key))
        if key not in COERCERS:
            raise ConfigurationError(f"Unknown option: {raw_key}", config_key=str(raw_key),
                                     config_file=source)
        try:
            coerced[key] = COERCERS[key](value, key)
        except ConfigurationError as e:
            e.config_file = source
            e.details['config_file'] = source
            raise
    return coerced


def load_config(config_file: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a flat YAML config file.

    Returns:
        Coerced option values keyed by Run_Options field name

    Raises:
        ConfigurationError: unreadable file, invalid YAML, or bad content
    """
    path = Path(config_file)
    try:
        content = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file: {e}", config_file=str(path))
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Invalid YAML in config file: {e}", config_file=str(path))

    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ConfigurationError("Config file must contain a flat mapping", config_file=str(path))
    logger.info("Loaded %d option(s) from %s", len(content), path)
    return coerce_options(content, source=str(path))


def merge_options(defaults: Run_Options, config: Mapping[str, Any],
                  flags: Mapping[str, Any]) -> Run_Options:
    """Defaults < config file < explicit flags; a flag of None counts as not given."""
    explicit = {key: value for key, value in flags.items() if value is not None}
    merged = {**config, **coerce_options(explicit, source="command line")}
    return replace(defaults, **merged)
