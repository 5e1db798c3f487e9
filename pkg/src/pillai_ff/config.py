"""Problem configuration files.

A config is a YAML mapping describing one problem::

    mode: T1
    G:
      - {a: "1", alpha: "x"}
    H:
      - {a: "1", alpha: "x + 1"}
    f: "x^2 - x - 1"

``f`` is required for modes T1 and COROLLARY and forbidden otherwise. In
COROLLARY mode G and H must each be a single term with coefficient 1; their
roots are p and q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import yaml

from .errors import ConfigError, InvalidRecurrence
from .field import RatFunc
from .parser import parse_expression
from .recurrences import Recurrence

MODES = ("T1", "T2", "T3", "COROLLARY")
_KEYS = {"mode", "G", "H", "f", "genus", "window_multiplier"}


@dataclass(frozen=True)
class ProblemConfig:
    G: Recurrence
    H: Recurrence
    mode: str
    f: RatFunc | None = None
    genus: int = 0
    window_multiplier: Fraction = Fraction(3)

    def corollary_inputs(self) -> tuple[RatFunc, RatFunc, RatFunc]:
        return self.G.roots[0], self.H.roots[0], self.f


def _expr(value, where: str) -> RatFunc:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ConfigError(f"{where}: expected an expression string")
    return parse_expression(str(value))


def _recurrence(spec, name: str) -> Recurrence:
    if not isinstance(spec, list) or not spec:
        raise ConfigError(f"{name}: expected a non-empty list of terms")
    terms = []
    for i, term in enumerate(spec):
        if not isinstance(term, dict) or set(term) != {"a", "alpha"}:
            raise ConfigError(f"{name}[{i}]: a term needs exactly the keys 'a' and 'alpha'")
        terms.append((_expr(term["a"], f"{name}[{i}].a"), _expr(term["alpha"], f"{name}[{i}].alpha")))
    try:
        return Recurrence(tuple(terms))
    except InvalidRecurrence as exc:
        raise ConfigError(f"{name}: {exc}") from exc


def config_from_mapping(data) -> ProblemConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping")
    unknown = set(data) - _KEYS
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(sorted(map(str, unknown)))}")
    for key in ("mode", "G", "H"):
        if key not in data:
            raise ConfigError(f"missing key {key!r}")
    mode = data["mode"]
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {', '.join(MODES)}")
    G, H = _recurrence(data["G"], "G"), _recurrence(data["H"], "H")
    needs_f = mode in ("T1", "COROLLARY")
    if needs_f != ("f" in data):
        raise ConfigError(f"'f' is {'required' if needs_f else 'not allowed'} in mode {mode}")
    f = _expr(data["f"], "f") if needs_f else None
    genus = data.get("genus", 0)
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise ConfigError("genus must be a nonnegative integer")
    try:
        mult = Fraction(str(data.get("window_multiplier", 3)))
    except ValueError as exc:
        raise ConfigError("window_multiplier must be a rational number") from exc
    if mult <= 0:
        raise ConfigError("window_multiplier must be positive")
    if mode == "COROLLARY":
        for name, R in (("G", G), ("H", H)):
            if R.order != 1 or R.coefficients[0] != RatFunc.constant(1):
                raise ConfigError(f"COROLLARY mode needs {name} = [{{a: 1, alpha: ...}}]")
    return ProblemConfig(G, H, mode, f, genus, mult)


def load_config(path) -> ProblemConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML") from exc
    return config_from_mapping(data)
