"""Hyperparameter-grid enumeration and per-trial config emission.

Enumeration is plain grid search: the cartesian product of the
dimension lists in a fixed order, so two runs over the same grid
produce identical trial lists.  A `seed` key is accepted in grid files
and reserved for a future random-search mode; it does not affect
enumeration.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

# dimension order defines enumeration order
GRID_DIMENSIONS = (
    "epochs",
    "batch_size",
    "grad_accum_steps",
    "learning_rate",
    "weight_decay",
    "mixed_precision",
)


class HpoError(Exception):
    pass


class EmptyDimension(HpoError):
    def __init__(self, name: str):
        super().__init__(f"grid dimension {name!r} has no values")
        self.name = name


class TemplateKeyCollision(HpoError):
    def __init__(self, keys):
        super().__init__(f"template redefines trial keys: {sorted(keys)}")
        self.keys = tuple(sorted(keys))


@dataclass(frozen=True)
class HyperparameterGrid:
    epochs: tuple[int, ...]
    batch_size: tuple[int, ...]
    grad_accum_steps: tuple[int, ...]
    learning_rate: tuple[float, ...]
    weight_decay: tuple[float, ...]
    mixed_precision: tuple[bool, ...]

    def __post_init__(self):
        for name in GRID_DIMENSIONS:
            values = getattr(self, name)
            if not values:
                raise EmptyDimension(name)
            object.__setattr__(self, name, tuple(values))
        for name in ("epochs", "batch_size", "grad_accum_steps", "learning_rate"):
            if any(v <= 0 for v in getattr(self, name)):
                raise HpoError(f"{name} values must be positive")
        if any(v < 0 for v in self.weight_decay):
            raise HpoError("weight_decay values must be non-negative")
        if any(not isinstance(v, bool) for v in self.mixed_precision):
            raise HpoError("mixed_precision values must be booleans")

    def size(self) -> int:
        return (
            len(self.epochs)
            * len(self.batch_size)
            * len(self.grad_accum_steps)
            * len(self.learning_rate)
            * len(self.weight_decay)
            * len(self.mixed_precision)
        )


# search space used for the fine-tuning experiments this toolkit
# accompanies; also a convenient smoke-test grid
DEFAULT_GRID = HyperparameterGrid(
    epochs=(1, 3, 5),
    batch_size=(8, 12, 16),
    grad_accum_steps=(2, 4, 8),
    learning_rate=(1e-5, 3e-5, 9e-5),
    weight_decay=(0.01, 0.1, 1.0, 2.0),
    mixed_precision=(False, True),
)


@dataclass(frozen=True)
class TrialConfig:
    trial_index: int
    epochs: int
    batch_size: int
    grad_accum_steps: int
    learning_rate: float
    weight_decay: float
    mixed_precision: bool

    def values(self) -> dict:
        return {name: getattr(self, name) for name in GRID_DIMENSIONS}

    def to_dict(self) -> dict:
        return {"trial_index": self.trial_index, **self.values()}


def enumerate_grid(grid: HyperparameterGrid) -> list[TrialConfig]:
    """All grid combinations, in deterministic lexicographic order over
    the dimensions as declared in GRID_DIMENSIONS."""
    combos = itertools.product(*(getattr(grid, name) for name in GRID_DIMENSIONS))
    return [
        TrialConfig(trial_index=i, **dict(zip(GRID_DIMENSIONS, combo)))
        for i, combo in enumerate(combos)
    ]


def emit_configs(trials, out_dir, template: dict | None = None) -> int:
    """Write one trial_{index}.json per trial, overlaying trial values
    on the template; returns the number of files written."""
    template = dict(template or {})
    reserved = set(GRID_DIMENSIONS) | {"trial_index"}
    collisions = template.keys() & reserved
    if collisions:
        raise TemplateKeyCollision(collisions)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = 0
    for trial in trials:
        payload = {**template, **trial.to_dict()}
        path = out_dir / f"trial_{trial.trial_index}.json"
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        written += 1
    return written


def load_grid(path) -> HyperparameterGrid:
    """Read a grid file whose keys mirror the grid dimensions; a
    reserved optional `seed` key is accepted and ignored."""
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(obj, dict):
        raise HpoError("grid file must hold a JSON object")
    unknown = obj.keys() - set(GRID_DIMENSIONS) - {"seed"}
    if unknown:
        raise HpoError(f"unknown grid keys: {sorted(unknown)}")
    missing = set(GRID_DIMENSIONS) - obj.keys()
    if missing:
        raise HpoError(f"missing grid keys: {sorted(missing)}")
    return HyperparameterGrid(**{name: tuple(obj[name]) for name in GRID_DIMENSIONS})
