"""micromoba: a deterministic MOBA-style micro-environment plus an offline RL
benchmark pipeline (dataset sampling, ten offline baselines, win-rate
evaluation), all reproducible from seeds."""

__version__ = "0.1.0"

from .env import EnvConfig, Environment, Mode, StructuredAction  # noqa: F401
