from .actions import (ActionMasks, ActionSpec, StructuredAction,
                      IllegalActionError, SOLO_SPEC, TRIO_SPEC, spec_for,
                      BUTTON_NOOP, BUTTON_MOVE, BUTTON_ATTACK, BUTTON_SKILL,
                      BUTTON_HEAL, MOVE9)
from .config import ARCHETYPES, ConfigError, EnvConfig, Mode
from .core import Environment, StepResult
from .observe import OBS_DIM_SOLO, OBS_DIM_TRIO, obs_dim
from .rewards import RewardVector, item_names, item_groups
from .subtask import SubtaskCalibration, subtask_score
from .units import HeroState, Kind, Team, UnitState

__all__ = [
    "ActionMasks", "ActionSpec", "StructuredAction", "IllegalActionError",
    "SOLO_SPEC", "TRIO_SPEC", "spec_for", "MOVE9",
    "BUTTON_NOOP", "BUTTON_MOVE", "BUTTON_ATTACK", "BUTTON_SKILL", "BUTTON_HEAL",
    "ARCHETYPES", "ConfigError", "EnvConfig", "Mode",
    "Environment", "StepResult",
    "OBS_DIM_SOLO", "OBS_DIM_TRIO", "obs_dim",
    "RewardVector", "item_names", "item_groups",
    "SubtaskCalibration", "subtask_score",
    "HeroState", "Kind", "Team", "UnitState",
]
