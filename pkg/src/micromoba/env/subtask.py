"""Normalized sub-task scores: ~0 for a random policy, ~1 for an expert."""

from __future__ import annotations

from dataclasses import dataclass

from .config import ConfigError, Mode


@dataclass(frozen=True)
class SubtaskCalibration:
    """Reference outcomes used to normalize sub-task scores.

    Defaults are the published reference values for the full-scale game;
    desk-scale runs should supply their own calibration.
    """
    random_frame_length: float = 2880.0
    expert_frame_length: float = 1812.0
    random_gain_gold: float = 5000.0
    expert_gain_gold: float = 12000.0


def subtask_score(mode: Mode, outcome: float,
                  calibration: SubtaskCalibration = SubtaskCalibration()) -> float:
    """Affine normalization of a sub-task outcome.

    ``outcome`` is the frame count to the crystal kill (destroy-turret) or the
    total gold collected (gain-gold). Scores may exceed 1 or go below 0.
    """
    if mode is Mode.SUB_DESTROY_TURRET:
        denom = calibration.random_frame_length - calibration.expert_frame_length
        if denom == 0:
            raise ConfigError("expert_frame_length",
                              "calibration denominator is zero")
        return (calibration.random_frame_length - outcome) / denom
    if mode is Mode.SUB_GAIN_GOLD:
        denom = calibration.expert_gain_gold - calibration.random_gain_gold
        if denom == 0:
            raise ConfigError("expert_gain_gold",
                              "calibration denominator is zero")
        return (outcome - calibration.random_gain_gold) / denom
    raise ConfigError("mode", f"{mode.value} is not a sub-task mode")
