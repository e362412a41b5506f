"""Structured per-hero view for scripted policies.

Exposes the same information as the observation vector (visible units, own
status, legality) in a rule-friendly shape, so scripted behavior stays
imitable from observations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionMasks
from .units import Kind


@dataclass
class TargetInfo:
    slot: int
    unit_id: int
    kind: Kind
    hp: int
    max_hp: int
    dist: int
    x: int
    y: int
    legal: bool

    @property
    def hp_ratio(self) -> float:
        return self.hp / self.max_hp


@dataclass
class HeroView:
    hero_id: int
    team: int
    x: int
    y: int
    alive: bool
    hp_ratio: float
    mana: int
    skill_cooldown: int
    attack_range: int
    effective_attack: int
    skill_damage: int
    masks: ActionMasks
    targets: list            # TargetInfo or None per target slot
    own_spawn: tuple
    own_turret_pos: tuple
    own_turret_alive: bool
    enemy_crystal_pos: tuple
    enemy_turret_pos: tuple
    enemy_turret_alive: bool
    enemy_turret_range: int
    own_creeps_near_enemy_turret: int
    grid_width: int
    grid_height: int
