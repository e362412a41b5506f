"""Unit state containers: generic units plus hero-specific bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .config import Archetype


class Kind(IntEnum):
    HERO = 0
    CREEP = 1
    TURRET = 2
    CRYSTAL = 3
    MONSTER = 4


class Team(IntEnum):
    A = 0
    B = 1
    NEUTRAL = 2


@dataclass
class UnitState:
    unit_id: int
    kind: Kind
    team: Team
    x: int
    y: int
    hp: int
    max_hp: int
    attack: int

    @property
    def alive(self) -> bool:
        return self.hp > 0

    def dist(self, other: "UnitState") -> int:
        return max(abs(self.x - other.x), abs(self.y - other.y))


@dataclass
class HeroState:
    base: UnitState
    archetype: Archetype
    mana: int
    gold: int = 0
    experience: int = 0
    skill_cooldown: int = 0
    respawn_timer: int = 0
    spawn_x: int = 0
    spawn_y: int = 0
    last_button: int = 0

    @property
    def vision_radius(self) -> int:
        return self.archetype.vision_radius

    @property
    def alive(self) -> bool:
        return self.base.alive

    def hp_ratio(self) -> float:
        return self.base.hp / self.base.max_hp

    def mana_ratio(self) -> float:
        return self.mana / self.archetype.max_mana
