"""Fixed-layout observation vectors (64-dim solo family, 96-dim trio family).

Features are normalized to [-1, 1]; everything about a unit outside the
observer's vision radius is zeroed (fog of war). Allied units and both sides'
structures are always visible. The exact block layout is documented in
``docs/env.md`` and test-pinned, since datasets freeze it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import (EnvConfig, ARCHETYPE_IDS, SKILL_COOLDOWN,
                     HERO_RESPAWN_DELAY, CREEP_WAVE_PERIOD, CREEP_CAP_PER_TEAM)
from .units import HeroState, UnitState

OBS_DIM_SOLO = 64
OBS_DIM_TRIO = 96

GOLD_NORM = 500.0
EXP_NORM = 500.0
TEAM_GOLD_NORM = 1500.0

N_CREEP_SLOTS_SOLO = 3
N_CREEP_SLOTS_TRIO = 2
N_MONSTER_SLOTS = 2


def obs_dim(config: EnvConfig) -> int:
    return OBS_DIM_SOLO if config.mode.solo_family else OBS_DIM_TRIO


@dataclass
class HeroPerception:
    """Everything one hero can see this tick, precomputed by the environment."""
    hero: HeroState
    allies: list                    # other HeroState on own team (fixed slot order)
    enemy_heroes: list              # (HeroState, visible) in fixed team-slot order
    own_creeps: list                # visible own-team creeps, nearest first
    enemy_creeps: list              # visible enemy creeps, nearest first
    monsters: list                  # visible alive monsters, nearest first
    own_turret: UnitState = None
    own_crystal: UnitState = None
    enemy_turret: UnitState = None
    enemy_crystal: UnitState = None
    own_creep_count: int = 0        # all own creeps alive (team radio)
    team_gold: int = 0
    monsters_alive: int = 0


def _rel(config, ox, oy, u) -> tuple:
    return ((u.x - ox) / (config.grid_width - 1),
            (u.y - oy) / (config.grid_height - 1))


def _write_hero_own(config, buf, i, h: HeroState) -> int:
    b = h.base
    buf[i] = 1.0 if h.alive else 0.0
    buf[i + 1] = h.hp_ratio()
    buf[i + 2] = h.mana_ratio()
    buf[i + 3] = b.x / (config.grid_width - 1)
    buf[i + 4] = b.y / (config.grid_height - 1)
    buf[i + 5] = h.skill_cooldown / SKILL_COOLDOWN
    buf[i + 6] = h.respawn_timer / HERO_RESPAWN_DELAY
    buf[i + 7] = min(h.gold / GOLD_NORM, 1.0)
    buf[i + 8] = min(h.experience / EXP_NORM, 1.0)
    buf[i + 9 + h.last_button] = 1.0   # one-hot over the 5 buttons
    return i + 14


def _write_unit_slot(config, buf, i, ox, oy, u) -> int:
    """present, hp_ratio, rel_x, rel_y; zeros when u is None."""
    if u is not None:
        rx, ry = _rel(config, ox, oy, u)
        buf[i] = 1.0
        buf[i + 1] = u.hp / u.max_hp
        buf[i + 2] = rx
        buf[i + 3] = ry
    return i + 4


def build_observation(config: EnvConfig, p: HeroPerception, step: int) -> np.ndarray:
    solo = config.mode.solo_family
    buf = np.zeros(OBS_DIM_SOLO if solo else OBS_DIM_TRIO, dtype=np.float32)
    h = p.hero
    ox, oy = h.base.x, h.base.y
    max_dim = max(config.grid_width - 1, config.grid_height - 1)
    step_frac = step / config.max_steps

    i = _write_hero_own(config, buf, 0, h)

    if solo:
        # single enemy hero block (8)
        eh, visible = (p.enemy_heroes[0] if p.enemy_heroes else (None, False))
        if eh is not None and visible:
            rx, ry = _rel(config, ox, oy, eh.base)
            buf[i:i + 8] = (1.0, 1.0 if eh.alive else 0.0, eh.hp_ratio(),
                            rx, ry, eh.base.dist(h.base) / max_dim,
                            eh.base.x / (config.grid_width - 1),
                            eh.base.y / (config.grid_height - 1))
        i += 8
        n_creep_slots = N_CREEP_SLOTS_SOLO
    else:
        for ally in p.allies:                      # 2 x 7
            ab = ally.base
            rx, ry = _rel(config, ox, oy, ab)
            buf[i] = 1.0 if ally.alive else 0.0
            buf[i + 1] = ally.hp_ratio()
            buf[i + 2] = rx
            buf[i + 3] = ry
            buf[i + 4 + ARCHETYPE_IDS[ally.archetype.name]] = 1.0
            i += 7
        enemy_slots = list(p.enemy_heroes) + [(None, False)] * (3 - len(p.enemy_heroes))
        for eh, visible in enemy_slots:            # 3 x 8, fixed slots
            if eh is not None and visible:
                rx, ry = _rel(config, ox, oy, eh.base)
                buf[i] = 1.0
                buf[i + 1] = 1.0 if eh.alive else 0.0
                buf[i + 2] = eh.hp_ratio()
                buf[i + 3] = rx
                buf[i + 4] = ry
                buf[i + 5 + ARCHETYPE_IDS[eh.archetype.name]] = 1.0
            i += 8
        n_creep_slots = N_CREEP_SLOTS_TRIO

    for k in range(n_creep_slots):
        u = p.own_creeps[k] if k < len(p.own_creeps) else None
        i = _write_unit_slot(config, buf, i, ox, oy, u)
    for k in range(n_creep_slots):
        u = p.enemy_creeps[k] if k < len(p.enemy_creeps) else None
        i = _write_unit_slot(config, buf, i, ox, oy, u)

    for u in (p.own_turret, p.own_crystal, p.enemy_turret, p.enemy_crystal):
        rx, ry = _rel(config, ox, oy, u)
        buf[i] = u.hp / u.max_hp
        buf[i + 1] = rx
        buf[i + 2] = ry
        i += 3

    if not solo:
        for k in range(N_MONSTER_SLOTS):
            u = p.monsters[k] if k < len(p.monsters) else None
            i = _write_unit_slot(config, buf, i, ox, oy, u)

    # global block
    buf[i] = step_frac
    buf[i + 1] = 1.0 if h.base.team == 0 else -1.0
    buf[i + 2] = (step % CREEP_WAVE_PERIOD) / CREEP_WAVE_PERIOD
    buf[i + 3] = p.own_creep_count / CREEP_CAP_PER_TEAM
    buf[i + 4] = len(p.enemy_creeps) / CREEP_CAP_PER_TEAM
    i += 5
    if solo:
        buf[i] = config.crit_chance
        i += 1
    else:
        buf[i] = p.monsters_alive / max(1, len(config.monster_cells()))
        buf[i + 1] = min(p.team_gold / TEAM_GOLD_NORM, 1.0)
        buf[i + 2] = config.crit_chance
        i += 3
    assert i == len(buf), f"layout mismatch: wrote {i}, expected {len(buf)}"
    return buf
