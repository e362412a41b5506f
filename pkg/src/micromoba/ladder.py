"""Scripted skill ladder: five behavior policies of strictly increasing
strength, plus head-to-head tooling.

Level 0 is uniform-random over legal actions. Each higher level adds one
capability on top of the previous one:

  1. advance toward the enemy crystal and attack the nearest legal target
  2. retreat (and self-heal) below 35% hp; focus the lowest-hp enemy hero
  3. cast the skill when available, offset toward the best target in reach
  4. last-hit low creeps and avoid diving the enemy turret without creep cover

Levels 1-4 also take a uniform-random action with a small, decreasing
probability (the dither rates below); this keeps self-play trajectories
diverse without changing the capability ordering. Policies are stateless
across episodes; all randomness comes from the per-episode stream.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .env import EnvConfig, Mode, StructuredAction, Kind
from .env.config import TURRET_RANGE, SKILL_OFFSET_SCALE, SKILL_AOE_RADIUS
from .rng import Stream, mix
from .rollout import Controller, play_episode, team_controllers

N_LEVELS = 5
# Probability of playing a uniform-random action instead of the rules; higher
# levels are both more capable and more consistent.
DITHER = (1.0, 0.45, 0.25, 0.15, 0.02)
RETREAT_HP = 0.12   # dodge the killing blow; earlier retreats bleed tempo
HEAL_HP = 0.5
DIVE_ENTER_HP = 0.5    # don't walk into turret fire below this without cover
DIVE_EXIT_HP = 0.15    # once committed, back out only when about to die
COVER_RADIUS_BONUS = 2  # creeps this close to the turret count as cover


def uniform_legal_action(masks, stream: Stream) -> StructuredAction:
    idx = []
    for head_mask in masks.legal:
        legal = np.flatnonzero(head_mask)
        idx.append(int(legal[stream.randint(len(legal))]))
    return StructuredAction(tuple(idx))


class LevelPolicy(Controller):
    needs_view = True

    def __init__(self, level: int):
        if not 0 <= level < N_LEVELS:
            raise ValueError(f"level must be in [0, {N_LEVELS - 1}], got {level}")
        self.level = level

    def __repr__(self):
        return f"LevelPolicy({self.level})"

    # -- head helpers --------------------------------------------------------
    @staticmethod
    def _solo_family(masks) -> bool:
        return len(masks.legal) == 6

    def _base_action(self, masks) -> list:
        """Lowest legal index per head; heads are overwritten by the rules."""
        return [int(np.flatnonzero(m)[0]) for m in masks.legal]

    def _button(self, masks, name: str) -> int:
        return {"noop": 0, "move": 1, "attack": 2, "skill": 3, "heal": 4}[name]

    def _move_action(self, masks, view, goal, stream, avoid_dive: bool):
        solo = self._solo_family(masks)
        gx, gy = goal
        tx, ty = view.enemy_turret_pos
        danger = (avoid_dive and view.enemy_turret_alive
                  and view.own_creeps_near_enemy_turret == 0)

        def score(nx, ny):
            s = max(abs(nx - gx), abs(ny - gy))
            if danger and max(abs(nx - tx), abs(ny - ty)) <= TURRET_RANGE:
                s += 1000
            return s

        if solo:
            mx, my = masks.legal[1], masks.legal[2]
            cands = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)
                     if mx[dx + 1] and my[dy + 1]]
        else:
            cands = [((i % 3 - 1), (i // 3 - 1))
                     for i in np.flatnonzero(masks.legal[1])]
        best = min(score(view.x + dx, view.y + dy) for dx, dy in cands)
        top = [(dx, dy) for dx, dy in cands
               if score(view.x + dx, view.y + dy) == best]
        dx, dy = top[stream.randint(len(top))]
        act = self._base_action(masks)
        act[0] = self._button(masks, "move")
        if solo:
            act[1], act[2] = dx + 1, dy + 1
        else:
            act[1] = (dy + 1) * 3 + (dx + 1)
        return StructuredAction(tuple(act))

    def _attack_action(self, masks, slot: int):
        act = self._base_action(masks)
        act[0] = self._button(masks, "attack")
        act[-1] = slot
        return StructuredAction(tuple(act))

    def _skill_action(self, masks, view, target):
        """Offset the blast toward the target; None if it cannot reach."""
        solo = self._solo_family(masks)
        sx_i, sy_i = (3, 4) if solo else (2, 3)
        best = None
        for dx in (-1, 0, 1):
            if not masks.legal[sx_i][dx + 1]:
                continue
            for dy in (-1, 0, 1):
                if not masks.legal[sy_i][dy + 1]:
                    continue
                cx = view.x + SKILL_OFFSET_SCALE * dx
                cy = view.y + SKILL_OFFSET_SCALE * dy
                d = max(abs(target.x - cx), abs(target.y - cy))
                if best is None or d < best[0]:
                    best = (d, dx, dy)
        if best is None or best[0] > SKILL_AOE_RADIUS:
            return None
        act = self._base_action(masks)
        act[0] = self._button(masks, "skill")
        act[sx_i], act[sy_i] = best[1] + 1, best[2] + 1
        return StructuredAction(tuple(act))

    def _heal(self, masks):
        act = self._base_action(masks)
        act[0] = self._button(masks, "heal")
        return StructuredAction(tuple(act))

    def _anchor(self, view) -> tuple:
        """Defensive fallback point: own turret while it stands, else spawn."""
        return view.own_turret_pos if view.own_turret_alive else view.own_spawn

    def _advance_goal(self, view) -> tuple:
        """Push target: the enemy turret shields the crystal, so it dies first."""
        return (view.enemy_turret_pos if view.enemy_turret_alive
                else view.enemy_crystal_pos)

    # -- decision rule ---------------------------------------------------------
    def decide(self, obs, masks, view, stream: Stream) -> StructuredAction:
        if not view.alive or not masks.legal[0][1:].any():
            return masks.first_legal()
        if self.level == 0 or stream.uniform() < DITHER[self.level]:
            return uniform_legal_action(masks, stream)

        legal_targets = [t for t in view.targets if t is not None and t.legal]
        heal_legal = bool(masks.legal[0][self._button(masks, "heal")])
        skill_legal = bool(masks.legal[0][self._button(masks, "skill")])
        attack_legal = bool(masks.legal[0][self._button(masks, "attack")])
        in_combat = any(t is not None and t.dist <= 2
                        for t in view.targets if t is not None)

        # disengage and top up between fights (level >= 2)
        if self.level >= 2:
            if view.hp_ratio < RETREAT_HP and in_combat:
                return self._move_action(masks, view, self._anchor(view), stream,
                                         avoid_dive=self.level >= 4)
            if view.hp_ratio < HEAL_HP and heal_legal and not in_combat:
                return self._heal(masks)

        # turret-dive discipline (level >= 4): without creep cover, enter the
        # enemy turret's range only when healthy, and once inside hold the dive
        # until genuinely low (position acts as the commitment memory)
        dive_unsafe = False
        if (self.level >= 4 and view.enemy_turret_alive
                and view.own_creeps_near_enemy_turret == 0):
            tx, ty = view.enemy_turret_pos
            inside = max(abs(view.x - tx), abs(view.y - ty)) <= TURRET_RANGE
            if inside and view.hp_ratio < DIVE_EXIT_HP:
                return self._move_action(masks, view, self._anchor(view), stream,
                                         avoid_dive=True)
            dive_unsafe = not inside and view.hp_ratio < DIVE_ENTER_HP

        # skill toward the weakest visible enemy hero in blast reach (level >= 3)
        if self.level >= 3 and skill_legal:
            heroes = [t for t in view.targets
                      if t is not None and t.kind == Kind.HERO]
            for t in sorted(heroes, key=lambda t: (t.hp_ratio, t.dist, t.slot)):
                act = self._skill_action(masks, view, t)
                if act is not None:
                    return act

        hero_near = any(t is not None and t.kind == Kind.HERO and t.dist <= 2
                        for t in view.targets)
        if attack_legal and legal_targets:
            if self.level >= 4 and not hero_near:
                lh = [t for t in legal_targets if t.kind == Kind.CREEP
                      and t.hp <= view.effective_attack]
                if lh:
                    t = min(lh, key=lambda t: (t.dist, t.slot))
                    return self._attack_action(masks, t.slot)
            if self.level >= 2:
                heroes = [t for t in legal_targets if t.kind == Kind.HERO]
                if heroes:
                    t = min(heroes, key=lambda t: (t.hp_ratio, t.dist, t.slot))
                    return self._attack_action(masks, t.slot)
            t = min(legal_targets, key=lambda t: (t.dist, t.slot))
            return self._attack_action(masks, t.slot)

        return self._move_action(masks, view, self._advance_goal(view), stream,
                                 avoid_dive=dive_unsafe)


def make_level(level: int) -> LevelPolicy:
    return LevelPolicy(level)


def duel(policy_a, policy_b, episodes: int, base_seed: int,
         mode: Mode = Mode.SOLO, config: EnvConfig | None = None) -> float:
    """Win rate of policy_a over independent episodes; draws count 0.5."""
    if episodes < 1:
        raise ValueError("episodes must be >= 1")
    if config is None:
        config = EnvConfig(mode=mode)
    score = 0.0
    for i in range(episodes):
        controllers = team_controllers(config, policy_a, policy_b)
        out = play_episode(config, base_seed + i, controllers)
        score += out.win_score(0)
    return score / episodes


@dataclass
class LadderReport:
    win_rate: np.ndarray        # [level_a, level_b] -> win rate of a
    episodes_per_pair: int
    seed: int

    def to_json(self) -> str:
        return json.dumps({
            "episodes_per_pair": self.episodes_per_pair,
            "seed": self.seed,
            "win_rate": [[round(float(v), 6) for v in row]
                         for row in self.win_rate],
        }, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["level_a", "level_b", "win_rate", "episodes"])
        for a in range(self.win_rate.shape[0]):
            for b in range(self.win_rate.shape[1]):
                w.writerow([a, b, f"{self.win_rate[a, b]:.6f}",
                            self.episodes_per_pair])
        return buf.getvalue()

    @classmethod
    def from_json(cls, text: str) -> "LadderReport":
        d = json.loads(text)
        return cls(win_rate=np.array(d["win_rate"], dtype=float),
                   episodes_per_pair=int(d["episodes_per_pair"]),
                   seed=int(d["seed"]))


def ladder_report(episodes_per_pair: int, seed: int,
                  mode: Mode = Mode.SOLO) -> LadderReport:
    matrix = np.zeros((N_LEVELS, N_LEVELS))
    for a in range(N_LEVELS):
        for b in range(N_LEVELS):
            matrix[a, b] = duel(make_level(a), make_level(b),
                                episodes_per_pair,
                                base_seed=mix(seed, a, b) % (1 << 48),
                                mode=mode)
    return LadderReport(win_rate=matrix, episodes_per_pair=episodes_per_pair,
                        seed=seed)
