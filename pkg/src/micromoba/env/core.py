"""Deterministic grid-world MOBA micro-environment.

Two mirrored teams fight along a single lane: heroes earn gold and experience
by last-hitting creeps and monsters, a turret shields each team's crystal, and
an episode ends when a crystal falls or the step budget runs out. One tick has
the phases: bookkeeping (respawns, cooldowns, creep waves), simultaneous hero
action declaration, movement, creep and turret AI, ordered damage resolution,
death/credit processing, ambient gains, reward computation, termination check.

All randomness (crit rolls) comes from per-unit counter-based streams keyed by
(config seed, episode seed, unit id), so identical inputs replay bit-identical
episodes and one unit's rolls never disturb another's.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import rng
from . import rewards as R
from .actions import (ActionMasks, ActionSpec, IllegalActionError,
                      StructuredAction, spec_for, MOVE9,
                      BUTTON_NOOP, BUTTON_MOVE, BUTTON_ATTACK, BUTTON_SKILL,
                      BUTTON_HEAL, SOLO_TARGET_SLOTS, TRIO_TARGET_SLOTS)
from .config import (EnvConfig, Mode, ARCHETYPES, CREEP_HP, CREEP_ATTACK,
                     CREEP_RANGE, CREEP_WAVE_PERIOD, CREEP_WAVE_SIZE,
                     CREEP_CAP_PER_TEAM, TURRET_HP, TURRET_ATTACK, TURRET_RANGE,
                     CRYSTAL_HP, MONSTER_HP, MONSTER_RESPAWN_DELAY,
                     HERO_RESPAWN_DELAY, SKILL_COST, SKILL_COOLDOWN,
                     SKILL_OFFSET_SCALE, SKILL_AOE_RADIUS, HEAL_COST,
                     HEAL_AMOUNT, MANA_REGEN, CRIT_MULTIPLIER, AMBIENT_EXP,
                     GOLD_CREEP, GOLD_MONSTER, GOLD_HERO_KILL, GOLD_TURRET,
                     EXP_CREEP, EXP_MONSTER, EXP_HERO_KILL, EXP_TURRET,
                     EXP_PER_ATTACK, GOLD_PER_ATTACK)
from .observe import HeroPerception, build_observation, obs_dim
from .units import HeroState, Kind, Team, UnitState
from .view import HeroView, TargetInfo

TURRET_ID = {Team.A: 100, Team.B: 101}
CRYSTAL_ID = {Team.A: 102, Team.B: 103}
MONSTER_ID_BASE = 300
CREEP_ID_BASE = 200


@dataclass
class StepResult:
    observations: dict
    masks: dict
    rewards: dict
    done: bool
    info: dict


class Environment:
    """One instance is single-threaded; instances are fully independent."""

    def __init__(self, config: EnvConfig):
        config.validate()
        self.config = config
        self.action_spec: ActionSpec = spec_for(config.mode.solo_family)
        self.obs_dim = obs_dim(config)
        self._sub_matrix = self.action_spec.sub_action_matrix()
        self._reset_done = False

    # -- identity helpers ---------------------------------------------------
    @property
    def hero_ids(self) -> list:
        return sorted(self.heroes)

    def team_of(self, hero_id: int) -> Team:
        return self.heroes[hero_id].base.team

    def heroes_of(self, team: Team) -> list:
        return [hid for hid in self.hero_ids if self.team_of(hid) == team]

    # -- lifecycle -----------------------------------------------------------
    def reset(self, episode_seed: int) -> StepResult:
        cfg = self.config
        self.episode_seed = int(episode_seed)
        self.step_index = 0
        self.done = False
        self.winner = None
        self.units = {}
        self.heroes = {}
        self.creeps = {}
        self.monsters = {}
        self._creep_seq = 0
        self._monster_respawn = {}
        self._crit_streams = {}

        teams = [Team.A, Team.B] if cfg.mode.has_enemy_heroes else [Team.A]
        hid = 0
        for team in (Team.A, Team.B):
            if team not in teams:
                hid += cfg.mode.heroes_per_team
                continue
            for slot, (x, y) in enumerate(cfg.spawn_cells(int(team))):
                arch = ARCHETYPES[cfg.hero_archetypes_per_team[slot]]
                base = UnitState(hid, Kind.HERO, team, x, y,
                                 arch.max_hp, arch.max_hp, arch.attack)
                hero = HeroState(base=base, archetype=arch, mana=arch.max_mana,
                                 spawn_x=x, spawn_y=y)
                self.units[hid] = base
                self.heroes[hid] = hero
                hid += 1

        for team in (Team.A, Team.B):
            tx = cfg.turret_x[int(team)]
            cx = cfg.crystal_x[int(team)]
            t = UnitState(TURRET_ID[team], Kind.TURRET, team, tx, cfg.lane_row,
                          TURRET_HP, TURRET_HP, TURRET_ATTACK)
            c = UnitState(CRYSTAL_ID[team], Kind.CRYSTAL, team, cx, cfg.lane_row,
                          CRYSTAL_HP, CRYSTAL_HP, 0)
            self.units[t.unit_id] = t
            self.units[c.unit_id] = c

        for k, (x, y) in enumerate(cfg.monster_cells()):
            m = UnitState(MONSTER_ID_BASE + k, Kind.MONSTER, Team.NEUTRAL, x, y,
                          MONSTER_HP, MONSTER_HP, 0)
            self.units[m.unit_id] = m
            self.monsters[m.unit_id] = m

        zero_items = {name: 0.0 for name in R.item_names(cfg.mode)}
        reward_map = R.assemble(cfg, {h: dict(zero_items) for h in self.hero_ids},
                                {h: int(self.team_of(h)) for h in self.hero_ids})
        self._refresh_perception()
        self._reset_done = True
        return StepResult(self._observations(), dict(self._masks), reward_map,
                          False, self._info())

    def _crit_roll(self, unit_id: int) -> bool:
        s = self._crit_streams.get(unit_id)
        if s is None:
            s = rng.Stream(self.config.seed, self.episode_seed, unit_id, 0xC217)
            self._crit_streams[unit_id] = s
        return s.uniform() < self.config.crit_chance

    # -- main transition ------------------------------------------------------
    def step(self, joint_actions: dict) -> StepResult:
        if not self._reset_done:
            raise RuntimeError("step() before reset()")
        if self.done:
            raise RuntimeError("step() on a finished episode")
        cfg = self.config
        for hid in self.hero_ids:
            act = joint_actions.get(hid)
            if act is None:
                raise IllegalActionError(hid, ["missing action"])
            if not self._masks[hid].admits(act):
                raise IllegalActionError(hid, self._masks[hid].violations(act))

        self.step_index += 1
        self._bookkeeping()
        snap = self._snapshot()
        events = _TickEvents(self.hero_ids)

        heals, damages, moves = [], [], []
        for hid in self.hero_ids:
            hero = self.heroes[hid]
            act = joint_actions[hid]
            hero.last_button = act.button
            if not hero.alive:
                continue
            self._declare(hero, act, heals, damages)
            if act.button == BUTTON_MOVE:
                moves.append((hero, self._move_delta(act)))

        for hero, (dx, dy) in moves:
            hero.base.x = min(max(hero.base.x + dx, 0), cfg.grid_width - 1)
            hero.base.y = min(max(hero.base.y + dy, 0), cfg.grid_height - 1)

        self._creep_phase(damages)
        self._turret_phase(damages)
        self._resolve(heals, damages, events)
        self._ambient()

        reward_map = self._compute_rewards(snap, events)
        if self.step_index >= cfg.max_steps:
            self.done = True
        for cid in [c for c, u in self.creeps.items() if not u.alive]:
            del self.creeps[cid]
            del self.units[cid]
        self._refresh_perception()
        return StepResult(self._observations(), dict(self._masks), reward_map,
                          self.done, self._info())

    # -- tick phases ----------------------------------------------------------
    def _bookkeeping(self):
        cfg = self.config
        for hero in self.heroes.values():
            if hero.respawn_timer > 0:
                hero.respawn_timer -= 1
                if hero.respawn_timer == 0:
                    hero.base.hp = hero.base.max_hp
                    hero.mana = hero.archetype.max_mana
                    hero.base.x, hero.base.y = hero.spawn_x, hero.spawn_y
            if hero.skill_cooldown > 0:
                hero.skill_cooldown -= 1
        for mid, timer in list(self._monster_respawn.items()):
            if timer <= 1:
                self.monsters[mid].hp = self.monsters[mid].max_hp
                del self._monster_respawn[mid]
            else:
                self._monster_respawn[mid] = timer - 1
        if (self.step_index - 1) % CREEP_WAVE_PERIOD == 0:
            for team in (Team.A, Team.B):
                alive = sum(1 for c in self.creeps.values()
                            if c.alive and c.team == team)
                n = min(CREEP_WAVE_SIZE, CREEP_CAP_PER_TEAM - alive)
                x = 1 if team == Team.A else cfg.grid_width - 2
                for _ in range(n):
                    cid = CREEP_ID_BASE + self._creep_seq
                    self._creep_seq += 1
                    c = UnitState(cid, Kind.CREEP, team, x, cfg.lane_row,
                                  CREEP_HP, CREEP_HP, CREEP_ATTACK)
                    self.units[cid] = c
                    self.creeps[cid] = c

    def _snapshot(self) -> dict:
        snap = {"hp": {}, "mana": {}, "gold": {}, "exp": {}, "structures": {}}
        for hid, hero in self.heroes.items():
            snap["hp"][hid] = hero.hp_ratio() if hero.alive else 0.0
            snap["mana"][hid] = hero.mana_ratio()
            snap["gold"][hid] = hero.gold
            snap["exp"][hid] = hero.experience
        for team in (Team.A, Team.B):
            snap["structures"][int(team)] = self._structure_ratio(team)
        return snap

    def _structure_ratio(self, team: Team) -> float:
        t = self.units[TURRET_ID[team]]
        c = self.units[CRYSTAL_ID[team]]
        return (t.hp + c.hp) / (t.max_hp + c.max_hp)

    def _effective_attack(self, hero: HeroState) -> int:
        return (hero.base.attack + hero.experience // EXP_PER_ATTACK
                + hero.gold // GOLD_PER_ATTACK)

    def _move_delta(self, act: StructuredAction):
        spec = self.action_spec
        if self.config.mode.solo_family:
            dx = act.head_indices[spec.head_index("move_x")] - 1
            dy = act.head_indices[spec.head_index("move_y")] - 1
        else:
            dx, dy = MOVE9[act.head_indices[spec.head_index("move")]]
        return dx, dy

    def _declare(self, hero: HeroState, act: StructuredAction, heals, damages):
        spec = self.action_spec
        button = act.button
        if button == BUTTON_ATTACK:
            slot = act.head_indices[spec.head_index("target")]
            target_id = self._targets[hero.base.unit_id][slot]
            crit = self._crit_roll(hero.base.unit_id)
            amount = self._effective_attack(hero) * (CRIT_MULTIPLIER if crit else 1)
            damages.append((hero.base.unit_id, target_id, amount))
        elif button == BUTTON_SKILL:
            dx = act.head_indices[spec.head_index("skill_x")] - 1
            dy = act.head_indices[spec.head_index("skill_y")] - 1
            cx = min(max(hero.base.x + SKILL_OFFSET_SCALE * dx, 0),
                     self.config.grid_width - 1)
            cy = min(max(hero.base.y + SKILL_OFFSET_SCALE * dy, 0),
                     self.config.grid_height - 1)
            hero.mana -= SKILL_COST
            hero.skill_cooldown = SKILL_COOLDOWN
            # skills strike heroes, creeps and monsters in the zone, never structures
            for u in self._units_sorted():
                if u.kind in (Kind.TURRET, Kind.CRYSTAL) or not u.alive:
                    continue
                if u.team == hero.base.team:
                    continue
                if max(abs(u.x - cx), abs(u.y - cy)) <= SKILL_AOE_RADIUS:
                    damages.append((hero.base.unit_id, u.unit_id,
                                    hero.archetype.skill_damage))
        elif button == BUTTON_HEAL:
            hero.mana -= HEAL_COST
            heals.append(hero)

    def _units_sorted(self):
        return [self.units[uid] for uid in sorted(self.units)]

    def _creep_phase(self, damages):
        # decide on a frozen snapshot, then move, so neither team's creeps
        # see the other side's same-tick movement
        cfg = self.config
        movers = []
        for cid in sorted(self.creeps):
            creep = self.creeps[cid]
            if not creep.alive:
                continue
            enemy = Team.B if creep.team == Team.A else Team.A
            target = self._pick_target(creep, enemy, CREEP_RANGE,
                                       allow_structures=True)
            if target is not None:
                damages.append((cid, target.unit_id, creep.attack))
            else:
                movers.append(creep)
        for creep in movers:
            step = 1 if creep.team == Team.A else -1
            creep.x = min(max(creep.x + step, 0), cfg.grid_width - 1)

    def _turret_phase(self, damages):
        for team in (Team.A, Team.B):
            turret = self.units[TURRET_ID[team]]
            if not turret.alive:
                continue
            enemy = Team.B if team == Team.A else Team.A
            target = self._pick_target(turret, enemy, TURRET_RANGE,
                                       allow_structures=False)
            if target is not None:
                damages.append((turret.unit_id, target.unit_id, turret.attack))

    def _pick_target(self, unit: UnitState, enemy: Team, reach: int,
                     allow_structures: bool):
        """Creep/turret aggro: creeps first, then heroes, then structures."""
        best, best_key = None, None
        enemy_turret_alive = self.units[TURRET_ID[enemy]].alive
        for u in self._units_sorted():
            if not u.alive or u.team != enemy:
                continue
            if u.kind == Kind.CREEP:
                prio = 0
            elif u.kind == Kind.HERO:
                prio = 1
            elif allow_structures and u.kind == Kind.TURRET:
                prio = 2
            elif (allow_structures and u.kind == Kind.CRYSTAL
                  and not enemy_turret_alive):
                prio = 3
            else:
                continue
            d = unit.dist(u)
            if d > reach:
                continue
            key = (prio, d, u.unit_id)
            if best_key is None or key < best_key:
                best, best_key = u, key
        return best

    def _resolve(self, heals, damages, events):
        for hero in heals:
            hero.base.hp = min(hero.base.hp + HEAL_AMOUNT, hero.base.max_hp)
        for source_id, target_id, amount in damages:
            target = self.units.get(target_id)
            if target is None or not target.alive:
                continue
            applied = min(amount, target.hp)
            target.hp -= applied
            if target.kind == Kind.MONSTER:
                src = self.units[source_id]
                if src.kind == Kind.HERO:
                    events.monster_damage[source_id] += applied
            if target.hp == 0:
                self._on_death(target, source_id, events)

    def _on_death(self, unit: UnitState, killer_id: int, events):
        killer = self.units[killer_id]
        killer_hero = self.heroes.get(killer_id) if killer.kind == Kind.HERO else None
        if unit.kind == Kind.HERO:
            hero = self.heroes[unit.unit_id]
            hero.respawn_timer = HERO_RESPAWN_DELAY
            events.deaths.add(unit.unit_id)
            if killer_hero is not None and killer.team != unit.team:
                events.kills[killer_id] += 1
                killer_hero.gold += GOLD_HERO_KILL
                killer_hero.experience += EXP_HERO_KILL
        elif unit.kind == Kind.CREEP:
            if killer_hero is not None and killer.team != unit.team:
                events.last_hits[killer_id] += 1
                killer_hero.gold += GOLD_CREEP
                killer_hero.experience += EXP_CREEP
        elif unit.kind == Kind.MONSTER:
            if killer_hero is not None:
                killer_hero.gold += GOLD_MONSTER
                killer_hero.experience += EXP_MONSTER
            self._monster_respawn[unit.unit_id] = MONSTER_RESPAWN_DELAY
        elif unit.kind == Kind.TURRET:
            if killer_hero is not None and killer.team != unit.team:
                killer_hero.gold += GOLD_TURRET
                killer_hero.experience += EXP_TURRET
        elif unit.kind == Kind.CRYSTAL:
            if self.config.mode is Mode.SUB_GAIN_GOLD:
                return   # noncompetitive farming task: only the step budget ends it
            attacker_team = killer.team
            if self.winner is None:
                self.winner = attacker_team
                self.done = True
            elif self.winner != attacker_team:
                self.winner = None   # both crystals fell this tick: draw

    def _ambient(self):
        for hero in self.heroes.values():
            if hero.alive:
                hero.experience += AMBIENT_EXP
                hero.mana = min(hero.mana + MANA_REGEN, hero.archetype.max_mana)

    def _compute_rewards(self, snap, events) -> dict:
        cfg = self.config
        items_by_hero = {}
        post_struct = {int(t): self._structure_ratio(t) for t in (Team.A, Team.B)}
        for hid, hero in self.heroes.items():
            team = int(hero.base.team)
            enemy = 1 - team
            # the snapshot is taken after respawns, so a respawn tick yields
            # zero hp/mana deltas and only combat changes are rewarded
            hp_now = hero.hp_ratio() if hero.alive else 0.0
            d_hp = hp_now - snap["hp"][hid]
            d_mana = hero.mana_ratio() - snap["mana"][hid]
            d_gold = hero.gold - snap["gold"][hid]
            d_exp = hero.experience - snap["exp"][hid]
            push = -(post_struct[enemy] - snap["structures"][enemy])
            died = 1.0 if hid in events.deaths else 0.0
            killed = 1.0 if events.kills[hid] > 0 else 0.0
            lhit = 1.0 if events.last_hits[hid] > 0 else 0.0
            win = 0.0
            if self.done and self.winner is not None:
                win = 1.0 if self.winner == hero.base.team else -1.0
            if cfg.mode.solo_family:
                items = {
                    "hp_point": d_hp,
                    "tower_hp_point": push,
                    "money": d_gold * R.GOLD_SCALE,
                    "ep_rate": d_mana,
                    "death": -R.DEATH_MAGNITUDE * died,
                    "kill": R.KILL_MAGNITUDE * killed,
                    "exp": d_exp * R.EXP_SCALE,
                    "last_hit": R.LAST_HIT_MAGNITUDE * lhit,
                    "win_lose": R.WIN_MAGNITUDE * win,
                }
            else:
                d_hp4 = hp_now ** 0.25 - snap["hp"][hid] ** 0.25
                items = {
                    "hp_rate_sqrt_sqrt": d_hp4,
                    "money": d_gold * R.GOLD_SCALE,
                    "exp": d_exp * R.EXP_SCALE,
                    "tower": push,
                    "killCnt": R.KILL_MAGNITUDE * killed,
                    "deadCnt": -R.DEATH_MAGNITUDE * died,
                    "atk_monster": events.monster_damage[hid] * R.MONSTER_DMG_SCALE,
                    "win_crystal": R.WIN_MAGNITUDE * win,
                }
            items_by_hero[hid] = items
        return R.assemble(cfg, items_by_hero,
                          {h: int(self.team_of(h)) for h in self.hero_ids})

    # -- perception, masks, observations --------------------------------------
    def _refresh_perception(self):
        self._perception = {}
        self._targets = {}
        self._masks = {}
        for hid in self.hero_ids:
            p = self._perceive(hid)
            self._perception[hid] = p
            self._targets[hid] = self._target_table(hid, p)
            self._masks[hid] = self._build_masks(hid, p)

    def _perceive(self, hero_id: int) -> HeroPerception:
        cfg = self.config
        hero = self.heroes[hero_id]
        team = hero.base.team
        enemy = Team.B if team == Team.A else Team.A
        vis = hero.vision_radius

        def visible(u: UnitState) -> bool:
            return hero.base.dist(u) <= vis

        allies = [self.heroes[h] for h in self.heroes_of(team) if h != hero_id]
        enemy_heroes = [(self.heroes[h], visible(self.heroes[h].base))
                        for h in self.heroes_of(enemy)]
        own_creeps = sorted((c for c in self.creeps.values()
                             if c.alive and c.team == team),
                            key=lambda u: (hero.base.dist(u), u.unit_id))
        enemy_creeps = sorted((c for c in self.creeps.values()
                               if c.alive and c.team == enemy and visible(c)),
                              key=lambda u: (hero.base.dist(u), u.unit_id))
        monsters = sorted((m for m in self.monsters.values()
                           if m.alive and visible(m)),
                          key=lambda u: (hero.base.dist(u), u.unit_id))
        return HeroPerception(
            hero=hero, allies=allies, enemy_heroes=enemy_heroes,
            own_creeps=own_creeps, enemy_creeps=enemy_creeps, monsters=monsters,
            own_turret=self.units[TURRET_ID[team]],
            own_crystal=self.units[CRYSTAL_ID[team]],
            enemy_turret=self.units[TURRET_ID[enemy]],
            enemy_crystal=self.units[CRYSTAL_ID[enemy]],
            own_creep_count=sum(1 for c in self.creeps.values()
                                if c.alive and c.team == team),
            team_gold=sum(self.heroes[h].gold for h in self.heroes_of(team)),
            monsters_alive=len(monsters))

    def _target_table(self, hero_id: int, p: HeroPerception) -> list:
        """Slot -> unit id (or None), consistent with the observation slots."""
        creep0 = p.enemy_creeps[0].unit_id if len(p.enemy_creeps) > 0 else None
        creep1 = p.enemy_creeps[1].unit_id if len(p.enemy_creeps) > 1 else None
        if self.config.mode.solo_family:
            eh = p.enemy_heroes[0][0].base.unit_id if p.enemy_heroes else None
            return [eh, creep0, creep1,
                    p.enemy_turret.unit_id, p.enemy_crystal.unit_id]
        slots = [h.base.unit_id for h, _ in p.enemy_heroes]
        while len(slots) < 3:
            slots.append(None)
        mon = p.monsters[0].unit_id if p.monsters else None
        return slots + [creep0, creep1,
                        p.enemy_turret.unit_id, p.enemy_crystal.unit_id, mon]

    def _build_masks(self, hero_id: int, p: HeroPerception) -> ActionMasks:
        spec = self.action_spec
        hero = p.hero
        legal = [np.zeros(s, dtype=bool) for s in spec.head_sizes]
        if not hero.alive:
            legal[0][BUTTON_NOOP] = True
            for h in range(1, spec.n_heads):
                legal[h][0] = True
            return ActionMasks(legal, self._sub_matrix)

        cfg = self.config
        x, y = hero.base.x, hero.base.y
        # movement within the grid
        if cfg.mode.solo_family:
            mx = legal[spec.head_index("move_x")]
            my = legal[spec.head_index("move_y")]
            for i, d in enumerate((-1, 0, 1)):
                mx[i] = 0 <= x + d < cfg.grid_width
                my[i] = 0 <= y + d < cfg.grid_height
        else:
            mv = legal[spec.head_index("move")]
            for i, (dx, dy) in enumerate(MOVE9):
                mv[i] = (0 <= x + dx < cfg.grid_width
                         and 0 <= y + dy < cfg.grid_height)
        # skill offsets whose center stays on the grid
        sx = legal[spec.head_index("skill_x")]
        sy = legal[spec.head_index("skill_y")]
        for i, d in enumerate((-1, 0, 1)):
            sx[i] = 0 <= x + SKILL_OFFSET_SCALE * d < cfg.grid_width
            sy[i] = 0 <= y + SKILL_OFFSET_SCALE * d < cfg.grid_height
        # targets: assigned, alive, visible, in attack range; crystal unshielded
        tmask = legal[spec.head_index("target")]
        reach = hero.archetype.attack_range
        for slot, uid in enumerate(self._targets[hero_id]):
            if uid is None:
                continue
            u = self.units[uid]
            if not u.alive or hero.base.dist(u) > reach:
                continue
            if u.kind not in (Kind.TURRET, Kind.CRYSTAL) and hero.base.dist(u) > hero.vision_radius:
                continue
            if u.kind == Kind.CRYSTAL and self.units[TURRET_ID[u.team]].alive:
                continue
            tmask[slot] = True

        legal[0][BUTTON_NOOP] = True
        legal[0][BUTTON_MOVE] = True
        legal[0][BUTTON_ATTACK] = bool(tmask.any())
        legal[0][BUTTON_SKILL] = (hero.skill_cooldown == 0
                                  and hero.mana >= SKILL_COST)
        legal[0][BUTTON_HEAL] = hero.mana >= HEAL_COST
        if not tmask.any():
            tmask[0] = True   # placeholder; the attack button is illegal
        return ActionMasks(legal, self._sub_matrix)

    def _observations(self) -> dict:
        return {hid: build_observation(self.config, self._perception[hid],
                                       self.step_index)
                for hid in self.hero_ids}

    def legal_masks(self, hero_id: int) -> ActionMasks:
        return self._masks[hero_id]

    def target_units(self, hero_id: int) -> list:
        return list(self._targets[hero_id])

    def perception(self, hero_id: int) -> HeroPerception:
        return self._perception[hero_id]

    def hero_view(self, hero_id: int) -> HeroView:
        hero = self.heroes[hero_id]
        p = self._perception[hero_id]
        masks = self._masks[hero_id]
        tmask = masks.legal[self.action_spec.head_index("target")]
        targets = []
        for slot, uid in enumerate(self._targets[hero_id]):
            if uid is None:
                targets.append(None)
                continue
            u = self.units[uid]
            targets.append(TargetInfo(slot=slot, unit_id=uid, kind=u.kind,
                                      hp=u.hp, max_hp=u.max_hp,
                                      dist=hero.base.dist(u), x=u.x, y=u.y,
                                      legal=bool(tmask[slot])))
        et = p.enemy_turret
        near = sum(1 for c in p.own_creeps
                   if max(abs(c.x - et.x), abs(c.y - et.y)) <= TURRET_RANGE + 2)
        return HeroView(
            hero_id=hero_id, team=int(hero.base.team),
            x=hero.base.x, y=hero.base.y, alive=hero.alive,
            hp_ratio=hero.hp_ratio(), mana=hero.mana,
            skill_cooldown=hero.skill_cooldown,
            attack_range=hero.archetype.attack_range,
            effective_attack=self._effective_attack(hero),
            skill_damage=hero.archetype.skill_damage,
            masks=masks, targets=targets,
            own_spawn=(hero.spawn_x, hero.spawn_y),
            own_turret_pos=(p.own_turret.x, p.own_turret.y),
            own_turret_alive=p.own_turret.alive,
            enemy_crystal_pos=(p.enemy_crystal.x, p.enemy_crystal.y),
            enemy_turret_pos=(et.x, et.y),
            enemy_turret_alive=et.alive,
            enemy_turret_range=TURRET_RANGE,
            own_creeps_near_enemy_turret=near,
            grid_width=self.config.grid_width,
            grid_height=self.config.grid_height)

    def _info(self) -> dict:
        return {
            "winner": self.winner,
            "step": self.step_index,
            "hero_gold": {hid: self.heroes[hid].gold for hid in self.hero_ids},
            "turret_hp": {int(t): self.units[TURRET_ID[t]].hp
                          for t in (Team.A, Team.B)},
            "crystal_hp": {int(t): self.units[CRYSTAL_ID[t]].hp
                           for t in (Team.A, Team.B)},
        }


class _TickEvents:
    __slots__ = ("kills", "deaths", "last_hits", "monster_damage")

    def __init__(self, hero_ids):
        self.kills = {h: 0 for h in hero_ids}
        self.deaths = set()
        self.last_hits = {h: 0 for h in hero_ids}
        self.monster_damage = {h: 0.0 for h in hero_ids}
