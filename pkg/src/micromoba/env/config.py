"""Environment configuration, game modes and the balance-constant table.

Every tunable number of the simulation lives in this module (and is mirrored
in ``docs/env.md``) so that balance changes are one-file diffs.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from enum import Enum


class ConfigError(ValueError):
    """Invalid configuration value; ``field`` names the offending entry."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"config field '{field_name}': {message}")


class Mode(str, Enum):
    SOLO = "solo"
    TRIO = "trio"
    SUB_DESTROY_TURRET = "sub_destroy_turret"
    SUB_GAIN_GOLD = "sub_gain_gold"

    @property
    def heroes_per_team(self) -> int:
        return 1 if self in (Mode.SOLO, Mode.SUB_DESTROY_TURRET) else 3

    @property
    def has_enemy_heroes(self) -> bool:
        return self in (Mode.SOLO, Mode.TRIO)

    @property
    def has_monsters(self) -> bool:
        return self in (Mode.TRIO, Mode.SUB_GAIN_GOLD)

    @property
    def solo_family(self) -> bool:
        """Solo-family modes use the 6-head action layout and 64-dim obs."""
        return self in (Mode.SOLO, Mode.SUB_DESTROY_TURRET)

    @property
    def default_max_steps(self) -> int:
        return 200 if self is Mode.SUB_GAIN_GOLD else 400


@dataclass(frozen=True)
class Archetype:
    name: str
    max_hp: int
    attack: int
    attack_range: int
    max_mana: int
    skill_damage: int
    vision_radius: int


ARCHETYPES = {
    "bruiser": Archetype("bruiser", max_hp=130, attack=13, attack_range=1,
                         max_mana=100, skill_damage=28, vision_radius=4),
    "mage": Archetype("mage", max_hp=100, attack=10, attack_range=2,
                      max_mana=120, skill_damage=36, vision_radius=4),
    "marksman": Archetype("marksman", max_hp=110, attack=14, attack_range=3,
                          max_mana=90, skill_damage=24, vision_radius=4),
}

ARCHETYPE_IDS = {name: i for i, name in enumerate(sorted(ARCHETYPES))}

# Simulation constants (see docs/env.md for the full annotated table).
CREEP_HP = 36
CREEP_ATTACK = 6
CREEP_RANGE = 1
CREEP_WAVE_PERIOD = 20
CREEP_WAVE_SIZE = 3
CREEP_CAP_PER_TEAM = 9

TURRET_HP = 150
TURRET_ATTACK = 15
TURRET_RANGE = 2
CRYSTAL_HP = 150

MONSTER_HP = 60
MONSTER_RESPAWN_DELAY = 25

HERO_RESPAWN_DELAY = 15
SKILL_COST = 30
SKILL_COOLDOWN = 10
SKILL_OFFSET_SCALE = 2   # cells per offset unit
SKILL_AOE_RADIUS = 1     # Chebyshev radius around the skill center
HEAL_COST = 25
HEAL_AMOUNT = 20
MANA_REGEN = 2
CRIT_MULTIPLIER = 2

AMBIENT_EXP = 1
GOLD_CREEP = 20
GOLD_MONSTER = 40
GOLD_HERO_KILL = 30
GOLD_TURRET = 50
EXP_CREEP = 8
EXP_MONSTER = 12
EXP_HERO_KILL = 20
EXP_TURRET = 30

# Farm scaling: effective attack = base + experience//EXP_PER_ATTACK + gold//GOLD_PER_ATTACK
EXP_PER_ATTACK = 50
GOLD_PER_ATTACK = 60

DEFAULT_SOLO_ARCHETYPES = ("bruiser",)
DEFAULT_TRIO_ARCHETYPES = ("bruiser", "mage", "marksman")


@dataclass(frozen=True)
class EnvConfig:
    mode: Mode = Mode.SOLO
    grid_width: int = 15
    grid_height: int = 7
    max_steps: int = 0          # 0 -> mode default (400; 200 for SUB_GAIN_GOLD)
    reward_weights: tuple = (1.0, 1.0, 1.0, 1.0, 1.0)
    crit_chance: float = 0.1
    hero_archetypes_per_team: tuple = ()   # () -> mode default
    seed: int = 0

    def __post_init__(self):
        mode = self.mode if isinstance(self.mode, Mode) else Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        if self.max_steps == 0:
            object.__setattr__(self, "max_steps", mode.default_max_steps)
        if not self.hero_archetypes_per_team:
            default = (DEFAULT_SOLO_ARCHETYPES if mode.heroes_per_team == 1
                       else DEFAULT_TRIO_ARCHETYPES)
            object.__setattr__(self, "hero_archetypes_per_team", default)
        object.__setattr__(self, "hero_archetypes_per_team",
                           tuple(self.hero_archetypes_per_team))
        object.__setattr__(self, "reward_weights", tuple(float(w) for w in self.reward_weights))
        self.validate()

    def validate(self):
        if self.grid_width < 5:
            raise ConfigError("grid_width", f"must be >= 5, got {self.grid_width}")
        if self.grid_height < 3:
            raise ConfigError("grid_height", f"must be >= 3, got {self.grid_height}")
        if self.max_steps < 1:
            raise ConfigError("max_steps", f"must be >= 1, got {self.max_steps}")
        if len(self.reward_weights) != 5:
            raise ConfigError("reward_weights", "expected exactly 5 weights")
        if any(w < 0 for w in self.reward_weights):
            raise ConfigError("reward_weights", "weights must be non-negative")
        if not (0.0 <= self.crit_chance <= 1.0):
            raise ConfigError("crit_chance", f"must lie in [0, 1], got {self.crit_chance}")
        want = self.mode.heroes_per_team
        if len(self.hero_archetypes_per_team) != want:
            raise ConfigError("hero_archetypes_per_team",
                              f"{self.mode.value} requires exactly {want} archetypes per team, "
                              f"got {len(self.hero_archetypes_per_team)}")
        for a in self.hero_archetypes_per_team:
            if a not in ARCHETYPES:
                raise ConfigError("hero_archetypes_per_team", f"unknown archetype '{a}'")
        if not (0 <= self.seed < 2 ** 64):
            raise ConfigError("seed", "must be an unsigned 64-bit integer")

    # Derived map geometry -------------------------------------------------
    @property
    def lane_row(self) -> int:
        return self.grid_height // 2

    @property
    def turret_x(self) -> tuple:
        off = max(1, min(3, self.grid_width // 4))
        return (off, self.grid_width - 1 - off)

    @property
    def crystal_x(self) -> tuple:
        return (0, self.grid_width - 1)

    def spawn_cells(self, team: int) -> list:
        """Hero spawn cells for a team, nearest-to-crystal lane cells."""
        x = 1 if team == 0 else self.grid_width - 2
        rows = [self.lane_row]
        if self.mode.heroes_per_team == 3:
            lo = max(0, self.lane_row - 1)
            hi = min(self.grid_height - 1, self.lane_row + 1)
            rows = [lo, self.lane_row, hi]
        return [(x, r) for r in rows]

    def monster_cells(self) -> list:
        if not self.mode.has_monsters:
            return []
        cx = self.grid_width // 2
        xs = [max(0, cx - 2), min(self.grid_width - 1, cx + 2)]
        return [(x, 0) for x in xs] + [(x, self.grid_height - 1) for x in xs]

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["mode"] = self.mode.value
        d["reward_weights"] = list(self.reward_weights)
        d["hero_archetypes_per_team"] = list(self.hero_archetypes_per_team)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "EnvConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(sorted(unknown)[0], "unknown configuration field")
        kwargs = dict(d)
        if "mode" in kwargs:
            try:
                kwargs["mode"] = Mode(kwargs["mode"])
            except ValueError:
                raise ConfigError("mode", f"unknown mode '{kwargs['mode']}'") from None
        for key in ("reward_weights", "hero_archetypes_per_team"):
            if key in kwargs and kwargs[key] is not None:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)
