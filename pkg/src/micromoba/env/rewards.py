"""Per-hero multi-item rewards, group weighting and the zero-sum transform.

Each tick produces a vector of named reward items per hero. Items are grouped
into five categories (farming, KDA, damage, pushing, win/lose); the weighted
scalar is ``sum_g w_g * sum(items in g)`` and the zero-sum scalar subtracts
the enemy team's mean weighted reward. Sparse items are clamped to one event
per tick so each stays in {0, +-1} times its magnitude constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import EnvConfig, Mode

GOLD_SCALE = 0.01        # money item per unit of gold gained
EXP_SCALE = 0.01         # exp item per experience point gained
MONSTER_DMG_SCALE = 0.01  # atk_monster item per point of damage to monsters
LAST_HIT_MAGNITUDE = 0.5
KILL_MAGNITUDE = 1.0
DEATH_MAGNITUDE = 1.0
WIN_MAGNITUDE = 1.0

# Item names per mode family and their grouping into the five weighted
# categories: (farming, kda, damage, pushing, win_lose).
SOLO_ITEMS = ("hp_point", "tower_hp_point", "money", "ep_rate",
              "death", "kill", "exp", "last_hit", "win_lose")
SOLO_GROUPS = {
    "farming": ("money", "exp", "last_hit"),
    "kda": ("kill", "death"),
    "damage": ("hp_point", "ep_rate"),
    "pushing": ("tower_hp_point",),
    "win_lose": ("win_lose",),
}

TRIO_ITEMS = ("hp_rate_sqrt_sqrt", "money", "exp", "tower",
              "killCnt", "deadCnt", "atk_monster", "win_crystal")
TRIO_GROUPS = {
    "farming": ("money", "exp", "atk_monster"),
    "kda": ("killCnt", "deadCnt"),
    "damage": ("hp_rate_sqrt_sqrt",),
    "pushing": ("tower",),
    "win_lose": ("win_crystal",),
}

GROUP_ORDER = ("farming", "kda", "damage", "pushing", "win_lose")

# Documented per-tick bound on the absolute value of each dense item.
DENSE_CAPS = {
    "hp_point": 1.0, "ep_rate": 1.0, "tower_hp_point": 1.0,
    "money": 2.0, "exp": 1.0,
    "hp_rate_sqrt_sqrt": 1.0, "tower": 1.0, "atk_monster": 2.0,
}


def item_names(mode: Mode) -> tuple:
    return SOLO_ITEMS if mode.solo_family else TRIO_ITEMS


def item_groups(mode: Mode) -> dict:
    return SOLO_GROUPS if mode.solo_family else TRIO_GROUPS


@dataclass
class RewardVector:
    items: dict
    weighted: float
    zero_sum: float


def weighted_sum(items: dict, weights, mode: Mode) -> float:
    groups = item_groups(mode)
    total = 0.0
    for w, gname in zip(weights, GROUP_ORDER):
        total += w * sum(items[name] for name in groups[gname])
    return total


def zero_sum_transform(weighted_by_hero: dict, team_of: dict) -> dict:
    """weighted reward minus the mean weighted reward of the enemy team.

    Teams with no heroes (sub-task modes) contribute an enemy mean of 0.
    """
    team_vals = {}
    for hid, w in weighted_by_hero.items():
        team_vals.setdefault(team_of[hid], []).append(w)
    means = {t: sum(v) / len(v) for t, v in team_vals.items()}
    out = {}
    for hid, w in weighted_by_hero.items():
        enemy = 1 - team_of[hid]
        out[hid] = w - means.get(enemy, 0.0)
    return out


def assemble(config: EnvConfig, items_by_hero: dict, team_of: dict) -> dict:
    """Build the per-hero RewardVector map for one tick (float64 throughout)."""
    weighted = {hid: weighted_sum(items, config.reward_weights, config.mode)
                for hid, items in items_by_hero.items()}
    zsum = zero_sum_transform(weighted, team_of)
    return {hid: RewardVector(items=items_by_hero[hid], weighted=weighted[hid],
                              zero_sum=zsum[hid])
            for hid in items_by_hero}
