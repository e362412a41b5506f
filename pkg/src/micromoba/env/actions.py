"""Structured action layout: heads, per-head legality, sub-action activation.

An action is one index per head. The button head decides what the hero does;
the sub-action table says which other heads are actually executed for a given
button (e.g. the target head is ignored while moving).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BUTTON_NOOP = 0
BUTTON_MOVE = 1
BUTTON_ATTACK = 2
BUTTON_SKILL = 3
BUTTON_HEAL = 4
BUTTON_NAMES = ("noop", "move", "attack", "skill", "heal")

# Trio move head: index -> (dx, dy), row-major over {-1,0,1}^2; index 4 = stay.
MOVE9 = tuple((i % 3 - 1, i // 3 - 1) for i in range(9))


@dataclass(frozen=True)
class ActionSpec:
    head_names: tuple
    head_sizes: tuple
    sub_action_table: tuple   # per button: tuple of bool per head

    def __post_init__(self):
        if len(self.head_names) != len(self.head_sizes):
            raise ValueError("head_names and head_sizes lengths differ")
        for row in self.sub_action_table:
            if len(row) != len(self.head_names):
                raise ValueError("sub_action_table row width mismatch")
            if not row[0]:
                raise ValueError("button head must be active for every button")

    @property
    def n_heads(self) -> int:
        return len(self.head_sizes)

    @property
    def n_buttons(self) -> int:
        return self.head_sizes[0]

    def head_index(self, name: str) -> int:
        return self.head_names.index(name)

    def active_heads(self, button: int) -> tuple:
        return self.sub_action_table[button]

    def sub_action_matrix(self) -> np.ndarray:
        return np.array(self.sub_action_table, dtype=bool)

    def to_json_dict(self) -> dict:
        return {"head_names": list(self.head_names),
                "head_sizes": list(self.head_sizes),
                "sub_action_table": [list(r) for r in self.sub_action_table]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "ActionSpec":
        return cls(tuple(d["head_names"]), tuple(d["head_sizes"]),
                   tuple(tuple(bool(x) for x in r) for r in d["sub_action_table"]))


def _table(head_names, rows):
    return tuple(tuple(h in rows[b] for h in head_names) for b in BUTTON_NAMES)


SOLO_SPEC = ActionSpec(
    head_names=("button", "move_x", "move_y", "skill_x", "skill_y", "target"),
    head_sizes=(5, 3, 3, 3, 3, 5),
    sub_action_table=_table(
        ("button", "move_x", "move_y", "skill_x", "skill_y", "target"),
        {"noop": {"button"},
         "move": {"button", "move_x", "move_y"},
         "attack": {"button", "target"},
         "skill": {"button", "skill_x", "skill_y"},
         "heal": {"button"}}),
)

TRIO_SPEC = ActionSpec(
    head_names=("button", "move", "skill_x", "skill_y", "target"),
    head_sizes=(5, 9, 3, 3, 8),
    sub_action_table=_table(
        ("button", "move", "skill_x", "skill_y", "target"),
        {"noop": {"button"},
         "move": {"button", "move"},
         "attack": {"button", "target"},
         "skill": {"button", "skill_x", "skill_y"},
         "heal": {"button"}}),
)

# Solo target slots; Trio slots 0-2 are the enemy hero team slots.
SOLO_TARGET_SLOTS = ("enemy_hero", "enemy_creep_0", "enemy_creep_1",
                     "enemy_turret", "enemy_crystal")
TRIO_TARGET_SLOTS = ("enemy_hero_0", "enemy_hero_1", "enemy_hero_2",
                     "enemy_creep_0", "enemy_creep_1",
                     "enemy_turret", "enemy_crystal", "monster_0")


def spec_for(solo_family: bool) -> ActionSpec:
    return SOLO_SPEC if solo_family else TRIO_SPEC


@dataclass(frozen=True)
class StructuredAction:
    head_indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "head_indices", tuple(int(i) for i in self.head_indices))

    @staticmethod
    def noop(spec: ActionSpec) -> "StructuredAction":
        return StructuredAction((BUTTON_NOOP,) + (0,) * (spec.n_heads - 1))

    @property
    def button(self) -> int:
        return self.head_indices[0]


class ActionMasks:
    """Per-head legality vectors plus the (static) sub-action table."""

    __slots__ = ("legal", "sub_action_active")

    def __init__(self, legal, sub_action_active):
        self.legal = legal                       # list of bool ndarrays, one per head
        self.sub_action_active = sub_action_active   # (n_buttons, n_heads) bool ndarray
        for h, mask in enumerate(legal):
            if not mask.any():
                raise ValueError(f"head {h} has no legal action")

    def admits(self, action: StructuredAction) -> bool:
        return all(0 <= idx < len(m) and bool(m[idx])
                   for idx, m in zip(action.head_indices, self.legal))

    def first_legal(self, button: int = BUTTON_NOOP) -> StructuredAction:
        """Lowest legal index per head, with the requested (legal) button."""
        idx = [int(np.flatnonzero(m)[0]) for m in self.legal]
        if self.legal[0][button]:
            idx[0] = button
        return StructuredAction(tuple(idx))

    def violations(self, action: StructuredAction):
        """Per-head diagnostics for an illegal action."""
        out = []
        for h, (idx, m) in enumerate(zip(action.head_indices, self.legal)):
            if not (0 <= idx < len(m)):
                out.append(f"head {h}: index {idx} out of range [0,{len(m)})")
            elif not m[idx]:
                legal_ix = np.flatnonzero(m).tolist()
                out.append(f"head {h}: index {idx} illegal (legal: {legal_ix})")
        return out


class IllegalActionError(RuntimeError):
    """An action violated its legality mask; signals a policy/mask mismatch."""

    def __init__(self, hero_id: int, diagnostics):
        self.hero_id = hero_id
        self.diagnostics = list(diagnostics)
        super().__init__(f"illegal action for hero {hero_id}: " + "; ".join(self.diagnostics))
